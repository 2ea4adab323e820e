#pragma once

#include <cstdint>

#include "qml/enumeration.hpp"
#include "qml/report.hpp"

namespace qml {

/// On `pairs` random (M, N) with entries of dim M, dim N in [0, max_dim]:
/// dim Hom - dim Ext (projective route) equals the Euler form, and the
/// projective and injective routes give the same Ext.
CheckReport verify_euler_identity(QuiverPtr q, const PrimeField& field, std::size_t pairs, long long max_dim,
                                  std::uint64_t seed, unsigned workers = 1);

}  // namespace qml
