#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qml/budget.hpp"
#include "qml/matrix.hpp"

namespace qml {

// Subspaces of F_p^d are stored as their canonical basis: the nonzero rows
// of the RREF of any spanning set, so equal subspaces are bit-identical.

FpMatrix canonical_subspace(const FpMatrix& spanning_rows);
FpMatrix zero_subspace(const PrimeField& field, std::size_t d);
FpMatrix whole_space(const PrimeField& field, std::size_t d);

FpMatrix subspace_sum(const FpMatrix& a, const FpMatrix& b);
std::size_t intersection_dim(const FpMatrix& a, const FpMatrix& b);
bool subspace_contains(const FpMatrix& big, const FpMatrix& small);

/// Image of the row-spanned subspace U under the column-acting map m.
FpMatrix image_of(const FpMatrix& m, const FpMatrix& u);
/// {v : m_k v in w_k for all k}, all maps sharing one source dimension.
FpMatrix common_preimage(const std::vector<FpMatrix>& maps, const std::vector<FpMatrix>& targets,
                         const PrimeField& field, std::size_t source_dim);
/// Canonical row basis of the column space of m.
FpMatrix column_space(const FpMatrix& m);
/// Canonical row basis of ker m (m acting on columns).
FpMatrix kernel_space(const FpMatrix& m);

/// Number of k-dimensional subspaces of F_p^d, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(unsigned p, std::size_t d, std::size_t k);

/// Visits every k-dimensional subspace of F_p^d in (pivot set, free entries)
/// odometer order. Each visit costs one budget step. Stops when fn returns false.
/// Returns false iff fn stopped the enumeration.
bool for_each_subspace(const PrimeField& field, std::size_t d, std::size_t k, Budget& budget,
                       const std::function<bool(const FpMatrix&)>& fn);

std::vector<FpMatrix> enumerate_subspaces(const PrimeField& field, std::size_t d, std::size_t k,
                                          Budget& budget = Budget::unlimited());

/// Every k-dimensional S with lower <= S <= upper.
bool for_each_subspace_between(const FpMatrix& lower, const FpMatrix& upper, std::size_t k, Budget& budget,
                               const std::function<bool(const FpMatrix&)>& fn);

}  // namespace qml
