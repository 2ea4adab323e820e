#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qml/enumeration.hpp"
#include "qml/report.hpp"

namespace qml {

struct SubrepWitness {
  SubspaceTuple subspaces;
  DimVector dim;
  long long theta_value = 0;
};

enum class Verdict { stable, semistable_not_stable, unstable, theta_nonzero };

std::string to_string(Verdict v);

struct StabilityVerdict {
  Verdict verdict = Verdict::stable;
  /// First violating subrepresentation in enumeration order: theta > 0 for
  /// unstable, theta == 0 for semistable_not_stable.
  std::optional<SubrepWitness> witness;

  bool semistable() const { return verdict == Verdict::stable || verdict == Verdict::semistable_not_stable; }
  bool stable() const { return verdict == Verdict::stable; }
};

/// Exhaustive test over all subrepresentations.
StabilityVerdict check_stability(const FpRep& m, const StabilityParam& theta, Budget& budget = Budget::unlimited());

/// Verdicts for every point of R(Q, alpha)(F_p), indexed like rep_at_index.
std::vector<StabilityVerdict> stability_table(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                              const PrimeField& field, Budget& budget, unsigned workers = 1);

/// Closed-form test for the m-subspace quiver with dimension vector
/// (1,...,1,n) and theta = (n a_1, ..., n a_m, -|a|): M is semistable iff
/// n |a|_I <= |a| dim span(v_i : i in I) for every nonempty I, and stable
/// iff the inequality is strict for every nonempty proper I. The witness is
/// the subrepresentation (e_I, span v_I).
StabilityVerdict subspace_quiver_criterion(const FpRep& m, const std::vector<long long>& weights);

/// theta = (n a_1, ..., n a_m, -|a|) for the m-subspace quiver.
StabilityParam subspace_quiver_theta(std::size_t n, const std::vector<long long>& weights);

/// The weights a with theta = (n a_1, ..., n a_m, -|a|) when (q, alpha, theta)
/// has the closed-form shape, nullopt otherwise.
std::optional<std::vector<long long>> subspace_quiver_weights(const Quiver& q, const DimVector& alpha,
                                                               const StabilityParam& theta);

/// On every theta-semistable point of R(Q, alpha): phi_M is onto and psi_M is injective.
CheckReport verify_resolution_maps(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                   const PrimeField& field, Budget& budget, unsigned workers = 1);

/// subspace_quiver_criterion against check_stability on every point.
CheckReport verify_subspace_criterion(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                      const PrimeField& field, Budget& budget, unsigned workers = 1);

}  // namespace qml
