#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qml/grassmannian.hpp"

namespace qml {

/// (M, id) with the identity on Q0+ (resp. Q0-) and empty framing elsewhere.
FramedRep f_plus(const FpRep& m, const StabilityParam& theta);
FramedRep f_minus(const FpRep& m, const StabilityParam& theta);

/// ker phi_M in P+; throws NotSemistable unless M is theta-semistable.
SubspaceTuple gm_phi(const FpRep& m, const StabilityParam& theta, Budget& budget = Budget::unlimited());
/// im psi_M in I-; throws NotSemistable unless M is theta-semistable.
SubspaceTuple gm_psi(const FpRep& m, const StabilityParam& theta, Budget& budget = Budget::unlimited());

struct IsoResult {
  bool isomorphic = false;
  /// g with N = g . M.
  std::optional<GroupElement<PrimeField>> witness;
};

/// Searches Hom(M, N) for a vertexwise invertible element.
IsoResult rep_isomorphic(const FpRep& m, const FpRep& n, Budget& budget = Budget::unlimited());

/// Both inclusions of the saturation statement on the theta+ and theta-
/// framed enumerations.
std::vector<CheckReport> verify_saturation(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                           const PrimeField& field, long long n, Budget& budget, unsigned workers = 1);

struct OrbitPairing {
  std::size_t rep_orbit = 0;
  std::size_t phi_orbit = 0;
  std::size_t psi_orbit = 0;
  std::string representative;
  std::string phi_point;
  std::string psi_point;
};

struct LocusSummary {
  std::string locus;
  std::uint64_t points = 0;
  std::uint64_t rep_orbits = 0;
  std::uint64_t phi_points = 0;
  std::uint64_t phi_orbits = 0;
  std::uint64_t psi_points = 0;
  std::uint64_t psi_orbits = 0;
  /// False for the strictly semistable comparison, which is reported only.
  bool asserted = true;
  std::vector<OrbitPairing> pairings;
};

struct CorrespondenceReport {
  std::string quiver;
  DimVector alpha;
  StabilityParam theta;
  std::string field;
  std::uint64_t representations = 0;
  std::uint64_t group_order = 0;
  bool bipartite = false;
  std::vector<LocusSummary> loci;
  std::vector<CheckReport> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

CorrespondenceReport verify_correspondence(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                           const PrimeField& field, long long n, Budget& budget, unsigned workers = 1);

std::string describe(const FpRep& m);

}  // namespace qml
