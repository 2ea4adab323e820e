#pragma once

#include <map>
#include <set>
#include <vector>

#include "qml/framing.hpp"

namespace qml {

enum class AmbientKind { projective, injective };

/// P_beta = (+)_i P(i) (x) k^beta_i or I_beta = (+)_i I(i) (x) k^beta_i,
/// with their path labels.
struct StandardModule {
  LabeledRep<PrimeField> module;
  AmbientKind kind;
  DimVector multiplicity;

  const FpRep& rep() const { return module.rep; }
};

StandardModule projective_standard(QuiverPtr q, const PrimeField& field, const DimVector& beta);
StandardModule injective_standard(QuiverPtr q, const PrimeField& field, const DimVector& beta);

/// Gr_beta(M): invariant subspace tuples of dimension beta.
std::vector<SubspaceTuple> grassmannian_points(const FpRep& m, const DimVector& beta,
                                               Budget& budget = Budget::unlimited());
/// Gr^beta(M) = Gr_{dim M - beta}(M), stored as kernels.
std::vector<SubspaceTuple> quotient_grassmannian_points(const FpRep& m, const DimVector& beta,
                                                        Budget& budget = Budget::unlimited());

/// sigma(h) at vertex j: h_i on the copy index of every label (i, path, copy).
FpMatrix sigma_matrix(const StandardModule& s, const GroupElement<PrimeField>& h, VertexIndex j);
SubspaceTuple sigma_action(const StandardModule& s, const GroupElement<PrimeField>& h, const SubspaceTuple& pt);

SubspaceTuple kernel_tuple(const Homomorphism<PrimeField>& f);
SubspaceTuple image_tuple(const Homomorphism<PrimeField>& f);

/// ker phi_{M,A} in P_beta; throws NotInDegreeZeroLocus unless phi_{M,A} is onto.
SubspaceTuple hilbert_point_phi(const FramedRep& fr);
/// im psi_{M,B} in I_beta; throws NotInDegreeZeroLocus unless psi_{M,B} is injective.
SubspaceTuple hilbert_point_psi(const FramedRep& fr);

/// Every element of prod_i GL(d_i)(F_p), one budget step each.
std::vector<GroupElement<PrimeField>> group_elements(const PrimeField& field, const DimVector& d,
                                                     Budget& budget = Budget::unlimited());

std::set<SubspaceTuple> orbit_of_point(const StandardModule& s, const SubspaceTuple& pt,
                                       const std::vector<GroupElement<PrimeField>>& group);

struct OrbitPartition {
  /// Orbits ordered by their least element; each orbit sorted.
  std::vector<std::vector<SubspaceTuple>> orbits;
  std::map<SubspaceTuple, std::size_t> orbit_of;
};

/// Orbits of the given points under sigma; points outside the list that
/// appear in an orbit are included.
OrbitPartition orbit_partition(const StandardModule& s, std::vector<SubspaceTuple> points,
                               const std::vector<GroupElement<PrimeField>>& group);

/// ker phi_{(h,g).(M,A)} = sigma(h) ker phi_{M,A} and the dual statement for
/// im psi, on `samples` random framed representations and group elements.
std::vector<CheckReport> verify_equivariance(QuiverPtr q, const DimVector& alpha, const PrimeField& field,
                                             std::size_t samples, std::uint64_t seed, unsigned workers = 1);

}  // namespace qml
