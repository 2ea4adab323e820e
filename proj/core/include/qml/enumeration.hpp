#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qml/budget.hpp"
#include "qml/representation.hpp"
#include "qml/subspace.hpp"

namespace qml {

/// One canonical subspace per vertex of an ambient representation.
struct SubspaceTuple {
  std::vector<FpMatrix> bases;

  DimVector dim() const;
  std::size_t size() const { return bases.size(); }
  const FpMatrix& operator[](std::size_t v) const { return bases.at(v); }

  friend bool operator==(const SubspaceTuple&, const SubspaceTuple&) = default;
  /// Vertexwise (subspace dimension, entries) lexicographic order.
  friend bool operator<(const SubspaceTuple& a, const SubspaceTuple& b);
};

std::string to_string(const SubspaceTuple& t);

/// M_a(U_s(a)) is inside U_t(a) for every arrow.
bool is_subrepresentation(const FpRep& m, const SubspaceTuple& u);

/// All invariant subspace tuples of M (dimension vector `target` when given),
/// including 0 and M. Vertices are filled in topological order: U_v ranges
/// over subspaces containing the images of the already chosen U's.
/// Returns false iff fn stopped the enumeration.
bool for_each_subrepresentation(const FpRep& m, const std::optional<DimVector>& target, Budget& budget,
                                const std::function<bool(const SubspaceTuple&)>& fn);

std::vector<SubspaceTuple> subrepresentations(const FpRep& m, const std::optional<DimVector>& target,
                                              Budget& budget = Budget::unlimited());

/// Independent count of the subrepresentations of dimension `target`:
/// vertices in reverse topological order, U_v ranging inside the common
/// preimage of the already chosen U's.
std::uint64_t count_subrepresentations_reverse(const FpRep& m, const DimVector& target,
                                               Budget& budget = Budget::unlimited());

/// |R(Q, alpha)(F_p)| = p^(sum over arrows of alpha_s alpha_t), saturating.
std::uint64_t rep_space_size(const Quiver& q, const DimVector& alpha, unsigned p);

/// The index-th point of R(Q, alpha)(F_p): base-p digits fill the arrow
/// matrices in arrow order, row-major, least significant digit first.
FpRep rep_at_index(QuiverPtr q, const PrimeField& field, const DimVector& alpha, std::uint64_t index);

/// Inverse of rep_at_index.
std::uint64_t rep_index(const FpRep& m);

/// Visits every point of R(Q, alpha)(F_p) in index order. Each point costs
/// one budget step and the whole space must fit in the remaining budget.
void for_each_rep(QuiverPtr q, const PrimeField& field, const DimVector& alpha, Budget& budget,
                  const std::function<bool(std::uint64_t, const FpRep&)>& fn);

std::vector<FpRep> enumerate_reps(QuiverPtr q, const PrimeField& field, const DimVector& alpha,
                                  Budget& budget = Budget::unlimited());

/// Concatenated entries of all arrow matrices; lexicographic order on keys
/// orders representations of a fixed dimension vector.
std::vector<std::uint16_t> rep_key(const FpRep& m);

FpMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
FpMatrix random_invertible(const PrimeField& field, std::size_t n, std::mt19937_64& rng);
FpRep random_rep(QuiverPtr q, const PrimeField& field, const DimVector& alpha, std::mt19937_64& rng);
GroupElement<PrimeField> random_group_element(const PrimeField& field, const DimVector& d, std::mt19937_64& rng);

}  // namespace qml
