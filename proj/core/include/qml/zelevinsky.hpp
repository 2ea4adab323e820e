#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qml/correspondence.hpp"

namespace qml {

/// Vertex order 1..n of a linearly oriented A_n quiver (arrow k: k -> k+1);
/// throws WrongQuiverShape otherwise.
std::vector<VertexIndex> linear_chain(const Quiver& q);

/// Block lower-triangular, identity diagonal, block (i, j) = M_{i-1} ... M_j for i > j.
template <class F>
Matrix<F> zelevinsky_g(const Representation<F>& m) {
  const auto chain = linear_chain(m.quiver());
  const F& k = m.field();
  std::vector<std::vector<Matrix<F>>> grid;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::vector<Matrix<F>> row;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const auto ri = m.vdim(chain[i]), cj = m.vdim(chain[j]);
      if (i == j) {
        row.push_back(Matrix<F>::identity(k, ri));
      } else if (i > j) {
        Matrix<F> prod = Matrix<F>::identity(k, cj);
        for (std::size_t s = j; s < i; ++s) prod = m.map(m.quiver().arrows_out(chain[s]).front()) * prod;
        row.push_back(std::move(prod));
      } else {
        row.emplace_back(k, ri, cj);
      }
    }
    grid.push_back(std::move(row));
  }
  return block_assemble(grid, k);
}

/// Block bidiagonal, identity diagonal, -M_i below it.
template <class F>
Matrix<F> dual_zelevinsky_h(const Representation<F>& m) {
  const auto chain = linear_chain(m.quiver());
  const F& k = m.field();
  std::vector<std::vector<Matrix<F>>> grid;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::vector<Matrix<F>> row;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      const auto ri = m.vdim(chain[i]), cj = m.vdim(chain[j]);
      if (i == j)
        row.push_back(Matrix<F>::identity(k, ri));
      else if (i == j + 1)
        row.push_back(-m.map(m.quiver().arrows_out(chain[j]).front()));
      else
        row.emplace_back(k, ri, cj);
    }
    grid.push_back(std::move(row));
  }
  return block_assemble(grid, k);
}

/// F_1 <= ... <= F_n in V = V_1 (+) ... (+) V_n with dim F_i = alpha_1 + ... + alpha_i.
struct FlagPoint {
  std::vector<FpMatrix> steps;

  friend bool operator==(const FlagPoint&, const FlagPoint&) = default;
  friend bool operator<(const FlagPoint& a, const FlagPoint& b);
};

std::string to_string(const FlagPoint& f);

/// F_i spanned by the first alpha_1 + ... + alpha_i columns of g.
FlagPoint flag_of_matrix(const FpMatrix& g, const std::vector<long long>& profile);

/// E_i = V_1 (+) ... (+) V_i and its complement V_{i+1} (+) ... (+) V_n.
FpMatrix standard_step(const PrimeField& field, const std::vector<long long>& profile, std::size_t i);
FpMatrix opposite_step(const PrimeField& field, const std::vector<long long>& profile, std::size_t i);
FlagPoint standard_flag(const PrimeField& field, const std::vector<long long>& profile);

/// First 1-based index where the condition fails: F_i >= E_{i-1} (omega),
/// F_i <= E_{i+1} (upsilon), F_i meets V_{i+1} (+) ... (+) V_n trivially (opposite cell).
std::optional<std::size_t> omega_violation(const FlagPoint& f, const std::vector<long long>& profile);
std::optional<std::size_t> upsilon_violation(const FlagPoint& f, const std::vector<long long>& profile);
std::optional<std::size_t> opposite_cell_violation(const FlagPoint& f, const std::vector<long long>& profile);

bool in_omega(const FlagPoint& f, const std::vector<long long>& profile);
bool in_upsilon(const FlagPoint& f, const std::vector<long long>& profile);
bool in_opposite_cell(const FlagPoint& f, const std::vector<long long>& profile);

enum class FlagConstraint { none, omega, upsilon };

/// All flags with the given profile, built step by step; the omega / upsilon
/// constraint and the opposite-cell condition (when requested) prune each step.
std::vector<FlagPoint> enumerate_flags(const PrimeField& field, const std::vector<long long>& profile,
                                       FlagConstraint constraint, bool opposite_cell, Budget& budget);

/// The flag of a point of Gr_alpha(I): F_i = E_{i-1} + U_i.
FlagPoint flag_of_injective_point(const SubspaceTuple& u, const std::vector<long long>& profile);
/// The flag of a point of Gr^alpha(P): F_i = U_{i+1} padded into V, F_n = V.
FlagPoint flag_of_projective_point(const SubspaceTuple& u, const std::vector<long long>& profile);

/// The flag translated by the block-diagonal matrix diag(g_1, ..., g_n).
FlagPoint act_block_diagonal(const GroupElement<PrimeField>& g, const FlagPoint& f, const std::vector<VertexIndex>& chain);

enum class ZelevinskyMap { zeta, eta };

std::string to_string(ZelevinskyMap w);

struct ZelevinskyReport {
  ZelevinskyMap which = ZelevinskyMap::zeta;
  DimVector alpha;
  std::string field;
  std::uint64_t representations = 0;
  std::uint64_t flags_total = 0;
  std::uint64_t target_flags = 0;
  std::uint64_t image_size = 0;
  bool injective = false;
  bool into_target = false;
  bool onto_target = false;
  CheckReport agreement;
  CheckReport membership;
  CheckReport equivariance;

  bool passed() const {
    return injective && into_target && onto_target && agreement.passed() && membership.passed() &&
           equivariance.passed();
  }
};

ZelevinskyReport verify_zelevinsky_bijection(QuiverPtr q, const DimVector& alpha, const PrimeField& field,
                                             ZelevinskyMap which, Budget& budget);

}  // namespace qml
