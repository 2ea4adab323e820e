#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qml/matrix.hpp"
#include "qml/quiver.hpp"

namespace qml {

/// Element of G(d) = prod_i GL(d_i): one invertible block per vertex.
template <class F>
struct GroupElement {
  std::vector<Matrix<F>> blocks;

  static GroupElement identity(const F& field, const DimVector& d) {
    GroupElement g;
    for (auto n : d.values()) g.blocks.push_back(Matrix<F>::identity(field, static_cast<std::size_t>(n)));
    return g;
  }

  static GroupElement scalar(const F& field, const DimVector& d, const typename F::Element& t) {
    GroupElement g = identity(field, d);
    for (auto& b : g.blocks) b = b.scaled(t);
    return g;
  }

  std::size_t size() const { return blocks.size(); }
  const Matrix<F>& operator[](std::size_t i) const { return blocks.at(i); }

  GroupElement inverse() const {
    GroupElement h;
    for (const auto& b : blocks) h.blocks.push_back(invert(b));
    return h;
  }

  /// Restriction to the marked vertices; unmarked blocks become 0x0.
  GroupElement restricted(const std::vector<bool>& vertex_set) const {
    GroupElement h;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      h.blocks.push_back(vertex_set.at(i) ? blocks[i] : Matrix<F>(blocks[i].field(), 0, 0));
    return h;
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.size() != b.size()) throw DimensionMismatch("group elements on different vertex sets");
    GroupElement c;
    for (std::size_t i = 0; i < a.size(); ++i) c.blocks.push_back(a.blocks[i] * b.blocks[i]);
    return c;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// chi_theta(g) = prod_i det(g_i)^(-theta_i).
template <class F>
typename F::Element character_value(const StabilityParam& theta, const GroupElement<F>& g, const F& field) {
  if (theta.size() != g.size()) throw DimensionMismatch("character: parameter and group element sizes differ");
  auto value = field.one();
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto det = determinant(g.blocks[i]);
    if (field.is_zero(det)) throw SingularMatrix("character: group element block is singular");
    value = field.mul(value, field.pow(det, -theta[i]));
  }
  return value;
}

/// Every invertible n x n matrix over F_p, in odometer order of entries.
std::vector<FpMatrix> general_linear_group(const PrimeField& field, std::size_t n);

/// |GL_n(F_p)|, saturating at UINT64_MAX.
std::uint64_t general_linear_order(unsigned p, std::size_t n);

/// Visits every element of prod_i GL_{d_i}(F_p). Stops early if fn returns false.
void for_each_group_element(const PrimeField& field, const DimVector& d,
                            const std::function<bool(const GroupElement<PrimeField>&)>& fn);

std::uint64_t group_order(unsigned p, const DimVector& d);

}  // namespace qml
