#include "qml/budget.hpp"
#include "qml/group.hpp"

namespace qml {

std::vector<FpMatrix> general_linear_group(const PrimeField& field, std::size_t n) {
  const unsigned p = field.characteristic();
  std::vector<FpMatrix> out;
  FpMatrix m(field, n, n);
  const std::size_t cells = n * n;
  // Odometer over all p^(n^2) matrices, keeping the invertible ones.
  while (true) {
    if (is_invertible(m)) out.push_back(m);
    std::size_t k = 0;
    while (k < cells) {
      auto& e = m.data()[k];
      if (e + 1u < p) {
        ++e;
        break;
      }
      e = 0;
      ++k;
    }
    if (k == cells) break;
  }
  return out;
}

std::uint64_t general_linear_order(unsigned p, std::size_t n) {
  std::uint64_t order = 1;
  const std::uint64_t pn = saturating_pow(p, n);
  std::uint64_t pk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    order = saturating_mul(order, pn - pk);
    pk *= p;
  }
  return order;
}

std::uint64_t group_order(unsigned p, const DimVector& d) {
  std::uint64_t order = 1;
  for (auto n : d.values()) order = saturating_mul(order, general_linear_order(p, static_cast<std::size_t>(n)));
  return order;
}

void for_each_group_element(const PrimeField& field, const DimVector& d,
                            const std::function<bool(const GroupElement<PrimeField>&)>& fn) {
  std::vector<std::vector<FpMatrix>> factors;
  for (auto n : d.values()) factors.push_back(general_linear_group(field, static_cast<std::size_t>(n)));
  std::vector<std::size_t> idx(factors.size(), 0);
  GroupElement<PrimeField> g;
  for (const auto& f : factors) g.blocks.push_back(f.front());
  while (true) {
    if (!fn(g)) return;
    std::size_t k = 0;
    while (k < factors.size()) {
      if (++idx[k] < factors[k].size()) {
        g.blocks[k] = factors[k][idx[k]];
        break;
      }
      idx[k] = 0;
      g.blocks[k] = factors[k].front();
      ++k;
    }
    if (k == factors.size()) return;
  }
}

}  // namespace qml
