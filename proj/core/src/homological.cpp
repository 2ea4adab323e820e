#include "qml/homological.hpp"

#include <random>

#include "qml/correspondence.hpp"

namespace qml {

CheckReport verify_euler_identity(QuiverPtr q, const PrimeField& field, std::size_t pairs, long long max_dim,
                                  std::uint64_t seed, unsigned workers) {
  if (max_dim < 0) throw InvalidArgument("max_dim must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<FpRep, FpRep>> inputs;
  auto random_dim = [&] {
    std::vector<long long> d;
    for (std::size_t i = 0; i < q->vertex_count(); ++i)
      d.push_back(static_cast<long long>(rng() % static_cast<std::uint64_t>(max_dim + 1)));
    return DimVector(d);
  };
  for (std::size_t k = 0; k < pairs; ++k) {
    auto dm = random_dim();
    auto dn = random_dim();
    auto m = random_rep(q, field, dm, rng);
    auto n = random_rep(q, field, dn, rng);
    inputs.emplace_back(std::move(m), std::move(n));
  }
  return sweep("hom - ext equals the Euler form", inputs.size(), workers, [&](std::uint64_t i) {
    PointOutcome o;
    const auto& [m, n] = inputs[i];
    const long long hom = static_cast<long long>(hom_dim(m, n));
    const long long ext_p = static_cast<long long>(ext_dim_via_projective(m, n));
    const long long ext_i = static_cast<long long>(ext_dim_via_injective(m, n));
    const long long euler = euler_form(*q, m.dim(), n.dim());
    o.tags.push_back(ext_p == 0 ? "ext zero" : "ext nonzero");
    if (hom - ext_p != euler || ext_p != ext_i) {
      o.point = describe(m) + " | " + describe(n);
      o.failure = "hom " + std::to_string(hom) + ", ext " + std::to_string(ext_p) + " (projective) / " +
                  std::to_string(ext_i) + " (injective), euler " + std::to_string(euler);
    }
    return o;
  });
}

}  // namespace qml
