#include "qml/grassmannian.hpp"

#include <algorithm>
#include <random>

namespace qml {

StandardModule projective_standard(QuiverPtr q, const PrimeField& field, const DimVector& beta) {
  return {projective_sum(std::move(q), field, beta), AmbientKind::projective, beta};
}

StandardModule injective_standard(QuiverPtr q, const PrimeField& field, const DimVector& beta) {
  return {injective_sum(std::move(q), field, beta), AmbientKind::injective, beta};
}

std::vector<SubspaceTuple> grassmannian_points(const FpRep& m, const DimVector& beta, Budget& budget) {
  if (!beta.fits_in(m.dim())) throw InvalidArgument("grassmannian: beta exceeds the ambient dimension vector");
  return subrepresentations(m, beta, budget);
}

std::vector<SubspaceTuple> quotient_grassmannian_points(const FpRep& m, const DimVector& beta, Budget& budget) {
  if (!beta.fits_in(m.dim())) throw InvalidArgument("grassmannian: beta exceeds the ambient dimension vector");
  return subrepresentations(m, m.dim() - beta, budget);
}

FpMatrix sigma_matrix(const StandardModule& s, const GroupElement<PrimeField>& h, VertexIndex j) {
  const auto& labels = s.module.labels.at(j);
  const auto& field = s.rep().field();
  if (h.size() != s.multiplicity.size()) throw DimensionMismatch("sigma: group element lives on the wrong vertex set");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i].rows() != static_cast<std::size_t>(s.multiplicity[i]))
      throw DimensionMismatch("sigma: group element block size differs from the multiplicity");
  FpMatrix out(field, labels.size(), labels.size());
  for (std::size_t r = 0; r < labels.size(); ++r)
    for (std::size_t c = 0; c < labels.size(); ++c) {
      const auto& a = labels[r];
      const auto& b = labels[c];
      if (a.summand == b.summand && a.path == b.path) out(r, c) = h[a.summand](a.copy, b.copy);
    }
  return out;
}

SubspaceTuple sigma_action(const StandardModule& s, const GroupElement<PrimeField>& h, const SubspaceTuple& pt) {
  SubspaceTuple out;
  for (VertexIndex j = 0; j < pt.size(); ++j) out.bases.push_back(image_of(sigma_matrix(s, h, j), pt[j]));
  return out;
}

SubspaceTuple kernel_tuple(const Homomorphism<PrimeField>& f) {
  SubspaceTuple t;
  for (const auto& c : f.components) t.bases.push_back(kernel_space(c));
  return t;
}

SubspaceTuple image_tuple(const Homomorphism<PrimeField>& f) {
  SubspaceTuple t;
  for (const auto& c : f.components) t.bases.push_back(column_space(c));
  return t;
}

SubspaceTuple hilbert_point_phi(const FramedRep& fr) {
  if (fr.side != FramingSide::incoming) throw InvalidArgument("hilbert_point_phi needs a framing A: E -> V");
  auto f = framed_phi(fr.base, fr.framing, fr.beta).second;
  if (!is_surjective(f)) throw NotInDegreeZeroLocus("phi_{M,A} is not surjective");
  return kernel_tuple(f);
}

SubspaceTuple hilbert_point_psi(const FramedRep& fr) {
  if (fr.side != FramingSide::outgoing) throw InvalidArgument("hilbert_point_psi needs a framing B: V -> E");
  auto f = framed_psi(fr.base, fr.framing, fr.beta).second;
  if (!is_injective(f)) throw NotInDegreeZeroLocus("psi_{M,B} is not injective");
  return image_tuple(f);
}

std::vector<GroupElement<PrimeField>> group_elements(const PrimeField& field, const DimVector& d, Budget& budget) {
  budget.require(group_order(field.characteristic(), d), "group enumeration");
  std::vector<GroupElement<PrimeField>> out;
  for_each_group_element(field, d, [&](const GroupElement<PrimeField>& g) {
    budget.charge(1, "group enumeration");
    out.push_back(g);
    return true;
  });
  return out;
}

std::set<SubspaceTuple> orbit_of_point(const StandardModule& s, const SubspaceTuple& pt,
                                       const std::vector<GroupElement<PrimeField>>& group) {
  std::set<SubspaceTuple> orbit;
  for (const auto& h : group) orbit.insert(sigma_action(s, h, pt));
  return orbit;
}

OrbitPartition orbit_partition(const StandardModule& s, std::vector<SubspaceTuple> points,
                               const std::vector<GroupElement<PrimeField>>& group) {
  std::sort(points.begin(), points.end());
  OrbitPartition out;
  for (const auto& p : points) {
    if (out.orbit_of.count(p)) continue;
    auto orbit = orbit_of_point(s, p, group);
    const std::size_t id = out.orbits.size();
    for (const auto& x : orbit) out.orbit_of.emplace(x, id);
    out.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

namespace {

struct EquivarianceSample {
  FramedRep fr;
  GroupElement<PrimeField> h;
  GroupElement<PrimeField> g;
};

}  // namespace

std::vector<CheckReport> verify_equivariance(QuiverPtr q, const DimVector& alpha, const PrimeField& field,
                                             std::size_t samples, std::uint64_t seed, unsigned workers) {
  require_on(*q, alpha.size(), "dimension vector");
  std::vector<CheckReport> out;
  for (auto side : {FramingSide::incoming, FramingSide::outgoing}) {
    // Sampling is sequential so the inputs depend on the seed only.
    std::mt19937_64 rng(seed + (side == FramingSide::incoming ? 0 : 1));
    std::vector<EquivarianceSample> inputs;
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<long long> b;
      for (auto a : alpha.values()) b.push_back(static_cast<long long>(rng() % static_cast<std::uint64_t>(std::max(a, 1LL) + 1)));
      const DimVector beta(b);
      auto m = random_rep(q, field, alpha, rng);
      std::vector<FpMatrix> framing;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        const auto ai = static_cast<std::size_t>(alpha[i]), bi = static_cast<std::size_t>(beta[i]);
        framing.push_back(side == FramingSide::incoming ? random_matrix(field, ai, bi, rng) : random_matrix(field, bi, ai, rng));
      }
      auto h = random_group_element(field, beta, rng);
      auto g = random_group_element(field, alpha, rng);
      inputs.push_back({make_framed_rep(std::move(m), std::move(framing), side, beta), std::move(h), std::move(g)});
    }
    const bool incoming = side == FramingSide::incoming;
    out.push_back(sweep(incoming ? "kernel of phi is sigma-equivariant" : "image of psi is sigma-equivariant",
                        inputs.size(), workers, [&](std::uint64_t i) {
                          PointOutcome o;
                          const auto& [fr, h, g] = inputs[i];
                          const auto moved = act(h, g, fr);
                          const auto ambient = incoming ? projective_standard(q, field, fr.beta)
                                                        : injective_standard(q, field, fr.beta);
                          SubspaceTuple before, after;
                          if (incoming) {
                            const auto phi = framed_phi(fr.base, fr.framing, fr.beta).second;
                            before = kernel_tuple(phi);
                            after = kernel_tuple(framed_phi(moved.base, moved.framing, moved.beta).second);
                            o.tags.push_back(is_surjective(phi) ? "phi onto" : "phi not onto");
                          } else {
                            const auto psi = framed_psi(fr.base, fr.framing, fr.beta).second;
                            before = image_tuple(psi);
                            after = image_tuple(framed_psi(moved.base, moved.framing, moved.beta).second);
                            o.tags.push_back(is_injective(psi) ? "psi injective" : "psi not injective");
                          }
                          if (!(sigma_action(ambient, h, before) == after)) {
                            o.point = describe(fr);
                            o.failure = "sigma(h) does not carry the old subspace tuple to the new one";
                          }
                          return o;
                        }));
  }
  return out;
}

}  // namespace qml
