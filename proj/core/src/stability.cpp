#include "qml/stability.hpp"

#include "qml/parallel.hpp"
#include "qml/correspondence.hpp"

namespace qml {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stable:
      return "stable";
    case Verdict::semistable_not_stable:
      return "semistable_not_stable";
    case Verdict::unstable:
      return "unstable";
    case Verdict::theta_nonzero:
      return "theta_nonzero";
  }
  return "?";
}

StabilityVerdict check_stability(const FpRep& m, const StabilityParam& theta, Budget& budget) {
  require_on(m.quiver(), theta.size(), "stability parameter");
  StabilityVerdict out;
  if (theta_value(theta, m.dim()) != 0) {
    out.verdict = Verdict::theta_nonzero;
    return out;
  }
  const DimVector& full = m.dim();
  std::optional<SubrepWitness> zero_witness;
  std::optional<SubrepWitness> positive;
  for_each_subrepresentation(m, std::nullopt, budget, [&](const SubspaceTuple& u) {
    DimVector d = u.dim();
    if (d.is_zero() || d == full) return true;
    long long t = theta_value(theta, d);
    if (t > 0) {
      positive = SubrepWitness{u, d, t};
      return false;
    }
    if (t == 0 && !zero_witness) zero_witness = SubrepWitness{u, d, t};
    return true;
  });
  if (positive) {
    out.verdict = Verdict::unstable;
    out.witness = std::move(positive);
  } else if (zero_witness) {
    out.verdict = Verdict::semistable_not_stable;
    out.witness = std::move(zero_witness);
  }
  return out;
}

std::vector<StabilityVerdict> stability_table(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                              const PrimeField& field, Budget& budget, unsigned workers) {
  const auto total = rep_space_size(*q, alpha, field.characteristic());
  budget.require(total, "representation space enumeration");
  return parallel_map<StabilityVerdict>(static_cast<std::size_t>(total), workers, [&](std::size_t i) {
    budget.charge(1, "representation space enumeration");
    return check_stability(rep_at_index(q, field, alpha, i), theta, budget);
  });
}

namespace {

bool is_subspace_quiver(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n < 2 || q.arrow_count() != n - 1) return false;
  const VertexIndex sink = n - 1;
  for (VertexIndex i = 0; i + 1 < n; ++i) {
    if (q.arrows_out(i).size() != 1 || !q.arrows_in(i).empty()) return false;
    if (q.arrow(q.arrows_out(i)[0]).dst != sink) return false;
  }
  return true;
}

}  // namespace

StabilityParam subspace_quiver_theta(std::size_t n, const std::vector<long long>& weights) {
  std::vector<long long> t;
  long long total = 0;
  for (auto a : weights) {
    t.push_back(static_cast<long long>(n) * a);
    total += a;
  }
  t.push_back(-total);
  return StabilityParam(t);
}

StabilityVerdict subspace_quiver_criterion(const FpRep& m, const std::vector<long long>& weights) {
  const auto& q = m.quiver();
  if (!is_subspace_quiver(q)) throw WrongQuiverShape("criterion needs the subspace quiver: sources q_i -> one sink");
  const std::size_t count = q.vertex_count() - 1;
  if (weights.size() != count) throw DimensionMismatch("one weight per source vertex required");
  for (auto a : weights)
    if (a <= 0) throw InvalidArgument("subspace quiver weights must be positive");
  for (VertexIndex i = 0; i < count; ++i)
    if (m.vdim(i) != 1) throw WrongQuiverShape("criterion needs dimension 1 at every source");
  if (count > 30) throw InvalidArgument("too many sources for the subset criterion");
  const VertexIndex sink = count;
  const std::size_t n = m.vdim(sink);
  long long total = 0;
  for (auto a : weights) total += a;
  const auto theta = subspace_quiver_theta(n, weights);

  StabilityVerdict out;
  std::optional<SubrepWitness> equality;
  const std::uint64_t all = (std::uint64_t{1} << count) - 1;
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    long long weight = 0;
    std::vector<FpMatrix> vectors;
    SubspaceTuple u;
    for (VertexIndex i = 0; i < count; ++i) {
      bool in = (mask >> i) & 1;
      if (in) {
        weight += weights[i];
        vectors.push_back(m.map(q.arrows_out(i)[0]).transpose());
      }
      u.bases.push_back(in ? whole_space(m.field(), 1) : zero_subspace(m.field(), 1));
    }
    FpMatrix span = canonical_subspace(vstack(vectors, m.field(), n));
    u.bases.push_back(span);
    const long long lhs = static_cast<long long>(n) * weight;
    const long long rhs = total * static_cast<long long>(span.rows());
    if (lhs > rhs) {
      out.verdict = Verdict::unstable;
      out.witness = SubrepWitness{u, u.dim(), theta_value(theta, u.dim())};
      return out;
    }
    if (lhs == rhs && mask != all && !equality) equality = SubrepWitness{u, u.dim(), 0};
  }
  if (equality) {
    out.verdict = Verdict::semistable_not_stable;
    out.witness = std::move(equality);
  }
  return out;
}

std::optional<std::vector<long long>> subspace_quiver_weights(const Quiver& q, const DimVector& alpha,
                                                               const StabilityParam& theta) {
  if (!is_subspace_quiver(q) || alpha.size() != q.vertex_count() || theta.size() != q.vertex_count())
    return std::nullopt;
  const std::size_t count = q.vertex_count() - 1;
  const long long n = alpha[count];
  if (n <= 0) return std::nullopt;
  std::vector<long long> weights;
  for (std::size_t i = 0; i < count; ++i) {
    if (alpha[i] != 1 || theta[i] <= 0 || theta[i] % n != 0) return std::nullopt;
    weights.push_back(theta[i] / n);
  }
  if (subspace_quiver_theta(static_cast<std::size_t>(n), weights) != theta) return std::nullopt;
  return weights;
}

CheckReport verify_resolution_maps(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                   const PrimeField& field, Budget& budget, unsigned workers) {
  const auto table = stability_table(q, alpha, theta, field, budget, workers);
  return sweep("phi onto and psi injective on the semistable locus", table.size(), workers, [&](std::uint64_t i) {
    PointOutcome o;
    if (!table[i].semistable()) {
      o.tags.push_back("not semistable");
      return o;
    }
    o.tags.push_back(table[i].stable() ? "stable" : "strictly semistable");
    const auto m = rep_at_index(q, field, alpha, i);
    const bool onto = is_surjective(canonical_phi(m, theta).second);
    const bool into = is_injective(canonical_psi(m, theta).second);
    if (!onto || !into) {
      o.point = describe(m);
      o.failure = std::string(!onto ? "phi_M not surjective" : "") + (!onto && !into ? "; " : "") +
                  (!into ? "psi_M not injective" : "");
    }
    return o;
  });
}

CheckReport verify_subspace_criterion(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                      const PrimeField& field, Budget& budget, unsigned workers) {
  const auto weights = subspace_quiver_weights(*q, alpha, theta);
  if (!weights)
    throw WrongQuiverShape("closed-form criterion needs the subspace quiver, alpha = (1,...,1,n), theta = (n a, -|a|)");
  const auto table = stability_table(q, alpha, theta, field, budget, workers);
  return sweep("closed form against exhaustive stability", table.size(), workers, [&](std::uint64_t i) {
    PointOutcome o;
    const auto m = rep_at_index(q, field, alpha, i);
    const auto closed = subspace_quiver_criterion(m, *weights);
    o.tags.push_back(to_string(table[i].verdict));
    if (closed.verdict != table[i].verdict) {
      o.point = describe(m);
      o.failure = "closed form says " + to_string(closed.verdict) + ", enumeration says " + to_string(table[i].verdict);
    }
    return o;
  });
}

}  // namespace qml
