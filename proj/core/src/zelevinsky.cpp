#include "qml/zelevinsky.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qml {

std::vector<VertexIndex> linear_chain(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0 || q.arrow_count() != n - 1) throw WrongQuiverShape("expected a linearly oriented A_n quiver");
  std::vector<VertexIndex> chain = q.topological_order();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto& out = q.arrows_out(chain[k]);
    if (out.size() != 1 || q.arrow(out[0]).dst != chain[k + 1])
      throw WrongQuiverShape("expected a linearly oriented A_n quiver");
  }
  return chain;
}

bool operator<(const FlagPoint& a, const FlagPoint& b) {
  if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    if (a.steps[i].rows() != b.steps[i].rows()) return a.steps[i].rows() < b.steps[i].rows();
    if (a.steps[i].data() != b.steps[i].data()) return a.steps[i].data() < b.steps[i].data();
  }
  return false;
}

std::string to_string(const FlagPoint& f) {
  SubspaceTuple t{f.steps};
  return to_string(t);
}

namespace {

std::size_t prefix(const std::vector<long long>& profile, std::size_t i) {
  long long s = 0;
  for (std::size_t k = 0; k < i && k < profile.size(); ++k) s += profile[k];
  return static_cast<std::size_t>(s);
}

std::size_t total_dim(const std::vector<long long>& profile) { return prefix(profile, profile.size()); }

/// Rows of an r x d subspace placed at coordinate offset `at` in F_p^total.
FpMatrix pad(const FpMatrix& u, std::size_t at, std::size_t total) {
  FpMatrix out(u.field(), u.rows(), total);
  out.set_block(0, at, u);
  return canonical_subspace(out);
}

}  // namespace

FlagPoint flag_of_matrix(const FpMatrix& g, const std::vector<long long>& profile) {
  const std::size_t d = total_dim(profile);
  if (g.rows() != d || g.cols() != d) throw DimensionMismatch("flag_of_matrix: matrix shape does not match the profile");
  if (!is_invertible(g)) throw SingularMatrix("flag_of_matrix: matrix is singular");
  FlagPoint f;
  for (std::size_t i = 1; i <= profile.size(); ++i)
    f.steps.push_back(canonical_subspace(g.block(0, 0, d, prefix(profile, i)).transpose()));
  return f;
}

FpMatrix standard_step(const PrimeField& field, const std::vector<long long>& profile, std::size_t i) {
  const std::size_t d = total_dim(profile);
  return pad(whole_space(field, prefix(profile, i)), 0, d);
}

FpMatrix opposite_step(const PrimeField& field, const std::vector<long long>& profile, std::size_t i) {
  const std::size_t d = total_dim(profile);
  const std::size_t at = prefix(profile, i);
  return pad(whole_space(field, d - at), at, d);
}

FlagPoint standard_flag(const PrimeField& field, const std::vector<long long>& profile) {
  FlagPoint f;
  for (std::size_t i = 1; i <= profile.size(); ++i) f.steps.push_back(standard_step(field, profile, i));
  return f;
}

std::optional<std::size_t> omega_violation(const FlagPoint& f, const std::vector<long long>& profile) {
  for (std::size_t i = 2; i <= f.steps.size(); ++i)
    if (!subspace_contains(f.steps[i - 1], standard_step(f.steps[i - 1].field(), profile, i - 1))) return i;
  return std::nullopt;
}

std::optional<std::size_t> upsilon_violation(const FlagPoint& f, const std::vector<long long>& profile) {
  for (std::size_t i = 1; i < f.steps.size(); ++i)
    if (!subspace_contains(standard_step(f.steps[i - 1].field(), profile, i + 1), f.steps[i - 1])) return i;
  return std::nullopt;
}

std::optional<std::size_t> opposite_cell_violation(const FlagPoint& f, const std::vector<long long>& profile) {
  for (std::size_t i = 1; i <= f.steps.size(); ++i)
    if (intersection_dim(f.steps[i - 1], opposite_step(f.steps[i - 1].field(), profile, i)) != 0) return i;
  return std::nullopt;
}

bool in_omega(const FlagPoint& f, const std::vector<long long>& profile) { return !omega_violation(f, profile); }
bool in_upsilon(const FlagPoint& f, const std::vector<long long>& profile) { return !upsilon_violation(f, profile); }
bool in_opposite_cell(const FlagPoint& f, const std::vector<long long>& profile) {
  return !opposite_cell_violation(f, profile);
}

std::vector<FlagPoint> enumerate_flags(const PrimeField& field, const std::vector<long long>& profile,
                                       FlagConstraint constraint, bool opposite_cell, Budget& budget) {
  const std::size_t d = total_dim(profile);
  const std::size_t n = profile.size();
  std::vector<FlagPoint> out;
  FlagPoint current;
  current.steps.resize(n);
  std::function<void(std::size_t, const FpMatrix&)> extend = [&](std::size_t i, const FpMatrix& prev) {
    if (i > n) {
      out.push_back(current);
      return;
    }
    FpMatrix lower = prev;
    FpMatrix upper = whole_space(field, d);
    if (constraint == FlagConstraint::omega && i >= 2) lower = subspace_sum(lower, standard_step(field, profile, i - 1));
    if (constraint == FlagConstraint::upsilon && i < n) upper = standard_step(field, profile, i + 1);
    if (!subspace_contains(upper, lower)) return;
    const auto opposite = opposite_step(field, profile, i);
    for_each_subspace_between(lower, upper, prefix(profile, i), budget, [&](const FpMatrix& s) {
      if (opposite_cell && intersection_dim(s, opposite) != 0) return true;
      current.steps[i - 1] = s;
      extend(i + 1, s);
      return true;
    });
  };
  extend(1, zero_subspace(field, d));
  std::sort(out.begin(), out.end());
  return out;
}

FlagPoint flag_of_injective_point(const SubspaceTuple& u, const std::vector<long long>& profile) {
  const std::size_t d = total_dim(profile);
  const auto& field = u[0].field();
  FlagPoint f;
  for (std::size_t i = 1; i <= profile.size(); ++i) {
    const std::size_t at = prefix(profile, i - 1);
    f.steps.push_back(subspace_sum(standard_step(field, profile, i - 1), pad(u[i - 1], at, d)));
  }
  return f;
}

FlagPoint flag_of_projective_point(const SubspaceTuple& u, const std::vector<long long>& profile) {
  const std::size_t d = total_dim(profile);
  const auto& field = u[0].field();
  FlagPoint f;
  for (std::size_t i = 1; i < profile.size(); ++i) f.steps.push_back(pad(u[i], 0, d));
  f.steps.push_back(whole_space(field, d));
  return f;
}

FlagPoint act_block_diagonal(const GroupElement<PrimeField>& g, const FlagPoint& f, const std::vector<VertexIndex>& chain) {
  if (g.size() != chain.size()) throw DimensionMismatch("act_block_diagonal: group element size differs from chain");
  std::vector<std::vector<FpMatrix>> grid;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::vector<FpMatrix> row;
    for (std::size_t j = 0; j < chain.size(); ++j)
      row.push_back(i == j ? g[chain[i]] : FpMatrix(g[chain[i]].field(), g[chain[i]].rows(), g[chain[j]].cols()));
    grid.push_back(std::move(row));
  }
  const auto d = block_assemble(grid, g[chain[0]].field());
  FlagPoint out;
  for (const auto& s : f.steps) out.steps.push_back(image_of(d, s));
  return out;
}

std::string to_string(ZelevinskyMap w) { return w == ZelevinskyMap::zeta ? "zeta" : "eta"; }

ZelevinskyReport verify_zelevinsky_bijection(QuiverPtr q, const DimVector& alpha, const PrimeField& field,
                                             ZelevinskyMap which, Budget& budget) {
  const auto chain = linear_chain(*q);
  require_on(*q, alpha.size(), "dimension vector");
  std::vector<long long> profile;
  for (auto v : chain) profile.push_back(alpha[v]);

  ZelevinskyReport rep;
  rep.which = which;
  rep.alpha = alpha;
  rep.field = field.name();
  const bool zeta = which == ZelevinskyMap::zeta;

  const auto all_flags = enumerate_flags(field, profile, FlagConstraint::none, false, budget);
  rep.flags_total = all_flags.size();
  std::set<FlagPoint> target;
  for (const auto& f : all_flags)
    if ((zeta ? in_omega(f, profile) : in_upsilon(f, profile)) && in_opposite_cell(f, profile)) target.insert(f);
  rep.target_flags = target.size();
  // The pruned enumeration must find the same set.
  const auto pruned = enumerate_flags(field, profile, zeta ? FlagConstraint::omega : FlagConstraint::upsilon, true, budget);
  rep.membership.name = "flag membership";
  if (std::set<FlagPoint>(pruned.begin(), pruned.end()) != target)
    rep.membership.fail({0, "", "pruned flag enumeration disagrees with the filtered full enumeration"});

  rep.equivariance.name = "equivariance";
  const auto group = [&] {
    std::vector<GroupElement<PrimeField>> all;
    budget.require(group_order(field.characteristic(), alpha), "zelevinsky group");
    for_each_group_element(field, alpha, [&](const GroupElement<PrimeField>& g) {
      all.push_back(g);
      return true;
    });
    return all;
  }();
  const auto flag_of = [&](const FpRep& m) {
    return flag_of_matrix(zeta ? zelevinsky_g(m) : dual_zelevinsky_h(m), profile);
  };
  rep.agreement.name = zeta ? "agreement with psi" : "agreement with phi";
  const StabilityParam zero = StabilityParam::zero(q->vertex_count());
  std::set<FlagPoint> image;
  bool into = true;
  for_each_rep(q, field, alpha, budget, [&](std::uint64_t idx, const FpRep& m) {
    ++rep.representations;
    const auto f = flag_of(m);
    image.insert(f);
    ++rep.membership.checked;
    const auto bad_schubert = zeta ? omega_violation(f, profile) : upsilon_violation(f, profile);
    const auto bad_cell = opposite_cell_violation(f, profile);
    if (bad_schubert || bad_cell) {
      into = false;
      std::string what;
      if (bad_schubert) what += std::string(zeta ? "omega" : "upsilon") + " fails at i=" + std::to_string(*bad_schubert) + " ";
      if (bad_cell) what += "opposite cell fails at i=" + std::to_string(*bad_cell);
      rep.membership.fail({idx, describe(m), what});
    }
    ++rep.agreement.checked;
    const auto via = zeta ? flag_of_injective_point(gm_psi(m, zero, budget), profile)
                          : flag_of_projective_point(gm_phi(m, zero, budget), profile);
    if (!(via == f)) rep.agreement.fail({idx, describe(m), "flag from the Grassmannian point differs"});
    for (std::size_t k = 0; k < group.size(); ++k) {
      ++rep.equivariance.checked;
      if (!(flag_of(m.acted_on_by(group[k])) == act_block_diagonal(group[k], f, chain)))
        rep.equivariance.fail({idx, describe(m), "group element #" + std::to_string(k) + " breaks equivariance"});
    }
    return true;
  });
  rep.image_size = image.size();
  rep.injective = image.size() == rep.representations;
  rep.into_target = into;
  rep.onto_target = into && image == target;
  return rep;
}

}  // namespace qml
