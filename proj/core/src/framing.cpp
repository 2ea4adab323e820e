#include "qml/framing.hpp"

#include <sstream>

namespace qml {

std::string to_string(FramedKind k) {
  switch (k) {
    case FramedKind::source_framing:
      return "source_framing";
    case FramedKind::sink_framing:
      return "sink_framing";
    case FramedKind::source_copies:
      return "source_copies";
    case FramedKind::sink_copies:
      return "sink_copies";
  }
  return "?";
}

DimVector FramedQuiver::framed_dim(const DimVector& alpha) const {
  require_on(*base, alpha.size(), "dimension vector");
  std::vector<long long> d(quiver->vertex_count(), 0);
  for (VertexIndex i = 0; i < base->vertex_count(); ++i) {
    d[base_vertex[i]] = alpha[i];
    if (!copy_vertex.empty()) d[copy_vertex[i]] = beta[i];
  }
  if (framing_vertex) d[*framing_vertex] = 1;
  return DimVector(d);
}

FramedQuiver build_framed(QuiverPtr base, const DimVector& beta, FramedKind kind) {
  const auto& q = *base;
  require_on(q, beta.size(), "framing dimension vector");
  for (auto b : beta.values())
    if (b < 0) throw InvalidArgument("negative entry in framing dimension vector");
  const std::size_t n = q.vertex_count();
  FramedQuiver fq{kind, base, beta, nullptr, {}, {}, {}, std::nullopt, {}};
  std::vector<std::string> names;
  std::vector<Quiver::ArrowSpec> arrows = q.arrow_specs();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) fq.base_arrow.push_back(a);
  fq.framing_arrows.resize(n);

  auto add_arrow = [&](VertexIndex i, std::string id, std::string src, std::string dst) {
    fq.framing_arrows[i].push_back(arrows.size());
    arrows.push_back({std::move(id), std::move(src), std::move(dst)});
  };

  switch (kind) {
    case FramedKind::source_framing:
      names.push_back("0");
      fq.framing_vertex = 0;
      for (VertexIndex i = 0; i < n; ++i) {
        fq.base_vertex.push_back(names.size());
        names.push_back(q.vertex_name(i));
      }
      for (VertexIndex i = 0; i < n; ++i)
        for (long long k = 0; k < beta[i]; ++k)
          add_arrow(i, "f:" + q.vertex_name(i) + ":" + std::to_string(k + 1), "0", q.vertex_name(i));
      break;
    case FramedKind::sink_framing:
      for (VertexIndex i = 0; i < n; ++i) {
        fq.base_vertex.push_back(names.size());
        names.push_back(q.vertex_name(i));
      }
      fq.framing_vertex = names.size();
      names.push_back("∞");
      for (VertexIndex i = 0; i < n; ++i)
        for (long long k = 0; k < beta[i]; ++k)
          add_arrow(i, "f:" + q.vertex_name(i) + ":" + std::to_string(k + 1), q.vertex_name(i), "∞");
      break;
    case FramedKind::source_copies:
      for (VertexIndex i = 0; i < n; ++i) {
        fq.copy_vertex.push_back(names.size());
        names.push_back(q.vertex_name(i) + "+");
      }
      for (VertexIndex i = 0; i < n; ++i) {
        fq.base_vertex.push_back(names.size());
        names.push_back(q.vertex_name(i));
      }
      for (VertexIndex i = 0; i < n; ++i) add_arrow(i, "c:" + q.vertex_name(i), q.vertex_name(i) + "+", q.vertex_name(i));
      break;
    case FramedKind::sink_copies:
      for (VertexIndex i = 0; i < n; ++i) {
        fq.base_vertex.push_back(names.size());
        names.push_back(q.vertex_name(i));
      }
      for (VertexIndex i = 0; i < n; ++i) {
        fq.copy_vertex.push_back(names.size());
        names.push_back(q.vertex_name(i) + "-");
      }
      for (VertexIndex i = 0; i < n; ++i) add_arrow(i, "c:" + q.vertex_name(i), q.vertex_name(i), q.vertex_name(i) + "-");
      break;
  }
  fq.quiver = make_quiver(std::move(names), arrows);
  return fq;
}

FramedRep make_framed_rep(FpRep base, std::vector<FpMatrix> framing, FramingSide side, const DimVector& beta) {
  const auto& q = base.quiver();
  require_on(q, beta.size(), "framing dimension vector");
  if (framing.size() != q.vertex_count()) throw DimensionMismatch("one framing matrix per vertex required");
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
    const auto b = static_cast<std::size_t>(beta[i]);
    const bool ok = side == FramingSide::incoming ? (framing[i].rows() == base.vdim(i) && framing[i].cols() == b)
                                                  : (framing[i].rows() == b && framing[i].cols() == base.vdim(i));
    if (!ok) throw DimensionMismatch("framing matrix at '" + q.vertex_name(i) + "' has shape " + framing[i].shape());
  }
  return FramedRep{std::move(base), std::move(framing), side, beta};
}

FpRep embed(const FramedQuiver& fq, const FramedRep& fr) {
  const auto& q = *fq.base;
  if (!(fr.base.quiver() == q)) throw DimensionMismatch("embed: representation is on a different quiver");
  if (fr.beta != fq.beta) throw DimensionMismatch("embed: framing dimension differs from the framed quiver");
  if ((fr.side == FramingSide::incoming) != fq.incoming())
    throw DimensionMismatch("embed: framing orientation does not match the framed quiver");
  const auto& field = fr.base.field();
  std::vector<FpMatrix> maps(fq.quiver->arrow_count(), FpMatrix(field, 0, 0));
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) maps[fq.base_arrow[a]] = fr.base.map(a);
  const bool copies = !fq.copy_vertex.empty();
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
    const auto& f = fr.framing[i];
    const auto& arrows = fq.framing_arrows[i];
    if (copies) {
      maps[arrows[0]] = f;
    } else {
      for (std::size_t k = 0; k < arrows.size(); ++k)
        maps[arrows[k]] = fr.side == FramingSide::incoming ? f.block(0, k, f.rows(), 1) : f.block(k, 0, 1, f.cols());
    }
  }
  return FpRep(fq.quiver, field, fq.framed_dim(fr.base.dim()), std::move(maps));
}

FramedRep split(const FramedQuiver& fq, const FpRep& r) {
  const auto& q = *fq.base;
  if (!(r.quiver() == *fq.quiver)) throw DimensionMismatch("split: representation is not on the framed quiver");
  const auto& field = r.field();
  DimVector alpha = DimVector::zero(q.vertex_count());
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) alpha[i] = r.dim()[fq.base_vertex[i]];
  if (fq.framing_vertex && r.dim()[*fq.framing_vertex] != 1)
    throw DimensionMismatch("split: framing vertex must have dimension 1");
  if (!fq.copy_vertex.empty())
    for (VertexIndex i = 0; i < q.vertex_count(); ++i)
      if (r.dim()[fq.copy_vertex[i]] != fq.beta[i]) throw DimensionMismatch("split: copy vertex dimension differs from beta");
  std::vector<FpMatrix> maps;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) maps.push_back(r.map(fq.base_arrow[a]));
  FpRep base(fq.base, field, alpha, std::move(maps));
  const FramingSide side = fq.incoming() ? FramingSide::incoming : FramingSide::outgoing;
  std::vector<FpMatrix> framing;
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
    const auto& arrows = fq.framing_arrows[i];
    if (!fq.copy_vertex.empty()) {
      framing.push_back(r.map(arrows[0]));
      continue;
    }
    std::vector<FpMatrix> parts;
    for (auto a : arrows) parts.push_back(r.map(a));
    framing.push_back(side == FramingSide::incoming ? hstack(parts, field, base.vdim(i))
                                                    : vstack(parts, field, base.vdim(i)));
  }
  return make_framed_rep(std::move(base), std::move(framing), side, fq.beta);
}

FramedRep act(const GroupElement<PrimeField>& h, const GroupElement<PrimeField>& g, const FramedRep& fr) {
  const auto n = fr.base.quiver().vertex_count();
  if (h.size() != n || g.size() != n) throw DimensionMismatch("act: group elements must live on the base vertices");
  std::vector<FpMatrix> framing;
  for (VertexIndex i = 0; i < n; ++i) {
    if (fr.side == FramingSide::incoming)
      framing.push_back(g[i] * fr.framing[i] * invert(h[i]));
    else
      framing.push_back(h[i] * fr.framing[i] * invert(g[i]));
  }
  return FramedRep{fr.base.acted_on_by(g), std::move(framing), fr.side, fr.beta};
}

StabilityParam framed_param_c(const FramedQuiver& fq, const DimVector& alpha) {
  if (!fq.framing_vertex) throw InvalidArgument("c parameters live on the single-vertex framings");
  const long long norm = alpha.norm();
  std::vector<long long> c(fq.quiver->vertex_count(), 0);
  const bool source = fq.kind == FramedKind::source_framing;
  for (auto v : fq.base_vertex) c[v] = source ? -1 : 1;
  c[*fq.framing_vertex] = source ? norm : -norm;
  return StabilityParam(c);
}

namespace {

void require_balanced(const StabilityParam& theta, const DimVector& alpha) {
  if (theta_value(theta, alpha) != 0)
    throw ThetaAlphaNonzero("theta(alpha) = " + std::to_string(theta_value(theta, alpha)) + ", expected 0");
}

}  // namespace

StabilityParam framed_param_theta(const FramedQuiver& fq, const StabilityParam& theta, const DimVector& alpha,
                                  long long n) {
  require_on(*fq.base, theta.size(), "stability parameter");
  require_balanced(theta, alpha);
  if (fq.copy_vertex.empty()) throw InvalidArgument("theta+/- live on the copy framings");
  std::vector<long long> t(fq.quiver->vertex_count(), 0);
  for (VertexIndex i = 0; i < fq.base->vertex_count(); ++i) {
    if (fq.kind == FramedKind::source_copies) {
      const bool plus = theta[i] >= 0;
      t[fq.copy_vertex[i]] = plus ? n : 0;
      t[fq.base_vertex[i]] = plus ? theta[i] - n : theta[i];
    } else {
      const bool minus = theta[i] <= 0;
      t[fq.base_vertex[i]] = minus ? theta[i] + n : theta[i];
      t[fq.copy_vertex[i]] = minus ? -n : 0;
    }
  }
  return StabilityParam(t);
}

StabilityParam framed_param_eta(const FramedQuiver& fq, const StabilityParam& theta, const DimVector& alpha,
                                long long n) {
  require_on(*fq.base, theta.size(), "stability parameter");
  require_balanced(theta, alpha);
  if (!fq.framing_vertex) throw InvalidArgument("eta+/- live on the single-vertex framings");
  auto split = theta_split(theta);
  std::vector<long long> t(fq.quiver->vertex_count(), 0);
  const bool source = fq.kind == FramedKind::source_framing;
  const auto& side = source ? split.plus : split.minus;
  for (VertexIndex i = 0; i < fq.base->vertex_count(); ++i)
    t[fq.base_vertex[i]] = side[i] ? theta[i] + (source ? -n : n) : theta[i];
  const long long norm = restricted_dim(alpha, side).norm();
  t[*fq.framing_vertex] = source ? n * norm : -n * norm;
  return StabilityParam(t);
}

long long default_N(const StabilityParam& theta, const DimVector& alpha) {
  if (theta.size() != alpha.size()) throw DimensionMismatch("stability parameter and dimension vector sizes differ");
  long long s = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += (theta[i] < 0 ? -theta[i] : theta[i]) * alpha[i];
  return s;
}

void for_each_framed_rep(const FramedQuiver& fq, const PrimeField& field, const DimVector& alpha, Budget& budget,
                         const std::function<bool(std::uint64_t, const FramedRep&)>& fn) {
  for_each_rep(fq.quiver, field, fq.framed_dim(alpha), budget,
               [&](std::uint64_t i, const FpRep& r) { return fn(i, split(fq, r)); });
}

std::string describe(const FramedRep& fr) {
  std::ostringstream os;
  const auto& q = fr.base.quiver();
  os << "M:";
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    os << " " << q.arrow(a).id << "=[";
    const auto& m = fr.base.map(a);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r) os << ";";
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    }
    os << "]";
  }
  os << (fr.side == FramingSide::incoming ? " A:" : " B:");
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
    os << " " << q.vertex_name(i) << "=[";
    const auto& m = fr.framing[i];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r) os << ";";
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    }
    os << "]";
  }
  return os.str();
}

namespace {

std::string flags(std::initializer_list<std::pair<const char*, bool>> items) {
  std::string s;
  for (const auto& [k, v] : items) s += std::string(s.empty() ? "" : " ") + k + "=" + (v ? "1" : "0");
  return s;
}

bool all_equal(std::initializer_list<bool> xs) {
  auto first = *xs.begin();
  for (bool x : xs)
    if (x != first) return false;
  return true;
}

/// No proper subrepresentation of M contains im A.
bool image_generates(const FpRep& m, const std::vector<FpMatrix>& a, Budget& budget) {
  bool generates = true;
  for_each_subrepresentation(m, std::nullopt, budget, [&](const SubspaceTuple& u) {
    if (u.dim() == m.dim()) return true;
    for (VertexIndex i = 0; i < m.quiver().vertex_count(); ++i)
      if (!subspace_contains(u[i], column_space(a[i]))) return true;
    generates = false;
    return false;
  });
  return generates;
}

/// No nonzero subrepresentation of M lies inside ker B.
bool kernel_cogenerates(const FpRep& m, const std::vector<FpMatrix>& b, Budget& budget) {
  bool ok = true;
  for_each_subrepresentation(m, std::nullopt, budget, [&](const SubspaceTuple& u) {
    if (u.dim().is_zero()) return true;
    for (VertexIndex i = 0; i < m.quiver().vertex_count(); ++i)
      if (!(b[i] * u[i].transpose()).is_zero()) return true;
    ok = false;
    return false;
  });
  return ok;
}

std::string beta_name(const DimVector& beta) {
  std::string s;
  for (auto b : beta.values()) s += (s.empty() ? "" : ",") + std::to_string(b);
  return s;
}

}  // namespace

std::vector<CheckReport> verify_engel_reineke(QuiverPtr q, const DimVector& alpha, const DimVector& beta,
                                              const PrimeField& field, Budget& budget, unsigned workers) {
  std::vector<CheckReport> out;
  for (auto kind : {FramedKind::source_framing, FramedKind::sink_framing}) {
    const auto fq = build_framed(q, beta, kind);
    const auto c = framed_param_c(fq, alpha);
    const auto dim = fq.framed_dim(alpha);
    const auto total = rep_space_size(*fq.quiver, dim, field.characteristic());
    budget.require(total, "framed representation space enumeration");
    const bool source = kind == FramedKind::source_framing;
    auto report = sweep(std::string(source ? "engel-reineke/source" : "engel-reineke/sink") + " beta=" + beta_name(beta),
                        total, workers, [&](std::uint64_t idx) {
                          budget.charge(1, "framed representation space enumeration");
                          const auto r = rep_at_index(fq.quiver, field, dim, idx);
                          const auto fr = split(fq, r);
                          const auto v = check_stability(r, c, budget);
                          bool sst = v.semistable(), st = v.stable(), sub, deg0;
                          if (source) {
                            sub = image_generates(fr.base, fr.framing, budget);
                            deg0 = is_surjective(framed_phi(fr.base, fr.framing, beta).second);
                          } else {
                            sub = kernel_cogenerates(fr.base, fr.framing, budget);
                            deg0 = is_injective(framed_psi(fr.base, fr.framing, beta).second);
                          }
                          PointOutcome o;
                          if (sst) o.tags.push_back("semistable");
                          if (st) o.tags.push_back("stable");
                          if (!all_equal({sst, st, sub, deg0})) {
                            o.point = describe(fr);
                            o.failure = flags({{"semistable", sst},
                                               {"stable", st},
                                               {source ? "no_proper_subrep_contains_image" : "no_subrep_inside_kernel", sub},
                                               {source ? "phi_surjective" : "psi_injective", deg0}});
                          }
                          return o;
                        });
    out.push_back(std::move(report));
  }
  return out;
}

namespace {

void note_small_n(std::vector<CheckReport>& reports, long long n, long long dflt) {
  if (n >= dflt) return;
  for (auto& r : reports)
    if (!r.passed())
      r.notes.push_back("N=" + std::to_string(n) + " is below default_N=" + std::to_string(dflt) +
                        "; the failures show this N is insufficient");
}

}  // namespace

std::vector<CheckReport> verify_theta_pm(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                         const PrimeField& field, long long n, Budget& budget, unsigned workers) {
  require_on(*q, alpha.size(), "dimension vector");
  require_on(*q, theta.size(), "stability parameter");
  require_balanced(theta, alpha);
  const auto verdicts = stability_table(q, alpha, theta, field, budget, workers);
  const auto split_sets = theta_split(theta);
  std::vector<CheckReport> out;
  for (auto kind : {FramedKind::source_copies, FramedKind::sink_copies}) {
    const bool source = kind == FramedKind::source_copies;
    const auto& side = source ? split_sets.plus : split_sets.minus;
    const auto fq = build_framed(q, restricted_dim(alpha, side), kind);
    const auto t = framed_param_theta(fq, theta, alpha, n);
    const auto dim = fq.framed_dim(alpha);
    const auto total = rep_space_size(*fq.quiver, dim, field.characteristic());
    budget.require(total, "framed representation space enumeration");
    auto report = sweep(std::string(source ? "theta-pm/plus" : "theta-pm/minus") + " N=" + std::to_string(n), total,
                        workers, [&](std::uint64_t idx) {
                          budget.charge(1, "framed representation space enumeration");
                          const auto r = rep_at_index(fq.quiver, field, dim, idx);
                          const auto fr = split(fq, r);
                          const auto v = check_stability(r, t, budget);
                          const auto& mv = verdicts.at(rep_index(fr.base));
                          bool invertible = true;
                          for (VertexIndex i = 0; i < q->vertex_count(); ++i)
                            if (side[i] && !is_invertible(fr.framing[i])) invertible = false;
                          const bool want_sst = mv.semistable() && invertible;
                          const bool want_st = mv.stable() && invertible;
                          PointOutcome o;
                          if (v.semistable()) o.tags.push_back("semistable");
                          if (v.stable()) o.tags.push_back("stable");
                          if (v.semistable() != want_sst || v.stable() != want_st) {
                            o.point = describe(fr);
                            o.failure = flags({{"framed_semistable", v.semistable()},
                                               {"framed_stable", v.stable()},
                                               {"base_semistable", mv.semistable()},
                                               {"base_stable", mv.stable()},
                                               {"framing_invertible", invertible}});
                          }
                          return o;
                        });
    out.push_back(std::move(report));
  }
  note_small_n(out, n, default_N(theta, alpha));
  return out;
}

std::vector<CheckReport> verify_framed_stability(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                                 const PrimeField& field, long long n, Budget& budget,
                                                 unsigned workers) {
  require_on(*q, alpha.size(), "dimension vector");
  require_on(*q, theta.size(), "stability parameter");
  require_balanced(theta, alpha);
  const auto split_sets = theta_split(theta);
  std::vector<CheckReport> out;
  for (auto kind : {FramedKind::source_framing, FramedKind::sink_framing}) {
    const bool source = kind == FramedKind::source_framing;
    const auto beta = restricted_dim(alpha, source ? split_sets.plus : split_sets.minus);
    const auto fq = build_framed(q, beta, kind);
    const auto eta = framed_param_eta(fq, theta, alpha, n);
    const auto dim = fq.framed_dim(alpha);
    const auto total = rep_space_size(*fq.quiver, dim, field.characteristic());
    budget.require(total, "framed representation space enumeration");
    auto report = sweep(std::string(source ? "framed-stability/plus" : "framed-stability/minus") + " N=" +
                            std::to_string(n),
                        total, workers, [&](std::uint64_t idx) {
                          budget.charge(1, "framed representation space enumeration");
                          const auto r = rep_at_index(fq.quiver, field, dim, idx);
                          const auto fr = split(fq, r);
                          const auto v = check_stability(r, eta, budget);
                          const bool deg0 = source ? is_surjective(framed_phi(fr.base, fr.framing, beta).second)
                                                   : is_injective(framed_psi(fr.base, fr.framing, beta).second);
                          PointOutcome o;
                          if (v.semistable()) o.tags.push_back("semistable");
                          if (v.stable()) o.tags.push_back("stable");
                          if (deg0) o.tags.push_back("degree_zero");
                          if (!all_equal({v.semistable(), v.stable(), deg0})) {
                            o.point = describe(fr);
                            o.failure = flags({{"semistable", v.semistable()}, {"stable", v.stable()}, {"degree_zero", deg0}});
                          }
                          return o;
                        });
    out.push_back(std::move(report));
  }
  note_small_n(out, n, default_N(theta, alpha));
  return out;
}

}  // namespace qml
