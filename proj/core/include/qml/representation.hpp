#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qml/group.hpp"
#include "qml/matrix.hpp"
#include "qml/quiver.hpp"

namespace qml {

/// A representation of a quiver: one matrix of shape dim[t(a)] x dim[s(a)]
/// per arrow, acting on standard coordinate spaces.
template <class F>
class Representation {
 public:
  Representation(QuiverPtr quiver, F field, DimVector dim, std::vector<Matrix<F>> maps)
      : quiver_(std::move(quiver)), field_(std::move(field)), dim_(std::move(dim)), maps_(std::move(maps)) {
    require_on(*quiver_, dim_.size(), "dimension vector");
    for (auto d : dim_.values())
      if (d < 0) throw InvalidArgument("negative entry in dimension vector");
    if (maps_.size() != quiver_->arrow_count())
      throw DimensionMismatch("representation needs one matrix per arrow");
    for (ArrowIndex a = 0; a < maps_.size(); ++a) {
      const auto& arr = quiver_->arrow(a);
      if (maps_[a].rows() != vdim(arr.dst) || maps_[a].cols() != vdim(arr.src))
        throw DimensionMismatch("arrow '" + arr.id + "' needs a " + std::to_string(vdim(arr.dst)) + "x" +
                                std::to_string(vdim(arr.src)) + " matrix, got " + maps_[a].shape());
    }
  }

  static Representation zero(QuiverPtr quiver, const F& field, const DimVector& dim) {
    std::vector<Matrix<F>> maps;
    for (const auto& arr : quiver->arrows())
      maps.emplace_back(field, static_cast<std::size_t>(dim[arr.dst]), static_cast<std::size_t>(dim[arr.src]));
    return Representation(std::move(quiver), field, dim, std::move(maps));
  }

  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  const F& field() const { return field_; }
  const DimVector& dim() const { return dim_; }
  std::size_t vdim(VertexIndex v) const { return static_cast<std::size_t>(dim_[v]); }
  const Matrix<F>& map(ArrowIndex a) const { return maps_.at(a); }
  const std::vector<Matrix<F>>& maps() const { return maps_; }

  /// M_p: product of arrow matrices along p; identity for a trivial path.
  Matrix<F> path_action(const Path& p) const {
    Matrix<F> m = Matrix<F>::identity(field_, vdim(p.source));
    for (ArrowIndex a : p.arrows) m = maps_[a] * m;
    return m;
  }

  /// g . M = (g_t M_a g_s^-1)_a.
  Representation acted_on_by(const GroupElement<F>& g) const {
    auto ginv = g.inverse();
    std::vector<Matrix<F>> maps;
    for (ArrowIndex a = 0; a < maps_.size(); ++a) {
      const auto& arr = quiver_->arrow(a);
      maps.push_back(g[arr.dst] * maps_[a] * ginv[arr.src]);
    }
    return Representation(quiver_, field_, dim_, std::move(maps));
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return *a.quiver_ == *b.quiver_ && a.dim_ == b.dim_ && a.maps_ == b.maps_;
  }

 private:
  QuiverPtr quiver_;
  F field_;
  DimVector dim_;
  std::vector<Matrix<F>> maps_;
};

using FpRep = Representation<PrimeField>;
using QRep = Representation<RationalField>;

/// Label of one coordinate of a standard module: a path (or its dual q* when
/// `dual`), a copy index in the multiplicity space, and the summand it came from.
struct BasisLabel {
  std::size_t summand = 0;
  Path path;
  std::size_t copy = 0;
  bool dual = false;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

std::string label_to_string(const Quiver& q, const BasisLabel& l);

/// Per-vertex labels of a module's coordinates.
using LabeledBasis = std::vector<std::vector<BasisLabel>>;

template <class F>
struct LabeledRep {
  Representation<F> rep;
  LabeledBasis labels;
};

/// Per-vertex linear maps f_i: M_i -> N_i.
template <class F>
struct Homomorphism {
  std::vector<Matrix<F>> components;

  const Matrix<F>& operator[](std::size_t i) const { return components.at(i); }
  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

template <class F>
LabeledRep<F> simple_module(QuiverPtr q, const F& field, VertexIndex i) {
  DimVector d = DimVector::unit(q->vertex_count(), i);
  LabeledBasis labels(q->vertex_count());
  labels[i].push_back({i, Path{i, i, {}}, 0, false});
  return {Representation<F>::zero(std::move(q), field, d), std::move(labels)};
}

/// P(i): basis of P(i)_j is the paths i -> j; arrows act by concatenation.
template <class F>
LabeledRep<F> projective_module(QuiverPtr q, const F& field, VertexIndex i) {
  const std::size_t n = q->vertex_count();
  std::vector<std::vector<Path>> paths(n);
  DimVector d = DimVector::zero(n);
  LabeledBasis labels(n);
  for (VertexIndex j = 0; j < n; ++j) {
    paths[j] = enumerate_paths(*q, i, j);
    d[j] = static_cast<long long>(paths[j].size());
    for (const auto& p : paths[j]) labels[j].push_back({i, p, 0, false});
  }
  std::vector<Matrix<F>> maps;
  for (ArrowIndex a = 0; a < q->arrow_count(); ++a) {
    const auto& arr = q->arrow(a);
    Matrix<F> m(field, paths[arr.dst].size(), paths[arr.src].size());
    for (std::size_t c = 0; c < paths[arr.src].size(); ++c) {
      Path ext = paths[arr.src][c].then(*q, a);
      for (std::size_t r = 0; r < paths[arr.dst].size(); ++r)
        if (paths[arr.dst][r] == ext) m(r, c) = field.one();
    }
    maps.push_back(std::move(m));
  }
  return {Representation<F>(q, field, d, std::move(maps)), std::move(labels)};
}

/// I(i): basis of I(i)_j is the duals q* of paths q: j -> i; an arrow a
/// sends q* to r* when q = a followed by r, and to 0 otherwise.
template <class F>
LabeledRep<F> injective_module(QuiverPtr q, const F& field, VertexIndex i) {
  const std::size_t n = q->vertex_count();
  std::vector<std::vector<Path>> paths(n);
  DimVector d = DimVector::zero(n);
  LabeledBasis labels(n);
  for (VertexIndex j = 0; j < n; ++j) {
    paths[j] = enumerate_paths(*q, j, i);
    d[j] = static_cast<long long>(paths[j].size());
    for (const auto& p : paths[j]) labels[j].push_back({i, p, 0, true});
  }
  std::vector<Matrix<F>> maps;
  for (ArrowIndex a = 0; a < q->arrow_count(); ++a) {
    const auto& arr = q->arrow(a);
    Matrix<F> m(field, paths[arr.dst].size(), paths[arr.src].size());
    for (std::size_t c = 0; c < paths[arr.src].size(); ++c) {
      const Path& qp = paths[arr.src][c];
      if (qp.arrows.empty() || qp.arrows.front() != a) continue;
      Path rest{arr.dst, qp.target, {qp.arrows.begin() + 1, qp.arrows.end()}};
      for (std::size_t r = 0; r < paths[arr.dst].size(); ++r)
        if (paths[arr.dst][r] == rest) m(r, c) = field.one();
    }
    maps.push_back(std::move(m));
  }
  return {Representation<F>(q, field, d, std::move(maps)), std::move(labels)};
}

/// Blockwise direct sum; the summand index of every label becomes the
/// position of its summand in `parts`.
template <class F>
LabeledRep<F> direct_sum(const std::vector<LabeledRep<F>>& parts, QuiverPtr q, const F& field) {
  const std::size_t n = q->vertex_count();
  DimVector d = DimVector::zero(n);
  LabeledBasis labels(n);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (!(parts[s].rep.quiver() == *q)) throw DimensionMismatch("direct_sum: summands live on different quivers");
    d = d + parts[s].rep.dim();
    for (VertexIndex v = 0; v < n; ++v)
      for (auto l : parts[s].labels[v]) {
        l.summand = s;
        labels[v].push_back(std::move(l));
      }
  }
  std::vector<Matrix<F>> maps;
  for (ArrowIndex a = 0; a < q->arrow_count(); ++a) {
    std::vector<Matrix<F>> blocks;
    for (const auto& p : parts) blocks.push_back(p.rep.map(a));
    maps.push_back(block_diagonal(blocks, field));
  }
  return {Representation<F>(q, field, d, std::move(maps)), std::move(labels)};
}

/// R tensor k^m: basis p (x) e_c ordered path-major, so each arrow matrix is
/// the Kronecker product R_a (x) Id_m.
template <class F>
LabeledRep<F> tensor_by_space(const LabeledRep<F>& r, std::size_t m) {
  const auto& q = r.rep.quiver_ptr();
  const F& k = r.rep.field();
  const std::size_t n = q->vertex_count();
  DimVector d = DimVector::zero(n);
  LabeledBasis labels(n);
  for (VertexIndex v = 0; v < n; ++v) {
    d[v] = r.rep.dim()[v] * static_cast<long long>(m);
    for (const auto& l : r.labels[v])
      for (std::size_t c = 0; c < m; ++c) {
        BasisLabel nl = l;
        nl.copy = c;
        labels[v].push_back(nl);
      }
  }
  std::vector<Matrix<F>> maps;
  for (ArrowIndex a = 0; a < q->arrow_count(); ++a) {
    const auto& src = r.rep.map(a);
    Matrix<F> big(k, src.rows() * m, src.cols() * m);
    for (std::size_t i = 0; i < src.rows(); ++i)
      for (std::size_t j = 0; j < src.cols(); ++j)
        for (std::size_t c = 0; c < m; ++c) big(i * m + c, j * m + c) = src(i, j);
    maps.push_back(std::move(big));
  }
  return {Representation<F>(q, k, d, std::move(maps)), std::move(labels)};
}

/// P_mult = (+)_i P(i) (x) k^{mult_i}; summand index of each label is the vertex i.
template <class F>
LabeledRep<F> projective_sum(QuiverPtr q, const F& field, const DimVector& mult) {
  require_on(*q, mult.size(), "multiplicity vector");
  std::vector<LabeledRep<F>> parts;
  std::vector<VertexIndex> owner;
  for (VertexIndex i = 0; i < q->vertex_count(); ++i) {
    parts.push_back(tensor_by_space(projective_module(q, field, i), static_cast<std::size_t>(mult[i])));
    owner.push_back(i);
  }
  return direct_sum(parts, q, field);
}

/// I_mult = (+)_i I(i) (x) k^{mult_i}; summand index of each label is the vertex i.
template <class F>
LabeledRep<F> injective_sum(QuiverPtr q, const F& field, const DimVector& mult) {
  require_on(*q, mult.size(), "multiplicity vector");
  std::vector<LabeledRep<F>> parts;
  for (VertexIndex i = 0; i < q->vertex_count(); ++i)
    parts.push_back(tensor_by_space(injective_module(q, field, i), static_cast<std::size_t>(mult[i])));
  return direct_sum(parts, q, field);
}

template <class F>
bool is_homomorphism(const Homomorphism<F>& f, const Representation<F>& m, const Representation<F>& n) {
  const auto& q = m.quiver();
  if (f.components.size() != q.vertex_count()) return false;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v)
    if (f[v].rows() != n.vdim(v) || f[v].cols() != m.vdim(v)) return false;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(n.map(a) * f[arr.src] == f[arr.dst] * m.map(a))) return false;
  }
  return true;
}

/// g o f.
template <class F>
Homomorphism<F> compose(const Homomorphism<F>& g, const Homomorphism<F>& f) {
  if (g.components.size() != f.components.size()) throw DimensionMismatch("compose: vertex count differs");
  Homomorphism<F> h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(g[v] * f[v]);
  return h;
}

template <class F>
bool is_surjective(const Homomorphism<F>& f) {
  for (const auto& c : f.components)
    if (rank(c) != c.rows()) return false;
  return true;
}

template <class F>
bool is_injective(const Homomorphism<F>& f) {
  for (const auto& c : f.components)
    if (rank(c) != c.cols()) return false;
  return true;
}

/// Concatenation of the row-major entries of every component.
template <class F>
std::vector<typename F::Element> flatten(const Homomorphism<F>& f) {
  std::vector<typename F::Element> out;
  for (const auto& c : f.components) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

/// Basis of Hom(M, N): the solution space of N_a f_s(a) = f_t(a) M_a.
template <class F>
std::vector<Homomorphism<F>> hom_basis(const Representation<F>& m, const Representation<F>& n) {
  if (!(m.quiver() == n.quiver())) throw DimensionMismatch("hom: representations live on different quivers");
  const auto& q = m.quiver();
  const F& k = m.field();
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + n.vdim(v) * m.vdim(v);
  const std::size_t nvars = offset.back();
  auto var = [&](VertexIndex v, std::size_t r, std::size_t c) { return offset[v] + r * m.vdim(v) + c; };

  std::size_t neq = 0;
  for (const auto& arr : q.arrows()) neq += n.vdim(arr.dst) * m.vdim(arr.src);
  Matrix<F> system(k, neq, nvars);
  std::size_t row = 0;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& na = n.map(a);
    const auto& ma = m.map(a);
    for (std::size_t r = 0; r < n.vdim(arr.dst); ++r)
      for (std::size_t c = 0; c < m.vdim(arr.src); ++c, ++row) {
        // (N_a f_s)[r][c] - (f_t M_a)[r][c]
        for (std::size_t l = 0; l < n.vdim(arr.src); ++l) {
          auto& e = system(row, var(arr.src, l, c));
          e = k.add(e, na(r, l));
        }
        for (std::size_t l = 0; l < m.vdim(arr.dst); ++l) {
          auto& e = system(row, var(arr.dst, r, l));
          e = k.sub(e, ma(l, c));
        }
      }
  }
  auto ker = kernel_basis(system);
  std::vector<Homomorphism<F>> basis;
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    Homomorphism<F> f;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      Matrix<F> comp(k, n.vdim(v), m.vdim(v));
      for (std::size_t r = 0; r < n.vdim(v); ++r)
        for (std::size_t c = 0; c < m.vdim(v); ++c) comp(r, c) = ker(var(v, r, c), b);
      f.components.push_back(std::move(comp));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

template <class F>
std::size_t hom_dim(const Representation<F>& m, const Representation<F>& n) {
  return hom_basis(m, n).size();
}

/// dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>.
template <class F>
std::size_t ext_dim(const Representation<F>& m, const Representation<F>& n) {
  long long e = static_cast<long long>(hom_dim(m, n)) - euler_form(m.quiver(), m.dim(), n.dim());
  if (e < 0) throw Error("ext_dim: negative value, Hom computation is inconsistent");
  return static_cast<std::size_t>(e);
}

/// 0 -> P1 --d--> P0 --phi--> M -> 0 with P0 = (+)_i P(i) (x) M_i and
/// P1 = (+)_a P(t(a)) (x) M_s(a); d(q (x) v) = qa (x) v - q (x) M_a v.
template <class F>
struct ProjectiveResolution {
  LabeledRep<F> p0;
  LabeledRep<F> p1;
  Homomorphism<F> d;
  Homomorphism<F> phi;
};

/// 0 -> M --psi--> I0 --delta--> I1 -> 0 with I0 = (+)_i I(i) (x) M_i and
/// I1 = (+)_a I(s(a)) (x) M_t(a).
template <class F>
struct InjectiveResolution {
  LabeledRep<F> i0;
  LabeledRep<F> i1;
  Homomorphism<F> psi;
  Homomorphism<F> delta;
};

namespace detail {

template <class F>
std::size_t find_label(const std::vector<BasisLabel>& labels, std::size_t summand, const Path& p, std::size_t copy) {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k].summand == summand && labels[k].copy == copy && labels[k].path == p) return k;
  throw Error("internal: basis label not found");
}

}  // namespace detail

/// phi_{M,A}: P_beta -> M with p (x) w |-> M_p A_s(p) w. A_i has shape dim M_i x beta_i.
template <class F>
std::pair<LabeledRep<F>, Homomorphism<F>> framed_phi(const Representation<F>& m, const std::vector<Matrix<F>>& a,
                                                      const DimVector& beta) {
  const auto& q = m.quiver();
  require_on(q, beta.size(), "framing dimension vector");
  if (a.size() != q.vertex_count()) throw DimensionMismatch("framed_phi: one framing matrix per vertex required");
  for (VertexIndex i = 0; i < q.vertex_count(); ++i)
    if (a[i].rows() != m.vdim(i) || a[i].cols() != static_cast<std::size_t>(beta[i]))
      throw DimensionMismatch("framed_phi: A at vertex '" + q.vertex_name(i) + "' has shape " + a[i].shape());
  auto pb = projective_sum(m.quiver_ptr(), m.field(), beta);
  Homomorphism<F> f;
  for (VertexIndex j = 0; j < q.vertex_count(); ++j) {
    Matrix<F> comp(m.field(), m.vdim(j), pb.rep.vdim(j));
    std::size_t col = 0;
    while (col < pb.labels[j].size()) {
      const auto& l = pb.labels[j][col];
      const VertexIndex i = l.path.source;
      Matrix<F> blk = m.path_action(l.path) * a[i];
      comp.set_block(0, col, blk);
      col += blk.cols();
    }
    f.components.push_back(std::move(comp));
  }
  return {std::move(pb), std::move(f)};
}

/// psi_{M,B}: M -> I_beta with v |-> sum_q q* (x) B_t(q) M_q v. B_i has shape beta_i x dim M_i.
template <class F>
std::pair<LabeledRep<F>, Homomorphism<F>> framed_psi(const Representation<F>& m, const std::vector<Matrix<F>>& b,
                                                      const DimVector& beta) {
  const auto& q = m.quiver();
  require_on(q, beta.size(), "framing dimension vector");
  if (b.size() != q.vertex_count()) throw DimensionMismatch("framed_psi: one framing matrix per vertex required");
  for (VertexIndex i = 0; i < q.vertex_count(); ++i)
    if (b[i].cols() != m.vdim(i) || b[i].rows() != static_cast<std::size_t>(beta[i]))
      throw DimensionMismatch("framed_psi: B at vertex '" + q.vertex_name(i) + "' has shape " + b[i].shape());
  auto ib = injective_sum(m.quiver_ptr(), m.field(), beta);
  Homomorphism<F> f;
  for (VertexIndex j = 0; j < q.vertex_count(); ++j) {
    Matrix<F> comp(m.field(), ib.rep.vdim(j), m.vdim(j));
    std::size_t row = 0;
    while (row < ib.labels[j].size()) {
      const auto& l = ib.labels[j][row];
      const VertexIndex t = l.path.target;
      Matrix<F> blk = b[t] * m.path_action(l.path);
      comp.set_block(row, 0, blk);
      row += blk.rows();
    }
    f.components.push_back(std::move(comp));
  }
  return {std::move(ib), std::move(f)};
}

/// Identity framing on the marked vertices: A_i = Id for marked i, an
/// empty dim_i x 0 matrix elsewhere.
template <class F>
std::vector<Matrix<F>> identity_framing(const Representation<F>& m, const std::vector<bool>& vertex_set,
                                        bool columns_are_framing) {
  std::vector<Matrix<F>> out;
  for (VertexIndex i = 0; i < m.quiver().vertex_count(); ++i) {
    if (vertex_set.at(i))
      out.push_back(Matrix<F>::identity(m.field(), m.vdim(i)));
    else if (columns_are_framing)
      out.emplace_back(m.field(), m.vdim(i), 0);
    else
      out.emplace_back(m.field(), 0, m.vdim(i));
  }
  return out;
}

/// phi_M: P+ -> M for P+ = (+)_{theta_i >= 0} P(i) (x) V_i.
template <class F>
std::pair<LabeledRep<F>, Homomorphism<F>> canonical_phi(const Representation<F>& m, const StabilityParam& theta) {
  require_on(m.quiver(), theta.size(), "stability parameter");
  auto split = theta_split(theta);
  return framed_phi(m, identity_framing(m, split.plus, true), restricted_dim(m.dim(), split.plus));
}

/// psi_M: M -> I- for I- = (+)_{theta_i <= 0} I(i) (x) V_i.
template <class F>
std::pair<LabeledRep<F>, Homomorphism<F>> canonical_psi(const Representation<F>& m, const StabilityParam& theta) {
  require_on(m.quiver(), theta.size(), "stability parameter");
  auto split = theta_split(theta);
  return framed_psi(m, identity_framing(m, split.minus, false), restricted_dim(m.dim(), split.minus));
}

template <class F>
ProjectiveResolution<F> projective_resolution(const Representation<F>& m) {
  const auto& qp = m.quiver_ptr();
  const auto& q = *qp;
  const F& k = m.field();
  auto [p0, phi] = framed_phi(m, identity_framing(m, std::vector<bool>(q.vertex_count(), true), true), m.dim());

  std::vector<LabeledRep<F>> parts;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a)
    parts.push_back(tensor_by_space(projective_module(qp, k, q.arrow(a).dst), m.vdim(q.arrow(a).src)));
  auto p1 = direct_sum(parts, qp, k);

  Homomorphism<F> d;
  for (VertexIndex j = 0; j < q.vertex_count(); ++j) {
    Matrix<F> comp(k, p0.rep.vdim(j), p1.rep.vdim(j));
    for (std::size_t col = 0; col < p1.labels[j].size(); ++col) {
      const auto& l = p1.labels[j][col];
      const ArrowIndex a = l.summand;
      const auto& arr = q.arrow(a);
      // q (x) v with q: t(a) -> j, v = e_copy in M_s(a).
      Path qa{arr.src, l.path.target, {a}};
      qa.arrows.insert(qa.arrows.end(), l.path.arrows.begin(), l.path.arrows.end());
      auto r = detail::find_label<F>(p0.labels[j], arr.src, qa, l.copy);
      comp(r, col) = k.add(comp(r, col), k.one());
      const auto& ma = m.map(a);
      for (std::size_t c = 0; c < m.vdim(arr.dst); ++c) {
        if (k.is_zero(ma(c, l.copy))) continue;
        auto r2 = detail::find_label<F>(p0.labels[j], arr.dst, l.path, c);
        comp(r2, col) = k.sub(comp(r2, col), ma(c, l.copy));
      }
    }
    d.components.push_back(std::move(comp));
  }
  return {std::move(p0), std::move(p1), std::move(d), std::move(phi)};
}

template <class F>
InjectiveResolution<F> injective_resolution(const Representation<F>& m) {
  const auto& qp = m.quiver_ptr();
  const auto& q = *qp;
  const F& k = m.field();
  auto [i0, psi] = framed_psi(m, identity_framing(m, std::vector<bool>(q.vertex_count(), true), false), m.dim());

  std::vector<LabeledRep<F>> parts;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a)
    parts.push_back(tensor_by_space(injective_module(qp, k, q.arrow(a).src), m.vdim(q.arrow(a).dst)));
  auto i1 = direct_sum(parts, qp, k);

  // delta(q* (x) v) = sum_{q = r a} r* (x) v - sum_{s(a) = t(q)} q* (x) M_a v
  Homomorphism<F> delta;
  for (VertexIndex j = 0; j < q.vertex_count(); ++j) {
    Matrix<F> comp(k, i1.rep.vdim(j), i0.rep.vdim(j));
    for (std::size_t col = 0; col < i0.labels[j].size(); ++col) {
      const auto& l = i0.labels[j][col];
      const Path& qp_path = l.path;
      if (!qp_path.arrows.empty()) {
        const ArrowIndex a = qp_path.arrows.back();
        Path r{qp_path.source, q.arrow(a).src, {qp_path.arrows.begin(), qp_path.arrows.end() - 1}};
        auto row = detail::find_label<F>(i1.labels[j], a, r, l.copy);
        comp(row, col) = k.add(comp(row, col), k.one());
      }
      for (ArrowIndex a : q.arrows_out(qp_path.target)) {
        const auto& ma = m.map(a);
        for (std::size_t c = 0; c < m.vdim(q.arrow(a).dst); ++c) {
          if (k.is_zero(ma(c, l.copy))) continue;
          auto row = detail::find_label<F>(i1.labels[j], a, qp_path, c);
          comp(row, col) = k.sub(comp(row, col), ma(c, l.copy));
        }
      }
    }
    delta.components.push_back(std::move(comp));
  }
  return {std::move(i0), std::move(i1), std::move(psi), std::move(delta)};
}

namespace detail {

/// Rank of the span of the flattened homomorphisms.
template <class F>
std::size_t span_rank(const std::vector<Homomorphism<F>>& homs, const F& field) {
  if (homs.empty()) return 0;
  auto first = flatten(homs.front());
  Matrix<F> m(field, homs.size(), first.size());
  for (std::size_t r = 0; r < homs.size(); ++r) {
    auto v = flatten(homs[r]);
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[c];
  }
  return rank(m);
}

}  // namespace detail

/// dim Ext^1(M, N) as the cokernel of Hom(P0, N) -> Hom(P1, N), f |-> f o d.
template <class F>
std::size_t ext_dim_via_projective(const Representation<F>& m, const Representation<F>& n) {
  auto res = projective_resolution(m);
  auto h0 = hom_basis(res.p0.rep, n);
  const std::size_t dim_h1 = hom_dim(res.p1.rep, n);
  std::vector<Homomorphism<F>> images;
  for (const auto& f : h0) images.push_back(compose(f, res.d));
  return dim_h1 - detail::span_rank(images, m.field());
}

/// dim Ext^1(M, N) as the cokernel of Hom(M, I0) -> Hom(M, I1), f |-> delta o f,
/// from the injective resolution of N.
template <class F>
std::size_t ext_dim_via_injective(const Representation<F>& m, const Representation<F>& n) {
  auto res = injective_resolution(n);
  auto h0 = hom_basis(m, res.i0.rep);
  const std::size_t dim_h1 = hom_dim(m, res.i1.rep);
  std::vector<Homomorphism<F>> images;
  for (const auto& f : h0) images.push_back(compose(res.delta, f));
  return dim_h1 - detail::span_rank(images, m.field());
}

}  // namespace qml
