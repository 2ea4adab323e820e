#include "qml/enumeration.hpp"

#include <algorithm>

namespace qml {

std::string label_to_string(const Quiver& q, const BasisLabel& l) {
  return "s" + std::to_string(l.summand) + ":" + path_to_string(q, l.path) + (l.dual ? "*" : "") + "#" +
         std::to_string(l.copy);
}

DimVector SubspaceTuple::dim() const {
  DimVector d = DimVector::zero(bases.size());
  for (std::size_t v = 0; v < bases.size(); ++v) d[v] = static_cast<long long>(bases[v].rows());
  return d;
}

bool operator<(const SubspaceTuple& a, const SubspaceTuple& b) {
  if (a.bases.size() != b.bases.size()) return a.bases.size() < b.bases.size();
  for (std::size_t v = 0; v < a.bases.size(); ++v) {
    const auto& x = a.bases[v];
    const auto& y = b.bases[v];
    if (x.rows() != y.rows()) return x.rows() < y.rows();
    if (x.data() != y.data()) return x.data() < y.data();
  }
  return false;
}

std::string to_string(const SubspaceTuple& t) {
  std::string s = "(";
  for (std::size_t v = 0; v < t.bases.size(); ++v) {
    if (v) s += " | ";
    const auto& m = t.bases[v];
    s += "<";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r) s += ",";
      for (std::size_t c = 0; c < m.cols(); ++c) s += std::to_string(m(r, c));
    }
    s += ">";
  }
  return s + ")";
}

bool is_subrepresentation(const FpRep& m, const SubspaceTuple& u) {
  const auto& q = m.quiver();
  if (u.size() != q.vertex_count()) return false;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v)
    if (u[v].cols() != m.vdim(v)) return false;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (!subspace_contains(u[arr.dst], image_of(m.map(a), u[arr.src]))) return false;
  }
  return true;
}

namespace {

struct SubrepSearch {
  const FpRep& m;
  const std::optional<DimVector>& target;
  Budget& budget;
  const std::function<bool(const SubspaceTuple&)>& fn;
  SubspaceTuple current;

  bool visit(std::size_t depth) {
    const auto& q = m.quiver();
    if (depth == q.vertex_count()) return fn(current);
    const VertexIndex v = q.topological_order()[depth];
    const auto& field = m.field();
    FpMatrix lower = zero_subspace(field, m.vdim(v));
    for (ArrowIndex a : q.arrows_in(v)) lower = subspace_sum(lower, image_of(m.map(a), current[q.arrow(a).src]));
    const FpMatrix upper = whole_space(field, m.vdim(v));
    std::size_t lo = lower.rows(), hi = m.vdim(v);
    if (target) {
      const auto want = static_cast<std::size_t>((*target)[v]);
      if (want < lo || want > hi) return true;
      lo = hi = want;
    }
    for (std::size_t k = lo; k <= hi; ++k) {
      bool go = for_each_subspace_between(lower, upper, k, budget, [&](const FpMatrix& s) {
        current.bases[v] = s;
        return visit(depth + 1);
      });
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

bool for_each_subrepresentation(const FpRep& m, const std::optional<DimVector>& target, Budget& budget,
                                const std::function<bool(const SubspaceTuple&)>& fn) {
  if (target) require_on(m.quiver(), target->size(), "subrepresentation dimension vector");
  SubrepSearch s{m, target, budget, fn, {}};
  for (VertexIndex v = 0; v < m.quiver().vertex_count(); ++v) s.current.bases.push_back(zero_subspace(m.field(), m.vdim(v)));
  return s.visit(0);
}

std::vector<SubspaceTuple> subrepresentations(const FpRep& m, const std::optional<DimVector>& target, Budget& budget) {
  std::vector<SubspaceTuple> out;
  for_each_subrepresentation(m, target, budget, [&](const SubspaceTuple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_subrepresentations_reverse(const FpRep& m, const DimVector& target, Budget& budget) {
  const auto& q = m.quiver();
  require_on(q, target.size(), "subrepresentation dimension vector");
  const auto& order = q.topological_order();
  std::vector<FpMatrix> chosen(q.vertex_count());
  std::uint64_t count = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t depth) {
    if (depth == order.size()) {
      ++count;
      return;
    }
    const VertexIndex v = order[order.size() - 1 - depth];
    std::vector<FpMatrix> maps, targets;
    for (ArrowIndex a : q.arrows_out(v)) {
      maps.push_back(m.map(a));
      targets.push_back(chosen[q.arrow(a).dst]);
    }
    FpMatrix upper = common_preimage(maps, targets, m.field(), m.vdim(v));
    for_each_subspace_between(zero_subspace(m.field(), m.vdim(v)), upper, static_cast<std::size_t>(target[v]), budget,
                              [&](const FpMatrix& s) {
                                chosen[v] = s;
                                visit(depth + 1);
                                return true;
                              });
  };
  visit(0);
  return count;
}

std::uint64_t rep_space_size(const Quiver& q, const DimVector& alpha, unsigned p) {
  require_on(q, alpha.size(), "dimension vector");
  std::uint64_t cells = 0;
  for (const auto& arr : q.arrows()) cells += static_cast<std::uint64_t>(alpha[arr.src] * alpha[arr.dst]);
  return saturating_pow(p, cells);
}

FpRep rep_at_index(QuiverPtr q, const PrimeField& field, const DimVector& alpha, std::uint64_t index) {
  const unsigned p = field.characteristic();
  std::vector<FpMatrix> maps;
  for (const auto& arr : q->arrows()) {
    FpMatrix m(field, static_cast<std::size_t>(alpha[arr.dst]), static_cast<std::size_t>(alpha[arr.src]));
    for (auto& e : m.data()) {
      e = static_cast<std::uint16_t>(index % p);
      index /= p;
    }
    maps.push_back(std::move(m));
  }
  if (index != 0) throw InvalidArgument("representation index out of range");
  return FpRep(std::move(q), field, alpha, std::move(maps));
}

std::uint64_t rep_index(const FpRep& m) {
  const unsigned p = m.field().characteristic();
  std::uint64_t idx = 0, scale = 1;
  for (const auto& a : m.maps())
    for (auto e : a.data()) {
      idx += scale * e;
      scale *= p;
    }
  return idx;
}

void for_each_rep(QuiverPtr q, const PrimeField& field, const DimVector& alpha, Budget& budget,
                  const std::function<bool(std::uint64_t, const FpRep&)>& fn) {
  const auto total = rep_space_size(*q, alpha, field.characteristic());
  budget.require(total, "representation space enumeration");
  for (std::uint64_t i = 0; i < total; ++i) {
    budget.charge(1, "representation space enumeration");
    if (!fn(i, rep_at_index(q, field, alpha, i))) return;
  }
}

std::vector<FpRep> enumerate_reps(QuiverPtr q, const PrimeField& field, const DimVector& alpha, Budget& budget) {
  std::vector<FpRep> out;
  for_each_rep(std::move(q), field, alpha, budget, [&](std::uint64_t, const FpRep& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

std::vector<std::uint16_t> rep_key(const FpRep& m) {
  std::vector<std::uint16_t> key;
  for (const auto& a : m.maps()) key.insert(key.end(), a.data().begin(), a.data().end());
  return key;
}

FpMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> dist(0, field.characteristic() - 1);
  FpMatrix m(field, rows, cols);
  for (auto& e : m.data()) e = static_cast<std::uint16_t>(dist(rng));
  return m;
}

FpMatrix random_invertible(const PrimeField& field, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto m = random_matrix(field, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

FpRep random_rep(QuiverPtr q, const PrimeField& field, const DimVector& alpha, std::mt19937_64& rng) {
  std::vector<FpMatrix> maps;
  for (const auto& arr : q->arrows())
    maps.push_back(random_matrix(field, static_cast<std::size_t>(alpha[arr.dst]),
                                 static_cast<std::size_t>(alpha[arr.src]), rng));
  return FpRep(std::move(q), field, alpha, std::move(maps));
}

GroupElement<PrimeField> random_group_element(const PrimeField& field, const DimVector& d, std::mt19937_64& rng) {
  GroupElement<PrimeField> g;
  for (auto n : d.values()) g.blocks.push_back(random_invertible(field, static_cast<std::size_t>(n), rng));
  return g;
}

}  // namespace qml
