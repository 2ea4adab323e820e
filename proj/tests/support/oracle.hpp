#pragma once

// Brute-force reference computations over F_p. Subspaces are explicit sets of
// vectors and linear maps are applied entry by entry, so nothing here relies
// on the library's row reduction.

#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "qml/representation.hpp"

namespace oracle {

using Vec = std::vector<unsigned>;
using Space = std::set<Vec>;

inline std::vector<Vec> all_vectors(unsigned p, std::size_t d) {
  std::vector<Vec> out;
  Vec v(d, 0);
  while (true) {
    out.push_back(v);
    std::size_t k = 0;
    while (k < d && ++v[k] == p) v[k++] = 0;
    if (k == d) break;
  }
  return out;
}

inline Vec add(const Vec& a, const Vec& b, unsigned p) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
  return c;
}

inline Vec scale(const Vec& a, unsigned s, unsigned p) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] * s) % p;
  return c;
}

/// Closure of a set of vectors under addition and scaling.
inline Space span(const std::vector<Vec>& gens, unsigned p, std::size_t d) {
  Space s{Vec(d, 0)};
  for (const auto& g : gens) {
    Space next;
    for (const auto& v : s)
      for (unsigned c = 0; c < p; ++c) next.insert(add(v, scale(g, c, p), p));
    s = std::move(next);
  }
  return s;
}

inline std::size_t dim_of(const Space& s, unsigned p) {
  std::size_t d = 0;
  for (std::size_t n = 1; n < s.size(); n *= p) ++d;
  return d;
}

/// Every subspace of F_p^d, built by adding one vector at a time.
inline std::set<Space> all_subspaces(unsigned p, std::size_t d) {
  std::set<Space> seen{Space{Vec(d, 0)}};
  std::vector<Space> frontier{Space{Vec(d, 0)}};
  const auto vecs = all_vectors(p, d);
  while (!frontier.empty()) {
    std::vector<Space> next;
    for (const auto& s : frontier)
      for (const auto& v : vecs) {
        if (s.count(v)) continue;
        std::vector<Vec> gens(s.begin(), s.end());
        gens.push_back(v);
        auto t = span(gens, p, d);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline Vec apply(const qml::FpMatrix& m, const Vec& v) {
  const unsigned p = m.field().characteristic();
  Vec out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    unsigned s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s = (s + unsigned(m(r, c)) * v[c]) % p;
    out[r] = s;
  }
  return out;
}

/// Row space of a basis matrix as a set.
inline Space space_of_rows(const qml::FpMatrix& rows) {
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    Vec v(rows.cols());
    for (std::size_t c = 0; c < rows.cols(); ++c) v[c] = rows(r, c);
    gens.push_back(v);
  }
  return span(gens, rows.field().characteristic(), rows.cols());
}

/// Number of solutions of every f_t M_a = N_a f_s, by trying all tuples of matrices.
inline std::uint64_t hom_count(const qml::FpRep& m, const qml::FpRep& n) {
  const auto& q = m.quiver();
  const unsigned p = m.field().characteristic();
  std::size_t entries = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) entries += n.vdim(v) * m.vdim(v);
  std::uint64_t count = 0;
  std::vector<unsigned> e(entries, 0);
  while (true) {
    std::vector<qml::FpMatrix> f;
    std::size_t k = 0;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      qml::FpMatrix fv(m.field(), n.vdim(v), m.vdim(v));
      for (auto& x : fv.data()) x = static_cast<qml::PrimeField::Element>(e[k++]);
      f.push_back(fv);
    }
    bool ok = true;
    for (std::size_t a = 0; a < q.arrow_count() && ok; ++a) {
      const auto& arr = q.arrow(a);
      ok = f[arr.dst] * m.map(a) == n.map(a) * f[arr.src];
    }
    if (ok) ++count;
    std::size_t j = 0;
    while (j < entries && ++e[j] == p) e[j++] = 0;
    if (j == entries) break;
  }
  return count;
}

inline std::size_t log_p(std::uint64_t count, unsigned p) {
  std::size_t d = 0;
  while (count > 1) {
    count /= p;
    ++d;
  }
  return d;
}

/// All invariant subspace tuples, as per-vertex sets.
inline std::vector<std::vector<Space>> subrepresentations(const qml::FpRep& m) {
  const auto& q = m.quiver();
  const unsigned p = m.field().characteristic();
  std::vector<std::vector<Space>> choices;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    auto all = all_subspaces(p, m.vdim(v));
    choices.emplace_back(all.begin(), all.end());
  }
  std::vector<std::vector<Space>> out;
  std::vector<Space> cur(q.vertex_count());
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == q.vertex_count()) {
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const auto& arr = q.arrow(a);
        for (const auto& x : cur[arr.src])
          if (!cur[arr.dst].count(apply(m.map(a), x))) return;
      }
      out.push_back(cur);
      return;
    }
    for (const auto& s : choices[v]) {
      cur[v] = s;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

enum class Verdict { stable, semistable, unstable };

/// Semistable: theta(alpha) = 0 and theta(U) <= 0 on every subrepresentation;
/// stable: strict for every nonzero proper one.
inline Verdict stability(const qml::FpRep& m, const std::vector<long long>& theta) {
  const unsigned p = m.field().characteristic();
  long long total = 0;
  for (std::size_t v = 0; v < theta.size(); ++v) total += theta[v] * static_cast<long long>(m.vdim(v));
  if (total != 0) return Verdict::unstable;
  bool strict = true;
  for (const auto& u : subrepresentations(m)) {
    long long t = 0;
    std::size_t size = 0, full = 0;
    for (std::size_t v = 0; v < theta.size(); ++v) {
      const auto d = static_cast<long long>(dim_of(u[v], p));
      t += theta[v] * d;
      size += d;
      full += m.vdim(v);
    }
    if (t > 0) return Verdict::unstable;
    if (t == 0 && size != 0 && size != full) strict = false;
  }
  return strict ? Verdict::stable : Verdict::semistable;
}

}  // namespace oracle
