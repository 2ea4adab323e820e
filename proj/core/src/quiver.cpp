#include "qml/quiver.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace qml {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertices_[v], v).second)
      throw InvalidArgument("duplicate vertex id '" + vertices_[v] + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (const auto& spec : arrows) {
    auto s = find_vertex(spec.src);
    auto t = find_vertex(spec.dst);
    if (!s || !t)
      throw InvalidArgument("arrow '" + spec.id + "' references unknown vertex '" + (s ? spec.dst : spec.src) + "'");
    if (!arrow_lookup_.emplace(spec.id, arrows_.size()).second)
      throw InvalidArgument("duplicate arrow id '" + spec.id + "'");
    out_[*s].push_back(arrows_.size());
    in_[*t].push_back(arrows_.size());
    arrows_.push_back({spec.id, *s, *t});
  }

  // Kahn's algorithm; the smallest available declaration index goes first.
  std::vector<std::size_t> indeg(vertices_.size());
  for (VertexIndex v = 0; v < vertices_.size(); ++v) indeg[v] = in_[v].size();
  std::priority_queue<VertexIndex, std::vector<VertexIndex>, std::greater<>> ready;
  for (VertexIndex v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    VertexIndex v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (ArrowIndex a : out_[v])
      if (--indeg[arrows_[a].dst] == 0) ready.push(arrows_[a].dst);
  }
  if (topo_.size() != vertices_.size()) throw CyclicQuiver("quiver has an oriented cycle");
  topo_rank_.resize(vertices_.size());
  for (std::size_t k = 0; k < topo_.size(); ++k) topo_rank_[topo_[k]] = k;
}

std::optional<VertexIndex> Quiver::find_vertex(const std::string& name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Quiver::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw InvalidArgument("unknown vertex '" + name + "'");
  return *v;
}

ArrowIndex Quiver::arrow_index(const std::string& id) const {
  auto it = arrow_lookup_.find(id);
  if (it == arrow_lookup_.end()) throw InvalidArgument("unknown arrow '" + id + "'");
  return it->second;
}

std::optional<ArrowIndex> Quiver::find_arrow(const std::string& id) const {
  auto it = arrow_lookup_.find(id);
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<Quiver::ArrowSpec> Quiver::arrow_specs() const {
  std::vector<ArrowSpec> specs;
  for (const auto& a : arrows_) specs.push_back({a.id, vertices_[a.src], vertices_[a.dst]});
  return specs;
}

std::string summary(const Quiver& q) {
  std::string s;
  for (const auto& v : q.vertices()) s += (s.empty() ? "" : " ") + v;
  s += " |";
  for (const auto& a : q.arrows()) s += " " + a.id + ":" + q.vertex_name(a.src) + "->" + q.vertex_name(a.dst);
  return s;
}

QuiverPtr subspace_quiver(std::size_t m) {
  std::vector<std::string> vs;
  std::vector<Quiver::ArrowSpec> as;
  for (std::size_t i = 1; i <= m; ++i) {
    vs.push_back("q" + std::to_string(i));
    as.push_back({"a" + std::to_string(i), "q" + std::to_string(i), "s"});
  }
  vs.push_back("s");
  return make_quiver(std::move(vs), as);
}

QuiverPtr linear_quiver(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<Quiver::ArrowSpec> as;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) as.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  return make_quiver(std::move(vs), as);
}

Path Path::then(const Quiver& q, ArrowIndex a) const {
  if (q.arrow(a).src != target) throw InvalidArgument("arrow does not compose with path");
  Path p = *this;
  p.arrows.push_back(a);
  p.target = q.arrow(a).dst;
  return p;
}

bool path_less(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.source);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += ".";
    s += q.arrow(p.arrows[k]).id;
  }
  return s;
}

std::vector<Path> enumerate_paths(const Quiver& q, VertexIndex i, VertexIndex j) {
  std::vector<Path> result;
  std::vector<Path> frontier{Path{i, i, {}}};
  // Acyclicity bounds the length by the vertex count.
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      if (p.target == j) result.push_back(p);
      for (ArrowIndex a : q.arrows_out(p.target)) next.push_back(p.then(q, a));
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end(), path_less);
  return result;
}

long long DimVector::norm() const {
  long long s = 0;
  for (auto x : values()) s += x < 0 ? -x : x;
  return s;
}

bool DimVector::is_zero() const {
  return std::all_of(values().begin(), values().end(), [](long long x) { return x == 0; });
}

bool DimVector::fits_in(const DimVector& bound) const {
  if (size() != bound.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if ((*this)[i] > bound[i]) return false;
  return true;
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector e = DimVector::zero(n);
  e[i] = 1;
  return e;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dimension vector sizes differ");
  DimVector c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dimension vector sizes differ");
  DimVector c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

StabilityParam StabilityParam::scaled(long long k) const {
  StabilityParam t = *this;
  for (std::size_t i = 0; i < size(); ++i) t[i] *= k;
  return t;
}

void require_on(const Quiver& q, std::size_t size, const char* what) {
  if (size != q.vertex_count())
    throw DimensionMismatch(std::string(what) + " has " + std::to_string(size) + " entries, quiver has " +
                            std::to_string(q.vertex_count()) + " vertices");
}

long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  require_on(q, a.size(), "dimension vector");
  require_on(q, b.size(), "dimension vector");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  for (const auto& arr : q.arrows()) s -= a[arr.src] * b[arr.dst];
  return s;
}

long long theta_value(const StabilityParam& theta, const DimVector& a) {
  if (theta.size() != a.size()) throw DimensionMismatch("stability parameter and dimension vector sizes differ");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += theta[i] * a[i];
  return s;
}

ThetaSplit theta_split(const StabilityParam& theta) {
  ThetaSplit s;
  for (auto t : theta.values()) {
    s.plus.push_back(t >= 0);
    s.minus.push_back(t <= 0);
  }
  return s;
}

DimVector restricted_dim(const DimVector& alpha, const std::vector<bool>& vertex_set) {
  if (alpha.size() != vertex_set.size()) throw DimensionMismatch("vertex set size differs from dimension vector");
  DimVector r = alpha;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!vertex_set[i]) r[i] = 0;
  return r;
}

}  // namespace qml
