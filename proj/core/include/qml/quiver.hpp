#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qml/error.hpp"

namespace qml {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string id;
  VertexIndex src = 0;
  VertexIndex dst = 0;
};

/// A finite acyclic quiver. Vertices and arrows keep their declaration order;
/// indices into those lists are the internal identifiers.
class Quiver {
 public:
  struct ArrowSpec {
    std::string id;
    std::string src;
    std::string dst;
  };

  /// Throws CyclicQuiver on an oriented cycle and InvalidArgument on
  /// duplicate or dangling names.
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }

  VertexIndex vertex(const std::string& name) const;
  std::optional<VertexIndex> find_vertex(const std::string& name) const;
  ArrowIndex arrow_index(const std::string& id) const;
  std::optional<ArrowIndex> find_arrow(const std::string& id) const;

  const std::vector<ArrowIndex>& arrows_out(VertexIndex v) const { return out_.at(v); }
  const std::vector<ArrowIndex>& arrows_in(VertexIndex v) const { return in_.at(v); }

  /// Every arrow goes forward; ties broken by declaration index.
  const std::vector<VertexIndex>& topological_order() const { return topo_; }
  /// Position of each vertex inside topological_order().
  std::size_t topological_rank(VertexIndex v) const { return topo_rank_.at(v); }

  bool is_source(VertexIndex v) const { return in_.at(v).empty(); }
  bool is_sink(VertexIndex v) const { return out_.at(v).empty(); }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrow_specs() == b.arrow_specs();
  }

  std::vector<ArrowSpec> arrow_specs() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexIndex> vertex_lookup_;
  std::map<std::string, ArrowIndex> arrow_lookup_;
  std::vector<std::vector<ArrowIndex>> out_;
  std::vector<std::vector<ArrowIndex>> in_;
  std::vector<VertexIndex> topo_;
  std::vector<std::size_t> topo_rank_;
};

inline bool operator==(const Quiver::ArrowSpec& a, const Quiver::ArrowSpec& b) {
  return a.id == b.id && a.src == b.src && a.dst == b.dst;
}

using QuiverPtr = std::shared_ptr<const Quiver>;

template <class... Args>
QuiverPtr make_quiver(Args&&... args) {
  return std::make_shared<const Quiver>(std::forward<Args>(args)...);
}

/// One line: "q1 q2 s | a1:q1->s a2:q2->s".
std::string summary(const Quiver& q);

/// The m-subspace quiver: sources q1..qm, each with one arrow a_i into the sink s.
QuiverPtr subspace_quiver(std::size_t m);
/// Linearly oriented A_n: 1 -> 2 -> ... -> n with arrows a1..a{n-1}.
QuiverPtr linear_quiver(std::size_t n);

/// A path as a sequence of composable arrows; the empty sequence is the
/// trivial path at `source` (== `target`).
struct Path {
  VertexIndex source = 0;
  VertexIndex target = 0;
  std::vector<ArrowIndex> arrows;

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  /// Path followed by arrow a (a leaves target).
  Path then(const Quiver& q, ArrowIndex a) const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Orders by (length, arrow index sequence).
bool path_less(const Path& a, const Path& b);

std::string path_to_string(const Quiver& q, const Path& p);

/// All paths i -> j in (length, arrow-sequence) order; includes the trivial
/// path iff i == j.
std::vector<Path> enumerate_paths(const Quiver& q, VertexIndex i, VertexIndex j);

/// Integer vector indexed by vertices. Used for dimension vectors (entries
/// nonnegative) and for stability parameters.
template <class Tag>
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(std::vector<long long> values) : v_(std::move(values)) {}
  VertexVector(std::initializer_list<long long> values) : v_(values) {}
  static VertexVector zero(std::size_t n) { return VertexVector(std::vector<long long>(n, 0)); }

  std::size_t size() const { return v_.size(); }
  long long operator[](std::size_t i) const { return v_.at(i); }
  long long& operator[](std::size_t i) { return v_.at(i); }
  const std::vector<long long>& values() const { return v_; }

  friend bool operator==(const VertexVector&, const VertexVector&) = default;
  friend auto operator<=>(const VertexVector&, const VertexVector&) = default;

 private:
  std::vector<long long> v_;
};

struct DimTag {};
struct ThetaTag {};

class DimVector : public VertexVector<DimTag> {
 public:
  using VertexVector<DimTag>::VertexVector;
  DimVector(VertexVector<DimTag> v) : VertexVector<DimTag>(std::move(v)) {}

  /// 1-norm.
  long long norm() const;
  bool is_zero() const;
  /// Entrywise a <= b.
  bool fits_in(const DimVector& bound) const;
  /// Simple root e_i.
  static DimVector unit(std::size_t n, std::size_t i);

  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend DimVector operator-(const DimVector& a, const DimVector& b);
};

class StabilityParam : public VertexVector<ThetaTag> {
 public:
  using VertexVector<ThetaTag>::VertexVector;
  StabilityParam(VertexVector<ThetaTag> v) : VertexVector<ThetaTag>(std::move(v)) {}

  StabilityParam scaled(long long k) const;
};

/// Validates that a vertex vector lives on q's vertex set.
void require_on(const Quiver& q, std::size_t size, const char* what);

/// <a, b> = sum_i a_i b_i - sum_arrows a_{s(a)} b_{t(a)}.
long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// theta(a) = sum_i theta_i a_i.
long long theta_value(const StabilityParam& theta, const DimVector& a);

/// Membership in Q0+ (theta_i >= 0) and Q0- (theta_i <= 0). Vertices with
/// theta_i == 0 belong to both.
struct ThetaSplit {
  std::vector<bool> plus;
  std::vector<bool> minus;
};
ThetaSplit theta_split(const StabilityParam& theta);

/// alpha restricted to the marked vertices, zero elsewhere.
DimVector restricted_dim(const DimVector& alpha, const std::vector<bool>& vertex_set);

}  // namespace qml
