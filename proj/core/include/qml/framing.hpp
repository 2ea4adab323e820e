#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qml/report.hpp"
#include "qml/stability.hpp"

namespace qml {

/// source_framing: one vertex "0" with beta_i arrows 0 -> i.
/// sink_framing: one vertex "∞" with beta_i arrows i -> ∞.
/// source_copies: a copy "i+" of every vertex with one arrow i+ -> i.
/// sink_copies: a copy "i-" of every vertex with one arrow i -> i-.
enum class FramedKind { source_framing, sink_framing, source_copies, sink_copies };

std::string to_string(FramedKind k);

struct FramedQuiver {
  FramedKind kind;
  QuiverPtr base;
  DimVector beta;
  QuiverPtr quiver;
  std::vector<VertexIndex> base_vertex;  // base vertex -> framed vertex
  std::vector<ArrowIndex> base_arrow;    // base arrow -> framed arrow
  /// Per base vertex: the framed arrows carrying its framing (beta_i of them
  /// for the single-vertex framings, exactly one for the copy framings).
  std::vector<std::vector<ArrowIndex>> framing_arrows;
  /// The extra vertex "0" / "∞"; unset for the copy framings.
  std::optional<VertexIndex> framing_vertex;
  /// Per base vertex: its copy; empty for the single-vertex framings.
  std::vector<VertexIndex> copy_vertex;

  bool incoming() const { return kind == FramedKind::source_framing || kind == FramedKind::source_copies; }
  /// (1, alpha), (alpha, 1), (beta, alpha) or (alpha, beta) in framed vertex order.
  DimVector framed_dim(const DimVector& alpha) const;
};

FramedQuiver build_framed(QuiverPtr base, const DimVector& beta, FramedKind kind);

enum class FramingSide { incoming, outgoing };

/// (M, A) with A_i: k^beta_i -> M_i, or (M, B) with B_i: M_i -> k^beta_i.
struct FramedRep {
  FpRep base;
  std::vector<FpMatrix> framing;
  FramingSide side;
  DimVector beta;

  friend bool operator==(const FramedRep&, const FramedRep&) = default;
};

FramedRep make_framed_rep(FpRep base, std::vector<FpMatrix> framing, FramingSide side, const DimVector& beta);

/// The representation of the framed quiver; a framing matrix is split into
/// its columns (rows) when the framing uses beta_i parallel arrows.
FpRep embed(const FramedQuiver& fq, const FramedRep& fr);
FramedRep split(const FramedQuiver& fq, const FpRep& r);

/// (h, g) . (M, A) = (g.M, g A h^-1) and (h, g) . (M, B) = (g.M, h B g^-1),
/// h acting on the framing spaces, g on the base.
FramedRep act(const GroupElement<PrimeField>& h, const GroupElement<PrimeField>& g, const FramedRep& fr);

/// c^alpha on the source framing (|alpha| at "0", -1 elsewhere) or c_alpha on
/// the sink framing (1 at base vertices, -|alpha| at "∞").
StabilityParam framed_param_c(const FramedQuiver& fq, const DimVector& alpha);

/// theta+ on the source copies or theta- on the sink copies; throws
/// ThetaAlphaNonzero unless theta(alpha) == 0.
StabilityParam framed_param_theta(const FramedQuiver& fq, const StabilityParam& theta, const DimVector& alpha,
                                  long long n);

/// eta+ on the source framing by alpha+ or eta- on the sink framing by alpha-.
StabilityParam framed_param_eta(const FramedQuiver& fq, const StabilityParam& theta, const DimVector& alpha,
                                long long n);

/// 1 + sum_i |theta_i| alpha_i.
long long default_N(const StabilityParam& theta, const DimVector& alpha);

/// Every point of R(framed quiver, framed dim)(F_p), as FramedReps.
void for_each_framed_rep(const FramedQuiver& fq, const PrimeField& field, const DimVector& alpha, Budget& budget,
                         const std::function<bool(std::uint64_t, const FramedRep&)>& fn);

std::string describe(const FramedRep& fr);

/// Both parts of the four-way equivalence on R(Q^beta, (1,alpha)) and
/// R(Q_beta, (alpha,1)): c-semistable, c-stable, the subrepresentation
/// condition on im A / ker B, and surjectivity of phi / injectivity of psi.
std::vector<CheckReport> verify_engel_reineke(QuiverPtr q, const DimVector& alpha, const DimVector& beta,
                                              const PrimeField& field, Budget& budget, unsigned workers = 1);

/// theta+ (semi)stability of (M, A) against theta (semi)stability of M plus
/// invertibility of A on Q0+, and dually for theta-.
std::vector<CheckReport> verify_theta_pm(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                         const PrimeField& field, long long n, Budget& budget, unsigned workers = 1);

/// eta-semistable locus = eta-stable locus = degree-zero locus, on the
/// source framing by alpha+ and the sink framing by alpha-.
std::vector<CheckReport> verify_framed_stability(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                                 const PrimeField& field, long long n, Budget& budget,
                                                 unsigned workers = 1);

}  // namespace qml
