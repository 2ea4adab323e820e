#include "qml/correspondence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qml {

FramedRep f_plus(const FpRep& m, const StabilityParam& theta) {
  require_on(m.quiver(), theta.size(), "stability parameter");
  const auto plus = theta_split(theta).plus;
  return make_framed_rep(m, identity_framing(m, plus, true), FramingSide::incoming, restricted_dim(m.dim(), plus));
}

FramedRep f_minus(const FpRep& m, const StabilityParam& theta) {
  require_on(m.quiver(), theta.size(), "stability parameter");
  const auto minus = theta_split(theta).minus;
  return make_framed_rep(m, identity_framing(m, minus, false), FramingSide::outgoing, restricted_dim(m.dim(), minus));
}

SubspaceTuple gm_phi(const FpRep& m, const StabilityParam& theta, Budget& budget) {
  if (!check_stability(m, theta, budget).semistable()) throw NotSemistable("representation is not theta-semistable");
  auto pt = hilbert_point_phi(f_plus(m, theta));
  if (!(pt == kernel_tuple(canonical_phi(m, theta).second)))
    throw Error("internal: framed and canonical phi disagree");
  return pt;
}

SubspaceTuple gm_psi(const FpRep& m, const StabilityParam& theta, Budget& budget) {
  if (!check_stability(m, theta, budget).semistable()) throw NotSemistable("representation is not theta-semistable");
  auto pt = hilbert_point_psi(f_minus(m, theta));
  if (!(pt == image_tuple(canonical_psi(m, theta).second)))
    throw Error("internal: framed and canonical psi disagree");
  return pt;
}

IsoResult rep_isomorphic(const FpRep& m, const FpRep& n, Budget& budget) {
  if (!(m.quiver() == n.quiver())) throw DimensionMismatch("rep_isomorphic: different quivers");
  if (m.dim() != n.dim()) return {};
  const auto basis = hom_basis(m, n);
  const unsigned p = m.field().characteristic();
  budget.require(saturating_pow(p, basis.size()), "Hom enumeration");
  std::vector<unsigned> coeff(basis.size(), 0);
  const auto& field = m.field();
  while (true) {
    budget.charge(1, "Hom enumeration");
    GroupElement<PrimeField> g;
    bool invertible = true;
    for (VertexIndex v = 0; v < m.quiver().vertex_count() && invertible; ++v) {
      FpMatrix c(field, n.vdim(v), m.vdim(v));
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeff[k]) c = c + basis[k][v].scaled(static_cast<std::uint16_t>(coeff[k]));
      invertible = is_invertible(c);
      g.blocks.push_back(std::move(c));
    }
    if (invertible) return {true, std::move(g)};
    std::size_t k = 0;
    for (; k < coeff.size(); ++k) {
      if (++coeff[k] < p) break;
      coeff[k] = 0;
    }
    if (k == coeff.size()) return {};
  }
}

std::string describe(const FpRep& m) {
  std::ostringstream os;
  const auto& q = m.quiver();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    os << (a ? " " : "") << q.arrow(a).id << "=[";
    const auto& x = m.map(a);
    for (std::size_t r = 0; r < x.rows(); ++r) {
      if (r) os << ";";
      for (std::size_t c = 0; c < x.cols(); ++c) os << (c ? "," : "") << x(r, c);
    }
    os << "]";
  }
  return os.str();
}

namespace {

/// g restricted to a vertex set and padded with identities elsewhere.
GroupElement<PrimeField> padded(const PrimeField& field, const DimVector& alpha, const std::vector<bool>& set,
                                const std::vector<FpMatrix>& blocks) {
  GroupElement<PrimeField> g;
  for (VertexIndex i = 0; i < alpha.size(); ++i)
    g.blocks.push_back(set[i] ? blocks[i] : FpMatrix::identity(field, static_cast<std::size_t>(alpha[i])));
  return g;
}

GroupElement<PrimeField> identity_on(const PrimeField& field, const DimVector& d) {
  return GroupElement<PrimeField>::identity(field, d);
}

}  // namespace

std::vector<CheckReport> verify_saturation(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                           const PrimeField& field, long long n, Budget& budget, unsigned workers) {
  require_on(*q, alpha.size(), "dimension vector");
  require_on(*q, theta.size(), "stability parameter");
  if (theta_value(theta, alpha) != 0) throw ThetaAlphaNonzero("theta(alpha) must vanish");
  const auto verdicts = stability_table(q, alpha, theta, field, budget, workers);
  const auto sets = theta_split(theta);
  std::vector<CheckReport> out;
  for (auto kind : {FramedKind::source_copies, FramedKind::sink_copies}) {
    const bool plus = kind == FramedKind::source_copies;
    const auto& side = plus ? sets.plus : sets.minus;
    const auto beta = restricted_dim(alpha, side);
    const auto fq = build_framed(q, beta, kind);
    const auto t = framed_param_theta(fq, theta, alpha, n);
    const auto dim = fq.framed_dim(alpha);
    const auto total = rep_space_size(*fq.quiver, dim, field.characteristic());
    budget.require(total, "framed representation space enumeration");
    auto report = sweep(std::string(plus ? "saturation/plus" : "saturation/minus"), total, workers, [&](std::uint64_t idx) {
      budget.charge(1, "framed representation space enumeration");
      const auto r = rep_at_index(fq.quiver, field, dim, idx);
      const auto fr = split(fq, r);
      const bool framed_sst = check_stability(r, t, budget).semistable();
      // Membership in the saturation: the framing must be invertible on the
      // framed vertices; then g = framing (plus) or g = framing^-1 (minus)
      // recovers (M, framing) = (1, g) . f(M') with M' = g^-1 . M.
      bool invertible = true;
      for (VertexIndex i = 0; i < q->vertex_count(); ++i)
        if (side[i] && !is_invertible(fr.framing[i])) invertible = false;
      bool in_saturation = false;
      std::string detail;
      if (invertible) {
        std::vector<FpMatrix> blocks;
        for (VertexIndex i = 0; i < q->vertex_count(); ++i)
          blocks.push_back(side[i] ? (plus ? fr.framing[i] : invert(fr.framing[i])) : FpMatrix(field, 0, 0));
        const auto g = padded(field, alpha, side, blocks);
        const auto m_prime = fr.base.acted_on_by(g.inverse());
        const bool prime_sst = verdicts.at(rep_index(m_prime)).semistable();
        const auto f = plus ? f_plus(m_prime, theta) : f_minus(m_prime, theta);
        const auto back = act(identity_on(field, beta), g, f);
        if (!(back == fr)) detail = "group element built from the framing does not reproduce the point; ";
        in_saturation = prime_sst;
      }
      PointOutcome o;
      if (framed_sst) o.tags.push_back("framed_semistable");
      if (in_saturation) o.tags.push_back("in_saturation");
      if (framed_sst != in_saturation || !detail.empty()) {
        o.point = describe(fr);
        o.failure = detail + "framed_semistable=" + (framed_sst ? "1" : "0") +
                    " in_saturation=" + (in_saturation ? "1" : "0");
      }
      return o;
    });
    out.push_back(std::move(report));
  }
  return out;
}

bool CorrespondenceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

namespace {

struct RepOrbits {
  std::vector<std::vector<std::uint64_t>> orbits;  // point indices, sorted by key
  std::map<std::uint64_t, std::size_t> orbit_of;
};

/// G(alpha)-orbits of the given points (indices into R(Q, alpha)); orbits
/// are ordered by their lexicographically least member.
RepOrbits rep_orbits(const std::vector<std::uint64_t>& points, QuiverPtr q, const PrimeField& field,
                     const DimVector& alpha, const std::vector<GroupElement<PrimeField>>& group) {
  RepOrbits out;
  std::vector<std::pair<std::vector<std::uint16_t>, std::uint64_t>> keyed;
  for (auto idx : points) keyed.emplace_back(rep_key(rep_at_index(q, field, alpha, idx)), idx);
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [key, idx] : keyed) {
    if (out.orbit_of.count(idx)) continue;
    const auto m = rep_at_index(q, field, alpha, idx);
    std::set<std::pair<std::vector<std::uint16_t>, std::uint64_t>> orbit;
    for (const auto& g : group) {
      const auto x = m.acted_on_by(g);
      orbit.emplace(rep_key(x), rep_index(x));
    }
    const std::size_t id = out.orbits.size();
    std::vector<std::uint64_t> members;
    for (const auto& [k, i] : orbit) {
      out.orbit_of.emplace(i, id);
      members.push_back(i);
    }
    out.orbits.push_back(std::move(members));
  }
  return out;
}

bool is_bipartite(const Quiver& q) {
  for (VertexIndex v = 0; v < q.vertex_count(); ++v)
    if (!q.is_source(v) && !q.is_sink(v)) return false;
  return true;
}

/// Components of a tuple at the marked vertices.
SubspaceTuple project(const SubspaceTuple& t, const std::vector<bool>& keep) {
  SubspaceTuple out;
  for (std::size_t v = 0; v < t.size(); ++v)
    if (keep[v]) out.bases.push_back(t[v]);
  return out;
}

}  // namespace

CorrespondenceReport verify_correspondence(QuiverPtr q, const DimVector& alpha, const StabilityParam& theta,
                                           const PrimeField& field, long long n, Budget& budget, unsigned workers) {
  require_on(*q, alpha.size(), "dimension vector");
  require_on(*q, theta.size(), "stability parameter");
  if (theta_value(theta, alpha) != 0) throw ThetaAlphaNonzero("theta(alpha) must vanish");
  CorrespondenceReport rep;
  rep.quiver = summary(*q);
  rep.alpha = alpha;
  rep.theta = theta;
  rep.field = field.name();
  rep.bipartite = is_bipartite(*q);

  const auto verdicts = stability_table(q, alpha, theta, field, budget, workers);
  rep.representations = verdicts.size();
  std::vector<std::uint64_t> sst, st;
  for (std::uint64_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].semistable()) sst.push_back(i);
    if (verdicts[i].stable()) st.push_back(i);
  }

  const auto sets = theta_split(theta);
  const auto alpha_plus = restricted_dim(alpha, sets.plus);
  const auto alpha_minus = restricted_dim(alpha, sets.minus);
  const auto p_plus = projective_standard(q, field, alpha_plus);
  const auto i_minus = injective_standard(q, field, alpha_minus);
  const auto g_alpha = group_elements(field, alpha, budget);
  const auto g_plus = group_elements(field, alpha_plus, budget);
  const auto g_minus = group_elements(field, alpha_minus, budget);
  rep.group_order = g_alpha.size();

  // Images and consistency with the canonical homomorphisms.
  std::map<std::uint64_t, SubspaceTuple> phi_of, psi_of;
  CheckReport consistency;
  consistency.name = "consistency";
  for (auto idx : sst) {
    const auto m = rep_at_index(q, field, alpha, idx);
    ++consistency.checked;
    const auto a = hilbert_point_phi(f_plus(m, theta));
    const auto b = hilbert_point_psi(f_minus(m, theta));
    const auto [pp, phi] = canonical_phi(m, theta);
    const auto [ii, psi] = canonical_psi(m, theta);
    if (!(a == kernel_tuple(phi)) || !(b == image_tuple(psi)))
      consistency.fail({idx, describe(m), "Hilbert-scheme point differs from the canonical kernel/image"});
    if (!is_surjective(phi) || !is_injective(psi))
      consistency.fail({idx, describe(m), "semistable point with non-surjective phi_M or non-injective psi_M"});
    phi_of.emplace(idx, a);
    psi_of.emplace(idx, b);
  }
  rep.checks.push_back(std::move(consistency));

  const auto orbits = rep_orbits(sst, q, field, alpha, g_alpha);

  // Well-definedness on the semistable locus.
  std::vector<SubspaceTuple> phi_all, psi_all;
  for (auto idx : sst) {
    phi_all.push_back(phi_of.at(idx));
    psi_all.push_back(psi_of.at(idx));
  }
  const auto phi_part = orbit_partition(p_plus, phi_all, g_plus);
  const auto psi_part = orbit_partition(i_minus, psi_all, g_minus);
  CheckReport well;
  well.name = "well-defined on orbits";
  for (const auto& members : orbits.orbits) {
    const auto head = members.front();
    for (auto idx : members) {
      ++well.checked;
      if (!verdicts[idx].semistable()) {
        well.fail({idx, describe(rep_at_index(q, field, alpha, idx)), "orbit leaves the semistable locus"});
        continue;
      }
      if (phi_part.orbit_of.at(phi_of.at(idx)) != phi_part.orbit_of.at(phi_of.at(head)))
        well.fail({idx, describe(rep_at_index(q, field, alpha, idx)), "phi sends one orbit to two orbits"});
      if (psi_part.orbit_of.at(psi_of.at(idx)) != psi_part.orbit_of.at(psi_of.at(head)))
        well.fail({idx, describe(rep_at_index(q, field, alpha, idx)), "psi sends one orbit to two orbits"});
    }
  }
  rep.checks.push_back(std::move(well));

  // Orbit-level bijections per locus.
  auto summarize = [&](const std::string& name, const std::vector<std::uint64_t>& locus, bool asserted) {
    LocusSummary s;
    s.locus = name;
    s.asserted = asserted;
    s.points = locus.size();
    std::set<std::size_t> rep_ids, phi_ids, psi_ids;
    std::set<SubspaceTuple> phi_pts, psi_pts;
    for (auto idx : locus) {
      rep_ids.insert(orbits.orbit_of.at(idx));
      phi_pts.insert(phi_of.at(idx));
      psi_pts.insert(psi_of.at(idx));
      phi_ids.insert(phi_part.orbit_of.at(phi_of.at(idx)));
      psi_ids.insert(psi_part.orbit_of.at(psi_of.at(idx)));
    }
    s.rep_orbits = rep_ids.size();
    s.phi_points = phi_pts.size();
    s.psi_points = psi_pts.size();
    s.phi_orbits = phi_ids.size();
    s.psi_orbits = psi_ids.size();

    CheckReport bij;
    bij.name = "orbit bijection (" + name + ")";
    if (!asserted) bij.notes.push_back("strictly semistable classes are reported, not asserted");
    // Forward: rep orbit -> (phi orbit, psi orbit) through the least member.
    std::map<std::size_t, std::size_t> fwd_phi, fwd_psi, back_phi, back_psi;
    for (auto id : rep_ids) {
      const auto head = orbits.orbit_of.count(orbits.orbits[id].front()) ? orbits.orbits[id].front() : 0;
      const auto pa = phi_part.orbit_of.at(phi_of.at(head));
      const auto pb = psi_part.orbit_of.at(psi_of.at(head));
      fwd_phi[id] = pa;
      fwd_psi[id] = pb;
      OrbitPairing pr{id, pa, pb, describe(rep_at_index(q, field, alpha, head)), to_string(phi_of.at(head)),
                      to_string(psi_of.at(head))};
      s.pairings.push_back(std::move(pr));
    }
    // Backward: image orbit -> rep orbit of the least preimage.
    for (auto idx : locus) {
      const auto pa = phi_part.orbit_of.at(phi_of.at(idx));
      const auto pb = psi_part.orbit_of.at(psi_of.at(idx));
      back_phi.emplace(pa, orbits.orbit_of.at(idx));
      back_psi.emplace(pb, orbits.orbit_of.at(idx));
    }
    if (asserted) {
      for (auto id : rep_ids) {
        ++bij.checked;
        if (back_phi.at(fwd_phi.at(id)) != id)
          bij.fail({id, s.pairings[0].representative, "phi pairing is not invertible on orbit " + std::to_string(id)});
        if (back_psi.at(fwd_psi.at(id)) != id)
          bij.fail({id, s.pairings[0].representative, "psi pairing is not invertible on orbit " + std::to_string(id)});
      }
      for (const auto& [o, id] : back_phi)
        if (fwd_phi.at(id) != o) bij.fail({o, "", "phi orbit " + std::to_string(o) + " is not hit by its preimage"});
      for (const auto& [o, id] : back_psi)
        if (fwd_psi.at(id) != o) bij.fail({o, "", "psi orbit " + std::to_string(o) + " is not hit by its preimage"});
      if (!(s.rep_orbits == s.phi_orbits && s.rep_orbits == s.psi_orbits))
        bij.fail({0, "", "orbit counts differ: rep=" + std::to_string(s.rep_orbits) +
                             " phi=" + std::to_string(s.phi_orbits) + " psi=" + std::to_string(s.psi_orbits)});
      // The image of the locus must be a union of orbits.
      for (auto id : phi_ids)
        for (const auto& x : phi_part.orbits[id])
          if (!phi_pts.count(x)) bij.fail({id, to_string(x), "phi image is not a union of orbits"});
      for (auto id : psi_ids)
        for (const auto& x : psi_part.orbits[id])
          if (!psi_pts.count(x)) bij.fail({id, to_string(x), "psi image is not a union of orbits"});
    } else {
      bij.checked = rep_ids.size();
      if (!(s.rep_orbits == s.phi_orbits && s.rep_orbits == s.psi_orbits))
        bij.notes.push_back("orbit counts differ on the semistable locus: rep=" + std::to_string(s.rep_orbits) +
                            " phi=" + std::to_string(s.phi_orbits) + " psi=" + std::to_string(s.psi_orbits));
    }
    rep.loci.push_back(std::move(s));
    rep.checks.push_back(std::move(bij));
  };
  summarize("stable", st, true);
  summarize("semistable", sst, sst.size() == st.size());
  if (sst.size() != st.size()) rep.notes.push_back("strictly semistable classes unverified");

  // Image characterization through the theta+/theta- framed enumerations.
  for (auto kind : {FramedKind::source_copies, FramedKind::sink_copies}) {
    const bool plus = kind == FramedKind::source_copies;
    const auto fq = build_framed(q, plus ? alpha_plus : alpha_minus, kind);
    const auto t = framed_param_theta(fq, theta, alpha, n);
    const auto dim = fq.framed_dim(alpha);
    const auto total = rep_space_size(*fq.quiver, dim, field.characteristic());
    budget.require(total, "framed representation space enumeration");
    auto points = parallel_map<std::optional<SubspaceTuple>>(static_cast<std::size_t>(total), workers, [&](std::size_t i) {
      budget.charge(1, "framed representation space enumeration");
      const auto r = rep_at_index(fq.quiver, field, dim, i);
      if (!check_stability(r, t, budget).semistable()) return std::optional<SubspaceTuple>{};
      const auto fr = split(fq, r);
      return std::optional<SubspaceTuple>(plus ? hilbert_point_phi(fr) : hilbert_point_psi(fr));
    });
    std::set<SubspaceTuple> framed_image, direct_image(plus ? phi_all.begin() : psi_all.begin(),
                                                       plus ? phi_all.end() : psi_all.end());
    for (auto& pt : points)
      if (pt) framed_image.insert(*pt);
    CheckReport img;
    img.name = std::string("image characterization (") + (plus ? "phi" : "psi") + ")";
    img.checked = total;
    img.count("framed_semistable_points", static_cast<std::uint64_t>(
                                              std::count_if(points.begin(), points.end(), [](auto& x) { return x.has_value(); })));
    img.count("image_points", framed_image.size());
    if (framed_image != direct_image)
      img.fail({0, "", "framed semistable image has " + std::to_string(framed_image.size()) +
                           " points, direct image has " + std::to_string(direct_image.size())});
    rep.checks.push_back(std::move(img));
  }

  if (rep.bipartite) {
    // Sources and sinks: phi points are determined by their sink components,
    // psi points by their source components.
    CheckReport bip;
    bip.name = "bipartite projection";
    std::vector<bool> sinks(q->vertex_count()), sources(q->vertex_count());
    for (VertexIndex v = 0; v < q->vertex_count(); ++v) {
      sinks[v] = q->is_sink(v) && !q->is_source(v);
      sources[v] = q->is_source(v);
    }
    std::map<SubspaceTuple, SubspaceTuple> seen_phi, seen_psi;
    for (auto idx : sst) {
      ++bip.checked;
      const auto& a = phi_of.at(idx);
      const auto& b = psi_of.at(idx);
      auto [ia, newa] = seen_phi.emplace(project(a, sinks), a);
      if (!newa && !(ia->second == a)) bip.fail({idx, to_string(a), "phi point not determined by its sink components"});
      auto [ib, newb] = seen_psi.emplace(project(b, sources), b);
      if (!newb && !(ib->second == b)) bip.fail({idx, to_string(b), "psi point not determined by its source components"});
    }
    rep.checks.push_back(std::move(bip));
  }
  return rep;
}

}  // namespace qml
