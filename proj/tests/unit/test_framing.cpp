#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qml/framing.hpp"

using namespace qml;

namespace {

const PrimeField F2(2);
const StabilityParam kTheta{2, 2, 2, -3};
const DimVector kAlpha{1, 1, 1, 2};

std::vector<std::string> names(const FramedQuiver& fq) { return fq.quiver->vertices(); }

/// Independent reading of the subrepresentation condition and of phi being
/// onto, from explicit vector sets.
struct SourceConditions {
  bool image_not_in_proper_subrep = true;
  bool phi_onto = true;
};

SourceConditions source_conditions(const FramedRep& fr) {
  const auto& m = fr.base;
  const auto& q = m.quiver();
  const unsigned p = m.field().characteristic();
  SourceConditions out;
  // Generators of the image of phi at each vertex j: M_path A_i e for paths i -> j.
  std::vector<std::vector<oracle::Vec>> gens(q.vertex_count());
  for (VertexIndex i = 0; i < q.vertex_count(); ++i)
    for (std::size_t col = 0; col < fr.framing[i].cols(); ++col) {
      oracle::Vec e(fr.framing[i].cols(), 0);
      e[col] = 1;
      const auto v = oracle::apply(fr.framing[i], e);
      for (VertexIndex j = 0; j < q.vertex_count(); ++j)
        for (const auto& path : enumerate_paths(q, i, j)) {
          auto w = v;
          for (auto a : path.arrows) w = oracle::apply(m.map(a), w);
          gens[j].push_back(w);
        }
    }
  for (VertexIndex j = 0; j < q.vertex_count(); ++j)
    if (oracle::dim_of(oracle::span(gens[j], p, m.vdim(j)), p) != m.vdim(j)) out.phi_onto = false;
  for (const auto& u : oracle::subrepresentations(m)) {
    bool proper = false, contains = true;
    for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
      if (oracle::dim_of(u[i], p) != m.vdim(i)) proper = true;
      for (std::size_t col = 0; col < fr.framing[i].cols(); ++col) {
        oracle::Vec e(fr.framing[i].cols(), 0);
        e[col] = 1;
        if (!u[i].count(oracle::apply(fr.framing[i], e))) contains = false;
      }
    }
    if (proper && contains) out.image_not_in_proper_subrep = false;
  }
  return out;
}

}  // namespace

TEST(FramedQuivers, Construction) {
  auto q = subspace_quiver(3);
  auto up = build_framed(q, {1, 1, 1, 0}, FramedKind::source_framing);
  EXPECT_EQ(names(up).front(), "0");
  EXPECT_EQ(up.quiver->arrow_count(), 3u + 3u);
  for (VertexIndex i = 0; i < 3; ++i) EXPECT_EQ(up.framing_arrows[i].size(), 1u);
  EXPECT_TRUE(up.framing_arrows[3].empty());
  EXPECT_EQ(up.framed_dim(kAlpha), (DimVector{1, 1, 1, 1, 2}));

  auto down = build_framed(q, {0, 0, 0, 2}, FramedKind::sink_framing);
  EXPECT_EQ(names(down).back(), "∞");
  EXPECT_EQ(down.framing_arrows[3].size(), 2u);
  EXPECT_EQ(down.framed_dim(kAlpha), (DimVector{1, 1, 1, 2, 1}));

  auto a3 = linear_quiver(3);
  auto doubled = build_framed(a3, {1, 1, 1}, FramedKind::sink_copies);
  EXPECT_EQ(doubled.quiver->vertex_count(), 6u);
  EXPECT_EQ(doubled.quiver->arrow_count(), 2u + 3u);
  EXPECT_EQ(names(doubled)[3], "1-");
  auto copies = build_framed(a3, {1, 1, 1}, FramedKind::source_copies);
  EXPECT_EQ(names(copies)[0], "1+");

  auto empty = build_framed(a3, {0, 0, 0}, FramedKind::source_framing);
  EXPECT_EQ(empty.quiver->vertex_count(), 4u);
  EXPECT_TRUE(empty.quiver->arrows_out(*empty.framing_vertex).empty());
}

TEST(FramedQuivers, EmbedSplitRoundTrip) {
  auto q = subspace_quiver(3);
  auto fq = build_framed(q, {0, 0, 0, 2}, FramedKind::sink_framing);
  Budget b;
  std::size_t n = 0;
  for_each_framed_rep(fq, F2, kAlpha, b, [&](std::uint64_t i, const FramedRep& fr) {
    if (i % 37 == 0) {
      EXPECT_EQ(split(fq, embed(fq, fr)), fr);
      EXPECT_EQ(rep_index(embed(fq, fr)), i);
    }
    ++n;
    return true;
  });
  EXPECT_EQ(n, 64u * 16u);
}

TEST(FramedParameters, Values) {
  auto q = subspace_quiver(3);
  auto up = build_framed(q, {1, 1, 1, 0}, FramedKind::source_framing);
  EXPECT_EQ(framed_param_c(up, kAlpha), (StabilityParam{5, -1, -1, -1, -1}));
  EXPECT_EQ(theta_value(framed_param_c(up, kAlpha), up.framed_dim(kAlpha)), 0);
  auto down = build_framed(q, {0, 0, 0, 2}, FramedKind::sink_framing);
  EXPECT_EQ(theta_value(framed_param_c(down, kAlpha), down.framed_dim(kAlpha)), 0);

  auto copies = build_framed(q, {1, 1, 1, 0}, FramedKind::source_copies);
  EXPECT_EQ(framed_param_theta(copies, kTheta, kAlpha, 10), (StabilityParam{10, 10, 10, 0, -8, -8, -8, -3}));
  EXPECT_EQ(framed_param_eta(up, kTheta, kAlpha, 10), (StabilityParam{30, -8, -8, -8, -3}));
  EXPECT_EQ(theta_value(framed_param_eta(up, kTheta, kAlpha, 10), up.framed_dim(kAlpha)), 0);

  auto a3 = linear_quiver(3);
  auto z = StabilityParam{0, 0, 0};
  auto plus = build_framed(a3, {1, 1, 1}, FramedKind::source_copies);
  EXPECT_EQ(framed_param_theta(plus, z, {1, 1, 1}, 4), (StabilityParam{4, 4, 4, -4, -4, -4}));
  auto minus = build_framed(a3, {1, 1, 1}, FramedKind::sink_copies);
  EXPECT_EQ(framed_param_theta(minus, z, {1, 1, 1}, 4), (StabilityParam{4, 4, 4, -4, -4, -4}));
  auto point = make_quiver(std::vector<std::string>{"x"}, std::vector<Quiver::ArrowSpec>{});
  EXPECT_EQ(framed_param_eta(build_framed(point, {1}, FramedKind::source_framing), StabilityParam{0}, {1}, 6),
            (StabilityParam{6, -6}));

  EXPECT_THROW(framed_param_theta(copies, StabilityParam{1, 1, 1, -1}, kAlpha, 10), ThetaAlphaNonzero);
}

TEST(FramedParameters, DefaultN) {
  EXPECT_EQ(default_N(kTheta, kAlpha), 13);
  EXPECT_EQ(default_N({0, 0, 0}, {1, 2, 1}), 1);
  EXPECT_EQ(default_N(kTheta, {0, 0, 0, 0}), 1);
}

TEST(GroupAction, ComposesAndMatchesFormula) {
  auto q = subspace_quiver(3);
  std::mt19937_64 rng(2);
  const DimVector beta{1, 1, 1, 0};
  for (int t = 0; t < 20; ++t) {
    auto m = random_rep(q, F2, kAlpha, rng);
    std::vector<FpMatrix> a;
    for (VertexIndex i = 0; i < 4; ++i) a.push_back(random_matrix(F2, kAlpha[i], beta[i], rng));
    auto fr = make_framed_rep(m, a, FramingSide::incoming, beta);
    auto h1 = random_group_element(F2, beta, rng), h2 = random_group_element(F2, beta, rng);
    auto g1 = random_group_element(F2, kAlpha, rng), g2 = random_group_element(F2, kAlpha, rng);
    EXPECT_EQ(act(h1 * h2, g1 * g2, fr), act(h1, g1, act(h2, g2, fr)));
    auto moved = act(h1, g1, fr);
    for (VertexIndex i = 0; i < 4; ++i) EXPECT_EQ(moved.framing[i], g1[i] * a[i] * invert(h1[i]));
  }
}

TEST(EngelReineke, A2SmallestFramingCountsEightPoints) {
  auto r = verify_engel_reineke(linear_quiver(2), {1, 1}, {1, 0}, F2, Budget::unlimited());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].checked + r[1].checked, 8u);
  for (const auto& c : r) EXPECT_TRUE(c.passed()) << c.name;
}

TEST(EngelReineke, AgreesWithIndependentConditions) {
  auto q = linear_quiver(2);
  const DimVector alpha{1, 1}, beta{1, 1};
  auto fq = build_framed(q, beta, FramedKind::source_framing);
  const auto c = framed_param_c(fq, alpha);
  Budget b;
  for_each_framed_rep(fq, F2, alpha, b, [&](std::uint64_t, const FramedRep& fr) {
    const auto conds = source_conditions(fr);
    const auto verdict = oracle::stability(embed(fq, fr), c.values());
    const bool sst = verdict != oracle::Verdict::unstable;
    EXPECT_EQ(sst, conds.phi_onto) << describe(fr);
    EXPECT_EQ(sst, conds.image_not_in_proper_subrep) << describe(fr);
    EXPECT_EQ(verdict == oracle::Verdict::stable, sst);
    return true;
  });
  auto r = verify_engel_reineke(q, alpha, beta, F2, Budget::unlimited());
  for (const auto& rep : r) EXPECT_TRUE(rep.passed()) << rep.name;
}

TEST(EngelReineke, ZeroFramingAndZeroAlpha) {
  auto q = linear_quiver(2);
  auto fq = build_framed(q, {1, 1}, FramedKind::source_framing);
  FpRep m(q, F2, {1, 1}, {FpMatrix::identity(F2, 1)});
  auto fr = make_framed_rep(m, {FpMatrix(F2, 1, 1), FpMatrix(F2, 1, 1)}, FramingSide::incoming, {1, 1});
  EXPECT_FALSE(check_stability(embed(fq, fr), framed_param_c(fq, {1, 1})).semistable());
  auto r = verify_engel_reineke(q, {0, 0}, {1, 1}, F2, Budget::unlimited());
  for (const auto& rep : r) {
    EXPECT_EQ(rep.checked, 1u);
    EXPECT_TRUE(rep.passed());
  }
}

TEST(EngelReineke, SubspacePresetBothSides) {
  for (const auto& beta : {DimVector{1, 1, 1, 0}, DimVector{0, 0, 0, 2}}) {
    auto r = verify_engel_reineke(subspace_quiver(3), kAlpha, beta, F2, Budget::unlimited(), 2);
    for (const auto& rep : r) EXPECT_TRUE(rep.passed()) << rep.name;
  }
}

TEST(ThetaPm, SingularFramingOrUnstableBaseIsUnstable) {
  auto q = subspace_quiver(3);
  auto fq = build_framed(q, {1, 1, 1, 0}, FramedKind::source_copies);
  const auto t = framed_param_theta(fq, kTheta, kAlpha, 13);
  auto good = FpRep(q, F2, kAlpha,
                    {FpMatrix::from_ints(F2, {{1}, {0}}), FpMatrix::from_ints(F2, {{0}, {1}}),
                     FpMatrix::from_ints(F2, {{1}, {1}})});
  auto ids = std::vector<FpMatrix>{FpMatrix::identity(F2, 1), FpMatrix::identity(F2, 1), FpMatrix::identity(F2, 1),
                                   FpMatrix(F2, 0, 0)};
  // Copy framing uses square blocks on Q0+ and an empty block at the sink.
  ids[3] = FpMatrix(F2, 2, 0);
  auto fr = make_framed_rep(good, ids, FramingSide::incoming, {1, 1, 1, 0});
  EXPECT_TRUE(check_stability(embed(fq, fr), t).stable());
  auto singular = ids;
  singular[0] = FpMatrix(F2, 1, 1);
  EXPECT_FALSE(check_stability(embed(fq, make_framed_rep(good, singular, FramingSide::incoming, {1, 1, 1, 0})), t)
                   .semistable());
  auto bad = FpRep(q, F2, kAlpha,
                   {FpMatrix::from_ints(F2, {{1}, {0}}), FpMatrix::from_ints(F2, {{1}, {0}}),
                    FpMatrix::from_ints(F2, {{0}, {1}})});
  EXPECT_FALSE(check_stability(embed(fq, make_framed_rep(bad, ids, FramingSide::incoming, {1, 1, 1, 0})), t).semistable());
}

TEST(ThetaPm, SubspacePresetForTwoN) {
  for (long long n : {13LL, 20LL}) {
    auto r = verify_theta_pm(subspace_quiver(3), kAlpha, kTheta, F2, n, Budget::unlimited(), 2);
    ASSERT_EQ(r.size(), 2u);
    for (const auto& rep : r) EXPECT_TRUE(rep.passed()) << rep.name;
    EXPECT_EQ(r[0].counts.at("stable"), 6u);
  }
}

TEST(FramedStability, LociCoincide) {
  for (long long n : {13LL, 20LL}) {
    auto r = verify_framed_stability(subspace_quiver(3), kAlpha, kTheta, F2, n, Budget::unlimited(), 2);
    for (const auto& rep : r) EXPECT_TRUE(rep.passed()) << rep.name;
  }
  auto zero = verify_framed_stability(linear_quiver(2), {0, 0}, {0, 0}, F2, 1, Budget::unlimited());
  for (const auto& rep : zero) {
    EXPECT_EQ(rep.checked, 1u);
    EXPECT_TRUE(rep.passed());
  }
}

TEST(FramedStability, SmallNIsFlagged) {
  // N = 1 is far below default_N = 13; any failure must carry the note.
  auto r = verify_framed_stability(subspace_quiver(3), kAlpha, kTheta, F2, 1, Budget::unlimited());
  for (const auto& rep : r)
    if (!rep.passed()) {
      ASSERT_FALSE(rep.notes.empty());
      EXPECT_NE(rep.notes[0].find("insufficient"), std::string::npos);
    }
}
