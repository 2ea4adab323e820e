#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qml/enumeration.hpp"

using namespace qml;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

FpRep rep(QuiverPtr q, const PrimeField& f, DimVector d, std::vector<FpMatrix> maps) {
  return FpRep(std::move(q), f, std::move(d), std::move(maps));
}

DimVector random_dim(std::size_t n, std::mt19937_64& rng, long long max) {
  std::vector<long long> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(static_cast<long long>(rng() % (max + 1)));
  return DimVector(d);
}

}  // namespace

TEST(Representation, ValidatesShapes) {
  auto a2 = linear_quiver(2);
  EXPECT_THROW(rep(a2, F2, {1, 1}, {FpMatrix(F2, 2, 1)}), DimensionMismatch);
  EXPECT_THROW(rep(a2, F2, {1, 1}, {}), DimensionMismatch);
  auto z = FpRep::zero(a2, F2, {0, 2});
  EXPECT_EQ(z.map(0).rows(), 2u);
  EXPECT_EQ(z.map(0).cols(), 0u);
}

TEST(StandardModules, SmallExamples) {
  auto a2 = linear_quiver(2);
  auto p1 = projective_module(a2, F2, 0);
  EXPECT_EQ(p1.rep.dim(), (DimVector{1, 1}));
  EXPECT_EQ(p1.rep.map(0), FpMatrix::from_ints(F2, {{1}}));
  auto a3 = linear_quiver(3);
  auto i3 = injective_module(a3, F2, 2);
  EXPECT_EQ(i3.rep.dim(), (DimVector{1, 1, 1}));
  EXPECT_EQ(i3.rep.map(0), FpMatrix::from_ints(F2, {{1}}));
  EXPECT_EQ(i3.rep.map(1), FpMatrix::from_ints(F2, {{1}}));
  EXPECT_TRUE(tensor_by_space(p1, 0).rep.dim().is_zero());
}

TEST(StandardModules, SubspaceQuiverAmbients) {
  auto q = subspace_quiver(3);
  auto pplus = projective_sum(q, F2, DimVector{1, 1, 1, 0});
  EXPECT_EQ(pplus.rep.dim(), (DimVector{1, 1, 1, 3}));
  // The arrows carry the standard basis columns e_1, e_2, e_3.
  for (std::size_t a = 0; a < 3; ++a) {
    FpMatrix e(F2, 3, 1);
    e(a, 0) = 1;
    EXPECT_EQ(pplus.rep.map(a), e);
  }
  auto iminus = injective_sum(q, F2, DimVector{0, 0, 0, 2});
  EXPECT_EQ(iminus.rep.dim(), (DimVector{2, 2, 2, 2}));
}

TEST(StandardModules, DimensionsCountPaths) {
  auto q = make_quiver(std::vector<std::string>{"a", "b", "c"},
                       std::vector<Quiver::ArrowSpec>{{"x", "a", "b"}, {"y", "a", "b"}, {"z", "b", "c"}});
  for (VertexIndex i = 0; i < 3; ++i) {
    auto p = projective_module(q, F2, i);
    auto in = injective_module(q, F2, i);
    for (VertexIndex j = 0; j < 3; ++j) {
      EXPECT_EQ(p.rep.vdim(j), enumerate_paths(*q, i, j).size());
      EXPECT_EQ(in.rep.vdim(j), enumerate_paths(*q, j, i).size());
    }
  }
}

TEST(Hom, AgainstBruteForceCount) {
  std::mt19937_64 rng(3);
  for (auto q : {linear_quiver(3), subspace_quiver(3)}) {
    for (int t = 0; t < 40; ++t) {
      auto m = random_rep(q, F2, random_dim(q->vertex_count(), rng, 2), rng);
      auto n = random_rep(q, F2, random_dim(q->vertex_count(), rng, 1), rng);
      EXPECT_EQ(hom_dim(m, n), oracle::log_p(oracle::hom_count(m, n), 2));
      for (const auto& h : hom_basis(m, n)) EXPECT_TRUE(is_homomorphism(h, m, n));
    }
  }
}

TEST(Hom, ProjectiveAndInjectiveRepresentVertices) {
  std::mt19937_64 rng(4);
  auto q = subspace_quiver(3);
  for (int t = 0; t < 20; ++t) {
    auto m = random_rep(q, F3, random_dim(4, rng, 2), rng);
    for (VertexIndex i = 0; i < 4; ++i) {
      EXPECT_EQ(hom_dim(projective_module(q, F3, i).rep, m), m.vdim(i));
      EXPECT_EQ(hom_dim(m, injective_module(q, F3, i).rep), m.vdim(i));
    }
  }
}

TEST(Ext, SmallExamples) {
  auto a2 = linear_quiver(2);
  auto s1 = simple_module(a2, F2, 0).rep, s2 = simple_module(a2, F2, 1).rep;
  EXPECT_EQ(hom_dim(s1, s2), 0u);
  EXPECT_EQ(ext_dim_via_projective(s1, s2), 1u);
  EXPECT_EQ(ext_dim_via_injective(s1, s2), 1u);
  EXPECT_EQ(ext_dim_via_projective(s2, s1), 0u);
  EXPECT_EQ(ext_dim_via_injective(s2, s1), 0u);
  auto m = direct_sum<PrimeField>({projective_module(a2, F2, 0), simple_module(a2, F2, 1)}, a2, F2).rep;
  EXPECT_EQ(ext_dim_via_projective(m, m), 0u);
  EXPECT_EQ(ext_dim_via_injective(m, m), 0u);
}

TEST(Ext, ProjectivesHaveNoExtensions) {
  std::mt19937_64 rng(8);
  auto q = linear_quiver(3);
  for (int t = 0; t < 20; ++t) {
    auto n = random_rep(q, F2, random_dim(3, rng, 2), rng);
    for (VertexIndex i = 0; i < 3; ++i) EXPECT_EQ(ext_dim_via_projective(projective_module(q, F2, i).rep, n), 0u);
  }
}

TEST(Resolutions, AreExact) {
  std::mt19937_64 rng(9);
  for (auto q : {linear_quiver(3), subspace_quiver(3)}) {
    for (int t = 0; t < 20; ++t) {
      auto m = random_rep(q, F3, random_dim(q->vertex_count(), rng, 2), rng);
      auto pr = projective_resolution(m);
      EXPECT_TRUE(is_homomorphism(pr.phi, pr.p0.rep, m));
      EXPECT_TRUE(is_homomorphism(pr.d, pr.p1.rep, pr.p0.rep));
      EXPECT_TRUE(is_surjective(pr.phi));
      EXPECT_TRUE(is_injective(pr.d));
      for (std::size_t v = 0; v < q->vertex_count(); ++v) {
        EXPECT_TRUE((pr.phi[v] * pr.d[v]).is_zero());
        EXPECT_EQ(rank(pr.d[v]) + m.vdim(v), pr.p0.rep.vdim(v));
      }
      auto ir = injective_resolution(m);
      EXPECT_TRUE(is_injective(ir.psi));
      EXPECT_TRUE(is_surjective(ir.delta));
      for (std::size_t v = 0; v < q->vertex_count(); ++v) {
        EXPECT_TRUE((ir.delta[v] * ir.psi[v]).is_zero());
        EXPECT_EQ(rank(ir.delta[v]) + m.vdim(v), ir.i0.rep.vdim(v));
      }
    }
  }
}

TEST(CanonicalMaps, SubspaceQuiverSinkMatrix) {
  auto q = subspace_quiver(3);
  auto m = rep(q, F2, {1, 1, 1, 2},
               {FpMatrix::from_ints(F2, {{1}, {0}}), FpMatrix::from_ints(F2, {{0}, {1}}),
                FpMatrix::from_ints(F2, {{1}, {1}})});
  auto [pplus, phi] = canonical_phi(m, StabilityParam{2, 2, 2, -3});
  EXPECT_EQ(phi[3], FpMatrix::from_ints(F2, {{1, 0, 1}, {0, 1, 1}}));
  EXPECT_TRUE(is_surjective(phi));
}

TEST(CanonicalMaps, LinearQuiverStackedColumn) {
  auto q = linear_quiver(3);
  auto a = FpMatrix::from_ints(F3, {{2}});
  auto b = FpMatrix::from_ints(F3, {{1}});
  auto m = rep(q, F3, {1, 1, 1}, {a, b});
  auto [iminus, psi] = canonical_psi(m, StabilityParam{0, 0, 0});
  EXPECT_EQ(psi[0], FpMatrix::from_ints(F3, {{1}, {2}, {2}}));
  auto zero = FpRep::zero(q, F3, {0, 0, 0});
  auto [p0, phi0] = canonical_phi(zero, StabilityParam{0, 0, 0});
  EXPECT_TRUE(p0.rep.dim().is_zero());
}

TEST(FramedMaps, IdentityFramingIsCanonicalAndZeroFramingHasZeroImage) {
  auto q = subspace_quiver(3);
  std::mt19937_64 rng(1);
  const StabilityParam theta{2, 2, 2, -3};
  auto split = theta_split(theta);
  for (int t = 0; t < 10; ++t) {
    auto m = random_rep(q, F2, {1, 1, 1, 2}, rng);
    auto beta = restricted_dim(m.dim(), split.plus);
    auto framed = framed_phi(m, identity_framing(m, split.plus, true), beta);
    auto canonical = canonical_phi(m, theta);
    EXPECT_EQ(framed.second, canonical.second);
    std::vector<FpMatrix> zero;
    for (VertexIndex v = 0; v < 4; ++v) zero.emplace_back(F2, m.vdim(v), beta[v]);
    auto z = framed_phi(m, zero, beta).second;
    for (const auto& c : z.components) EXPECT_TRUE(c.is_zero());
  }
}
