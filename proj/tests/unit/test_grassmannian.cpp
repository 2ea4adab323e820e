#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qml/grassmannian.hpp"

using namespace qml;

namespace {

const PrimeField F2(2);
const DimVector kAlpha{1, 1, 1, 2};

FpRep general_lines() {
  return FpRep(subspace_quiver(3), F2, kAlpha,
               {FpMatrix::from_ints(F2, {{1}, {0}}), FpMatrix::from_ints(F2, {{0}, {1}}),
                FpMatrix::from_ints(F2, {{1}, {1}})});
}

/// Gr_beta(M) counted from the brute-force subrepresentation list.
std::size_t oracle_count(const FpRep& m, const DimVector& beta) {
  std::size_t n = 0;
  for (const auto& u : oracle::subrepresentations(m)) {
    bool match = true;
    for (std::size_t v = 0; v < u.size(); ++v)
      if (static_cast<long long>(oracle::dim_of(u[v], m.field().characteristic())) != beta[v]) match = false;
    n += match;
  }
  return n;
}

}  // namespace

TEST(Grassmannian, SubspaceQuiverAmbients) {
  auto q = subspace_quiver(3);
  auto p = projective_standard(q, F2, {1, 1, 1, 0});
  auto pts = quotient_grassmannian_points(p.rep(), kAlpha);
  EXPECT_EQ(pts.size(), 7u);
  for (const auto& u : pts) EXPECT_EQ(u.dim(), (DimVector{0, 0, 0, 1}));
  EXPECT_EQ(oracle_count(p.rep(), {0, 0, 0, 1}), 7u);

  auto i = injective_standard(q, F2, {0, 0, 0, 2});
  auto ipts = grassmannian_points(i.rep(), kAlpha);
  EXPECT_EQ(ipts.size(), 27u);
  EXPECT_EQ(oracle_count(i.rep(), kAlpha), 27u);
}

TEST(Grassmannian, CountsMatchOracleOnRandomReps) {
  std::mt19937_64 rng(12);
  auto q = linear_quiver(3);
  for (int t = 0; t < 20; ++t) {
    auto m = random_rep(q, F2, {1, 2, 2}, rng);
    for (const DimVector& beta : {DimVector{0, 1, 1}, DimVector{1, 1, 0}, DimVector{0, 0, 1}, DimVector{0, 0, 0}})
      EXPECT_EQ(grassmannian_points(m, beta).size(), oracle_count(m, beta));
  }
}

TEST(Grassmannian, ZeroDimensionIsOnePoint) {
  auto m = general_lines();
  EXPECT_EQ(grassmannian_points(m, {0, 0, 0, 0}).size(), 1u);
}

TEST(Sigma, IdentityAndScalarsFixPoints) {
  auto q = subspace_quiver(3);
  const PrimeField f3(3);
  auto i = injective_standard(q, f3, {0, 0, 0, 2});
  auto pts = grassmannian_points(i.rep(), kAlpha);
  auto id = GroupElement<PrimeField>::identity(f3, {0, 0, 0, 2});
  auto two = GroupElement<PrimeField>::scalar(f3, {0, 0, 0, 2}, 2);
  for (const auto& u : pts) {
    EXPECT_EQ(sigma_action(i, id, u), u);
    EXPECT_EQ(sigma_action(i, two, u), u);
  }
}

TEST(Sigma, TorusScalesKernelColumns) {
  auto q = subspace_quiver(3);
  const PrimeField f3(3);
  auto p = projective_standard(q, f3, {1, 1, 1, 0});
  auto pts = quotient_grassmannian_points(p.rep(), kAlpha);
  GroupElement<PrimeField> h;
  h.blocks = {FpMatrix::from_ints(f3, {{2}}), FpMatrix::from_ints(f3, {{1}}), FpMatrix::from_ints(f3, {{1}}),
              FpMatrix(f3, 0, 0)};
  for (const auto& u : pts) {
    // The kernel line k(x1,x2,x3) moves to k(2 x1, x2, x3).
    auto moved = sigma_action(p, h, u);
    FpMatrix expect = u[3];
    expect(0, 0) = f3.mul(2, expect(0, 0));
    EXPECT_EQ(moved[3], canonical_subspace(expect));
  }
}

TEST(HilbertPoints, SubspaceExample) {
  auto m = general_lines();
  const StabilityParam theta{2, 2, 2, -3};
  auto split = theta_split(theta);
  auto plus = make_framed_rep(m, identity_framing(m, split.plus, true), FramingSide::incoming,
                              restricted_dim(kAlpha, split.plus));
  auto ker = hilbert_point_phi(plus);
  EXPECT_EQ(ker[3], FpMatrix::from_ints(F2, {{1, 1, 1}}));
  auto minus = make_framed_rep(m, identity_framing(m, split.minus, false), FramingSide::outgoing,
                               restricted_dim(kAlpha, split.minus));
  auto im = hilbert_point_psi(minus);
  EXPECT_EQ(im[0], FpMatrix::from_ints(F2, {{1, 0}}));
  EXPECT_EQ(im[1], FpMatrix::from_ints(F2, {{0, 1}}));
  EXPECT_EQ(im[2], FpMatrix::from_ints(F2, {{1, 1}}));

  std::vector<FpMatrix> zero{FpMatrix(F2, 1, 1), FpMatrix(F2, 1, 1), FpMatrix(F2, 1, 1), FpMatrix(F2, 2, 0)};
  EXPECT_THROW(hilbert_point_phi(make_framed_rep(m, zero, FramingSide::incoming, {1, 1, 1, 0})), NotInDegreeZeroLocus);
}

TEST(Orbits, LinesInThePlane) {
  auto q = make_quiver(std::vector<std::string>{"x"}, std::vector<Quiver::ArrowSpec>{});
  auto i = injective_standard(q, F2, {2});
  auto pts = grassmannian_points(i.rep(), {1});
  ASSERT_EQ(pts.size(), 3u);
  auto part = orbit_partition(i, pts, group_elements(F2, {2}));
  ASSERT_EQ(part.orbits.size(), 1u);
  EXPECT_EQ(part.orbits[0].size(), 3u);
  auto scalars = std::vector<GroupElement<PrimeField>>{GroupElement<PrimeField>::identity(F2, {2})};
  EXPECT_EQ(orbit_partition(i, pts, scalars).orbits.size(), 3u);
  auto fixed = grassmannian_points(i.rep(), {2});
  EXPECT_EQ(orbit_of_point(i, fixed[0], group_elements(F2, {2})).size(), 1u);
}

TEST(Equivariance, RandomSamples) {
  for (auto [q, alpha] : {std::pair{subspace_quiver(3), kAlpha}, std::pair{linear_quiver(3), DimVector{1, 2, 1}}}) {
    auto r = verify_equivariance(q, alpha, F2, 100, 5, 2);
    ASSERT_EQ(r.size(), 2u);
    for (const auto& c : r) {
      EXPECT_EQ(c.checked, 100u);
      EXPECT_TRUE(c.passed()) << c.name;
    }
  }
  auto r3 = verify_equivariance(subspace_quiver(3), kAlpha, PrimeField(3), 50, 9);
  for (const auto& c : r3) EXPECT_TRUE(c.passed()) << c.name;
}
