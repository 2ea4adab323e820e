#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qml/enumeration.hpp"
#include "qml/group.hpp"

using namespace qml;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);
const RationalField QQ;

FpMatrix m2(std::initializer_list<std::initializer_list<long long>> rows) { return FpMatrix::from_ints(F2, rows); }

}  // namespace

TEST(PrimeField, ArithmeticMatchesIntegerResidues) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (unsigned a = 0; a < p; ++a)
      for (unsigned b = 0; b < p; ++b) {
        EXPECT_EQ(f.add(a, b), (a + b) % p);
        EXPECT_EQ(f.mul(a, b), (a * b) % p);
        EXPECT_EQ(f.sub(a, b), (a + p - b) % p);
        if (b != 0) EXPECT_EQ(f.mul(f.inv(b), b), 1);
      }
  }
  EXPECT_EQ(F3.from_integer(-1), 2);
  EXPECT_THROW(F3.inv(0), SingularMatrix);
  EXPECT_THROW(PrimeField(4), InvalidArgument);
}

TEST(FieldSpec, ParsesNames) {
  EXPECT_EQ(FieldSpec::parse("F5").p, 5u);
  EXPECT_EQ(FieldSpec::parse("Q").kind, FieldSpec::Kind::rationals);
  EXPECT_THROW(FieldSpec::parse("F6"), InvalidArgument);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
}

TEST(Rref, AlreadyReduced) {
  auto r = rref(m2({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(r.matrix, m2({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, IdenticalRows) {
  auto r = rref(m2({{1, 1}, {1, 1}}));
  EXPECT_EQ(r.matrix, m2({{1, 1}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, ZeroMatrix) {
  FpMatrix z(F2, 2, 3);
  auto r = rref(z);
  EXPECT_EQ(r.matrix, z);
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, IdempotentAndRankMatchesImageSize) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = rng() % 4, c = rng() % 4;
    auto m = random_matrix(F3, r, c, rng);
    auto once = rref(m);
    EXPECT_EQ(rref(once.matrix).matrix, once.matrix);
    // Oracle: |image| = p^rank, counted by applying m to every vector.
    oracle::Space image;
    for (const auto& v : oracle::all_vectors(3, c)) image.insert(oracle::apply(m, v));
    EXPECT_EQ(oracle::dim_of(image, 3), once.rank);
  }
}

TEST(KernelBasis, RationalExample) {
  auto m = QMatrix::from_ints(QQ, {{1, 0, 1}, {0, 1, 1}});
  auto k = kernel_basis(m);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k, QMatrix::from_ints(QQ, {{-1}, {-1}, {1}}));
  EXPECT_TRUE((m * k).is_zero());
}

TEST(KernelBasis, InjectiveAndZeroMaps) {
  auto id = FpMatrix::identity(F2, 3);
  EXPECT_EQ(kernel_basis(id).rows(), 3u);
  EXPECT_EQ(kernel_basis(id).cols(), 0u);
  EXPECT_EQ(kernel_basis(FpMatrix(F2, 2, 3)), FpMatrix::identity(F2, 3));
}

TEST(KernelBasis, MatchesBruteForceKernel) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = rng() % 4, c = rng() % 5;
    auto m = random_matrix(F2, r, c, rng);
    auto k = kernel_basis(m);
    EXPECT_TRUE((m * k).is_zero());
    oracle::Space kernel;
    for (const auto& v : oracle::all_vectors(2, c))
      if (oracle::apply(m, v) == oracle::Vec(r, 0)) kernel.insert(v);
    EXPECT_EQ(oracle::space_of_rows(k.transpose()), kernel);
  }
}

TEST(Matrix, InvertAndSingular) {
  EXPECT_EQ(invert(m2({{1, 1}, {0, 1}})), m2({{1, 1}, {0, 1}}));
  EXPECT_THROW(invert(m2({{1, 1}, {1, 1}})), SingularMatrix);
  EXPECT_THROW(invert(FpMatrix(F2, 2, 3)), DimensionMismatch);
  auto q = QMatrix::from_ints(QQ, {{2, 1}, {1, 1}});
  EXPECT_EQ(q * invert(q), QMatrix::identity(QQ, 2));
}

TEST(Matrix, ImageOfZeroMapIsEmpty) {
  auto b = image_basis(FpMatrix(F2, 3, 2));
  EXPECT_EQ(b.cols(), 0u);
  EXPECT_EQ(b.rows(), 3u);
}

TEST(Matrix, BlockAssemble) {
  auto one = [](long long v) { return FpMatrix::from_ints(F3, {{v}}); };
  auto m = block_assemble<PrimeField>({{one(1), one(2)}, {one(0), one(1)}}, F3);
  EXPECT_EQ(m, FpMatrix::from_ints(F3, {{1, 2}, {0, 1}}));
  EXPECT_THROW(block_assemble<PrimeField>({{one(1), FpMatrix(F3, 2, 1)}}, F3), DimensionMismatch);
}

TEST(Matrix, EmptyShapesComposeAsZeroMaps) {
  FpMatrix a(F2, 2, 0), b(F2, 0, 3);
  auto c = a * b;
  EXPECT_EQ(c.rows(), 2u);
  EXPECT_EQ(c.cols(), 3u);
  EXPECT_TRUE(c.is_zero());
  EXPECT_THROW(FpMatrix(F2, 2, 2) * FpMatrix(F2, 3, 1), DimensionMismatch);
}

TEST(Matrix, DeterminantCountsGeneralLinearGroup) {
  // |GL_2(F_3)| = 48 counted by determinant over all 81 matrices.
  std::size_t invertible = 0;
  for (unsigned code = 0; code < 81; ++code) {
    FpMatrix m(F3, 2, 2);
    unsigned c = code;
    for (auto& x : m.data()) {
      x = static_cast<PrimeField::Element>(c % 3);
      c /= 3;
    }
    if (determinant(m) != 0) ++invertible;
  }
  EXPECT_EQ(invertible, 48u);
  EXPECT_EQ(general_linear_order(3, 2), 48u);
  EXPECT_EQ(general_linear_group(F2, 2).size(), 6u);
}

TEST(Subspaces, GaussianBinomialAndEnumeration) {
  EXPECT_EQ(enumerate_subspaces(F2, 2, 1).size(), 3u);
  EXPECT_EQ(enumerate_subspaces(F3, 2, 1).size(), 4u);
  auto zero = enumerate_subspaces(F2, 3, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].rows(), 0u);
  for (unsigned p : {2u, 3u}) {
    PrimeField f(p);
    const std::size_t dmax = p == 2 ? 4 : 3;
    for (std::size_t d = 0; d <= dmax; ++d) {
      const auto all = oracle::all_subspaces(p, d);
      for (std::size_t k = 0; k <= d; ++k) {
        std::set<oracle::Space> expected;
        for (const auto& s : all)
          if (oracle::dim_of(s, p) == k) expected.insert(s);
        std::set<oracle::Space> got;
        for (const auto& s : enumerate_subspaces(f, d, k)) got.insert(oracle::space_of_rows(s));
        EXPECT_EQ(got, expected) << "p=" << p << " d=" << d << " k=" << k;
        EXPECT_EQ(gaussian_binomial(p, d, k), expected.size());
      }
    }
  }
}

TEST(Subspaces, BudgetStopsEnumeration) {
  Budget b(3);
  EXPECT_THROW(enumerate_subspaces(F2, 3, 1, b), BudgetExceeded);
}
