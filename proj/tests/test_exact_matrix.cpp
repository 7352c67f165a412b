#include <gtest/gtest.h>

#include <stdexcept>

#include "cliffverify/exact_matrix.hpp"

namespace cliffverify {
namespace {

ExactMatrix small(std::initializer_list<std::initializer_list<int>> rows) {
  ExactMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m.at(r, c++) = GaussianRational(v);
    ++r;
  }
  return m;
}

TEST(ExactMatrix, IdentityAndRealmInference) {
  const ExactMatrix id16 = ExactMatrix::identity(16);
  EXPECT_EQ(id16.realm(), Realm::real16);
  EXPECT_TRUE(id16.is_real());
  EXPECT_TRUE(id16.is_symmetric());
  EXPECT_EQ(id16.trace(), GaussianRational(16));

  EXPECT_EQ(ExactMatrix::identity(32).realm(), Realm::real32);
  EXPECT_EQ(ExactMatrix::identity(3).realm(), Realm::other);
  EXPECT_EQ(ExactMatrix::infer_realm(16, false), Realm::complex16);
  EXPECT_EQ(ExactMatrix::infer_realm(32, false), Realm::other);
}

TEST(ExactMatrix, ArithmeticAndPredicates) {
  const ExactMatrix a = small({{1, 2}, {3, 4}});
  const ExactMatrix b = small({{0, -1}, {1, 0}});
  EXPECT_EQ(a + b, small({{1, 1}, {4, 4}}));
  EXPECT_EQ(a - a, small({{0, 0}, {0, 0}}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(b.is_skew());
  EXPECT_FALSE(b.is_symmetric());
  EXPECT_EQ((-b), small({{0, 1}, {-1, 0}}));
  EXPECT_EQ(a.transpose(), small({{1, 3}, {2, 4}}));
  EXPECT_EQ(a.scaled(GaussianRational(2)), small({{2, 4}, {6, 8}}));
  EXPECT_THROW(a.check_dim(ExactMatrix::identity(3)), std::invalid_argument);
}

TEST(ExactMatrix, MultiplicationBracketAnticommutator) {
  const ExactMatrix a = small({{1, 2}, {3, 4}});
  const ExactMatrix b = small({{0, -1}, {1, 0}});
  EXPECT_EQ(a * b, small({{2, -1}, {4, -3}}));
  EXPECT_EQ(b * a, small({{-3, -4}, {1, 2}}));
  EXPECT_EQ(mat_bracket(a, b), small({{5, 3}, {3, -5}}));
  EXPECT_EQ(mat_anticommutator(a, b), small({{-1, -5}, {5, -1}}));
  EXPECT_EQ(b * b, -ExactMatrix::identity(2));
}

TEST(ExactMatrix, ConjTransposeAndHermInner) {
  ExactMatrix a(2);
  a.at(0, 1) = GaussianRational::i();
  EXPECT_EQ(a.conj_transpose().at(1, 0), -GaussianRational::i());
  // <A, A> = sum |entries|^2.
  EXPECT_EQ(herm_inner(a, a), GaussianRational(1));
  ExactMatrix b(2);
  b.at(0, 1) = GaussianRational(Rational(0), Rational(2));
  EXPECT_EQ(herm_inner(a, b), GaussianRational(2));
  EXPECT_EQ(herm_inner(b, a), GaussianRational(2));
  b.at(0, 1) = GaussianRational(2);
  EXPECT_EQ(herm_inner(a, b), GaussianRational(Rational(0), Rational(-2)));
}

TEST(ExactMatrix, RealifyBlocks) {
  // realify(A + iB) = [[A, -B], [B, A]].
  ExactMatrix m(2);
  m.at(0, 0) = GaussianRational(Rational(1), Rational(2));  // 1 + 2i
  m.at(1, 0) = GaussianRational(Rational(0), Rational(-1));  // -i
  const ExactMatrix r = realify(m);
  ASSERT_EQ(r.dim(), 4u);
  EXPECT_TRUE(r.is_real());
  EXPECT_EQ(r, small({{1, 0, -2, 0}, {0, 0, 1, 0}, {2, 0, 1, 0}, {-1, 0, 0, 0}}));
}

TEST(ExactMatrix, RealifyIsMultiplicative) {
  ExactMatrix m(2), n(2);
  m.at(0, 1) = GaussianRational(Rational(1), Rational(1));
  m.at(1, 0) = GaussianRational(Rational(-2), Rational(3));
  n.at(0, 0) = GaussianRational::i();
  n.at(1, 1) = GaussianRational(Rational(1, 2), Rational(-1));
  EXPECT_EQ(realify(m * n), realify(m) * realify(n));
  EXPECT_EQ(realify(m.conj_transpose()), realify(m).transpose());
}

TEST(ExactMatrix, StandardComplexStructure) {
  const ExactMatrix j = standard_complex_structure();
  ASSERT_EQ(j.dim(), 32u);
  EXPECT_EQ(j.realm(), Realm::real32);
  EXPECT_TRUE(j.is_skew());
  EXPECT_EQ(j * j, -ExactMatrix::identity(32));
  // It is exactly the realification of i * Id on the complex side.
  ExactMatrix i_id(16, Realm::complex16);
  for (std::size_t k = 0; k < 16; ++k) i_id.at(k, k) = GaussianRational::i();
  EXPECT_EQ(j, realify(i_id));
  EXPECT_THROW(realify(j), std::invalid_argument);
}

}  // namespace
}  // namespace cliffverify
