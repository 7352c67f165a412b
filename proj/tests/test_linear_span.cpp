#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/linear_span.hpp"

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

TEST(LinearSpan, FlattenSeparatesRealAndImaginary) {
  ExactMatrix m(2);
  m.at(0, 0) = GaussianRational(Rational(3), Rational(-1));
  m.at(1, 1) = GaussianRational(Rational(0), Rational(2));
  const SparseVec v = flatten_matrix(m);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0].first, 0u);  // re(0,0)
  EXPECT_EQ(v[0].second, Rational(3));
  EXPECT_EQ(v[1].first, 1u);  // im(0,0)
  EXPECT_EQ(v[1].second, Rational(-1));
  EXPECT_EQ(v[2].first, 7u);  // im(1,1) = 2*(1*2+1)+1
  EXPECT_EQ(v[2].second, Rational(2));
}

TEST(LinearSpan, RankCountsRealDimension) {
  const ExactMatrix id = ExactMatrix::identity(2);
  ExactMatrix i_id(2);
  i_id.at(0, 0) = GaussianRational::i();
  i_id.at(1, 1) = GaussianRational::i();
  // Over the rationals Id and i*Id are independent directions.
  EXPECT_EQ(rank_of_family({id, i_id}), 2u);
  EXPECT_EQ(rank_of_family({id, id + id}), 1u);
  EXPECT_EQ(rank_of_family({}), 0u);
  EXPECT_EQ(rank_of_family({ExactMatrix(2)}), 0u);
}

TEST(LinearSpan, RankWithCollisionsAndFractions) {
  const ExactMatrix a = small({{1, 2}, {0, 0}});
  const ExactMatrix b = small({{2, 4}, {1, 0}});  // overlaps a's support
  const ExactMatrix c = small({{3, 6}, {2, 0}});  // = -a + 2b
  EXPECT_EQ(rank_of_family({a, b, c}), 2u);
  const ExactMatrix d = small({{0, 0}, {0, 7}});
  EXPECT_EQ(rank_of_family({a, b, c, d}), 3u);
  // Fractional multiples of the same direction collapse.
  EXPECT_EQ(rank_of_family({a, a.scaled(GaussianRational(Rational(2, 3)))}), 1u);
}

TEST(LinearSpan, SpanBasisSolveRecoversCoefficients) {
  const ExactMatrix b0 = small({{1, 0}, {0, 0}});
  const ExactMatrix b1 = small({{0, 1}, {1, 0}});
  const ExactMatrix b2 = small({{1, 1}, {0, 1}});
  const SpanBasis basis({b0, b1, b2});
  EXPECT_EQ(basis.size(), 3u);

  ExactMatrix target = b0.scaled(GaussianRational(Rational(1, 2)));
  target += b1.scaled(GaussianRational(Rational(-1, 3)));
  target += b2.scaled(GaussianRational(Rational(5)));
  const SolveResult res = basis.solve(target);
  ASSERT_TRUE(res.in_span);
  ASSERT_EQ(res.coeffs.size(), 3u);
  EXPECT_EQ(res.coeffs[0], Rational(1, 2));
  EXPECT_EQ(res.coeffs[1], Rational(-1, 3));
  EXPECT_EQ(res.coeffs[2], Rational(5));
}

TEST(LinearSpan, SolveDetectsNonMembership) {
  const ExactMatrix b0 = small({{1, 0}, {0, 0}});
  const ExactMatrix b1 = small({{0, 1}, {0, 0}});
  const SpanBasis basis({b0, b1});
  const SolveResult res = basis.solve(small({{1, 1}, {1, 0}}));
  EXPECT_FALSE(res.in_span);
  EXPECT_TRUE(res.coeffs.empty());
  // The zero matrix is in every span with all-zero coefficients.
  const SolveResult zero = basis.solve(ExactMatrix(2));
  ASSERT_TRUE(zero.in_span);
  EXPECT_EQ(zero.coeffs[0], Rational());
  EXPECT_EQ(zero.coeffs[1], Rational());
}

TEST(LinearSpan, DependentBasisThrows) {
  const ExactMatrix b0 = small({{1, 2}, {3, 4}});
  const ExactMatrix b1 = small({{2, 4}, {6, 8}});
  EXPECT_THROW(SpanBasis({b0, b1}), std::invalid_argument);
}

TEST(LinearSpan, SolveWithComplexEntries) {
  ExactMatrix j(2);
  j.at(0, 1) = GaussianRational::i();
  j.at(1, 0) = -GaussianRational::i();
  const ExactMatrix id = ExactMatrix::identity(2);
  const SpanBasis basis({id, j});
  const SolveResult res = basis.solve(id.scaled(GaussianRational(3)) + j.scaled(GaussianRational(Rational(-7, 2))));
  ASSERT_TRUE(res.in_span);
  EXPECT_EQ(res.coeffs[0], Rational(3));
  EXPECT_EQ(res.coeffs[1], Rational(-7, 2));
  // i * Id is not in the rational span of {Id, j}.
  EXPECT_FALSE(basis.solve(id.scaled(GaussianRational::i())).in_span);
}

TEST(LinearSpan, EchelonSpanIncrementalRank) {
  EchelonSpan span;
  EXPECT_TRUE(span.insert(flatten_matrix(small({{1, 1}, {0, 0}}))));
  EXPECT_TRUE(span.insert(flatten_matrix(small({{1, -1}, {0, 0}}))));
  EXPECT_FALSE(span.insert(flatten_matrix(small({{5, 3}, {0, 0}}))));
  EXPECT_EQ(span.rank(), 2u);
  EXPECT_TRUE(span.reduce(flatten_matrix(small({{5, 3}, {0, 0}}))).empty());
  EXPECT_FALSE(span.reduce(flatten_matrix(small({{0, 0}, {1, 0}}))).empty());
}

}  // namespace
}  // namespace cliffverify
