#include <gtest/gtest.h>

#include <cstddef>

#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/octonion.hpp"

namespace cliffverify {
namespace {

enum Unit : std::size_t { U1, UI, UJ, UK, UE, UF, UG, UH };

OctVec unit_combo(std::size_t a, int sa, std::size_t b, int sb) {
  OctVec v{};
  v[a] = GaussianRational(sa);
  v[b] = GaussianRational(sb);
  return v;
}

TEST(Octonion, QuaternionSubalgebra) {
  const auto& t = octonion_table();
  // ij = k, jk = i, ki = j and the squares.
  EXPECT_EQ(t.index[UI][UJ], UK);
  EXPECT_EQ(t.sign[UI][UJ], 1);
  EXPECT_EQ(t.index[UJ][UK], UI);
  EXPECT_EQ(t.sign[UJ][UK], 1);
  EXPECT_EQ(t.index[UK][UI], UJ);
  EXPECT_EQ(t.sign[UK][UI], 1);
  for (std::size_t u = UI; u <= UH; ++u) {
    EXPECT_EQ(t.index[u][u], U1);
    EXPECT_EQ(t.sign[u][u], -1);
  }
  for (std::size_t u = 0; u < 8; ++u) {
    EXPECT_EQ(t.index[U1][u], u);
    EXPECT_EQ(t.sign[U1][u], 1);
    EXPECT_EQ(t.index[u][U1], u);
    EXPECT_EQ(t.sign[u][U1], 1);
  }
}

TEST(Octonion, CayleyDicksonProducts) {
  const auto& t = octonion_table();
  // f = ie, g = je, h = ke.
  EXPECT_EQ(t.index[UI][UE], UF);
  EXPECT_EQ(t.sign[UI][UE], 1);
  EXPECT_EQ(t.index[UJ][UE], UG);
  EXPECT_EQ(t.sign[UJ][UE], 1);
  EXPECT_EQ(t.index[UK][UE], UH);
  EXPECT_EQ(t.sign[UK][UE], 1);
  // Spot products fixing the sign conventions downstream tables rely on.
  EXPECT_EQ(t.index[UK][UI], UJ);   // ki = j
  EXPECT_EQ(t.sign[UK][UI], 1);
  EXPECT_EQ(t.index[UF][UI], UE);   // fi = e
  EXPECT_EQ(t.sign[UF][UI], 1);
  EXPECT_EQ(t.index[UH][UI], UG);   // hi = -g
  EXPECT_EQ(t.sign[UH][UI], -1);
  EXPECT_EQ(t.index[UE][UI], UF);   // ei = -f
  EXPECT_EQ(t.sign[UE][UI], -1);
  EXPECT_EQ(t.index[UG][UI], UH);   // gi = h
  EXPECT_EQ(t.sign[UG][UI], 1);
}

TEST(Octonion, AnticommutativityAndTableShape) {
  const auto& t = octonion_table();
  for (std::size_t a = 1; a < 8; ++a)
    for (std::size_t b = 1; b < 8; ++b) {
      if (a == b) continue;
      // Distinct imaginary units anticommute and produce a third unit.
      EXPECT_EQ(t.index[a][b], t.index[b][a]);
      EXPECT_EQ(t.sign[a][b], -t.sign[b][a]);
      EXPECT_NE(t.index[a][b], a);
      EXPECT_NE(t.index[a][b], b);
      EXPECT_NE(t.index[a][b], U1);
    }
}

TEST(Octonion, NormIsMultiplicative) {
  OctVec x{}, y{};
  for (std::size_t k = 0; k < 8; ++k) {
    x[k] = GaussianRational(Rational(static_cast<long long>(k) - 3, 2));
    y[k] = GaussianRational(Rational(2 * static_cast<long long>(k) + 1, 3));
  }
  EXPECT_EQ(oct_norm(oct_mul(x, y)), oct_norm(x) * oct_norm(y));
}

TEST(Octonion, AlternativeButNotAssociative) {
  const OctVec i = oct_unit(UI), j = oct_unit(UJ), e = oct_unit(UE);
  // Associativity fails on a generic triple: (ij)e = ke = h, i(je) = i g.
  const OctVec lhs = oct_mul(oct_mul(i, j), e);
  const OctVec rhs = oct_mul(i, oct_mul(j, e));
  EXPECT_NE(lhs, rhs);
  // Alternativity holds: x(xy) = (xx)y on a mixed sample.
  const OctVec x = unit_combo(UI, 1, UE, -2);
  const OctVec y = unit_combo(UJ, 3, UH, 1);
  EXPECT_EQ(oct_mul(x, oct_mul(x, y)), oct_mul(oct_mul(x, x), y));
  EXPECT_EQ(oct_mul(oct_mul(y, x), x), oct_mul(y, oct_mul(x, x)));
}

TEST(Octonion, ConjugationReversesProducts) {
  const OctVec x = unit_combo(U1, 2, UG, -1);
  const OctVec y = unit_combo(UF, 1, UK, 5);
  EXPECT_EQ(oct_conj(oct_mul(x, y)), oct_mul(oct_conj(y), oct_conj(x)));
}

TEST(Octonion, RightMultMatrixColumns) {
  const ExactMatrix ri = right_mult_matrix(UI);
  // Column a = coordinates of basis_a * i.
  EXPECT_EQ(ri.at(UI, U1), GaussianRational(1));    // 1*i = i
  EXPECT_EQ(ri.at(U1, UI), GaussianRational(-1));   // i*i = -1
  EXPECT_EQ(ri.at(UK, UJ), GaussianRational(-1));   // j*i = -k
  EXPECT_EQ(ri.at(UJ, UK), GaussianRational(1));    // k*i = j
  EXPECT_EQ(ri.at(UF, UE), GaussianRational(-1));   // e*i = -f
  EXPECT_EQ(ri.at(UE, UF), GaussianRational(1));    // f*i = e
  EXPECT_EQ(ri.at(UH, UG), GaussianRational(1));    // g*i = h
  EXPECT_EQ(ri.at(UG, UH), GaussianRational(-1));   // h*i = -g
  // Matrix form agrees with the product itself on a generic vector.
  const OctVec x = unit_combo(UJ, 2, UE, 3);
  const OctVec xi = oct_mul(x, oct_unit(UI));
  for (std::size_t r = 0; r < 8; ++r) {
    GaussianRational acc;
    for (std::size_t c = 0; c < 8; ++c) acc += ri.at(r, c) * x[c];
    EXPECT_EQ(acc, xi[r]);
  }
}

TEST(Octonion, RightMultUnitsAreSkewInvolutionsToMinusId) {
  const ExactMatrix id = ExactMatrix::identity(8);
  for (std::size_t u = UI; u <= UH; ++u) {
    const ExactMatrix r = right_mult_matrix(u);
    EXPECT_EQ(r * r, -id) << "unit " << u;
    EXPECT_TRUE(r.is_skew()) << "unit " << u;
    EXPECT_EQ(r.transpose() * r, id) << "unit " << u;
  }
  EXPECT_EQ(right_mult_matrix(U1), id);
}

TEST(Octonion, RightMultGeneralMatchesUnitAndComposition) {
  EXPECT_EQ(right_mult_matrix(oct_unit(UG)), right_mult_matrix(UG));
  // Composition applies the right factor first.
  const ExactMatrix comp = right_mult_composition(UI, UJ);
  EXPECT_EQ(comp, right_mult_matrix(UI) * right_mult_matrix(UJ));
  const OctVec x = unit_combo(UK, 1, UF, -4);
  const OctVec expect = oct_mul(oct_mul(x, oct_unit(UJ)), oct_unit(UI));
  for (std::size_t r = 0; r < 8; ++r) {
    GaussianRational acc;
    for (std::size_t c = 0; c < 8; ++c) acc += comp.at(r, c) * x[c];
    EXPECT_EQ(acc, expect[r]);
  }
  // Non-associativity shows up: R_i R_j differs from both R_(ij) and R_(ji).
  EXPECT_NE(comp, right_mult_matrix(UK));
  EXPECT_NE(comp, -right_mult_matrix(UK));
}

TEST(Octonion, RightMultBlockStructureOnQuaternionHalves) {
  // R_e maps (a, b) -> (-b, a).
  const ExactMatrix re = right_mult_matrix(UE);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      EXPECT_EQ(re.at(r, c), GaussianRational());
      EXPECT_EQ(re.at(4 + r, 4 + c), GaussianRational());
      EXPECT_EQ(re.at(r, 4 + c), r == c ? GaussianRational(-1) : GaussianRational());
      EXPECT_EQ(re.at(4 + r, c), r == c ? GaussianRational(1) : GaussianRational());
    }
}

}  // namespace
}  // namespace cliffverify
