#include <gtest/gtest.h>

#include "cliffverify/lie_basis.hpp"

namespace cliffverify {
namespace {

const CheckItem& item(const CheckReport& r, const std::string& name) {
  for (const auto& it : r.items())
    if (it.name == name) return it;
  throw std::runtime_error("missing check item: " + name);
}

TEST(SpinAlgebras, PairBasisMatchesBlockForms) {
  const LieBasis jc = build_JC();
  ASSERT_EQ(jc.elements.size(), 36u);
  const ExactMatrix ri = right_mult_matrix(1);
  EXPECT_EQ(jc.elements[jc.position({1, 2})].matrix, block_diag2(ri, -ri));
  // J_{2,3} = diag(-R_i R_j, -R_i R_j), with the right factor acting first.
  const ExactMatrix rij = right_mult_composition(1, 2);
  EXPECT_EQ(jc.elements[jc.position({2, 3})].matrix, block_diag2(-rij, -rij));
  const ExactMatrix id8 = ExactMatrix::identity(8);
  EXPECT_EQ(jc.elements[jc.position({1, 9})].matrix, block_offdiag2(-id8, id8));
  for (const auto& e : jc.elements) {
    EXPECT_TRUE(e.matrix.is_skew());
    EXPECT_EQ(e.matrix * e.matrix, -ExactMatrix::identity(16));
  }
  EXPECT_EQ(rank_of_family(jc.matrices()), 36u);
}

TEST(SpinAlgebras, TripleBasisShape) {
  const LieBasis jt = build_J_triples();
  ASSERT_EQ(jt.elements.size(), 84u);
  const LieBasis jc = build_JC();
  const CliffordSystem s = build_spin9_system();
  EXPECT_EQ(jt.elements[jt.position({1, 2, 3})].matrix,
            jc.elements[jc.position({1, 2})].matrix * s.members[2]);
  for (const auto& e : jt.elements) {
    EXPECT_TRUE(e.matrix.is_skew());
    EXPECT_EQ(e.matrix * e.matrix, -ExactMatrix::identity(16));
  }
}

TEST(SpinAlgebras, ComplexBasisShape) {
  const LieBasis jd = build_JD();
  ASSERT_EQ(jd.elements.size(), 45u);
  const CliffordSystem s = build_spin9_system();
  // J_{0,9} = i * gen9, J_{0,1} = i * gen1.
  EXPECT_EQ(jd.elements[jd.position({0, 9})].matrix,
            s.members[8].scaled(GaussianRational::i()));
  EXPECT_EQ(jd.elements[jd.position({0, 1})].matrix,
            s.members[0].scaled(GaussianRational::i()));
  // Every element is trace-free and anti-Hermitian.
  for (const auto& e : jd.elements) {
    EXPECT_EQ(e.matrix.trace(), GaussianRational());
    EXPECT_EQ(e.matrix.conj_transpose(), -e.matrix);
    EXPECT_EQ(e.matrix.realm(), Realm::complex16);
  }
  // Realified, every element commutes with the standard complex structure.
  const ExactMatrix j = standard_complex_structure();
  const CheckReport split = structure_commutation_split(
      "jd-realified", [&] {
        std::vector<ExactMatrix> v;
        for (const auto& e : jd.elements) v.push_back(realify(e.matrix));
        return v;
      }(), j);
  EXPECT_TRUE(split.all_pass());
  EXPECT_EQ(item(split, "commuting-count").detail, "45");
  EXPECT_EQ(item(split, "anticommuting-count").detail, "0");
}

TEST(SpinAlgebras, RankAdditivityOfComplexBasis) {
  const LieBasis jd = build_JD();
  std::vector<ExactMatrix> zero_row, rest;
  for (const auto& e : jd.elements)
    (e.index[0] == 0 ? zero_row : rest).push_back(e.matrix);
  EXPECT_EQ(zero_row.size(), 9u);
  EXPECT_EQ(rest.size(), 36u);
  EXPECT_EQ(rank_of_family(zero_row), 9u);
  EXPECT_EQ(rank_of_family(rest), 36u);
  EXPECT_EQ(rank_of_family(jd.matrices()), 45u);
}

TEST(SpinAlgebras, PairCompositionBasisMatchesBlockForms) {
  const LieBasis p = build_P_basis();
  ASSERT_EQ(p.elements.size(), 45u);
  const LieBasis jc = build_JC();
  const ExactMatrix j12 = jc.elements[jc.position({1, 2})].matrix;
  const ExactMatrix j23 = jc.elements[jc.position({2, 3})].matrix;
  EXPECT_EQ(p.elements[p.position({0, 1})].matrix, block_diag2(j12, -j12));
  EXPECT_EQ(p.elements[p.position({1, 2})].matrix, block_diag2(j23, j23));
  EXPECT_EQ(p.elements[p.position({0, 9})].matrix, standard_complex_structure());
  EXPECT_EQ(p.elements[p.position({1, 9})].matrix, block_offdiag2(j12, j12));
  EXPECT_EQ(rank_of_family(p.matrices()), 45u);
}

TEST(SpinAlgebras, CommutationSplitOfPairCompositions) {
  const LieBasis p = build_P_basis();
  const CheckReport split =
      structure_commutation_split("p-basis", p.matrices(), standard_complex_structure());
  EXPECT_TRUE(split.all_pass());
  // 28 diagonal-block pairs + the standard structure itself commute; the
  // 8 + 8 elements built from a single 0-or-9 label anticommute.
  EXPECT_EQ(item(split, "commuting-count").detail, "29");
  EXPECT_EQ(item(split, "anticommuting-count").detail, "16");
}

TEST(SpinAlgebras, BracketClosure) {
  for (const LieBasis& b : {build_JC(), build_JD(), build_P_basis()}) {
    const CheckReport r = bracket_closure_check(b);
    EXPECT_TRUE(r.all_pass()) << r.subject();
  }
  EXPECT_EQ(item(bracket_closure_check(build_JC()), "dimension").detail, "36");
  EXPECT_EQ(item(bracket_closure_check(build_P_basis()), "dimension").detail, "45");
}

TEST(SpinAlgebras, StructureConstantSpotChecks) {
  const LieBasis p = build_P_basis();
  const StructureConstants sc = extract_structure_constants(p);
  // [P_{01}, P_{02}] = -2 P_{12}.
  const std::size_t p01 = p.position({0, 1}), p02 = p.position({0, 2});
  const std::size_t p12 = p.position({1, 2});
  EXPECT_EQ(sc.coeff(p01, p02, p12), Rational(-2));
  // Antisymmetry of the accessor.
  EXPECT_EQ(sc.coeff(p02, p01, p12), Rational(2));
  // [P_{09}, P_{19}] = -2 P_{01}.
  EXPECT_EQ(sc.coeff(p.position({0, 9}), p.position({1, 9}), p01), Rational(-2));
  // Disjoint index pairs commute.
  EXPECT_EQ(sc.coeff(p01, p.position({2, 3}), p12), Rational());

  const LieBasis jd = build_JD();
  const StructureConstants sj = extract_structure_constants(jd);
  // [J_{01}, J_{02}] = -2 J_{12}: the mirror of the first identity above.
  EXPECT_EQ(sj.coeff(jd.position({0, 1}), jd.position({0, 2}), jd.position({1, 2})),
            Rational(-2));
}

TEST(SpinAlgebras, IsomorphismByStructureConstants) {
  const CheckReport r = iso_check();
  EXPECT_TRUE(r.all_pass()) << item(r, "structure-constants-match").detail;
  EXPECT_TRUE(item(r, "jacobi-pair-composition-side").pass);
  EXPECT_TRUE(item(r, "jacobi-complex-side").pass);
  EXPECT_EQ(item(r, "jacobi-complex-side").detail, "14190 triples");
}

TEST(SpinAlgebras, So16Decomposition) {
  const CheckReport r = so16_decomposition_check();
  EXPECT_TRUE(r.all_pass()) << r.subject();
  EXPECT_EQ(item(r, "triple-rank").detail, "84");
  EXPECT_EQ(item(r, "total-rank-is-dim-so16").detail, "120");
}

TEST(SpinAlgebras, SpanDimensions) {
  const CheckReport r = span_dimension_check();
  EXPECT_TRUE(r.all_pass()) << r.subject();
  EXPECT_NE(item(r, "pair-compositions-span-36").detail.find("rank 36"), std::string::npos);
  EXPECT_NE(item(r, "joint-span-is-so16").detail.find("rank 120"), std::string::npos);
  EXPECT_NE(item(r, "doubled-pair-compositions-span-45").detail.find("rank 45"), std::string::npos);
}

TEST(SpinAlgebras, CliffordRepMap) {
  const LieBasis jd = build_JD();
  OctVec zero{};
  EXPECT_EQ(clifford_rep_map(Rational(1), zero),
            jd.elements[jd.position({0, 9})].matrix);
  EXPECT_EQ(clifford_rep_map(Rational(), oct_unit(0)),
            jd.elements[jd.position({0, 1})].matrix);
  // Clifford relation: m(r,v)^2 = -(r^2 + |v|^2) Id, over mixed samples.
  OctVec v{};
  v[0] = GaussianRational(3);
  v[5] = GaussianRational(Rational(-1, 2));
  const Rational r(2, 3);
  const ExactMatrix m = clifford_rep_map(r, v);
  const Rational expected = r * r + Rational(9) + Rational(1, 4);
  EXPECT_EQ(m * m, ExactMatrix::identity(16).scaled(GaussianRational(-expected)));
  for (std::size_t unit = 0; unit < 8; ++unit) {
    const ExactMatrix mu = clifford_rep_map(Rational(), oct_unit(unit));
    EXPECT_EQ(mu * mu, -ExactMatrix::identity(16)) << "unit " << unit;
  }
}

}  // namespace
}  // namespace cliffverify
