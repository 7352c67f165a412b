#include <gtest/gtest.h>

#include <stdexcept>

#include "cliffverify/clifford_system.hpp"
#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/octonion.hpp"

namespace cliffverify {
namespace {

const CheckItem& item(const CheckReport& r, const std::string& name) {
  for (const auto& it : r.items())
    if (it.name == name) return it;
  throw std::runtime_error("missing check item: " + name);
}

TEST(CliffordSystem, Spin9Shape) {
  const CliffordSystem s = build_spin9_system();
  EXPECT_EQ(s.label, "spin9");
  EXPECT_EQ(s.dim, 16u);
  ASSERT_EQ(s.members.size(), 9u);
  const ExactMatrix id8 = ExactMatrix::identity(8);
  EXPECT_EQ(s.members.front(), block_offdiag2(id8, id8));
  EXPECT_EQ(s.members.back(), block_diag2(id8, -id8));
  // Member 2 carries right multiplication by the first imaginary unit.
  const ExactMatrix ri = right_mult_matrix(1);
  EXPECT_EQ(s.members[1], block_offdiag2(-ri, ri));
  for (const auto& m : s.members) EXPECT_EQ(m.realm(), Realm::real16);
}

TEST(CliffordSystem, C9Shape) {
  const CliffordSystem s = build_C9_system();
  EXPECT_EQ(s.dim, 32u);
  ASSERT_EQ(s.members.size(), 10u);
  const ExactMatrix id16 = ExactMatrix::identity(16);
  EXPECT_EQ(s.members.front(), block_offdiag2(id16, id16));
  EXPECT_EQ(s.members.back(), block_diag2(id16, -id16));
  // Member k+1 carries J_{1,k+1} = gen1 * gen_{k+1} of the spin9 system in
  // its blocks; spot-check k = 1 whose block is diag(R_i, -R_i).
  const ExactMatrix ri = right_mult_matrix(1);
  const ExactMatrix j12 = block_diag2(ri, -ri);
  EXPECT_EQ(s.members[1], block_offdiag2(-j12, j12));
  // Member 7's blocks involve right multiplication by the sixth unit.
  const ExactMatrix rg = right_mult_matrix(6);
  const ExactMatrix j17 = block_diag2(rg, -rg);
  EXPECT_EQ(s.members[6], block_offdiag2(-j17, j17));
}

TEST(CliffordSystem, RelationsHoldForAllBuiltSystems) {
  for (const CliffordSystem& s :
       {build_spin9_system(), build_C9_system(), build_pauli_system()}) {
    const CheckReport r = verify_clifford_relations(s);
    EXPECT_TRUE(r.all_pass()) << r.subject();
    EXPECT_TRUE(item(r, "members-symmetric").pass);
    EXPECT_TRUE(item(r, "members-square-to-identity").pass);
    EXPECT_TRUE(item(r, "members-orthogonal").pass);
    EXPECT_TRUE(item(r, "distinct-members-anticommute").pass);
  }
}

TEST(CliffordSystem, DuplicatedMemberFailsAnticommutation) {
  CliffordSystem s = build_pauli_system();
  s.members.push_back(s.members.front());
  const CheckReport r = verify_clifford_relations(s);
  EXPECT_FALSE(r.all_pass());
  EXPECT_TRUE(item(r, "members-symmetric").pass);
  EXPECT_FALSE(item(r, "distinct-members-anticommute").pass);
}

TEST(CliffordSystem, CompositionOrderAndClassification) {
  const CliffordSystem spin9 = build_spin9_system();
  // Product is left-to-right: {1,2} gives gen1 * gen2 = diag(R_i, -R_i).
  const Composition j12 = composition(spin9, {1, 2});
  const ExactMatrix ri = right_mult_matrix(1);
  EXPECT_EQ(j12.matrix, block_diag2(ri, -ri));
  EXPECT_EQ(j12.cls.kind, CompositionKind::complex_structure);
  EXPECT_TRUE(j12.matrix.is_skew());
  EXPECT_EQ(j12.matrix * j12.matrix, -ExactMatrix::identity(16));

  const CliffordSystem c9 = build_C9_system();
  EXPECT_EQ(composition(c9, {1, 2, 3}).cls.kind, CompositionKind::complex_structure);
  EXPECT_EQ(composition(c9, {1, 2, 3, 4}).cls.kind, CompositionKind::involution);
  EXPECT_EQ(composition(c9, {2, 4, 6, 8, 10}).cls.kind, CompositionKind::involution);
  EXPECT_EQ(composition(c9, {1, 2, 3, 4, 5, 6}).cls.kind, CompositionKind::complex_structure);
}

TEST(CliffordSystem, FiveFoldCompositionAnticommutesWithUnusedAndIsTraceless) {
  const CliffordSystem c9 = build_C9_system();
  const Composition five = composition(c9, {1, 3, 5, 7, 9});
  EXPECT_EQ(five.cls.kind, CompositionKind::involution);
  EXPECT_EQ(five.matrix.trace(), GaussianRational());
  for (std::size_t unused : {2u, 4u, 6u, 8u, 10u}) {
    EXPECT_TRUE(
        mat_anticommutator(five.matrix, c9.members[unused - 1]).is_zero())
        << "generator " << unused;
  }
}

TEST(CliffordSystem, CompositionInputValidation) {
  const CliffordSystem s = build_pauli_system();
  EXPECT_THROW(composition(s, {}), std::invalid_argument);
  EXPECT_THROW(composition(s, {2, 1}), std::invalid_argument);
  EXPECT_THROW(composition(s, {1, 1}), std::invalid_argument);
  EXPECT_THROW(composition(s, {0, 1}), std::invalid_argument);
  EXPECT_THROW(composition(s, {1, 4}), std::invalid_argument);
}

TEST(CliffordSystem, ParityLawExhaustiveOnTenMembers) {
  const CheckReport r = parity_classification_scan(build_C9_system(), 6);
  EXPECT_TRUE(r.all_pass());
  // 10+45+120+210+252+210 compositions of sizes 1..6.
  EXPECT_EQ(item(r, "parity-law").detail, "847 compositions checked");
}

TEST(CliffordSystem, OrthogonalityScanSpin9) {
  const CheckReport r = orthogonality_scan(build_spin9_system());
  EXPECT_TRUE(r.all_pass()) << r.subject();
  EXPECT_EQ(item(r, "composition-count").detail, "36=36");
  EXPECT_EQ(item(r, "rank-equals-count").detail, "rank 36 of 36");
}

TEST(CliffordSystem, OrthogonalityScanPauli) {
  const CheckReport r = orthogonality_scan(build_pauli_system());
  EXPECT_TRUE(r.all_pass()) << r.subject();
  EXPECT_EQ(item(r, "composition-count").detail, "3+1=4");
  EXPECT_EQ(item(r, "rank-equals-count").detail, "rank 4 of 4");
}

TEST(CliffordSystem, OrthogonalityScanTenMembers) {
  const CheckReport r = orthogonality_scan(build_C9_system());
  EXPECT_TRUE(r.all_pass()) << r.subject();
  EXPECT_EQ(item(r, "composition-count").detail, "45+120+210=375");
  EXPECT_EQ(item(r, "rank-equals-count").detail, "rank 375 of 375");
}

TEST(CliffordSystem, UnitaryObstruction) {
  const CheckReport r = unitary_obstruction_check();
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(item(r, "composition-counts").detail, "45+120+210");
  EXPECT_EQ(item(r, "compatible-dimension-bound").detail, "256");
  EXPECT_EQ(item(r, "obstruction-holds").detail, "375 > 256");
}

TEST(CliffordSystem, ComplexLinearityAgainstStandardStructure) {
  const CliffordSystem c9 = build_C9_system();
  const CheckReport r =
      complex_linearity_scan(c9, standard_complex_structure(), "standard");
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(item(r, "commuting-members").detail, "2,3,4,5,6,7,8,9");
  EXPECT_EQ(item(r, "anticommuting-members").detail, "1,10");
}

TEST(CliffordSystem, ComplexLinearityAgainstQuaternionicStructure) {
  const ExactMatrix j = quaternionic_complex_structure();
  EXPECT_TRUE(j.is_skew());
  EXPECT_EQ(j * j, -ExactMatrix::identity(32));
  EXPECT_EQ(j.transpose() * j, ExactMatrix::identity(32));
  const CliffordSystem c9 = build_C9_system();
  const CheckReport r = complex_linearity_scan(c9, j, "quaternionic");
  EXPECT_TRUE(r.all_pass());
  // Only generators 7 and 8 (the ones whose blocks involve the sixth and
  // seventh octonion units) fail complex linearity here.
  EXPECT_EQ(item(r, "commuting-members").detail, "1,2,3,4,5,6,9,10");
  EXPECT_EQ(item(r, "anticommuting-members").detail, "7,8");
}

TEST(CliffordSystem, DeltaTableAndRecursion) {
  const long long expected[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(delta(m), BigInt(expected[m - 1]));
  EXPECT_EQ(delta(9), BigInt(16));
  EXPECT_EQ(delta(12), BigInt(64));
  EXPECT_EQ(delta(16), BigInt(128));
  EXPECT_EQ(delta(17), BigInt(256));
  EXPECT_THROW(delta(0), std::invalid_argument);
  EXPECT_THROW(delta(-5), std::invalid_argument);
  // The ten-member system needs 2 * delta(9) = 32 ambient dimensions.
  EXPECT_EQ(BigInt(2) * delta(9), BigInt(32));
}

TEST(CliffordSystem, DeltaDimensionReport) {
  const CheckReport r = delta_dimension_check();
  EXPECT_TRUE(r.all_pass()) << r.subject();
  EXPECT_NE(item(r, "constructed-spin9-realizes-minimal-dimension").detail.find("N = 16"),
            std::string::npos);
  EXPECT_NE(item(r, "constructed-c9-realizes-minimal-dimension").detail.find("N = 32"),
            std::string::npos);
  EXPECT_NE(item(r, "constructed-pauli-realizes-minimal-dimension").detail.find("N = 4"),
            std::string::npos);
}

}  // namespace
}  // namespace cliffverify
