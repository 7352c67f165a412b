// End-to-end identity checks over the catalog: the quadratic-invariant
// theorem with its full proof decomposition, both canonical 8-forms with
// their invariance properties, and the model-subspace restriction of the
// 32-dimensional 8-form.  These tests execute the same verifications the
// CLI exposes; each failure prints the named item and its witness term.

#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "cliffverify/catalog.hpp"

namespace cliffverify {
namespace {

unsigned test_workers() {
  if (const char* env = std::getenv("CLIFFVERIFY_TEST_WORKERS"))
    return static_cast<unsigned>(std::max(1, std::atoi(env)));
  return 4;
}

void expect_all(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    EXPECT_TRUE(r.pass) << r.name << ": " << r.witness;
}

constexpr Blade blade_of(unsigned a, unsigned b) {
  return (Blade(1) << a) | (Blade(1) << b);
}

// The catalog is expensive to build repeatedly (45 realifications plus 81
// two-form extractions); share one across the suite.
const Catalog& catalog() {
  static const Catalog cat = make_catalog();
  return cat;
}

TEST(Catalog, Shape) {
  const Catalog& cat = catalog();
  EXPECT_EQ(cat.psi16.size(), 9u);
  EXPECT_EQ(cat.psi32.size(), 10u);
  EXPECT_EQ(cat.spin9.members.size(), 9u);
  EXPECT_EQ(cat.jc.elements.size(), 36u);
  EXPECT_EQ(cat.jd.elements.size(), 45u);
}

TEST(Catalog, OmegaPairsRealAndImaginaryParts) {
  const Catalog& cat = catalog();
  EXPECT_EQ(cat.omega.term_count(), 16u);
  for (unsigned a = 0; a < 16; ++a)
    EXPECT_EQ(cat.omega.coeff(blade_of(a, a + 16)), GaussianRational(1));
}

TEST(Catalog, SkewStorage) {
  const Catalog& cat = catalog();
  EXPECT_EQ(cat.psi16.at(3, 1), -cat.psi16.at(1, 3));
  EXPECT_EQ(cat.psi32.at(9, 0), -cat.psi32.at(0, 9));
  EXPECT_TRUE(cat.psi16.at(2, 2).is_zero());
}

TEST(Catalog, QuadraticInvariantTheorem) {
  expect_all(verify_theorem_tau(catalog()));
}

TEST(Catalog, CanonicalEightFormSixteen) {
  const PhiSpin9Result r = verify_phi_spin9(catalog(), test_workers());
  expect_all(r.reports);
  EXPECT_FALSE(r.normalized.is_zero());
  // The normalization divides out 360 exactly, so the smallest nonzero
  // magnitude among the normalized coefficients is at least 1.
  for (const auto& [b, c] : r.normalized.terms()) {
    EXPECT_TRUE(c.is_real());
    EXPECT_EQ(c.re().denominator(), 1);
  }
}

TEST(Catalog, CanonicalEightFormThirtyTwoAndRestriction) {
  const Catalog& cat = catalog();
  const PhiSpin10Result r = verify_phi_spin10(cat, test_workers());
  expect_all(r.reports);
  ASSERT_FALSE(r.form.is_zero());
  expect_all(verify_restriction_identity(cat, r.form, test_workers()));
}

TEST(Catalog, DerivationGateRejectsNonInvariance) {
  // Sanity check that the annihilation tests can fail: a generic
  // skew matrix is not a derivation of the standard two-form's square.
  const Catalog& cat = catalog();
  ExactMatrix generic(32);
  generic.at(0, 5) = GaussianRational(1);
  generic.at(5, 0) = GaussianRational(-1);
  generic.at(0, 3) = GaussianRational(2);
  generic.at(3, 0) = GaussianRational(-2);
  const SparseForm omega_sq = wedge(cat.omega, cat.omega);
  EXPECT_FALSE(lie_derivation(generic, omega_sq).is_zero());
}

}  // namespace
}  // namespace cliffverify
