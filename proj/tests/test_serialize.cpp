#include <gtest/gtest.h>

#include <string>

#include "cliffverify/golden.hpp"
#include "cliffverify/serialize.hpp"
#include "cliffverify/sha256.hpp"
#include "cliffverify/version.hpp"

namespace cliffverify {
namespace {

TEST(Serialize, TermLineFormatFrozen) {
  EXPECT_EQ(term_line((Blade(1) << 0) | (Blade(1) << 17),
                      GaussianRational(Rational(-3, 2))),
            R"({"blade":[0,17],"im":"0/1","re":"-3/2"})");
  EXPECT_EQ(labeled_term_line("psi.1.2", 0b11u, GaussianRational(1)),
            R"({"blade":[0,1],"im":"0/1","label":"psi.1.2","re":"1/1"})");
}

TEST(Serialize, ViewLineFormatFrozen) {
  const ComplexBlade b{std::uint16_t(1u << 3), std::uint16_t(1u << 11)};
  EXPECT_EQ(labeled_view_term_line("2psi.0.4", b, GaussianRational::i()),
            R"({"dz":[3],"dzbar":[11],"im":"1/1","label":"2psi.0.4","re":"0/1"})");
}

TEST(Serialize, MatrixLineFormatFrozen) {
  ExactMatrix m(2, Realm::other);
  m.at(0, 1) = GaussianRational(Rational(1, 2), Rational(-1));
  m.at(1, 0) = GaussianRational(-1);
  EXPECT_EQ(labeled_matrix_line("demo", m),
            R"({"dim":2,"entries":[[0,1,"1/2","-1/1"],[1,0,"-1/1","0/1"]],"label":"demo"})");
}

TEST(Serialize, FormDocumentOrderAndRoundShape) {
  SparseForm f(2);
  f.add_term(0b1100u, GaussianRational(2));
  f.add_term(0b0011u, GaussianRational(-1));
  const std::string doc = form_jsonl(f);
  // Ascending blade order regardless of insertion order.
  EXPECT_EQ(doc,
            "{\"blade\":[0,1],\"im\":\"0/1\",\"re\":\"-1/1\"}\n"
            "{\"blade\":[2,3],\"im\":\"0/1\",\"re\":\"2/1\"}\n");
  EXPECT_EQ(validate_records(doc, RecordKind::FormTerm, "t"), 2u);
}

TEST(Serialize, MulTableContents) {
  const Json j = Json::parse(mul_table_json());
  ASSERT_EQ(j["basis"].size(), 8u);
  EXPECT_EQ(j["basis"][0], "1");
  EXPECT_EQ(j["basis"][4], "e");
  // Quaternionic corner and the doubled units.
  EXPECT_EQ(j["products"][1][2], "k");    // i j
  EXPECT_EQ(j["products"][2][1], "-k");   // j i
  EXPECT_EQ(j["products"][4][4], "-1");   // e e
  EXPECT_EQ(j["products"][1][4], "f");    // i e
  EXPECT_EQ(j["products"][0][7], "h");    // 1 h
  for (const auto& row : j["products"])
    for (const auto& cell : row) {
      const std::string s = cell.get<std::string>();
      EXPECT_FALSE(s.empty());
    }
}

TEST(Serialize, ValidatorRejectsCorruptPayloads) {
  EXPECT_THROW(validate_records("{oops", RecordKind::FormTerm, "t"), GoldenError);
  EXPECT_THROW(validate_records(R"({"blade":[0],"re":"1/1"})", RecordKind::FormTerm, "t"),
               GoldenError);  // missing im
  EXPECT_THROW(
      validate_records(R"({"blade":[40],"im":"0/1","re":"1/1"})", RecordKind::FormTerm, "t"),
      GoldenError);  // index out of range
  EXPECT_THROW(validate_records(R"({"blade":[0],"im":"0/1","re":"1/1"})",
                                RecordKind::LabeledFormTerm, "t"),
               GoldenError);  // missing label
  EXPECT_THROW(validate_records(R"({"dim":2,"entries":[[0,1,"1/1"]],"label":"x"})",
                                RecordKind::LabeledMatrix, "t"),
               GoldenError);  // entry not a 4-tuple
  EXPECT_EQ(validate_records("\n\n", RecordKind::FormTerm, "t"), 0u);
}

TEST(Serialize, MetaRecordValidates) {
  SparseForm tiny(8);
  tiny.add_term(0xFFu, GaussianRational(-7));
  tiny.add_term(0xFF00u, GaussianRational(3));
  const std::string meta = phi_spin10_meta(tiny);
  EXPECT_EQ(validate_records(meta, RecordKind::Meta, "t"), 1u);
  const Json j = Json::parse(meta);
  EXPECT_EQ(j["terms"], 2u);
  EXPECT_EQ(j["coeff-min"], "-7/1");
  EXPECT_EQ(j["coeff-max"], "3/1");
  EXPECT_EQ(j["sha256"].get<std::string>(), sha256_hex(form_jsonl(tiny)));
}

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Version, FingerprintIsStableHex) {
  const std::string& fp = convention_fingerprint();
  ASSERT_EQ(fp.size(), 16u);
  for (const char c : fp)
    EXPECT_TRUE((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'));
  EXPECT_EQ(fp, convention_fingerprint());
}

TEST(Serialize, DottedLabels) {
  EXPECT_EQ(dotted_label("psi", {1, 2}), "psi.1.2");
  EXPECT_EQ(dotted_label("P", {0}), "P.0");
  EXPECT_EQ(dotted_label("x", {}), "x");
}

}  // namespace
}  // namespace cliffverify
