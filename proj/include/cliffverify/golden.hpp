#ifndef CLIFFVERIFY_GOLDEN_HPP
#define CLIFFVERIFY_GOLDEN_HPP

/*
 * Golden files: frozen serializations of everything the constructors
 * rebuild from first principles.
 *
 * The committed files were transcribed from the printed tables (with the
 * recorded zero-row sign corrections); verification regenerates each
 * payload from the constructors and demands byte identity.  A missing or
 * malformed file throws GoldenError (an environment problem); a well-formed
 * file with different bytes is a verification failure with a line witness.
 *
 * Table goldens (fast, pure construction):
 *   spin9-generators, spin9-lie-row1, spin9-lie-pairs, spin9-lie-nine,
 *   spin10-generators, spin10-lie-row0, spin10-lie-pairs, spin10-lie-nine,
 *   pauli-generators, psi-pair-real16, psi-nine-real16,
 *   psi-pair-complex, psi-nine-complex, psi-zero-complex
 *
 * Invariant goldens (need the degree-8 computations):
 *   phi-spin9 (full form), phi-spin10 (meta: term count, extremal
 *   coefficients, SHA-256 of the canonical serialization).
 */

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliffverify/catalog.hpp"
#include "cliffverify/lie_basis.hpp"
#include "cliffverify/reference_tables.hpp"
#include "cliffverify/report.hpp"
#include "cliffverify/serialize.hpp"
#include "cliffverify/sha256.hpp"

namespace cliffverify {

namespace golden_detail {

inline std::string spin9_generators(const Catalog& cat) {
  std::string out;
  for (std::size_t a = 1; a <= 9; ++a) {
    out += labeled_matrix_line(dotted_label("I", {a}), cat.spin9.members[a - 1]);
    out.push_back('\n');
  }
  return out;
}

inline std::string spin9_structures(const Catalog& cat,
                                    const std::vector<tables::LabeledMatrix>& table) {
  std::string out;
  for (const auto& e : table) {
    const ExactMatrix& m = cat.jc.elements[cat.jc.position(e.label)].matrix;
    out += labeled_matrix_line(dotted_label("J", e.label), m);
    out.push_back('\n');
  }
  return out;
}

inline std::string spin10_generators() {
  const CliffordSystem c9 = build_C9_system();
  std::string out;
  for (std::size_t a = 0; a <= 9; ++a) {
    out += labeled_matrix_line(dotted_label("P", {a}), c9.members[a]);
    out.push_back('\n');
  }
  return out;
}

inline std::string spin10_structures(const std::vector<tables::LabeledMatrix>& table) {
  const LieBasis p = build_P_basis();
  std::string out;
  for (const auto& e : table) {
    const ExactMatrix& m = p.elements[p.position(e.label)].matrix;
    out += labeled_matrix_line(dotted_label("P", e.label), m);
    out.push_back('\n');
  }
  return out;
}

inline std::string pauli_generators() {
  const CliffordSystem pauli = build_pauli_system();
  std::string out;
  for (std::size_t a = 0; a < pauli.members.size(); ++a) {
    out += labeled_matrix_line(dotted_label("pauli", {a}), pauli.members[a]);
    out.push_back('\n');
  }
  return out;
}

// The 16-dimensional two-form family, printed labels 1..9.
inline std::string psi16_range(const Catalog& cat, std::size_t beta_max,
                               bool nine_column) {
  std::string out;
  if (nine_column) {
    for (std::size_t a = 1; a <= 8; ++a)
      out += labeled_form_lines(dotted_label("psi", {a, 9}), cat.psi16.at(a - 1, 8));
  } else {
    for (std::size_t a = 1; a <= beta_max; ++a)
      for (std::size_t b = a + 1; b <= beta_max; ++b)
        out += labeled_form_lines(dotted_label("psi", {a, b}), cat.psi16.at(a - 1, b - 1));
  }
  return out;
}

// The doubled complex tables store the printed objects: twice the entry of
// the 32-covector family, read in complex coordinates.
inline std::string doubled_view_lines(const Catalog& cat, std::size_t a, std::size_t b) {
  const ComplexView v = to_complex_view(cat.psi32.at(a, b).scaled(GaussianRational(2)));
  return labeled_view_lines(dotted_label("2psi", {a, b}), v);
}

inline std::string psi_pair_complex(const Catalog& cat) {
  std::string out;
  for (std::size_t a = 1; a <= 8; ++a)
    for (std::size_t b = a + 1; b <= 8; ++b) out += doubled_view_lines(cat, a, b);
  return out;
}

inline std::string psi_nine_complex(const Catalog& cat) {
  std::string out;
  for (std::size_t a = 1; a <= 8; ++a) out += doubled_view_lines(cat, a, 9);
  return out;
}

inline std::string psi_zero_complex(const Catalog& cat) {
  std::string out;
  for (std::size_t d = 1; d <= 9; ++d) out += doubled_view_lines(cat, 0, d);
  return out;
}

}  // namespace golden_detail

struct GoldenSpec {
  std::string name;
  RecordKind kind;
  std::string (*generate)(const Catalog&);
};

// The fast table goldens: regenerating all of them is pure construction.
inline const std::vector<GoldenSpec>& golden_table_specs() {
  static const std::vector<GoldenSpec> specs = {
      {"spin9-generators", RecordKind::LabeledMatrix,
       [](const Catalog& c) { return golden_detail::spin9_generators(c); }},
      {"spin9-lie-row1", RecordKind::LabeledMatrix,
       [](const Catalog& c) {
         return golden_detail::spin9_structures(c, tables::structure_row1_table_16());
       }},
      {"spin9-lie-pairs", RecordKind::LabeledMatrix,
       [](const Catalog& c) {
         return golden_detail::spin9_structures(c, tables::structure_pairs_table_16());
       }},
      {"spin9-lie-nine", RecordKind::LabeledMatrix,
       [](const Catalog& c) {
         return golden_detail::spin9_structures(c, tables::structure_nine_table_16());
       }},
      {"spin10-generators", RecordKind::LabeledMatrix,
       [](const Catalog&) { return golden_detail::spin10_generators(); }},
      {"spin10-lie-row0", RecordKind::LabeledMatrix,
       [](const Catalog&) {
         return golden_detail::spin10_structures(tables::pair_row0_table_32());
       }},
      {"spin10-lie-pairs", RecordKind::LabeledMatrix,
       [](const Catalog&) {
         return golden_detail::spin10_structures(tables::pair_pairs_table_32());
       }},
      {"spin10-lie-nine", RecordKind::LabeledMatrix,
       [](const Catalog&) {
         return golden_detail::spin10_structures(tables::pair_nine_table_32());
       }},
      {"pauli-generators", RecordKind::LabeledMatrix,
       [](const Catalog&) { return golden_detail::pauli_generators(); }},
      {"psi-pair-real16", RecordKind::LabeledFormTerm,
       [](const Catalog& c) { return golden_detail::psi16_range(c, 8, false); }},
      {"psi-nine-real16", RecordKind::LabeledFormTerm,
       [](const Catalog& c) { return golden_detail::psi16_range(c, 9, true); }},
      {"psi-pair-complex", RecordKind::LabeledViewTerm,
       [](const Catalog& c) { return golden_detail::psi_pair_complex(c); }},
      {"psi-nine-complex", RecordKind::LabeledViewTerm,
       [](const Catalog& c) { return golden_detail::psi_nine_complex(c); }},
      {"psi-zero-complex", RecordKind::LabeledViewTerm,
       [](const Catalog& c) { return golden_detail::psi_zero_complex(c); }},
  };
  return specs;
}

// Canonical serialization of the 16-dimensional canonical 8-form (already
// normalized by 360).
inline std::string phi_spin9_payload(const Catalog& cat, unsigned workers = 1) {
  const SparseForm quartic = tau4(cat.psi16, workers);
  return form_jsonl(quartic.scaled(GaussianRational(Rational(1, 360))));
}

// Meta record frozen for the 32-dimensional canonical 8-form.
inline std::string phi_spin10_meta(const SparseForm& form) {
  Rational lo, hi;
  bool first = true;
  for (const auto& [b, c] : form.terms()) {
    const Rational& r = c.re();
    if (first || r < lo) lo = r;
    if (first || hi < r) hi = r;
    first = false;
  }
  Json j;
  j["name"] = "phi-spin10";
  j["degree"] = form.degree();
  j["terms"] = form.term_count();
  j["coeff-min"] = lo.str();
  j["coeff-max"] = hi.str();
  j["sha256"] = sha256_hex(form_jsonl(form));
  return j.dump() + "\n";
}

inline std::string phi_spin10_payload(const Catalog& cat, unsigned workers = 1) {
  return phi_spin10_meta(tau4(cat.psi32, workers));
}

// ---------------------------------------------------------------------------
// Directory plumbing.

inline std::filesystem::path golden_path(const std::filesystem::path& dir,
                                         const std::string& name) {
  return dir / (name + ".jsonl");
}

inline std::string read_golden_file(const std::filesystem::path& dir,
                                    const std::string& name) {
  const auto path = golden_path(dir, name);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GoldenError("missing golden file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof())
    throw GoldenError("unreadable golden file: " + path.string());
  return std::move(buffer).str();
}

inline void write_golden_file(const std::filesystem::path& dir,
                              const std::string& name, const std::string& payload) {
  std::filesystem::create_directories(dir);
  const auto path = golden_path(dir, name);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GoldenError("cannot write golden file: " + path.string());
  out << payload;
  if (!out.good()) throw GoldenError("short write on golden file: " + path.string());
}

// Regenerates the complete golden directory (tables and invariants),
// byte-deterministically.
inline void write_golden_dir(const Catalog& cat, const std::filesystem::path& dir,
                             unsigned workers = 1) {
  for (const GoldenSpec& spec : golden_table_specs())
    write_golden_file(dir, spec.name, spec.generate(cat));
  write_golden_file(dir, "phi-spin9", phi_spin9_payload(cat, workers));
  write_golden_file(dir, "phi-spin10", phi_spin10_payload(cat, workers));
}

namespace golden_detail {

// First line index (1-based) at which the payloads differ, for witnesses.
inline std::string first_divergence(const std::string& got, const std::string& want) {
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = std::min(got.size(), want.size());
  for (; i < n && got[i] == want[i]; ++i)
    if (got[i] == '\n') ++line;
  if (i == n && got.size() == want.size()) return "";
  return "first difference at line " + std::to_string(line);
}

}  // namespace golden_detail

// Byte-compares every table golden against its regenerated payload.
inline CheckReport verify_golden_tables(const Catalog& cat,
                                        const std::filesystem::path& dir) {
  CheckReport report("golden-tables");
  for (const GoldenSpec& spec : golden_table_specs()) {
    const std::string frozen = read_golden_file(dir, spec.name);
    const std::size_t records = validate_records(frozen, spec.kind, spec.name);
    if (records == 0) throw GoldenError("empty golden file: " + spec.name);
    const std::string regenerated = spec.generate(cat);
    const std::string witness = golden_detail::first_divergence(regenerated, frozen);
    report.add(spec.name, witness.empty(),
               witness.empty() ? std::to_string(records) + " records" : witness);
  }
  return report;
}

// Verifies the frozen degree-8 invariants: the 16-dimensional form byte for
// byte, the 32-dimensional one through its meta record.
inline CheckReport verify_golden_invariants(const Catalog& cat,
                                            const std::filesystem::path& dir,
                                            unsigned workers = 1) {
  CheckReport report("golden-invariants");

  const std::string frozen9 = read_golden_file(dir, "phi-spin9");
  validate_records(frozen9, RecordKind::FormTerm, "phi-spin9");
  const std::string regenerated9 = phi_spin9_payload(cat, workers);
  const std::string witness9 = golden_detail::first_divergence(regenerated9, frozen9);
  report.add("phi-spin9", witness9.empty(), witness9);

  const std::string frozen10 = read_golden_file(dir, "phi-spin10");
  validate_records(frozen10, RecordKind::Meta, "phi-spin10");
  const std::string regenerated10 = phi_spin10_payload(cat, workers);
  const std::string witness10 =
      golden_detail::first_divergence(regenerated10, frozen10);
  report.add("phi-spin10", witness10.empty(), witness10);
  return report;
}

// The frozen hash a benchmark output must reproduce.
inline std::string frozen_invariant_hash(const std::filesystem::path& dir,
                                         const std::string& name) {
  const std::string frozen = read_golden_file(dir, name);
  if (name == "phi-spin10") {
    validate_records(frozen, RecordKind::Meta, name);
    return Json::parse(frozen)["sha256"].get<std::string>();
  }
  validate_records(frozen, RecordKind::FormTerm, name);
  return sha256_hex(frozen);
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_GOLDEN_HPP
