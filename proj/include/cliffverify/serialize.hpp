#ifndef CLIFFVERIFY_SERIALIZE_HPP
#define CLIFFVERIFY_SERIALIZE_HPP

/*
 * Deterministic JSONL serialization of the library's value types.
 *
 * One record per line, keys in alphabetical order, coefficients as exact
 * "p/q" strings with an explicit positive denominator.  Term order is the
 * container's canonical order (ascending blade mask, respectively
 * lexicographic (dz, dzbar)); matrix records list nonzero entries row-major.
 * The golden files, the CLI `emit` output, and the frozen hashes of the
 * degree-8 invariants all use these exact bytes, so any change here is a
 * format break.
 *
 * Record shapes:
 *   form term          {"blade":[...],"im":"p/q","re":"p/q"}
 *   labeled form term  {"blade":[...],"im":...,"label":"psi.1.2","re":...}
 *   labeled view term  {"dz":[...],"dzbar":[...],"im":...,"label":...,"re":...}
 *   labeled matrix     {"dim":n,"entries":[[r,c,"re","im"],...],"label":...}
 *   meta               {"name":...,"sha256":...,"terms":n, ...}
 */

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffverify/complex_view.hpp"
#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/octonion.hpp"
#include "cliffverify/sparse_form.hpp"

namespace cliffverify {

using Json = nlohmann::json;

// Raised by golden-file and parsing plumbing when an input is missing or
// not in the expected shape (as opposed to well-formed but wrong, which is
// a verification failure, not an error).
class GoldenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json index_array(std::uint32_t mask) {
  Json a = Json::array();
  for (int i = 0; i < 32; ++i)
    if (mask & (std::uint32_t(1) << i)) a.push_back(i);
  return a;
}

inline void put_coeff(Json& j, const GaussianRational& c) {
  j["re"] = c.re().str();
  j["im"] = c.im().str();
}

}  // namespace detail

// Label "prefix.a.b" from a printed index tuple.
inline std::string dotted_label(const std::string& prefix,
                                const std::vector<std::size_t>& index) {
  std::string s = prefix;
  for (const std::size_t i : index) {
    s.push_back('.');
    s += std::to_string(i);
  }
  return s;
}

inline std::string term_line(Blade blade, const GaussianRational& c) {
  Json j;
  j["blade"] = detail::index_array(blade);
  detail::put_coeff(j, c);
  return j.dump();
}

inline std::string labeled_term_line(const std::string& label, Blade blade,
                                     const GaussianRational& c) {
  Json j;
  j["label"] = label;
  j["blade"] = detail::index_array(blade);
  detail::put_coeff(j, c);
  return j.dump();
}

inline std::string labeled_view_term_line(const std::string& label,
                                          const ComplexBlade& blade,
                                          const GaussianRational& c) {
  Json j;
  j["label"] = label;
  j["dz"] = detail::index_array(blade.dz);
  j["dzbar"] = detail::index_array(blade.dzbar);
  detail::put_coeff(j, c);
  return j.dump();
}

inline std::string labeled_matrix_line(const std::string& label,
                                       const ExactMatrix& m) {
  Json j;
  j["label"] = label;
  j["dim"] = m.dim();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const GaussianRational& e = m.at(r, c);
      if (e.is_zero()) continue;
      entries.push_back(Json::array({r, c, e.re().str(), e.im().str()}));
    }
  j["entries"] = std::move(entries);
  return j.dump();
}

// Whole form, one term per line in ascending blade order, newline-terminated.
inline std::string form_jsonl(const SparseForm& f) {
  std::string out;
  for (const auto& [b, c] : f.terms()) {
    out += term_line(b, c);
    out.push_back('\n');
  }
  return out;
}

inline std::string labeled_form_lines(const std::string& label, const SparseForm& f) {
  std::string out;
  for (const auto& [b, c] : f.terms()) {
    out += labeled_term_line(label, b, c);
    out.push_back('\n');
  }
  return out;
}

inline std::string labeled_view_lines(const std::string& label, const ComplexView& v) {
  std::string out;
  for (const auto& [b, c] : v.terms()) {
    out += labeled_view_term_line(label, b, c);
    out.push_back('\n');
  }
  return out;
}

// The eight-unit multiplication table as a single JSON document:
// products[a][b] renders basis_a * basis_b as a signed unit name.
inline std::string mul_table_json() {
  static const char* names[8] = {"1", "i", "j", "k", "e", "f", "g", "h"};
  const OctonionTable& t = octonion_table();
  Json j;
  Json basis = Json::array();
  for (const char* n : names) basis.push_back(n);
  j["basis"] = std::move(basis);
  Json rows = Json::array();
  for (std::size_t a = 0; a < 8; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < 8; ++b) {
      std::string cell = t.sign[a][b] < 0 ? "-" : "";
      cell += names[t.index[a][b]];
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  j["products"] = std::move(rows);
  return j.dump();
}

// ---------------------------------------------------------------------------
// Golden-payload validation: distinguishes a corrupt file (throws
// GoldenError) from a well-formed file with different content (caller's
// byte comparison reports that as a verification failure).

enum class RecordKind { FormTerm, LabeledFormTerm, LabeledViewTerm, LabeledMatrix, Meta };

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw GoldenError(what);
}

inline void require_coeff(const Json& j, const std::string& ctx) {
  require(j.contains("re") && j["re"].is_string() && j.contains("im") &&
              j["im"].is_string(),
          ctx + ": missing re/im strings");
}

inline void require_index_array(const Json& j, const char* key, const std::string& ctx) {
  require(j.contains(key) && j[key].is_array(), ctx + ": missing " + key);
  for (const auto& e : j[key])
    require(e.is_number_unsigned() && e.get<std::size_t>() < 32,
            ctx + ": bad index in " + key);
}

}  // namespace detail

// Validates every line of a JSONL payload against the record shape; returns
// the number of records.
inline std::size_t validate_records(const std::string& payload, RecordKind kind,
                                    const std::string& context) {
  std::size_t count = 0, start = 0;
  while (start < payload.size()) {
    std::size_t end = payload.find('\n', start);
    if (end == std::string::npos) end = payload.size();
    const std::string line = payload.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    ++count;
    const std::string ctx = context + " line " + std::to_string(count);
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error&) {
      throw GoldenError(ctx + ": invalid JSON");
    }
    detail::require(j.is_object(), ctx + ": not an object");
    switch (kind) {
      case RecordKind::FormTerm:
        detail::require_index_array(j, "blade", ctx);
        detail::require_coeff(j, ctx);
        break;
      case RecordKind::LabeledFormTerm:
        detail::require(j.contains("label") && j["label"].is_string(),
                        ctx + ": missing label");
        detail::require_index_array(j, "blade", ctx);
        detail::require_coeff(j, ctx);
        break;
      case RecordKind::LabeledViewTerm:
        detail::require(j.contains("label") && j["label"].is_string(),
                        ctx + ": missing label");
        detail::require_index_array(j, "dz", ctx);
        detail::require_index_array(j, "dzbar", ctx);
        detail::require_coeff(j, ctx);
        break;
      case RecordKind::LabeledMatrix:
        detail::require(j.contains("label") && j["label"].is_string(),
                        ctx + ": missing label");
        detail::require(j.contains("dim") && j["dim"].is_number_unsigned(),
                        ctx + ": missing dim");
        detail::require(j.contains("entries") && j["entries"].is_array(),
                        ctx + ": missing entries");
        for (const auto& e : j["entries"])
          detail::require(e.is_array() && e.size() == 4 &&
                              e[0].is_number_unsigned() && e[1].is_number_unsigned() &&
                              e[2].is_string() && e[3].is_string(),
                          ctx + ": bad entry");
        break;
      case RecordKind::Meta:
        detail::require(j.contains("name") && j["name"].is_string() &&
                            j.contains("sha256") && j["sha256"].is_string() &&
                            j.contains("terms") && j["terms"].is_number_unsigned(),
                        ctx + ": missing meta fields");
        break;
    }
  }
  return count;
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_SERIALIZE_HPP
