#ifndef CLIFFVERIFY_VERSION_HPP
#define CLIFFVERIFY_VERSION_HPP

/*
 * Library version and the convention fingerprint.
 *
 * Every report carries a short hash over the serialized objects that pin
 * the sign and orientation conventions: the eight-unit multiplication
 * table, the doubled scalar structure, and the orientation probe (the
 * 2-form read off a realified right multiplication).  Two builds agree on
 * every golden byte if and only if they agree on this fingerprint, so a
 * convention drift shows up as a one-line diff in any report.
 */

#include <string>

#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/octonion.hpp"
#include "cliffverify/serialize.hpp"
#include "cliffverify/sha256.hpp"
#include "cliffverify/sparse_form.hpp"

namespace cliffverify {

inline constexpr const char* kVersion = "1.0.0";

inline const std::string& convention_fingerprint() {
  static const std::string fp = [] {
    std::string material = mul_table_json();
    material.push_back('\n');
    material += labeled_matrix_line("doubling", standard_complex_structure());
    material.push_back('\n');
    // Orientation probe: pairing convention and realify block layout in one
    // object (the 2-form of the realified right multiplication by the
    // fifth unit).
    material += form_jsonl(kahler_form_of(realify(right_mult_matrix(4))));
    return sha256_hex(material).substr(0, 16);
  }();
  return fp;
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_VERSION_HPP
