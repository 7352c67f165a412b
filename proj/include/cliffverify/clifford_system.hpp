#ifndef CLIFFVERIFY_CLIFFORD_SYSTEM_HPP
#define CLIFFVERIFY_CLIFFORD_SYSTEM_HPP

/*
 * Clifford systems: ordered families of symmetric orthogonal involutions
 * that pairwise anticommute.  Three concrete systems are built here:
 *
 *   - spin9: nine generators on R^16, blocks assembled from octonion
 *     right multiplications;
 *   - c9: ten generators on R^32, blocks assembled from the nine complex
 *     structures J_{1,beta} = gen1 * gen_beta of the spin9 system;
 *   - pauli: the realified 2x2 complex prototype (three generators on R^4).
 *
 * Compositions of k distinct generators are complex structures for
 * k = 2, 3 mod 4 and involutions for k = 0, 1 mod 4; the scan operations
 * verify this exhaustively and measure the span of the large orthogonal
 * family of complex structures the ten-generator system produces.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/linear_span.hpp"
#include "cliffverify/octonion.hpp"
#include "cliffverify/rational.hpp"
#include "cliffverify/report.hpp"

namespace cliffverify {

struct CliffordSystem {
  std::string label;
  std::size_t dim = 0;
  std::vector<ExactMatrix> members;
};

// Nine symmetric orthogonal involutions on R^16.  Members 2..8 carry the
// octonion right multiplications by i, j, k, e, f, g, h in their
// off-diagonal blocks; member 1 swaps the octonion halves and member 9 is
// the half-signature involution.
inline CliffordSystem build_spin9_system() {
  CliffordSystem s{"spin9", 16, {}};
  const ExactMatrix id8 = ExactMatrix::identity(8);
  s.members.push_back(block_offdiag2(id8, id8));
  for (std::size_t unit = 1; unit <= 7; ++unit) {
    const ExactMatrix r = right_mult_matrix(unit);
    s.members.push_back(block_offdiag2(-r, r));
  }
  s.members.push_back(block_diag2(id8, -id8));
  for (auto& m : s.members) m.set_realm(Realm::real16);
  return s;
}

// Ten symmetric orthogonal involutions on R^32.  The off-diagonal blocks of
// members 1..8 are the complex structures J_{1,k+1} = gen1 * gen_{k+1} of
// the spin9 system.
inline CliffordSystem build_C9_system() {
  const CliffordSystem spin9 = build_spin9_system();
  CliffordSystem s{"c9", 32, {}};
  const ExactMatrix id16 = ExactMatrix::identity(16);
  s.members.push_back(block_offdiag2(id16, id16));
  for (std::size_t k = 1; k <= 8; ++k) {
    const ExactMatrix j1k = spin9.members[0] * spin9.members[k];
    s.members.push_back(block_offdiag2(-j1k, j1k));
  }
  s.members.push_back(block_diag2(id16, -id16));
  for (auto& m : s.members) m.set_realm(Realm::real32);
  return s;
}

// The realified 2x2 complex prototype system.
inline CliffordSystem build_pauli_system() {
  ExactMatrix p0(2), p1(2), p2(2);
  p0.at(0, 1) = GaussianRational(1);
  p0.at(1, 0) = GaussianRational(1);
  p1.at(0, 1) = GaussianRational::i();
  p1.at(1, 0) = -GaussianRational::i();
  p2.at(0, 0) = GaussianRational(1);
  p2.at(1, 1) = GaussianRational(-1);
  CliffordSystem s{"pauli", 4, {}};
  for (const auto& p : {p0, p1, p2}) s.members.push_back(realify(p));
  return s;
}

// The four relations defining a Clifford system, each checked exactly over
// all members / member pairs, with a witness for the first failure.
inline CheckReport verify_clifford_relations(const CliffordSystem& s) {
  CheckReport report("clifford-relations:" + s.label);
  const ExactMatrix id = ExactMatrix::identity(s.dim);

  bool symmetric = true, involution = true, orthogonal = true;
  std::string sym_w, inv_w, orth_w;
  for (std::size_t a = 0; a < s.members.size(); ++a) {
    const ExactMatrix& m = s.members[a];
    if (symmetric && !m.is_symmetric()) {
      symmetric = false;
      sym_w = "member " + std::to_string(a + 1) + " is not symmetric";
    }
    if (involution && m * m != id) {
      involution = false;
      inv_w = "member " + std::to_string(a + 1) + " does not square to identity";
    }
    if (orthogonal && m.transpose() * m != id) {
      orthogonal = false;
      orth_w = "member " + std::to_string(a + 1) + " is not orthogonal";
    }
  }
  report.add("members-symmetric", symmetric, sym_w);
  report.add("members-square-to-identity", involution, inv_w);
  report.add("members-orthogonal", orthogonal, orth_w);

  bool anticommute = true;
  std::string anti_w;
  for (std::size_t a = 0; a < s.members.size() && anticommute; ++a)
    for (std::size_t b = a + 1; b < s.members.size(); ++b)
      if (!mat_anticommutator(s.members[a], s.members[b]).is_zero()) {
        anticommute = false;
        anti_w = "members " + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                 " do not anticommute";
        break;
      }
  report.add("distinct-members-anticommute", anticommute, anti_w);
  return report;
}

enum class CompositionKind { complex_structure, involution };

struct CompositionClass {
  std::vector<std::size_t> indices;  // 1-based, strictly increasing
  CompositionKind kind;
};

struct Composition {
  ExactMatrix matrix;
  CompositionClass cls;
};

// Ordered product of the selected members (1-based indices, increasing;
// matrix product left-to-right, so the last index acts first as a map),
// classified by its actual algebraic type.
inline Composition composition(const CliffordSystem& s, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw std::invalid_argument("composition: empty index list");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 1 || indices[k] > s.members.size())
      throw std::invalid_argument("composition: index out of range");
    if (k > 0 && indices[k] <= indices[k - 1])
      throw std::invalid_argument("composition: indices must be strictly increasing");
  }
  ExactMatrix m = s.members[indices[0] - 1];
  for (std::size_t k = 1; k < indices.size(); ++k) m = m * s.members[indices[k] - 1];

  const ExactMatrix sq = m * m;
  const ExactMatrix id = ExactMatrix::identity(s.dim);
  CompositionKind kind;
  if (m.is_skew() && sq == -id)
    kind = CompositionKind::complex_structure;
  else if (m.is_symmetric() && sq == id)
    kind = CompositionKind::involution;
  else
    throw std::logic_error("composition: product is neither a complex structure nor an involution");
  return {std::move(m), {indices, kind}};
}

namespace detail {

inline void increasing_subsets(std::size_t n, std::size_t k,
                               std::vector<std::vector<std::size_t>>& out) {
  if (k == 0 || k > n) return;
  std::vector<std::size_t> cur(k);
  // Iterative enumeration in lexicographic order.
  for (std::size_t t = 0; t < k; ++t) cur[t] = t + 1;
  while (true) {
    out.push_back(cur);
    std::size_t t = k;
    while (t > 0 && cur[t - 1] == n - k + t) --t;
    if (t == 0) break;
    ++cur[t - 1];
    for (std::size_t u = t; u < k; ++u) cur[u] = cur[u - 1] + 1;
  }
}

}  // namespace detail

// Composition sizes scanned per system: the ten-member system admits the
// full 2/3/6 family; nine members contribute their 36 pairs; the prototype
// three-member system has pairs and the single triple.
inline std::vector<std::size_t> scan_sizes_for(const CliffordSystem& s) {
  switch (s.members.size()) {
    case 10: return {2, 3, 6};
    case 3: return {2, 3};
    default: return {2};
  }
}

// Enumerates the compositions of the scan sizes, verifies each is a complex
// structure, verifies pairwise Hermitian orthogonality, and reports the
// exact rank of the family.
inline CheckReport orthogonality_scan(const CliffordSystem& s) {
  if (s.members.size() < 3)
    throw std::invalid_argument("orthogonality_scan: needs at least 3 members");
  CheckReport report("orthogonality-scan:" + s.label);

  const std::vector<std::size_t> sizes = scan_sizes_for(s);
  std::vector<std::vector<std::size_t>> index_lists;
  std::string count_detail;
  for (std::size_t k : sizes) {
    const std::size_t before = index_lists.size();
    detail::increasing_subsets(s.members.size(), k, index_lists);
    if (!count_detail.empty()) count_detail += "+";
    count_detail += std::to_string(index_lists.size() - before);
  }
  count_detail += "=" + std::to_string(index_lists.size());
  report.add("composition-count", true, count_detail);

  std::vector<ExactMatrix> structures;
  structures.reserve(index_lists.size());
  bool all_complex = true;
  std::string complex_w;
  for (const auto& idx : index_lists) {
    Composition c = composition(s, idx);
    if (c.cls.kind != CompositionKind::complex_structure && all_complex) {
      all_complex = false;
      complex_w = "composition of " + std::to_string(idx.size()) + " members is not a complex structure";
    }
    structures.push_back(std::move(c.matrix));
  }
  report.add("all-complex-structures", all_complex, complex_w);

  bool orthogonal = true;
  std::string orth_w;
  for (std::size_t a = 0; a < structures.size() && orthogonal; ++a)
    for (std::size_t b = a + 1; b < structures.size(); ++b)
      if (!herm_inner(structures[a], structures[b]).is_zero()) {
        orthogonal = false;
        orth_w = "structures " + std::to_string(a) + "," + std::to_string(b) + " not orthogonal";
        break;
      }
  report.add("pairwise-orthogonal", orthogonal, orth_w);

  const std::size_t rank = rank_of_family(structures);
  report.add("rank-equals-count", rank == structures.size(),
             "rank " + std::to_string(rank) + " of " + std::to_string(structures.size()));
  return report;
}

// Exhaustive parity-classification law over all compositions of sizes
// 1..max_size: symmetric involution for |S| = 0, 1 mod 4, skew complex
// structure for |S| = 2, 3 mod 4.
inline CheckReport parity_classification_scan(const CliffordSystem& s, std::size_t max_size) {
  CheckReport report("parity-classification:" + s.label);
  std::size_t checked = 0;
  bool law_holds = true;
  std::string witness;
  for (std::size_t k = 1; k <= max_size && law_holds; ++k) {
    std::vector<std::vector<std::size_t>> lists;
    detail::increasing_subsets(s.members.size(), k, lists);
    for (const auto& idx : lists) {
      const Composition c = composition(s, idx);
      const bool expect_complex = (k % 4 == 2) || (k % 4 == 3);
      const bool got_complex = c.cls.kind == CompositionKind::complex_structure;
      ++checked;
      if (expect_complex != got_complex) {
        law_holds = false;
        witness = "size " + std::to_string(k) + " composition violates the parity law";
        break;
      }
    }
  }
  report.add("parity-law", law_holds, witness.empty()
             ? std::to_string(checked) + " compositions checked" : witness);
  return report;
}

// Replays the dimension-count obstruction: the 2/3/6 compositions of ten
// anticommuting generators give 375 independent orthogonal complex
// structures, but the orthogonal complex structures on R^32 compatible with
// a fixed complex structure form a space of real dimension only 256.
inline CheckReport unitary_obstruction_check() {
  CheckReport report("unitary-obstruction");
  auto choose = [](std::size_t n, std::size_t k) {
    BigInt num = 1, den = 1;
    for (std::size_t t = 0; t < k; ++t) {
      num *= static_cast<unsigned>(n - t);
      den *= static_cast<unsigned>(t + 1);
    }
    return num / den;
  };
  const BigInt pairs = choose(10, 2), triples = choose(10, 3), sextuples = choose(10, 6);
  const BigInt total = pairs + triples + sextuples;
  report.add("composition-counts", pairs == 45 && triples == 120 && sextuples == 210,
             pairs.str() + "+" + triples.str() + "+" + sextuples.str());
  // u(16) has real dimension 256: the compatible skew endomorphisms form a
  // space of that dimension, 16^2.
  const BigInt bound = BigInt(16) * BigInt(16);
  report.add("compatible-dimension-bound", bound == 256, bound.str());
  report.add("obstruction-holds", total > bound,
             total.str() + " > " + bound.str());
  return report;
}

// Which members commute (complex-linear) or anticommute (anti-linear) with
// a given complex structure; every member of the built systems does one or
// the other.
inline CheckReport complex_linearity_scan(const CliffordSystem& s, const ExactMatrix& j,
                                          const std::string& structure_label) {
  CheckReport report("complex-linearity:" + s.label + ":" + structure_label);
  std::string commuting, anticommuting;
  bool classified = true;
  std::string witness;
  for (std::size_t a = 0; a < s.members.size(); ++a) {
    const bool comm = mat_bracket(s.members[a], j).is_zero();
    const bool anti = mat_anticommutator(s.members[a], j).is_zero();
    if (comm == anti) {
      classified = false;
      witness = "member " + std::to_string(a + 1) + " neither commutes nor anticommutes";
      continue;
    }
    std::string& bucket = comm ? commuting : anticommuting;
    if (!bucket.empty()) bucket += ",";
    bucket += std::to_string(a + 1);
  }
  report.add("members-classified", classified, witness);
  report.add("commuting-members", true, commuting.empty() ? "none" : commuting);
  report.add("anticommuting-members", true, anticommuting.empty() ? "none" : anticommuting);
  return report;
}

// The quaternionic complex structure on R^32: left multiplication by the
// quaternion i on each of the four quaternion coordinate blocks.  Distinct
// from standard_complex_structure(); the two classify the ten-member
// system's generators differently.
inline ExactMatrix quaternionic_complex_structure() {
  QuatVec qi{};
  qi[1] = GaussianRational(1);
  ExactMatrix li(4);
  for (std::size_t a = 0; a < 4; ++a) {
    QuatVec ea{};
    ea[a] = GaussianRational(1);
    const QuatVec col = quat_mul(qi, ea);
    for (std::size_t r = 0; r < 4; ++r)
      if (!col[r].is_zero()) li.at(r, a) = col[r];
  }
  ExactMatrix j(32, Realm::real32);
  for (std::size_t block = 0; block < 8; ++block)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        if (!li.at(r, c).is_zero()) j.at(4 * block + r, 4 * block + c) = li.at(r, c);
  return j;
}

// Dimension function for the maximal Clifford-system size: smallest
// admissible N is 2 * k * delta(m), with the printed table for m <= 8 and
// the period-8 recursion above it.
inline BigInt delta(long long m) {
  if (m < 1) throw std::invalid_argument("delta: m must be positive");
  static const int table[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  BigInt factor = 1;
  while (m > 8) {
    factor *= 16;
    m -= 8;
  }
  return factor * table[m - 1];
}

// Checks the dimension function against its defining table, the period-8
// recursion, and the three systems this library actually constructs (each
// realizes the minimal admissible dimension N = 2 * delta(m)).
inline CheckReport delta_dimension_check() {
  CheckReport report("clifford-dimension-function");
  static const int printed[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  bool table_ok = true;
  std::string witness;
  for (long long m = 1; m <= 8; ++m)
    if (delta(m) != printed[m - 1]) {
      table_ok = false;
      witness = "delta(" + std::to_string(m) + ") = " + delta(m).str();
      break;
    }
  report.add("printed-row-m-1-to-8", table_ok, witness);

  bool recursion_ok = true;
  witness.clear();
  for (long long h = 1; h <= 16; ++h)
    if (delta(8 + h) != 16 * delta(h)) {
      recursion_ok = false;
      witness = "h = " + std::to_string(h);
      break;
    }
  report.add("period-8-recursion", recursion_ok, witness);
  report.add("doubled-at-nine-is-32", 2 * delta(9) == 32,
             "2*delta(9) = " + (2 * delta(9)).str());

  const CliffordSystem systems[] = {build_pauli_system(), build_spin9_system(),
                                    build_C9_system()};
  for (const CliffordSystem& s : systems) {
    const long long m = static_cast<long long>(s.members.size()) - 1;
    const BigInt minimal = 2 * delta(m);
    const bool ok = minimal == s.members.front().dim();
    report.add("constructed-" + s.label + "-realizes-minimal-dimension", ok,
               "m = " + std::to_string(m) + ", N = " +
                   std::to_string(s.members.front().dim()) + ", 2*delta = " +
                   minimal.str());
  }
  return report;
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_CLIFFORD_SYSTEM_HPP
