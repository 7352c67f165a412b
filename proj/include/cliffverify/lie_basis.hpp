#ifndef CLIFFVERIFY_LIE_BASIS_HPP
#define CLIFFVERIFY_LIE_BASIS_HPP

/*
 * The Lie-algebra layer built on top of the Clifford systems:
 *
 *   - jc:   the 36 pair compositions of the nine 16x16 generators;
 *   - jt:   the 84 triple compositions (together with jc they span so(16));
 *   - jd:   the 45-element complex basis extending jc by the nine elements
 *           i * generator_beta (labels gain a 0 slot);
 *   - p:    the 45 pair compositions of the ten 32x32 generators.
 *
 * jd and p are isomorphic as Lie algebras; iso_check verifies this by exact
 * structure-constant comparison under the explicit basis correspondence.
 */

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffverify/clifford_system.hpp"
#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/linear_span.hpp"
#include "cliffverify/rational.hpp"
#include "cliffverify/report.hpp"

namespace cliffverify {

struct LieBasisElement {
  std::vector<std::size_t> index;  // label tuple, strictly increasing
  ExactMatrix matrix;
};

struct LieBasis {
  std::string label;
  std::vector<LieBasisElement> elements;

  std::vector<ExactMatrix> matrices() const {
    std::vector<ExactMatrix> v;
    v.reserve(elements.size());
    for (const auto& e : elements) v.push_back(e.matrix);
    return v;
  }

  // Position of the element with the given label tuple.
  std::size_t position(const std::vector<std::size_t>& index) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (elements[k].index == index) return k;
    throw std::out_of_range("LieBasis: no element with that index");
  }
};

// The 36 complex structures J_{alpha,beta} = gen_alpha * gen_beta
// (1 <= alpha < beta <= 9) on R^16, in lexicographic label order.
inline LieBasis build_JC() {
  const CliffordSystem s = build_spin9_system();
  LieBasis b{"jc", {}};
  for (std::size_t a = 1; a <= 9; ++a)
    for (std::size_t c = a + 1; c <= 9; ++c)
      b.elements.push_back({{a, c}, s.members[a - 1] * s.members[c - 1]});
  return b;
}

// The 84 triple compositions on R^16.
inline LieBasis build_J_triples() {
  const CliffordSystem s = build_spin9_system();
  LieBasis b{"jt", {}};
  for (std::size_t a = 1; a <= 9; ++a)
    for (std::size_t c = a + 1; c <= 9; ++c)
      for (std::size_t d = c + 1; d <= 9; ++d)
        b.elements.push_back(
            {{a, c, d}, s.members[a - 1] * s.members[c - 1] * s.members[d - 1]});
  return b;
}

// The 45-element complex basis: label pairs 0 <= alpha < beta <= 9, where
// J_{0,beta} = i * gen_beta and the rest are the jc elements viewed as
// complex matrices.  The 0-row elements for beta <= 8 are cross-checked
// against the bracket expression (1/2)[J_{beta,9}, J_{0,9}].
inline LieBasis build_JD() {
  const CliffordSystem s = build_spin9_system();
  LieBasis b{"jd", {}};
  auto scaled_i = [](const ExactMatrix& m) { return m.scaled(GaussianRational::i()); };
  for (std::size_t a = 0; a <= 9; ++a)
    for (std::size_t c = a + 1; c <= 9; ++c) {
      ExactMatrix m = a == 0 ? scaled_i(s.members[c - 1])
                             : s.members[a - 1] * s.members[c - 1];
      m.set_realm(Realm::complex16);
      b.elements.push_back({{a, c}, std::move(m)});
    }
  const ExactMatrix j09 = scaled_i(s.members[8]);
  for (std::size_t beta = 1; beta <= 8; ++beta) {
    const ExactMatrix jb9 = s.members[beta - 1] * s.members[8];
    const ExactMatrix half_bracket =
        mat_bracket(jb9, j09).scaled(GaussianRational(Rational(1, 2)));
    if (half_bracket != b.elements[b.position({0, beta})].matrix)
      throw std::logic_error("build_JD: bracket cross-check failed");
  }
  return b;
}

// The 45 pair compositions P_alpha * P_beta (0 <= alpha < beta <= 9) of the
// ten 32x32 generators, in lexicographic label order.
inline LieBasis build_P_basis() {
  const CliffordSystem s = build_C9_system();
  LieBasis b{"p", {}};
  for (std::size_t a = 0; a <= 9; ++a)
    for (std::size_t c = a + 1; c <= 9; ++c)
      b.elements.push_back({{a, c}, s.members[a] * s.members[c]});
  return b;
}

// Bracket closure: every pairwise commutator must lie in the span of the
// basis.  Reports the dimension (= element count; SpanBasis construction
// proves independence).
inline CheckReport bracket_closure_check(const LieBasis& b) {
  CheckReport report("bracket-closure:" + b.label);
  const SpanBasis span(b.matrices());
  report.add("dimension", true, std::to_string(b.elements.size()));
  bool closed = true;
  std::string witness;
  for (std::size_t i = 0; i < b.elements.size() && closed; ++i)
    for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
      const ExactMatrix br = mat_bracket(b.elements[i].matrix, b.elements[j].matrix);
      if (!span.solve(br).in_span) {
        closed = false;
        witness = "bracket of elements " + std::to_string(i) + "," + std::to_string(j) +
                  " leaves the span";
        break;
      }
    }
  report.add("closed-under-bracket", closed, witness);
  return report;
}

// Structure constants against the canonical ordered basis: sparse
// coefficient lists per ordered pair (i < j).
struct StructureConstants {
  std::size_t dim = 0;
  std::map<std::pair<std::size_t, std::size_t>,
           std::vector<std::pair<std::size_t, Rational>>>
      tensor;

  // Coefficient of basis element k in [x_i, x_j], for any i, j.
  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return Rational();
    const bool flip = i > j;
    const auto it = tensor.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == tensor.end()) return Rational();
    for (const auto& [pos, c] : it->second)
      if (pos == k) return flip ? -c : c;
    return Rational();
  }
};

inline StructureConstants extract_structure_constants(const LieBasis& b) {
  StructureConstants sc;
  sc.dim = b.elements.size();
  const SpanBasis span(b.matrices());
  for (std::size_t i = 0; i < sc.dim; ++i)
    for (std::size_t j = i + 1; j < sc.dim; ++j) {
      const SolveResult res =
          span.solve(mat_bracket(b.elements[i].matrix, b.elements[j].matrix));
      if (!res.in_span)
        throw std::logic_error("extract_structure_constants: basis not closed");
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      for (std::size_t k = 0; k < sc.dim; ++k)
        if (!res.coeffs[k].is_zero()) coeffs.emplace_back(k, res.coeffs[k]);
      if (!coeffs.empty()) sc.tensor.emplace(std::make_pair(i, j), std::move(coeffs));
    }
  return sc;
}

// Exhaustive Jacobi sweep on an extracted tensor:
// sum_m c^m_{jk} c^l_{im} + c^m_{ki} c^l_{jm} + c^m_{ij} c^l_{km} = 0.
inline bool jacobi_holds(const StructureConstants& sc, std::string* witness = nullptr) {
  auto bracket_into = [&sc](std::size_t i, std::size_t j,
                            std::map<std::size_t, Rational>& acc, std::size_t via) {
    // acc += c^m_{ij} * [x_via... ] -- caller supplies the inner pair (i,j)
    // and the outer element via; we accumulate c^m_{ij} * c^l_{via,m}.
    const bool flip = i > j;
    const auto it = sc.tensor.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == sc.tensor.end()) return;
    for (const auto& [m, c_raw] : it->second) {
      const Rational c = flip ? -c_raw : c_raw;
      if (via == m) continue;  // [x,x] = 0
      const bool oflip = via > m;
      const auto ot = sc.tensor.find(oflip ? std::make_pair(m, via) : std::make_pair(via, m));
      if (ot == sc.tensor.end()) continue;
      for (const auto& [l, d_raw] : ot->second) acc[l] += c * (oflip ? -d_raw : d_raw);
    }
  };
  for (std::size_t i = 0; i < sc.dim; ++i)
    for (std::size_t j = i + 1; j < sc.dim; ++j)
      for (std::size_t k = j + 1; k < sc.dim; ++k) {
        std::map<std::size_t, Rational> acc;
        bracket_into(j, k, acc, i);  // [x_i, [x_j, x_k]]
        bracket_into(k, i, acc, j);  // [x_j, [x_k, x_i]]
        bracket_into(i, j, acc, k);  // [x_k, [x_i, x_j]]
        for (const auto& [l, v] : acc)
          if (!v.is_zero()) {
            if (witness)
              *witness = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(k) + ") violates the Jacobi identity";
            return false;
          }
      }
  return true;
}

// The explicit Lie isomorphism between the 32x32 pair-composition algebra
// and the 45-element complex basis: label map {a,b} -> {a+1,b+1} for b <= 8
// and {a,9} -> {0,a+1}, verified by exact structure-constant equality.
inline CheckReport iso_check() {
  CheckReport report("lie-iso");
  const LieBasis p = build_P_basis();
  const LieBasis jd = build_JD();
  report.add("correspondence-count",
             p.elements.size() == 45 && jd.elements.size() == 45, "45 <-> 45");

  // Position map sigma: p position -> jd position.
  std::vector<std::size_t> sigma(p.elements.size());
  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    const auto& idx = p.elements[k].index;
    const std::vector<std::size_t> target =
        idx[1] <= 8 ? std::vector<std::size_t>{idx[0] + 1, idx[1] + 1}
                    : std::vector<std::size_t>{0, idx[0] + 1};
    sigma[k] = jd.position(target);
  }

  const StructureConstants sp = extract_structure_constants(p);
  const StructureConstants sj = extract_structure_constants(jd);

  bool match = true;
  std::string witness;
  for (std::size_t i = 0; i < sp.dim && match; ++i)
    for (std::size_t j = i + 1; j < sp.dim && match; ++j)
      for (std::size_t k = 0; k < sp.dim; ++k)
        if (sp.coeff(i, j, k) != sj.coeff(sigma[i], sigma[j], sigma[k])) {
          match = false;
          witness = "constants differ at pair (" + std::to_string(i) + "," +
                    std::to_string(j) + "), coefficient " + std::to_string(k);
          break;
        }
  report.add("structure-constants-match", match, witness);
  report.add("antisymmetry", true,
             "canonical storage over ordered pairs; opposite order by linearity of the solve");

  std::string jw;
  const bool jac_p = jacobi_holds(sp, &jw);
  report.add("jacobi-pair-composition-side", jac_p, jac_p ? "14190 triples" : jw);
  const bool jac_j = jacobi_holds(sj, &jw);
  report.add("jacobi-complex-side", jac_j, jac_j ? "14190 triples" : jw);
  return report;
}

// The 36 + 84 split of so(16): pair and triple compositions are mutually
// orthogonal and jointly span the full 120-dimensional algebra.
inline CheckReport so16_decomposition_check() {
  CheckReport report("so16-decomposition");
  const LieBasis jc = build_JC();
  const LieBasis jt = build_J_triples();
  report.add("pair-count", jc.elements.size() == 36, std::to_string(jc.elements.size()));
  report.add("triple-count", jt.elements.size() == 84, std::to_string(jt.elements.size()));

  bool orthogonal = true;
  std::string witness;
  std::vector<ExactMatrix> all = jc.matrices();
  for (auto& m : jt.matrices()) all.push_back(std::move(m));
  for (std::size_t a = 0; a < all.size() && orthogonal; ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (!herm_inner(all[a], all[b]).is_zero()) {
        orthogonal = false;
        witness = "elements " + std::to_string(a) + "," + std::to_string(b) +
                  " are not orthogonal";
        break;
      }
  report.add("pairwise-orthogonal", orthogonal, witness);

  const std::size_t triple_rank = rank_of_family(jt.matrices());
  report.add("triple-rank", triple_rank == 84, std::to_string(triple_rank));
  const std::size_t total_rank = rank_of_family(all);
  report.add("total-rank-is-dim-so16", total_rank == 120, std::to_string(total_rank));
  return report;
}

// The representation matrix i * [[r*Id, R_conj(v)], [R_v, -r*Id]] on C^16;
// squares to -(r^2 + |v|^2) Id.
inline ExactMatrix clifford_rep_map(const Rational& r, const OctVec& v) {
  const ExactMatrix rv = right_mult_matrix(v);
  const ExactMatrix rvc = right_mult_matrix(oct_conj(v));
  ExactMatrix m(16, Realm::complex16);
  const GaussianRational ir(Rational(), r);  // r * i
  for (std::size_t k = 0; k < 8; ++k) {
    m.at(k, k) = ir;
    m.at(8 + k, 8 + k) = -ir;
  }
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      if (!rvc.at(a, b).is_zero()) m.at(a, 8 + b) = GaussianRational::i() * rvc.at(a, b);
      if (!rv.at(a, b).is_zero()) m.at(8 + a, b) = GaussianRational::i() * rv.at(a, b);
    }
  return m;
}

// Commutation split of a family of matrices against a complex structure.
inline CheckReport structure_commutation_split(const std::string& subject,
                                               const std::vector<ExactMatrix>& mats,
                                               const ExactMatrix& j) {
  CheckReport report("commutation-split:" + subject);
  std::size_t commuting = 0, anticommuting = 0;
  bool classified = true;
  std::string witness;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const bool comm = mat_bracket(mats[k], j).is_zero();
    const bool anti = mat_anticommutator(mats[k], j).is_zero();
    if (comm == anti) {
      classified = false;
      witness = "element " + std::to_string(k) + " neither commutes nor anticommutes";
      continue;
    }
    ++(comm ? commuting : anticommuting);
  }
  report.add("elements-classified", classified, witness);
  report.add("commuting-count", true, std::to_string(commuting));
  report.add("anticommuting-count", true, std::to_string(anticommuting));
  return report;
}

// Linear-span dimensions of the four bases: each family is linearly
// independent over the rationals, and the pair + triple compositions on R^16
// jointly span the full 120-dimensional space of skew matrices.
inline CheckReport span_dimension_check() {
  CheckReport report("span-dimensions");
  const LieBasis jc = build_JC();
  const LieBasis jt = build_J_triples();
  const LieBasis jd = build_JD();
  const LieBasis p = build_P_basis();

  const auto expect_rank = [&report](const std::string& name,
                                     const std::vector<ExactMatrix>& mats,
                                     std::size_t want) {
    const std::size_t got = rank_of_family(mats);
    report.add(name, got == want,
               "rank " + std::to_string(got) + " of " + std::to_string(mats.size()) +
               " elements, expected " + std::to_string(want));
  };

  expect_rank("pair-compositions-span-36", jc.matrices(), 36);
  expect_rank("triple-compositions-span-84", jt.matrices(), 84);
  std::vector<ExactMatrix> joint = jc.matrices();
  for (auto& m : jt.matrices()) joint.push_back(std::move(m));
  expect_rank("joint-span-is-so16", joint, 120);
  expect_rank("complex-basis-spans-45", jd.matrices(), 45);
  expect_rank("doubled-pair-compositions-span-45", p.matrices(), 45);
  return report;
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_LIE_BASIS_HPP
