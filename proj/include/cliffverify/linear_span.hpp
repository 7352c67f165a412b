#ifndef CLIFFVERIFY_LINEAR_SPAN_HPP
#define CLIFFVERIFY_LINEAR_SPAN_HPP

/*
 * Exact rank and span membership for families of matrices.
 *
 * Matrices are flattened to sparse rational vectors (real and imaginary
 * parts as separate coordinates), so the computed rank is the dimension of
 * the rational span, which for the families in this library equals the real
 * dimension.  Rows of the echelon basis are kept primitive (integer entries
 * with content 1 and positive pivot): the content is stripped after every
 * elimination so intermediate values stay small.
 */

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/rational.hpp"

namespace cliffverify {

// Sorted sparse vector of rational entries.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

inline SparseVec flatten_matrix(const ExactMatrix& m) {
  SparseVec v;
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const GaussianRational& x = m.at(r, c);
      if (x.is_zero()) continue;
      const std::uint32_t base = static_cast<std::uint32_t>(2 * (r * n + c));
      if (!x.re().is_zero()) v.emplace_back(base, x.re());
      if (!x.im().is_zero()) v.emplace_back(base + 1, x.im());
    }
  return v;
}

namespace detail {

// x + b*y for sorted sparse vectors; zero results dropped.
inline SparseVec sparse_add_scaled(const SparseVec& x, const Rational& b,
                                   const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i]);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      Rational v = b * y[j].second;
      if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Rational v = x[i].second + b * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Divides v by the signed content (gcd of entries, sign of the pivot) and
// returns that content, so v becomes primitive integer with positive pivot.
inline Rational make_primitive(SparseVec& v) {
  Rational content;
  for (const auto& [idx, val] : v) {
    content = gcd(content, val);
    if (content == Rational(1)) break;
  }
  if (v.front().second.sign() < 0) content = -content;
  if (content != Rational(1))
    for (auto& [idx, val] : v) val /= content;
  return content;
}

}  // namespace detail

// Incremental echelon basis over the rationals.  Each stored row is a
// primitive integer vector whose leading (smallest-index) entry is its
// pivot; no two rows share a pivot.
class EchelonSpan {
 public:
  // Reduces v against the current rows and returns the residue (empty iff v
  // lies in the current span).  When `used` is non-null it receives, per
  // pivot, the rational multiple of that row subtracted from v.
  SparseVec reduce(SparseVec v, std::map<std::uint32_t, Rational>* used = nullptr) const {
    std::size_t k = 0;
    while (k < v.size()) {
      const std::uint32_t idx = v[k].first;
      auto it = rows_.find(idx);
      if (it == rows_.end()) {
        // No pivot here; this coordinate is settled (rows only ever add
        // entries with index >= their pivot, which is > idx from now on).
        ++k;
        continue;
      }
      const Rational lambda = v[k].second / it->second.front().second;
      if (used) (*used)[idx] += lambda;
      v = detail::sparse_add_scaled(v, -lambda, it->second);
    }
    return v;
  }

  // Inserts a vector; returns true if it enlarged the span.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    detail::make_primitive(v);
    const std::uint32_t pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  friend class SpanBasis;
  std::map<std::uint32_t, SparseVec> rows_;
};

// Dimension of the rational span of the family.
inline std::size_t rank_of_family(const std::vector<ExactMatrix>& mats) {
  EchelonSpan span;
  for (const auto& m : mats) span.insert(flatten_matrix(m));
  return span.rank();
}

struct SolveResult {
  bool in_span = false;
  std::vector<Rational> coeffs;  // empty unless in_span
};

// Span membership with coefficient recovery against a fixed independent
// basis.  Construction echelonizes once; each solve is one reduction.
class SpanBasis {
 public:
  explicit SpanBasis(const std::vector<ExactMatrix>& basis) : size_(basis.size()) {
    for (std::size_t i = 0; i < size_; ++i) {
      std::map<std::uint32_t, Rational> used;
      SparseVec v = span_.reduce(flatten_matrix(basis[i]), &used);
      if (v.empty())
        throw std::invalid_argument("SpanBasis: basis is linearly dependent");
      // Expansion of the new row over the input basis: the reduced vector is
      // basis_i minus the used multiples of earlier rows, then rescaled by
      // 1/content to make it primitive.
      std::vector<Rational> expansion(size_);
      expansion[i] = Rational(1);
      for (const auto& [pivot, lambda] : used) {
        const auto& row_exp = expansions_.at(pivot);
        for (std::size_t j = 0; j < size_; ++j)
          if (!row_exp[j].is_zero()) expansion[j] -= lambda * row_exp[j];
      }
      const Rational content = detail::make_primitive(v);
      for (auto& c : expansion)
        if (!c.is_zero()) c /= content;
      const std::uint32_t pivot = v.front().first;
      expansions_.emplace(pivot, std::move(expansion));
      span_.rows_.emplace(pivot, std::move(v));
    }
  }

  std::size_t size() const { return size_; }

  // If target = sum(coeffs[i] * basis[i]) has a solution, returns it.
  SolveResult solve(const ExactMatrix& target) const {
    std::map<std::uint32_t, Rational> used;
    const SparseVec residue = span_.reduce(flatten_matrix(target), &used);
    SolveResult res;
    if (!residue.empty()) return res;
    res.in_span = true;
    res.coeffs.assign(size_, Rational());
    for (const auto& [pivot, lambda] : used) {
      const auto& row_exp = expansions_.at(pivot);
      for (std::size_t j = 0; j < size_; ++j)
        if (!row_exp[j].is_zero()) res.coeffs[j] += lambda * row_exp[j];
    }
    return res;
  }

 private:
  EchelonSpan span_;
  std::size_t size_;
  std::map<std::uint32_t, std::vector<Rational>> expansions_;
};

}  // namespace cliffverify

#endif  // CLIFFVERIFY_LINEAR_SPAN_HPP
