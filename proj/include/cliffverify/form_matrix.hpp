#ifndef CLIFFVERIFY_FORM_MATRIX_HPP
#define CLIFFVERIFY_FORM_MATRIX_HPP

/*
 * Skew matrices of 2-forms and the quadratic / quartic invariants built
 * from them.
 *
 * tau2 sums the squares of the upper-triangle entries.  tau4 sums, over
 * all index quadruples, the square of the 4x4 Pfaffian-style combination
 * p(ab)^p(cd) - p(ac)^p(bd) + p(ad)^p(bc).  tau4_minor_oracle recomputes
 * the same invariant along an independent route: the permutation expansion
 * of each 4x4 principal minor determinant (fixed-point permutations drop
 * out because the diagonal vanishes).  The two routes are kept separate on
 * purpose; agreement is one of the checked invariants.
 *
 * The quadruple loops accept a worker count; partial sums are accumulated
 * per worker and merged, which changes nothing in exact arithmetic, so the
 * result is identical for any worker count.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cliffverify/sparse_form.hpp"

namespace cliffverify {

class FormMatrix {
 public:
  FormMatrix(std::size_t n, int entry_degree = 2)
      : n_(n), degree_(entry_degree),
        entries_(n * n, SparseForm(entry_degree)) {}

  std::size_t size() const { return n_; }
  int entry_degree() const { return degree_; }

  const SparseForm& at(std::size_t r, std::size_t c) const {
    check(r); check(c);
    return entries_[r * n_ + c];
  }

  // Stores f at (r, c) and -f at (c, r); the diagonal must stay zero.
  void set(std::size_t r, std::size_t c, const SparseForm& f) {
    check(r); check(c);
    if (f.degree() != degree_)
      throw std::invalid_argument("FormMatrix: entry degree mismatch");
    if (r == c) {
      if (!f.is_zero())
        throw std::invalid_argument("FormMatrix: nonzero diagonal entry");
      return;
    }
    entries_[r * n_ + c] = f;
    entries_[c * n_ + r] = -f;
  }

 private:
  void check(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("FormMatrix: index out of range");
  }
  std::size_t n_;
  int degree_;
  std::vector<SparseForm> entries_;
};

namespace detail {

// Runs fn(task_index, local_accumulator) for task_index in [0, count) over
// the given number of workers, then merges the per-worker accumulators.
template <typename Fn>
inline FormAccumulator strided_accumulate(std::size_t count, unsigned workers,
                                          const Fn& fn) {
  if (workers == 0) workers = 1;
  if (workers == 1 || count <= 1) {
    FormAccumulator acc;
    for (std::size_t i = 0; i < count; ++i) fn(i, acc);
    return acc;
  }
  std::vector<FormAccumulator> parts(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += workers) fn(i, parts[w]);
    });
  }
  for (auto& t : pool) t.join();
  FormAccumulator acc = std::move(parts[0]);
  for (unsigned w = 1; w < workers; ++w)
    for (const auto& [b, c] : parts[w]) {
      auto [it, inserted] = acc.try_emplace(b, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  return acc;
}

inline std::vector<std::array<std::size_t, 4>> index_quadruples(std::size_t n) {
  std::vector<std::array<std::size_t, 4>> out;
  for (std::size_t a = 0; a + 3 < n; ++a)
    for (std::size_t b = a + 1; b + 2 < n; ++b)
      for (std::size_t c = b + 1; c + 1 < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) out.push_back({a, b, c, d});
  return out;
}

// Integer-lane counterpart of strided_accumulate.
template <typename Fn>
inline IntAccumulator int_strided_accumulate(std::size_t count, unsigned workers,
                                             const Fn& fn) {
  if (workers == 0) workers = 1;
  if (workers == 1 || count <= 1) {
    IntAccumulator acc;
    for (std::size_t i = 0; i < count; ++i) fn(i, acc);
    return acc;
  }
  std::vector<IntAccumulator> parts(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += workers) fn(i, parts[w]);
    });
  }
  for (auto& t : pool) t.join();
  IntAccumulator acc = std::move(parts[0]);
  for (unsigned w = 1; w < workers; ++w)
    for (const auto& [b, v] : parts[w]) acc[b] += v;
  return acc;
}

// Common denominator of every coefficient in the matrix, or nullopt when
// an entry is not real or the lcm leaves the integer lane's range.
inline std::optional<BigInt> matrix_common_denominator(const FormMatrix& m) {
  BigInt den(1);
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (const auto& [blade, c] : m.at(a, b).terms())
        if (!fold_denominator(c, den)) return std::nullopt;
  return den;
}

// Upper-triangle entries of m scaled to machine integers, plus the largest
// coefficient magnitude and term count over all entries.  Row-major at
// a * n + b for a < b; other cells stay empty (callers use skewness).
struct IntMatrix {
  std::vector<IntForm> upper;
  long long max_abs = 0;
  unsigned long long max_terms = 0;
};

inline std::optional<IntMatrix> int_matrix(const FormMatrix& m, const BigInt& den) {
  const std::size_t n = m.size();
  IntMatrix out;
  out.upper.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto f = int_terms(m.at(a, b), den);
      if (!f) return std::nullopt;
      out.max_abs = std::max(out.max_abs, f->max_abs);
      out.max_terms = std::max(out.max_terms,
                               static_cast<unsigned long long>(f->terms.size()));
      out.upper[a * n + b] = *std::move(f);
    }
  // Keeps all downstream product-count arithmetic inside 64 bits.
  if (n > 64 || out.max_terms > (1ull << 20)) return std::nullopt;
  return out;
}

}  // namespace detail

// Sum of squared entries over the upper triangle: a degree-4 form.
inline SparseForm tau2(const FormMatrix& m) {
  FormAccumulator acc;
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      wedge_square_accumulate(acc, m.at(a, b));
  return from_accumulator(2 * m.entry_degree(), acc);
}

namespace detail {

inline SparseForm tau4_generic(const FormMatrix& m, unsigned workers) {
  const auto quads = index_quadruples(m.size());
  const FormAccumulator acc = strided_accumulate(
      quads.size(), workers, [&](std::size_t qi, FormAccumulator& local) {
        const auto& [a, b, c, d] = quads[qi];
        FormAccumulator half;
        wedge_accumulate(half, m.at(a, b), m.at(c, d), +1);
        wedge_accumulate(half, m.at(a, c), m.at(b, d), -1);
        wedge_accumulate(half, m.at(a, d), m.at(b, c), +1);
        const SparseForm s = from_accumulator(2 * m.entry_degree(), half);
        wedge_square_accumulate(local, s);
      });
  return from_accumulator(4 * m.entry_degree(), acc);
}

// Integer lane for tau4.  Phase one (serial, cheap) builds the per-quadruple
// Pfaffian combinations on machine integers and certifies the magnitude
// budget of everything phase two will add; phase two (optionally threaded)
// squares them.  Falls back by returning nullopt.
inline std::optional<SparseForm> tau4_int_lane(const FormMatrix& m, unsigned workers) {
  const auto den = matrix_common_denominator(m);
  if (!den) return std::nullopt;
  const auto im = int_matrix(m, *den);
  if (!im) return std::nullopt;
  const std::size_t n = m.size();
  const auto quads = index_quadruples(n);

  // Stage budget for building the combinations: three entry-by-entry
  // wedges per quadruple.
  if (!product_magnitude(3 * quads.size() * im->max_terms * im->max_terms,
                         im->max_abs, im->max_abs))
    return std::nullopt;

  std::vector<IntForm> combos(quads.size());
  unsigned __int128 ledger = 0;
  for (std::size_t qi = 0; qi < quads.size(); ++qi) {
    const auto& [a, b, c, d] = quads[qi];
    IntAccumulator half;
    int_wedge_accumulate(half, im->upper[a * n + b], im->upper[c * n + d], +1);
    int_wedge_accumulate(half, im->upper[a * n + c], im->upper[b * n + d], -1);
    int_wedge_accumulate(half, im->upper[a * n + d], im->upper[b * n + c], +1);
    combos[qi] = int_form_of(half);
    // Budget of the squaring stage: n_terms^2 covers twice the ordered
    // pairs, absorbing the doubling of each product.
    const auto count = static_cast<unsigned long long>(combos[qi].terms.size());
    if (count > (1ull << 31)) return std::nullopt;
    const auto mag = product_magnitude(count * count, combos[qi].max_abs,
                                       combos[qi].max_abs);
    if (!mag) return std::nullopt;
    ledger += *mag;
    if (ledger > int_lane_budget()) return std::nullopt;
  }

  const IntAccumulator acc = int_strided_accumulate(
      quads.size(), workers, [&](std::size_t qi, IntAccumulator& local) {
        int_wedge_square_accumulate(local, combos[qi]);
      });
  const Rational d4(*den * *den * *den * *den);
  return from_int_accumulator(4 * m.entry_degree(), acc, d4);
}

inline SparseForm tau4_minor_oracle_generic(const FormMatrix& m, unsigned workers) {
  // All permutations of {0,1,2,3} with their signs, fixed once up front.
  std::array<std::size_t, 4> perm = {0, 1, 2, 3};
  std::vector<std::pair<std::array<std::size_t, 4>, int>> perms;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    perms.push_back({perm, (inversions & 1) ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto quads = index_quadruples(m.size());
  const FormAccumulator acc = strided_accumulate(
      quads.size(), workers, [&](std::size_t qi, FormAccumulator& local) {
        const auto& q = quads[qi];
        for (const auto& [p, sign] : perms) {
          bool has_fixed_point = false;
          for (std::size_t t = 0; t < 4; ++t)
            if (p[t] == t) { has_fixed_point = true; break; }
          if (has_fixed_point) continue;
          // sign * M[0][p0] ^ M[1][p1] ^ M[2][p2] ^ M[3][p3], associated
          // as (left pair) ^ (right pair) so the largest product streams
          // straight into the accumulator without an intermediate form.
          FormAccumulator pair_acc;
          wedge_accumulate(pair_acc, m.at(q[0], q[p[0]]), m.at(q[1], q[p[1]]));
          const SparseForm left =
              from_accumulator(2 * m.entry_degree(), pair_acc);
          if (left.is_zero()) continue;
          pair_acc.clear();
          wedge_accumulate(pair_acc, m.at(q[2], q[p[2]]), m.at(q[3], q[p[3]]));
          const SparseForm right =
              from_accumulator(2 * m.entry_degree(), pair_acc);
          if (right.is_zero()) continue;
          wedge_accumulate(local, left, right, sign);
        }
      });
  return from_accumulator(4 * m.entry_degree(), acc);
}

// Integer lane for the minor-determinant route, mirroring the generic body:
// phase one builds each derangement's (left pair, right pair) on machine
// integers with the budget ledger; phase two streams the outer products.
inline std::optional<SparseForm> tau4_minor_oracle_int_lane(const FormMatrix& m,
                                                            unsigned workers) {
  const auto den = matrix_common_denominator(m);
  if (!den) return std::nullopt;
  const auto im = int_matrix(m, *den);
  if (!im) return std::nullopt;
  const std::size_t n = m.size();
  const auto quads = index_quadruples(n);

  std::array<std::size_t, 4> perm = {0, 1, 2, 3};
  std::vector<std::pair<std::array<std::size_t, 4>, int>> perms;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    bool has_fixed_point = false;
    for (std::size_t t = 0; t < 4; ++t)
      if (perm[t] == t) { has_fixed_point = true; break; }
    if (!has_fixed_point)
      perms.push_back({perm, (inversions & 1) ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!product_magnitude(2 * perms.size() * quads.size() * im->max_terms * im->max_terms,
                         im->max_abs, im->max_abs))
    return std::nullopt;

  // The signed upper-triangle entry at row q[t], column q[p[t]]: skewness
  // flips the sign when the permutation sends t below itself.
  const auto entry = [&](const std::array<std::size_t, 4>& q,
                         const std::array<std::size_t, 4>& p, std::size_t t,
                         int& sign) -> const IntForm& {
    const std::size_t r = q[t], c = q[p[t]];
    if (r < c) return im->upper[r * n + c];
    sign = -sign;
    return im->upper[c * n + r];
  };

  struct Job {
    IntForm left, right;
    int sign;
  };
  std::vector<Job> jobs;
  jobs.reserve(quads.size() * perms.size());
  unsigned __int128 ledger = 0;
  for (const auto& q : quads) {
    for (const auto& [p, perm_sign] : perms) {
      int sign = perm_sign;
      IntAccumulator pair_acc;
      int_wedge_accumulate(pair_acc, entry(q, p, 0, sign), entry(q, p, 1, sign));
      IntForm left = int_form_of(pair_acc);
      if (left.terms.empty()) continue;
      pair_acc.clear();
      int_wedge_accumulate(pair_acc, entry(q, p, 2, sign), entry(q, p, 3, sign));
      IntForm right = int_form_of(pair_acc);
      if (right.terms.empty()) continue;
      if (left.terms.size() > (1ull << 31) || right.terms.size() > (1ull << 31))
        return std::nullopt;
      const auto mag = product_magnitude(
          static_cast<unsigned long long>(left.terms.size()) * right.terms.size(),
          left.max_abs, right.max_abs);
      if (!mag) return std::nullopt;
      ledger += *mag;
      if (ledger > int_lane_budget()) return std::nullopt;
      jobs.push_back({std::move(left), std::move(right), sign});
    }
  }

  const IntAccumulator acc = int_strided_accumulate(
      jobs.size(), workers, [&](std::size_t ji, IntAccumulator& local) {
        int_wedge_accumulate(local, jobs[ji].left, jobs[ji].right, jobs[ji].sign);
      });
  const Rational d4(*den * *den * *den * *den);
  return from_int_accumulator(4 * m.entry_degree(), acc, d4);
}

}  // namespace detail

// Degree-8 quartic invariant; the zero form when the matrix is smaller
// than 4x4.
inline SparseForm tau4(const FormMatrix& m, unsigned workers = 1) {
  if (auto fast = detail::tau4_int_lane(m, workers)) return *std::move(fast);
  return detail::tau4_generic(m, workers);
}

// Independent recomputation of tau4: per quadruple, expand the determinant
// of the 4x4 minor as a signed sum over the permutations of four symbols.
// Entries commute (even degree), and permutations with a fixed point hit
// the zero diagonal, leaving the nine derangements.
inline SparseForm tau4_minor_oracle(const FormMatrix& m, unsigned workers = 1) {
  if (auto fast = detail::tau4_minor_oracle_int_lane(m, workers))
    return *std::move(fast);
  return detail::tau4_minor_oracle_generic(m, workers);
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_FORM_MATRIX_HPP
