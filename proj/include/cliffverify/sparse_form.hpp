#ifndef CLIFFVERIFY_SPARSE_FORM_HPP
#define CLIFFVERIFY_SPARSE_FORM_HPP

/*
 * Sparse exact exterior algebra over up to 32 covectors.
 *
 * A blade is a 32-bit index set in ascending canonical orientation; a form
 * is a map blade -> coefficient holding no zeros.  The wedge sign between
 * disjoint blades counts inversions with shifted popcounts.  This is the
 * performance-critical kernel: the degree-8 invariants downstream touch
 * tens of millions of intermediate products.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/gaussian_rational.hpp"

namespace cliffverify {

using Blade = std::uint32_t;

inline int blade_degree(Blade b) { return std::popcount(b); }

// Number of transpositions needed to merge two disjoint ascending blades:
// for each index of b, the indices of a above it are inversions.
inline int blade_inversions(Blade a, Blade b) {
  int inv = 0;
  while (b) {
    const int bit = std::countr_zero(b);
    // 64-bit shift: bit + 1 may be 32, which would overflow a 32-bit shift.
    inv += std::popcount(std::uint64_t(a) >> (bit + 1));
    b &= b - 1;
  }
  return inv;
}

// +1 / -1 for the oriented product of disjoint blades, 0 on overlap.
inline int wedge_sign(Blade a, Blade b) {
  if ((a & b) != 0) return 0;
  return (blade_inversions(a, b) & 1) ? -1 : 1;
}

class SparseForm {
 public:
  using TermMap = std::map<Blade, GaussianRational>;

  explicit SparseForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > 32)
      throw std::invalid_argument("SparseForm: degree out of range");
  }

  static SparseForm covector(std::size_t index) {
    SparseForm f(1);
    f.terms_[Blade(1) << index] = GaussianRational(1);
    return f;
  }

  // Monomial c * dx_{i1} ^ ... ^ dx_{ik} with indices as given (possibly
  // unordered; the orientation sign is folded into the coefficient).
  static SparseForm monomial(std::initializer_list<std::size_t> indices,
                             GaussianRational c = GaussianRational(1)) {
    SparseForm f(static_cast<int>(indices.size()));
    Blade mask = 0;
    int sign = 1;
    for (std::size_t idx : indices) {
      const Blade bit = Blade(1) << idx;
      if (mask & bit) return SparseForm(static_cast<int>(indices.size()));  // repeated: zero
      const int s = wedge_sign(mask, bit);
      sign *= s;
      mask |= bit;
    }
    if (sign < 0) c = -c;
    if (!c.is_zero()) f.terms_[mask] = std::move(c);
    return f;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  GaussianRational coeff(Blade b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void add_term(Blade b, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (blade_degree(b) != degree_)
      throw std::invalid_argument("SparseForm: blade degree mismatch");
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparseForm& operator+=(const SparseForm& o) {
    check_degree(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  SparseForm& operator-=(const SparseForm& o) {
    check_degree(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  friend SparseForm operator+(SparseForm a, const SparseForm& b) { a += b; return a; }
  friend SparseForm operator-(SparseForm a, const SparseForm& b) { a -= b; return a; }
  SparseForm operator-() const { return scaled(GaussianRational(-1)); }

  SparseForm scaled(const GaussianRational& s) const {
    SparseForm f(degree_);
    if (s.is_zero()) return f;
    for (const auto& [b, c] : terms_) f.terms_.emplace(b, c * s);
    return f;
  }

  friend bool operator==(const SparseForm& a, const SparseForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparseForm& a, const SparseForm& b) { return !(a == b); }

  void check_degree(const SparseForm& o) const {
    if (degree_ != o.degree_)
      throw std::invalid_argument("SparseForm: degree mismatch");
  }

 private:
  int degree_;
  TermMap terms_;
};

// Low-level accumulation target for hot loops: unordered blade -> coeff.
using FormAccumulator = std::unordered_map<Blade, GaussianRational>;

// dest += sign * f ^ g, accumulating raw products.
inline void wedge_accumulate(FormAccumulator& dest, const SparseForm& f,
                             const SparseForm& g, int outer_sign = 1) {
  for (const auto& [bf, cf] : f.terms())
    for (const auto& [bg, cg] : g.terms()) {
      const int s = wedge_sign(bf, bg);
      if (s == 0) continue;
      GaussianRational v = cf * cg;
      if (s * outer_sign < 0) v = -v;
      auto [it, inserted] = dest.try_emplace(bf | bg, std::move(v));
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) dest.erase(it);
      }
    }
}

// dest += sign * f ^ f for a form of even degree.  Distinct ordered pairs
// contribute twice (even-degree monomials commute under wedge) and the
// diagonal vanishes (every blade repeats an index against itself), so the
// double loop over ordered pairs halves the work of wedge_accumulate(f, f).
inline void wedge_square_accumulate(FormAccumulator& dest, const SparseForm& f,
                                    int outer_sign = 1) {
  if (f.degree() % 2 != 0)
    throw std::invalid_argument("wedge_square_accumulate: odd degree");
  const auto& terms = f.terms();
  for (auto i = terms.begin(); i != terms.end(); ++i) {
    auto j = i;
    for (++j; j != terms.end(); ++j) {
      const int s = wedge_sign(i->first, j->first);
      if (s == 0) continue;
      GaussianRational v = i->second * j->second;
      v += v;
      if (s * outer_sign < 0) v = -v;
      auto [it, inserted] = dest.try_emplace(i->first | j->first, std::move(v));
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) dest.erase(it);
      }
    }
  }
}

inline SparseForm from_accumulator(int degree, const FormAccumulator& acc) {
  SparseForm f(degree);
  for (const auto& [b, c] : acc) f.add_term(b, c);
  return f;
}

namespace detail {

/*
 * Machine-integer fast lane.
 *
 * The hot multilinear kernels (derivations and the quartic traces) spend
 * nearly all of their time in arbitrary-precision coefficient arithmetic,
 * yet on the workloads this library targets every coefficient is a real
 * rational with a tiny common denominator.  The lane clears one global
 * denominator, runs the identical product/accumulate loops on int64, and
 * divides the denominator back out at the end.  It is exact: a lane run is
 * attempted only after a conservative a-priori bound proves that the sum of
 * the absolute values of every product it will ever add stays below 2^62,
 * so no intermediate signed value can overflow.  When the bound (or the
 * realness/denominator precondition) fails, callers fall back to the
 * generic arbitrary-precision path, which computes the same values.
 */

struct IntTerm {
  Blade blade;
  long long coeff;
};

struct IntForm {
  std::vector<IntTerm> terms;
  long long max_abs = 0;
};

using IntAccumulator = std::unordered_map<Blade, long long>;

// Every individual product magnitude, and every accumulated cell, must stay
// below this; int64 then has a 2x safety margin.
inline constexpr unsigned __int128 int_lane_budget() {
  return static_cast<unsigned __int128>(1) << 62;
}

// Largest global denominator the lane will clear.
inline const BigInt& int_lane_denominator_cap() {
  static const BigInt cap = BigInt(1) << 20;
  return cap;
}

// Folds the denominator of c into l; false when c is not real or the
// running lcm leaves the lane's range.
inline bool fold_denominator(const GaussianRational& c, BigInt& l) {
  if (!c.is_real()) return false;
  l = boost::multiprecision::lcm(l, c.re().denominator());
  return l <= int_lane_denominator_cap();
}

// f scaled by `scale` (a multiple of every denominator in f), as machine
// integers; nullopt when a scaled coefficient is too large for the lane.
inline std::optional<IntForm> int_terms(const SparseForm& f, const BigInt& scale) {
  static const BigInt value_cap = BigInt(1) << 62;
  IntForm out;
  out.terms.reserve(f.term_count());
  for (const auto& [b, c] : f.terms()) {
    const BigInt scaled = c.re().numerator() * (scale / c.re().denominator());
    if (scaled >= value_cap || scaled <= -value_cap) return std::nullopt;
    const long long v = scaled.convert_to<long long>();
    out.terms.push_back({b, v});
    out.max_abs = std::max(out.max_abs, v < 0 ? -v : v);
  }
  return out;
}

// Conservative magnitude of `count` products each bounded by max_a * max_b,
// or nullopt when that cannot be certified below the lane budget.
inline std::optional<unsigned __int128> product_magnitude(unsigned long long count,
                                                          long long max_a,
                                                          long long max_b) {
  const auto a = static_cast<unsigned __int128>(max_a);
  const auto b = static_cast<unsigned __int128>(max_b);
  if (count == 0 || a == 0 || b == 0) return static_cast<unsigned __int128>(0);
  if (a > int_lane_budget() / b) return std::nullopt;
  const unsigned __int128 ab = a * b;
  if (count > int_lane_budget() / ab) return std::nullopt;
  return count * ab;
}

// dest += sign * f ^ g on machine integers.  Caller is responsible for
// having certified the magnitude budget beforehand.
inline void int_wedge_accumulate(IntAccumulator& dest, const IntForm& f,
                                 const IntForm& g, int outer_sign = 1) {
  for (const IntTerm& tf : f.terms)
    for (const IntTerm& tg : g.terms) {
      const int s = wedge_sign(tf.blade, tg.blade);
      if (s == 0) continue;
      const long long v = tf.coeff * tg.coeff;
      dest[tf.blade | tg.blade] += s * outer_sign < 0 ? -v : v;
    }
}

// dest += sign * f ^ f for even degree, over distinct ordered pairs
// (mirrors wedge_square_accumulate).
inline void int_wedge_square_accumulate(IntAccumulator& dest, const IntForm& f,
                                        int outer_sign = 1) {
  const std::size_t n = f.terms.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int s = wedge_sign(f.terms[i].blade, f.terms[j].blade);
      if (s == 0) continue;
      const long long v = 2 * (f.terms[i].coeff * f.terms[j].coeff);
      dest[f.terms[i].blade | f.terms[j].blade] += s * outer_sign < 0 ? -v : v;
    }
}

inline IntForm int_form_of(const IntAccumulator& acc) {
  IntForm out;
  out.terms.reserve(acc.size());
  for (const auto& [b, v] : acc) {
    if (v == 0) continue;
    out.terms.push_back({b, v});
    out.max_abs = std::max(out.max_abs, v < 0 ? -v : v);
  }
  return out;
}

// Integer accumulator back to an exact form, dividing out `denominator`.
inline SparseForm from_int_accumulator(int degree, const IntAccumulator& acc,
                                       const Rational& denominator) {
  SparseForm f(degree);
  for (const auto& [b, v] : acc) {
    if (v == 0) continue;
    f.add_term(b, GaussianRational(Rational(BigInt(v)) / denominator));
  }
  return f;
}

}  // namespace detail

inline SparseForm wedge(const SparseForm& f, const SparseForm& g) {
  if (f.degree() + g.degree() > 32)
    throw std::invalid_argument("wedge: degree overflow");
  FormAccumulator acc;
  wedge_accumulate(acc, f, g);
  return from_accumulator(f.degree() + g.degree(), acc);
}

// Drops every term whose blade meets the killed index set.
inline SparseForm restrict_form(const SparseForm& f, Blade killed) {
  SparseForm r(f.degree());
  for (const auto& [b, c] : f.terms())
    if ((b & killed) == 0) r.add_term(b, c);
  return r;
}

// Kahler 2-form of a skew matrix: coefficient of dx_a ^ dx_b (a < b) is
// J[a][b], i.e. the pairing (X, Y) -> <X, J Y>.  The orientation is fixed
// by the generator tables this library reproduces.
inline SparseForm kahler_form_of(const ExactMatrix& j) {
  if (!j.is_skew()) throw std::invalid_argument("kahler_form_of: matrix is not skew");
  SparseForm f(2);
  const std::size_t n = j.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!j.at(a, b).is_zero())
        f.add_term((Blade(1) << a) | (Blade(1) << b), j.at(a, b));
  return f;
}

namespace detail {

inline SparseForm lie_derivation_generic(const ExactMatrix& a_mat, const SparseForm& f) {
  const std::size_t n = a_mat.dim();
  // Hoist the sparse rows of the matrix out of the term loop: the
  // matrices used here have a handful of nonzeros per row, while forms
  // can carry hundreds of thousands of terms.
  std::vector<std::vector<std::pair<Blade, const GaussianRational*>>> rows(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!a_mat.at(a, b).is_zero())
        rows[a].emplace_back(Blade(1) << b, &a_mat.at(a, b));
  FormAccumulator acc;
  acc.reserve(2 * f.term_count());
  for (const auto& [mask, c] : f.terms()) {
    Blade rest = mask;
    while (rest) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      const Blade without = mask ^ (Blade(1) << a);
      const int remove_sign = (std::popcount(mask & ((Blade(1) << a) - 1)) & 1) ? -1 : 1;
      for (const auto& [bit, entry] : rows[static_cast<std::size_t>(a)]) {
        if (without & bit) continue;  // repeated covector
        const int insert_sign = (std::popcount(without & (bit - 1)) & 1) ? -1 : 1;
        GaussianRational v = c * *entry;
        if (remove_sign * insert_sign > 0) v = -v;  // overall minus sign
        auto [it, inserted] = acc.try_emplace(without | bit, std::move(v));
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
  }
  return from_accumulator(f.degree(), acc);
}

inline std::optional<SparseForm> lie_derivation_int_lane(const ExactMatrix& a_mat,
                                                         const SparseForm& f) {
  const std::size_t n = a_mat.dim();
  BigInt form_den(1), matrix_den(1);
  for (const auto& [b, c] : f.terms())
    if (!fold_denominator(c, form_den)) return std::nullopt;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!a_mat.at(a, b).is_zero() && !fold_denominator(a_mat.at(a, b), matrix_den))
        return std::nullopt;

  const auto form = int_terms(f, form_den);
  if (!form) return std::nullopt;
  std::vector<std::vector<IntTerm>> rows(n);
  long long max_entry = 0;
  std::size_t max_row = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const GaussianRational& e = a_mat.at(a, b);
      if (e.is_zero()) continue;
      const BigInt scaled = e.re().numerator() * (matrix_den / e.re().denominator());
      if (scaled >= int_lane_denominator_cap() * int_lane_denominator_cap() ||
          scaled <= -(int_lane_denominator_cap() * int_lane_denominator_cap()))
        return std::nullopt;
      const long long v = scaled.convert_to<long long>();
      rows[a].push_back({Blade(1) << b, v});
      max_entry = std::max(max_entry, v < 0 ? -v : v);
    }
    max_row = std::max(max_row, rows[a].size());
  }

  // Every product |c * e| <= max_abs * max_entry, and at most
  // term_count * degree * max_row of them are ever added.
  const unsigned long long count = static_cast<unsigned long long>(f.term_count()) *
                                   static_cast<unsigned long long>(f.degree()) *
                                   static_cast<unsigned long long>(max_row);
  if (!product_magnitude(count, form->max_abs, max_entry)) return std::nullopt;

  IntAccumulator acc;
  acc.reserve(2 * f.term_count());
  for (const IntTerm& t : form->terms) {
    Blade rest = t.blade;
    while (rest) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      const Blade without = t.blade ^ (Blade(1) << a);
      const int remove_sign = (std::popcount(t.blade & ((Blade(1) << a) - 1)) & 1) ? -1 : 1;
      for (const IntTerm& e : rows[static_cast<std::size_t>(a)]) {
        if (without & e.blade) continue;  // repeated covector
        const int insert_sign = (std::popcount(without & (e.blade - 1)) & 1) ? -1 : 1;
        const long long v = t.coeff * e.coeff;
        acc[without | e.blade] += remove_sign * insert_sign > 0 ? -v : v;
      }
    }
  }
  return from_int_accumulator(f.degree(), acc, Rational(form_den * matrix_den));
}

}  // namespace detail

// The degree-preserving derivation induced by an endomorphism:
// (A . f)(X_1, ..., X_k) = -sum_t f(X_1, ..., A X_t, ..., X_k).
// On a monomial this replaces dx_a by -sum_b A[a][b] dx_b, one factor at a
// time, with the orientation signs of removing index a and inserting b.
inline SparseForm lie_derivation(const ExactMatrix& a_mat, const SparseForm& f) {
  if (auto fast = detail::lie_derivation_int_lane(a_mat, f)) return *std::move(fast);
  return detail::lie_derivation_generic(a_mat, f);
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_SPARSE_FORM_HPP
