#ifndef CLIFFVERIFY_COMPLEX_VIEW_HPP
#define CLIFFVERIFY_COMPLEX_VIEW_HPP

/*
 * Complex rendering of real forms over 32 covectors.
 *
 * Real covectors pair up as dz_a = dx_a + i dx_{16+a} and
 * dzbar_a = dx_a - i dx_{16+a} for a in [0, 16).  A complex blade is a
 * pair of 16-bit index sets in the canonical orientation "dz factors
 * ascending, then dzbar factors ascending".  The translation in both
 * directions is exact, and round-trips to the identity.
 */

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "cliffverify/rational.hpp"
#include "cliffverify/sparse_form.hpp"

namespace cliffverify {

struct ComplexBlade {
  std::uint16_t dz = 0;
  std::uint16_t dzbar = 0;
  friend bool operator<(const ComplexBlade& a, const ComplexBlade& b) {
    return a.dz != b.dz ? a.dz < b.dz : a.dzbar < b.dzbar;
  }
  friend bool operator==(const ComplexBlade& a, const ComplexBlade& b) {
    return a.dz == b.dz && a.dzbar == b.dzbar;
  }
};

class ComplexView {
 public:
  using TermMap = std::map<ComplexBlade, GaussianRational>;

  explicit ComplexView(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  GaussianRational coeff(ComplexBlade b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? GaussianRational() : it->second;
  }
  GaussianRational coeff(std::uint16_t dz, std::uint16_t dzbar) const {
    return coeff(ComplexBlade{dz, dzbar});
  }

  void add_term(ComplexBlade b, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (std::popcount(b.dz) + std::popcount(b.dzbar) != degree_)
      throw std::invalid_argument("ComplexView: blade degree mismatch");
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // True when every term has exactly p dz factors and q dzbar factors.
  bool is_pure(int p, int q) const {
    for (const auto& [b, c] : terms_)
      if (std::popcount(b.dz) != p || std::popcount(b.dzbar) != q) return false;
    return true;
  }

  friend bool operator==(const ComplexView& a, const ComplexView& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ComplexView& a, const ComplexView& b) {
    return !(a == b);
  }

 private:
  int degree_;
  TermMap terms_;
};

namespace detail {

// Sign of appending one factor to a canonically ordered complex blade and
// re-sorting it into canonical position; 0 when the factor repeats.
inline int complex_append_sign(const ComplexBlade& b, bool is_dz, int index) {
  const std::uint16_t bit = static_cast<std::uint16_t>(1u << index);
  if (is_dz) {
    if (b.dz & bit) return 0;
    const int moves =
        std::popcount(static_cast<unsigned>(b.dz) >> (index + 1)) +
        std::popcount(static_cast<unsigned>(b.dzbar));
    return (moves & 1) ? -1 : 1;
  }
  if (b.dzbar & bit) return 0;
  const int moves = std::popcount(static_cast<unsigned>(b.dzbar) >> (index + 1));
  return (moves & 1) ? -1 : 1;
}

}  // namespace detail

// Expands each real covector into its dz/dzbar components:
// dx_a = (dz_a + dzbar_a) / 2,  dx_{16+a} = -i/2 (dz_a - dzbar_a).
inline ComplexView to_complex_view(const SparseForm& f) {
  ComplexView out(f.degree());
  const GaussianRational half(Rational(1, 2));
  const GaussianRational minus_half_i = GaussianRational(Rational(), Rational(-1, 2));
  for (const auto& [mask, coeff] : f.terms()) {
    // Partial products over the processed factors, canonically ordered.
    std::map<ComplexBlade, GaussianRational> partial;
    partial[ComplexBlade{}] = coeff;
    Blade rest = mask;
    while (rest) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      const bool imaginary_half = a >= 16;
      const int index = imaginary_half ? a - 16 : a;
      std::map<ComplexBlade, GaussianRational> next;
      for (const auto& [b, c] : partial) {
        for (const bool pick_dz : {true, false}) {
          const int s = detail::complex_append_sign(b, pick_dz, index);
          if (s == 0) continue;
          GaussianRational v = imaginary_half
              ? c * (pick_dz ? minus_half_i : -minus_half_i)
              : c * half;
          if (s < 0) v = -v;
          ComplexBlade nb = b;
          if (pick_dz) nb.dz |= static_cast<std::uint16_t>(1u << index);
          else nb.dzbar |= static_cast<std::uint16_t>(1u << index);
          auto [it, inserted] = next.try_emplace(nb, std::move(v));
          if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      }
      partial = std::move(next);
    }
    for (const auto& [b, c] : partial) out.add_term(b, c);
  }
  return out;
}

// Inverse translation: dz_a = dx_a + i dx_{16+a}, dzbar_a = dx_a - i dx_{16+a}.
inline SparseForm from_complex_view(const ComplexView& v) {
  SparseForm out(v.degree());
  const GaussianRational plus_i = GaussianRational::i();
  for (const auto& [cb, coeff] : v.terms()) {
    // Factor list in canonical order: dz ascending, then dzbar ascending.
    std::map<Blade, GaussianRational> partial;
    partial[0] = coeff;
    const auto append_factor = [&](int index, bool conjugated) {
      std::map<Blade, GaussianRational> next;
      for (const auto& [b, c] : partial) {
        for (const bool pick_imaginary : {false, true}) {
          const int real_index = pick_imaginary ? index + 16 : index;
          const Blade bit = Blade(1) << real_index;
          if (b & bit) continue;
          const int moves = std::popcount(std::uint64_t(b) >> (real_index + 1));
          GaussianRational v = c;
          if (pick_imaginary) v = conjugated ? v * (-plus_i) : v * plus_i;
          if (moves & 1) v = -v;
          auto [it, inserted] = next.try_emplace(b | bit, std::move(v));
          if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      }
      partial = std::move(next);
    };
    for (int index = 0; index < 16; ++index)
      if (cb.dz & (1u << index)) append_factor(index, false);
    for (int index = 0; index < 16; ++index)
      if (cb.dzbar & (1u << index)) append_factor(index, true);
    for (const auto& [b, c] : partial) out.add_term(b, c);
  }
  return out;
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_COMPLEX_VIEW_HPP
