#ifndef CLIFFVERIFY_EXACT_MATRIX_HPP
#define CLIFFVERIFY_EXACT_MATRIX_HPP

/*
 * Dense square matrices over GaussianRational, with a realm tag recording
 * which of the library's ambient pictures a matrix belongs to: the real
 * 16-dimensional one (generators on R^16), the complex 16-dimensional one
 * (their complexifications and the extra complex structures), or the real
 * 32-dimensional one (everything realified).  The tag is bookkeeping for
 * interface contracts; the arithmetic is realm-agnostic.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffverify/gaussian_rational.hpp"

namespace cliffverify {

enum class Realm { real16, real32, complex16, other };

inline std::string realm_name(Realm r) {
  switch (r) {
    case Realm::real16: return "real-16";
    case Realm::real32: return "real-32";
    case Realm::complex16: return "complex-16";
    default: return "other";
  }
}

class ExactMatrix {
 public:
  ExactMatrix() : dim_(0), realm_(Realm::other) {}
  explicit ExactMatrix(std::size_t dim, Realm realm = Realm::other)
      : dim_(dim), e_(dim * dim), realm_(realm) {}

  static ExactMatrix identity(std::size_t dim) {
    ExactMatrix m(dim, infer_realm(dim, /*real=*/true));
    for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = GaussianRational(1);
    return m;
  }

  std::size_t dim() const { return dim_; }
  Realm realm() const { return realm_; }
  void set_realm(Realm r) { realm_ = r; }

  GaussianRational& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  bool is_real() const {
    for (const auto& x : e_)
      if (!x.is_real()) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = r + 1; c < dim_; ++c)
        if (at(r, c) != at(c, r)) return false;
    return true;
  }
  bool is_skew() const {
    for (std::size_t r = 0; r < dim_; ++r) {
      if (!at(r, r).is_zero()) return false;
      for (std::size_t c = r + 1; c < dim_; ++c)
        if (at(r, c) != -at(c, r)) return false;
    }
    return true;
  }

  GaussianRational trace() const {
    GaussianRational t;
    for (std::size_t k = 0; k < dim_; ++k) t += at(k, k);
    return t;
  }

  ExactMatrix transpose() const {
    ExactMatrix m(dim_, realm_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  ExactMatrix conj_transpose() const {
    ExactMatrix m(dim_, realm_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) m.at(c, r) = at(r, c).conj();
    return m;
  }

  ExactMatrix& operator+=(const ExactMatrix& o) {
    check_dim(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  ExactMatrix& operator-=(const ExactMatrix& o) {
    check_dim(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  ExactMatrix operator-() const {
    ExactMatrix m(dim_, realm_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { a += b; return a; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { a -= b; return a; }

  ExactMatrix scaled(const GaussianRational& s) const {
    ExactMatrix m(dim_, Realm::other);
    for (std::size_t k = 0; k < e_.size(); ++k)
      if (!e_[k].is_zero()) m.e_[k] = e_[k] * s;
    m.realm_ = infer_realm(dim_, m.is_real());
    return m;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  static Realm infer_realm(std::size_t dim, bool real) {
    if (dim == 16) return real ? Realm::real16 : Realm::complex16;
    if (dim == 32 && real) return Realm::real32;
    return Realm::other;
  }

  void check_dim(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  }

 private:
  std::size_t dim_;
  std::vector<GaussianRational> e_;
  Realm realm_;
};

inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  a.check_dim(b);
  const std::size_t n = a.dim();
  ExactMatrix m(n, Realm::other);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const GaussianRational& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const GaussianRational& y = b.at(k, c);
        if (y.is_zero()) continue;
        m.at(r, c) += x * y;
      }
    }
  }
  m.set_realm(ExactMatrix::infer_realm(n, m.is_real()));
  return m;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

inline ExactMatrix mat_bracket(const ExactMatrix& a, const ExactMatrix& b) {
  return mat_mul(a, b) - mat_mul(b, a);
}

inline ExactMatrix mat_anticommutator(const ExactMatrix& a, const ExactMatrix& b) {
  return mat_mul(a, b) + mat_mul(b, a);
}

// Hermitian pairing trace(conj-transpose(A) * B) = sum conj(A_rc) * B_rc.
inline GaussianRational herm_inner(const ExactMatrix& a, const ExactMatrix& b) {
  a.check_dim(b);
  GaussianRational t;
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const GaussianRational& x = a.at(r, c);
      if (x.is_zero()) continue;
      const GaussianRational& y = b.at(r, c);
      if (y.is_zero()) continue;
      t += x.conj() * y;
    }
  return t;
}

// Realification: M = A + iB acting on C^n becomes [[A,-B],[B,A]] acting on
// R^{2n}.  Real coordinates 0..n-1 carry the real parts of the complex
// coordinates, n..2n-1 their imaginary parts, so realify(i*Id) is the block
// matrix [[0,-Id],[Id,0]].
inline ExactMatrix realify(const ExactMatrix& m) {
  if (m.realm() == Realm::real32)
    throw std::invalid_argument("realify: input already lives in the real-32 realm");
  const std::size_t n = m.dim();
  ExactMatrix r(2 * n, ExactMatrix::infer_realm(2 * n, /*real=*/true));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const GaussianRational& x = m.at(i, j);
      if (x.is_zero()) continue;
      if (!x.re().is_zero()) {
        r.at(i, j) = GaussianRational(x.re());
        r.at(n + i, n + j) = GaussianRational(x.re());
      }
      if (!x.im().is_zero()) {
        r.at(i, n + j) = GaussianRational(-x.im());
        r.at(n + i, j) = GaussianRational(x.im());
      }
    }
  return r;
}

// [[a, 0], [0, d]] at doubled dimension.
inline ExactMatrix block_diag2(const ExactMatrix& a, const ExactMatrix& d) {
  a.check_dim(d);
  const std::size_t n = a.dim();
  ExactMatrix m(2 * n, Realm::other);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (!a.at(r, c).is_zero()) m.at(r, c) = a.at(r, c);
      if (!d.at(r, c).is_zero()) m.at(n + r, n + c) = d.at(r, c);
    }
  m.set_realm(ExactMatrix::infer_realm(2 * n, m.is_real()));
  return m;
}

// [[0, b], [c, 0]] at doubled dimension.
inline ExactMatrix block_offdiag2(const ExactMatrix& b, const ExactMatrix& c) {
  b.check_dim(c);
  const std::size_t n = b.dim();
  ExactMatrix m(2 * n, Realm::other);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col) {
      if (!b.at(r, col).is_zero()) m.at(r, n + col) = b.at(r, col);
      if (!c.at(r, col).is_zero()) m.at(n + r, col) = c.at(r, col);
    }
  m.set_realm(ExactMatrix::infer_realm(2 * n, m.is_real()));
  return m;
}

// The realified multiplication by i on C^16: the fixed complex structure of
// the 32-dimensional real picture.
inline ExactMatrix standard_complex_structure() {
  ExactMatrix j(32, Realm::real32);
  for (std::size_t k = 0; k < 16; ++k) {
    j.at(k, 16 + k) = GaussianRational(-1);
    j.at(16 + k, k) = GaussianRational(1);
  }
  return j;
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_EXACT_MATRIX_HPP
