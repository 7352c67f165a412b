#ifndef CLIFFVERIFY_GAUSSIAN_RATIONAL_HPP
#define CLIFFVERIFY_GAUSSIAN_RATIONAL_HPP

/*
 * Exact complex scalar a + b*i with rational a, b.
 *
 * This is the coefficient field for every matrix and differential form in
 * the library.  Almost all values flowing through the heavy kernels are
 * purely real (the imaginary unit lives in the complex *view* of forms, not
 * in their real-coordinate storage), so the arithmetic fast-paths the
 * im == 0 case.
 */

#include <string>

#include "cliffverify/rational.hpp"

namespace cliffverify {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design
  GaussianRational(long long re) : re_(re) {}            // NOLINT: implicit by design
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  // Squared modulus x * conj(x); always real and non-negative.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ /= o.re_;
      return *this;
    }
    Rational n = o.norm();
    GaussianRational num = *this;
    num *= o.conj();
    re_ = num.re_ / n;
    im_ = num.im_ / n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Human-oriented rendering, e.g. "3/2+1/2i"; serialization uses re()/im().
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.str();
    if (im_.sign() >= 0) s += "+";
    return s + im_.str() + "i";
  }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace cliffverify

#endif  // CLIFFVERIFY_GAUSSIAN_RATIONAL_HPP
