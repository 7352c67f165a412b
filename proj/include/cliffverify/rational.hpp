#ifndef CLIFFVERIFY_RATIONAL_HPP
#define CLIFFVERIFY_RATIONAL_HPP

/*
 * Exact rational scalar.
 *
 * Thin value wrapper around boost::multiprecision::cpp_rational, which
 * already maintains the invariants we need: arbitrary precision, always
 * reduced, denominator strictly positive, zero canonically 0/1.  The
 * wrapper exists so the rest of the library speaks one fixed type with a
 * small, deliberate surface (no implicit conversions to floating point).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cliffverify {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, scalars read naturally
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    BigInt n(num), d(den);
    if (d < 0) {  // cpp_rational requires a positive denominator
      n = -n;
      d = -d;
    }
    v_ = BigRat(n, d);
  }
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  explicit Rational(const BigInt& n) : v_(n) {}

  // Parses "p", "-p", or "p/q" with arbitrary-precision components.
  static Rational parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigRat(BigInt(s)));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(BigRat(num, den));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(BigRat(-v_)); }
  Rational abs() const { return v_.sign() < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // Canonical serialization: always "num/den", reduced, den >= 1.
  std::string str() const {
    return numerator().str() + "/" + denominator().str();
  }

  const BigRat& raw() const { return v_; }

 private:
  BigRat v_;
};

// gcd of rationals: gcd of numerators over lcm of denominators.  Used for
// common-content extraction in exact elimination, where dividing a row by
// the content of its entries keeps intermediate values small.
inline Rational gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  BigInt gn = boost::multiprecision::gcd(a.numerator(), b.numerator());
  BigInt ad = a.denominator(), bd = b.denominator();
  BigInt gd = ad / boost::multiprecision::gcd(ad, bd) * bd;
  return Rational(BigRat(gn, gd));
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_RATIONAL_HPP
