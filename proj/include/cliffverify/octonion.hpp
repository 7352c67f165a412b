#ifndef CLIFFVERIFY_OCTONION_HPP
#define CLIFFVERIFY_OCTONION_HPP

/*
 * Exact octonion arithmetic via the Cayley-Dickson construction over the
 * quaternions, and the right-multiplication matrices that seed every
 * generator family in the library.
 *
 * Conventions (fixed; the generator tables depend on them):
 *   - quaternion units 1, i, j, k with ij = k, jk = i, ki = j;
 *   - octonions are pairs of quaternions with product
 *       (a, b)(c, d) = (ac - conj(d) b,  d a + b conj(c));
 *   - octonion basis order 1, i, j, k, e, f, g, h where e = (0, 1),
 *     f = i e, g = j e, h = k e;
 *   - right_mult_matrix(u) is the matrix of x -> x * u, i.e. column a holds
 *     the coordinates of basis_a * u, acting on column vectors;
 *   - right_mult_composition(u, v) = R_u * R_v, the matrix of
 *     x -> (x * v) * u (the right factor acts first).
 */

#include <array>
#include <cstddef>

#include "cliffverify/exact_matrix.hpp"
#include "cliffverify/gaussian_rational.hpp"

namespace cliffverify {

using QuatVec = std::array<GaussianRational, 4>;
using OctVec = std::array<GaussianRational, 8>;

inline QuatVec quat_conj(const QuatVec& q) {
  return {q[0], -q[1], -q[2], -q[3]};
}

inline QuatVec quat_mul(const QuatVec& p, const QuatVec& q) {
  QuatVec r;
  r[0] = p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3];
  r[1] = p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2];
  r[2] = p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1];
  r[3] = p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0];
  return r;
}

inline OctVec oct_unit(std::size_t idx) {
  OctVec u{};
  u[idx] = GaussianRational(1);
  return u;
}

inline OctVec oct_conj(const OctVec& x) {
  OctVec r{x[0]};
  for (std::size_t k = 1; k < 8; ++k) r[k] = -x[k];
  return r;
}

inline OctVec oct_mul(const OctVec& x, const OctVec& y) {
  const QuatVec a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const QuatVec c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const QuatVec first = [&] {
    QuatVec ac = quat_mul(a, c);
    const QuatVec db = quat_mul(quat_conj(d), b);
    for (std::size_t k = 0; k < 4; ++k) ac[k] -= db[k];
    return ac;
  }();
  const QuatVec second = [&] {
    QuatVec da = quat_mul(d, a);
    const QuatVec bc = quat_mul(b, quat_conj(c));
    for (std::size_t k = 0; k < 4; ++k) da[k] += bc[k];
    return da;
  }();
  return {first[0], first[1], first[2], first[3],
          second[0], second[1], second[2], second[3]};
}

// Squared norm sum of squared coordinates (real inputs assumed where it is
// used as a norm; returned exactly for any input).
inline GaussianRational oct_norm(const OctVec& x) {
  GaussianRational n;
  for (const auto& c : x) n += c * c;
  return n;
}

// Unit-product table: basis_a * basis_b = sign[a][b] * basis_index[a][b].
struct OctonionTable {
  int sign[8][8];
  std::size_t index[8][8];
};

inline const OctonionTable& octonion_table() {
  static const OctonionTable table = [] {
    OctonionTable t{};
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) {
        const OctVec p = oct_mul(oct_unit(a), oct_unit(b));
        for (std::size_t c = 0; c < 8; ++c) {
          if (p[c].is_zero()) continue;
          t.index[a][b] = c;
          t.sign[a][b] = p[c] == GaussianRational(1) ? 1 : -1;
        }
      }
    return t;
  }();
  return table;
}

// Matrix of x -> x * u for a basis unit u (a signed permutation).
inline ExactMatrix right_mult_matrix(std::size_t unit) {
  const OctonionTable& t = octonion_table();
  ExactMatrix m(8);
  for (std::size_t a = 0; a < 8; ++a)
    m.at(t.index[a][unit], a) = GaussianRational(t.sign[a][unit]);
  return m;
}

// Matrix of x -> x * u for an arbitrary octonion u.
inline ExactMatrix right_mult_matrix(const OctVec& u) {
  ExactMatrix m(8);
  for (std::size_t a = 0; a < 8; ++a) {
    const OctVec col = oct_mul(oct_unit(a), u);
    for (std::size_t r = 0; r < 8; ++r)
      if (!col[r].is_zero()) m.at(r, a) = col[r];
  }
  return m;
}

// R_u * R_v: the right factor acts first, x -> (x * v) * u.
inline ExactMatrix right_mult_composition(std::size_t u, std::size_t v) {
  return right_mult_matrix(u) * right_mult_matrix(v);
}

}  // namespace cliffverify

#endif  // CLIFFVERIFY_OCTONION_HPP
