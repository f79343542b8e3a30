#pragma once

#include <cmath>
#include <complex>

namespace orbiquot {

struct Quaternion {
  double r = 0, i = 0, j = 0, k = 0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r_, double i_, double j_, double k_)
      : r(r_), i(i_), j(j_), k(k_) {}

  // u = z + j*w with z = r + i*i_, w = j_ + i*k_ :
  //   z + j(a+bi) = a*j + b*(ji) = a*j - b*k ... careful below.
  static Quaternion from_complex_pair(std::complex<double> z,
                                      std::complex<double> w) {
    // j * (a + bi) = a j + b (j i) = a j - b k
    return {z.real(), z.imag(), w.real(), -w.imag()};
  }
  std::complex<double> z_part() const { return {r, i}; }
  std::complex<double> w_part() const { return {j, -k}; }

  Quaternion conj() const { return {r, -i, -j, -k}; }
  double norm2() const { return r * r + i * i + j * j + k * k; }
  double norm() const { return std::sqrt(norm2()); }

  Quaternion operator+(const Quaternion& o) const {
    return {r + o.r, i + o.i, j + o.j, k + o.k};
  }
  Quaternion operator-(const Quaternion& o) const {
    return {r - o.r, i - o.i, j - o.j, k - o.k};
  }
  Quaternion operator-() const { return {-r, -i, -j, -k}; }
  Quaternion operator*(double s) const { return {r * s, i * s, j * s, k * s}; }

  Quaternion operator*(const Quaternion& o) const {
    return {r * o.r - i * o.i - j * o.j - k * o.k,
            r * o.i + i * o.r + j * o.k - k * o.j,
            r * o.j - i * o.k + j * o.r + k * o.i,
            r * o.k + i * o.j - j * o.i + k * o.r};
  }
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

constexpr Quaternion kQuatI{0, 1, 0, 0};
constexpr Quaternion kQuatJ{0, 0, 1, 0};
constexpr Quaternion kQuatK{0, 0, 0, 1};

}  // namespace orbiquot
