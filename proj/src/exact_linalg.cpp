#include "exact_linalg.hpp"

namespace orbiquot {

BigInt det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

Rational det3q(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Rational det4(const Mat4q& m) {
  Rational total = 0;
  int sign = 1;
  for (int j = 0; j < 4; ++j) {
    std::array<std::array<Rational, 3>, 3> minor;
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    total += sign * m[0][j] * det3q(minor);
    sign = -sign;
  }
  return total;
}

Vec4q solve4(const Mat4q& a, const Vec4q& b) {
  if (det4(a) == 0) throw SingularMatrix();
  // Gauss-Jordan on the augmented system; pivots are exact so no
  // stability concerns, only nonzero checks.
  std::array<std::array<Rational, 5>, 4> m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = a[r][c];
    m[r][4] = b[r];
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[col], m[piv]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

BigInt gcd_list(const std::vector<BigInt>& values) {
  BigInt g = 0;
  for (const auto& v : values) {
    BigInt t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    g = t;
  }
  return g;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace orbiquot
