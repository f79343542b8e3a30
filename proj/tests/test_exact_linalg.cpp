#include <doctest.h>

#include "exact_linalg.hpp"

using namespace orbiquot;

TEST_CASE("3x3 determinant") {
  Mat3 m{{{BigInt(1), BigInt(2), BigInt(3)},
          {BigInt(4), BigInt(5), BigInt(6)},
          {BigInt(7), BigInt(8), BigInt(10)}}};
  CHECK(det3(m) == -3);
  Mat3 id{{{BigInt(1), BigInt(0), BigInt(0)},
           {BigInt(0), BigInt(1), BigInt(0)},
           {BigInt(0), BigInt(0), BigInt(1)}}};
  CHECK(det3(id) == 1);
}

TEST_CASE("4x4 determinant and solve") {
  Mat4q a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a[r][c] = Rational(r == c ? 2 : 1);
  CHECK(det4(a) == 5);

  Vec4q b{Rational(1), Rational(2), Rational(3), Rational(4)};
  const Vec4q x = solve4(a, b);
  for (int r = 0; r < 4; ++r) {
    Rational lhs = 0;
    for (int c = 0; c < 4; ++c) lhs += a[r][c] * x[c];
    CHECK(lhs == b[r]);
  }
}

TEST_CASE("singular system throws") {
  Mat4q a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a[r][c] = Rational(r + 1);
  CHECK(det4(a) == 0);
  CHECK_THROWS_AS(solve4(a, {Rational(1), Rational(0), Rational(0), Rational(0)}),
                  SingularMatrix);
}

TEST_CASE("gcd_list") {
  CHECK(gcd_list({BigInt(12), BigInt(-18), BigInt(30)}) == 6);
  CHECK(gcd_list({BigInt(-2), BigInt(-1), BigInt(1), BigInt(-1)}) == 1);
  CHECK(gcd_list({}) == 0);
  CHECK(gcd_list({BigInt(0), BigInt(7)}) == 7);
}

TEST_CASE("rational rendering is reduced") {
  Rational q(6, 4);
  q.canonicalize();
  CHECK(rational_str(q) == "3/2");
  CHECK(rational_str(Rational(5)) == "5");
  CHECK(rational_str(Rational(-1) / Rational(8)) == "-1/8");
}
