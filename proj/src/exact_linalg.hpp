#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orbiquot {

// Exact arithmetic used by every classification decision. No floating
// point in this header or its implementation.
using BigInt = mpz_class;
using Rational = mpq_class;

using Mat3 = std::array<std::array<BigInt, 3>, 3>;
using Mat4q = std::array<std::array<Rational, 4>, 4>;
using Vec4q = std::array<Rational, 4>;

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("singular 4x4 system") {}
};

BigInt det3(const Mat3& m);
Rational det4(const Mat4q& m);

// Unique solution of a*x = b; throws SingularMatrix when det4(a) == 0.
Vec4q solve4(const Mat4q& a, const Vec4q& b);

// gcd of absolute values; empty list gives 0.
BigInt gcd_list(const std::vector<BigInt>& values);

std::string rational_str(const Rational& q);

}  // namespace orbiquot
