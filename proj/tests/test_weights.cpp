#include <doctest.h>

#include <cstdint>

#include "weights.hpp"

using namespace orbiquot;

namespace {

const ThetaMatrix kTheta1{{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}};
const ThetaMatrix kTheta2{{9, 2, 7, 1}, {40, 9, 31, 0}, {1, 2, 0, 1}};

std::uint64_t mix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
  return z ^ (z >> 31);
}

ThetaMatrix random_theta(std::uint64_t& s, long long bound) {
  ThetaMatrix t;
  const std::uint64_t span = 2 * bound + 1;
  for (int c = 0; c < 4; ++c) {
    t.p[c] = static_cast<long long>(mix(s) % span) - bound;
    t.q[c] = static_cast<long long>(mix(s) % span) - bound;
    t.l[c] = static_cast<long long>(mix(s) % span) - bound;
  }
  return t;
}

}  // namespace

TEST_CASE("published example minors") {
  const MinorSetTheta m1 = minors_theta(kTheta1);
  CHECK(m1.d123 == -2);
  CHECK(m1.d124 == -1);
  CHECK(m1.d134 == 1);
  CHECK(m1.d234 == -1);

  const MinorSetTheta m2 = minors_theta(kTheta2);
  CHECK(m2.d123 == 1);
  CHECK(m2.d124 == 72);
  CHECK(m2.d134 == -32);
  CHECK(m2.d234 == -63);

  CHECK(minor_sum_admissible(kTheta1).admissible);
  CHECK(minor_sum_admissible(kTheta2).admissible);
}

TEST_CASE("box values of the first example") {
  const BoxSet b = boxes(kTheta1);
  CHECK(b.at({+1, +1, +1}) == -1);
  CHECK(b.at({+1, +1, -1}) == -3);
  CHECK(b.at({+1, -1, +1}) == 3);
  CHECK(b.at({+1, -1, -1}) == 1);
  CHECK(b.at({-1, +1, +1}) == 3);
  CHECK(b.at({-1, +1, -1}) == 1);
  CHECK(b.at({-1, -1, +1}) == -5);
  CHECK(b.at({-1, -1, -1}) == 1);
}

TEST_CASE("boxes equal their minor expansion on random matrices") {
  std::uint64_t s = 11;
  for (int i = 0; i < 500; ++i) {
    const ThetaMatrix t = random_theta(s, 20);
    const MinorSetTheta m = minors_theta(t);
    const BoxSet direct = boxes(t);
    const BoxSet via = boxes_via_minors(m);
    for (const auto& sg : SignTriple::all())
      REQUIRE(direct.at(sg) == via.at(sg));
    // four designated boxes recover the minors exactly
    const MinorSetTheta back = minors_via_boxes(
        direct.at({+1, +1, +1}), direct.at({+1, -1, +1}),
        direct.at({-1, +1, -1}), direct.at({+1, -1, -1}));
    REQUIRE(back.as_array() == m.as_array());
  }
}

TEST_CASE("parity failure is reported") {
  CHECK_THROWS_AS(minors_via_boxes(BigInt(1), BigInt(2), BigInt(0), BigInt(0)),
                  ParityError);
}

TEST_CASE("admissibility wordings agree with the determinant test") {
  std::uint64_t s = 23;
  for (int i = 0; i < 500; ++i) {
    const ThetaMatrix t = random_theta(s, 4);
    const bool by_boxes = is_locally_free_theta(t).locally_free;
    const bool by_sums = minor_sum_admissible(t).admissible;
    REQUIRE(by_boxes == by_sums);
  }
}

TEST_CASE("no sign assignment admits a free action") {
  const ObstructionReport rep = freeness_obstruction();
  CHECK(rep.assignments_checked == 256);
  CHECK_FALSE(rep.refuted);
  bool saw_pos = false, saw_neg = false;
  for (const auto& nm : rep.near_misses) {
    if (nm.minors == std::array<BigInt, 4>{1, 1, -2, 1}) saw_pos = true;
    if (nm.minors == std::array<BigInt, 4>{-1, -1, 2, -1}) saw_neg = true;
    CHECK_FALSE(nm.violated_boxes.empty());
  }
  CHECK(saw_pos);
  CHECK(saw_neg);
}

TEST_CASE("degenerate matrices are rejected with a witness") {
  ThetaMatrix t = kTheta1;
  t.p = {0, 0, 0, 0};  // first row zero kills every minor
  const FreenessDecision d = is_locally_free_theta(t);
  CHECK_FALSE(d.locally_free);
  CHECK_FALSE(d.witness.empty());
}

TEST_CASE("small weight case minors and freeness") {
  const OmegaMatrix o{{1, 0, 1}, {0, 1, 1}};
  const MinorSetOmega m = minors_omega(o);
  CHECK(m.d12 == 1);
  CHECK(m.d13 == 1);
  CHECK(m.d23 == -1);
  const OmegaFreeness f = omega_freeness(o);
  CHECK(f.locally_free);
  CHECK(f.free_on_s1);

  const OmegaMatrix scaled{{2, 0, 2}, {0, 2, 2}};
  const OmegaFreeness g = omega_freeness(scaled);
  CHECK(g.locally_free);
  CHECK_FALSE(g.free_on_s1);  // gcd of minors is 4

  const OmegaMatrix degenerate{{1, 1, 1}, {2, 2, 2}};
  CHECK_FALSE(omega_freeness(degenerate).locally_free);
}
