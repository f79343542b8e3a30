#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact_linalg.hpp"

namespace orbiquot {

// 3x4 integer weight matrix with rows p, q, l.
struct ThetaMatrix {
  std::array<long, 4> p{}, q{}, l{};

  long row(int r, int c) const {
    return r == 0 ? p[c] : (r == 1 ? q[c] : l[c]);
  }
};

// 2x3 integer weight matrix with rows p, q.
struct OmegaMatrix {
  std::array<long, 3> p{}, q{};
};

// The four 3x3 column minors, lexicographic index order
// (123, 124, 134, 234).
struct MinorSetTheta {
  BigInt d123, d124, d134, d234;

  std::array<BigInt, 4> as_array() const { return {d123, d124, d134, d234}; }
};

struct MinorSetOmega {
  BigInt d12, d13, d23;
};

// Sign triple indexing the eight box determinants: entry (s2,s3,s4) is
// the determinant with rows (p1+s2*p2,...), (p1+s3*p3,...), (p1+s4*p4,...).
struct SignTriple {
  int s2 = 1, s3 = 1, s4 = 1;

  auto operator<=>(const SignTriple&) const = default;
  std::string str() const;
  static std::array<SignTriple, 8> all();
};

struct BoxSet {
  std::map<std::array<int, 3>, BigInt> entries;

  const BigInt& at(const SignTriple& s) const {
    return entries.at({s.s2, s.s3, s.s4});
  }
  BigInt& at(const SignTriple& s) { return entries[{s.s2, s.s3, s.s4}]; }
};

MinorSetTheta minors_theta(const ThetaMatrix& t);
BoxSet boxes(const ThetaMatrix& t);
BoxSet boxes_via_minors(const MinorSetTheta& m);

struct ParityError : std::domain_error {
  ParityError() : std::domain_error("box sums have odd parity") {}
};

// Inverse of the eight-identity system from the four designated boxes
// X = box(+,+,+), Y = box(+,-,+), Z = box(-,+,-), W = box(+,-,-):
//   d123 = -(Y+W)/2, d124 = -(X+Y)/2, d134 = (X+Y-Z+W)/2, d234 = (Z-Y)/2.
// Throws ParityError when a required sum is odd.
MinorSetTheta minors_via_boxes(const BigInt& x, const BigInt& y,
                               const BigInt& z, const BigInt& w);

struct FreenessDecision {
  bool locally_free = false;
  // Names the first vanishing determinant when not locally free,
  // e.g. "Delta_124" or "box(+,-,+)".
  std::string witness;
};

FreenessDecision is_locally_free_theta(const ThetaMatrix& t);

struct AdmissibilityDecision {
  bool admissible = false;
  std::string failing_condition;  // empty when admissible
};

// Minor-sum phrasing of the same predicate: all minors nonzero, their sum
// nonzero, none equal to the sum of the other three, no two summing to the
// other two.
AdmissibilityDecision minor_sum_admissible(const ThetaMatrix& t);

struct ObstructionReport {
  bool refuted = false;  // must stay false: no self-consistent assignment
  int assignments_checked = 0;
  int parity_skipped = 0;
  struct NearMiss {
    std::array<BigInt, 4> minors;
    std::vector<std::string> violated_boxes;  // recomputed |box| != 1
  };
  std::vector<NearMiss> near_misses;
};

// Exhaustive 2^8 scan showing no +-1 assignment to the eight boxes is
// self-consistent with all minors nonzero, i.e. no weight matrix gives a
// free action.
ObstructionReport freeness_obstruction();

MinorSetOmega minors_omega(const OmegaMatrix& o);

struct OmegaFreeness {
  bool locally_free = false;
  bool free_on_s1 = false;  // gcd of the three minors equals 1
  std::string witness;
};

OmegaFreeness omega_freeness(const OmegaMatrix& o);
inline bool is_locally_free_omega(const OmegaMatrix& o) {
  return omega_freeness(o).locally_free;
}
inline bool is_free_omega(const OmegaMatrix& o) {
  return omega_freeness(o).free_on_s1;
}

}  // namespace orbiquot
