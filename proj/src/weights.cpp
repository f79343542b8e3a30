#include "weights.hpp"

#include <algorithm>

namespace orbiquot {

std::string SignTriple::str() const {
  std::string s = "(";
  s += (s2 > 0 ? '+' : '-');
  s += ',';
  s += (s3 > 0 ? '+' : '-');
  s += ',';
  s += (s4 > 0 ? '+' : '-');
  s += ')';
  return s;
}

std::array<SignTriple, 8> SignTriple::all() {
  std::array<SignTriple, 8> out;
  int i = 0;
  for (int s2 : {+1, -1})
    for (int s3 : {+1, -1})
      for (int s4 : {+1, -1}) out[i++] = SignTriple{s2, s3, s4};
  return out;
}

namespace {

BigInt column_minor(const ThetaMatrix& t, int a, int b, int c) {
  Mat3 m;
  int cols[3] = {a, b, c};
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r) m[i][r] = t.row(r, cols[i]);
  return det3(m);
}

}  // namespace

MinorSetTheta minors_theta(const ThetaMatrix& t) {
  return {column_minor(t, 0, 1, 2), column_minor(t, 0, 1, 3),
          column_minor(t, 0, 2, 3), column_minor(t, 1, 2, 3)};
}

BoxSet boxes(const ThetaMatrix& t) {
  BoxSet out;
  for (const auto& s : SignTriple::all()) {
    Mat3 m;
    const int signs[3] = {s.s2, s.s3, s.s4};
    for (int i = 0; i < 3; ++i) {
      m[i][0] = BigInt(t.p[0]) + signs[i] * BigInt(t.p[i + 1]);
      m[i][1] = BigInt(t.q[0]) + signs[i] * BigInt(t.q[i + 1]);
      m[i][2] = BigInt(t.l[0]) + signs[i] * BigInt(t.l[i + 1]);
    }
    out.at(s) = det3(m);
  }
  return out;
}

BoxSet boxes_via_minors(const MinorSetTheta& m) {
  BoxSet out;
  for (const auto& s : SignTriple::all()) {
    out.at(s) = s.s2 * s.s3 * s.s4 * m.d234 + s.s3 * s.s4 * m.d134 -
                s.s2 * s.s4 * m.d124 + s.s2 * s.s3 * m.d123;
  }
  return out;
}

MinorSetTheta minors_via_boxes(const BigInt& x, const BigInt& y,
                               const BigInt& z, const BigInt& w) {
  const BigInt yw = y + w, xy = x + y, mid = x + y - z + w, zy = z - y;
  if (yw % 2 != 0 || xy % 2 != 0 || mid % 2 != 0 || zy % 2 != 0)
    throw ParityError();
  return {-yw / 2, -xy / 2, mid / 2, zy / 2};
}

FreenessDecision is_locally_free_theta(const ThetaMatrix& t) {
  const MinorSetTheta m = minors_theta(t);
  const char* names[4] = {"Delta_123", "Delta_124", "Delta_134", "Delta_234"};
  const auto arr = m.as_array();
  for (int i = 0; i < 4; ++i)
    if (arr[i] == 0) return {false, names[i]};
  const BoxSet b = boxes(t);
  for (const auto& s : SignTriple::all())
    if (b.at(s) == 0) return {false, "box" + s.str()};
  return {true, ""};
}

AdmissibilityDecision minor_sum_admissible(const ThetaMatrix& t) {
  const auto d = minors_theta(t).as_array();
  const char* names[4] = {"Delta_123", "Delta_124", "Delta_134", "Delta_234"};
  for (int i = 0; i < 4; ++i)
    if (d[i] == 0)
      return {false, std::string(names[i]) + " = 0"};
  const BigInt sum = d[0] + d[1] + d[2] + d[3];
  if (sum == 0) return {false, "sum of minors is zero"};
  for (int i = 0; i < 4; ++i)
    if (2 * d[i] == sum)
      return {false, std::string(names[i]) + " equals the sum of the others"};
  // pairs: {0,i} vs complement, i=1,2,3
  for (int i = 1; i < 4; ++i) {
    if (2 * (d[0] + d[i]) == sum) {
      return {false, std::string(names[0]) + "+" + names[i] +
                         " equals the sum of the other two"};
    }
  }
  return {true, ""};
}

ObstructionReport freeness_obstruction() {
  ObstructionReport rep;
  const auto triples = SignTriple::all();
  for (int mask = 0; mask < 256; ++mask) {
    ++rep.assignments_checked;
    std::map<std::array<int, 3>, BigInt> assigned;
    for (int i = 0; i < 8; ++i) {
      const auto& s = triples[i];
      assigned[{s.s2, s.s3, s.s4}] = (mask >> i) & 1 ? 1 : -1;
    }
    const BigInt x = assigned[{+1, +1, +1}];
    const BigInt y = assigned[{+1, -1, +1}];
    const BigInt z = assigned[{-1, +1, -1}];
    const BigInt w = assigned[{+1, -1, -1}];
    MinorSetTheta m;
    try {
      m = minors_via_boxes(x, y, z, w);
    } catch (const ParityError&) {
      ++rep.parity_skipped;
      continue;
    }
    const auto arr = m.as_array();
    if (std::any_of(arr.begin(), arr.end(),
                    [](const BigInt& v) { return v == 0; }))
      continue;
    const BoxSet back = boxes_via_minors(m);
    bool consistent = true;
    std::vector<std::string> violated;
    for (const auto& s : triples) {
      if (back.at(s) != assigned[{s.s2, s.s3, s.s4}]) {
        consistent = false;
        if (abs(back.at(s)) != 1)
          violated.push_back("box" + s.str() + " = " + back.at(s).get_str());
      }
    }
    if (consistent) {
      rep.refuted = true;  // a consistent assignment would allow a free action
      continue;
    }
    if (!violated.empty()) rep.near_misses.push_back({arr, violated});
  }
  return rep;
}

MinorSetOmega minors_omega(const OmegaMatrix& o) {
  auto m2 = [&](int a, int b) -> BigInt {
    return BigInt(o.p[a]) * o.q[b] - BigInt(o.p[b]) * o.q[a];
  };
  return {m2(0, 1), m2(0, 2), m2(1, 2)};
}

OmegaFreeness omega_freeness(const OmegaMatrix& o) {
  const MinorSetOmega m = minors_omega(o);
  const BigInt* vals[3] = {&m.d12, &m.d13, &m.d23};
  const char* names[3] = {"Delta_12", "Delta_13", "Delta_23"};
  for (int i = 0; i < 3; ++i)
    if (*vals[i] == 0) return {false, false, names[i]};
  const BigInt g = gcd_list({m.d12, m.d13, m.d23});
  return {true, g == 1, g == 1 ? "" : "gcd = " + g.get_str()};
}

}  // namespace orbiquot
