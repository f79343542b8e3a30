#include "strata.hpp"

#include <algorithm>
#include <map>

namespace orbiquot {

namespace {

std::string set_str(const std::vector<int>& v) {
  std::string s;
  for (int i : v) s += static_cast<char>('0' + i);
  return s;
}

std::string signs_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += (v[i] > 0 ? '+' : '-');
  }
  return s + ")";
}

Rational rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string StratumLabel::str() const {
  switch (kind) {
    case Kind::TypeI:
      return "S_((" + std::string(signs[0] > 0 ? "+" : "-") + "," +
             (signs[1] > 0 ? "+" : "-") + ")," +
             signs_str({signs[2], signs[3], signs[4]}) + ")";
    case Kind::OmegaTypeI:
      return "S_" + signs_str(signs);
    case Kind::OmegaS0:
      return "S_0";
    case Kind::OmegaS1:
      return "S_1";
    default: {
      std::string s = "S^{" + set_str(top) + "}_{" + set_str(bottom) + "}";
      if (!signs.empty())
        s += (sign_side == SignSide::Super ? "^" : "_") + signs_str(signs);
      return s;
    }
  }
}

StratumLabel j_image(const StratumLabel& label) {
  if (label.omega_case())
    throw NotApplicable("the (z,w) -> (-w,z) label map is defined only for "
                        "the 3x4 weight case");
  StratumLabel out = label;
  if (label.kind == StratumLabel::Kind::TypeI) {
    std::swap(out.signs[0], out.signs[1]);
    return out;
  }
  std::swap(out.top, out.bottom);
  if (label.kind == StratumLabel::Kind::Split31)
    out.kind = StratumLabel::Kind::Split13;
  else if (label.kind == StratumLabel::Kind::Split13)
    out.kind = StratumLabel::Kind::Split31;
  if (!out.signs.empty())
    out.sign_side =
        label.sign_side == SignSide::Sub ? SignSide::Super : SignSide::Sub;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using C = std::complex<double>;

C det3c(const C m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

C det4c(const C m[4][4]) {
  C total = 0;
  for (int col = 0; col < 4; ++col) {
    C sub[3][3];
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c)
        if (c != col) sub[r - 1][cc++] = m[r][c];
    }
    const C term = m[0][col] * det3c(sub);
    total += (col % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

DetMAlpha det_M_alpha(std::complex<double> eps, std::complex<double> sigma,
                      std::complex<double> rho, double theta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const C a = C(ct, 0) - std::conj(eps) * rho;  // z-side diagonal term
  const C b = C(ct, 0) - eps * rho;             // w-side diagonal term
  const C sr = sigma * rho, csr = std::conj(sigma) * rho;
  const C m[4][4] = {
      {C(0), -sr, C(-st), a},
      {-sr, C(0), a, C(st)},
      {C(-st), b, C(0), csr},
      {b, C(st), csr, C(0)},
  };
  DetMAlpha out;
  out.direct = det4c(m);
  const C em = std::exp(C(0, -theta)), ep = std::exp(C(0, theta));
  const double re = eps.real();
  out.factored = rho * rho *
                 (rho + std::conj(rho) * em * em - 2.0 * re * em) *
                 (rho + std::conj(rho) * ep * ep - 2.0 * re * ep);
  return out;
}

// ---------------------------------------------------------------------------

Type1Solution solve_type1_system(const ThetaMatrix& t,
                                 const std::array<int, 4>& signs) {
  Mat4q a;
  for (int c = 0; c < 4; ++c) {
    a[0][c] = Rational(signs[c] * t.p[c]);
    a[1][c] = Rational(signs[c] * t.q[c]);
    a[2][c] = Rational(signs[c] * t.l[c]);
    a[3][c] = 1;
  }
  Type1Solution sol;
  const Rational d = det4(a);
  sol.system_det = d.get_num();  // integer matrix, so den = 1
  if (d == 0) {
    sol.singular = true;
    return sol;
  }
  sol.x = solve4(a, {Rational(0), Rational(0), Rational(0), rat(1, 2)});
  sol.all_positive = true;
  for (const auto& xi : sol.x)
    if (xi <= 0) sol.all_positive = false;
  return sol;
}

Type1Catalog type1_catalog(const ThetaMatrix& t) {
  Type1Catalog cat;
  for (const auto& s : SignTriple::all()) {
    const Type1Solution pp = solve_type1_system(t, {1, s.s2, s.s3, s.s4});
    const Type1Solution mm = solve_type1_system(t, {-1, -s.s2, -s.s3, -s.s4});
    if (!pp.singular && pp.all_positive) {
      ++cat.positive_count_pp;
      cat.realized_triple = s;
      cat.realized = pp;
    }
    if (!mm.singular && mm.all_positive) ++cat.positive_count_mm;
    // Mixed sign pairs on the Sp(1) relations: the same nonzero determinant
    // forces both |z|^2 = |w|^2 and zw = 0 pairwise, which contradicts the
    // sphere equation. A nonzero system_det is the emptiness certificate.
    cat.mixed.push_back({"(+,-)", s, pp.system_det});
    cat.mixed.push_back({"(-,+)", s, pp.system_det});
  }
  if (cat.positive_count_pp != 1 || cat.positive_count_mm != 1)
    throw ClassificationViolation(
        "expected exactly one positive solution per sign family, got " +
        std::to_string(cat.positive_count_pp) + " and " +
        std::to_string(cat.positive_count_mm));
  return cat;
}

// ---------------------------------------------------------------------------

std::array<BigInt, 4> kernel_theta(const MinorSetTheta& m) {
  return {m.d234, -m.d134, m.d124, -m.d123};
}

std::array<BigInt, 3> kernel_omega(const MinorSetOmega& m) {
  return {m.d23, -m.d13, m.d12};
}

namespace {

Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
BigInt iabs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Pair invariants b_a = Im(z_{2a-1} conj(z_{2a})) (or the w analogue) of any
// point on the stratum lie in the kernel line of the weight matrix; pinning
// the single-pair side to s/4 fixes the kernel multiple.
template <size_t N>
std::vector<Rational> kernel_multiple(const std::array<BigInt, N>& kappa,
                                      int pinned, int s) {
  const Rational t = Rational(s) / Rational(4 * kappa[pinned]);
  std::vector<Rational> b;
  for (const auto& k : kappa) b.push_back(t * Rational(k));
  return b;
}

// Sum over the unpinned pairs must fit the sphere budget: each unpinned
// pair needs squared norm at least 2|b_a| and the side carries total 1/2.
bool budget_ok(const std::vector<Rational>& b, const std::vector<int>& free1b) {
  Rational sum = 0;
  for (int a : free1b) sum += 2 * rabs(b[a - 1]);
  return sum <= rat(1, 2);
}

BigInt minor_of(const MinorSetTheta& m, const std::vector<int>& triple) {
  if (triple == std::vector<int>{1, 2, 3}) return m.d123;
  if (triple == std::vector<int>{1, 2, 4}) return m.d124;
  if (triple == std::vector<int>{1, 3, 4}) return m.d134;
  return m.d234;
}

}  // namespace

std::vector<StratumDecision> enumerate_type2(const ThetaMatrix& t) {
  const MinorSetTheta m = minors_theta(t);
  for (const auto& d : m.as_array())
    if (d == 0)
      throw NotApplicable("stratum enumeration needs all minors nonzero");
  const auto kappa = kernel_theta(m);
  std::vector<StratumDecision> out;

  // S^{abc}_d and S^a_{bcd}: one side is a single pinned pair, the signed
  // components are 2-sphere candidates.
  for (int variant = 0; variant < 2; ++variant) {
    for (int pinned = 1; pinned <= 4; ++pinned) {
      std::vector<int> triple;
      for (int i = 1; i <= 4; ++i)
        if (i != pinned) triple.push_back(i);
      StratumDecision dec;
      dec.dim_stratum = 18;
      if (variant == 0) {
        dec.label = {StratumLabel::Kind::Split31, triple, {pinned}, {},
                     SignSide::Sub};
      } else {
        dec.label = {StratumLabel::Kind::Split13, {pinned}, triple, {},
                     SignSide::Super};
      }
      for (int s : {+1, -1}) {
        StratumComponent c;
        c.name = s > 0 ? "+" : "-";
        c.quotient = QuotientKind::Sphere;
        c.quotient_dim = 2;
        c.invariant = minor_of(m, triple);
        c.exact_data = kernel_multiple(kappa, pinned - 1, s);
        c.intersects = budget_ok(c.exact_data, triple);
        dec.components.push_back(c);
      }
      out.push_back(dec);
    }
  }

  // S^{ab}_{cd}: the stratum itself meets the zero set in a connected piece
  // (a 2-sphere candidate); pinning both bottom pairs gives up to four
  // isolated point candidates.
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      std::vector<int> topv = {a, b}, botv;
      for (int i = 1; i <= 4; ++i)
        if (i != a && i != b) botv.push_back(i);
      StratumDecision dec;
      dec.dim_stratum = 18;
      dec.label = {StratumLabel::Kind::Split22, topv, botv, {}, SignSide::None};

      StratumComponent sphere;
      sphere.name = "sphere";
      sphere.intersects = true;  // pair invariants may all vanish here
      sphere.invariant = gcd_list({m.d123, m.d124, m.d134, m.d234});
      dec.components.push_back(sphere);

      const int c = botv[0], d = botv[1];
      for (int sc : {+1, -1}) {
        for (int sd : {+1, -1}) {
          StratumComponent pt;
          pt.name = std::string("(") + (sc > 0 ? "+" : "-") + "," +
                    (sd > 0 ? "+" : "-") + ")";
          pt.quotient = QuotientKind::Point;
          pt.quotient_dim = 0;
          const BigInt realized = sc * kappa[c - 1] + sd * kappa[d - 1];
          pt.invariant = realized;
          const bool same_side =
              sgn(sc * kappa[c - 1]) == sgn(sd * kappa[d - 1]);
          if (same_side) {
            const Rational tval = Rational(1) / Rational(4 * realized);
            for (const auto& k : kappa)
              pt.exact_data.push_back(tval * Rational(k));
            pt.intersects = budget_ok(pt.exact_data, topv);
          }
          dec.components.push_back(pt);
        }
      }
      out.push_back(dec);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SingularLocusCatalog catalog_theta(const ThetaMatrix& t) {
  SingularLocusCatalog cat;
  const auto retain = [&cat](const CatalogEntry& e,
                             std::vector<CatalogEntry>& into) {
    if (iabs(e.invariant) == 1)
      cat.excluded.push_back(e);
    else
      into.push_back(e);
  };

  const Type1Catalog t1 = type1_catalog(t);
  for (int f : {+1, -1}) {
    StratumLabel lab{StratumLabel::Kind::TypeI,
                     {},
                     {},
                     {f, f, t1.realized_triple.s2, t1.realized_triple.s3,
                      t1.realized_triple.s4},
                     SignSide::None};
    CatalogEntry e;
    e.label = lab.str();
    e.invariant = t1.realized.system_det;
    e.kind = QuotientKind::Sphere;
    e.data.assign(t1.realized.x.begin(), t1.realized.x.end());
    retain(e, cat.type1_spheres);
  }

  std::map<std::string, PointGroup> groups;
  for (const auto& dec : enumerate_type2(t)) {
    for (const auto& comp : dec.components) {
      // Sphere candidates stay listed (with the feasibility verdict
      // recorded); point candidates exist only when feasible.
      if (comp.quotient == QuotientKind::Point && !comp.intersects) continue;
      CatalogEntry e;
      e.invariant = comp.invariant;
      e.kind = comp.quotient;
      e.intersects = comp.intersects;
      e.data = comp.exact_data;
      if (comp.quotient == QuotientKind::Sphere) {
        StratumLabel lab = dec.label;
        if (comp.name != "sphere")
          lab.signs = {comp.name == "+" ? +1 : -1};
        e.label = lab.str();
        retain(e, cat.type2_spheres);
      } else {
        StratumLabel lab = dec.label;
        lab.signs = {comp.name[1] == '+' ? +1 : -1,
                     comp.name[3] == '+' ? +1 : -1};
        lab.sign_side = SignSide::Sub;
        e.label = lab.str();
        // J-pairs {S^{ab}_{cd}, S^{cd}_{ab}} collect the points joined by
        // the same connected sphere.
        const std::string self = dec.label.str();
        const std::string partner = j_image(dec.label).str();
        const std::string key = std::min(self, partner);
        auto& g = groups[key];
        g.joining_labels = key + " / " + std::max(self, partner);
        if (iabs(e.invariant) == 1)
          cat.excluded.push_back(e);
        else
          g.points.push_back(e);
      }
    }
  }
  for (auto& [key, g] : groups) cat.point_groups.push_back(g);
  return cat;
}

namespace {

using Mat3q = std::array<std::array<Rational, 3>, 3>;

Rational det3q(const Mat3q& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

SingularLocusCatalog catalog_omega(const OmegaMatrix& o) {
  const MinorSetOmega m = minors_omega(o);
  if (m.d12 == 0 || m.d13 == 0 || m.d23 == 0)
    throw NotApplicable("catalog needs all minors nonzero");
  const auto kappa = kernel_omega(m);
  SingularLocusCatalog cat;

  // The u1 = 0 stratum carries one diagonalized-pair sphere: exactly one
  // sign pattern (s1 fixed +) admits a positive solution of the 3x3 system.
  int positive = 0;
  for (int s2 : {+1, -1}) {
    for (int s3 : {+1, -1}) {
      const int s[3] = {1, s2, s3};
      Mat3q a;
      for (int c = 0; c < 3; ++c) {
        a[0][c] = Rational(s[c] * o.p[c]);
        a[1][c] = Rational(s[c] * o.q[c]);
        a[2][c] = 1;
      }
      const Rational d = det3q(a);
      if (d == 0)
        throw ClassificationViolation("singular diagonalized-pair system");
      // Cramer with right side (0, 0, 1/2)
      std::array<Rational, 3> x;
      for (int i = 0; i < 3; ++i) {
        Mat3q ai = a;
        for (int r = 0; r < 3; ++r) ai[r][i] = r == 2 ? rat(1, 2) : Rational(0);
        x[i] = det3q(ai) / d;
      }
      if (x[0] > 0 && x[1] > 0 && x[2] > 0) {
        ++positive;
        StratumLabel lab{StratumLabel::Kind::OmegaTypeI,
                         {},
                         {},
                         {1, s2, s3},
                         SignSide::None};
        CatalogEntry e;
        e.label = lab.str();
        e.invariant = d.get_num();
        e.kind = QuotientKind::Sphere;
        e.data.assign(x.begin(), x.end());
        if (iabs(e.invariant) == 1)
          cat.excluded.push_back(e);
        else
          cat.omega_sphere.push_back(e);
      }
    }
  }
  if (positive != 1)
    throw ClassificationViolation(
        "expected exactly one positive diagonalized-pair pattern, got " +
        std::to_string(positive));

  // Twelve point candidates: for each pinned pair a the labels S^{bc}_a and
  // S^a_{bc} each carry two signed components with invariant +-kappa_a.
  for (int pinned = 1; pinned <= 3; ++pinned) {
    std::vector<int> others;
    for (int i = 1; i <= 3; ++i)
      if (i != pinned) others.push_back(i);
    PointGroup group;
    StratumLabel sub{StratumLabel::Kind::OmegaSplit21, others, {pinned}, {},
                     SignSide::Sub};
    StratumLabel super{StratumLabel::Kind::OmegaSplit12, {pinned}, others, {},
                       SignSide::Super};
    group.joining_labels = sub.str() + " / " + super.str();
    for (const auto& base : {sub, super}) {
      for (int s : {+1, -1}) {
        StratumLabel lab = base;
        lab.signs = {s};
        CatalogEntry e;
        e.label = lab.str();
        e.invariant = kappa[pinned - 1];
        e.kind = QuotientKind::Point;
        const auto b = kernel_multiple(kappa, pinned - 1, s);
        e.data = b;
        e.intersects = budget_ok(b, others);
        if (iabs(e.invariant) == 1)
          cat.excluded.push_back(e);
        else if (e.intersects)
          group.points.push_back(e);
      }
    }
    cat.point_groups.push_back(group);
  }

  cat.notes.push_back(
      "the u1 != 0 stratum contributes no singular points; the action there "
      "is free exactly when the minors have gcd 1");
  return cat;
}

}  // namespace orbiquot
