#pragma once

#include <complex>
#include <string>
#include <vector>

#include "exact_linalg.hpp"
#include "weights.hpp"

namespace orbiquot {

struct ClassificationViolation : std::logic_error {
  explicit ClassificationViolation(const std::string& what)
      : std::logic_error(what) {}
};

struct NotApplicable : std::invalid_argument {
  explicit NotApplicable(const std::string& what)
      : std::invalid_argument(what) {}
};

// ---------------------------------------------------------------------------
// Labels

enum class SignSide { None, Sub, Super };

struct StratumLabel {
  enum class Kind {
    TypeI,        // sign-pair + sign-triple stratum (Theta)
    Split31,      // S^{abc}_d
    Split13,      // S^a_{bcd}
    Split22,      // S^{ab}_{cd}
    OmegaTypeI,   // S_(s1,s2,s3) inside S0
    OmegaSplit21, // S^{ab}_c
    OmegaSplit12, // S^a_{bc}
    OmegaS0,
    OmegaS1,
  };
  Kind kind;
  std::vector<int> top, bottom;  // 1-based pair indices
  std::vector<int> signs;        // optional component signs (+1/-1)
  SignSide sign_side = SignSide::None;

  bool omega_case() const {
    return kind == Kind::OmegaTypeI || kind == Kind::OmegaSplit21 ||
           kind == Kind::OmegaSplit12 || kind == Kind::OmegaS0 ||
           kind == Kind::OmegaS1;
  }
  std::string str() const;
  bool operator==(const StratumLabel&) const = default;
};

// Top/bottom index sets swap and subscript signs move to superscript
// position (and vice versa). Throws NotApplicable for Omega labels.
StratumLabel j_image(const StratumLabel& label);

// ---------------------------------------------------------------------------
// Fixed-point block determinant

struct DetMAlpha {
  std::complex<double> direct;    // cofactor expansion of the 4x4 block
  std::complex<double> factored;  // rho^2 (rho + conj(rho) e^{-2it} - 2 Re(eps) e^{-it})
                                  //       (rho + conj(rho) e^{+2it} - 2 Re(eps) e^{+it})
};

DetMAlpha det_M_alpha(std::complex<double> epsilon, std::complex<double> sigma,
                      std::complex<double> rho, double theta);

// ---------------------------------------------------------------------------
// Type-1 strata (all quaternionic pairs diagonalized)

struct Type1Solution {
  bool singular = false;
  BigInt system_det;      // +- one of the eight box determinants
  Vec4q x;                // (|u1|^2, |u3|^2, |u5|^2, |u7|^2), valid if !singular
  bool all_positive = false;
};

// Exact solve of the 4x4 positivity system with rows (s_a p_a), (s_a q_a),
// (s_a l_a), (1,1,1,1) and right side (0,0,0,1/2).
Type1Solution solve_type1_system(const ThetaMatrix& t,
                                 const std::array<int, 4>& signs);

struct Type1Catalog {
  SignTriple realized_triple;  // relative signs of pairs 2..4, same for both
                               // realized families
  Type1Solution realized;      // the positive solution
  int positive_count_pp = 0, positive_count_mm = 0;
  struct MixedCertificate {
    std::string family;  // "(+,-)" or "(-,+)"
    SignTriple triple;
    BigInt system_det;   // nonzero => forced Gamma = 0 and zw-products = 0,
                         // contradicting |z|^2 = |w|^2 > 0
  };
  std::vector<MixedCertificate> mixed;  // 16 exact emptiness certificates
};

Type1Catalog type1_catalog(const ThetaMatrix& t);

// ---------------------------------------------------------------------------
// Type-2 strata (coordinate-block zero patterns)

enum class QuotientKind { Sphere, Point };

struct StratumComponent {
  std::string name;        // "+", "-", "(+,+)", ...
  bool intersects = false;
  std::vector<Rational> exact_data;  // pair invariants Im(conj(z)z') in pair order
  BigInt invariant;
  QuotientKind quotient = QuotientKind::Sphere;
  int quotient_dim = 2;
};

struct StratumDecision {
  StratumLabel label;
  int dim_stratum = 0;  // dim S = dim V + 2
  std::vector<StratumComponent> components;

  bool intersects() const {
    for (const auto& c : components)
      if (c.intersects) return true;
    return false;
  }
};

// The 4 labels S^{abc}_d, 4 labels S^a_{bcd} (two signed sphere components
// each) and 6 labels S^{ab}_{cd} (a connected sphere plus 4 signed point
// substrata each), with exact intersection data.
std::vector<StratumDecision> enumerate_type2(const ThetaMatrix& t);

// ---------------------------------------------------------------------------
// Catalogs

struct CatalogEntry {
  std::string label;
  BigInt invariant;
  QuotientKind kind = QuotientKind::Sphere;
  bool intersects = true;  // constructive feasibility of the pair data
  std::vector<Rational> data;
};

struct PointGroup {
  std::string joining_labels;  // the J-paired Split22 labels
  std::vector<CatalogEntry> points;
};

struct SingularLocusCatalog {
  std::vector<CatalogEntry> type1_spheres;            // <= 2
  std::vector<CatalogEntry> type2_spheres;            // <= 22
  std::vector<PointGroup> point_groups;               // <= 3 of <= 4 (Theta)
  std::vector<CatalogEntry> omega_sphere;             // <= 1
  std::vector<CatalogEntry> excluded;                 // |invariant| = 1
  std::vector<std::string> notes;
};

SingularLocusCatalog catalog_theta(const ThetaMatrix& t);
SingularLocusCatalog catalog_omega(const OmegaMatrix& o);

// Kernel of the weight matrix acting on pair invariants:
// (d234, -d134, d124, -d123) for Theta, (d23, -d13, d12) for Omega.
std::array<BigInt, 4> kernel_theta(const MinorSetTheta& m);
std::array<BigInt, 3> kernel_omega(const MinorSetOmega& m);

}  // namespace orbiquot
