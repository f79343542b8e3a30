#pragma once

#include <complex>
#include <vector>

#include "quaternion.hpp"
#include "weights.hpp"

namespace orbiquot {

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

// A point of H^n, n = 7 or 8. The Theta case pairs coordinates as
// (u1,u2),(u3,u4),(u5,u6),(u7,u8); the Omega case leaves u1 unpaired and
// pairs (u2,u3),(u4,u5),(u6,u7).
struct HVector {
  std::vector<Quaternion> entries;

  explicit HVector(int n = 8) : entries(n) {}
  int size() const { return static_cast<int>(entries.size()); }
  Quaternion& operator[](int idx) { return entries[idx]; }
  const Quaternion& operator[](int idx) const { return entries[idx]; }

  int pair_count() const { return size() == 8 ? 4 : 3; }
  // Indices (first, second) of quaternionic pair a (0-based).
  std::pair<int, int> pair_indices(int a) const {
    return size() == 8 ? std::pair{2 * a, 2 * a + 1}
                       : std::pair{2 * a + 1, 2 * a + 2};
  }

  double norm2() const {
    double s = 0;
    for (const auto& q : entries) s += q.norm2();
    return s;
  }
};

// Three imaginary quaternions (9 reals) for the Sp(1) part; k x 3 reals
// for the torus part.
struct Sp1Moment {
  Quaternion mi, mj, mk;  // real components are zero by construction

  double norm2() const { return mi.norm2() + mj.norm2() + mk.norm2(); }
};

struct TorusMoment {
  // rows[r] is the imaginary 3-vector of the r-th weighted sum.
  std::vector<std::array<double, 3>> rows;

  double norm2() const {
    double s = 0;
    for (const auto& r : rows) s += r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    return s;
  }
};

Sp1Moment mu(const HVector& u);
TorusMoment nu_theta(const ThetaMatrix& t, const HVector& u);
TorusMoment nu_omega(const OmegaMatrix& o, const HVector& u);

struct GroupElement {
  double t = 0, s = 0, r = 0;   // torus angles; r unused in the Omega case
  Quaternion lambda{1, 0, 0, 0};  // unit quaternion, Sp(1)
  std::complex<double> rho{1, 0};  // unit complex, U(1)
};

HVector apply_action(const GroupElement& g, const ThetaMatrix& t,
                     const HVector& u);
HVector apply_action(const GroupElement& g, const OmegaMatrix& o,
                     const HVector& u);

struct RealMatrixView {
  std::vector<std::array<double, 4>> columns;  // (1,i,j,k) coefficients
  int rank = 0;
  double min_pair_norm = 0;
};

// The 4xn real-matrix view of u, its numerical rank (singular values
// above 1e-8 of the largest) and the smallest quaternionic pair norm.
RealMatrixView real_matrix_rank(const HVector& u);

// (z, w) -> (-w, z) on the complex splitting.
HVector j_involution(const HVector& u);

}  // namespace orbiquot
