#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "quatmoment.hpp"

namespace orbiquot {

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 500;
  std::uint64_t seed = 0;
};

struct SolveReport {
  HVector point{8};
  double residual = 0;      // final euclidean norm of the moment residuals
  int iterations = 0;
  bool converged = false;
  int rank = 0;             // numerical rank of the 4xn real matrix view
  double min_pair_norm = 0;
};

// Complex coordinates are indexed z_0..z_{n-1}, w_0..w_{n-1}. A coordinate
// is either zero, free, or tied to an earlier free coordinate by a complex
// multiple (the diagonalized-pair relations use coeff = +-i).
struct LinearRelation {
  int target = 0;
  int source = 0;
  std::complex<double> coeff;
};

struct Restriction {
  int n = 8;
  std::vector<bool> zero;  // size 2n; defaults to all free
  std::vector<LinearRelation> relations;

  static Restriction trivial(int n) {
    Restriction r;
    r.n = n;
    r.zero.assign(2 * n, false);
    return r;
  }
};

SolveReport find_point(const ThetaMatrix& t, const SolveOptions& opts);
SolveReport find_point_omega(const OmegaMatrix& o, const SolveOptions& opts);
SolveReport find_point_restricted(const ThetaMatrix& t, const Restriction& r,
                                  const SolveOptions& opts);

// Moment residual norm of a given point (9 Sp(1) components plus 3 per
// torus weight row), used to certify solver output independently.
double residual_norm(const ThetaMatrix& t, const HVector& u);
double residual_norm(const OmegaMatrix& o, const HVector& u);

// splitmix64, the deterministic seed expander used by the solver.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace orbiquot
