#include "zeroset.hpp"

#include <Eigen/Dense>

namespace orbiquot {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

double unit_double(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

struct Problem {
  const ThetaMatrix* theta = nullptr;
  const OmegaMatrix* omega = nullptr;
  Restriction r;
  std::vector<int> free_idx;

  explicit Problem(const Restriction& restriction) : r(restriction) {
    std::vector<bool> tied(2 * r.n, false);
    for (const auto& rel : r.relations) tied[rel.target] = true;
    for (int i = 0; i < 2 * r.n; ++i)
      if (!r.zero[i] && !tied[i]) free_idx.push_back(i);
  }

  int param_count() const { return 2 * static_cast<int>(free_idx.size()); }

  HVector build(const Eigen::VectorXd& p) const {
    std::vector<std::complex<double>> coords(2 * r.n);
    for (size_t i = 0; i < free_idx.size(); ++i)
      coords[free_idx[i]] = {p(2 * i), p(2 * i + 1)};
    for (const auto& rel : r.relations)
      coords[rel.target] = rel.coeff * coords[rel.source];
    HVector u(r.n);
    for (int i = 0; i < r.n; ++i)
      u[i] = Quaternion::from_complex_pair(coords[i], coords[i + r.n]);
    return u;
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& p) const {
    HVector u = build(p);
    const double nrm = std::sqrt(u.norm2());
    const int krows = theta ? 3 : 2;
    Eigen::VectorXd f(9 + 3 * krows);
    if (nrm < 1e-12) {
      f.setOnes();
      return f;
    }
    for (auto& q : u.entries) q = q * (1.0 / nrm);
    const Sp1Moment s = mu(u);
    f(0) = s.mi.i; f(1) = s.mi.j; f(2) = s.mi.k;
    f(3) = s.mj.i; f(4) = s.mj.j; f(5) = s.mj.k;
    f(6) = s.mk.i; f(7) = s.mk.j; f(8) = s.mk.k;
    const TorusMoment tm = theta ? nu_theta(*theta, u) : nu_omega(*omega, u);
    for (int row = 0; row < krows; ++row)
      for (int c = 0; c < 3; ++c) f(9 + 3 * row + c) = tm.rows[row][c];
    return f;
  }
};

SolveReport levenberg_marquardt(const Problem& prob, const SolveOptions& opts) {
  const int np = prob.param_count();
  std::uint64_t state = opts.seed ^ 0x51ab4cb9e35d1c27ULL;
  Eigen::VectorXd p(np);
  for (int i = 0; i < np; ++i) p(i) = 2 * unit_double(state) - 1;
  // keep the iterate on the sphere: u is linear in p, so rescale p
  const auto renorm = [&prob](Eigen::VectorXd& v) {
    const double nrm = std::sqrt(prob.build(v).norm2());
    if (nrm > 1e-12) v /= nrm;
  };
  renorm(p);

  Eigen::VectorXd f = prob.residual(p);
  double cost = f.squaredNorm();
  double lambda = 1e-3;
  SolveReport rep;
  const double h = 1e-7;

  for (rep.iterations = 0; rep.iterations < opts.max_iter; ++rep.iterations) {
    if (std::sqrt(cost) < opts.tol) {
      rep.converged = true;
      break;
    }
    Eigen::MatrixXd jac(f.size(), np);
    for (int c = 0; c < np; ++c) {
      Eigen::VectorXd pl = p, pr = p;
      pl(c) -= h;
      pr(c) += h;
      jac.col(c) = (prob.residual(pr) - prob.residual(pl)) / (2 * h);
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtf = jac.transpose() * f;
    bool accepted = false;
    while (lambda < 1e14) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += lambda;
      const Eigen::VectorXd step = a.ldlt().solve(-jtf);
      Eigen::VectorXd pn = p + step;
      renorm(pn);
      const Eigen::VectorXd fn = prob.residual(pn);
      const double cn = fn.squaredNorm();
      if (cn < cost) {
        p = pn;
        f = fn;
        cost = cn;
        lambda = std::max(lambda / 10, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 10;
    }
    if (!accepted) break;
  }
  if (std::sqrt(cost) < opts.tol) rep.converged = true;

  HVector u = prob.build(p);
  const double nrm = std::sqrt(u.norm2());
  if (nrm > 1e-12)
    for (auto& q : u.entries) q = q * (1.0 / nrm);
  rep.point = u;
  rep.residual = std::sqrt(cost);
  const RealMatrixView view = real_matrix_rank(u);
  rep.rank = view.rank;
  rep.min_pair_norm = view.min_pair_norm;
  return rep;
}

}  // namespace

SolveReport find_point(const ThetaMatrix& t, const SolveOptions& opts) {
  Problem prob(Restriction::trivial(8));
  prob.theta = &t;
  return levenberg_marquardt(prob, opts);
}

SolveReport find_point_omega(const OmegaMatrix& o, const SolveOptions& opts) {
  Problem prob(Restriction::trivial(7));
  prob.omega = &o;
  return levenberg_marquardt(prob, opts);
}

SolveReport find_point_restricted(const ThetaMatrix& t, const Restriction& r,
                                  const SolveOptions& opts) {
  if (r.n != 8) throw DimensionMismatch("restricted solve needs n = 8");
  Problem prob(r);
  prob.theta = &t;
  return levenberg_marquardt(prob, opts);
}

double residual_norm(const ThetaMatrix& t, const HVector& u) {
  return std::sqrt(mu(u).norm2() + nu_theta(t, u).norm2());
}

double residual_norm(const OmegaMatrix& o, const HVector& u) {
  return std::sqrt(mu(u).norm2() + nu_omega(o, u).norm2());
}

}  // namespace orbiquot
