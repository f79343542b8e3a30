#include "quatmoment.hpp"

#include <Eigen/Dense>

namespace orbiquot {

Sp1Moment mu(const HVector& u) {
  Sp1Moment m;
  for (const auto& q : u.entries) {
    const Quaternion c = q.conj();
    m.mi = m.mi + c * kQuatI * q;
    m.mj = m.mj + c * kQuatJ * q;
    m.mk = m.mk + c * kQuatK * q;
  }
  return m;
}

namespace {

// x_a = conj(u_first) u_second - conj(u_second) u_first, an imaginary
// quaternion returned as its (i,j,k) coefficients.
std::array<double, 3> pair_commutator(const Quaternion& a,
                                      const Quaternion& b) {
  const Quaternion x = a.conj() * b - b.conj() * a;
  return {x.i, x.j, x.k};
}

TorusMoment weighted_pairs(const HVector& u,
                           const std::vector<const long*>& weight_rows,
                           int npairs) {
  TorusMoment out;
  out.rows.assign(weight_rows.size(), {0, 0, 0});
  for (int a = 0; a < npairs; ++a) {
    const auto [i1, i2] = u.pair_indices(a);
    const auto x = pair_commutator(u[i1], u[i2]);
    for (size_t r = 0; r < weight_rows.size(); ++r) {
      const double w = static_cast<double>(weight_rows[r][a]);
      for (int c = 0; c < 3; ++c) out.rows[r][c] += w * x[c];
    }
  }
  return out;
}

}  // namespace

TorusMoment nu_theta(const ThetaMatrix& t, const HVector& u) {
  if (u.size() != 8) throw DimensionMismatch("nu_theta needs 8 quaternions");
  return weighted_pairs(u, {t.p.data(), t.q.data(), t.l.data()}, 4);
}

TorusMoment nu_omega(const OmegaMatrix& o, const HVector& u) {
  if (u.size() != 7) throw DimensionMismatch("nu_omega needs 7 quaternions");
  return weighted_pairs(u, {o.p.data(), o.q.data()}, 3);
}

namespace {

HVector apply_blocks(const GroupElement& g, const HVector& u,
                     const std::vector<double>& angles) {
  HVector out = u;
  const int npairs = u.pair_count();
  for (int a = 0; a < npairs; ++a) {
    const auto [i1, i2] = u.pair_indices(a);
    const double ca = std::cos(angles[a]), sa = std::sin(angles[a]);
    out[i1] = ca * u[i1] + sa * u[i2];
    out[i2] = -sa * u[i1] + ca * u[i2];
  }
  const Quaternion rho_q{g.rho.real(), g.rho.imag(), 0, 0};
  for (auto& q : out.entries) q = g.lambda * q * rho_q;
  return out;
}

}  // namespace

HVector apply_action(const GroupElement& g, const ThetaMatrix& t,
                     const HVector& u) {
  if (u.size() != 8) throw DimensionMismatch("Theta action needs 8 quaternions");
  std::vector<double> angles(4);
  for (int a = 0; a < 4; ++a)
    angles[a] = t.p[a] * g.t + t.q[a] * g.s + t.l[a] * g.r;
  return apply_blocks(g, u, angles);
}

HVector apply_action(const GroupElement& g, const OmegaMatrix& o,
                     const HVector& u) {
  if (u.size() != 7) throw DimensionMismatch("Omega action needs 7 quaternions");
  std::vector<double> angles(3);
  for (int a = 0; a < 3; ++a) angles[a] = o.p[a] * g.t + o.q[a] * g.s;
  return apply_blocks(g, u, angles);  // u1 sits outside the blocks
}

RealMatrixView real_matrix_rank(const HVector& u) {
  RealMatrixView view;
  const int n = u.size();
  Eigen::MatrixXd m(4, n);
  for (int c = 0; c < n; ++c) {
    const Quaternion& q = u[c];
    view.columns.push_back({q.r, q.i, q.j, q.k});
    m(0, c) = q.r;
    m(1, c) = q.i;
    m(2, c) = q.j;
    m(3, c) = q.k;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double thresh = 1e-8 * sv(0);
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++view.rank;
  view.min_pair_norm = std::numeric_limits<double>::infinity();
  for (int a = 0; a < u.pair_count(); ++a) {
    const auto [i1, i2] = u.pair_indices(a);
    view.min_pair_norm = std::min(
        view.min_pair_norm, std::sqrt(u[i1].norm2() + u[i2].norm2()));
  }
  return view;
}

HVector j_involution(const HVector& u) {
  HVector out(u.size());
  for (int i = 0; i < u.size(); ++i) {
    const auto z = u[i].z_part();
    const auto w = u[i].w_part();
    out[i] = Quaternion::from_complex_pair(-w, z);
  }
  return out;
}

}  // namespace orbiquot
