#include "superlim/bd_recovery.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "superlim/error.hpp"

namespace superlim {

BDMatrix bd_matrix(const QSRPoint& u) {
  const auto& [Q, S1, S2, S3, R121, R122, R131, R133, R232, R233] = u;
  return {{
      {1.0, -4.0 * S1 - R122 - R133, 2.0 * S2 + R121, 2.0 * S3 + R131},
      {1.0, 2.0 * S1 + R122, -4.0 * S2 - R121 - R233, 2.0 * S3 + R232},
      {1.0, 2.0 * S1 + R133, 2.0 * S2 + R233, -4.0 * S3 - R131 - R232},
      {0.0, R121 - 3.0 * S2, R122 - 3.0 * S1, Q},
      {0.0, R131 - 3.0 * S3, Q, R133 - 3.0 * S1},
      {0.0, Q, R232 - 3.0 * S3, R233 - 3.0 * S2},
  }};
}

Recovery recover_qsr(SystemId id, const Point3& x0) {
  return recover_qsr(id, x0, has_constant_e(id) ? RecoveryMode::Flat : RecoveryMode::Conformal);
}

Recovery recover_qsr(SystemId id, const Point3& x0, RecoveryMode mode) {
  const bool conformal = mode == RecoveryMode::Conformal;
  const int directions = conformal ? 5 : 4;
  const int cols = conformal ? 16 : 10;
  const int rows = 6 * directions;

  // M(u) is linear in u: tabulate it on unit vectors once.
  std::array<BDMatrix, 10> unit{};
  for (std::size_t j = 0; j < 10; ++j) {
    std::array<cplx, 10> e{};
    e[j] = 1.0;
    unit[j] = bd_matrix(QSRPoint::from_array(e));
  }

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, cols);
  Eigen::VectorXcd b(rows);
  const std::array<cplx, 6> col1{1.0, 1.0, 1.0, 0.0, 0.0, 0.0};
  for (int dir = 0; dir < directions; ++dir) {
    Params p{};
    p[static_cast<std::size_t>(dir)] = 1.0;
    const PotentialDerivs d = potential_derivs(id, p, x0);
    for (std::size_t r = 0; r < 6; ++r) {
      const int row = 6 * dir + static_cast<int>(r);
      b(row) = d.hess[r] - col1[r] * d.vee;
      for (std::size_t j = 0; j < 10; ++j) {
        cplx coeff{};
        for (std::size_t c = 0; c < 3; ++c) coeff += unit[j][r][c + 1] * d.grad[c];
        a(row, static_cast<int>(j)) = coeff;
      }
      if (conformal) a(row, 10 + static_cast<int>(r)) = d.value;
    }
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  qr.setThreshold(kRankTol);
  if (qr.rank() < cols) {
    throw Error(ErrorKind::RankDeficient, "recovery system for " + std::string(name(id)) + " has rank " +
                                              std::to_string(qr.rank()) + " < " + std::to_string(cols));
  }
  const Eigen::VectorXcd x = qr.solve(b);

  Recovery out;
  out.mode = mode;
  out.rows = rows;
  out.cols = cols;
  std::array<cplx, 10> u{};
  for (std::size_t j = 0; j < 10; ++j) u[j] = x(static_cast<int>(j));
  out.u = QSRPoint::from_array(u);
  if (conformal) {
    for (std::size_t r = 0; r < 6; ++r) out.a0[r] = x(10 + static_cast<int>(r));
  }
  out.residual = (a * x - b).cwiseAbs().maxCoeff();
  return out;
}

WeightVector weight_vectors(const QSRPoint& u) {
  const double s6 = std::sqrt(6.0) / 4.0;
  const double s15 = std::sqrt(15.0) / 4.0;
  const double s5 = std::sqrt(5.0) / 2.0;
  WeightVector y;
  const cplx re3 = u.R12_1 + u.R23_3 / 4.0;
  const cplx im3 = u.R12_2 + u.R13_3 / 4.0;
  y.Y3 = re3 + kI * im3;
  y.Ym3 = re3 - kI * im3;
  y.Y2 = s6 * (kI * (u.R13_1 - u.R23_2) - 2.0 * u.Q123);
  y.Ym2 = s6 * (kI * (u.R13_1 - u.R23_2) + 2.0 * u.Q123);
  y.Y1 = s15 * (u.R23_3 - kI * u.R13_3);
  y.Ym1 = s15 * (u.R23_3 + kI * u.R13_3);
  y.Y0 = -kI * s5 * (u.R13_1 + u.R23_2);
  return y;
}

Sextic assemble_q(const WeightVector& y) {
  // Y_{3-j} for j = 0..6.
  const std::array<cplx, 7> ys{y.Y3, y.Y2, y.Y1, y.Y0, y.Ym1, y.Ym2, y.Ym3};
  const std::array<double, 7> binom{1, 6, 15, 20, 15, 6, 1};
  Sextic q;
  for (std::size_t j = 0; j < 7; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    q[6 - j] = sign * std::sqrt(binom[j]) * ys[j];
  }
  return q;
}

Match projective_fit(const Sextic& p, const Sextic& q) {
  const double pn = norm2(p);
  const double qn = norm2(q);
  if (pn == 0.0 && qn == 0.0) return {1.0, 0.0};
  if (pn == 0.0 || qn == 0.0) return {0.0, 1.0};
  cplx dot{};
  for (std::size_t k = 0; k < 7; ++k) dot += std::conj(q[k]) * p[k];
  const cplx s = dot / (qn * qn);
  return {s, norm2(p - s * q) / pn};
}

cplx projective_match(const Sextic& p, const Sextic& q, double tol) {
  if (is_zero(p) || is_zero(q)) throw Error(ErrorKind::NoMatch, "projective match needs nonzero sextics");
  const Match m = projective_fit(p, q);
  if (m.defect > tol) {
    throw Error(ErrorKind::NoMatch, "relative defect " + std::to_string(m.defect) + " exceeds tolerance");
  }
  return m.scalar;
}

Sextic recovered_covariant(SystemId id, const Point3& x0) {
  return assemble_q(weight_vectors(recover_qsr(id, x0).u));
}

RecoveryReport recovery_report(SystemId id, const Point3& x0) {
  RecoveryReport rep{id, x0, recover_qsr(id, x0), {}, std::nullopt, {}};
  rep.assembled = assemble_q(weight_vectors(rep.recovery.u));
  try {
    rep.printed = covariant_at(id, x0);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedPoint) throw;
  }
  if (rep.printed) rep.match = projective_fit(*rep.printed, rep.assembled);
  return rep;
}

StructureLabel system_label(SystemId id, const ClassifyOptions& opts) {
  StructureLabel label = classify(recovered_covariant(id, kProbePoint), opts);
  if (label.sub == SubTag::NonC) {
    if (id == SystemId::SW) label.sub = SubTag::A;
    if (id == SystemId::I) label.sub = SubTag::B;
  }
  return label;
}

StructureLabel catalog_label(SystemId id, const ClassifyOptions& opts) {
  StructureLabel label = classify(representative(id), opts);
  if (label.partition == std::vector<int>(6, 1)) {
    const StructureLabel generic = system_label(id, opts);
    if (generic.partition == label.partition) label.sub = generic.sub;
  }
  return label;
}

}  // namespace superlim
