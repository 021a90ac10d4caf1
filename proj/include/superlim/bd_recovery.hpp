#pragma once

#include <array>
#include <optional>

#include "superlim/catalog.hpp"
#include "superlim/root_invariants.hpp"
#include "superlim/sextic.hpp"

namespace superlim {

/// Point values of the ten structure functions {Q, S, R}.
struct QSRPoint {
  cplx Q123{}, S1{}, S2{}, S3{}, R12_1{}, R12_2{}, R13_1{}, R13_3{}, R23_2{}, R23_3{};

  std::array<cplx, 10> to_array() const { return {Q123, S1, S2, S3, R12_1, R12_2, R13_1, R13_3, R23_2, R23_3}; }
  static QSRPoint from_array(const std::array<cplx, 10>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
  }
  static constexpr std::array<const char*, 10> kNames{"Q123",  "S1",    "S2",    "S3",    "R12_1",
                                                      "R12_2", "R13_1", "R13_3", "R23_2", "R23_3"};
};

struct WeightVector {
  cplx Y3{}, Y2{}, Y1{}, Y0{}, Ym1{}, Ym2{}, Ym3{};
};

/// Columns: V_ee, V_1, V_2, V_3. Rows: 11, 22, 33, 12, 13, 23.
using BDMatrix = std::array<std::array<cplx, 4>, 6>;
BDMatrix bd_matrix(const QSRPoint& u);

enum class RecoveryMode { Flat, Conformal };

struct Recovery {
  QSRPoint u;
  /// Conformal mode only: the six A0 values multiplying V (11, 22, 33, 12, 13, 23).
  std::array<cplx, 6> a0{};
  double residual = 0.0;
  RecoveryMode mode = RecoveryMode::Flat;
  int rows = 0;
  int cols = 0;
};

inline constexpr double kRankTol = 1e-8;

/// Least-squares solve of the Bertrand-Darboux identity over the parameter
/// directions at x0. Systems with a constant e-direction use the flat 24x10
/// system from a..d; SW uses all five directions plus six unknown A0 terms
/// (30x16). Throws RankDeficient or SingularPoint.
Recovery recover_qsr(SystemId id, const Point3& x0);
Recovery recover_qsr(SystemId id, const Point3& x0, RecoveryMode mode);

WeightVector weight_vectors(const QSRPoint& u);
/// c_{6-j} = (-1)^j sqrt(C(6,j)) Y_{3-j}.
Sextic assemble_q(const WeightVector& y);

struct Match {
  cplx scalar{};
  double defect = 0.0;
};

/// s minimizing |p - s q|_2 and the relative defect |p - s q| / |p|. Two zero
/// polynomials match with s = 1; a zero against a nonzero has defect 1.
Match projective_fit(const Sextic& p, const Sextic& q);
/// Throws NoMatch when the defect exceeds tol.
cplx projective_match(const Sextic& p, const Sextic& q, double tol);

/// assemble_q(weight_vectors(recover_qsr(id, x0).u)).
Sextic recovered_covariant(SystemId id, const Point3& x0);

struct RecoveryReport {
  SystemId id;
  Point3 point;
  Recovery recovery;
  Sextic assembled;
  /// Present when the catalog has a closed form at the point.
  std::optional<Sextic> printed;
  Match match;
};

RecoveryReport recovery_report(SystemId id, const Point3& x0);

/// Generic complex point off every singular locus; used to read off the
/// class of a system rather than of one special point.
inline const Point3 kProbePoint{cplx{0.37, 0.11}, cplx{0.59, -0.07}, cplx{0.83, 0.05}};

/// Class label of a system from its recovered covariant at kProbePoint.
/// [111111] non-c is split into a (SW) and b (I) by catalog identity; no
/// pointwise invariant for that split is implemented.
StructureLabel system_label(SystemId id, const ClassifyOptions& opts = {});

/// Label of the catalog representative: partition and [3111] tag from the
/// representative sextic itself, the [111111] tag from system_label (the
/// representatives of I and SW sit at symmetric points where the multi-ratio
/// condition happens to hold).
StructureLabel catalog_label(SystemId id, const ClassifyOptions& opts = {});

}  // namespace superlim
