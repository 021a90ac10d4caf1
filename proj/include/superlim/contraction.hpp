#pragma once

#include <string>
#include <vector>

#include "superlim/catalog.hpp"
#include "superlim/sextic.hpp"

namespace superlim {

enum class ContractionStatus { Pass, Fail, Divergent, Incomplete };

std::string_view to_string(ContractionStatus s);

struct ContractionOptions {
  /// Series inverses and the source covariant are expanded to delta^trunc.
  int trunc = EpsSeries::kDefaultTrunc;
  /// Limit coefficients below this modulus count as zero.
  double zero_tol = 1e-9;
  /// Relative projective defect accepted as a match.
  double match_tol = 1e-10;
};

struct ContractionReport {
  std::string name;
  SystemId source = SystemId::O;
  SystemId target = SystemId::O;
  /// After the rotations and the scaling, before eps -> 0.
  EpsSextic intermediate;
  Sextic limit;
  Sextic target_q;
  cplx match_scalar{};
  double defect = 1.0;
  ContractionStatus status = ContractionStatus::Fail;
  /// Error text for divergent or incomplete runs.
  std::string message;

  bool passed() const { return status == ContractionStatus::Pass; }
};

/// c^{-1} act(rho(R1(t1)) rho(R2(t2)) rho(R3(t3)), q_source(x0(eps))).
EpsSextic contraction_intermediate(const ContractionSpec& spec, const ContractionOptions& opts = {});
/// The same pipeline in plain complex arithmetic at one eps.
Sextic numeric_intermediate(const ContractionSpec& spec, double eps);
/// Largest coefficient gap between numeric_intermediate and the series
/// partial sum at eps, relative to max(1, |series value|).
double series_numeric_gap(const ContractionSpec& spec, double eps, const ContractionOptions& opts = {});

ContractionReport run_contraction(const ContractionSpec& spec, const ContractionOptions& opts = {});
/// All 14 records, run concurrently, returned in catalog order.
std::vector<ContractionReport> run_all(const ContractionOptions& opts = {});

struct PotentialLimitReport {
  std::string name;
  std::array<Rational, 5> rescaling{};
  std::vector<double> eps_samples;
  /// Max over the grid of |V_hat - V_target| per eps sample.
  std::vector<double> deviations;
  /// deviations[i] / deviations[i+1].
  std::vector<double> ratios;
  /// Deviation of the exact eps -> 0 limit (infinite if it diverges).
  double exact_deviation = 0.0;
  bool passed = false;
};

/// V_hat(y) = c^{-2} sum_k eps^{-r_k} phi_k(x(y)) with the inverse of
/// y = c R3 R2 R1 (x - x0) + y0, compared with the target potential at unit
/// parameters. Passes when every ratio lies in [5, 20] and the exact limit
/// is within 1e-12.
PotentialLimitReport potential_limit_check(std::string_view name, const std::array<Rational, 5>& rescaling,
                                           const std::vector<double>& eps_samples, const std::vector<Point3>& grid);

/// n^3 grid on [lo, hi]^3.
std::vector<Point3> cube_grid(int n, double lo, double hi);

/// The limiting diagram: ten class nodes, a key node, thirteen arrows.
std::string diagram_dot();

}  // namespace superlim
