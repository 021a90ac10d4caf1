#pragma once

#include <array>
#include <string>
#include <vector>

#include "superlim/sextic.hpp"

namespace superlim {

enum class SubTag { None, A, B, C, NonC, Undetermined };

std::string_view to_string(SubTag tag);

struct StructureLabel {
  /// Decreasing multiplicities; empty for the zero sextic (class [0]).
  std::vector<int> partition;
  SubTag sub = SubTag::None;

  /// "[0]", "[51]", "[3111b]", "[111111c]", "[111111 non-c]", ...
  std::string str() const;
  friend bool operator==(const StructureLabel&, const StructureLabel&) = default;
};

/// (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)), evaluated with homogeneous
/// determinants so any one point may be infinity.
cplx cross_ratio(const RiemannPoint& z1, const RiemannPoint& z2, const RiemannPoint& z3, const RiemannPoint& z4);

/// The distinct values among the six reorderings of a cross-ratio.
std::vector<cplx> cr_orbit(cplx lambda);

/// [3111] with an equianharmonic quadruple of distinct roots.
bool is_3111b(const std::vector<RootCluster>& clusters, double tol = 1e-8);

/// (z1-z2)(z3-z4)(z5-z6) / ((z2-z3)(z4-z5)(z6-z1)).
cplx multi_ratio(const std::array<RiemannPoint, 6>& z);

struct MultiRatioOutcome {
  bool satisfied = false;
  /// Orderings (out of 720) with |mr + 1| <= tol.
  int orderings = 0;
  double min_defect = 0.0;
};

inline constexpr double kMultiRatioTol = 1e-8;

/// root_error[i] is an absolute uncertainty on z[i]; each ordering's allowance
/// is tol plus the first-order effect of those errors on the multi-ratio.
MultiRatioOutcome multi_ratio_search(const std::array<RiemannPoint, 6>& z, double tol = kMultiRatioTol,
                                     const std::array<double, 6>& root_error = {});
bool multi_ratio_test(const std::array<RiemannPoint, 6>& z, double tol = kMultiRatioTol);

/// Outcome of the brute-force run on the roots of q_IV(0,1,1), checked in so
/// that classify does not depend on re-running it. tests/ recomputes it.
inline constexpr MultiRatioOutcome kMultiRatioCalibration{true, 96, 0.0};

struct ClassifyOptions {
  RootOptions roots{};
  double multi_ratio_tol = kMultiRatioTol;
  double cross_ratio_tol = 1e-8;
  /// Relative rounding level assumed on the coefficients of q. classify turns
  /// it into per-root uncertainties (sum |c_k||z|^k / |q'(z)|) for the
  /// multi-ratio test, so badly conditioned images of a [111111c] sextic under
  /// a strong Moebius map are not misread as non-c.
  double coefficient_noise = 1e-14;
};

/// Pointwise classification of one sextic. [111111] gets c or non-c from the
/// multi-ratio test (undetermined if the calibration had failed); a and b of
/// [111111] are not separated here.
StructureLabel classify(const Sextic& q, const ClassifyOptions& opts = {});
StructureLabel classify_clusters(const std::vector<RootCluster>& clusters, const ClassifyOptions& opts = {});

}  // namespace superlim
