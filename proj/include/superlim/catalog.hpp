#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "superlim/eps_series.hpp"
#include "superlim/jet.hpp"
#include "superlim/mobius.hpp"
#include "superlim/sextic.hpp"

namespace superlim {

enum class SystemId { O, A, OO, VII, VI, V, IV, III, II, I, SW };

inline constexpr std::array<SystemId, 11> kAllSystems{SystemId::O,  SystemId::A,   SystemId::OO, SystemId::VII,
                                                      SystemId::VI, SystemId::V,   SystemId::IV, SystemId::III,
                                                      SystemId::II, SystemId::I,   SystemId::SW};

std::string_view name(SystemId id);
/// Accepts the bare name ("VII") or a "V_"-prefixed form; throws UnknownSystem.
SystemId parse_system(std::string_view text);
/// Bracket class, e.g. "[3111b]". III and V share "[411]".
std::string_view class_label(SystemId id);

using Point3 = std::array<cplx, 3>;
using Params = std::array<cplx, 5>;

/// Denominators closer to zero than this raise SingularPoint.
inline constexpr double kSingularTol = 1e-8;

/// The five functions multiplying a, b, c, d, e. Works over cplx, Jet2 and
/// EpsSeries; `trunc` only matters for series inverses.
template <class T>
std::array<T, 5> potential_basis(SystemId id, const std::array<T, 3>& x, int trunc = EpsSeries::kDefaultTrunc);

cplx potential_eval(SystemId id, const Params& p, const Point3& x);

struct PotentialDerivs {
  cplx value{};
  std::array<cplx, 3> grad{};
  /// 11, 22, 33, 12, 13, 23.
  std::array<cplx, 6> hess{};
  cplx vee{};
};

PotentialDerivs potential_derivs(SystemId id, const Params& p, const Point3& x);

/// Denominators that must stay away from zero, e.g. {"x1+i*x2", "x3"}.
std::vector<std::string> singular_locus(SystemId id);
/// The regular point used for the system throughout the limits.
Point3 default_point(SystemId id);
/// False only for SW, whose e-direction is 1/(r^2-1)^2 rather than 1.
bool has_constant_e(SystemId id);

/// Closed-form covariant sextic at x0. II, IV and I are rational in x0; SW
/// needs x0 = (eta, eta, eta); the rest are tabulated at isolated points and
/// throw UnsupportedPoint elsewhere.
template <class T>
BasicSextic<T> covariant_poly(SystemId id, const std::array<T, 3>& x0, int trunc = EpsSeries::kDefaultTrunc);

Sextic covariant_at(SystemId id, const Point3& x0);
/// covariant_at(id, default_point(id)).
Sextic representative(SystemId id);

/// SW's diagonal family exactly as displayed for the SW -> I limit (with the
/// (1 - 9 eta^4) denominator). The recovered covariant is -1/eta times this;
/// covariant_poly returns the recovered normalization.
template <class T>
BasicSextic<T> sw_display(const T& eta, int trunc = EpsSeries::kDefaultTrunc);

struct ContractionSpec {
  std::string name;
  SystemId source;
  SystemId target;
  std::array<AngleSpec, 3> angles{};
  ScaleSpec scale{};
  std::array<std::string, 3> x0_text;
  std::array<EpsSeries, 3> (*x0_series)(const EpsSeries& eps, int trunc) = nullptr;
  std::array<cplx, 3> (*x0_numeric)(const cplx& eps, int trunc) = nullptr;
  Point3 y0{};
  std::string source_text;
  std::string target_text;
  Sextic target_q;
};

/// The 14 records in diagram order (13 arrows, the geometric I -> II variant
/// right after I -> II).
const std::vector<ContractionSpec>& contraction_specs();
/// Accepts "VII-to-A", "VII->A" or "VII→A"; throws UnknownContraction.
const ContractionSpec& contraction_spec(std::string_view name);

}  // namespace superlim
