#include "superlim/mobius.hpp"

#include <cmath>

namespace superlim {
namespace {

void check_axis(int axis) {
  if (axis < 1 || axis > 3) throw Error(ErrorKind::BadAngle, "axis must be 1, 2 or 3");
}

// e^{it/2} and e^{-it/2} as delta-monomials.
std::pair<EpsSeries, EpsSeries> half_exponentials(const AngleSpec& t) {
  if (!t.k.scales_to_integer(6)) {
    throw Error(ErrorKind::BadAngle, "i ln(eps) coefficient must be a multiple of 1/6");
  }
  const int e = static_cast<int>(t.k.times(6));
  const cplx phase = std::exp(kI * t.theta / 2.0);
  return {EpsSeries::monomial(phase, -e), EpsSeries::monomial(1.0 / phase, e)};
}

template <class T>
BasicGL2<T> from_half(int axis, const T& ep, const T& em) {
  check_axis(axis);
  const T cos_h = (ep + em) * T(cplx{0.5});
  const T sin_h = (ep - em) * T(cplx{0.0, -0.5});
  switch (axis) {
    case 1:
      return {cos_h, T(-kI) * sin_h, T(-kI) * sin_h, cos_h};
    case 2:
      return {cos_h, -sin_h, sin_h, cos_h};
    default:
      return {ep, T{}, T{}, em};
  }
}

template <class T>
std::array<std::array<T, 3>, 3> so3_from(int axis, const T& cs, const T& sn) {
  check_axis(axis);
  const T one(1.0), zero{};
  switch (axis) {
    case 1:
      return {{{one, zero, zero}, {zero, cs, -sn}, {zero, sn, cs}}};
    case 2:
      return {{{cs, zero, sn}, {zero, one, zero}, {-sn, zero, cs}}};
    default:
      return {{{cs, -sn, zero}, {sn, cs, zero}, {zero, zero, one}}};
  }
}

}  // namespace

GL2Element rot_matrix(int axis, const AngleSpec& t) {
  const auto [ep, em] = half_exponentials(t);
  return from_half(axis, ep, em);
}

GL2Numeric rot_matrix_at(int axis, const AngleSpec& t, double eps) {
  return rot_matrix(axis, t.at(eps));
}

GL2Numeric rot_matrix(int axis, cplx t) {
  const cplx ep = std::exp(kI * t / 2.0);
  return from_half(axis, ep, 1.0 / ep);
}

GL2Numeric evaluate(const GL2Element& m, double eps) {
  return {m.a.eval_eps(eps), m.b.eval_eps(eps), m.c.eval_eps(eps), m.d.eval_eps(eps)};
}

EpsSextic scale_action(const ScaleSpec& s, const EpsSextic& q) {
  if (s.coeff == cplx{}) throw Error(ErrorKind::SingularMatrix, "zero scale");
  const EpsSeries inv = series_inv(s.series());
  EpsSextic out;
  for (std::size_t k = 0; k < 7; ++k) out[k] = q[k] * inv;
  return out;
}

RiemannPoint transform_root(const GL2Numeric& m, const RiemannPoint& r) {
  // Homogeneous (num : den) image of (r : 1) or (1 : 0).
  cplx num, den;
  if (r.infinite) {
    num = m.d;
    den = -m.c;
  } else {
    num = m.d * r.value - m.b;
    den = -m.c * r.value + m.a;
  }
  if (den == cplx{}) return RiemannPoint::infinity();
  return RiemannPoint::finite(num / den);
}

Vec3 stereographic(cplx z) {
  const double x = z.real(), y = z.imag();
  const double n = 1.0 + x * x + y * y;
  return {2.0 * x / n, 2.0 * y / n, (x * x + y * y - 1.0) / n};
}

Vec3 stereographic(const RiemannPoint& p) {
  if (p.infinite) return {0.0, 0.0, 1.0};
  return stereographic(p.value);
}

Mat3 so3_matrix(int axis, cplx angle) { return so3_from(axis, std::cos(angle), std::sin(angle)); }

std::array<std::array<EpsSeries, 3>, 3> so3_matrix(int axis, const AngleSpec& t) {
  const auto [ep, em] = half_exponentials(t);
  const EpsSeries e2 = ep * ep, em2 = em * em;
  return so3_from(axis, (e2 + em2) * EpsSeries(0.5), (e2 - em2) * EpsSeries(cplx{0.0, -0.5}));
}

}  // namespace superlim
