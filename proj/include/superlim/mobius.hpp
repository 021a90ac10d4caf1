#pragma once

#include <array>

#include "superlim/eps_series.hpp"
#include "superlim/error.hpp"
#include "superlim/sextic.hpp"

namespace superlim {

/// [[a, b], [c, d]] acting on binary sextics.
template <class T>
struct BasicGL2 {
  T a{1.0}, b{}, c{}, d{1.0};
};

using GL2Element = BasicGL2<EpsSeries>;
using GL2Numeric = BasicGL2<cplx>;

/// t = theta + i k ln(eps). Only 6k integral is representable, since
/// e^{it/2} = e^{i theta/2} eps^{-k/2} has to be a power of eps^(1/12).
struct AngleSpec {
  cplx theta{};
  Rational k{};

  bool is_singular() const { return k.num != 0; }
  /// The angle at a concrete eps (principal log).
  cplx at(double eps) const { return theta + kI * k.value() * std::log(eps); }
};

/// c(eps) = coeff * eps^p.
struct ScaleSpec {
  cplx coeff{1.0};
  Rational p{};

  EpsSeries series() const { return EpsSeries::eps_power(coeff, p); }
  cplx at(double eps) const { return coeff * std::pow(eps, p.value()); }
};

template <class T>
BasicGL2<T> operator*(const BasicGL2<T>& m, const BasicGL2<T>& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}

template <class T>
T det(const BasicGL2<T>& m) {
  return m.a * m.d - m.b * m.c;
}

inline bool vanishes(cplx x) { return x == cplx{}; }
// A zero that is only known up to truncation still carries information.
inline bool vanishes(const EpsSeries& x) { return x.is_zero() && x.is_exact(); }

/// rho(R_axis(t)) in the half-angle form. Singular angles are accepted on
/// every axis: cos and sin become two-term series in delta.
GL2Element rot_matrix(int axis, const AngleSpec& t);
/// The same matrix at a concrete eps.
GL2Numeric rot_matrix_at(int axis, const AngleSpec& t, double eps);
/// rho(R_axis(t)) for an ordinary (eps-free) complex angle.
GL2Numeric rot_matrix(int axis, cplx t);

GL2Numeric evaluate(const GL2Element& m, double eps);

/// (c z + d)^6 q((a z + b)/(c z + d)) expanded as a polynomial identity.
/// This is a right action: act(M1, act(M2, q)) == act(M2 * M1, q).
template <class T>
BasicSextic<T> act(const BasicGL2<T>& m, const BasicSextic<T>& q) {
  if (vanishes(det(m))) throw Error(ErrorKind::SingularMatrix, "determinant vanishes");
  // num[k], den[k]: coefficient lists of (a z + b)^k and (c z + d)^k.
  std::array<std::array<T, 7>, 7> num{}, den{};
  num[0][0] = T(1.0);
  den[0][0] = T(1.0);
  for (std::size_t k = 1; k < 7; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      T nv = num[k - 1][j] * m.b;
      T dv = den[k - 1][j] * m.d;
      if (j > 0) {
        nv += num[k - 1][j - 1] * m.a;
        dv += den[k - 1][j - 1] * m.c;
      }
      num[k][j] = nv;
      den[k][j] = dv;
    }
  }
  BasicSextic<T> out;
  for (std::size_t k = 0; k < 7; ++k) {
    if (vanishes(q[k])) continue;
    for (std::size_t i = 0; i <= k; ++i) {
      if (vanishes(num[k][i])) continue;
      const T scaled = q[k] * num[k][i];
      for (std::size_t j = 0; j <= 6 - k; ++j) {
        if (!vanishes(den[6 - k][j])) out[i + j] += scaled * den[6 - k][j];
      }
    }
  }
  return out;
}

/// Multiplies every coefficient by c(eps)^{-1}; same as acting by
/// diag(c^{-1/6}, c^{-1/6}) without picking a sixth root.
EpsSextic scale_action(const ScaleSpec& s, const EpsSextic& q);

/// Root image a -> (d a - b)/(-c a + a_) with projective infinity.
RiemannPoint transform_root(const GL2Numeric& m, const RiemannPoint& r);

using Vec3 = std::array<double, 3>;
/// Unit-sphere image; infinity goes to the north pole (0, 0, 1).
Vec3 stereographic(cplx z);
Vec3 stereographic(const RiemannPoint& p);

using Mat3 = std::array<std::array<cplx, 3>, 3>;
Mat3 so3_matrix(int axis, cplx angle);
/// R_axis(t) over the delta-series ring (singular angles allowed).
std::array<std::array<EpsSeries, 3>, 3> so3_matrix(int axis, const AngleSpec& t);

}  // namespace superlim
