#include "superlim/catalog.hpp"

#include <cmath>
#include <map>

#include "superlim/error.hpp"

namespace superlim {
namespace {

double magnitude(const cplx& x) { return std::abs(x); }
double magnitude(const Jet2& x) { return std::abs(x.v); }
// A series is only singular when it vanishes identically.
double magnitude(const EpsSeries& x) { return x.is_zero() ? 0.0 : 1.0; }

template <class T>
T inv_checked(const T& den, const char* what, int trunc) {
  if (magnitude(den) < kSingularTol) {
    throw Error(ErrorKind::SingularPoint, std::string("denominator ") + what + " vanishes");
  }
  return inverse(den, trunc);
}

template <class T>
T k(cplx c) {
  return T(c);
}

bool near(const cplx& x, cplx p) { return std::abs(x - p) <= 1e-12 * std::max(1.0, std::abs(p)); }
bool near(const EpsSeries& x, cplx p) { return series_close(x, EpsSeries(p), 1e-12); }
bool same(const cplx& x, const cplx& y) { return cx_close(x, y, 1e-12); }
bool same(const EpsSeries& x, const EpsSeries& y) { return series_close(x, y, 1e-12); }

template <class T>
bool at_point(const std::array<T, 3>& x, const Point3& p) {
  return near(x[0], p[0]) && near(x[1], p[1]) && near(x[2], p[2]);
}

struct Tabulated {
  SystemId id;
  Point3 point;
  Sextic q;
};

const std::vector<Tabulated>& tabulated() {
  static const std::vector<Tabulated> table = {
      {SystemId::A, {0.0, 0.0, 0.0}, {{0, 0, 0, 0, 0, 0, -kI}}},
      {SystemId::VII, {0.0, 0.0, 0.0}, {{0, -36.0 * kI, 0, 0, 0, 0, 0}}},
      {SystemId::OO, {0.0, 0.0, 1.0}, {{0, 0, 0, 6.0 * kI, 0, 0, 0}}},
      {SystemId::III, {0.0, 1.0, 0.0}, {{-3.0, 0, -9.0, 0, 0, 0, 0}}},
      {SystemId::V, {0.0, 1.0, 0.0}, {{-3.0, 0, 9.0, 0, 0, 0, 0}}},
      {SystemId::VI, {0.0, 0.0, 2.0 * kI}, {{0, 0, 0, 3.0, 0, 0, 3.0 * kI}}},
      {SystemId::VI, {0.0, 0.0, 2.0}, {{0, 0, 0, 3.0 * kI, 0, 0, 3.0 * kI}}},
  };
  return table;
}

template <class T>
BasicSextic<T> lift(const Sextic& q) {
  BasicSextic<T> out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = T(q[i]);
  return out;
}

// (z^2 + s)^3 coefficients for s = +1 or -1.
std::array<double, 7> cube_of_quadratic(double s) {
  return {s * s * s, 0.0, 3.0 * s * s, 0.0, 3.0 * s, 0.0, 1.0};
}

template <class T>
void add_scaled(BasicSextic<T>& q, const T& factor, const std::array<double, 7>& poly) {
  for (std::size_t i = 0; i < 7; ++i) {
    if (poly[i] != 0.0) q[i] += factor * T(cplx{poly[i]});
  }
}

const std::map<std::string, SystemId>& system_names() {
  static const std::map<std::string, SystemId> names = {
      {"O", SystemId::O},   {"A", SystemId::A},     {"OO", SystemId::OO}, {"VII", SystemId::VII},
      {"VI", SystemId::VI}, {"V", SystemId::V},     {"IV", SystemId::IV}, {"III", SystemId::III},
      {"II", SystemId::II}, {"I", SystemId::I},     {"SW", SystemId::SW},
  };
  return names;
}

}  // namespace

std::string_view name(SystemId id) {
  switch (id) {
    case SystemId::O: return "O";
    case SystemId::A: return "A";
    case SystemId::OO: return "OO";
    case SystemId::VII: return "VII";
    case SystemId::VI: return "VI";
    case SystemId::V: return "V";
    case SystemId::IV: return "IV";
    case SystemId::III: return "III";
    case SystemId::II: return "II";
    case SystemId::I: return "I";
    case SystemId::SW: return "SW";
  }
  return "?";
}

SystemId parse_system(std::string_view text) {
  std::string key(text);
  if (key.rfind("V_", 0) == 0) key = key.substr(2);
  const auto it = system_names().find(key);
  if (it == system_names().end()) throw Error(ErrorKind::UnknownSystem, "unknown system '" + std::string(text) + "'");
  return it->second;
}

std::string_view class_label(SystemId id) {
  switch (id) {
    case SystemId::O: return "[0]";
    case SystemId::A: return "[6]";
    case SystemId::OO: return "[33]";
    case SystemId::VII: return "[51]";
    case SystemId::VI: return "[3111b]";
    case SystemId::V: return "[411]";
    case SystemId::IV: return "[111111c]";
    case SystemId::III: return "[411]";
    case SystemId::II: return "[3111a]";
    case SystemId::I: return "[111111b]";
    case SystemId::SW: return "[111111a]";
  }
  return "?";
}

template <class T>
std::array<T, 5> potential_basis(SystemId id, const std::array<T, 3>& x, int trunc) {
  const T& x1 = x[0];
  const T& x2 = x[1];
  const T& x3 = x[2];
  const T one(1.0);
  const T w = x1 + k<T>(kI) * x2;
  const T wb = x1 - k<T>(kI) * x2;
  const T rho2 = x1 * x1 + x2 * x2;
  const T r2 = rho2 + x3 * x3;
  auto inv_sq = [trunc](const T& u, const char* what) {
    const T iu = inv_checked(u, what, trunc);
    return iu * iu;
  };
  switch (id) {
    case SystemId::O:
      return {k<T>(0.5) * r2, x1, x2, x3, one};
    case SystemId::A:
      return {k<T>(0.5) * r2 + k<T>(1.0 / 12.0) * wb * wb * wb, x1 + k<T>(0.25) * wb * wb,
              x2 - k<T>(0.25 * kI) * wb * wb, x3, one};
    case SystemId::OO:
      return {k<T>(4.0) * rho2 + x3 * x3, x1, x2, inv_sq(x3, "x3"), one};
    case SystemId::VII: {
      const T w2 = w * w;
      return {w, k<T>(3.0) * w2 + x3, k<T>(16.0) * w2 * w + wb + k<T>(12.0) * x3 * w,
              k<T>(5.0) * w2 * w2 + r2 + k<T>(6.0) * w2 * x3, one};
    }
    case SystemId::VI:
      return {x3 * x3 - k<T>(2.0) * wb * wb * wb + k<T>(4.0) * rho2, k<T>(2.0) * w - k<T>(3.0) * wb * wb, wb,
              inv_sq(x3, "x3"), one};
    case SystemId::V: {
      const T iw = inv_checked(w, "x1+i*x2", trunc);
      return {rho2 + k<T>(4.0) * x3 * x3, x3, iw * iw, wb * iw * iw * iw, one};
    }
    case SystemId::IV:
      return {k<T>(4.0) * x1 * x1 + x2 * x2 + x3 * x3, x1, inv_sq(x2, "x2"), inv_sq(x3, "x3"), one};
    case SystemId::III: {
      const T iw = inv_checked(w, "x1+i*x2", trunc);
      const T iw2 = iw * iw;
      return {r2, iw2, x3 * iw2 * iw, (rho2 - k<T>(3.0) * x3 * x3) * iw2 * iw2, one};
    }
    case SystemId::II: {
      const T iw = inv_checked(w, "x1+i*x2", trunc);
      return {r2, wb * iw * iw * iw, iw * iw, inv_sq(x3, "x3"), one};
    }
    case SystemId::I:
      return {r2, inv_sq(x1, "x1"), inv_sq(x2, "x2"), inv_sq(x3, "x3"), one};
    case SystemId::SW:
      return {inv_sq(one + r2, "1+r^2"), inv_sq(x1, "x1"), inv_sq(x2, "x2"), inv_sq(x3, "x3"),
              inv_sq(r2 - one, "-1+r^2")};
  }
  throw Error(ErrorKind::UnknownSystem, "unhandled system");
}

template std::array<cplx, 5> potential_basis(SystemId, const std::array<cplx, 3>&, int);
template std::array<Jet2, 5> potential_basis(SystemId, const std::array<Jet2, 3>&, int);
template std::array<EpsSeries, 5> potential_basis(SystemId, const std::array<EpsSeries, 3>&, int);

cplx potential_eval(SystemId id, const Params& p, const Point3& x) {
  const auto basis = potential_basis<cplx>(id, x);
  cplx v{};
  for (std::size_t i = 0; i < 5; ++i) v += p[i] * basis[i];
  return v;
}

PotentialDerivs potential_derivs(SystemId id, const Params& p, const Point3& x) {
  const std::array<Jet2, 3> jx{Jet2::variable(x[0], 0), Jet2::variable(x[1], 1), Jet2::variable(x[2], 2)};
  const auto basis = potential_basis<Jet2>(id, jx);
  Jet2 v;
  for (std::size_t i = 0; i < 5; ++i) v += Jet2(p[i]) * basis[i];
  PotentialDerivs out{v.v, v.g, v.h, (v.h[0] + v.h[1] + v.h[2]) / 3.0};
  return out;
}

std::vector<std::string> singular_locus(SystemId id) {
  switch (id) {
    case SystemId::O:
    case SystemId::A:
    case SystemId::VII:
      return {};
    case SystemId::OO:
    case SystemId::VI:
      return {"x3"};
    case SystemId::V:
    case SystemId::III:
      return {"x1+i*x2"};
    case SystemId::IV:
      return {"x2", "x3"};
    case SystemId::II:
      return {"x1+i*x2", "x3"};
    case SystemId::I:
      return {"x1", "x2", "x3"};
    case SystemId::SW:
      return {"x1", "x2", "x3", "1+r^2", "-1+r^2"};
  }
  return {};
}

Point3 default_point(SystemId id) {
  switch (id) {
    case SystemId::O:
    case SystemId::A:
    case SystemId::VII:
      return {0.0, 0.0, 0.0};
    case SystemId::OO:
      return {0.0, 0.0, 1.0};
    case SystemId::VI:
      return {0.0, 0.0, 2.0};
    case SystemId::V:
    case SystemId::III:
      return {0.0, 1.0, 0.0};
    case SystemId::IV:
      return {0.0, 1.0, 1.0};
    case SystemId::II:
      return {1.0, 0.0, 1.0};
    case SystemId::I:
    case SystemId::SW:
      return {1.0, 1.0, 1.0};
  }
  return {};
}

bool has_constant_e(SystemId id) { return id != SystemId::SW; }

template <class T>
BasicSextic<T> sw_display(const T& eta, int trunc) {
  const T e4 = eta * eta * eta * eta;
  const T one(1.0);
  const T inv_d = inv_checked(one - k<T>(9.0) * e4, "1-9*eta^4", trunc);
  const T m = (one - e4) * inv_d;
  const T n = e4 * inv_d;
  const cplx u{1.0, 1.0};
  BasicSextic<T> q;
  q[0] = k<T>(0.75 * kI * u) * m;
  q[1] = k<T>(36.0) * n;
  q[2] = k<T>(-2.25 * u) * m;
  q[3] = k<T>(-6.0 * kI) * m;
  q[4] = k<T>(2.25 * kI * u) * m;
  q[5] = k<T>(-36.0) * n;
  q[6] = k<T>(-0.75 * u) * m;
  return q;
}

template Sextic sw_display(const cplx&, int);
template EpsSextic sw_display(const EpsSeries&, int);

template <class T>
BasicSextic<T> covariant_poly(SystemId id, const std::array<T, 3>& x0, int trunc) {
  const T& x1 = x0[0];
  const T& x2 = x0[1];
  const T& x3 = x0[2];
  switch (id) {
    case SystemId::O:
      return {};
    case SystemId::II: {
      const T iw = inv_checked(x1 + k<T>(kI) * x2, "x1+i*x2", trunc);
      const T ix3 = inv_checked(x3, "x3", trunc);
      BasicSextic<T> q;
      q[3] = k<T>(6.0 * kI) * ix3;
      q[2] = k<T>(9.0 * kI) * iw;
      q[0] = k<T>(3.0 * kI) * (x1 - k<T>(kI) * x2) * iw * iw;
      return q;
    }
    case SystemId::IV: {
      BasicSextic<T> q;
      q[3] = k<T>(6.0 * kI) * inv_checked(x3, "x3", trunc);
      add_scaled(q, k<T>(0.75) * inv_checked(x2, "x2", trunc), cube_of_quadratic(1.0));
      return q;
    }
    case SystemId::I: {
      BasicSextic<T> q;
      add_scaled(q, k<T>(0.75 * kI) * inv_checked(x1, "x1", trunc), cube_of_quadratic(-1.0));
      add_scaled(q, k<T>(0.75) * inv_checked(x2, "x2", trunc), cube_of_quadratic(1.0));
      q[3] += k<T>(6.0 * kI) * inv_checked(x3, "x3", trunc);
      return q;
    }
    case SystemId::SW: {
      if (!same(x1, x2) || !same(x1, x3)) {
        throw Error(ErrorKind::UnsupportedPoint, "SW covariant is only known on the diagonal x1=x2=x3");
      }
      const T scale = -inv_checked(x1, "x1", trunc);
      BasicSextic<T> q = sw_display(x1, trunc);
      for (auto& c : q.coeffs) c = scale * c;
      return q;
    }
    default:
      break;
  }
  for (const auto& row : tabulated()) {
    if (row.id == id && at_point(x0, row.point)) return lift<T>(row.q);
  }
  throw Error(ErrorKind::UnsupportedPoint,
              "no closed-form covariant for " + std::string(name(id)) + " at this point");
}

template Sextic covariant_poly(SystemId, const std::array<cplx, 3>&, int);
template EpsSextic covariant_poly(SystemId, const std::array<EpsSeries, 3>&, int);

Sextic covariant_at(SystemId id, const Point3& x0) { return covariant_poly<cplx>(id, x0); }

Sextic representative(SystemId id) { return covariant_at(id, default_point(id)); }

namespace {

using SeriesX0 = std::array<EpsSeries, 3> (*)(const EpsSeries&, int);
using NumericX0 = std::array<cplx, 3> (*)(const cplx&, int);

// Each x0(eps) is written once as a generic lambda and converted to both
// function-pointer signatures.
template <class F>
ContractionSpec with_x0(ContractionSpec spec, F f) {
  spec.x0_series = static_cast<SeriesX0>(f);
  spec.x0_numeric = static_cast<NumericX0>(f);
  return spec;
}

template <class T>
std::array<T, 3> constant_point(const Point3& p) {
  return {T(p[0]), T(p[1]), T(p[2])};
}

AngleSpec angle(double theta, Rational k = {}) { return {cplx{theta}, k}; }
AngleSpec log_angle(Rational k) { return {cplx{}, k}; }

Sextic poly(std::array<cplx, 7> c) { return Sextic{c}; }

std::vector<ContractionSpec> build_specs() {
  using S = SystemId;
  const AngleSpec zero{};
  std::vector<ContractionSpec> specs;
  auto origin = [](const auto& e, int) {
    using T = std::decay_t<decltype(e)>;
    return constant_point<T>({0.0, 0.0, 0.0});
  };

  specs.push_back(with_x0(ContractionSpec{"A-to-O", S::A, S::O, {zero, zero, zero}, {1.0, {-1}},
                                          {"0", "0", "0"}, nullptr, nullptr, {0.0, 0.0, 0.0},
                                          "-i z^6", "0", Sextic{}},
                          origin));
  specs.push_back(with_x0(ContractionSpec{"VII-to-A", S::VII, S::A, {zero, angle(kPi / 2), log_angle({1})},
                                          {4.5, {-3}}, {"0", "0", "0"}, nullptr, nullptr, {0.0, 0.0, 0.0},
                                          "-36i z", "-i z^6", poly({0, 0, 0, 0, 0, 0, -kI})},
                          origin));
  specs.push_back(with_x0(ContractionSpec{"OO-to-A", S::OO, S::A, {log_angle({1}), angle(-kPi / 2), zero},
                                          {0.75, {-3}}, {"0", "0", "1"}, nullptr, nullptr, {0.0, 0.0, 0.0},
                                          "6i z^3", "-i z^6", poly({0, 0, 0, 0, 0, 0, -kI})},
                          [](const auto& e, int) {
                            using T = std::decay_t<decltype(e)>;
                            return constant_point<T>({0.0, 0.0, 1.0});
                          }));
  specs.push_back(with_x0(
      ContractionSpec{"III-to-VII", S::III, S::VII, {angle(-2.0 * kPi / 3), angle(kPi), log_angle({-1})},
                      {-9.0 / (32.0 * std::sqrt(3.0)), {-2}}, {"0", "1", "0"}, nullptr, nullptr,
                      {0.0, 0.0, 0.0}, "-3(1+3z^2)", "-36i z", poly({0, -36.0 * kI, 0, 0, 0, 0, 0})},
      [](const auto& e, int) {
        using T = std::decay_t<decltype(e)>;
        return constant_point<T>({0.0, 1.0, 0.0});
      }));
  specs.push_back(with_x0(
      ContractionSpec{"VI-to-VII", S::VI, S::VII, {angle(kPi / 2), zero, log_angle({-1, 2})},
                      {cplx{0.0, 1.0 / 16.0}, {-1}}, {"0", "0", "2i"}, nullptr, nullptr, {0.0, 0.0, 0.0},
                      "3i z^6 + 3 z^3", "-36i z", poly({0, -36.0 * kI, 0, 0, 0, 0, 0})},
      [](const auto& e, int) {
        using T = std::decay_t<decltype(e)>;
        return constant_point<T>({0.0, 0.0, 2.0 * kI});
      }));
  specs.push_back(with_x0(ContractionSpec{"VI-to-OO", S::VI, S::OO, {zero, zero, log_angle({-1})},
                                          {0.5, {0}}, {"0", "0", "2"}, nullptr, nullptr, {0.0, 0.0, 1.0},
                                          "3i z^3(1+z^3)", "6i z^3", poly({0, 0, 0, 6.0 * kI, 0, 0, 0})},
                          [](const auto& e, int) {
                            using T = std::decay_t<decltype(e)>;
                            return constant_point<T>({0.0, 0.0, 2.0});
                          }));
  specs.push_back(with_x0(ContractionSpec{"II-to-V", S::II, S::V, {zero, zero, zero}, {kI, {0}},
                                          {"0", "-i", "1/eps"}, nullptr, nullptr, {0.0, 1.0, 0.0},
                                          "q_II(0,-i,1/eps)", "9z^2 - 3", poly({-3.0, 0, 9.0, 0, 0, 0, 0})},
                          [](const auto& e, int trunc) {
                            using T = std::decay_t<decltype(e)>;
                            return std::array<T, 3>{T(0.0), T(-kI), inverse(e, trunc)};
                          }));
  specs.push_back(with_x0(
      ContractionSpec{"II-to-VI", S::II, S::VI, {zero, angle(kPi), log_angle({1, 3})}, {1.0, {0}},
                      {"1/eps", "0", "3eps-2"}, nullptr, nullptr, {0.0, 0.0, 2.0}, "q_II(1/eps,0,3eps-2)",
                      "3i z^3(z^3+1)", poly({0, 0, 0, 3.0 * kI, 0, 0, 3.0 * kI})},
      [](const auto& e, int trunc) {
        using T = std::decay_t<decltype(e)>;
        return std::array<T, 3>{inverse(e, trunc), T(0.0), T(3.0) * e - T(2.0)};
      }));
  specs.push_back(with_x0(
      ContractionSpec{"IV-to-V", S::IV, S::V, {zero, angle(-kPi / 2), log_angle({-1})}, {-0.5, {-1}},
                      {"0", "1/(eps^2-1)", "i/(eps^2+1)"}, nullptr, nullptr, {0.0, 1.0, 0.0},
                      "q_IV(0,1/(eps^2-1),i/(eps^2+1))", "9z^2 - 3", poly({-3.0, 0, 9.0, 0, 0, 0, 0})},
      [](const auto& e, int trunc) {
        using T = std::decay_t<decltype(e)>;
        const T e2 = e * e;
        return std::array<T, 3>{T(0.0), inverse(e2 - T(1.0), trunc), T(kI) * inverse(e2 + T(1.0), trunc)};
      }));
  specs.push_back(with_x0(
      ContractionSpec{"IV-to-VI", S::IV, S::VI, {zero, zero, log_angle({1})}, {1.0, {0}},
                      {"0", "-i/(4eps^3)", "2"}, nullptr, nullptr, {0.0, 0.0, 2.0}, "q_IV(0,-i/(4eps^3),2)",
                      "3i z^3(z^3+1)", poly({0, 0, 0, 3.0 * kI, 0, 0, 3.0 * kI})},
      [](const auto& e, int trunc) {
        using T = std::decay_t<decltype(e)>;
        return std::array<T, 3>{T(0.0), T(-0.25 * kI) * inverse(e * e * e, trunc), T(2.0)};
      }));
  specs.push_back(with_x0(
      ContractionSpec{"I-to-II", S::I, S::II, {zero, zero, log_angle({-1})}, {1.0, {0}},
                      {"(eps^2+1)/(2eps)", "i(eps^2-1)/(2eps)", "1"}, nullptr, nullptr, {1.0, 0.0, 1.0},
                      "q_I((eps^2+1)/(2eps), i(eps^2-1)/(2eps), 1)", "3i(1+3z^2+2z^3)",
                      poly({3.0 * kI, 0, 9.0 * kI, 6.0 * kI, 0, 0, 0})},
      [](const auto& e, int trunc) {
        using T = std::decay_t<decltype(e)>;
        const T e2 = e * e;
        const T half_inv = T(0.5) * inverse(e, trunc);
        return std::array<T, 3>{(e2 + T(1.0)) * half_inv, T(kI) * (e2 - T(1.0)) * half_inv, T(1.0)};
      }));
  specs.push_back(with_x0(
      ContractionSpec{"I-to-II-geometric", S::I, S::II, {zero, zero, log_angle({-1})}, {0.5, {0}},
                      {"1/eps", "-i/eps", "4"}, nullptr, nullptr, {0.5, -0.5 * kI, 2.0}, "q_I(1/eps,-i/eps,4)",
                      "3i z^3 + 9i z^2", poly({0, 0, 9.0 * kI, 3.0 * kI, 0, 0, 0})},
      [](const auto& e, int trunc) {
        using T = std::decay_t<decltype(e)>;
        const T ie = inverse(e, trunc);
        return std::array<T, 3>{ie, T(-kI) * ie, T(4.0)};
      }));
  specs.push_back(with_x0(ContractionSpec{"I-to-IV", S::I, S::IV, {zero, zero, zero}, {1.0, {-1}},
                                          {"1", "eps", "eps"}, nullptr, nullptr, {0.0, 1.0, 1.0},
                                          "q_I(1,eps,eps)", "6i z^3 + (3/4)(z^2+1)^3",
                                          representative(S::IV)},
                          [](const auto& e, int) {
                            using T = std::decay_t<decltype(e)>;
                            return std::array<T, 3>{T(1.0), e, e};
                          }));
  specs.push_back(with_x0(ContractionSpec{"SW-to-I", S::SW, S::I, {zero, zero, zero}, {1.0, {-1}},
                                          {"eps", "eps", "eps"}, nullptr, nullptr, {1.0, 1.0, 1.0},
                                          "q_SW(eps,eps,eps)", "(3i/4)(z^2-1)^3 + (3/4)(z^2+1)^3 + 6i z^3",
                                          representative(S::I)},
                          [](const auto& e, int) {
                            using T = std::decay_t<decltype(e)>;
                            return std::array<T, 3>{e, e, e};
                          }));
  return specs;
}

std::string canonical_edge(std::string_view text) {
  std::string s(text);
  for (const std::string arrow : {"→", "->"}) {
    for (auto pos = s.find(arrow); pos != std::string::npos; pos = s.find(arrow)) s.replace(pos, arrow.size(), "-to-");
  }
  return s;
}

}  // namespace

const std::vector<ContractionSpec>& contraction_specs() {
  static const std::vector<ContractionSpec> specs = build_specs();
  return specs;
}

const ContractionSpec& contraction_spec(std::string_view text) {
  const std::string key = canonical_edge(text);
  for (const auto& spec : contraction_specs()) {
    if (spec.name == key) return spec;
  }
  throw Error(ErrorKind::UnknownContraction, "unknown contraction '" + std::string(text) + "'");
}

}  // namespace superlim
