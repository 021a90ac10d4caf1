#pragma once

#include <array>

#include "superlim/complex.hpp"

namespace superlim {

/// Second-order forward-mode jet in three variables: value, gradient and the
/// six distinct Hessian entries ordered 11, 22, 33, 12, 13, 23.
struct Jet2 {
  cplx v{};
  std::array<cplx, 3> g{};
  std::array<cplx, 6> h{};

  Jet2() = default;
  Jet2(cplx c) : v(c) {}   // NOLINT(google-explicit-constructor)
  Jet2(double c) : v(c) {} // NOLINT(google-explicit-constructor)

  static Jet2 variable(cplx value, int index) {
    Jet2 j(value);
    j.g[static_cast<std::size_t>(index)] = 1.0;
    return j;
  }

  static constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

  Jet2& operator+=(const Jet2& o) {
    v += o.v;
    for (int i = 0; i < 3; ++i) g[i] += o.g[i];
    for (int i = 0; i < 6; ++i) h[i] += o.h[i];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) { return *this += -o; }
  Jet2& operator*=(const Jet2& o) { return *this = *this * o; }

  friend Jet2 operator-(Jet2 a) {
    a.v = -a.v;
    for (auto& x : a.g) x = -x;
    for (auto& x : a.h) x = -x;
    return a;
  }
  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.v * b.v);
    for (std::size_t i = 0; i < 3; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    for (std::size_t k = 0; k < 6; ++k) {
      const auto i = static_cast<std::size_t>(kPairs[k][0]);
      const auto j = static_cast<std::size_t>(kPairs[k][1]);
      r.h[k] = a.h[k] * b.v + a.v * b.h[k] + a.g[i] * b.g[j] + a.g[j] * b.g[i];
    }
    return r;
  }
};

/// 1/x by the chain rule: h_ij = -x_ij/x^2 + 2 x_i x_j / x^3.
inline Jet2 inverse(const Jet2& x, int /*trunc*/) {
  const cplx r = 1.0 / x.v;
  Jet2 out(r);
  for (std::size_t i = 0; i < 3; ++i) out.g[i] = -x.g[i] * r * r;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto i = static_cast<std::size_t>(Jet2::kPairs[k][0]);
    const auto j = static_cast<std::size_t>(Jet2::kPairs[k][1]);
    out.h[k] = -x.h[k] * r * r + 2.0 * x.g[i] * x.g[j] * r * r * r;
  }
  return out;
}

inline cplx value_of(const Jet2& x) { return x.v; }

}  // namespace superlim
