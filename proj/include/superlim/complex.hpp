#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace superlim {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Relative tolerance applied to scalar comparisons unless a call overrides it.
inline constexpr double kDefaultTol = 1e-10;

/// |a-b| <= tol * max(1, |a|, |b|).
bool cx_close(cplx a, cplx b, double tol = kDefaultTol);

bool is_finite(cplx a);

std::string format_cplx(cplx a, int precision = 12);

/// Exact rational used for powers of the contraction parameter.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  constexpr void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  /// True when r * mult is an integer.
  constexpr bool scales_to_integer(std::int64_t mult) const { return (num * mult) % den == 0; }
  constexpr std::int64_t times(std::int64_t mult) const { return num * mult / den; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr Rational operator-(Rational r) { return {-r.num, r.den}; }
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace superlim
