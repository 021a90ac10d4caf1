#pragma once

#include <limits>
#include <string>
#include <vector>

#include "superlim/complex.hpp"

namespace superlim {

/// Truncated Laurent series in delta = eps^(1/12).
///
/// Every fractional eps-power used by the contractions (eps^(1/2), eps^(1/4),
/// eps^(1/6), ...) becomes an integral power of delta. The coefficient of
/// delta^(lo + k) is coeffs()[k]; exponents >= trunc() are unknown. A series
/// whose trunc() is kExact is a finite Laurent polynomial known exactly.
class EpsSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();
  static constexpr int kDeltaPerEps = 12;
  static constexpr int kDefaultTrunc = 60;

  EpsSeries() = default;
  EpsSeries(cplx c);   // NOLINT(google-explicit-constructor): exact constant
  EpsSeries(double c); // NOLINT(google-explicit-constructor)

  static EpsSeries zero(int trunc = kExact);
  static EpsSeries monomial(cplx coeff, int delta_exp, int trunc = kExact);
  /// coeff * eps^p; 12p must be an integer.
  static EpsSeries eps_power(cplx coeff, Rational p);
  /// The contraction parameter itself, eps = delta^12.
  static EpsSeries eps() { return monomial(1.0, kDeltaPerEps); }
  static EpsSeries from_coeffs(int lo, std::vector<cplx> coeffs, int trunc = kExact);

  int lo() const { return lo_; }
  int trunc() const { return trunc_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  bool is_exact() const { return trunc_ == kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest nonzero exponent, or trunc() for a zero series.
  int order() const { return coeffs_.empty() ? trunc_ : lo_; }
  /// Coefficient of delta^e (zero when absent; no truncation check).
  cplx coeff(int delta_exp) const;
  double max_abs() const;

  /// Partial sum at a given delta.
  cplx eval_delta(cplx delta) const;
  /// Partial sum at delta = eps^(1/12) (principal branch).
  cplx eval_eps(double eps) const;

  /// Drops coefficients with modulus <= abs_tol.
  EpsSeries chopped(double abs_tol) const;
  EpsSeries truncated(int trunc) const;

  std::string str(int precision = 6) const;

  EpsSeries& operator+=(const EpsSeries& rhs);
  EpsSeries& operator-=(const EpsSeries& rhs);
  EpsSeries& operator*=(const EpsSeries& rhs);

  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator-(const EpsSeries& a);

 private:
  void normalize();

  int lo_ = 0;
  std::vector<cplx> coeffs_;
  int trunc_ = kExact;
};

EpsSeries series_mul(const EpsSeries& s, const EpsSeries& t);

/// Multiplicative inverse. Exact monomials invert exactly; anything else is
/// expanded up to absolute exponent `trunc` (or less if the input is itself
/// truncated). Throws ZeroSeries for s == 0.
EpsSeries series_inv(const EpsSeries& s, int trunc = EpsSeries::kDefaultTrunc);

/// eps -> 0 limit. Coefficients with modulus <= zero_tol count as zero.
/// Throws DivergentLimit for a surviving negative exponent and
/// IncompleteSeries when the constant term lies beyond the truncation.
cplx series_limit(const EpsSeries& s, double zero_tol = 0.0);

EpsSeries pow(const EpsSeries& s, unsigned n);

/// Coefficientwise comparison on the exponents both series know.
bool series_close(const EpsSeries& a, const EpsSeries& b, double abs_tol);

// Overloads that let templated builders run over either scalar type.
inline cplx inverse(cplx x, int /*trunc*/) { return 1.0 / x; }
inline EpsSeries inverse(const EpsSeries& x, int trunc) { return series_inv(x, trunc); }

}  // namespace superlim
