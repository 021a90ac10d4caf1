#include "superlim/eps_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "superlim/error.hpp"

namespace superlim {
namespace {

// Truncation orders saturate at kExact.
int sat_add(int a, int b) {
  if (a == EpsSeries::kExact || b == EpsSeries::kExact) return EpsSeries::kExact;
  return a + b;
}

}  // namespace

EpsSeries::EpsSeries(cplx c) {
  if (c != cplx{}) coeffs_.push_back(c);
}

EpsSeries::EpsSeries(double c) : EpsSeries(cplx{c, 0.0}) {}

EpsSeries EpsSeries::zero(int trunc) {
  EpsSeries s;
  s.trunc_ = trunc;
  return s;
}

EpsSeries EpsSeries::monomial(cplx coeff, int delta_exp, int trunc) {
  return from_coeffs(delta_exp, {coeff}, trunc);
}

EpsSeries EpsSeries::eps_power(cplx coeff, Rational p) {
  if (!p.scales_to_integer(kDeltaPerEps)) {
    throw Error(ErrorKind::BadAngle, "eps power is not a multiple of 1/12");
  }
  return monomial(coeff, static_cast<int>(p.times(kDeltaPerEps)));
}

EpsSeries EpsSeries::from_coeffs(int lo, std::vector<cplx> coeffs, int trunc) {
  EpsSeries s;
  s.lo_ = lo;
  s.coeffs_ = std::move(coeffs);
  s.trunc_ = trunc;
  s.normalize();
  return s;
}

void EpsSeries::normalize() {
  if (trunc_ != kExact) {
    const long keep = static_cast<long>(trunc_) - lo_;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<long>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == cplx{}) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    lo_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) lo_ = 0;
}

cplx EpsSeries::coeff(int delta_exp) const {
  const long k = static_cast<long>(delta_exp) - lo_;
  if (coeffs_.empty() || k < 0 || k >= static_cast<long>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

double EpsSeries::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx EpsSeries::eval_delta(cplx delta) const {
  cplx acc{};
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * delta + coeffs_[k];
  return acc * std::pow(delta, lo_);
}

cplx EpsSeries::eval_eps(double eps) const {
  return eval_delta(std::pow(cplx{eps, 0.0}, 1.0 / kDeltaPerEps));
}

EpsSeries EpsSeries::chopped(double abs_tol) const {
  EpsSeries s = *this;
  for (auto& c : s.coeffs_) {
    if (std::abs(c) <= abs_tol) c = {};
  }
  s.normalize();
  return s;
}

EpsSeries EpsSeries::truncated(int trunc) const {
  EpsSeries s = *this;
  s.trunc_ = std::min(s.trunc_, trunc);
  s.normalize();
  return s;
}

std::string EpsSeries::str(int precision) const {
  std::ostringstream os;
  if (coeffs_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == cplx{}) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << format_cplx(coeffs_[k], precision) << ")";
      const int e = lo_ + static_cast<int>(k);
      if (e != 0) os << "d^" << e;
    }
  }
  if (!is_exact()) os << " + O(d^" << trunc_ << ")";
  return os.str();
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& rhs) {
  const int trunc = std::min(trunc_, rhs.trunc_);
  if (rhs.coeffs_.empty()) {
    trunc_ = trunc;
    normalize();
    return *this;
  }
  if (coeffs_.empty()) {
    *this = rhs;
    trunc_ = trunc;
    normalize();
    return *this;
  }
  const int lo = std::min(lo_, rhs.lo_);
  const int hi = std::max(lo_ + static_cast<int>(coeffs_.size()),
                          rhs.lo_ + static_cast<int>(rhs.coeffs_.size()));
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + static_cast<std::size_t>(lo_ - lo)] += coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    out[k + static_cast<std::size_t>(rhs.lo_ - lo)] += rhs.coeffs_[k];
  }
  lo_ = lo;
  coeffs_ = std::move(out);
  trunc_ = trunc;
  normalize();
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& rhs) { return *this += -rhs; }

EpsSeries& EpsSeries::operator*=(const EpsSeries& rhs) {
  *this = series_mul(*this, rhs);
  return *this;
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) { return series_mul(a, b); }

EpsSeries operator-(const EpsSeries& a) {
  EpsSeries s = a;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

EpsSeries series_mul(const EpsSeries& s, const EpsSeries& t) {
  const int trunc = std::min(sat_add(s.trunc(), t.order()), sat_add(t.trunc(), s.order()));
  if (s.is_zero() || t.is_zero()) return EpsSeries::zero(trunc);
  const int lo = s.lo() + t.lo();
  std::size_t n = s.coeffs().size() + t.coeffs().size() - 1;
  if (trunc != EpsSeries::kExact) {
    n = static_cast<std::size_t>(std::max(0L, std::min(static_cast<long>(n), static_cast<long>(trunc) - lo)));
  }
  std::vector<cplx> out(n);
  const auto& a = s.coeffs();
  const auto& b = t.coeffs();
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return EpsSeries::from_coeffs(lo, std::move(out), trunc);
}

EpsSeries series_inv(const EpsSeries& s, int trunc) {
  if (s.is_zero()) throw Error(ErrorKind::ZeroSeries, "inverse of a zero series");
  const auto& a = s.coeffs();
  const int lo = -s.lo();
  if (s.is_exact() && a.size() == 1) return EpsSeries::monomial(1.0 / a[0], lo);
  // Relative precision of s carries over to its inverse.
  const int rel = s.is_exact() ? EpsSeries::kExact : s.trunc() - s.lo();
  const int out_trunc = std::min(sat_add(lo, rel), trunc);
  const long n = static_cast<long>(out_trunc) - lo;
  if (n <= 0) return EpsSeries::zero(out_trunc);
  std::vector<cplx> b(static_cast<std::size_t>(n));
  b[0] = 1.0 / a[0];
  for (long k = 1; k < n; ++k) {
    cplx acc{};
    for (long j = 1; j <= k && j < static_cast<long>(a.size()); ++j) {
      acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -acc * b[0];
  }
  return EpsSeries::from_coeffs(lo, std::move(b), out_trunc);
}

cplx series_limit(const EpsSeries& s, double zero_tol) {
  for (int e = s.lo(); e < 0 && !s.is_zero(); ++e) {
    if (std::abs(s.coeff(e)) > zero_tol) {
      throw Error(ErrorKind::DivergentLimit,
                  "nonzero coefficient at eps^(" + std::to_string(e) + "/12)");
    }
  }
  if (s.trunc() <= 0) {
    throw Error(ErrorKind::IncompleteSeries,
                "constant term beyond truncation order " + std::to_string(s.trunc()));
  }
  const cplx c = s.coeff(0);
  return std::abs(c) <= zero_tol ? cplx{} : c;
}

EpsSeries pow(const EpsSeries& s, unsigned n) {
  EpsSeries out(1.0);
  for (unsigned k = 0; k < n; ++k) out = out * s;
  return out;
}

bool series_close(const EpsSeries& a, const EpsSeries& b, double abs_tol) {
  const int trunc = std::min(a.trunc(), b.trunc());
  const EpsSeries d = (a - b);
  for (std::size_t k = 0; k < d.coeffs().size(); ++k) {
    const int e = d.lo() + static_cast<int>(k);
    if (trunc != EpsSeries::kExact && e >= trunc) break;
    if (std::abs(d.coeffs()[k]) > abs_tol) return false;
  }
  return true;
}

}  // namespace superlim
