#pragma once

#include <gtest/gtest.h>

#include <random>

#include "superlim/catalog.hpp"
#include "superlim/mobius.hpp"
#include "superlim/sextic.hpp"

namespace superlim::testing {

// Hand-rolled generators; every property test seeds its own engine so runs
// are reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  cplx complex(double r) { return {real(-r, r), real(-r, r)}; }
  cplx unit() { return std::polar(1.0, real(0.0, 2.0 * kPi)); }

  /// Entries in the box |re|,|im| <= 5 (so |entry| <= 10), |det| >= 0.1.
  GL2Numeric gl2() {
    for (;;) {
      GL2Numeric m{complex(5.0), complex(5.0), complex(5.0), complex(5.0)};
      if (std::abs(det(m)) >= 0.1) return m;
    }
  }

  Sextic sextic(double r = 2.0) {
    Sextic q;
    for (auto& c : q.coeffs) c = complex(r);
    return q;
  }

  /// Random series with a nonzero leading coefficient of modulus >= 0.5.
  EpsSeries series(bool exact) {
    const int lo = integer(-24, 24);
    const int n = integer(1, 8);
    std::vector<cplx> c(static_cast<std::size_t>(n));
    c[0] = std::polar(real(0.5, 1.5), real(0.0, 2.0 * kPi));
    for (int k = 1; k < n; ++k) c[static_cast<std::size_t>(k)] = complex(0.5);
    return EpsSeries::from_coeffs(lo, c, exact ? EpsSeries::kExact : lo + n + integer(0, 12));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline void expect_sextic_near(const Sextic& a, const Sextic& b, double tol) {
  for (std::size_t k = 0; k < 7; ++k) {
    EXPECT_LE(std::abs(a[k] - b[k]), tol) << "coefficient " << k << ": " << a[k] << " vs " << b[k];
  }
}

inline Sextic poly_from(std::initializer_list<cplx> ascending) {
  Sextic q;
  std::size_t k = 0;
  for (const auto& c : ascending) q[k++] = c;
  return q;
}

/// Nonzero catalog sextics: the representatives plus the second VI point.
inline std::vector<std::pair<std::string, Sextic>> catalog_sextics() {
  std::vector<std::pair<std::string, Sextic>> out;
  for (SystemId id : kAllSystems) {
    if (id != SystemId::O) out.emplace_back(std::string(name(id)), representative(id));
  }
  out.emplace_back("VI(0,0,2i)", covariant_at(SystemId::VI, {0.0, 0.0, 2.0 * kI}));
  return out;
}

}  // namespace superlim::testing
