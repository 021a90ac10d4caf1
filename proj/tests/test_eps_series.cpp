#include <gtest/gtest.h>

#include "helpers.hpp"
#include "superlim/error.hpp"

using namespace superlim;
using superlim::testing::Gen;

namespace {

EpsSeries d(int e, cplx c = 1.0) { return EpsSeries::monomial(c, e); }

}  // namespace

TEST(CxClose, Examples) {
  EXPECT_TRUE(cx_close(3.0, 3.0, 1e-12));
  EXPECT_TRUE(cx_close(0.0, 1e-13, 1e-12));
  EXPECT_FALSE(cx_close(1e6, 1e6 + 1, 1e-12));
}

TEST(SeriesMul, Examples) {
  const EpsSeries one = d(-36) * d(36);
  EXPECT_EQ(one.lo(), 0);
  ASSERT_EQ(one.coeffs().size(), 1u);
  EXPECT_EQ(one.coeffs()[0], cplx{1.0});

  const EpsSeries sq = (EpsSeries(1.0) + d(12)) * (EpsSeries(1.0) - d(12));
  EXPECT_EQ(sq.coeff(0), cplx{1.0});
  EXPECT_EQ(sq.coeff(12), cplx{});
  EXPECT_EQ(sq.coeff(24), cplx{-1.0});
  EXPECT_TRUE(sq.is_exact());

  const EpsSeries six = d(6, 2.0) * d(6, 3.0);
  EXPECT_EQ(six.lo(), 12);
  EXPECT_EQ(six.coeff(12), cplx{6.0});
}

TEST(SeriesMul, TruncationPropagates) {
  // (1 + O(d^10)) * d^-4 is known up to d^6 only.
  const EpsSeries s = EpsSeries::from_coeffs(0, {1.0}, 10);
  EXPECT_EQ((s * d(-4)).trunc(), 6);
  EXPECT_EQ((d(-4) * s).trunc(), 6);
}

TEST(SeriesInv, Examples) {
  const EpsSeries one = series_inv(EpsSeries(1.0));
  EXPECT_TRUE(one.is_exact());
  EXPECT_EQ(one.coeff(0), cplx{1.0});

  const EpsSeries inv_eps = series_inv(EpsSeries::eps());
  EXPECT_EQ(inv_eps.lo(), -12);
  EXPECT_EQ(inv_eps.coeffs().size(), 1u);

  // 1/(eps^2 - 1) = -1 - eps^2 - eps^4 - ...
  const EpsSeries g = series_inv(d(24) - EpsSeries(1.0));
  EXPECT_EQ(g.trunc(), EpsSeries::kDefaultTrunc);
  for (int e = 0; e < 60; ++e) {
    const cplx want = (e % 24 == 0) ? cplx{-1.0} : cplx{};
    EXPECT_EQ(g.coeff(e), want) << "delta^" << e;
  }
}

TEST(SeriesInv, ZeroThrows) {
  try {
    series_inv(EpsSeries::zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroSeries);
  }
}

TEST(SeriesLimit, Examples) {
  EXPECT_EQ(series_limit(EpsSeries(5.0) + d(12, 3.0)), cplx{5.0});
  try {
    series_limit(d(-12) + EpsSeries(1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivergentLimit);
  }
  // z^6 coefficient of -i (z + eps)^5 (z - eps), expanded over the series ring.
  std::vector<EpsSeries> p{EpsSeries(1.0)};
  auto times_linear = [&](const EpsSeries& root) {
    std::vector<EpsSeries> out(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      out[k + 1] += p[k];
      out[k] += p[k] * root;
    }
    p = out;
  };
  for (int k = 0; k < 5; ++k) times_linear(EpsSeries::eps());
  times_linear(-EpsSeries::eps());
  EXPECT_EQ(series_limit(EpsSeries(-kI) * p[6]), -kI);
  EXPECT_EQ(series_limit(EpsSeries(-kI) * p[0]), cplx{});
}

TEST(SeriesLimit, BeyondTruncationIsIncomplete) {
  const EpsSeries s = EpsSeries::from_coeffs(-6, {1.0}, 0);
  try {
    series_limit(s, 0.0);
    FAIL();
  } catch (const Error& e) {
    // The pole is checked first.
    EXPECT_EQ(e.kind(), ErrorKind::DivergentLimit);
  }
  try {
    series_limit(EpsSeries::zero(-3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompleteSeries);
  }
}

TEST(EpsPower, RejectsNonTwelfths) {
  EXPECT_EQ(EpsSeries::eps_power(2.0, Rational(-1, 4)).lo(), -3);
  try {
    EpsSeries::eps_power(1.0, Rational(1, 24));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadAngle);
  }
}

TEST(EpsSeriesProperty, RingLaws) {
  Gen g(101);
  for (int trial = 0; trial < 300; ++trial) {
    const bool exact = trial % 2 == 0;
    const EpsSeries a = g.series(exact), b = g.series(exact), c = g.series(!exact);
    EXPECT_TRUE(series_close(a * b, b * a, 1e-12));
    EXPECT_TRUE(series_close(a + b, b + a, 0.0));
    EXPECT_TRUE(series_close((a * b) * c, a * (b * c), 1e-12));
    EXPECT_TRUE(series_close(a * (b + c), a * b + a * c, 1e-12));
    EXPECT_TRUE(series_close((a + b) + c, a + (b + c), 1e-12));
  }
}

TEST(EpsSeriesProperty, DoubleInverse) {
  Gen g(202);
  for (int trial = 0; trial < 1000; ++trial) {
    // Unit leading term and a tail damped by 4^-k, so 1/s has no pole within
    // |delta| < 2 and its coefficients stay O(1) out to the truncation.
    const EpsSeries raw = g.series(trial % 3 != 0);
    std::vector<cplx> c = raw.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = k == 0 ? 1.0 : c[k] / std::pow(4.0, static_cast<double>(k));
    const EpsSeries s = EpsSeries::from_coeffs(raw.lo(), c, raw.trunc());
    const EpsSeries back = series_inv(series_inv(s));
    EXPECT_TRUE(series_close(back, s, 1e-12)) << s.str() << " vs " << back.str();
    EXPECT_TRUE(series_close(series_inv(s) * s, EpsSeries(1.0), 1e-12));
  }
}

TEST(EpsSeriesProperty, LimitIsMultiplicative) {
  Gen g(303);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    EpsSeries a = g.series(true), b = g.series(true);
    if (a.lo() < 0 || b.lo() < 0) continue;
    ++checked;
    EXPECT_TRUE(cx_close(series_limit(a * b), series_limit(a) * series_limit(b), 1e-12));
  }
  EXPECT_GT(checked, 50);
}

TEST(EpsSeries, EvalMatchesPartialSum) {
  const EpsSeries s = EpsSeries::from_coeffs(-6, {2.0, 0.0, kI});
  const double eps = 1e-3;
  const double delta = std::pow(eps, 1.0 / 12.0);
  EXPECT_TRUE(cx_close(s.eval_eps(eps), 2.0 * std::pow(delta, -6) + kI * std::pow(delta, -4), 1e-13));
}
