#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "superlim/bd_recovery.hpp"
#include "superlim/error.hpp"
#include "superlim/root_invariants.hpp"

using namespace superlim;
using superlim::testing::Gen;
using superlim::testing::poly_from;

namespace {

RiemannPoint P(cplx z) { return RiemannPoint::finite(z); }
const RiemannPoint kInf = RiemannPoint::infinity();

std::array<RiemannPoint, 6> six(const std::vector<RootCluster>& r) {
  std::array<RiemannPoint, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = r.at(i).value;
  return out;
}

std::vector<RootCluster> moved(const GL2Numeric& m, const std::vector<RootCluster>& r) {
  std::vector<RootCluster> out = r;
  for (auto& c : out) c.value = transform_root(m, c.value);
  return out;
}

}  // namespace

TEST(CrossRatio, Examples) {
  EXPECT_TRUE(cx_close(cross_ratio(P(0), P(1), P(2), P(3)), 4.0 / 3.0, 1e-15));
  Gen g(31);
  for (int i = 0; i < 20; ++i) {
    const cplx l = g.complex(3.0);
    EXPECT_TRUE(cx_close(cross_ratio(P(0), P(1), kInf, P(l)), (l - 1.0) / l, 1e-13));
  }
  try {
    cross_ratio(P(0), P(1), P(1), P(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateQuadruple);
  }
}

TEST(CrossRatio, Orbit) {
  EXPECT_EQ(cr_orbit(2.0).size(), 3u);  // harmonic: {2, -1, 1/2}
  const cplx w = std::exp(kI * kPi / 3.0);
  EXPECT_EQ(cr_orbit(w).size(), 2u);    // equianharmonic
  EXPECT_EQ(cr_orbit(cplx{0.3, 0.7}).size(), 6u);
  for (cplx bad : {cplx{0.0}, cplx{1.0}}) {
    try {
      cr_orbit(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DegenerateCrossRatio);
    }
  }
}

TEST(CrossRatio, MobiusInvariant) {
  Gen g(32);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<RiemannPoint, 4> z{P(g.complex(2)), P(g.complex(2)), P(g.complex(2)), P(g.complex(2))};
    if (trial % 5 == 0) z[static_cast<std::size_t>(trial % 4)] = kInf;
    const GL2Numeric m = g.gl2();
    const cplx before = cross_ratio(z[0], z[1], z[2], z[3]);
    std::array<RiemannPoint, 4> w;
    for (std::size_t i = 0; i < 4; ++i) w[i] = transform_root(m, z[i]);
    EXPECT_TRUE(cx_close(before, cross_ratio(w[0], w[1], w[2], w[3]), 1e-8)) << trial;
  }
}

TEST(Is3111b, Examples) {
  EXPECT_TRUE(is_3111b(roots(representative(SystemId::VI))));
  EXPECT_FALSE(is_3111b(roots(representative(SystemId::II))));
  try {
    is_3111b(roots(representative(SystemId::VII)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongSignature);
  }
  Gen g(33);
  for (int trial = 0; trial < 100; ++trial) {
    const GL2Numeric m = g.gl2();
    EXPECT_TRUE(is_3111b(moved(m, roots(representative(SystemId::VI)))));
    EXPECT_FALSE(is_3111b(moved(m, roots(representative(SystemId::II)))));
  }
}

TEST(MultiRatio, Examples) {
  EXPECT_TRUE(cx_close(multi_ratio({P(0), P(1), P(2), P(3), P(4), P(5)}), -0.2, 1e-15));
  // Regular hexagon: every factor is a rotated (1 - w), leaving w^6 / w^9 = -1.
  const cplx w = std::exp(kI * kPi / 3.0);
  std::array<RiemannPoint, 6> hex;
  for (std::size_t k = 0; k < 6; ++k) hex[k] = P(std::pow(w, static_cast<double>(k)));
  EXPECT_TRUE(cx_close(multi_ratio(hex), -1.0, 1e-14));
  EXPECT_TRUE(multi_ratio_test(hex));
  try {
    multi_ratio({P(0), P(1), P(2), P(3), P(4), P(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateSextuple);
  }
}

TEST(MultiRatio, MobiusInvariant) {
  Gen g(34);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<RiemannPoint, 6> z;
    for (auto& p : z) p = P(g.complex(2));
    if (trial % 4 == 0) z[static_cast<std::size_t>(trial % 6)] = kInf;
    const GL2Numeric m = g.gl2();
    std::array<RiemannPoint, 6> w;
    for (std::size_t i = 0; i < 6; ++i) w[i] = transform_root(m, z[i]);
    EXPECT_TRUE(cx_close(multi_ratio(z), multi_ratio(w), 1e-7)) << trial;
  }
}

TEST(MultiRatio, CalibrationRecomputed) {
  const MultiRatioOutcome got = multi_ratio_search(six(roots(representative(SystemId::IV))));
  EXPECT_EQ(got.satisfied, kMultiRatioCalibration.satisfied);
  EXPECT_EQ(got.orderings, kMultiRatioCalibration.orderings);
  EXPECT_LT(got.min_defect, 1e-12);

  // Moving one root by 1e-3 breaks it.
  auto r = six(roots(representative(SystemId::IV)));
  r[2].value += 1e-3;
  EXPECT_FALSE(multi_ratio_test(r));

  // The symmetric representatives of I and SW also satisfy it.
  EXPECT_TRUE(multi_ratio_test(six(roots(representative(SystemId::I)))));
  EXPECT_TRUE(multi_ratio_test(six(roots(representative(SystemId::SW)))));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Sextic{}).str(), "[0]");
  EXPECT_EQ(classify(poly_from({0, 0, 0, 0, 0, 0, -kI})).str(), "[6]");
  EXPECT_EQ(classify(poly_from({0, 0, 0, 6.0 * kI})).str(), "[33]");
  EXPECT_EQ(classify(poly_from({0, -36.0 * kI})).str(), "[51]");
  EXPECT_EQ(classify(poly_from({0, 0, 0, 3.0 * kI, 0, 0, 3.0 * kI})).str(), "[3111b]");
  EXPECT_EQ(classify(poly_from({3.0 * kI, 0, 9.0 * kI, 6.0 * kI})).str(), "[3111a]");
  EXPECT_EQ(classify(poly_from({-3.0, 0, 9.0})).str(), "[411]");
  EXPECT_EQ(classify(representative(SystemId::IV)).str(), "[111111c]");
  EXPECT_EQ(classify(poly_from({1, 2, 3, 4, 5, 6, 7})).str(), "[111111 non-c]");
  // A pure z^6 monomial has all six roots at 0.
  EXPECT_EQ(classify(poly_from({0, 0, 0, 0, 0, 0, 1.0})).partition, (std::vector<int>{6}));
}

TEST(Classify, InvariantUnderMobius) {
  Gen g(35);
  for (const auto& [label, q] : superlim::testing::catalog_sextics()) {
    const StructureLabel base = classify(q);
    for (int trial = 0; trial < 50; ++trial) {
      EXPECT_EQ(classify(act(g.gl2(), q)).str(), base.str()) << label << " trial " << trial;
    }
  }
}

TEST(Classify, InvariantUnderScaling) {
  Gen g(36);
  for (const auto& [label, q] : superlim::testing::catalog_sextics()) {
    for (int trial = 0; trial < 20; ++trial) {
      EXPECT_EQ(classify(g.complex(10.0) * q).str(), classify(q).str()) << label;
    }
  }
}

TEST(Classify, SystemLabels) {
  std::set<std::string> labels;
  for (SystemId id : kAllSystems) {
    labels.insert(std::string(class_label(id)));
    EXPECT_EQ(catalog_label(id).str(), class_label(id)) << name(id);
    if (id != SystemId::O) EXPECT_EQ(system_label(id).str(), class_label(id)) << name(id);
  }
  EXPECT_EQ(labels.size(), 10u);
  // Pointwise, the symmetric I and SW points look like [111111c].
  EXPECT_EQ(classify(representative(SystemId::I)).str(), "[111111c]");
  EXPECT_EQ(classify(representative(SystemId::SW)).str(), "[111111c]");
}
