#include "superlim/contraction.hpp"

#include <future>
#include <limits>
#include <sstream>

#include "superlim/bd_recovery.hpp"
#include "superlim/error.hpp"
#include "superlim/mobius.hpp"

namespace superlim {
namespace {

GL2Element composite(const ContractionSpec& spec) {
  return rot_matrix(1, spec.angles[0]) * rot_matrix(2, spec.angles[1]) * rot_matrix(3, spec.angles[2]);
}

template <class T>
using Mat3T = std::array<std::array<T, 3>, 3>;

template <class T>
Mat3T<T> matmul(const Mat3T<T>& a, const Mat3T<T>& b) {
  Mat3T<T> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// x = x0 + c^{-1} R^T (y - y0) with R = R3 R2 R1.
template <class T>
std::array<T, 3> pull_back(const Mat3T<T>& r, const T& c_inv, const std::array<T, 3>& x0, const Point3& y,
                           const Point3& y0) {
  std::array<T, 3> x = x0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) x[i] += c_inv * r[j][i] * T(y[j] - y0[j]);
  }
  return x;
}

cplx target_value(SystemId target, const Point3& y) {
  const auto basis = potential_basis<cplx>(target, y);
  cplx v{};
  for (const auto& b : basis) v += b;
  return v;
}

}  // namespace

std::string_view to_string(ContractionStatus s) {
  switch (s) {
    case ContractionStatus::Pass: return "pass";
    case ContractionStatus::Fail: return "fail";
    case ContractionStatus::Divergent: return "divergent";
    case ContractionStatus::Incomplete: return "incomplete";
  }
  return "?";
}

EpsSextic contraction_intermediate(const ContractionSpec& spec, const ContractionOptions& opts) {
  const auto x0 = spec.x0_series(EpsSeries::eps(), opts.trunc);
  EpsSextic q = covariant_poly<EpsSeries>(spec.source, x0, opts.trunc);
  // Exact coefficients stay exact so a finite intermediate is reported as such.
  for (auto& c : q.coeffs) {
    if (!c.is_exact()) c = c.truncated(opts.trunc);
  }
  return scale_action(spec.scale, act(composite(spec), q));
}

Sextic numeric_intermediate(const ContractionSpec& spec, double eps) {
  const auto x0 = spec.x0_numeric(cplx{eps}, EpsSeries::kDefaultTrunc);
  const Sextic q = covariant_poly<cplx>(spec.source, x0);
  const GL2Numeric m = rot_matrix_at(1, spec.angles[0], eps) * rot_matrix_at(2, spec.angles[1], eps) *
                       rot_matrix_at(3, spec.angles[2], eps);
  return (1.0 / spec.scale.at(eps)) * act(m, q);
}

double series_numeric_gap(const ContractionSpec& spec, double eps, const ContractionOptions& opts) {
  const EpsSextic series = contraction_intermediate(spec, opts);
  const Sextic numeric = numeric_intermediate(spec, eps);
  double gap = 0.0;
  for (std::size_t k = 0; k < 7; ++k) {
    // Rounding residue left on cancelled negative powers would be blown up
    // by eps^{-n}; drop it before summing.
    const cplx s = series[k].chopped(opts.zero_tol).eval_eps(eps);
    gap = std::max(gap, std::abs(s - numeric[k]) / std::max(1.0, std::abs(s)));
  }
  return gap;
}

ContractionReport run_contraction(const ContractionSpec& spec, const ContractionOptions& opts) {
  ContractionReport rep;
  rep.name = spec.name;
  rep.source = spec.source;
  rep.target = spec.target;
  rep.target_q = spec.target_q;
  rep.intermediate = contraction_intermediate(spec, opts);
  try {
    rep.limit = limit(rep.intermediate, opts.zero_tol);
  } catch (const Error& e) {
    rep.message = e.what();
    if (e.kind() == ErrorKind::DivergentLimit) {
      rep.status = ContractionStatus::Divergent;
      return rep;
    }
    if (e.kind() == ErrorKind::IncompleteSeries) {
      rep.status = ContractionStatus::Incomplete;
      return rep;
    }
    throw;
  }
  const Match m = projective_fit(rep.target_q, rep.limit);
  rep.match_scalar = m.scalar;
  rep.defect = m.defect;
  rep.status = m.defect <= opts.match_tol ? ContractionStatus::Pass : ContractionStatus::Fail;
  return rep;
}

std::vector<ContractionReport> run_all(const ContractionOptions& opts) {
  std::vector<std::future<ContractionReport>> jobs;
  for (const auto& spec : contraction_specs()) {
    jobs.push_back(std::async(std::launch::async, [&spec, opts] { return run_contraction(spec, opts); }));
  }
  std::vector<ContractionReport> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

PotentialLimitReport potential_limit_check(std::string_view name, const std::array<Rational, 5>& rescaling,
                                           const std::vector<double>& eps_samples, const std::vector<Point3>& grid) {
  const ContractionSpec& spec = contraction_spec(name);
  PotentialLimitReport rep;
  rep.name = spec.name;
  rep.rescaling = rescaling;
  rep.eps_samples = eps_samples;

  for (double eps : eps_samples) {
    const Mat3 r = matmul(so3_matrix(3, spec.angles[2].at(eps)),
                          matmul(so3_matrix(2, spec.angles[1].at(eps)), so3_matrix(1, spec.angles[0].at(eps))));
    const cplx c = spec.scale.at(eps);
    const auto x0 = spec.x0_numeric(cplx{eps}, EpsSeries::kDefaultTrunc);
    std::array<cplx, 5> weights{};
    for (std::size_t k = 0; k < 5; ++k) weights[k] = std::pow(eps, -rescaling[k].value()) / (c * c);
    double worst = 0.0;
    for (const auto& y : grid) {
      const auto basis = potential_basis<cplx>(spec.source, pull_back<cplx>(r, 1.0 / c, x0, y, spec.y0));
      cplx v{};
      for (std::size_t k = 0; k < 5; ++k) v += weights[k] * basis[k];
      worst = std::max(worst, std::abs(v - target_value(spec.target, y)));
    }
    rep.deviations.push_back(worst);
  }
  for (std::size_t i = 0; i + 1 < rep.deviations.size(); ++i) {
    rep.ratios.push_back(rep.deviations[i] / rep.deviations[i + 1]);
  }

  // Exact limit over the delta-series ring.
  try {
    const auto r = matmul(so3_matrix(3, spec.angles[2]), matmul(so3_matrix(2, spec.angles[1]), so3_matrix(1, spec.angles[0])));
    const EpsSeries c_inv = series_inv(spec.scale.series());
    const auto x0 = spec.x0_series(EpsSeries::eps(), EpsSeries::kDefaultTrunc);
    std::array<EpsSeries, 5> weights{};
    for (std::size_t k = 0; k < 5; ++k) weights[k] = EpsSeries::eps_power(1.0, -rescaling[k]) * c_inv * c_inv;
    for (const auto& y : grid) {
      const auto basis = potential_basis<EpsSeries>(spec.source, pull_back<EpsSeries>(r, c_inv, x0, y, spec.y0));
      EpsSeries v;
      for (std::size_t k = 0; k < 5; ++k) v += weights[k] * basis[k];
      rep.exact_deviation = std::max(rep.exact_deviation, std::abs(series_limit(v, 1e-12) - target_value(spec.target, y)));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DivergentLimit && e.kind() != ErrorKind::IncompleteSeries) throw;
    rep.exact_deviation = std::numeric_limits<double>::infinity();
  }

  rep.passed = rep.exact_deviation <= 1e-12 && !rep.ratios.empty();
  for (double q : rep.ratios) rep.passed = rep.passed && q >= 5.0 && q <= 20.0;
  return rep;
}

std::vector<Point3> cube_grid(int n, double lo, double hi) {
  std::vector<double> axis;
  for (int i = 0; i < n; ++i) axis.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  std::vector<Point3> out;
  for (double a : axis) {
    for (double b : axis) {
      for (double c : axis) out.push_back({a, b, c});
    }
  }
  return out;
}

std::string diagram_dot() {
  struct Node {
    const char* id;
    const char* label;
  };
  static const Node nodes[] = {
      {"SW", "[111111a]"}, {"I", "[111111b]"}, {"IV", "[111111c]"}, {"II", "[3111a]"}, {"III/V", "[411]"},
      {"VI", "[3111b]"},   {"OO", "[33]"},     {"VII", "[51]"},       {"A", "[6]"},      {"O", "[0]"},
  };
  static const std::pair<const char*, const char*> edges[] = {
      {"SW", "I"},     {"I", "IV"},   {"I", "II"},  {"IV", "III/V"}, {"IV", "VI"}, {"II", "III/V"}, {"II", "VI"},
      {"III/V", "VII"}, {"VI", "VII"}, {"VI", "OO"}, {"VII", "A"},    {"OO", "A"},  {"A", "O"},
  };
  std::ostringstream os;
  os << "digraph limits {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (const auto& n : nodes) os << "  \"" << n.id << "\" [label=\"" << n.id << "\\n" << n.label << "\"];\n";
  os << "  \"Key\" [shape=note, label=\"Key\\nsystem\\n[root multiplicities]\"];\n";
  for (const auto& [from, to] : edges) os << "  \"" << from << "\" -> \"" << to << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace superlim
