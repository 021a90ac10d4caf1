#include "superlim/sextic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

#include "superlim/error.hpp"

namespace superlim {
namespace {

using Poly = std::vector<cplx>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

cplx horner(const Poly& p, cplx z) {
  cplx acc{};
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {cplx{}};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<double>(k);
  return d;
}

std::vector<RootCluster> groups_of(const std::vector<RiemannPoint>& points, DisjointSets& sets) {
  std::vector<RootCluster> out;
  std::vector<long> slot(points.size(), -1);
  std::vector<cplx> sums;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(out.size());
      out.push_back({points[i], 0});
      sums.emplace_back();
    }
    const auto k = static_cast<std::size_t>(slot[root]);
    out[k].multiplicity += 1;
    if (points[i].infinite) out[k].value = RiemannPoint::infinity();
    sums[k] += points[i].value;
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!out[k].value.infinite) out[k].value.value = sums[k] / static_cast<double>(out[k].multiplicity);
  }
  return out;
}

// Simultaneous Aberth-Ehrlich iteration on a polynomial of exact degree >= 1.
std::vector<cplx> aberth(const Poly& p, const RootOptions& opts) {
  const std::size_t n = p.size() - 1;
  const Poly dp = derivative(p);
  double bound = 0.0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(p[k] / p[n]));
  const double radius = 1.0 + bound;
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    const double r = radius * (1.0 + 0.01 * static_cast<double>(k) / static_cast<double>(n));
    z[k] = std::polar(r, angle);
  }
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx pv = horner(p, z[k]);
      if (pv == cplx{}) continue;
      const cplx dv = horner(dp, z[k]);
      cplx sum{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && z[k] != z[j]) sum += 1.0 / (z[k] - z[j]);
      }
      cplx step;
      if (dv == cplx{}) {
        step = cplx{1e-3, 1e-3} * std::max(1.0, std::abs(z[k]));
      } else {
        const cplx newton = pv / dv;
        step = newton / (1.0 - newton * sum);
      }
      if (!is_finite(step)) continue;
      z[k] -= step;
      if (std::abs(step) > opts.convergence_tol * std::max(1.0, std::abs(z[k]))) converged = false;
    }
    if (converged) break;
  }
  return z;
}

Poly product_of(const std::vector<RootCluster>& groups) {
  Poly r{cplx{1.0}};
  for (const auto& g : groups) {
    for (int k = 0; k < g.multiplicity; ++k) r = poly_mul(r, {-g.value.value, cplx{1.0}});
  }
  return r;
}

// P(z) / (z - r) for a root r of P.
Poly deflate(const Poly& p, cplx r) {
  Poly q(p.size() - 1);
  q.back() = p.back();
  for (std::size_t k = q.size() - 1; k > 0; --k) q[k - 1] = p[k] + r * q[k];
  return q;
}

double relative_gap(const Poly& p, const Poly& prod, cplx lead) {
  double err = 0.0, pn = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    err += std::norm(lead * prod[k] - p[k]);
    pn += std::norm(p[k]);
  }
  return std::sqrt(err / pn);
}

// Gauss-Newton on lead * prod (z - r_i)^{m_i} = p with the multiplicities
// fixed. With the structure known the roots are well conditioned, even where
// the plain coefficients-to-roots map is not (a simple root a short distance
// from a fivefold one). Exact zeros split off before the iteration stay put.
void refine_structured(const Poly& p, std::vector<RootCluster>& groups) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!groups[i].value.infinite && groups[i].value.value != cplx{}) free.push_back(i);
  }
  if (free.empty()) return;
  const auto rows = static_cast<Eigen::Index>(p.size());
  const auto cols = static_cast<Eigen::Index>(free.size() + 1);

  std::vector<RootCluster> cur = groups;
  Poly prod = product_of(cur);
  cplx lead = p.back() / prod.back();
  double best = relative_gap(p, prod, lead);
  for (int iter = 0; iter < 30 && best > 0.0; ++iter) {
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(rows, cols);
    Eigen::VectorXcd res(rows);
    for (Eigen::Index k = 0; k < rows; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      res(k) = lead * prod[uk] - p[uk];
      jac(k, 0) = prod[uk];
    }
    for (std::size_t c = 0; c < free.size(); ++c) {
      const RootCluster& g = cur[free[c]];
      const Poly q = deflate(prod, g.value.value);
      for (std::size_t k = 0; k < q.size(); ++k) {
        jac(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c + 1)) =
            -static_cast<double>(g.multiplicity) * lead * q[k];
      }
    }
    const Eigen::VectorXcd step = jac.colPivHouseholderQr().solve(res);
    if (!step.allFinite()) break;
    std::vector<RootCluster> trial = cur;
    for (std::size_t c = 0; c < free.size(); ++c) trial[free[c]].value.value -= step(static_cast<Eigen::Index>(c + 1));
    const Poly trial_prod = product_of(trial);
    const cplx trial_lead = lead - step(0);
    const double gap = relative_gap(p, trial_prod, trial_lead);
    if (!(gap < best)) break;
    cur = std::move(trial);
    prod = trial_prod;
    lead = trial_lead;
    best = gap;
  }
  groups = std::move(cur);
}

// Relative 2-norm defect of the best scalar multiple of prod (z - r)^m
// against the finite part of q.
double reconstruction_defect(const Poly& finite_part, const std::vector<RootCluster>& groups) {
  Poly r{cplx{1.0}};
  for (const auto& g : groups) {
    for (int k = 0; k < g.multiplicity; ++k) r = poly_mul(r, {-g.value.value, cplx{1.0}});
  }
  cplx num{};
  double den = 0.0;
  double qn = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    num += std::conj(r[k]) * finite_part[k];
    den += std::norm(r[k]);
    qn += std::norm(finite_part[k]);
  }
  const cplx s = num / den;
  double err = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) err += std::norm(finite_part[k] - s * r[k]);
  return std::sqrt(err / qn);
}

bool cluster_less(const RootCluster& a, const RootCluster& b) {
  if (a.value.infinite != b.value.infinite) return b.value.infinite;
  return std::make_tuple(a.value.value.real(), a.value.value.imag(), a.multiplicity) <
         std::make_tuple(b.value.value.real(), b.value.value.imag(), b.multiplicity);
}

}  // namespace

Sextic make_sextic(std::array<cplx, 7> coeffs) { return Sextic{coeffs}; }

EpsSextic to_eps(const Sextic& q) {
  EpsSextic out;
  for (std::size_t k = 0; k < 7; ++k) out[k] = EpsSeries(q[k]);
  return out;
}

Sextic limit(const EpsSextic& q, double zero_tol) {
  Sextic out;
  for (std::size_t k = 0; k < 7; ++k) out[k] = series_limit(q[k], zero_tol);
  return out;
}

double norm2(const Sextic& q) {
  double s = 0.0;
  for (const auto& c : q.coeffs) s += std::norm(c);
  return std::sqrt(s);
}

double max_abs(const Sextic& q) {
  double m = 0.0;
  for (const auto& c : q.coeffs) m = std::max(m, std::abs(c));
  return m;
}

bool is_zero(const Sextic& q, double abs_tol) { return max_abs(q) <= abs_tol; }

Sextic operator*(cplx s, const Sextic& q) {
  Sextic out;
  for (std::size_t k = 0; k < 7; ++k) out[k] = s * q[k];
  return out;
}

Sextic operator+(const Sextic& a, const Sextic& b) {
  Sextic out;
  for (std::size_t k = 0; k < 7; ++k) out[k] = a[k] + b[k];
  return out;
}

Sextic operator-(const Sextic& a, const Sextic& b) {
  Sextic out;
  for (std::size_t k = 0; k < 7; ++k) out[k] = a[k] - b[k];
  return out;
}

std::string to_string(const Sextic& q, int precision) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < 7; ++k) {
    if (q[k] == cplx{}) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << format_cplx(q[k], precision) << ")";
    if (k == 1) os << "z";
    if (k > 1) os << "z^" << k;
  }
  if (first) os << "0";
  return os.str();
}

double chordal_distance(const RiemannPoint& a, const RiemannPoint& b) {
  if (a.infinite && b.infinite) return 0.0;
  if (a.infinite) return 2.0 / std::sqrt(1.0 + std::norm(b.value));
  if (b.infinite) return 2.0 / std::sqrt(1.0 + std::norm(a.value));
  return 2.0 * std::abs(a.value - b.value) /
         std::sqrt((1.0 + std::norm(a.value)) * (1.0 + std::norm(b.value)));
}

std::string to_string(const RiemannPoint& p, int precision) {
  return p.infinite ? std::string("inf") : format_cplx(p.value, precision);
}

cplx eval(const Sextic& q, cplx z) {
  cplx acc{};
  for (std::size_t k = 7; k-- > 0;) acc = acc * z + q[k];
  return acc;
}

int effective_degree(const Sextic& q, double degree_tol) {
  const double m = max_abs(q);
  if (m == 0.0) return -1;
  for (int k = 6; k >= 0; --k) {
    if (std::abs(q[static_cast<std::size_t>(k)]) > degree_tol * m) return k;
  }
  return -1;
}

std::vector<RootCluster> cluster(const std::vector<RiemannPoint>& points, double radius) {
  DisjointSets sets(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (chordal_distance(points[i], points[j]) <= radius) sets.unite(i, j);
    }
  }
  return groups_of(points, sets);
}

std::vector<RootCluster> roots(const Sextic& q, const RootOptions& opts) {
  const int d = effective_degree(q, opts.degree_tol);
  if (d < 0) throw Error(ErrorKind::ZeroPolynomial, "the zero sextic has no root data");

  std::vector<RootCluster> out;
  if (d < 6) out.push_back({RiemannPoint::infinity(), 6 - d});
  if (d == 0) return out;

  Poly finite_part(q.coeffs.begin(), q.coeffs.begin() + d + 1);
  std::size_t zeros = 0;
  while (finite_part[zeros] == cplx{}) ++zeros;

  std::vector<RiemannPoint> points(zeros, RiemannPoint::finite(0.0));
  if (zeros < static_cast<std::size_t>(d)) {
    const Poly reduced(finite_part.begin() + static_cast<long>(zeros), finite_part.end());
    for (const auto& z : aberth(reduced, opts)) points.push_back(RiemannPoint::finite(z));
  }

  // Kruskal on the chordal metric: nested single-linkage partitions.
  struct Edge {
    double dist;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      edges.push_back({chordal_distance(points[i], points[j]), i, j});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.dist, a.i, a.j) < std::tie(b.dist, b.i, b.j);
  });
  DisjointSets base(points.size());
  std::vector<Edge> optional;
  {
    DisjointSets probe(points.size());
    for (const auto& e : edges) {
      if (!probe.unite(e.i, e.j)) continue;
      if (e.dist <= opts.cluster_radius) {
        base.unite(e.i, e.j);
      } else {
        optional.push_back(e);
      }
    }
  }

  // Coarsest grouping whose reconstruction matches q wins.
  std::vector<RootCluster> chosen;
  for (std::size_t take = optional.size() + 1; take-- > 0;) {
    DisjointSets sets = base;
    for (std::size_t k = 0; k < take; ++k) sets.unite(optional[k].i, optional[k].j);
    auto groups = groups_of(points, sets);
    refine_structured(finite_part, groups);
    if (take == 0 || reconstruction_defect(finite_part, groups) <= opts.backward_tol) {
      chosen = std::move(groups);
      break;
    }
  }
  out.insert(out.end(), chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end(), cluster_less);
  return out;
}

Sextic from_roots(const std::vector<RootCluster>& clusters, cplx lead) {
  int total = 0;
  for (const auto& c : clusters) {
    if (c.multiplicity <= 0) throw Error(ErrorKind::BadMultiplicity, "nonpositive multiplicity");
    total += c.multiplicity;
  }
  if (total != 6) {
    throw Error(ErrorKind::BadMultiplicity, "multiplicities sum to " + std::to_string(total));
  }
  Poly p{lead};
  for (const auto& c : clusters) {
    if (c.value.infinite) continue;
    for (int k = 0; k < c.multiplicity; ++k) p = poly_mul(p, {-c.value.value, cplx{1.0}});
  }
  Sextic out;
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = p[k];
  return out;
}

std::vector<int> signature(const std::vector<RootCluster>& clusters) {
  std::vector<int> sig;
  for (const auto& c : clusters) sig.push_back(c.multiplicity);
  std::sort(sig.rbegin(), sig.rend());
  return sig;
}

}  // namespace superlim
