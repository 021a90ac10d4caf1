#pragma once

#include <array>
#include <string>
#include <vector>

#include "superlim/complex.hpp"
#include "superlim/eps_series.hpp"

namespace superlim {

/// Binary sextic in inhomogeneous form: q(z) = sum_k coeffs[k] z^k.
template <class T>
struct BasicSextic {
  std::array<T, 7> coeffs{};

  T& operator[](std::size_t k) { return coeffs[k]; }
  const T& operator[](std::size_t k) const { return coeffs[k]; }
};

using Sextic = BasicSextic<cplx>;
using EpsSextic = BasicSextic<EpsSeries>;

Sextic make_sextic(std::array<cplx, 7> coeffs);
EpsSextic to_eps(const Sextic& q);
/// Coefficientwise eps -> 0 limit (see series_limit).
Sextic limit(const EpsSextic& q, double zero_tol = 0.0);

double norm2(const Sextic& q);
double max_abs(const Sextic& q);
bool is_zero(const Sextic& q, double abs_tol = 0.0);
Sextic operator*(cplx s, const Sextic& q);
Sextic operator+(const Sextic& a, const Sextic& b);
Sextic operator-(const Sextic& a, const Sextic& b);

std::string to_string(const Sextic& q, int precision = 10);

/// A point of the Riemann sphere: a finite complex value or infinity.
struct RiemannPoint {
  cplx value{};
  bool infinite = false;

  static RiemannPoint infinity() { return {cplx{}, true}; }
  static RiemannPoint finite(cplx z) { return {z, false}; }
};

double chordal_distance(const RiemannPoint& a, const RiemannPoint& b);
std::string to_string(const RiemannPoint& p, int precision = 10);

struct RootCluster {
  RiemannPoint value;
  int multiplicity = 1;
};

struct RootOptions {
  /// Single-linkage radius (chordal) below which approximations always merge.
  double cluster_radius = 1e-6;
  /// A coarser grouping is accepted when lead * prod (z - r)^m reproduces q
  /// to this relative 2-norm defect. Genuine multiple roots of mapped catalog
  /// sextics refine to about 1e-15; spurious merges of tight simple clusters
  /// start near 5e-14.
  double backward_tol = 5e-15;
  /// |c_k| <= degree_tol * max|c| counts as a missing leading coefficient.
  double degree_tol = 1e-10;
  int max_iterations = 200;
  double convergence_tol = 1e-13;
};

cplx eval(const Sextic& q, cplx z);

/// max{k : |c_k| > degree_tol * max|c|}, or -1 for the zero polynomial.
int effective_degree(const Sextic& q, double degree_tol = 1e-10);

/// Roots with multiplicities; the multiplicity at infinity is 6 - degree.
/// Throws ZeroPolynomial for q == 0.
std::vector<RootCluster> roots(const Sextic& q, const RootOptions& opts = {});

/// Single-linkage grouping on the chordal metric. The cluster value is the
/// mean of its members, or infinity if any member is infinite.
std::vector<RootCluster> cluster(const std::vector<RiemannPoint>& points, double radius);

/// lead * prod (z - r_i)^{m_i} over the finite clusters. Throws
/// BadMultiplicity unless the multiplicities sum to 6.
Sextic from_roots(const std::vector<RootCluster>& clusters, cplx lead);

/// Multiplicities sorted in decreasing order, e.g. {5, 1}.
std::vector<int> signature(const std::vector<RootCluster>& clusters);

}  // namespace superlim
