#include "superlim/root_invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "superlim/error.hpp"

namespace superlim {
namespace {

// Homogeneous coordinates: finite z -> (z, 1), infinity -> (1, 0).
std::pair<cplx, cplx> homog(const RiemannPoint& p) {
  return p.infinite ? std::pair<cplx, cplx>{1.0, 0.0} : std::pair<cplx, cplx>{p.value, 1.0};
}

cplx bracket(const RiemannPoint& p, const RiemannPoint& q) {
  const auto [a, b] = homog(p);
  const auto [c, d] = homog(q);
  return a * d - b * c;
}

bool distinct(const RiemannPoint* pts, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (chordal_distance(pts[i], pts[j]) == 0.0) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(SubTag tag) {
  switch (tag) {
    case SubTag::None: return "";
    case SubTag::A: return "a";
    case SubTag::B: return "b";
    case SubTag::C: return "c";
    case SubTag::NonC: return "non-c";
    case SubTag::Undetermined: return "undetermined";
  }
  return "";
}

std::string StructureLabel::str() const {
  std::ostringstream os;
  os << "[";
  if (partition.empty()) os << "0";
  for (int m : partition) os << m;
  if (sub == SubTag::A || sub == SubTag::B || sub == SubTag::C) {
    os << to_string(sub);
  } else if (sub != SubTag::None) {
    os << " " << to_string(sub);
  }
  os << "]";
  return os.str();
}

cplx cross_ratio(const RiemannPoint& z1, const RiemannPoint& z2, const RiemannPoint& z3, const RiemannPoint& z4) {
  const std::array<RiemannPoint, 4> pts{z1, z2, z3, z4};
  if (!distinct(pts.data(), 4)) throw Error(ErrorKind::DegenerateQuadruple, "cross-ratio needs four distinct points");
  return bracket(z1, z3) * bracket(z2, z4) / (bracket(z1, z4) * bracket(z2, z3));
}

std::vector<cplx> cr_orbit(cplx l) {
  if (cx_close(l, 0.0, 1e-10) || cx_close(l, 1.0, 1e-10)) {
    throw Error(ErrorKind::DegenerateCrossRatio, "cross-ratio 0 or 1 has no orbit");
  }
  const std::array<cplx, 6> all{l, 1.0 - l, 1.0 / l, 1.0 / (1.0 - l), l / (l - 1.0), (l - 1.0) / l};
  std::vector<cplx> out;
  for (const cplx& v : all) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](cplx u) { return cx_close(u, v, 1e-10); });
    if (!seen) out.push_back(v);
  }
  return out;
}

bool is_3111b(const std::vector<RootCluster>& clusters, double tol) {
  if (signature(clusters) != std::vector<int>{3, 1, 1, 1}) {
    throw Error(ErrorKind::WrongSignature, "is_3111b needs root signature [3111]");
  }
  const cplx l = cross_ratio(clusters[0].value, clusters[1].value, clusters[2].value, clusters[3].value);
  const auto orbit = cr_orbit(l);
  return std::any_of(orbit.begin(), orbit.end(), [tol](cplx v) { return std::abs(v * v - v + 1.0) <= tol; });
}

cplx multi_ratio(const std::array<RiemannPoint, 6>& z) {
  if (!distinct(z.data(), 6)) throw Error(ErrorKind::DegenerateSextuple, "multi-ratio needs six distinct points");
  return bracket(z[0], z[1]) * bracket(z[2], z[3]) * bracket(z[4], z[5]) /
         (bracket(z[1], z[2]) * bracket(z[3], z[4]) * bracket(z[5], z[0]));
}

MultiRatioOutcome multi_ratio_search(const std::array<RiemannPoint, 6>& z, double tol,
                                     const std::array<double, 6>& root_error) {
  if (!distinct(z.data(), 6)) throw Error(ErrorKind::DegenerateSextuple, "multi-ratio needs six distinct points");
  std::array<int, 6> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  MultiRatioOutcome out{false, 0, std::numeric_limits<double>::infinity()};
  do {
    std::array<RiemannPoint, 6> ordered;
    for (std::size_t i = 0; i < 6; ++i) ordered[i] = z[static_cast<std::size_t>(perm[i])];
    const cplx mr = multi_ratio(ordered);
    const double defect = std::abs(mr + 1.0);
    out.min_defect = std::min(out.min_defect, defect);
    // Each point meets its two cyclic neighbours once upstairs and once
    // downstairs; factors against infinity are constant.
    double spread = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      const double e = root_error[static_cast<std::size_t>(perm[i])];
      if (e == 0.0 || ordered[i].infinite) continue;
      double inv = 0.0;
      for (std::size_t j : {(i + 1) % 6, (i + 5) % 6}) {
        if (!ordered[j].infinite) inv += 1.0 / std::abs(ordered[i].value - ordered[j].value);
      }
      spread += e * inv;
    }
    if (defect <= tol + std::abs(mr) * spread) ++out.orderings;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.satisfied = out.orderings > 0;
  return out;
}

bool multi_ratio_test(const std::array<RiemannPoint, 6>& z, double tol) {
  return multi_ratio_search(z, tol).satisfied;
}

namespace {

// First-order root uncertainty for a relative coefficient error eta.
double root_uncertainty(const Sextic& q, cplx z, double eta) {
  double weight = 0.0, power = 1.0;
  cplx deriv{}, zk{1.0};
  for (std::size_t k = 0; k < 7; ++k) {
    weight += std::abs(q[k]) * power;
    if (k + 1 < 7) {
      deriv += static_cast<double>(k + 1) * q[k + 1] * zk;
      zk *= z;
    }
    power *= std::abs(z);
  }
  const double d = std::abs(deriv);
  return d == 0.0 ? std::numeric_limits<double>::infinity() : eta * weight / d;
}

StructureLabel classify_impl(const std::vector<RootCluster>& clusters, const ClassifyOptions& opts,
                             const Sextic* q) {
  StructureLabel label{signature(clusters), SubTag::None};
  if (label.partition == std::vector<int>{3, 1, 1, 1}) {
    label.sub = is_3111b(clusters, opts.cross_ratio_tol) ? SubTag::B : SubTag::A;
  } else if (label.partition == std::vector<int>(6, 1)) {
    if (!kMultiRatioCalibration.satisfied) {
      label.sub = SubTag::Undetermined;
    } else {
      std::array<RiemannPoint, 6> pts;
      std::array<double, 6> err{};
      for (std::size_t i = 0; i < 6; ++i) {
        pts[i] = clusters[i].value;
        if (q != nullptr && !pts[i].infinite) err[i] = root_uncertainty(*q, pts[i].value, opts.coefficient_noise);
      }
      label.sub = multi_ratio_search(pts, opts.multi_ratio_tol, err).satisfied ? SubTag::C : SubTag::NonC;
    }
  }
  return label;
}

}  // namespace

StructureLabel classify_clusters(const std::vector<RootCluster>& clusters, const ClassifyOptions& opts) {
  return classify_impl(clusters, opts, nullptr);
}

StructureLabel classify(const Sextic& q, const ClassifyOptions& opts) {
  if (effective_degree(q, opts.roots.degree_tol) < 0) return {};
  return classify_impl(roots(q, opts.roots), opts, &q);
}

}  // namespace superlim
