#include "superlim/complex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "superlim/error.hpp"

namespace superlim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::DivergentLimit: return "DivergentLimit";
    case ErrorKind::IncompleteSeries: return "IncompleteSeries";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BadMultiplicity: return "BadMultiplicity";
    case ErrorKind::UnsupportedSingularAxis: return "UnsupportedSingularAxis";
    case ErrorKind::BadAngle: return "BadAngle";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::UnsupportedPoint: return "UnsupportedPoint";
    case ErrorKind::UnknownContraction: return "UnknownContraction";
    case ErrorKind::UnknownSystem: return "UnknownSystem";
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::DegenerateCrossRatio: return "DegenerateCrossRatio";
    case ErrorKind::WrongSignature: return "WrongSignature";
    case ErrorKind::DegenerateSextuple: return "DegenerateSextuple";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

bool cx_close(cplx a, cplx b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

bool is_finite(cplx a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

std::string format_cplx(cplx a, int precision) {
  std::ostringstream os;
  os.precision(precision);
  const double re = a.real();
  const double im = a.imag();
  if (im == 0.0) {
    os << re;
  } else if (re == 0.0) {
    os << im << "i";
  } else {
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num;
  if (r.den != 1) os << "/" << r.den;
  return os;
}

}  // namespace superlim
