#include "superlim/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "superlim/error.hpp"

namespace superlim {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

double parse_real(const std::string& s) {
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty number");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "not a number: '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorKind::ParseError, "trailing characters in '" + s + "'");
  return v;
}

// "", "+", "-" stand for a unit coefficient in front of i.
double imag_coeff(const std::string& s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

json angle_triplet(const std::array<AngleSpec, 3>& a) {
  json out = json::array();
  for (const auto& t : a) out.push_back(to_json(t));
  return out;
}

json point_json(const Point3& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(cplx_json(c));
  return out;
}

json roots_json(const std::vector<RootCluster>& roots) {
  json out = json::array();
  for (const auto& r : roots) {
    const Vec3 s = stereographic(r.value);
    out.push_back({{"value", to_json(r.value)}, {"multiplicity", r.multiplicity}, {"sphere", {s[0], s[1], s[2]}}});
  }
  return out;
}

}  // namespace

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Sextic& q) {
  json coeffs = json::array();
  for (const auto& c : q.coeffs) coeffs.push_back(cplx_json(c));
  return {{"coeffs", coeffs}};
}

Sextic sextic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw Error(ErrorKind::ParseError, "expected an object with a \"coeffs\" array");
  }
  const auto& c = j["coeffs"];
  if (c.size() != 7) throw Error(ErrorKind::ParseError, "expected 7 coefficients, got " + std::to_string(c.size()));
  Sextic q;
  for (std::size_t k = 0; k < 7; ++k) {
    const auto& e = c[k];
    if (e.is_number()) {
      q[k] = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      q[k] = {e[0].get<double>(), e[1].get<double>()};
    } else {
      throw Error(ErrorKind::ParseError, "coefficient " + std::to_string(k) + " is not [re, im]");
    }
  }
  return q;
}

Sextic read_sextic_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return sextic_from_json(j);
}

json to_json(const RiemannPoint& p) {
  if (p.infinite) return "inf";
  return cplx_json(p.value);
}

json to_json(const AngleSpec& a) {
  return {{"theta_re", a.theta.real()}, {"theta_im", a.theta.imag()}, {"k_num", a.k.num}, {"k_den", a.k.den}};
}

json to_json(const ContractionSpec& spec) {
  return {{"name", spec.name},
          {"source", name(spec.source)},
          {"target", name(spec.target)},
          {"angles", angle_triplet(spec.angles)},
          {"scale", {{"coeff", cplx_json(spec.scale.coeff)}, {"p_num", spec.scale.p.num}, {"p_den", spec.scale.p.den}}},
          {"x0", spec.x0_text},
          {"y0", point_json(spec.y0)},
          {"source_q", spec.source_text},
          {"target_q", spec.target_text},
          {"target_coeffs", to_json(spec.target_q)["coeffs"]}};
}

json to_json(const ContractionReport& rep) {
  json inter = json::array();
  for (const auto& c : rep.intermediate.coeffs) inter.push_back(c.str(12));
  return {{"name", rep.name},
          {"source", name(rep.source)},
          {"target", name(rep.target)},
          {"source_label", class_label(rep.source)},
          {"target_label", class_label(rep.target)},
          {"intermediate", inter},
          {"limit", to_json(rep.limit)["coeffs"]},
          {"target_coeffs", to_json(rep.target_q)["coeffs"]},
          {"match_scalar", cplx_json(rep.match_scalar)},
          {"defect", rep.defect},
          {"status", to_string(rep.status)},
          {"message", rep.message}};
}

json to_json(const RecoveryReport& rep) {
  json qsr = json::object();
  const auto vals = rep.recovery.u.to_array();
  for (std::size_t i = 0; i < 10; ++i) qsr[QSRPoint::kNames[i]] = cplx_json(vals[i]);
  json out = {{"system", name(rep.id)},
              {"point", point_json(rep.point)},
              {"mode", rep.recovery.mode == RecoveryMode::Flat ? "flat" : "conformal"},
              {"rows", rep.recovery.rows},
              {"cols", rep.recovery.cols},
              {"qsr", qsr},
              {"residual", rep.recovery.residual},
              {"assembled_coeffs", to_json(rep.assembled)["coeffs"]}};
  if (rep.printed) {
    out["printed_coeffs"] = to_json(*rep.printed)["coeffs"];
    out["match_scalar"] = cplx_json(rep.match.scalar);
    out["defect"] = rep.match.defect;
  } else {
    out["match_scalar"] = nullptr;
    out["defect"] = nullptr;
  }
  return out;
}

json to_json(const PotentialLimitReport& rep) {
  json resc = json::array();
  for (const auto& r : rep.rescaling) resc.push_back(r.den == 1 ? json(r.num) : json(r.value()));
  return {{"name", rep.name},
          {"rescaling", resc},
          {"eps", rep.eps_samples},
          {"deviations", rep.deviations},
          {"ratios", rep.ratios},
          {"exact_deviation", std::isfinite(rep.exact_deviation) ? json(rep.exact_deviation) : json("inf")},
          {"status", rep.passed ? "pass" : "fail"}};
}

json label_json(const Sextic& q, const StructureLabel& label, const std::vector<RootCluster>& roots) {
  return {{"coeffs", to_json(q)["coeffs"]},
          {"label", label.str()},
          {"partition", label.partition},
          {"sub", to_string(label.sub)},
          {"roots", roots_json(roots)}};
}

cplx parse_complex(std::string_view text) {
  std::string s = trim(text);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return parse_real(s);
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t cut = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  if (cut == std::string::npos) return {0.0, imag_coeff(s)};
  return {parse_real(s.substr(0, cut)), imag_coeff(s.substr(cut))};
}

Point3 parse_point(std::string_view text) {
  const std::string s = trim(text);
  Point3 p;
  if (s.find(';') != std::string::npos) {
    const auto parts = split(s, ';');
    if (parts.size() != 3) throw Error(ErrorKind::ParseError, "point needs three ';'-separated components");
    for (std::size_t i = 0; i < 3; ++i) {
      const auto reim = split(parts[i], ',');
      if (reim.size() == 2) {
        p[i] = {parse_real(reim[0]), parse_real(reim[1])};
      } else if (reim.size() == 1) {
        p[i] = parse_complex(reim[0]);
      } else {
        throw Error(ErrorKind::ParseError, "bad component '" + parts[i] + "'");
      }
    }
    return p;
  }
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw Error(ErrorKind::ParseError, "point needs three ','-separated components");
  for (std::size_t i = 0; i < 3; ++i) p[i] = parse_complex(parts[i]);
  return p;
}

}  // namespace superlim
