// superlim: classify covariant sextics, certify the limits between
// superintegrable classes, recover q from the Bertrand-Darboux data.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "superlim/bd_recovery.hpp"
#include "superlim/contraction.hpp"
#include "superlim/error.hpp"
#include "superlim/io.hpp"

using namespace superlim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string format = "text";
  int trunc = EpsSeries::kDefaultTrunc;
  double radius = RootOptions{}.cluster_radius;
  double match_tol = ContractionOptions{}.match_tol;
};

std::string root_text(const std::vector<RootCluster>& roots) {
  std::ostringstream os;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) os << ", ";
    os << (roots[i].value.infinite ? std::string("∞") : format_cplx(roots[i].value.value, 8)) << "(×"
       << roots[i].multiplicity << ")";
  }
  return os.str();
}

int emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int cmd_classify(const Config& cfg, const std::string& poly_path, const std::string& system,
                 const std::string& point) {
  Sextic q;
  std::string origin;
  if (!poly_path.empty()) {
    q = read_sextic_file(poly_path);
    origin = poly_path;
  } else if (!system.empty()) {
    const SystemId id = parse_system(system);
    const Point3 x0 = point.empty() ? default_point(id) : parse_point(point);
    q = covariant_at(id, x0);
    origin = std::string(name(id));
  } else {
    throw Error(ErrorKind::ParseError, "classify needs --poly or --system");
  }
  ClassifyOptions opts;
  opts.roots.cluster_radius = cfg.radius;
  const StructureLabel label = classify(q, opts);
  std::vector<RootCluster> rts;
  if (!label.partition.empty()) rts = roots(q, opts.roots);

  json j = label_json(q, label, rts);
  j["schema"] = kSchema;
  j["source"] = origin;
  std::ostringstream os;
  os << label.str();
  if (!rts.empty()) {
    os << ", roots: " << root_text(rts) << "\n";
    for (const auto& r : rts) {
      const Vec3 s = stereographic(r.value);
      os << "  " << to_string(r.value, 8) << " -> sphere (" << s[0] << ", " << s[1] << ", " << s[2] << ")\n";
    }
  } else {
    os << "\n";
  }
  return emit(cfg, j, os.str());
}

int cmd_contract(const Config& cfg, const std::string& edge, bool all) {
  ContractionOptions opts;
  opts.trunc = cfg.trunc;
  opts.match_tol = cfg.match_tol;
  std::vector<ContractionReport> reports;
  if (all) {
    reports = run_all(opts);
  } else {
    reports.push_back(run_contraction(contraction_spec(edge), opts));
  }
  bool ok = true;
  json arr = json::array();
  std::ostringstream os;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    arr.push_back(to_json(r));
    os << r.name << ": " << to_string(r.status) << "  limit " << to_string(r.limit, 8) << "  scalar "
       << format_cplx(r.match_scalar, 8) << "  defect " << r.defect;
    if (!r.message.empty()) os << "  (" << r.message << ")";
    os << "\n";
  }
  emit(cfg, json{{"schema", kSchema}, {"reports", arr}, {"all_pass", ok}}, os.str());
  return ok ? kExitOk : kExitFail;
}

int cmd_recover(const Config& cfg, const std::string& system, const std::string& point) {
  const SystemId id = parse_system(system);
  const Point3 x0 = point.empty() ? default_point(id) : parse_point(point);
  const RecoveryReport rep = recovery_report(id, x0);
  json j = to_json(rep);
  j["schema"] = kSchema;
  std::ostringstream os;
  os << name(id) << " " << (rep.recovery.mode == RecoveryMode::Flat ? "flat" : "conformal") << " "
     << rep.recovery.rows << "x" << rep.recovery.cols << "  residual " << rep.recovery.residual << "\n";
  os << "  q = " << to_string(rep.assembled, 10) << "\n";
  if (rep.printed) {
    os << "  printed = " << to_string(*rep.printed, 10) << "\n";
    os << "  scalar " << format_cplx(rep.match.scalar, 10) << "  defect " << rep.match.defect << "\n";
  }
  emit(cfg, j, os.str());
  return rep.recovery.residual <= 1e-8 && (!rep.printed || rep.match.defect <= 1e-8) ? kExitOk : kExitFail;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

int cmd_potential_limit(const Config& cfg, const std::string& edge, const std::string& rescaling,
                        const std::string& eps_list, int grid) {
  const auto parts = split_commas(rescaling);
  if (parts.size() != 5) throw Error(ErrorKind::ParseError, "--rescaling needs five comma-separated integers");
  std::array<Rational, 5> r{};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto slash = parts[i].find('/');
    try {
      r[i] = slash == std::string::npos ? Rational(std::stoll(parts[i]))
                                        : Rational(std::stoll(parts[i].substr(0, slash)), std::stoll(parts[i].substr(slash + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad rescaling exponent '" + parts[i] + "'");
    }
  }
  std::vector<double> eps;
  for (const auto& s : split_commas(eps_list)) eps.push_back(parse_complex(s).real());
  const auto rep = potential_limit_check(edge, r, eps, cube_grid(grid, -1.0, 1.0));
  json j = to_json(rep);
  j["schema"] = kSchema;
  std::ostringstream os;
  os << rep.name << ": " << (rep.passed ? "pass" : "fail") << "\n";
  for (std::size_t i = 0; i < rep.deviations.size(); ++i) {
    os << "  eps " << rep.eps_samples[i] << "  deviation " << rep.deviations[i] << "\n";
  }
  for (double q : rep.ratios) os << "  ratio " << q << "\n";
  os << "  exact limit deviation " << rep.exact_deviation << "\n";
  emit(cfg, j, os.str());
  return rep.passed ? kExitOk : kExitFail;
}

int cmd_diagram(const std::string& fmt, const std::string& out) {
  if (fmt != "dot") throw Error(ErrorKind::UnsupportedFormat, "only --format dot is supported");
  const std::string dot = diagram_dot();
  if (out.empty()) {
    std::cout << dot;
    return kExitOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, "cannot write " + out);
  f << dot;
  if (!f) throw Error(ErrorKind::IoError, "write failed for " + out);
  return kExitOk;
}

int cmd_calibrate(const Config& cfg) {
  const auto rts = roots(representative(SystemId::IV));
  std::array<RiemannPoint, 6> pts;
  if (rts.size() != 6) throw Error(ErrorKind::WrongSignature, "q_IV(0,1,1) does not have six simple roots");
  for (std::size_t i = 0; i < 6; ++i) pts[i] = rts[i].value;
  const MultiRatioOutcome got = multi_ratio_search(pts);
  const bool same = got.satisfied == kMultiRatioCalibration.satisfied && got.orderings == kMultiRatioCalibration.orderings;
  json j = {{"schema", kSchema},
            {"satisfied", got.satisfied},
            {"orderings", got.orderings},
            {"min_defect", got.min_defect},
            {"fixture", {{"satisfied", kMultiRatioCalibration.satisfied}, {"orderings", kMultiRatioCalibration.orderings}}},
            {"reproduced", same}};
  std::ostringstream os;
  os << "multi-ratio on q_IV(0,1,1): " << (got.satisfied ? "satisfied" : "not satisfied") << " in " << got.orderings
     << "/720 orderings; fixture " << (same ? "reproduced" : "NOT reproduced") << "\n";
  emit(cfg, j, os.str());
  return same ? kExitOk : kExitFail;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnknownContraction:
    case ErrorKind::UnknownSystem:
    case ErrorKind::ParseError:
    case ErrorKind::UnsupportedFormat:
    case ErrorKind::IoError:
    case ErrorKind::UnsupportedPoint:
    case ErrorKind::SingularPoint:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant classification and limit certification for 3D superintegrable systems"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("SUPERLIM_TRUNC")) {
    try {
      cfg.trunc = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "SUPERLIM_TRUNC is not an integer\n";
      return kExitUsage;
    }
  }
  // Global options may also follow the subcommand.
  app.fallthrough();
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--trunc", cfg.trunc, "Series truncation order in delta = eps^(1/12) (>= 24)");
  app.add_option("--radius", cfg.radius, "Chordal root clustering radius")->check(CLI::PositiveNumber);
  app.add_option("--match-tol", cfg.match_tol, "Projective match tolerance")->check(CLI::PositiveNumber);

  std::string poly_path, system, point, edge = "A-to-O", rescaling = "4,3,3,3,2", eps = "1e-2,1e-3";
  std::string diagram_format = "dot", out;
  int grid = 5;
  bool all = false;

  auto* classify_cmd = app.add_subcommand("classify", "Root structure label of a sextic");
  classify_cmd->add_option("--poly", poly_path, "Polynomial JSON {\"coeffs\": [[re,im] x 7]}");
  classify_cmd->add_option("--system", system, "System id (O, A, OO, VII, VI, V, IV, III, II, I, SW)");
  classify_cmd->add_option("--point", point, "Regular point, e.g. 0,0,2 or 0,0;0,-1;1,0");

  auto* contract_cmd = app.add_subcommand("contract", "Run one contraction or all of them");
  auto* name_opt = contract_cmd->add_option("--name", edge, "Contraction name, e.g. VII-to-A");
  contract_cmd->add_flag("--all", all, "Run all 14 contractions")->excludes(name_opt);

  auto* verify_cmd = app.add_subcommand("verify-all", "Same as contract --all");

  auto* recover_cmd = app.add_subcommand("recover-q", "Recover q from the Bertrand-Darboux data of a potential");
  recover_cmd->add_option("--system", system, "System id")->required();
  recover_cmd->add_option("--point", point, "Regular point (default: the catalog point)");

  auto* plimit_cmd = app.add_subcommand("potential-limit", "Potential-level limit check");
  plimit_cmd->add_option("--name", edge, "Contraction name");
  plimit_cmd->add_option("--rescaling", rescaling, "Five eps exponents for a..e");
  plimit_cmd->add_option("--eps", eps, "Comma-separated eps samples");
  plimit_cmd->add_option("--grid", grid, "Grid points per axis on [-1,1]")->check(CLI::PositiveNumber);

  auto* diagram_cmd = app.add_subcommand("diagram", "Emit the limiting diagram");
  diagram_cmd->add_option("--format", diagram_format, "Output format (dot)");
  diagram_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* calibrate_cmd = app.add_subcommand("calibrate", "Recompute the multi-ratio calibration fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (cfg.trunc < 24) {
    std::cerr << "truncation order must be at least 24\n";
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(cfg, poly_path, system, point);
    if (contract_cmd->parsed()) {
      if (!all && name_opt->count() == 0) throw Error(ErrorKind::ParseError, "contract needs --name or --all");
      return cmd_contract(cfg, edge, all);
    }
    if (verify_cmd->parsed()) return cmd_contract(cfg, edge, true);
    if (recover_cmd->parsed()) return cmd_recover(cfg, system, point);
    if (plimit_cmd->parsed()) return cmd_potential_limit(cfg, edge, rescaling, eps, grid);
    if (diagram_cmd->parsed()) return cmd_diagram(diagram_format, out);
    if (calibrate_cmd->parsed()) return cmd_calibrate(cfg);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
