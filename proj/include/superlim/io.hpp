#pragma once

#include <json.hpp>
#include <string>

#include "superlim/bd_recovery.hpp"
#include "superlim/contraction.hpp"
#include "superlim/root_invariants.hpp"

namespace superlim {

using json = nlohmann::json;

inline constexpr const char* kSchema = "superlim/1";

json cplx_json(cplx z);
json to_json(const Sextic& q);
/// {"coeffs": [[re, im] x 7]}, ascending powers. Throws ParseError.
Sextic sextic_from_json(const json& j);
Sextic read_sextic_file(const std::string& path);

json to_json(const RiemannPoint& p);
json to_json(const AngleSpec& a);
json to_json(const ContractionSpec& spec);
json to_json(const ContractionReport& rep);
json to_json(const RecoveryReport& rep);
json to_json(const PotentialLimitReport& rep);
json label_json(const Sextic& q, const StructureLabel& label, const std::vector<RootCluster>& roots);

/// One complex number: "2", "-i", "0.5-1.5i", "1e-3+2i".
cplx parse_complex(std::string_view text);
/// "x1,x2,x3" (each real or a+bi) or "re,im;re,im;re,im" or "a+bi;c+di;e+fi".
Point3 parse_point(std::string_view text);

}  // namespace superlim
