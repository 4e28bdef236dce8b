#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "pcvx/convex_function.hpp"
#include "pcvx/multifunction.hpp"
#include "pcvx/polyhedron.hpp"
#include "pcvx/relint.hpp"

namespace pcvx {

/// A parsed input document; the JSON "kind" field selects the alternative.
using Document = std::variant<HRep, VRep, MultiFn, PCFunc, RelOpenHRep, Vec, Mat>;

nlohmann::json hrep_to_json(const HRep& p);
nlohmann::json vrep_to_json(const VRep& v);
nlohmann::json multifn_to_json(const MultiFn& f);
nlohmann::json pcfunc_to_json(const PCFunc& f);
nlohmann::json relopen_to_json(const RelOpenHRep& r);
nlohmann::json point_to_json(const Vec& v);
nlohmann::json matrix_to_json(const Mat& m);

HRep hrep_from_json(const nlohmann::json& j);
VRep vrep_from_json(const nlohmann::json& j);
MultiFn multifn_from_json(const nlohmann::json& j);
PCFunc pcfunc_from_json(const nlohmann::json& j);
RelOpenHRep relopen_from_json(const nlohmann::json& j);
Vec point_from_json(const nlohmann::json& j);
Mat matrix_from_json(const nlohmann::json& j);

Document document_from_json(const nlohmann::json& j);
Document load_document(const std::string& path);

HRep load_hrep(const std::string& path);
VRep load_vrep(const std::string& path);
MultiFn load_multifn(const std::string& path);
PCFunc load_pcfunc(const std::string& path);
Vec load_point(const std::string& path);
Mat load_matrix(const std::string& path);

/// Human-readable rendering used by --format text: one "<(c), x> <= d" style
/// line per row.
std::string render_text(const nlohmann::json& doc);

}  // namespace pcvx
