#ifndef NOOHI_JSON_IO_HPP
#define NOOHI_JSON_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "noohi/bounds.hpp"
#include "noohi/expression.hpp"
#include "noohi/group_spec.hpp"
#include "noohi/oracle.hpp"
#include "noohi/pi1.hpp"
#include "noohi/presentation.hpp"
#include "noohi/scheme.hpp"
#include "noohi/vk.hpp"

namespace noohi {

// JSON forms of every value the CLI reads or writes. Parsers report schema
// violations as SchemaError with a `$.a.b[2]` style path.
//
//   word          [["ns.name", exponent], ...]
//   presentation  {"generators": ["ns.name", ...], "relators": [word, ...]}
//   group         {"kind": "trivial"}
//                 {"kind": "cyclic", "order": k}
//                 {"kind": "symmetric", "degree": k}
//                 {"kind": "permutation", "degree": k, "generators": [[images], ...]}
//                 {"kind": "presented", "presentation": ..., "order": k, "realization": [[images], ...]}
//   config        {"components": [{"id", "group"}], "singulars": [...],
//                  "branches": [{"id", "component", "singular", "group", "psi": {gen: word}, "phi": {...}}]}
//
// Permutations are 0-based image lists.

using Json = nlohmann::ordered_json;

/// Parses text; a syntax error (including truncation) is a SchemaError at `$`.
Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json to_json(const Word& w);
Word word_from_json(const Json& j, const std::string& path = "$");

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j, const std::string& path = "$");

Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j, const std::string& path = "$", const Bounds& bounds = {});

Json to_json(const SchemeConfig& cfg);
SchemeConfig config_from_json(const Json& j, const Bounds& bounds = {});
SchemeConfig load_config(const std::filesystem::path& path, const Bounds& bounds = {});

Json to_json(const Expr& e);
Expr expression_from_json(const Json& j, const std::string& path = "$", const Bounds& bounds = {});

Json to_json(const Pi1Result& r);
Pi1Result pi1_result_from_json(const Json& j, const Bounds& bounds = {});

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path = "$");

Json to_json(const OracleReport& r);
OracleReport oracle_report_from_json(const Json& j, const std::string& path = "$");

Json to_json(const EquivalenceReport& r);
EquivalenceReport equivalence_report_from_json(const Json& j);

Json to_json(const ValidationResult& r);
Json to_json(const WitnessTrace& t);
Json to_json(const IntersectionReport& r);
Json to_json(const DevissagePlan& plan);

}  // namespace noohi

#endif
