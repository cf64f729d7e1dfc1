#include "noohi/cli.hpp"

#include <CLI11.hpp>

#include "noohi/errors.hpp"
#include "noohi/homs.hpp"
#include "noohi/json_io.hpp"
#include "noohi/oracle.hpp"
#include "noohi/scheme.hpp"

namespace noohi {

namespace {

void emit(const RunManifest& m, const Json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (m.output.empty()) {
    out << text;
  } else {
    write_text_file(m.output, text);
  }
}

Json error_json(std::string_view kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

Pi1Options pi1_options(const RunManifest& m) { return {m.form, m.simplify, m.order}; }

// An explicit order is checked even on routes that do not use it.
void require_valid_order(const SchemeConfig& cfg, const RunManifest& m) {
  if (m.order && !is_valid_devissage_order(cfg, *m.order)) {
    throw InputError("--order is not a valid devissage order for this configuration");
  }
}

int cmd_validate(const RunManifest& m, std::ostream& out) {
  const SchemeConfig cfg = load_config(m.input, m.bounds);
  const ValidationResult r = validate(cfg);
  emit(m, to_json(r), out);
  return r.ok() ? kExitOk : kExitPrecondition;
}

int cmd_present(const RunManifest& m, std::ostream& out) {
  const SchemeConfig cfg = load_config(m.input, m.bounds);
  require_valid(cfg);
  require_valid_order(cfg, m);
  const Pi1Result r = compute_pi1(cfg, m.route, pi1_options(m));
  Json j = to_json(r);
  if (!m.degrees.empty()) {
    Json counts = Json::object();
    for (int d : m.degrees) counts[std::to_string(d)] = count_homs(r.presentation, d, m.bounds);
    j["counts"] = std::move(counts);
  }
  if (m.witness) j["witness"] = to_json(class_witness(r.expression));
  emit(m, j, out);
  return kExitOk;
}

int cmd_verify(const RunManifest& m, std::ostream& out) {
  const SchemeConfig cfg = load_config(m.input, m.bounds);
  require_valid(cfg);
  require_valid_order(cfg, m);
  const Pi1Result r = compute_pi1(cfg, m.route, pi1_options(m));
  Json reports = Json::array();
  Json first_failure;
  int code = kExitOk;
  for (int d = 2; d <= m.degree_max; ++d) {
    try {
      const OracleReport rep = compare(cfg, d, r, m.bounds, m.connected);
      if (!rep.passed && first_failure.is_null()) {
        first_failure = Json{{"degree", d},
                             {"cardinality_times_factorial", to_json(rep.groupoid_cardinality * Rational(
                                                                 static_cast<std::int64_t>(factorial(d))))},
                             {"presentation_count", rep.presentation_count}};
        code = kExitVerdictFailed;
      }
      reports.push_back(to_json(rep));
    } catch (const ResourceError& e) {
      reports.push_back(Json{{"degree", d}, {"error", "resource"}, {"message", e.what()}, {"estimate", e.estimate()}});
      code = kExitResource;
      break;
    }
  }
  Json j{{"route", to_string(m.route)}, {"reports", std::move(reports)}};
  if (!first_failure.is_null()) j["first_failure"] = std::move(first_failure);
  j["status"] = code == kExitOk ? "pass" : code == kExitResource ? "incomplete" : "fail";
  emit(m, j, out);
  return code;
}

int cmd_plan(const RunManifest& m, std::ostream& out) {
  const SchemeConfig cfg = load_config(m.input, m.bounds);
  require_valid(cfg);
  const DevissagePlan plan = plan_devissage(cfg, m.order);
  Json j = to_json(plan);
  SchemeConfig last = plan.splits.empty() ? cfg : plan.splits.back().complement.config;
  j["base"] = Json{{"singular", plan.order.front()},
                   {"components", static_cast<std::int64_t>(last.n())},
                   {"branches", static_cast<std::int64_t>(last.branch_count())},
                   {"rank", free_rank(last)}};
  bool additive = true;
  for (const auto& s : plan.splits) additive = additive && s.additive;
  j["additive"] = additive;
  emit(m, j, out);
  return additive ? kExitOk : kExitVerdictFailed;
}

int cmd_rank(const RunManifest& m, std::ostream& out) {
  const SchemeConfig cfg = load_config(m.input, m.bounds);
  require_valid(cfg);
  const long rank = free_rank(cfg);
  emit(m,
       Json{{"n", cfg.n()},
            {"m", cfg.m()},
            {"branches", cfg.branch_count()},
            {"free_rank", rank},
            {"cycle_rank", cycle_rank(cfg)}},
       out);
  return kExitOk;
}

}  // namespace

void RunManifest::validate() const {
  if (input.empty()) throw InputError("an input configuration path is required");
  if (bounds.max_degree < 1 || bounds.max_degree > kHardMaxDegree) {
    throw InputError("--bound-degree must lie in [1, " + std::to_string(kHardMaxDegree) + "]");
  }
  if (bounds.max_group_order < 1) throw InputError("--bound-order must be positive");
  if (bounds.ceiling < 1) throw InputError("--ceiling must be positive");
  for (int d : degrees) {
    if (d < 1 || d > bounds.max_degree) {
      throw InputError("degree " + std::to_string(d) + " is outside [1, " + std::to_string(bounds.max_degree) + "]");
    }
  }
  if (command == "verify" && (degree_max < 2 || degree_max > bounds.max_degree)) {
    throw InputError("--degree-max must lie in [2, " + std::to_string(bounds.max_degree) + "]");
  }
  if (order && order->empty()) throw InputError("--order needs at least one singular id");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunManifest m;
  std::string route = "auto";
  std::string form = "i";
  std::vector<std::string> order;
  bool no_simplify = false;

  CLI::App app{"Presentations of fundamental groups of singular schemes, checked against cover counts", "noohi"};
  app.require_subcommand(1);
  app.add_option("--bound-order", m.bounds.max_group_order, "Largest accepted finite group order");
  app.add_option("--bound-degree", m.bounds.max_degree, "Largest symmetric-group degree");
  app.add_option("--ceiling", m.bounds.ceiling, "Largest number of search nodes or tuples");
  app.add_option("--output", m.output, "Write the JSON result to this file");

  auto* validate_cmd = app.add_subcommand("validate", "Check the invariants of a configuration");
  auto* present_cmd = app.add_subcommand("present", "Compute a presentation of the fundamental group");
  auto* verify_cmd = app.add_subcommand("verify", "Compare the presentation with the cover oracle");
  auto* plan_cmd = app.add_subcommand("plan", "Show the devissage order and the rank arithmetic");
  auto* rank_cmd = app.add_subcommand("rank", "Free rank of the configuration");
  for (auto* sub : {validate_cmd, present_cmd, verify_cmd, plan_cmd, rank_cmd}) {
    sub->add_option("config", m.input, "Configuration JSON file")->required();
  }
  for (auto* sub : {present_cmd, verify_cmd}) {
    sub->add_option("--route", route, "auto, connected, devissage or closed");
    sub->add_option("--form", form, "VK form used when lowering: i, ii, iii or iv");
    sub->add_flag("--no-simplify", no_simplify, "Keep the raw lowered presentation");
    sub->add_flag("--simplify", "Simplify the presentation (default)");
  }
  for (auto* sub : {present_cmd, verify_cmd, plan_cmd}) {
    sub->add_option("--order", order, "Devissage order, comma separated singular ids")->delimiter(',');
  }
  present_cmd->add_option("--degrees", m.degrees, "Append hom counts at these degrees")->delimiter(',');
  present_cmd->add_flag("--witness", m.witness, "Append the class-membership trace");
  verify_cmd->add_option("--degree-max", m.degree_max, "Check degrees 2..D");
  verify_cmd->add_flag("--connected", m.connected, "Also compare connected covers with transitive actions");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << "\n";
    return kExitPrecondition;
  }

  try {
    m.command = app.get_subcommands().front()->get_name();
    m.simplify = !no_simplify;
    m.route = parse_route(route);
    m.form = parse_vk_form(form);
    if (!order.empty()) m.order = order;
    m.validate();

    if (m.command == "validate") return cmd_validate(m, out);
    if (m.command == "present") return cmd_present(m, out);
    if (m.command == "verify") return cmd_verify(m, out);
    if (m.command == "plan") return cmd_plan(m, out);
    return cmd_rank(m, out);
  } catch (const SchemaError& e) {
    Json j = error_json("schema", e.what());
    j["path"] = e.path();
    err << j.dump() << "\n";
    return kExitSchema;
  } catch (const IoError& e) {
    err << error_json("io", e.what()).dump() << "\n";
    return kExitSchema;
  } catch (const ResourceError& e) {
    Json j = error_json("resource", e.what());
    j["estimate"] = e.estimate();
    err << j.dump() << "\n";
    return kExitResource;
  } catch (const PreconditionError& e) {
    err << error_json("precondition", e.what()).dump() << "\n";
    return kExitPrecondition;
  } catch (const InputError& e) {
    err << error_json("input", e.what()).dump() << "\n";
    return kExitPrecondition;
  }
}

}  // namespace noohi
