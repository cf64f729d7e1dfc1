#include "noohi/json_io.hpp"

#include <fstream>
#include <sstream>

#include "noohi/errors.hpp"

namespace noohi {

namespace {

std::string at(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string at(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  return j;
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

const Json& field(const Json& obj, std::string_view key, const std::string& path) {
  require_object(obj, path);
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

const Json* optional_field(const Json& obj, std::string_view key, const std::string& path) {
  require_object(obj, path);
  auto it = obj.find(std::string(key));
  return it == obj.end() ? nullptr : &*it;
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t get_uint(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

std::string field_string(const Json& obj, std::string_view key, const std::string& path) {
  return get_string(field(obj, key, path), at(path, key));
}

GeneratorSymbol symbol_from(const Json& j, const std::string& path) {
  try {
    return GeneratorSymbol::parse(get_string(j, path));
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
}

/// Runs `f`, turning an InputError into a SchemaError at `path`.
template <typename F>
auto at_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
}

Perm perm_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  Perm p;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto v = get_uint(j[k], at(path, k));
    if (v > 0xffff) throw SchemaError(at(path, k), "point out of range");
    p.push_back(static_cast<std::uint16_t>(v));
  }
  if (!is_permutation(p)) throw SchemaError(path, "not a permutation of 0..n-1");
  return p;
}

std::vector<Perm> perms_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Perm> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(perm_from_json(j[k], at(path, k)));
  return out;
}

Json perms_to_json(const std::vector<Perm>& perms) {
  Json out = Json::array();
  for (const auto& p : perms) {
    Json row = Json::array();
    for (auto x : p) row.push_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

Json map_to_json(const std::map<GeneratorSymbol, Word>& m) {
  Json out = Json::object();
  for (const auto& [g, w] : m) out[g.str()] = to_json(w);
  return out;
}

std::map<GeneratorSymbol, Word> map_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  std::map<GeneratorSymbol, Word> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string p = at(path, it.key());
    GeneratorSymbol g = at_path(p, [&] { return GeneratorSymbol::parse(it.key()); });
    out[g] = word_from_json(it.value(), p);
  }
  return out;
}

Json atom_to_json(const AtomRef& a) {
  return Json{{"id", a.id}, {"role", to_string(a.role)}, {"group", to_json(a.group)}};
}

AtomRef atom_from_json(const Json& j, const std::string& path, const Bounds& bounds) {
  AtomRef a;
  a.id = field_string(j, "id", path);
  a.role = at_path(at(path, "role"), [&] { return parse_atom_role(field_string(j, "role", path)); });
  a.group = group_from_json(field(j, "group", path), at(path, "group"), bounds);
  return a;
}

Json ids_to_json(const std::vector<std::string>& ids) {
  Json out = Json::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

std::vector<std::string> strings_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(get_string(j[k], at(path, k)));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

Json to_json(const Word& w) {
  Json out = Json::array();
  for (const auto& l : w.letters()) out.push_back(Json::array({l.symbol.str(), l.exponent}));
  return out;
}

Word word_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = at(path, k);
    if (!j[k].is_array() || j[k].size() != 2) throw SchemaError(p, "expected a [symbol, exponent] pair");
    const auto e = get_int(j[k][1], at(p, 1));
    if (e == 0 || e > 1'000'000 || e < -1'000'000) throw SchemaError(at(p, 1), "exponent must be a non-zero integer");
    letters.push_back({symbol_from(j[k][0], at(p, 0)), static_cast<int>(e)});
  }
  return Word(std::move(letters));
}

Json to_json(const Presentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators()) gens.push_back(g.str());
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(to_json(r));
  return Json{{"generators", std::move(gens)}, {"relators", std::move(rels)}};
}

Presentation presentation_from_json(const Json& j, const std::string& path) {
  const Json& gj = require_array(field(j, "generators", path), at(path, "generators"));
  std::vector<GeneratorSymbol> gens;
  for (std::size_t k = 0; k < gj.size(); ++k) gens.push_back(symbol_from(gj[k], at(at(path, "generators"), k)));
  std::vector<Word> rels;
  if (const Json* rj = optional_field(j, "relators", path)) {
    require_array(*rj, at(path, "relators"));
    for (std::size_t k = 0; k < rj->size(); ++k) rels.push_back(word_from_json((*rj)[k], at(at(path, "relators"), k)));
  }
  return at_path(path, [&] { return Presentation(std::move(gens), std::move(rels)); });
}

Json to_json(const GroupSpec& g) {
  Json out{{"kind", to_string(g.kind())}};
  switch (g.kind()) {
    case GroupSpec::Kind::trivial:
      break;
    case GroupSpec::Kind::cyclic:
      break;
    case GroupSpec::Kind::symmetric:
      out["degree"] = g.parameter();
      break;
    case GroupSpec::Kind::permutation:
      out["degree"] = g.realization_degree();
      out["generators"] = perms_to_json(g.realization());
      break;
    case GroupSpec::Kind::presented:
      out["presentation"] = to_json(g.presentation());
      out["realization"] = perms_to_json(g.realization());
      break;
  }
  out["order"] = g.order();
  return out;
}

GroupSpec group_from_json(const Json& j, const std::string& path, const Bounds& bounds) {
  const std::string kind = field_string(j, "kind", path);
  const Json* order = optional_field(j, "order", path);
  GroupSpec g;
  if (kind == "trivial") {
    g = GroupSpec::trivial();
  } else if (kind == "cyclic") {
    if (!order) throw SchemaError(at(path, "order"), "missing field");
    const auto k = get_uint(*order, at(path, "order"));
    if (k < 1 || k > bounds.max_group_order) throw SchemaError(at(path, "order"), "order out of range");
    g = GroupSpec::cyclic(static_cast<int>(k), bounds);
  } else if (kind == "symmetric") {
    const auto k = get_uint(field(j, "degree", path), at(path, "degree"));
    if (k < 1 || k > 20) throw SchemaError(at(path, "degree"), "degree out of range");
    g = GroupSpec::symmetric(static_cast<int>(k), bounds);
  } else if (kind == "permutation") {
    const auto degree = get_uint(field(j, "degree", path), at(path, "degree"));
    const std::string gp = at(path, "generators");
    auto gens = perms_from_json(field(j, "generators", path), gp);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].size() != degree) throw SchemaError(at(gp, k), "permutation has the wrong degree");
    }
    g = at_path(path, [&] { return GroupSpec::permutation(degree, std::move(gens), bounds); });
  } else if (kind == "presented") {
    if (!order) throw SchemaError(at(path, "order"), "missing field");
    Presentation p = presentation_from_json(field(j, "presentation", path), at(path, "presentation"));
    std::optional<std::vector<Perm>> realization;
    if (const Json* r = optional_field(j, "realization", path)) realization = perms_from_json(*r, at(path, "realization"));
    const auto o = get_uint(*order, at(path, "order"));
    g = at_path(path, [&] { return GroupSpec::presented(std::move(p), o, std::move(realization), bounds); });
  } else {
    throw SchemaError(at(path, "kind"), "unknown group kind '" + kind + "'");
  }
  if (order && get_uint(*order, at(path, "order")) != g.order()) {
    throw SchemaError(at(path, "order"), "declared order " + std::to_string(get_uint(*order, at(path, "order"))) +
                                             " differs from the group's order " + std::to_string(g.order()));
  }
  return g;
}

Json to_json(const SchemeConfig& cfg) {
  Json comps = Json::array();
  for (const auto& c : cfg.components) comps.push_back(Json{{"id", c.id}, {"group", to_json(c.group)}});
  Json sings = Json::array();
  for (const auto& s : cfg.singulars) sings.push_back(Json{{"id", s.id}, {"group", to_json(s.group)}});
  Json brs = Json::array();
  for (const auto& b : cfg.branches) {
    brs.push_back(Json{{"id", b.id},
                       {"component", b.component},
                       {"singular", b.singular},
                       {"group", to_json(b.group)},
                       {"psi", map_to_json(b.psi.images())},
                       {"phi", map_to_json(b.phi.images())}});
  }
  return Json{{"components", std::move(comps)}, {"singulars", std::move(sings)}, {"branches", std::move(brs)}};
}

SchemeConfig config_from_json(const Json& j, const Bounds& bounds) {
  const std::string root = "$";
  require_object(j, root);
  SchemeConfig cfg;
  const Json& cj = require_array(field(j, "components", root), "$.components");
  for (std::size_t k = 0; k < cj.size(); ++k) {
    const std::string p = at("$.components", k);
    std::string id = field_string(cj[k], "id", p);
    GroupSpec g = group_from_json(field(cj[k], "group", p), at(p, "group"), bounds);
    cfg.add_component(std::move(id), std::move(g));
  }
  if (const Json* sj = optional_field(j, "singulars", root)) {
    require_array(*sj, "$.singulars");
    for (std::size_t k = 0; k < sj->size(); ++k) {
      const std::string p = at("$.singulars", k);
      std::string id = field_string((*sj)[k], "id", p);
      GroupSpec g = group_from_json(field((*sj)[k], "group", p), at(p, "group"), bounds);
      cfg.add_singular(std::move(id), std::move(g));
    }
  }
  if (const Json* bj = optional_field(j, "branches", root)) {
    require_array(*bj, "$.branches");
    for (std::size_t k = 0; k < bj->size(); ++k) {
      const std::string p = at("$.branches", k);
      const Json& b = (*bj)[k];
      std::string id = field_string(b, "id", p);
      std::string comp = field_string(b, "component", p);
      std::string sing = field_string(b, "singular", p);
      if (!cfg.has_component(comp)) throw SchemaError(at(p, "component"), "unknown component '" + comp + "'");
      if (!cfg.has_singular(sing)) throw SchemaError(at(p, "singular"), "unknown singular '" + sing + "'");
      GroupSpec g;
      if (const Json* gj = optional_field(b, "group", p)) g = group_from_json(*gj, at(p, "group"), bounds);
      std::map<GeneratorSymbol, Word> psi;
      std::map<GeneratorSymbol, Word> phi;
      for (auto [key, images] : {std::pair{"psi", &psi}, std::pair{"phi", &phi}}) {
        if (const Json* mj = optional_field(b, key, p)) {
          *images = map_from_json(*mj, at(p, key));
        } else if (!g.is_trivial()) {
          throw SchemaError(at(p, key), "missing field (required for a non-trivial branch group)");
        }
      }
      auto fill = [&](std::map<GeneratorSymbol, Word>& images, const char* key) {
        for (const auto& gen : g.presentation().generators()) {
          if (!images.count(gen)) throw SchemaError(at(at(p, key), gen.str()), "missing image");
        }
      };
      if (!g.is_trivial()) {
        fill(psi, "psi");
        fill(phi, "phi");
      }
      try {
        cfg.add_branch(std::move(id), std::move(comp), std::move(sing), std::move(g), std::move(psi), std::move(phi));
      } catch (const InputError& e) {
        throw SchemaError(p, e.what());
      }
    }
  }
  return cfg;
}

SchemeConfig load_config(const std::filesystem::path& path, const Bounds& bounds) {
  return config_from_json(read_json_file(path), bounds);
}

Json to_json(const Expr& e) {
  if (!e) return nullptr;
  Json out{{"id", e->id}, {"kind", to_string(e->kind)}};
  switch (e->kind) {
    case ExprKind::atom:
      out["atom"] = atom_to_json(e->atom);
      break;
    case ExprKind::free_group:
      out["rank"] = e->rank;
      out["tag"] = e->tag;
      break;
    case ExprKind::fibered_coproduct: {
      out["base"] = atom_to_json(e->atom);
      Json maps = Json::array();
      for (const auto& m : e->base_maps) maps.push_back(map_to_json(m));
      out["base_maps"] = std::move(maps);
      break;
    }
    case ExprKind::quotient: {
      Json rels = Json::array();
      for (const auto& [f, g] : e->relations) rels.push_back(Json::array({to_json(f), to_json(g)}));
      out["relations"] = std::move(rels);
      break;
    }
    case ExprKind::vk: {
      Json legs = Json::array();
      for (const auto& leg : e->legs) {
        legs.push_back(Json{{"group", atom_to_json(leg.group)}, {"psi", map_to_json(leg.psi)}, {"phi", map_to_json(leg.phi)}});
      }
      out["legs"] = std::move(legs);
      break;
    }
    case ExprKind::coproduct:
      break;
  }
  if (!e->children.empty()) {
    Json children = Json::array();
    for (const auto& c : e->children) children.push_back(to_json(c));
    out["children"] = std::move(children);
  }
  return out;
}

Expr expression_from_json(const Json& j, const std::string& path, const Bounds& bounds) {
  auto n = std::make_shared<ExprNode>();
  n->id = field_string(j, "id", path);
  n->kind = at_path(at(path, "kind"), [&] { return parse_expr_kind(field_string(j, "kind", path)); });
  if (const Json* cj = optional_field(j, "children", path)) {
    require_array(*cj, at(path, "children"));
    for (std::size_t k = 0; k < cj->size(); ++k) {
      n->children.push_back(expression_from_json((*cj)[k], at(at(path, "children"), k), bounds));
    }
  }
  switch (n->kind) {
    case ExprKind::atom:
      n->atom = atom_from_json(field(j, "atom", path), at(path, "atom"), bounds);
      break;
    case ExprKind::free_group:
      n->rank = static_cast<int>(get_int(field(j, "rank", path), at(path, "rank")));
      n->tag = field_string(j, "tag", path);
      break;
    case ExprKind::fibered_coproduct: {
      n->atom = atom_from_json(field(j, "base", path), at(path, "base"), bounds);
      const std::string mp = at(path, "base_maps");
      const Json& mj = require_array(field(j, "base_maps", path), mp);
      for (std::size_t k = 0; k < mj.size(); ++k) n->base_maps.push_back(map_from_json(mj[k], at(mp, k)));
      break;
    }
    case ExprKind::quotient: {
      const std::string rp = at(path, "relations");
      const Json& rj = require_array(field(j, "relations", path), rp);
      for (std::size_t k = 0; k < rj.size(); ++k) {
        if (!rj[k].is_array() || rj[k].size() != 2) throw SchemaError(at(rp, k), "expected a pair of words");
        n->relations.emplace_back(word_from_json(rj[k][0], at(at(rp, k), 0)), word_from_json(rj[k][1], at(at(rp, k), 1)));
      }
      break;
    }
    case ExprKind::vk: {
      const std::string lp = at(path, "legs");
      const Json& lj = require_array(field(j, "legs", path), lp);
      for (std::size_t k = 0; k < lj.size(); ++k) {
        const std::string p = at(lp, k);
        n->legs.push_back({atom_from_json(field(lj[k], "group", p), at(p, "group"), bounds),
                           map_from_json(field(lj[k], "psi", p), at(p, "psi")),
                           map_from_json(field(lj[k], "phi", p), at(p, "phi"))});
      }
      break;
    }
    case ExprKind::coproduct:
      break;
  }
  return n;
}

Json to_json(const Pi1Result& r) {
  Json derivation = Json::array();
  for (const auto& d : r.derivation) {
    derivation.push_back(Json{{"theorem", d.theorem}, {"node", d.node}, {"inputs", ids_to_json(d.inputs)}});
  }
  return Json{{"expression", to_json(r.expression)},
              {"presentation", to_json(r.presentation)},
              {"derivation", std::move(derivation)},
              {"form", to_string(r.form)},
              {"simplified", r.simplified},
              {"lowered", to_json(r.lowered)}};
}

Pi1Result pi1_result_from_json(const Json& j, const Bounds& bounds) {
  const std::string root = "$";
  Pi1Result r;
  r.expression = expression_from_json(field(j, "expression", root), "$.expression", bounds);
  r.presentation = presentation_from_json(field(j, "presentation", root), "$.presentation");
  const Json& dj = require_array(field(j, "derivation", root), "$.derivation");
  for (std::size_t k = 0; k < dj.size(); ++k) {
    const std::string p = at("$.derivation", k);
    r.derivation.push_back({field_string(dj[k], "theorem", p), field_string(dj[k], "node", p),
                            strings_from_json(field(dj[k], "inputs", p), at(p, "inputs"))});
  }
  if (const Json* f = optional_field(j, "form", root)) {
    r.form = at_path("$.form", [&] { return parse_vk_form(get_string(*f, "$.form")); });
  }
  if (const Json* s = optional_field(j, "simplified", root)) r.simplified = get_bool(*s, "$.simplified");
  if (const Json* l = optional_field(j, "lowered", root)) {
    r.lowered = presentation_from_json(*l, "$.lowered");
  } else {
    r.lowered = at_path("$.expression", [&] { return lower(r.expression, r.form).presentation; });
  }
  return r;
}

Json to_json(const Rational& q) { return Json{{"num", q.numerator()}, {"den", q.denominator()}}; }

Rational rational_from_json(const Json& j, const std::string& path) {
  const auto num = get_int(field(j, "num", path), at(path, "num"));
  const auto den = get_int(field(j, "den", path), at(path, "den"));
  if (den <= 0) throw SchemaError(at(path, "den"), "denominator must be positive");
  return Rational(num, den);
}

Json to_json(const OracleReport& r) {
  Json out{{"degree", r.degree},
           {"rigid_count", r.rigid_count},
           {"groupoid_cardinality", to_json(r.groupoid_cardinality)},
           {"presentation_count", r.presentation_count},
           {"verdict", r.passed ? "pass" : "fail"}};
  if (r.connected) {
    out["connected"] = Json{{"connected_rigid", r.connected->connected_rigid},
                            {"cardinality", to_json(r.connected->cardinality)},
                            {"transitive_count", r.connected->transitive_count},
                            {"verdict", r.connected->passed ? "pass" : "fail"}};
  }
  return out;
}

OracleReport oracle_report_from_json(const Json& j, const std::string& path) {
  auto verdict = [](const Json& obj, const std::string& p) {
    const std::string v = field_string(obj, "verdict", p);
    if (v != "pass" && v != "fail") throw SchemaError(at(p, "verdict"), "expected \"pass\" or \"fail\"");
    return v == "pass";
  };
  OracleReport r;
  r.degree = static_cast<int>(get_int(field(j, "degree", path), at(path, "degree")));
  r.rigid_count = get_uint(field(j, "rigid_count", path), at(path, "rigid_count"));
  r.groupoid_cardinality = rational_from_json(field(j, "groupoid_cardinality", path), at(path, "groupoid_cardinality"));
  r.presentation_count = get_uint(field(j, "presentation_count", path), at(path, "presentation_count"));
  r.passed = verdict(j, path);
  if (const Json* c = optional_field(j, "connected", path)) {
    const std::string p = at(path, "connected");
    ConnectedComparison cc;
    cc.connected_rigid = get_uint(field(*c, "connected_rigid", p), at(p, "connected_rigid"));
    cc.cardinality = rational_from_json(field(*c, "cardinality", p), at(p, "cardinality"));
    cc.transitive_count = get_uint(field(*c, "transitive_count", p), at(p, "transitive_count"));
    cc.passed = verdict(*c, p);
    r.connected = cc;
  }
  return r;
}

Json to_json(const EquivalenceReport& r) {
  Json counts = Json::object();
  for (const auto& [form, per_degree] : r.counts) {
    Json row = Json::object();
    for (const auto& [d, c] : per_degree) row[std::to_string(d)] = c;
    counts[form] = std::move(row);
  }
  return Json{{"counts", std::move(counts)}, {"maps_checked", r.maps_checked}, {"checks", ids_to_json(r.checks)}};
}

EquivalenceReport equivalence_report_from_json(const Json& j) {
  EquivalenceReport r;
  const Json& counts = require_object(field(j, "counts", "$"), "$.counts");
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    const std::string p = at("$.counts", it.key());
    require_object(it.value(), p);
    for (auto dt = it.value().begin(); dt != it.value().end(); ++dt) {
      int d = 0;
      try {
        std::size_t used = 0;
        d = std::stoi(dt.key(), &used);
        if (used != dt.key().size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw SchemaError(at(p, dt.key()), "degree keys must be integers");
      }
      r.counts[it.key()][d] = get_uint(dt.value(), at(p, dt.key()));
    }
  }
  r.maps_checked = get_bool(field(j, "maps_checked", "$"), "$.maps_checked");
  if (const Json* c = optional_field(j, "checks", "$")) r.checks = strings_from_json(*c, "$.checks");
  return r;
}

Json to_json(const ValidationResult& r) {
  if (r.ok()) return Json{{"valid", true}};
  return Json{{"valid", false},
              {"invariant", r.diagnostic->invariant},
              {"ids", ids_to_json(r.diagnostic->ids)},
              {"message", r.diagnostic->message}};
}

Json to_json(const WitnessTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"node", s.node}, {"kind", s.kind}, {"rule", s.rule}, {"admitted", s.admitted}});
  }
  Json out{{"admitted", t.admitted}, {"steps", std::move(steps)}};
  if (!t.admitted) out["failure"] = t.failure;
  return out;
}

Json to_json(const IntersectionReport& r) {
  return Json{{"anchor", r.anchor}, {"S1", ids_to_json(r.s1)}, {"S2", ids_to_json(r.s2)},
              {"S", ids_to_json(r.s)},  {"d", r.d()},            {"m1", r.m1},
              {"m2", r.m2}};
}

Json to_json(const DevissagePlan& plan) {
  Json splits = Json::array();
  for (const auto& s : plan.splits) {
    auto summary = [](const SubConfig& sub) {
      return Json{{"kind", sub.provenance.kind},
                  {"components", ids_to_json(sub.provenance.component_ids)},
                  {"singulars", ids_to_json(sub.provenance.singular_ids)},
                  {"branches", ids_to_json(sub.provenance.branch_ids)}};
    };
    splits.push_back(Json{{"anchor", s.anchor},
                          {"T", summary(s.t)},
                          {"complement", summary(s.complement)},
                          {"intersection", to_json(s.intersection)},
                          {"rank", Json{{"whole", s.rank_whole},
                                        {"T", s.rank_t},
                                        {"complement", s.rank_complement},
                                        {"d_minus_1", static_cast<long>(s.intersection.d()) - 1},
                                        {"additive", s.additive}}}});
  }
  return Json{{"order", ids_to_json(plan.order)}, {"splits", std::move(splits)}};
}

}  // namespace noohi
