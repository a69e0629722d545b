#include "semiends/spec_io.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "semiends/cayley.hpp"

namespace semiends::spec_io {

using json = nlohmann::json;
using models::SemigroupSpec;
using models::SpecPtr;
using models::Tuple;

namespace {

Tuple parse_tuple(const json& j, int dim, const std::string& field) {
  Tuple t;
  if (j.is_number_integer()) {
    t.push_back(j.get<long long>());
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (!x.is_number_integer()) {
        throw Error(field + ": expected integer entries");
      }
      t.push_back(x.get<long long>());
    }
  } else {
    throw Error(field + ": expected an integer or an array of integers");
  }
  if (dim > 0 && static_cast<int>(t.size()) != dim) {
    throw Error(field + ": expected dimension " + std::to_string(dim));
  }
  return t;
}

json tuple_to_json(const Tuple& t) {
  json out = json::array();
  for (auto x : t) {
    out.push_back(x);
  }
  return out;
}

const json& require(const json& doc, const std::string& field) {
  auto it = doc.find(field);
  if (it == doc.end()) {
    throw Error("spec document: missing field '" + field + "'");
  }
  return *it;
}

SpecPtr parse_spec_json(const json& doc);

SpecPtr parse_presented(const json& doc) {
  bool monoid = doc.value("monoid", false);
  std::vector<std::string> alphabet_names;
  if (doc.contains("alphabet")) {
    for (const auto& a : doc["alphabet"]) {
      alphabet_names.push_back(a.get<std::string>());
    }
  } else {
    // Default alphabet: the distinct single-character letters of the rules,
    // in sorted order.
    std::set<char> letters;
    for (const auto& rule : require(doc, "rules")) {
      for (const auto& side : rule) {
        for (char c : side.get<std::string>()) {
          letters.insert(c);
        }
      }
    }
    for (char c : letters) {
      alphabet_names.emplace_back(1, c);
    }
    if (alphabet_names.empty()) {
      throw Error("presented: empty rule set needs an explicit alphabet");
    }
  }
  words::Alphabet alphabet(alphabet_names);
  std::vector<words::RewriteRule> rules;
  if (doc.contains("rules")) {
    size_t idx = 0;
    for (const auto& rule : doc["rules"]) {
      if (!rule.is_array() || rule.size() != 2) {
        throw Error("rules[" + std::to_string(idx) +
                    "]: expected a [lhs, rhs] pair");
      }
      words::Word lhs = alphabet.parse(rule[0].get<std::string>());
      words::Word rhs = alphabet.parse(rule[1].get<std::string>());
      if (!words::shortlex_less(rhs, lhs)) {
        throw Error("rules[" + std::to_string(idx) +
                    "]: rhs not shortlex-smaller than lhs");
      }
      rules.push_back({std::move(lhs), std::move(rhs)});
      ++idx;
    }
  }
  size_t max_steps = doc.value(
      "max_steps", static_cast<long long>(words::RewriteSystem::kDefaultMaxSteps));
  return SemigroupSpec::presented(
      words::RewriteSystem(std::move(alphabet), std::move(rules), max_steps),
      monoid);
}

SpecPtr parse_tuple_kind(const json& doc, bool signed_entries) {
  int dim = require(doc, "k").get<int>();
  std::vector<Tuple> gens;
  size_t idx = 0;
  for (const auto& g : require(doc, "generators")) {
    gens.push_back(
        parse_tuple(g, dim, "generators[" + std::to_string(idx++) + "]"));
  }
  bool monoid = doc.value("monoid", true);
  return signed_entries ? SemigroupSpec::lattice(dim, std::move(gens), monoid)
                        : SemigroupSpec::naturals(dim, std::move(gens), monoid);
}

SpecPtr parse_grid_flag(const json& doc) {
  int dim = require(doc, "k").get<int>();
  std::string flag = require(doc, "flag").get<std::string>();
  if (flag != "mul" && flag != "add") {
    throw Error("flag: expected \"mul\" or \"add\"");
  }
  bool additive = flag == "add";
  std::vector<std::pair<Tuple, models::Int>> gens;
  size_t idx = 0;
  for (const auto& g : require(doc, "generators")) {
    std::string field = "generators[" + std::to_string(idx++) + "]";
    if (!g.is_array() || g.size() != 2) {
      throw Error(field + ": expected [[ints], flag]");
    }
    gens.emplace_back(parse_tuple(g[0], dim, field),
                      g[1].get<long long>());
  }
  bool monoid = doc.value("monoid", additive);
  return SemigroupSpec::grid_flag(dim, additive, std::move(gens), monoid);
}

SpecPtr parse_rees(const json& doc) {
  int group_dim = doc.value("group_k", 1);
  int n = require(doc, "n").get<int>();
  int m = require(doc, "m").get<int>();
  std::vector<std::vector<Tuple>> p;
  size_t row_idx = 0;
  for (const auto& row : require(doc, "p")) {
    std::vector<Tuple> prow;
    size_t col_idx = 0;
    for (const auto& e : row) {
      prow.push_back(parse_tuple(e, group_dim,
                                 "p[" + std::to_string(row_idx) + "][" +
                                     std::to_string(col_idx++) + "]"));
    }
    p.push_back(std::move(prow));
    ++row_idx;
  }
  std::vector<Tuple> group_gens;
  size_t idx = 0;
  for (const auto& g : require(doc, "group_generators")) {
    group_gens.push_back(parse_tuple(
        g, group_dim, "group_generators[" + std::to_string(idx++) + "]"));
  }
  return SemigroupSpec::rees_matrix(group_dim, n, m, std::move(p),
                                    std::move(group_gens));
}

SpecPtr parse_table(const json& doc) {
  std::vector<std::vector<int>> table;
  for (const auto& row : require(doc, "table")) {
    table.push_back(row.get<std::vector<int>>());
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    names = doc["names"].get<std::vector<std::string>>();
  }
  std::vector<int> gens;
  if (doc.contains("generators")) {
    gens = doc["generators"].get<std::vector<int>>();
  }
  return SemigroupSpec::finite_table(std::move(table), std::move(names),
                                     std::move(gens));
}

SpecPtr parse_spec_json(const json& doc) {
  if (!doc.is_object()) {
    throw Error("spec document: expected a JSON object");
  }
  std::string kind = require(doc, "kind").get<std::string>();
  SpecPtr spec;
  if (kind == "presented") {
    spec = parse_presented(doc);
  } else if (kind == "commutative_monoid") {
    spec = parse_tuple_kind(doc, false);
  } else if (kind == "int_lattice") {
    spec = parse_tuple_kind(doc, true);
  } else if (kind == "grid_flag") {
    spec = parse_grid_flag(doc);
  } else if (kind == "rees_matrix") {
    spec = parse_rees(doc);
  } else if (kind == "product") {
    spec = SemigroupSpec::product(parse_spec_json(require(doc, "left")),
                                  parse_spec_json(require(doc, "right")));
  } else if (kind == "dual") {
    spec = models::dual_spec(parse_spec_json(require(doc, "base")));
  } else if (kind == "finite_table") {
    spec = parse_table(doc);
  } else {
    throw Error("spec document: unknown kind '" + kind + "'");
  }
  if (doc.contains("gen_names")) {
    auto names = doc["gen_names"].get<std::vector<std::string>>();
    spec = SemigroupSpec::with_generators(spec, spec->generators(),
                                          std::move(names));
  }
  return spec;
}

json spec_to_json_obj(const SemigroupSpec& spec) {
  json doc;
  const auto& v = spec.variant();
  if (const auto* pres = std::get_if<SemigroupSpec::Presented>(&v)) {
    doc["kind"] = "presented";
    doc["alphabet"] = pres->system.alphabet().names();
    json rules = json::array();
    for (const auto& r : pres->system.rules()) {
      rules.push_back({pres->system.alphabet().format(r.lhs),
                       pres->system.alphabet().format(r.rhs)});
    }
    doc["rules"] = rules;
    doc["monoid"] = spec.is_monoid();
  } else if (const auto* tm = std::get_if<SemigroupSpec::TupleMonoid>(&v)) {
    doc["kind"] = tm->signed_entries ? "int_lattice" : "commutative_monoid";
    doc["k"] = tm->dim;
    json gens = json::array();
    for (const auto& g : tm->gens) {
      gens.push_back(tuple_to_json(g));
    }
    doc["generators"] = gens;
    doc["monoid"] = spec.is_monoid();
  } else if (const auto* gf = std::get_if<SemigroupSpec::GridFlag>(&v)) {
    doc["kind"] = "grid_flag";
    doc["k"] = gf->dim;
    doc["flag"] = gf->additive_flag ? "add" : "mul";
    json gens = json::array();
    for (const auto& [t, f] : gf->gens) {
      gens.push_back({tuple_to_json(t), f});
    }
    doc["generators"] = gens;
    doc["monoid"] = spec.is_monoid();
  } else if (const auto* rm = std::get_if<SemigroupSpec::ReesMatrix>(&v)) {
    doc["kind"] = "rees_matrix";
    doc["group_k"] = rm->group_dim;
    doc["n"] = rm->n;
    doc["m"] = rm->m;
    json p = json::array();
    for (const auto& row : rm->p) {
      json prow = json::array();
      for (const auto& e : row) {
        prow.push_back(tuple_to_json(e));
      }
      p.push_back(prow);
    }
    doc["p"] = p;
    json gens = json::array();
    for (const auto& g : rm->group_gens) {
      gens.push_back(tuple_to_json(g));
    }
    doc["group_generators"] = gens;
  } else if (const auto* pr = std::get_if<SemigroupSpec::Product>(&v)) {
    doc["kind"] = "product";
    doc["left"] = spec_to_json_obj(*pr->left);
    doc["right"] = spec_to_json_obj(*pr->right);
  } else if (const auto* du = std::get_if<SemigroupSpec::Dual>(&v)) {
    doc["kind"] = "dual";
    doc["base"] = spec_to_json_obj(*du->base);
  } else if (const auto* ft = std::get_if<SemigroupSpec::FiniteTable>(&v)) {
    doc["kind"] = "finite_table";
    doc["table"] = ft->table;
    doc["names"] = ft->names;
    doc["generators"] = ft->gen_indices;
  }
  return doc;
}

}  // namespace

SpecPtr parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("spec document: invalid JSON: ") + e.what());
  }
  return parse_spec_json(doc);
}

std::string spec_to_json(const SemigroupSpec& spec, int indent) {
  return spec_to_json_obj(spec).dump(indent);
}

std::string graph_to_json(const cayley::CayleyBall& ball) {
  json doc;
  doc["radius"] = ball.radius;
  doc["spec"] = spec_to_json_obj(*ball.spec);
  doc["vertices"] = ball.keys;
  json edges = json::array();
  for (const auto& e : ball.edges) {
    edges.push_back({e.src, e.dst, e.label});
  }
  doc["edges"] = edges;
  doc["interior"] = ball.interior_indices();
  return doc.dump(2) + "\n";
}

RayLiteral parse_ray_literal(const std::string& text,
                             const words::Alphabet& names) {
  RayLiteral ray;
  bool saw_period = false;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t semi = text.find(';', pos);
    std::string piece = text.substr(
        pos, semi == std::string::npos ? semi : semi - pos);
    if (!piece.empty()) {
      size_t eq = piece.find('=');
      if (eq == std::string::npos) {
        throw Error("ray literal: expected key=value, got '" + piece + "'");
      }
      std::string key = piece.substr(0, eq);
      std::string value = piece.substr(eq + 1);
      if (key == "base") {
        ray.base = names.parse(value);
      } else if (key == "prefix") {
        ray.prefix = names.parse(value);
      } else if (key == "period") {
        ray.period = names.parse(value);
        saw_period = true;
      } else if (key == "kind") {
        if (value == "ray") {
          ray.anti = false;
        } else if (value == "antiray") {
          ray.anti = true;
        } else {
          throw Error("ray literal: kind must be ray or antiray");
        }
      } else {
        throw Error("ray literal: unknown key '" + key + "'");
      }
    }
    if (semi == std::string::npos) {
      break;
    }
    pos = semi + 1;
  }
  if (!saw_period || ray.period.empty()) {
    throw Error("ray literal: a non-empty period is required");
  }
  return ray;
}

std::string format_ray_literal(const RayLiteral& ray,
                               const words::Alphabet& names) {
  std::string out = "base=" + names.format(ray.base) +
                    ";prefix=" + names.format(ray.prefix) +
                    ";period=" + names.format(ray.period) +
                    ";kind=" + (ray.anti ? "antiray" : "ray");
  return out;
}

namespace {

std::vector<long long> parse_int_list(std::string body,
                                      const std::string& what) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string piece =
        body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      out.push_back(std::stoll(piece));
    } catch (const std::exception&) {
      throw Error(what + ": expected an integer, got '" + piece + "'");
    }
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  return out;
}

std::string strip_parens(const std::string& text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    return text.substr(1, text.size() - 2);
  }
  return text;
}

// Splits "<left,right>" at the single top-level comma.
std::pair<std::string, std::string> split_pair(const std::string& text) {
  if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
    throw Error("parse_element: expected <left,right>, got '" + text + "'");
  }
  int depth = 0;
  for (size_t i = 1; i + 1 < text.size(); ++i) {
    char c = text[i];
    if (c == '<' || c == '(') {
      ++depth;
    } else if (c == '>' || c == ')') {
      --depth;
    } else if (c == ',' && depth == 0) {
      return {text.substr(1, i - 1), text.substr(i + 1, text.size() - i - 2)};
    }
  }
  throw Error("parse_element: no top-level comma in '" + text + "'");
}

}  // namespace

models::Element parse_element(const SemigroupSpec& spec,
                              const std::string& text) {
  const auto& v = spec.variant();
  if (const auto* pres = std::get_if<SemigroupSpec::Presented>(&v)) {
    return models::make_word_elem(pres->system.alphabet().parse(text));
  }
  if (const auto* tm = std::get_if<SemigroupSpec::TupleMonoid>(&v)) {
    Tuple t = parse_int_list(strip_parens(text), "tuple element");
    if (static_cast<int>(t.size()) != tm->dim) {
      throw Error("parse_element: expected " + std::to_string(tm->dim) +
                  " coordinates in '" + text + "'");
    }
    return models::make_tuple_elem(std::move(t));
  }
  if (const auto* gf = std::get_if<SemigroupSpec::GridFlag>(&v)) {
    std::string body = strip_parens(text);
    size_t semi = body.find(';');
    if (semi == std::string::npos) {
      throw Error("parse_element: expected '(ints;flag)' in '" + text + "'");
    }
    Tuple ints = parse_int_list(body.substr(0, semi), "grid element");
    if (static_cast<int>(ints.size()) != gf->dim) {
      throw Error("parse_element: expected " + std::to_string(gf->dim) +
                  " coordinates in '" + text + "'");
    }
    long long flag;
    try {
      flag = std::stoll(body.substr(semi + 1));
    } catch (const std::exception&) {
      throw Error("parse_element: bad flag in '" + text + "'");
    }
    return models::make_grid_elem(std::move(ints), flag);
  }
  if (std::get_if<SemigroupSpec::ReesMatrix>(&v) != nullptr) {
    std::string body = strip_parens(text);
    size_t bar1 = body.find('|');
    size_t bar2 = body.rfind('|');
    if (bar1 == std::string::npos || bar2 == bar1) {
      throw Error("parse_element: expected '(i|g|lambda)' in '" + text + "'");
    }
    int i;
    int lam;
    try {
      i = std::stoi(body.substr(0, bar1));
      lam = std::stoi(body.substr(bar2 + 1));
    } catch (const std::exception&) {
      throw Error("parse_element: bad indices in '" + text + "'");
    }
    Tuple g = parse_int_list(
        strip_parens(body.substr(bar1 + 1, bar2 - bar1 - 1)), "Rees element");
    models::Element e = models::make_rees_elem(i - 1, std::move(g), lam - 1);
    spec.check_element(e);
    return e;
  }
  if (const auto* pr = std::get_if<SemigroupSpec::Product>(&v)) {
    auto [left, right] = split_pair(text);
    return models::make_pair_elem(parse_element(*pr->left, left),
                                  parse_element(*pr->right, right));
  }
  if (const auto* du = std::get_if<SemigroupSpec::Dual>(&v)) {
    return parse_element(*du->base, text);
  }
  const auto& ft = std::get<SemigroupSpec::FiniteTable>(v);
  for (size_t i = 0; i < ft.names.size(); ++i) {
    if (ft.names[i] == text) {
      return models::make_table_elem(static_cast<int>(i));
    }
  }
  throw Error("parse_element: unknown table element '" + text + "'");
}

}  // namespace semiends::spec_io
