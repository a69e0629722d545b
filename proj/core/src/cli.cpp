#include "semiends/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "semiends/catalog.hpp"
#include "semiends/spec_io.hpp"

namespace semiends::cli {

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

size_t default_ball_cap() {
  if (const char* env = std::getenv("SEMIENDS_BALL_CAP")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && cap > 0) {
      return static_cast<size_t>(cap);
    }
  }
  return cayley::BallLimits{}.max_vertices;
}

std::vector<int> parse_int_csv(const std::string& text,
                               const std::string& what) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    try {
      out.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw Error(what + ": expected integers, got '" + piece + "'");
    }
  }
  if (out.empty()) {
    throw Error(what + ": empty list");
  }
  return out;
}

green::SubsemigroupPredicate parse_subsemigroup(const models::SpecPtr& spec,
                                                const std::string& text) {
  if (text == "all") {
    return green::whole_semigroup();
  }
  if (text == "exclude-identity") {
    models::Element id = spec->identity();
    return green::make_subsemigroup(
        spec,
        [id](const models::Element& x) { return !(x == id); },
        "everything but the identity");
  }
  auto flag_list = [&](const std::string& body) {
    std::set<models::Int> flags;
    for (int f : parse_int_csv(body, "--sub")) {
      flags.insert(f);
    }
    return flags;
  };
  if (text.rfind("flag-in:", 0) == 0) {
    auto flags = flag_list(text.substr(8));
    return green::make_subsemigroup(
        spec,
        [flags](const models::Element& x) {
          return flags.count(std::get<models::GridElem>(x.v).flag) > 0;
        },
        "flag in {" + text.substr(8) + "}");
  }
  if (text.rfind("flag-not-in:", 0) == 0) {
    auto flags = flag_list(text.substr(12));
    return green::make_subsemigroup(
        spec,
        [flags](const models::Element& x) {
          return flags.count(std::get<models::GridElem>(x.v).flag) == 0;
        },
        "flag not in {" + text.substr(12) + "}");
  }
  throw Error("--sub: expected all, exclude-identity, flag-in:<list> or "
              "flag-not-in:<list>");
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw Error("cannot write '" + out_path + "'");
  }
  file << text;
}

json evidence_json(const ends::DirectionEvidence& ev) {
  json doc;
  doc["horizons"] = ev.horizons;
  doc["counts"] = ev.counts;
  doc["growing"] = ev.growing;
  doc["stagnant"] = ev.stagnant;
  doc["monotone"] = ev.monotone;
  doc["separator"] = ev.separator;
  return doc;
}

words::Alphabet extended_alphabet(const models::SemigroupSpec& spec) {
  std::vector<std::string> names = spec.generator_names();
  std::string s_name = "s";
  while (std::find(names.begin(), names.end(), s_name) != names.end()) {
    s_name += "_";
  }
  names.push_back(s_name);
  return words::Alphabet(names);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"semiends: finite-horizon end structure of semigroup Cayley "
               "graphs"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_path;
  std::string format = "json";
  std::string sub_text = "all";
  std::string radii_text = "2,3,4,5";
  std::string horizons_text = "8,12,16,20,24";
  std::string s_text, t_text;
  std::vector<std::string> ray_texts;
  std::string kind_text = "ray";
  std::string case_name;
  int radius = 2;
  int k = 4;
  int max_period = 2;
  int base_bound = 1;
  int horizon = 16;
  int depth = 6;
  unsigned seed = 0xC0FFEE;
  size_t ball_cap = default_ball_cap();
  bool verbose = false;
  bool list_cases = false;

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "spec document (JSON)")->required();
    cmd->add_option("--ball-cap", ball_cap, "vertex cap for ball building");
    cmd->add_option("--out", out_path, "write output to a file");
  };

  CLI::App* ball = app.add_subcommand("ball", "build and export a ball");
  add_spec(ball);
  ball->add_option("--radius", radius, "truncation radius")->required();
  ball->add_option("--format", format, "dot or json");

  CLI::App* scc = app.add_subcommand(
      "scc", "strongly connected components of a ball");
  add_spec(scc);
  scc->add_option("--radius", radius, "truncation radius")->required();

  CLI::App* green_cmd =
      app.add_subcommand("green", "Green's relation report for a ball");
  add_spec(green_cmd);
  green_cmd->add_option("--radius", radius, "truncation radius")->required();
  green_cmd->add_option("--sub", sub_text, "subsemigroup predicate");

  CLI::App* rees_index =
      app.add_subcommand("rees-index", "Rees index evidence over radii");
  add_spec(rees_index);
  rees_index->add_option("--sub", sub_text, "subsemigroup predicate")
      ->required();
  rees_index->add_option("--radii", radii_text, "increasing radii list");

  CLI::App* green_index = app.add_subcommand(
      "green-index", "relative Green class counts in the complement");
  add_spec(green_index);
  green_index->add_option("--sub", sub_text, "subsemigroup predicate")
      ->required();
  green_index->add_option("--radii", radii_text, "increasing radii list");

  CLI::App* rays = app.add_subcommand("rays", "enumerate periodic rays");
  add_spec(rays);
  rays->add_option("--max-period", max_period, "maximum period length");
  rays->add_option("--base-bound", base_bound, "maximum base word length");
  rays->add_option("--horizon", horizon, "distinctness horizon");
  rays->add_option("--kind", kind_text, "ray or antiray");

  CLI::App* compare = app.add_subcommand("compare", "compare two rays");
  add_spec(compare);
  compare->add_option("--ray", ray_texts, "ray literal (twice)")
      ->expected(2)
      ->required();
  compare->add_option("--horizons", horizons_text, "increasing horizons");
  compare->add_option("--k", k, "certified-growth threshold");

  CLI::App* poset = app.add_subcommand("poset", "pairwise end poset");
  add_spec(poset);
  poset->add_option("--ray", ray_texts, "ray literals")->required();
  poset->add_option("--horizons", horizons_text, "increasing horizons");
  poset->add_option("--k", k, "certified-growth threshold");
  poset->add_option("--format", format, "json or text");

  CLI::App* translate = app.add_subcommand(
      "translate", "rewrite a ray over generators-plus-s to the generators");
  add_spec(translate);
  translate->add_option("--s", s_text, "extra generator (element literal)")
      ->required();
  translate->add_option("--ray", ray_texts,
                        "ray literal over the generators plus 's'")
      ->required();
  translate->add_option("--horizon", horizon, "working horizon")
      ->default_val(48);

  CLI::App* free_pair = app.add_subcommand(
      "free-pair", "right-ideal intersection witness or free evidence");
  add_spec(free_pair);
  free_pair->add_option("--s", s_text, "element literal")->required();
  free_pair->add_option("--t", t_text, "element literal")->required();
  free_pair->add_option("--depth", depth, "search depth");

  CLI::App* verify =
      app.add_subcommand("verify", "run the built-in example catalog");
  verify->add_option("case", case_name, "case name or 'all'");
  verify->add_flag("--list", list_cases, "list case names");
  verify->add_option("--seed", seed, "seed for the randomized suites");
  verify->add_flag("--verbose", verbose, "print passing expectations too");
  verify->add_option("--out", out_path, "write output to a file");

  std::vector<const char*> argv;
  argv.push_back("semiends");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ball->parsed()) {
      models::SpecPtr spec = spec_io::parse_spec(read_file(spec_path));
      cayley::CayleyBall b = cayley::build_ball(spec, radius, {ball_cap});
      if (format == "dot") {
        emit(cayley::export_dot(b), out_path, out);
      } else if (format == "json") {
        emit(cayley::export_json(b), out_path, out);
      } else {
        throw Error("--format: expected dot or json");
      }
      return 0;
    }
    if (scc->parsed()) {
      models::SpecPtr spec = spec_io::parse_spec(read_file(spec_path));
      cayley::CayleyBall b = cayley::build_ball(spec, radius, {ball_cap});
      json doc;
      json comps = json::array();
      for (const auto& comp : cayley::strongly_connected_components(b)) {
        json keys = json::array();
        for (int v : comp) {
          keys.push_back(b.keys[v]);
        }
        comps.push_back(keys);
      }
      doc["components"] = comps;
      doc["radius"] = radius;
      emit(doc.dump(2) + "\n", out_path, out);
      return 0;
    }
    if (green_cmd->parsed()) {
      models::SpecPtr spec = spec_io::parse_spec(read_file(spec_path));
      cayley::CayleyBall b = cayley::build_ball(spec, radius, {ball_cap});
      green::SubsemigroupPredicate T = parse_subsemigroup(spec, sub_text);
      green::GreenReport report = green::green_report(b, T);
      emit(green::report_to_json(b, report), out_path, out);
      return 0;
    }
    if (rees_index->parsed() || green_index->parsed()) {
      models::SpecPtr spec = spec_io::parse_spec(read_file(spec_path));
      green::SubsemigroupPredicate T = parse_subsemigroup(spec, sub_text);
      std::vector<int> radii = parse_int_csv(radii_text, "--radii");
      json doc;
      if (rees_index->parsed()) {
        green::IndexEvidence ev =
            green::rees_index_evidence(spec, T, radii, {ball_cap});
        doc["radii"] = ev.radii;
        doc["complement_counts"] = ev.counts;
        doc["stabilized"] = ev.stabilized;
        doc["index"] = ev.value;
        doc["verdict"] = ev.verdict;
      } else {
        green::GreenIndexEvidence ev =
            green::green_index_evidence(spec, T, radii, {ball_cap});
        doc["radii"] = ev.radii;
        doc["h_class_counts"] = ev.counts;
        doc["r_class_counts"] = ev.r_counts;
        doc["stabilized"] = ev.stabilized;
        doc["value"] = ev.value;
        doc["verdict"] = ev.verdict;
      }
      emit(doc.dump(2) + "\n", out_path, out);
      return 0;
    }
    if (rays->parsed()) {
      models::SpecPtr spec = spec_io::parse_spec(read_file(spec_path));
      ends::EndContext ctx(spec, {ball_cap});
      ends::EnumOptions opts;
      opts.max_period = max_period;
      opts.base_bound = base_bound;
      opts.horizon = horizon;
      if (kind_text == "ray") {
        opts.kind = ends::RayKind::ray;
      } else if (kind_text == "antiray") {
        opts.kind = ends::RayKind::antiray;
      } else {
        throw Error("--kind: expected ray or antiray");
      }
      json doc = json::array();
      for (const auto& r : ends::enumerate_periodic_rays(ctx, opts)) {
        doc.push_back(spec_io::format_ray_literal(
            spec_io::RayLiteral{r.base, r.prefix, r.period,
                                r.kind == ends::RayKind::antiray},
            spec->generator_alphabet()));
      }
      emit(doc.dump(2) + "\n", out_path, out);
      return 0;
    }
    if (compare->parsed() || poset->parsed()) {
      models::SpecPtr spec = spec_io::parse_spec(read_file(spec_path));
      ends::EndContext ctx(spec, {ball_cap});
      ends::CompareOptions opts;
      opts.horizons = parse_int_csv(horizons_text, "--horizons");
      opts.k = k;
      std::vector<ends::PeriodicRay> parsed_rays;
      for (const auto& text : ray_texts) {
        spec_io::RayLiteral lit =
            spec_io::parse_ray_literal(text, spec->generator_alphabet());
        parsed_rays.push_back(ends::PeriodicRay{
            lit.base, lit.prefix, lit.period,
            lit.anti ? ends::RayKind::antiray : ends::RayKind::ray});
      }
      if (compare->parsed()) {
        ends::EndVerdict v =
            ends::end_compare(ctx, parsed_rays[0], parsed_rays[1], opts);
        json doc;
        doc["verdict"] = ends::verdict_name(v.verdict);
        doc["forward"] = evidence_json(v.forward);
        doc["backward"] = evidence_json(v.backward);
        emit(doc.dump(2) + "\n", out_path, out);
        return 0;
      }
      ends::PosetResult result = ends::end_poset(ctx, parsed_rays, opts);
      if (format == "text") {
        emit(ends::poset_to_text(ctx, result), out_path, out);
      } else {
        emit(ends::poset_to_json(ctx, result), out_path, out);
      }
      return 0;
    }
    if (translate->parsed()) {
      models::SpecPtr spec = spec_io::parse_spec(read_file(spec_path));
      ends::EndContext ctx(spec, {ball_cap});
      models::Element s = spec_io::parse_element(*spec, s_text);
      words::Alphabet ext_names = extended_alphabet(*spec);
      spec_io::RayLiteral lit =
          spec_io::parse_ray_literal(ray_texts.at(0), ext_names);
      ends::TranslateOptions opts;
      opts.horizon = horizon;
      ends::TranslateResult result = ends::translate_ray(
          ctx, s,
          ends::PeriodicRay{lit.base, lit.prefix, lit.period,
                            lit.anti ? ends::RayKind::antiray
                                     : ends::RayKind::ray},
          opts);
      json doc;
      doc["ray"] = spec_io::format_ray_literal(
          spec_io::RayLiteral{result.ray.base, result.ray.prefix,
                              result.ray.period, false},
          spec->generator_alphabet());
      doc["dropped"] = result.dropped;
      doc["budget_used"] = result.budget_used;
      doc["shared_at_horizon"] = result.shared_at_horizon;
      emit(doc.dump(2) + "\n", out_path, out);
      return 0;
    }
    if (free_pair->parsed()) {
      models::SpecPtr spec = spec_io::parse_spec(read_file(spec_path));
      models::Element s = spec_io::parse_element(*spec, s_text);
      models::Element t = spec_io::parse_element(*spec, t_text);
      ends::FreePairResult result =
          ends::free_pair_witness(spec, s, t, depth);
      json doc;
      const auto& alphabet = spec->generator_alphabet();
      switch (result.kind) {
        case ends::FreePairResult::Kind::witness:
          doc["kind"] = "intersection-witness";
          doc["u"] = alphabet.format(result.u);
          doc["v"] = alphabet.format(result.v);
          doc["meet"] = result.meet_key;
          break;
        case ends::FreePairResult::Kind::free_evidence:
          doc["kind"] = "free-evidence";
          doc["words_checked"] = result.words_checked;
          break;
        case ends::FreePairResult::Kind::inconclusive:
          doc["kind"] = "inconclusive";
          doc["words_checked"] = result.words_checked;
          break;
      }
      emit(doc.dump(2) + "\n", out_path, out);
      return 0;
    }
    if (verify->parsed()) {
      if (list_cases) {
        std::string text;
        for (const auto& name : catalog::case_names()) {
          text += name + "\n";
        }
        emit(text, out_path, out);
        return 0;
      }
      if (case_name.empty()) {
        throw Error("verify: expected a case name or 'all'");
      }
      catalog::RunConfig cfg;
      cfg.seed = seed;
      cfg.ball_cap = ball_cap;
      std::vector<catalog::CaseResult> results;
      if (case_name == "all") {
        results = catalog::run_all(cfg);
      } else {
        results.push_back(catalog::run_case(case_name, cfg));
      }
      std::string text;
      bool all_pass = true;
      for (const auto& r : results) {
        text += catalog::format_result(r, verbose);
        all_pass = all_pass && r.pass();
      }
      text += all_pass ? "VERIFY PASS\n" : "VERIFY FAIL\n";
      emit(text, out_path, out);
      return all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace semiends::cli
