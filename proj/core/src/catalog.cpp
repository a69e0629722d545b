#include "semiends/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "semiends/spec_io.hpp"

namespace semiends::catalog {

using ends::CompareOptions;
using ends::EndContext;
using ends::PeriodicRay;
using ends::RayKind;
using ends::Verdict;
using models::Element;
using models::SemigroupSpec;
using models::SpecPtr;
using models::Tuple;

bool CaseResult::pass() const {
  return std::all_of(expectations.begin(), expectations.end(),
                     [](const ExpectationResult& e) { return e.pass; });
}

std::string matrix_signature(const ends::PosetResult& poset) {
  std::string out;
  const int n = static_cast<int>(poset.matrix.size());
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      out += '/';
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        out += '=';
        continue;
      }
      switch (poset.matrix[i][j]) {
        case Verdict::equivalent:
          out += '=';
          break;
        case Verdict::first_below_second:
          out += '<';
          break;
        case Verdict::second_below_first:
          out += '>';
          break;
        case Verdict::incomparable:
          out += 'X';
          break;
        case Verdict::unknown:
          out += '?';
          break;
      }
    }
  }
  return out;
}

namespace {

struct Checker {
  CaseResult& result;

  void expect(const std::string& name, const std::string& provenance,
              bool pass, const std::string& detail = "") {
    result.expectations.push_back({name, provenance, pass, detail});
  }

  template <typename T>
  void expect_eq(const std::string& name, const std::string& provenance,
                 const T& got, const T& want) {
    bool pass = got == want;
    std::string detail;
    if constexpr (std::is_arithmetic_v<T>) {
      detail = "got " + std::to_string(got) + ", want " + std::to_string(want);
    } else {
      detail = "got " + std::string(got) + ", want " + std::string(want);
    }
    expect(name, provenance, pass, detail);
  }
};

PeriodicRay ray(words::Word base, words::Word period,
                RayKind kind = RayKind::ray) {
  return PeriodicRay{std::move(base), {}, std::move(period), kind};
}

words::Word rep(words::Letter x, int times) {
  return words::Word(times, x);
}

// ---------------------------------------------------------------- specs ---

SpecPtr int_line() {
  return SemigroupSpec::lattice(1, {{1}, {-1}});
}

SpecPtr nxn() {
  return SemigroupSpec::naturals(2, {{1, 0}, {0, 1}});
}

SpecPtr zz01() {
  return SemigroupSpec::grid_flag(
      2, false,
      {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{0, 0}, 0}});
}

SpecPtr zzn0() {
  return SemigroupSpec::grid_flag(
      2, true,
      {{{1, 0}, 0}, {{-1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, 0}, {{0, 0}, 1}},
      true);
}

SpecPtr zzn0_sub() {
  // Z^2 x (N_0 minus {1}): flag steps of 2 and 3 generate every flag but 1.
  return SemigroupSpec::grid_flag(2, true,
                                  {{{1, 0}, 0},
                                   {{-1, 0}, 0},
                                   {{0, 1}, 0},
                                   {{0, -1}, 0},
                                   {{0, 0}, 2},
                                   {{0, 0}, 3}},
                                  true);
}

SpecPtr rees_z2() {
  return SemigroupSpec::rees_matrix(1, 2, 1, {{{0}, {0}}},
                                    {{0}, {1}, {-1}});
}

SpecPtr aba_monoid() {
  words::Alphabet alphabet({"a", "b"});
  std::vector<words::RewriteRule> rules{
      {alphabet.parse("aba"), alphabet.parse("b")},
      {alphabet.parse("bba"), alphabet.parse("abb")},
  };
  return SemigroupSpec::presented(
      words::RewriteSystem(std::move(alphabet), std::move(rules)), true);
}

green::SubsemigroupPredicate flag_in(const SpecPtr& spec,
                                     std::set<models::Int> flags,
                                     const std::string& desc) {
  return green::make_subsemigroup(
      spec,
      [flags](const Element& x) {
        return flags.count(std::get<models::GridElem>(x.v).flag) > 0;
      },
      desc);
}

green::SubsemigroupPredicate flag_not_in(const SpecPtr& spec,
                                         std::set<models::Int> flags,
                                         const std::string& desc) {
  return green::make_subsemigroup(
      spec,
      [flags](const Element& x) {
        return flags.count(std::get<models::GridElem>(x.v).flag) == 0;
      },
      desc);
}

// ---------------------------------------------------------------- cases ---

void case_rewriting(Checker& check) {
  SpecPtr spec = aba_monoid();
  const auto& sys =
      std::get<SemigroupSpec::Presented>(spec->variant()).system;
  words::ConfluenceReport report = words::is_locally_confluent(sys);
  check.expect("locally confluent", "stated", report.locally_confluent);
  check.expect_eq<int>("unjoinable critical pairs", "stated",
                       static_cast<int>(report.unjoinable.size()), 0);
  const auto& alphabet = sys.alphabet();
  check.expect_eq<std::string>(
      "normal form of aba", "stated",
      alphabet.format(sys.normal_form(alphabet.parse("aba"))), "b");
  check.expect_eq<std::string>(
      "normal form of bbaa", "oracle: exhaustive rewriting (frozen)",
      alphabet.format(sys.normal_form(alphabet.parse("bbaa"))), "aabb");
}

void case_int_line(Checker& check, const RunConfig& cfg) {
  EndContext ctx(int_line(), {cfg.ball_cap});
  ends::EnumOptions en;
  en.max_period = 1;
  en.base_bound = 1;
  en.horizon = 24;
  std::vector<PeriodicRay> rays = ends::enumerate_periodic_rays(ctx, en);
  CompareOptions opts;
  opts.horizons = {8, 12, 16, 24};  // as stated for this example; k = 4
  ends::PosetResult poset = ends::end_poset(ctx, rays, opts);
  check.expect_eq<int>("certified end classes", "stated",
                       static_cast<int>(poset.classes.size()), 2);
  check.expect_eq<int>("unknown pairs", "stated", poset.unknown_pairs, 0);
  bool cross_incomparable = true;
  for (size_t a = 0; a < poset.classes.size(); ++a) {
    for (size_t b = a + 1; b < poset.classes.size(); ++b) {
      for (int i : poset.classes[a]) {
        for (int j : poset.classes[b]) {
          Verdict v = i < j ? poset.matrix[i][j] : poset.matrix[j][i];
          cross_incomparable =
              cross_incomparable && v == Verdict::incomparable;
        }
      }
    }
  }
  check.expect("classes pairwise incomparable", "stated", cross_incomparable);
}

const char* kNxnSignature =
    "=<<<XXXX</>=<<XXXX</>>=<XXXX</>>>=XXXX</"
    "XXXX=<<<</XXXX>=<<</XXXX>>=<</XXXX>>>=</>>>>>>>>=";

std::vector<PeriodicRay> nxn_rays() {
  std::vector<PeriodicRay> rays;
  for (int i = 0; i < 4; ++i) {
    rays.push_back(ray(rep(0, i), {1}));  // row i: (i,0),(i,1),...
  }
  for (int i = 0; i < 4; ++i) {
    rays.push_back(ray(rep(1, i), {0}));  // column i: (0,i),(1,i),...
  }
  rays.push_back(ray({}, {0, 1}));  // diagonal staircase
  return rays;
}

void case_nxn(Checker& check, const RunConfig& cfg) {
  EndContext ctx(nxn(), {cfg.ball_cap});
  ends::PosetResult poset = ends::end_poset(ctx, nxn_rays(), {});
  check.expect_eq<int>("distinct certified classes", "stated",
                       static_cast<int>(poset.classes.size()), 9);
  check.expect_eq<int>("unknown pairs", "stated", poset.unknown_pairs, 0);
  check.expect_eq<std::string>(
      "two chains joined below the diagonal class",
      "oracle: disjoint-path families by direct construction",
      matrix_signature(poset), kNxnSignature);
}

void case_zz01(Checker& check, const RunConfig& cfg) {
  SpecPtr spec = zz01();
  EndContext ctx(spec, {cfg.ball_cap});
  // Generators in declared order: a=(1,0;1), b=(-1,0;1), c=(0,1;1),
  // d=(0,-1;1), e=(0,0;0).
  std::vector<PeriodicRay> rays{
      ray({0}, {0}),  // (t,0;1)
      ray({2}, {2}),  // (0,t;1)
      ray({4}, {0}),  // (t,0;0)
      ray({4}, {2}),  // (0,t;0)
  };
  ends::PosetResult poset = ends::end_poset(ctx, rays, {});
  check.expect_eq<int>("certified end classes", "stated",
                       static_cast<int>(poset.classes.size()), 2);
  check.expect_eq<int>("unknown pairs", "stated", poset.unknown_pairs, 0);
  check.expect_eq<std::string>("flag-1 class strictly below flag-0 class",
                               "stated", matrix_signature(poset),
                               std::string("==<</==<</>>==/>>=="));

  // The subsemigroup Z^2 x {1} on its own: a lattice with one end.
  SpecPtr sub = SemigroupSpec::lattice(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  EndContext sub_ctx(sub, {cfg.ball_cap});
  std::vector<PeriodicRay> sub_rays{ray({0}, {0}), ray({1}, {1}),
                                    ray({2}, {2}), ray({3}, {3})};
  ends::PosetResult sub_poset = ends::end_poset(sub_ctx, sub_rays, {});
  check.expect_eq<int>("subsemigroup end classes", "stated",
                       static_cast<int>(sub_poset.classes.size()), 1);
  check.expect_eq<int>("subsemigroup unknown pairs", "stated",
                       sub_poset.unknown_pairs, 0);

  green::GreenIndexEvidence ev = green::green_index_evidence(
      spec, flag_in(spec, {1}, "Z^2 x {1}"), {2, 3, 4, 5}, {cfg.ball_cap});
  check.expect("relative H-classes in the complement stabilize", "stated",
               ev.stabilized, ev.verdict);
  check.expect_eq<long long>("complement H-class count", "stated",
                             ev.stabilized ? ev.value : -1, 1);
}

void case_rees_z2(Checker& check, const RunConfig& cfg) {
  SpecPtr spec = rees_z2();
  EndContext ctx(spec, {cfg.ball_cap});
  // Canonical generator order: a=(1|0|1), b=(1|1|1), c=(2|0|1), d=(2|1|1),
  // e=(1|-1|1), f=(2|-1|1).
  std::vector<PeriodicRay> rays{
      ray({1}, {1}),  // component 1, ascending
      ray({4}, {4}),  // component 1, descending
      ray({3}, {3}),  // component 2, ascending
      ray({5}, {5}),  // component 2, descending
  };
  ends::PosetResult poset = ends::end_poset(ctx, rays, {});
  check.expect_eq<int>("right end classes", "stated",
                       static_cast<int>(poset.classes.size()), 4);
  check.expect("right ends form an antichain", "stated",
               poset.antichain() && poset.unknown_pairs == 0,
               matrix_signature(poset));

  EndContext dual_ctx(models::dual_spec(spec), {cfg.ball_cap});
  ends::PosetResult dual_poset = ends::end_poset(dual_ctx, rays, {});
  check.expect_eq<int>("left end classes", "stated",
                       static_cast<int>(dual_poset.classes.size()), 2);
  check.expect("left ends form an antichain", "stated",
               dual_poset.antichain() && dual_poset.unknown_pairs == 0,
               matrix_signature(dual_poset));

  // No edge of the ball crosses between the two I-components.
  const cayley::CayleyBall& ball = ctx.ball(6);
  bool decomposed = true;
  for (const auto& e : ball.edges) {
    int i_src = std::get<models::ReesElem>(ball.vertices[e.src].v).i;
    int i_dst = std::get<models::ReesElem>(ball.vertices[e.dst].v).i;
    decomposed = decomposed && i_src == i_dst;
  }
  check.expect("components are pairwise disconnected",
               "oracle: edge scan of the ball", decomposed);
}

void case_zzn0(Checker& check, const RunConfig& cfg) {
  SpecPtr spec = zzn0();
  EndContext ctx(spec, {cfg.ball_cap});
  // Generators: a=(1,0;0), b=(-1,0;0), c=(0,1;0), d=(0,-1;0), e=(0,0;1).
  std::vector<PeriodicRay> rays;
  for (int flag = 0; flag < 4; ++flag) {
    rays.push_back(ray(rep(4, flag), {0}));  // (t,0;flag)
  }
  rays.push_back(ray({}, {4}));  // the vertical ray (0,0;t)
  ends::PosetResult poset = ends::end_poset(ctx, rays, {});
  check.expect_eq<int>("certified end classes", "stated",
                       static_cast<int>(poset.classes.size()), 5);
  check.expect_eq<int>("unknown pairs", "stated", poset.unknown_pairs, 0);
  check.expect("flag rays and the vertical ray pairwise comparable (chain)",
               "stated", poset.chain(), matrix_signature(poset));
  check.expect_eq<std::string>(
      "the vertical class tops the flag chain",
      "oracle: flag-lane disjoint-path construction", matrix_signature(poset),
      std::string("=<<<</>=<<</>>=<</>>>=</>>>>="));

  SpecPtr sub = zzn0_sub();
  EndContext sub_ctx(sub, {cfg.ball_cap});
  // Sub generators: ..., e=(0,0;2), f=(0,0;3).
  std::vector<PeriodicRay> sub_rays{ray({4}, {0}), ray({5}, {0})};
  ends::PosetResult sub_poset = ends::end_poset(sub_ctx, sub_rays, {});
  check.expect_eq<std::string>(
      "flag-2 and flag-3 rays incomparable inside the subsemigroup",
      "stated", matrix_signature(sub_poset), std::string("=X/X="));

  green::GreenIndexEvidence ev = green::green_index_evidence(
      spec, flag_not_in(spec, {1}, "Z^2 x (N_0 minus 1)"), {2, 3, 4, 5},
      {cfg.ball_cap});
  check.expect("relative H-classes in the complement stabilize", "stated",
               ev.stabilized, ev.verdict);
  check.expect_eq<long long>("complement H-class count", "stated",
                             ev.stabilized ? ev.value : -1, 1);
}

void case_aba_ends(Checker& check, const RunConfig& cfg) {
  SpecPtr spec = aba_monoid();
  EndContext ctx(spec, {cfg.ball_cap});
  CompareOptions opts;
  opts.horizons = {8, 12, 16};

  // Sample: two rightward rays at even heights and two leftward anti-rays.
  std::vector<PeriodicRay> sample{
      ray({}, {0}),                         // 1, a, a^2, ...
      ray({1, 1}, {0}),                     // b^2, ab^2, a^2 b^2, ...
      ray({1}, {0}, RayKind::antiray),      // b, ab, a^2 b, ...
      ray({1, 1}, {0}, RayKind::antiray),   // b^2, bab, ba^2 b, ...
  };
  ends::PosetResult poset = ends::end_poset(ctx, sample, opts);
  check.expect_eq<std::string>(
      "sample verdict matrix",
      "oracle: corridor/funnel analysis of the two-sheet graph",
      matrix_signature(poset), std::string("=<<X/>=>X/><=X/XXX="));

  ends::EnumOptions en;
  en.max_period = 2;
  en.base_bound = 2;
  en.horizon = 16;
  en.kind = RayKind::ray;
  std::vector<PeriodicRay> rays = ends::enumerate_periodic_rays(ctx, en);
  ends::PosetResult enum_poset = ends::end_poset(ctx, rays, opts);

  // Largest set of classes whose members are pairwise certified
  // incomparable.
  const int nc = static_cast<int>(enum_poset.classes.size());
  std::vector<std::vector<bool>> incomp(nc, std::vector<bool>(nc, false));
  for (int a = 0; a < nc; ++a) {
    for (int b = a + 1; b < nc; ++b) {
      bool all = true;
      for (int i : enum_poset.classes[a]) {
        for (int j : enum_poset.classes[b]) {
          Verdict v = i < j ? enum_poset.matrix[i][j] : enum_poset.matrix[j][i];
          all = all && v == Verdict::incomparable;
        }
      }
      incomp[a][b] = incomp[b][a] = all;
    }
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nc); ++mask) {
    bool ok = true;
    for (int a = 0; a < nc && ok; ++a) {
      if (!(mask & (1u << a))) {
        continue;
      }
      for (int b = a + 1; b < nc && ok; ++b) {
        if ((mask & (1u << b)) && !incomp[a][b]) {
          ok = false;
        }
      }
    }
    if (ok) {
      best = std::max(best, __builtin_popcount(mask));
    }
  }
  check.expect(
      "at least 4 pairwise-incomparable certified ray classes", "stated",
      best >= 4,
      "largest pairwise-incomparable class set has size " +
          std::to_string(best) + " among " + std::to_string(nc) +
          " enumerated classes");

  en.kind = RayKind::antiray;
  std::vector<PeriodicRay> antis = ends::enumerate_periodic_rays(ctx, en);
  bool found = false;
  std::string which;
  for (const auto& anti : antis) {
    bool all_incomparable = true;
    for (const auto& sampled : {sample[0], sample[1]}) {
      ends::EndVerdict v = ends::end_compare(ctx, anti, sampled, opts);
      all_incomparable =
          all_incomparable && v.verdict == Verdict::incomparable;
    }
    if (all_incomparable) {
      found = true;
      which = spec_io::format_ray_literal(
          spec_io::RayLiteral{anti.base, anti.prefix, anti.period, true},
          spec->generator_alphabet());
      break;
    }
  }
  check.expect("an enumerated anti-ray incomparable with every sampled ray",
               "stated", found, which);
}

// Exhaustive maximal packing of vertex-disjoint source-target paths,
// independent of the flow implementation. Only usable for tiny digraphs.
int brute_force_disjoint_paths(const digraph::Digraph& g,
                               const std::vector<int>& sources,
                               const std::vector<int>& targets) {
  const int n = g.size();
  std::set<int> target_set(targets.begin(), targets.end());
  std::set<unsigned> usable;  // vertex sets of simple source-target paths
  for (int s : sources) {
    std::vector<std::pair<int, unsigned>> stack{
        {s, 1u << s}};
    while (!stack.empty()) {
      auto [v, mask] = stack.back();
      stack.pop_back();
      if (target_set.count(v)) {
        usable.insert(mask);
      }
      for (int w : g.out(v)) {
        if (!(mask & (1u << w))) {
          stack.push_back({w, mask | (1u << w)});
        }
      }
    }
  }
  std::vector<unsigned> sets(usable.begin(), usable.end());
  std::map<unsigned, int> memo;
  std::function<int(unsigned)> best = [&](unsigned avail) {
    auto it = memo.find(avail);
    if (it != memo.end()) {
      return it->second;
    }
    int value = 0;
    for (unsigned s : sets) {
      if ((s & avail) == s) {
        value = std::max(value, 1 + best(avail & ~s));
      }
    }
    memo[avail] = value;
    return value;
  };
  return best((1u << n) - 1);
}

void case_menger_oracle(Checker& check, const RunConfig& cfg) {
  std::mt19937 rng(cfg.seed);
  int mismatches = 0;
  int cases = 0;
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> size_dist(2, 8);
    const int n = size_dist(rng);
    digraph::Digraph g(n);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && prob(rng) < 0.3) {
          g.add_edge(u, v);
        }
      }
    }
    g.finalize();
    std::vector<int> sources, targets;
    for (int v = 0; v < n; ++v) {
      if (prob(rng) < 0.4) {
        sources.push_back(v);
      }
      if (prob(rng) < 0.4) {
        targets.push_back(v);
      }
    }
    if (sources.empty()) {
      sources.push_back(0);
    }
    if (targets.empty()) {
      targets.push_back(n - 1);
    }
    ++cases;
    digraph::PathPacking packing =
        digraph::max_vertex_disjoint_paths(g, sources, targets);
    int expected = brute_force_disjoint_paths(g, sources, targets);
    if (packing.count != expected) {
      ++mismatches;
    }
  }
  check.expect_eq<int>("cases checked", "oracle: brute-force packing", cases,
                       200);
  check.expect_eq<int>("flow vs brute-force mismatches",
                       "oracle: brute-force packing", mismatches, 0);
}

void case_lemma_suites(Checker& check, const RunConfig& cfg) {
  std::mt19937 rng(cfg.seed ^ 0x9e3779b9u);

  // Random finite walks: the extraction must always produce a
  // distinct-vertex subsequence whose consecutive pairs are edges.
  int walk_failures = 0;
  for (int iter = 0; iter < 500; ++iter) {
    std::uniform_int_distribution<int> size_dist(3, 12);
    const int n = size_dist(rng);
    std::vector<std::vector<int>> out(n);
    for (int v = 0; v < n; ++v) {
      std::uniform_int_distribution<int> deg(1, 3);
      int d = deg(rng);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int i = 0; i < d; ++i) {
        out[v].push_back(pick(rng));
      }
    }
    std::uniform_int_distribution<int> len_dist(2, 30);
    const int len = len_dist(rng);
    std::uniform_int_distribution<int> start(0, n - 1);
    std::vector<int> walk{start(rng)};
    for (int i = 1; i < len; ++i) {
      const auto& succ = out[walk.back()];
      std::uniform_int_distribution<size_t> pick(0, succ.size() - 1);
      walk.push_back(succ[pick(rng)]);
    }
    std::vector<std::string> keys;
    for (int v : walk) {
      keys.push_back(std::to_string(v));
    }
    ends::WalkToRay extraction = ends::walk_to_ray(keys);
    std::set<int> seen;
    bool ok = !extraction.picked.empty();
    for (size_t j = 0; j < extraction.picked.size() && ok; ++j) {
      size_t idx = extraction.picked[j];
      ok = idx < walk.size() && seen.insert(walk[idx]).second;
      if (ok && j + 1 < extraction.picked.size()) {
        // The step into the next pick is an edge of the walk itself.
        size_t next = extraction.picked[j + 1];
        ok = next > idx && walk[next - 1] == walk[idx];
      }
    }
    if (!ok) {
      ++walk_failures;
    }
  }
  check.expect_eq<int>("walk extraction failures (500 walks)",
                       "oracle: direct validation of the extraction",
                       walk_failures, 0);

  // Random out-locally-finite DAGs: the dominance recursion must emit
  // verified pairwise-disjoint connector families (validated internally).
  int dag_failures = 0;
  int dags = 0;
  for (int attempts = 0; dags < 100 && attempts < 1000; ++attempts) {
    std::uniform_int_distribution<int> size_dist(5, 40);
    const int n = size_dist(rng);
    digraph::Digraph g(n);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    for (int u = 0; u < n; ++u) {
      int degree = 0;
      for (int v = u + 1; v < n && degree < 3; ++v) {
        if (prob(rng) < 6.0 / n) {
          g.add_edge(u, v);
          ++degree;
        }
      }
    }
    g.finalize();
    std::vector<bool> reach = digraph::reachable_set(g, {0});
    std::vector<int> candidates;
    for (int v = 1; v < n; ++v) {
      if (reach[v]) {
        candidates.push_back(v);
      }
    }
    if (candidates.empty()) {
      continue;
    }
    std::vector<int> sigma;
    for (int v : candidates) {
      if (prob(rng) < 0.5 && sigma.size() < 10) {
        sigma.push_back(v);
      }
    }
    if (sigma.empty()) {
      sigma.push_back(candidates.front());
    }
    ++dags;
    try {
      ends::DominanceResult result = ends::dominance_ray(g, 0, sigma);
      if (result.connectors.empty()) {
        ++dag_failures;
      }
    } catch (const Error&) {
      ++dag_failures;
    }
  }
  check.expect("dominance recursion ran on 100 random DAGs",
               "oracle: internal disjointness validation", dags == 100,
               std::to_string(dags) + " DAGs");
  check.expect_eq<int>("dominance validation failures",
                       "oracle: internal disjointness validation",
                       dag_failures, 0);
}

void case_nxn_genset(Checker& check, const RunConfig& cfg) {
  SpecPtr base = nxn();
  EndContext ctx(base, {cfg.ball_cap});
  ends::PosetResult reference = ends::end_poset(ctx, nxn_rays(), {});
  std::string want = matrix_signature(reference);

  // The same sample expressed over {a, b, s} with s = (1,1): rows and
  // columns verbatim, the diagonal as the pure s-ray.
  std::vector<PeriodicRay> extended_rays;
  for (int i = 0; i < 4; ++i) {
    extended_rays.push_back(ray(rep(0, i), {1}));
  }
  for (int i = 0; i < 4; ++i) {
    extended_rays.push_back(ray(rep(1, i), {0}));
  }
  extended_rays.push_back(ray({}, {2}));

  Element s = models::make_tuple_elem({1, 1});
  std::vector<Element> ext_gens = base->generators();
  ext_gens.push_back(s);
  SpecPtr extended = SemigroupSpec::with_generators(base, ext_gens,
                                                    {"a", "b", "s"});
  EndContext ext_ctx(extended, {cfg.ball_cap});
  ends::PosetResult ext_poset = ends::end_poset(ext_ctx, extended_rays, {});
  check.expect_eq<std::string>(
      "verdict matrix over the enlarged generating set", "stated",
      matrix_signature(ext_poset), want);

  std::vector<PeriodicRay> translated;
  int shared_min = 1 << 30;
  for (const auto& r : extended_rays) {
    ends::TranslateResult t = ends::translate_ray(ctx, s, r);
    translated.push_back(t.ray);
    shared_min = std::min(shared_min, t.shared_at_horizon);
  }
  ends::PosetResult tr_poset = ends::end_poset(ctx, translated, {});
  check.expect_eq<std::string>("verdict matrix after ray translation",
                               "stated", matrix_signature(tr_poset), want);
  check.expect("translated rays interleave the originals", "stated",
               shared_min >= 8,
               "minimum shared vertices at the working horizon: " +
                   std::to_string(shared_min));
}

void case_nxn_rees_index(Checker& check, const RunConfig& cfg) {
  SpecPtr spec = nxn();
  Element identity = models::make_tuple_elem({0, 0});
  green::SubsemigroupPredicate T = green::make_subsemigroup(
      spec,
      [identity](const Element& x) { return !(x == identity); },
      "everything but the identity");
  green::IndexEvidence ev =
      green::rees_index_evidence(spec, T, {2, 3, 4, 5}, {cfg.ball_cap});
  check.expect("complement counts stabilize", "stated", ev.stabilized,
               ev.verdict);
  check.expect_eq<long long>("Rees index", "stated",
                             ev.stabilized ? ev.value : -1, 2);

  // The subsemigroup with the identity removed has the same sampled end
  // poset as the full monoid.
  SpecPtr sub = SemigroupSpec::naturals(2, {{1, 0}, {0, 1}}, false);
  EndContext sub_ctx(sub, {cfg.ball_cap});
  std::vector<PeriodicRay> sub_rays;
  for (int i = 0; i < 4; ++i) {
    words::Word base = rep(0, i);
    base.push_back(1);
    sub_rays.push_back(ray(std::move(base), {1}));  // row i from (i,1)
  }
  for (int i = 0; i < 4; ++i) {
    words::Word base = rep(1, i);
    base.push_back(0);
    sub_rays.push_back(ray(std::move(base), {0}));  // column i from (1,i)
  }
  sub_rays.push_back(ray({0, 1}, {0, 1}));  // diagonal from (1,1)
  ends::PosetResult sub_poset = ends::end_poset(sub_ctx, sub_rays, {});
  check.expect_eq<std::string>("sampled end poset matches the monoid's",
                               "stated", matrix_signature(sub_poset),
                               std::string(kNxnSignature));
}

struct CaseEntry {
  std::string name;
  int criterion;
  double budget_seconds;
  void (*run)(Checker&, const RunConfig&);
};

void case_rewriting_entry(Checker& check, const RunConfig&) {
  case_rewriting(check);
}

const std::vector<CaseEntry>& case_table() {
  static const std::vector<CaseEntry> table{
      {"rewriting", 1, 1.0, case_rewriting_entry},
      {"int-line", 2, 5.0, case_int_line},
      {"nxn", 3, 15.0, case_nxn},
      {"zz01", 4, 15.0, case_zz01},
      {"rees-z2", 5, 30.0, case_rees_z2},
      {"zzn0", 6, 30.0, case_zzn0},
      {"aba-ends", 7, 60.0, case_aba_ends},
      {"menger-oracle", 8, 10.0, case_menger_oracle},
      {"lemma-suites", 9, 10.0, case_lemma_suites},
      {"nxn-genset", 10, 20.0, case_nxn_genset},
      {"nxn-rees-index", 11, 15.0, case_nxn_rees_index},
  };
  return table;
}

}  // namespace

std::vector<std::string> case_names() {
  std::vector<std::string> names;
  for (const auto& entry : case_table()) {
    names.push_back(entry.name);
  }
  return names;
}

int case_criterion(const std::string& name) {
  for (const auto& entry : case_table()) {
    if (entry.name == name) {
      return entry.criterion;
    }
  }
  throw Error("case_criterion: unknown case '" + name + "'");
}

CaseResult run_case(const std::string& name, const RunConfig& cfg) {
  for (const auto& entry : case_table()) {
    if (entry.name != name) {
      continue;
    }
    CaseResult result;
    result.name = entry.name;
    result.criterion = entry.criterion;
    result.budget_seconds = entry.budget_seconds;
    Checker check{result};
    auto start = std::chrono::steady_clock::now();
    try {
      entry.run(check, cfg);
    } catch (const std::exception& e) {
      check.expect("case completed without errors", "stated", false,
                   e.what());
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    check.expect("within the time budget", "stated",
                 result.seconds <= entry.budget_seconds,
                 std::to_string(result.seconds) + "s of " +
                     std::to_string(entry.budget_seconds) + "s");
    return result;
  }
  throw Error("run_case: unknown case '" + name + "'");
}

std::vector<CaseResult> run_all(const RunConfig& cfg) {
  std::vector<CaseResult> results;
  for (const auto& name : case_names()) {
    results.push_back(run_case(name, cfg));
  }
  return results;
}

std::string format_result(const CaseResult& result, bool verbose) {
  std::string out = "[" + std::to_string(result.criterion) + "] " +
                    (result.pass() ? "PASS" : "FAIL") + " " + result.name;
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), " (%.2fs)", result.seconds);
  out += buffer;
  out += "\n";
  for (const auto& e : result.expectations) {
    if (!verbose && e.pass) {
      continue;
    }
    out += std::string("  ") + (e.pass ? "ok    " : "FAIL  ") + e.name + " [" +
           e.provenance + "]";
    if (!e.detail.empty()) {
      out += ": " + e.detail;
    }
    out += "\n";
  }
  return out;
}

}  // namespace semiends::catalog
