#include <set>

#include "doctest.h"
#include "semiends/ends.hpp"

using namespace semiends;
using ends::EndContext;
using ends::PeriodicRay;
using ends::RayKind;
using ends::Verdict;
using models::Element;
using models::SemigroupSpec;
using models::SpecPtr;

namespace {

SpecPtr int_line() { return SemigroupSpec::lattice(1, {{1}, {-1}}); }
SpecPtr nxn() { return SemigroupSpec::naturals(2, {{1, 0}, {0, 1}}); }

SpecPtr free_monoid() {
  return SemigroupSpec::presented(
      words::RewriteSystem(words::Alphabet({"a", "b"}), {}), true);
}

SpecPtr aba_monoid() {
  words::Alphabet ab({"a", "b"});
  return SemigroupSpec::presented(
      words::RewriteSystem(ab, {{ab.parse("aba"), ab.parse("b")},
                                {ab.parse("bba"), ab.parse("abb")}}),
      true);
}

PeriodicRay ray(words::Word base, words::Word period,
                RayKind kind = RayKind::ray) {
  return PeriodicRay{std::move(base), {}, std::move(period), kind};
}

}  // namespace

TEST_CASE("ray evaluation") {
  SUBCASE("forward on the quadrant") {
    EndContext ctx(nxn());
    ends::RayEval eval = ends::ray_vertices(ctx, ray({}, {0}), 3);
    REQUIRE(eval.ok());
    CHECK(eval.keys == std::vector<std::string>{"(0,0)", "(1,0)", "(2,0)"});
  }
  SUBCASE("finite tables force a repetition") {
    SpecPtr c2 = SemigroupSpec::finite_table({{0, 1}, {1, 0}});
    EndContext ctx(c2);
    ends::RayEval eval = ends::ray_vertices(ctx, ray({1}, {1}), 5);
    CHECK(eval.status == ends::RayEval::Status::repeats);
    CHECK(eval.collision.first < eval.collision.second);
  }
  SUBCASE("anti-ray on the integer line") {
    EndContext ctx(int_line());
    ends::RayEval eval =
        ends::ray_vertices(ctx, ray({}, {0}, RayKind::antiray), 3);
    REQUIRE(eval.ok());
    CHECK(eval.keys == std::vector<std::string>{"0", "-1", "-2"});
  }
  SUBCASE("anti-rays die out in the quadrant") {
    EndContext ctx(nxn());
    ends::RayEval eval =
        ends::ray_vertices(ctx, ray({}, {0}, RayKind::antiray), 3);
    CHECK(eval.status == ends::RayEval::Status::dead_end);
  }
  SUBCASE("anti-ray by ball search on the aba-monoid") {
    EndContext ctx(aba_monoid());
    ends::RayEval eval =
        ends::ray_vertices(ctx, ray({1}, {0}, RayKind::antiray), 4);
    REQUIRE(eval.ok());
    CHECK(eval.keys ==
          std::vector<std::string>{"b", "ab", "aab", "aaab"});
  }
  SUBCASE("prefixes are consumed before the period") {
    EndContext ctx(nxn());
    PeriodicRay r{{}, {0}, {1}, RayKind::ray};  // prefix a, then b forever
    ends::RayEval eval = ends::ray_vertices(ctx, r, 4);
    REQUIRE(eval.ok());
    CHECK(eval.keys == std::vector<std::string>{"(0,0)", "(1,0)", "(1,1)",
                                                "(1,2)"});
  }
}

TEST_CASE("anti-ray steps satisfy the reversed-edge equation") {
  std::vector<SpecPtr> specs{
      int_line(),
      SemigroupSpec::lattice(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
      SemigroupSpec::grid_flag(
          2, false,
          {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{0, 0}, 0}}),
      SemigroupSpec::rees_matrix(1, 2, 1, {{{0}, {0}}}, {{0}, {1}, {-1}}),
      aba_monoid(),
  };
  for (const auto& spec : specs) {
    EndContext ctx(spec);
    ends::EnumOptions opts;
    opts.kind = RayKind::antiray;
    opts.max_period = 2;
    opts.base_bound = 2;
    opts.horizon = 8;
    for (const auto& r : ends::enumerate_periodic_rays(ctx, opts)) {
      ends::RayEval eval = ends::ray_vertices(ctx, r, opts.horizon);
      REQUIRE(eval.ok());
      for (int i = 0; i + 1 < opts.horizon; ++i) {
        words::Letter label = i < static_cast<int>(r.prefix.size())
                                  ? r.prefix[i]
                                  : r.period[(i - r.prefix.size()) %
                                             r.period.size()];
        CHECK(spec->multiply(eval.vertices[i + 1],
                             spec->generators()[label]) == eval.vertices[i]);
      }
    }
  }
}

TEST_CASE("walk to ray extraction") {
  SUBCASE("the worked example") {
    ends::WalkToRay out = ends::walk_to_ray({"x", "y", "x", "z", "w"});
    CHECK(out.picked == std::vector<size_t>{1, 2, 3, 4});
  }
  SUBCASE("all distinct drops only the first vertex") {
    ends::WalkToRay out = ends::walk_to_ray({"v0", "v1", "v2", "v3"});
    CHECK(out.picked == std::vector<size_t>{1, 2, 3});
  }
  SUBCASE("walks need two vertices") {
    CHECK_THROWS_AS(ends::walk_to_ray({"v"}), Error);
  }
}

TEST_CASE("bounded concatenation check") {
  EndContext ctx(int_line());
  const cayley::CayleyBall& ball = ctx.ball(10);
  auto at = [&](int value) { return *ball.find_key(std::to_string(value)); };

  SUBCASE("ten single edges with disjoint heads and tails") {
    std::vector<std::vector<int>> walks;
    for (int v = -9; v <= 9; v += 2) {
      walks.push_back({at(v), at(v + 1)});
    }
    REQUIRE(walks.size() == 10);
    ends::ConcatCheck check = ends::bounded_concat_check(ball, walks, 1);
    CHECK(check.precondition_error.empty());
    CHECK(check.pass);
    CHECK(check.max_multiplicity == 1);
  }
  SUBCASE("five walks through one shared vertex") {
    std::vector<std::vector<int>> walks;
    for (int target = 1; target <= 5; ++target) {
      std::vector<int> walk{at(-1), at(0)};
      for (int v = 1; v <= target; ++v) {
        walk.push_back(at(v));
      }
      walks.push_back(std::move(walk));
    }
    ends::ConcatCheck check = ends::bounded_concat_check(ball, walks, 6);
    CHECK(check.precondition_error.empty());
    CHECK(check.pass);
    CHECK(check.max_multiplicity == 5);
    REQUIRE(check.max_vertex.has_value());
    // Both -1 and 0 occur five times; the reported one is a shared vertex.
    std::set<std::string> shared{"-1", "0"};
    CHECK(shared.count(ball.keys[*check.max_vertex]) == 1);
  }
  SUBCASE("duplicated final vertices violate the precondition") {
    std::vector<std::vector<int>> walks{{at(0), at(1)}, {at(2), at(1)}};
    ends::ConcatCheck check = ends::bounded_concat_check(ball, walks, 1);
    CHECK_FALSE(check.precondition_error.empty());
  }
  SUBCASE("over-long walks violate the precondition") {
    std::vector<std::vector<int>> walks{{at(0), at(1), at(2)}};
    CHECK_FALSE(
        ends::bounded_concat_check(ball, walks, 1).precondition_error.empty());
  }
}

TEST_CASE("dominance recursion") {
  SUBCASE("directed path") {
    digraph::Digraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.finalize();
    ends::DominanceResult result = ends::dominance_ray(g, 0, {1, 2});
    CHECK(result.prefix == std::vector<int>{0, 1, 2});
    REQUIRE(result.connectors.size() == 2);
    for (const auto& connector : result.connectors) {
      CHECK(connector.size() == 1);  // length-0 tails
    }
  }
  SUBCASE("out-directed binary tree of depth 4") {
    const int depth = 4;
    const int n = (1 << (depth + 1)) - 1;
    digraph::Digraph g(n);
    for (int v = 0; 2 * v + 2 < n; ++v) {
      g.add_edge(v, 2 * v + 1);
      g.add_edge(v, 2 * v + 2);
    }
    g.finalize();
    std::vector<int> leaves;
    for (int v = (1 << depth) - 1; v < n; ++v) {
      leaves.push_back(v);
    }
    ends::DominanceResult result = ends::dominance_ray(g, 0, leaves);
    CHECK(result.prefix.size() == depth + 1);  // a root-to-leaf branch
    CHECK(result.connectors.size() >= 2);
  }
  SUBCASE("diagonal targets in the quadrant") {
    EndContext ctx(nxn());
    const cayley::CayleyBall& ball = ctx.ball(6);
    ends::DominanceResult result =
        ends::dominance_ray(ball, "(0,0)", {"(1,1)", "(2,2)", "(3,3)"});
    CHECK(result.connectors.size() == 3);
  }
  SUBCASE("unreachable sigma") {
    digraph::Digraph g(2);
    g.finalize();
    CHECK_THROWS_AS(ends::dominance_ray(g, 0, {1}), Error);
  }
}

TEST_CASE("periodic ray enumeration") {
  SUBCASE("the integer line has two period-1 directions") {
    EndContext ctx(int_line());
    ends::EnumOptions opts;
    opts.max_period = 2;
    opts.base_bound = 0;
    opts.horizon = 12;
    std::vector<PeriodicRay> rays = ends::enumerate_periodic_rays(ctx, opts);
    // Period (+1,-1) repeats vertices and is rejected; one representative
    // per direction survives the tail deduplication.
    for (const auto& r : rays) {
      ends::RayEval eval = ends::ray_vertices(ctx, r, opts.horizon);
      CHECK(eval.ok());
    }
    CHECK(rays.size() == 2);
  }
  SUBCASE("the quadrant keeps all four short periods") {
    EndContext ctx(nxn());
    ends::EnumOptions opts;
    opts.max_period = 2;
    opts.base_bound = 0;
    opts.horizon = 16;
    std::vector<PeriodicRay> rays = ends::enumerate_periodic_rays(ctx, opts);
    std::set<std::string> periods;
    for (const auto& r : rays) {
      periods.insert(ctx.spec()->generator_alphabet().format(r.period));
    }
    // aa and bb duplicate the a- and b-ray tails and are deduplicated.
    CHECK(periods == std::set<std::string>{"a", "b", "ab", "ba"});
  }
  SUBCASE("finite specs have no rays") {
    SpecPtr c2 = SemigroupSpec::finite_table({{0, 1}, {1, 0}});
    EndContext ctx(c2);
    ends::EnumOptions opts;
    opts.horizon = 8;
    CHECK(ends::enumerate_periodic_rays(ctx, opts).empty());
  }
  SUBCASE("anti-ray enumeration on the quadrant is empty") {
    EndContext ctx(nxn());
    ends::EnumOptions opts;
    opts.kind = RayKind::antiray;
    opts.horizon = 8;
    CHECK(ends::enumerate_periodic_rays(ctx, opts).empty());
  }
}

TEST_CASE("ray translation") {
  SUBCASE("diagonal generator folds into a two-letter period") {
    EndContext ctx(nxn());
    Element s = models::make_tuple_elem({1, 1});
    // Ray over {a, b, s}: base s, period s.
    ends::TranslateResult result =
        ends::translate_ray(ctx, s, ray({2}, {2}));
    const auto& alphabet = ctx.spec()->generator_alphabet();
    std::string period = alphabet.format(result.ray.period);
    CHECK((period == "ab" || period == "ba"));
    ends::RayEval eval = ends::ray_vertices(ctx, result.ray, 12);
    REQUIRE(eval.ok());
    for (const auto& key : eval.keys) {
      // Every vertex lies on or next to the diagonal.
      auto comma = key.find(',');
      long long x = std::stoll(key.substr(1, comma - 1));
      long long y = std::stoll(key.substr(comma + 1));
      CHECK((x == y || x == y + 1));
    }
    CHECK(result.shared_at_horizon >= 10);
  }
  SUBCASE("rays already over the generators are unchanged") {
    EndContext ctx(nxn());
    Element s = models::make_tuple_elem({1, 1});
    PeriodicRay input = ray({0}, {1});
    ends::TranslateResult result = ends::translate_ray(ctx, s, input);
    CHECK(result.ray.base == input.base);
    CHECK(result.ray.period == input.period);
    CHECK(result.dropped == 0);
  }
  SUBCASE("unique factorization in the free monoid") {
    EndContext ctx(free_monoid());
    const auto& sys =
        std::get<SemigroupSpec::Presented>(ctx.spec()->variant()).system;
    Element s = models::make_word_elem(sys.alphabet().parse("ab"));
    ends::TranslateResult result =
        ends::translate_ray(ctx, s, ray({2}, {2}));
    ends::RayEval eval = ends::ray_vertices(ctx, result.ray, 8);
    REQUIRE(eval.ok());
    // Vertices interleave (ab)^k: each is (ab)^k or (ab)^k a.
    for (const auto& key : eval.keys) {
      bool alternating = true;
      for (size_t i = 0; i + 1 < key.size(); ++i) {
        alternating = alternating && key[i] != key[i + 1];
      }
      CHECK(alternating);
      CHECK((key.empty() || key.front() == 'a'));
    }
  }
}

TEST_CASE("end comparison") {
  SUBCASE("a ray is equivalent to itself") {
    EndContext ctx(nxn());
    PeriodicRay r = ray({}, {0, 1});
    ends::EndVerdict v = ends::end_compare(ctx, r, r);
    CHECK(v.verdict == Verdict::equivalent);
    CHECK(v.forward.monotone);
  }
  SUBCASE("the two directions of the integer line are incomparable") {
    EndContext ctx(int_line());
    ends::CompareOptions opts;
    opts.horizons = {8, 12, 16, 24};
    ends::EndVerdict v =
        ends::end_compare(ctx, ray({}, {0}), ray({}, {1}), opts);
    CHECK(v.verdict == Verdict::incomparable);
    CHECK(v.forward.stagnant);
    CHECK(v.backward.stagnant);
    CHECK(v.forward.separator.size() == 1);
    CHECK(v.forward.monotone);
    for (int count : v.forward.counts) {
      CHECK(count == 1);
    }
  }
  SUBCASE("row strictly below the diagonal in the quadrant") {
    EndContext ctx(nxn());
    ends::EndVerdict v =
        ends::end_compare(ctx, ray({}, {1}), ray({}, {0, 1}));
    CHECK(v.verdict == Verdict::first_below_second);
    CHECK(v.forward.growing);
    CHECK(v.backward.stagnant);
  }
  SUBCASE("options validation") {
    EndContext ctx(nxn());
    ends::CompareOptions bad;
    bad.horizons = {8, 12};
    CHECK_THROWS_AS(
        ends::end_compare(ctx, ray({}, {0}), ray({}, {1}), bad), Error);
  }
}

TEST_CASE("end poset") {
  SUBCASE("a single ray") {
    EndContext ctx(nxn());
    ends::PosetResult poset = ends::end_poset(ctx, {ray({}, {0})});
    CHECK(poset.classes.size() == 1);
    CHECK(poset.below.empty());
    CHECK(poset.chain());
    CHECK(poset.antichain());
  }
  SUBCASE("certified transitivity never reverses") {
    EndContext ctx(nxn());
    std::vector<PeriodicRay> rays{ray({}, {1}), ray({0}, {1}),
                                  ray({0, 0}, {1}), ray({}, {0, 1})};
    ends::PosetResult poset = ends::end_poset(ctx, rays);
    const int n = static_cast<int>(rays.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) {
            continue;
          }
          if (poset.matrix[i][j] == Verdict::first_below_second &&
              poset.matrix[j][k] == Verdict::first_below_second) {
            CHECK(poset.matrix[i][k] != Verdict::second_below_first);
          }
        }
      }
    }
    CHECK(poset.unknown_pairs == 0);
  }
}

TEST_CASE("left translation preserves ray distinctness on cancellative specs") {
  for (const auto& spec : {nxn(), free_monoid()}) {
    EndContext ctx(spec);
    ends::RayEval eval = ends::ray_vertices(ctx, ray({}, {0, 1}), 12);
    REQUIRE(eval.ok());
    Element s = spec->multiply(spec->generators()[0], spec->generators()[1]);
    std::set<std::string> translated;
    for (const auto& v : eval.vertices) {
      CHECK(translated.insert(spec->format(spec->multiply(s, v))).second);
    }
  }
}

TEST_CASE("free pair witnesses") {
  SUBCASE("commuting generators meet immediately") {
    SpecPtr spec = nxn();
    ends::FreePairResult result = ends::free_pair_witness(
        spec, models::make_tuple_elem({1, 0}), models::make_tuple_elem({0, 1}),
        3);
    REQUIRE(result.kind == ends::FreePairResult::Kind::witness);
    const auto& alphabet = spec->generator_alphabet();
    CHECK(alphabet.format(result.u) == "b");
    CHECK(alphabet.format(result.v) == "a");
    CHECK(result.meet_key == "(1,1)");
  }
  SUBCASE("opposite steps on the line meet at zero") {
    SpecPtr spec = int_line();
    ends::FreePairResult result = ends::free_pair_witness(
        spec, models::make_tuple_elem({1}), models::make_tuple_elem({-1}), 2);
    REQUIRE(result.kind == ends::FreePairResult::Kind::witness);
    CHECK(result.meet_key == "0");
  }
  SUBCASE("free generators never meet") {
    SpecPtr spec = free_monoid();
    const auto& sys =
        std::get<SemigroupSpec::Presented>(spec->variant()).system;
    ends::FreePairResult result = ends::free_pair_witness(
        spec, models::make_word_elem(sys.alphabet().parse("a")),
        models::make_word_elem(sys.alphabet().parse("b")), 6);
    CHECK(result.kind == ends::FreePairResult::Kind::free_evidence);
    CHECK(result.words_checked == 126);
  }
}

TEST_CASE("Rees components count ends on each side") {
  // One I-component, two Lambda-components over the integers: the right
  // ends ignore Lambda (2 classes), the left ends split on it (4 classes).
  SpecPtr spec =
      SemigroupSpec::rees_matrix(1, 1, 2, {{{0}}, {{0}}}, {{0}, {1}, {-1}});
  // Generators, canonically ordered: (1|0|1),(1|0|2),(1|1|1),(1|1|2),
  // (1|-1|1),(1|-1|2).
  REQUIRE(spec->generators().size() == 6);
  auto gen_key = [&](int i) { return spec->format(spec->generators()[i]); };
  REQUIRE(gen_key(2) == "(1|1|1)");
  REQUIRE(gen_key(3) == "(1|1|2)");
  REQUIRE(gen_key(4) == "(1|-1|1)");
  REQUIRE(gen_key(5) == "(1|-1|2)");
  std::vector<PeriodicRay> rays{ray({2}, {2}), ray({4}, {4}),
                                ray({3}, {3}), ray({5}, {5})};
  EndContext ctx(spec);
  ends::PosetResult right = ends::end_poset(ctx, rays, {});
  CHECK(right.classes.size() == 2);
  CHECK(right.antichain());
  CHECK(right.unknown_pairs == 0);

  EndContext dual_ctx(models::dual_spec(spec));
  ends::PosetResult left = ends::end_poset(dual_ctx, rays, {});
  CHECK(left.classes.size() == 4);
  CHECK(left.antichain());
  CHECK(left.unknown_pairs == 0);
}

TEST_CASE("comparison verdicts mirror under argument swap") {
  EndContext ctx(nxn());
  std::vector<PeriodicRay> rays{ray({}, {0}), ray({1}, {0}), ray({}, {0, 1}),
                                ray({}, {1})};
  for (size_t i = 0; i < rays.size(); ++i) {
    for (size_t j = i + 1; j < rays.size(); ++j) {
      ends::EndVerdict ab = ends::end_compare(ctx, rays[i], rays[j]);
      ends::EndVerdict ba = ends::end_compare(ctx, rays[j], rays[i]);
      CHECK(ab.forward.counts == ba.backward.counts);
      CHECK(ab.backward.counts == ba.forward.counts);
      Verdict mirrored = ba.verdict;
      if (mirrored == Verdict::first_below_second) {
        mirrored = Verdict::second_below_first;
      } else if (mirrored == Verdict::second_below_first) {
        mirrored = Verdict::first_below_second;
      }
      CHECK(ab.verdict == mirrored);
    }
  }
}

TEST_CASE("the free monoid shows large antichains") {
  EndContext ctx(free_monoid());
  std::vector<PeriodicRay> rays{ray({}, {0}), ray({}, {1}), ray({}, {0, 1}),
                                ray({}, {1, 0})};
  // Free monoid balls grow exponentially; small horizons keep them tame.
  ends::CompareOptions opts;
  opts.horizons = {4, 6, 8};
  ends::PosetResult poset = ends::end_poset(ctx, rays, opts);
  CHECK(poset.classes.size() == 4);
  CHECK(poset.antichain());
  CHECK(poset.max_antichain() == 4);
  CHECK(poset.unknown_pairs == 0);
}
