#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "doctest.h"
#include "semiends/green.hpp"

using namespace semiends;
using models::Element;
using models::SemigroupSpec;
using models::SpecPtr;

namespace {

SpecPtr int_line() { return SemigroupSpec::lattice(1, {{1}, {-1}}); }
SpecPtr nxn() { return SemigroupSpec::naturals(2, {{1, 0}, {0, 1}}); }

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

SpecPtr right_zero(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    std::iota(table[x].begin(), table[x].end(), 0);
  }
  return SemigroupSpec::finite_table(std::move(table));
}

SpecPtr left_zero2() {
  return SemigroupSpec::finite_table({{0, 0}, {1, 1}});
}

SpecPtr cyclic(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[x][y] = (x + y) % n;
    }
  }
  return SemigroupSpec::finite_table(std::move(table));
}

// Direct product of two finite tables as one table.
SpecPtr table_product(const SpecPtr& a, const SpecPtr& b) {
  const auto& ta = std::get<SemigroupSpec::FiniteTable>(a->variant()).table;
  const auto& tb = std::get<SemigroupSpec::FiniteTable>(b->variant()).table;
  const int na = static_cast<int>(ta.size());
  const int nb = static_cast<int>(tb.size());
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) {
      table[x][y] = ta[x / nb][y / nb] * nb + tb[x % nb][y % nb];
    }
  }
  return SemigroupSpec::finite_table(std::move(table));
}

green::SubsemigroupPredicate zz01_flag1() {
  SpecPtr spec = zz01();
  return green::make_subsemigroup(
      spec,
      [](const Element& x) {
        return std::get<models::GridElem>(x.v).flag == 1;
      },
      "flag-1 part");
}

}  // namespace

TEST_CASE("relative R-classes") {
  SUBCASE("Z^2 x {0,1} at radius 4 has two merged families") {
    cayley::CayleyBall ball = cayley::build_ball(zz01(), 4);
    green::RelativeClasses classes =
        green::relative_r_classes(ball, green::whole_semigroup());
    std::vector<size_t> merged;
    for (const auto& cls : classes.classes) {
      if (cls.size() > 1) {
        merged.push_back(cls.size());
      }
    }
    std::sort(merged.begin(), merged.end());
    CHECK(merged == std::vector<size_t>{25, 41});
  }
  SUBCASE("the quadrant is R-trivial") {
    cayley::CayleyBall ball = cayley::build_ball(nxn(), 4);
    green::RelativeClasses classes =
        green::relative_r_classes(ball, green::whole_semigroup());
    for (const auto& cls : classes.classes) {
      CHECK(cls.size() == 1);
    }
  }
  SUBCASE("a right group is one class") {
    SpecPtr rg = table_product(cyclic(2), right_zero(2));
    cayley::CayleyBall ball = cayley::build_ball(rg, 2);
    green::RelativeClasses classes =
        green::relative_r_classes(ball, green::whole_semigroup());
    REQUIRE(classes.classes.size() == 1);
    CHECK(classes.classes[0].size() == 4);
    // Left-cancellative and fully regular, with every regular element in
    // that single certified class.
    CHECK(green::left_cancellative_check(ball).pass);
    auto [idem, reg] = green::idempotents_and_regulars(ball);
    CHECK(reg.size() == 4);
    CHECK(idem.size() == 2);
  }
}

TEST_CASE("with T = S, certified classes are the ball's SCCs") {
  for (const auto& spec : {int_line(), zz01(), nxn()}) {
    cayley::CayleyBall ball = cayley::build_ball(spec, 3);
    green::RelativeClasses classes =
        green::relative_r_classes(ball, green::whole_semigroup());
    auto sccs = cayley::strongly_connected_components(ball);
    CHECK(classes.classes == sccs);
  }
}

TEST_CASE("H refines R and L") {
  cayley::CayleyBall ball = cayley::build_ball(zz01(), 3);
  green::GreenReport report =
      green::green_report(ball, green::whole_semigroup());
  for (int v = 0; v < ball.size(); ++v) {
    for (int w = 0; w < ball.size(); ++w) {
      if (report.h_classes.class_of[v] == report.h_classes.class_of[w]) {
        CHECK(report.r_classes.class_of[v] == report.r_classes.class_of[w]);
        CHECK(report.l_classes.class_of[v] == report.l_classes.class_of[w]);
      }
    }
  }
  CHECK(green::report_to_json(ball, report) ==
        green::report_to_json(ball, report));
}

TEST_CASE("idempotents and regular elements") {
  SUBCASE("Z^2 x {0,1}") {
    cayley::CayleyBall ball = cayley::build_ball(zz01(), 3);
    auto [idem, reg] = green::idempotents_and_regulars(ball);
    std::set<std::string> keys;
    for (int v : idem) {
      keys.insert(ball.keys[v]);
    }
    CHECK(keys == std::set<std::string>{"(0,0;0)", "(0,0;1)"});
    CHECK(reg.size() == static_cast<size_t>(ball.size()));  // all regular
  }
  SUBCASE("the quadrant has only the identity") {
    cayley::CayleyBall ball = cayley::build_ball(nxn(), 4);
    auto [idem, reg] = green::idempotents_and_regulars(ball);
    REQUIRE(idem.size() == 1);
    CHECK(ball.keys[idem[0]] == "(0,0)");
    REQUIRE(reg.size() == 1);
    CHECK(ball.keys[reg[0]] == "(0,0)");
  }
  SUBCASE("the aba-monoid has only the empty word") {
    cayley::CayleyBall ball = cayley::build_ball(aba_monoid(), 4);
    auto [idem, reg] = green::idempotents_and_regulars(ball);
    REQUIRE(idem.size() == 1);
    CHECK(ball.keys[idem[0]].empty());
  }
}

TEST_CASE("left cancellativity evidence") {
  SUBCASE("Z^2 x {0,1} has a counterexample at radius 2") {
    cayley::CayleyBall ball = cayley::build_ball(zz01(), 2);
    green::LeftCancelResult result = green::left_cancellative_check(ball);
    REQUIRE_FALSE(result.pass);
    auto [a, x, y] = *result.counterexample;
    CHECK(ball.spec->multiply(ball.vertices[a], ball.vertices[x]) ==
          ball.spec->multiply(ball.vertices[a], ball.vertices[y]));
    CHECK(x != y);
  }
  SUBCASE("the quadrant passes") {
    cayley::CayleyBall ball = cayley::build_ball(nxn(), 4);
    CHECK(green::left_cancellative_check(ball).pass);
  }
  SUBCASE("the free monoid passes") {
    cayley::CayleyBall ball = cayley::build_ball(free_monoid(), 4);
    CHECK(green::left_cancellative_check(ball).pass);
  }
}

TEST_CASE("powers land in distinct classes on the quadrant") {
  cayley::CayleyBall ball = cayley::build_ball(nxn(), 4);
  green::RelativeClasses classes =
      green::relative_r_classes(ball, green::whole_semigroup());
  Element zero = models::make_tuple_elem({0, 0});
  int fired = 0;
  for (int v = 0; v < ball.size(); ++v) {
    if (ball.vertices[v] == zero) {
      continue;
    }
    Element square = ball.spec->multiply(ball.vertices[v], ball.vertices[v]);
    auto w = ball.find(square);
    if (!w) {
      continue;
    }
    CHECK(classes.class_of[v] != classes.class_of[*w]);
    ++fired;
  }
  CHECK(fired > 0);
}

TEST_CASE("Rees index evidence") {
  SpecPtr spec = nxn();
  SUBCASE("removing the identity gives index 2") {
    Element id = models::make_tuple_elem({0, 0});
    green::SubsemigroupPredicate T = green::make_subsemigroup(
        spec, [id](const Element& x) { return !(x == id); },
        "everything but the identity");
    green::IndexEvidence ev = green::rees_index_evidence(spec, T, {2, 3, 4, 5});
    CHECK(ev.counts == std::vector<long long>{1, 1, 1, 1});
    CHECK(ev.stabilized);
    CHECK(ev.value == 2);
  }
  SUBCASE("the whole semigroup has index 1") {
    green::IndexEvidence ev =
        green::rees_index_evidence(spec, green::whole_semigroup(), {2, 3, 4});
    CHECK(ev.stabilized);
    CHECK(ev.value == 1);
  }
  SUBCASE("a complement meeting every shell is unbounded at horizon") {
    green::IndexEvidence ev =
        green::rees_index_evidence(zz01(), zz01_flag1(), {2, 3, 4, 5});
    CHECK_FALSE(ev.stabilized);
    CHECK(ev.verdict == "unbounded at horizon");
    for (size_t i = 1; i < ev.counts.size(); ++i) {
      CHECK(ev.counts[i] > ev.counts[i - 1]);
    }
  }
}

TEST_CASE("Green index evidence") {
  SUBCASE("Z^2 x {1} inside Z^2 x {0,1}") {
    green::GreenIndexEvidence ev = green::green_index_evidence(
        zz01(), zz01_flag1(), {2, 3, 4, 5});
    CHECK(ev.stabilized);
    CHECK(ev.value == 1);
  }
  SUBCASE("flag-1 complement inside Z^2 x N_0") {
    SpecPtr spec = zzn0();
    green::SubsemigroupPredicate T = green::make_subsemigroup(
        spec,
        [](const Element& x) {
          return std::get<models::GridElem>(x.v).flag != 1;
        },
        "flag not 1");
    green::GreenIndexEvidence ev =
        green::green_index_evidence(spec, T, {2, 3, 4, 5});
    CHECK(ev.stabilized);
    CHECK(ev.value == 1);
  }
  SUBCASE("empty complement has zero classes") {
    green::GreenIndexEvidence ev = green::green_index_evidence(
        nxn(), green::whole_semigroup(), {2, 3, 4});
    CHECK(ev.stabilized);
    CHECK(ev.value == 0);
  }
}

TEST_CASE("right group recognition") {
  CHECK(green::is_right_group(right_zero(2)));
  CHECK(green::is_right_group(cyclic(2)));
  CHECK_FALSE(green::is_right_group(left_zero2()));
  // A monogenic non-group: a^2 = a^3.
  CHECK_FALSE(green::is_right_group(
      SemigroupSpec::finite_table({{1, 1}, {1, 1}})));
}

TEST_CASE("right groups with at most six elements") {
  // Direction 1: every G x E with |G|*|E| <= 6 passes.
  std::vector<std::pair<SpecPtr, int>> groups{
      {cyclic(1), 1}, {cyclic(2), 2}, {cyclic(3), 3},
      {cyclic(4), 4}, {cyclic(5), 5}, {cyclic(6), 6},
  };
  // The Klein four-group (xor on {0,1,2,3}) and S3 as non-cyclic entries.
  {
    std::vector<std::vector<int>> v4(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) {
        v4[x][y] = x ^ y;
      }
    }
    groups.push_back({SemigroupSpec::finite_table(std::move(v4)), 4});
  }
  {
    // S3 as permutations of {0,1,2}, composition table computed directly.
    std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                          {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    std::vector<std::vector<int>> s3(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x) {
      for (int y = 0; y < 6; ++y) {
        std::array<int, 3> composite{};
        for (int i = 0; i < 3; ++i) {
          composite[i] = perms[x][perms[y][i]];
        }
        s3[x][y] =
            std::find(perms.begin(), perms.end(), composite) - perms.begin();
      }
    }
    groups.push_back({SemigroupSpec::finite_table(std::move(s3)), 6});
  }
  for (const auto& [group, order] : groups) {
    for (int e = 1; order * e <= 6; ++e) {
      SpecPtr rg = table_product(group, right_zero(e));
      CHECK(green::is_right_group(rg));

      // Direction 2: anything passing decomposes as G x E. Reconstruct the
      // factors from the table and compare orders.
      const auto& table =
          std::get<SemigroupSpec::FiniteTable>(rg->variant()).table;
      const int n = static_cast<int>(table.size());
      std::vector<int> idempotents;
      for (int x = 0; x < n; ++x) {
        if (table[x][x] == x) {
          idempotents.push_back(x);
        }
      }
      CHECK(static_cast<int>(idempotents.size()) == e);
      // G is S*e for any idempotent e0; check it is a group of the right
      // order and that (g, f) -> g*f is a bijection onto S.
      int e0 = idempotents.front();
      std::set<int> g_part;
      for (int x = 0; x < n; ++x) {
        g_part.insert(table[x][e0]);
      }
      CHECK(static_cast<int>(g_part.size()) == order);
      std::set<int> image;
      for (int g : g_part) {
        for (int f : idempotents) {
          image.insert(table[g][f]);
        }
      }
      CHECK(static_cast<int>(image.size()) == n);
    }
  }
}
