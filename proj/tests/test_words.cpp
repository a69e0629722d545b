#include <random>
#include <set>

#include "doctest.h"
#include "semiends/words.hpp"

using namespace semiends;
using words::Alphabet;
using words::RewriteRule;
using words::RewriteSystem;
using words::Word;

namespace {

RewriteSystem aba_system(size_t max_steps = RewriteSystem::kDefaultMaxSteps) {
  Alphabet alphabet({"a", "b"});
  std::vector<RewriteRule> rules{
      {alphabet.parse("aba"), alphabet.parse("b")},
      {alphabet.parse("bba"), alphabet.parse("abb")},
  };
  return RewriteSystem(std::move(alphabet), std::move(rules), max_steps);
}

Word random_word(std::mt19937& rng, size_t ngens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<words::Letter> letter(
      0, static_cast<words::Letter>(ngens - 1));
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    w.push_back(letter(rng));
  }
  return w;
}

// Exhaustive-rewriting oracle: the set of irreducible words reachable by
// applying any rule at any position, in any order. For a confluent system
// this must be a single word, independent of strategy.
std::set<std::string> all_normal_forms(const RewriteSystem& sys,
                                       const Word& start) {
  std::set<std::string> irreducible;
  std::set<std::string> seen;
  std::vector<Word> stack{start};
  seen.insert(sys.alphabet().format(start));
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    bool reduced = false;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (const auto& rule : sys.rules()) {
        if (pos + rule.lhs.size() > w.size() ||
            !std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + pos)) {
          continue;
        }
        reduced = true;
        Word next(w.begin(), w.begin() + pos);
        next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
        next.insert(next.end(), w.begin() + pos + rule.lhs.size(), w.end());
        if (seen.insert(sys.alphabet().format(next)).second) {
          stack.push_back(std::move(next));
        }
      }
    }
    if (!reduced) {
      irreducible.insert(sys.alphabet().format(w));
    }
  }
  return irreducible;
}

Word random_strategy_normal_form(const RewriteSystem& sys, Word w,
                                 std::mt19937& rng) {
  while (true) {
    std::vector<std::pair<size_t, size_t>> redexes;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (size_t r = 0; r < sys.rules().size(); ++r) {
        const auto& lhs = sys.rules()[r].lhs;
        if (pos + lhs.size() <= w.size() &&
            std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
          redexes.emplace_back(pos, r);
        }
      }
    }
    if (redexes.empty()) {
      return w;
    }
    std::uniform_int_distribution<size_t> pick(0, redexes.size() - 1);
    auto [pos, r] = redexes[pick(rng)];
    const auto& rule = sys.rules()[r];
    Word next(w.begin(), w.begin() + pos);
    next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
    next.insert(next.end(), w.begin() + pos + rule.lhs.size(), w.end());
    w = std::move(next);
  }
}

}  // namespace

TEST_CASE("shortlex order") {
  Alphabet ab({"a", "b"});
  CHECK(words::shortlex_less(ab.parse("b"), ab.parse("aba")));
  CHECK(words::shortlex_less(ab.parse("abb"), ab.parse("bba")));
  CHECK_FALSE(words::shortlex_less(ab.parse("a"), ab.parse("a")));

  // Strict total order: exactly one of u<v, v<u, u=v on random samples.
  std::mt19937 rng(13);
  for (int i = 0; i < 2000; ++i) {
    Word u = random_word(rng, 2, 6);
    Word v = random_word(rng, 2, 6);
    int relations = static_cast<int>(words::shortlex_less(u, v)) +
                    static_cast<int>(words::shortlex_less(v, u)) +
                    static_cast<int>(u == v);
    CHECK(relations == 1);
  }
}

TEST_CASE("alphabet parse and format") {
  Alphabet ab({"a", "b"});
  CHECK(ab.format(ab.parse("abba")) == "abba");
  CHECK(ab.parse("").empty());
  CHECK_THROWS_AS(ab.parse("c"), Error);

  Alphabet multi({"x1", "y22"});
  CHECK(multi.format(multi.parse("x1.y22.x1")) == "x1.y22.x1");
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({}), Error);
}

TEST_CASE("rewrite system construction enforces shortlex reduction") {
  Alphabet ab({"a", "b"});
  CHECK_THROWS_AS(RewriteSystem(ab, {{ab.parse("a"), ab.parse("ab")}}), Error);
  CHECK_THROWS_AS(RewriteSystem(ab, {{ab.parse("ab"), ab.parse("ba")}}),
                  Error);
  CHECK_THROWS_AS(RewriteSystem(ab, {{ab.parse(""), ab.parse("a")}}), Error);
}

TEST_CASE("normal forms") {
  RewriteSystem sys = aba_system();
  const Alphabet& ab = sys.alphabet();
  CHECK(ab.format(sys.normal_form(ab.parse("aba"))) == "b");
  CHECK(ab.format(sys.normal_form(ab.parse("a"))) == "a");

  // Oracle first: exhaustive rewriting of "bbaa" under every strategy
  // reaches exactly one irreducible word.
  std::set<std::string> oracle = all_normal_forms(sys, ab.parse("bbaa"));
  REQUIRE(oracle.size() == 1);
  CHECK(*oracle.begin() == "aabb");
  CHECK(ab.format(sys.normal_form(ab.parse("bbaa"))) == "aabb");
}

TEST_CASE("normal form budget") {
  RewriteSystem tight = aba_system(2);
  const Alphabet& ab = tight.alphabet();
  CHECK_THROWS_AS(tight.normal_form(ab.parse("abaabaaba")), BudgetExceeded);
}

TEST_CASE("every rewrite step decreases shortlex") {
  RewriteSystem sys = aba_system();
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 2, 12);
    std::vector<words::RewriteStep> steps;
    Word prev = w;
    sys.normal_form_trace(w, steps);
    for (const auto& step : steps) {
      CHECK(words::shortlex_less(step.result, prev));
      prev = step.result;
    }
  }
}

TEST_CASE("normal form is idempotent") {
  RewriteSystem sys = aba_system();
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Word w = random_word(rng, 2, 12);
    Word nf = sys.normal_form(w);
    CHECK(sys.normal_form(nf) == nf);
    CHECK(sys.is_irreducible(nf));
  }
}

TEST_CASE("leftmost strategy agrees with random strategies") {
  RewriteSystem sys = aba_system();
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Word w = random_word(rng, 2, 14);
    CHECK(sys.normal_form(w) == random_strategy_normal_form(sys, w, rng));
  }
}

TEST_CASE("local confluence") {
  SUBCASE("the aba/bba system is locally confluent") {
    words::ConfluenceReport report = words::is_locally_confluent(aba_system());
    CHECK(report.locally_confluent);
    CHECK(report.unjoinable.empty());
    CHECK(report.pairs_checked > 0);
  }
  SUBCASE("no rules, no overlaps") {
    Alphabet ab({"a", "b"});
    words::ConfluenceReport report =
        words::is_locally_confluent(RewriteSystem(ab, {}));
    CHECK(report.locally_confluent);
    CHECK(report.pairs_checked == 0);
  }
  SUBCASE("ab->a, ba->b is not locally confluent") {
    Alphabet ab({"a", "b"});
    RewriteSystem sys(ab, {{ab.parse("ab"), ab.parse("a")},
                           {ab.parse("ba"), ab.parse("b")}});
    words::ConfluenceReport report = words::is_locally_confluent(sys);
    REQUIRE_FALSE(report.locally_confluent);
    bool found = false;
    for (const auto& pair : report.unjoinable) {
      if (ab.format(pair.superposition) == "aba") {
        std::set<std::string> sides{ab.format(pair.left_nf),
                                    ab.format(pair.right_nf)};
        found = sides == std::set<std::string>{"aa", "a"};
      }
    }
    CHECK(found);
  }
}
