#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "semiends/digraph.hpp"

using namespace semiends;
using digraph::Digraph;

namespace {

// Test-side oracle: enumerate the vertex sets of all simple source-target
// paths and take a maximum disjoint packing by memoized search.
int oracle_max_disjoint(const Digraph& g, const std::vector<int>& sources,
                        const std::vector<int>& targets) {
  const int n = g.size();
  std::set<int> target_set(targets.begin(), targets.end());
  std::set<unsigned> usable;
  for (int s : sources) {
    std::vector<std::pair<int, unsigned>> stack{{s, 1u << s}};
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
  std::function<int(unsigned)> best = [&](unsigned avail) -> int {
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

void check_packing_valid(const Digraph& g, const digraph::PathPacking& packing,
                         const std::vector<int>& sources,
                         const std::vector<int>& targets) {
  std::set<int> source_set(sources.begin(), sources.end());
  std::set<int> target_set(targets.begin(), targets.end());
  std::set<int> used;
  CHECK(static_cast<int>(packing.paths.size()) == packing.count);
  for (const auto& path : packing.paths) {
    REQUIRE_FALSE(path.empty());
    CHECK(source_set.count(path.front()) == 1);
    CHECK(target_set.count(path.back()) == 1);
    for (size_t i = 0; i < path.size(); ++i) {
      CHECK(used.insert(path[i]).second);  // pairwise vertex-disjoint
      if (i + 1 < path.size()) {
        const auto& succ = g.out(path[i]);
        CHECK(std::binary_search(succ.begin(), succ.end(), path[i + 1]));
      }
    }
  }
}

}  // namespace

TEST_CASE("strongly connected components") {
  SUBCASE("cycle plus tail") {
    Digraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.finalize();
    auto comps = digraph::strongly_connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3});
  }
  SUBCASE("self-loop is a singleton component") {
    Digraph g(2);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.finalize();
    CHECK(digraph::strongly_connected_components(g).size() == 2);
  }
  SUBCASE("empty graph of isolated vertices") {
    Digraph g(3);
    g.finalize();
    CHECK(digraph::strongly_connected_components(g).size() == 3);
  }
}

TEST_CASE("vertex-disjoint path basics") {
  SUBCASE("single edge") {
    Digraph g(2);
    g.add_edge(0, 1);
    g.finalize();
    auto packing = digraph::max_vertex_disjoint_paths(g, {0}, {1});
    CHECK(packing.count == 1);
    check_packing_valid(g, packing, {0}, {1});
  }
  SUBCASE("length-0 paths at shared vertices") {
    Digraph g(3);
    g.finalize();
    auto packing = digraph::max_vertex_disjoint_paths(g, {0, 1, 2}, {0, 1, 2});
    CHECK(packing.count == 3);
    check_packing_valid(g, packing, {0, 1, 2}, {0, 1, 2});
  }
  SUBCASE("diamond gives two disjoint routes") {
    Digraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.finalize();
    // 0 and 3 are endpoints, so only one path can use each.
    auto packing = digraph::max_vertex_disjoint_paths(g, {0}, {3});
    CHECK(packing.count == 1);
    auto both = digraph::max_vertex_disjoint_paths(g, {1, 2}, {3});
    CHECK(both.count == 1);
    // The two shared vertices occupy themselves and block the 0-to-3 routes.
    auto wide = digraph::max_vertex_disjoint_paths(g, {0, 1, 2}, {1, 2, 3});
    CHECK(wide.count == 2);
    check_packing_valid(g, wide, {0, 1, 2}, {1, 2, 3});
  }
}

TEST_CASE("flow packing matches the exhaustive oracle") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> size_dist(2, 8);
    const int n = size_dist(rng);
    Digraph g(n);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && prob(rng) < 0.35) {
          g.add_edge(u, v);
        }
      }
    }
    g.finalize();
    std::vector<int> sources{0};
    std::vector<int> targets{n - 1};
    for (int v = 0; v < n; ++v) {
      if (prob(rng) < 0.35) {
        sources.push_back(v);
      }
      if (prob(rng) < 0.35) {
        targets.push_back(v);
      }
    }
    auto packing = digraph::max_vertex_disjoint_paths(g, sources, targets);
    CHECK(packing.count == oracle_max_disjoint(g, sources, targets));
    check_packing_valid(g, packing, sources, targets);
    CHECK(packing.separator.size() == static_cast<size_t>(packing.count));
  }
}
