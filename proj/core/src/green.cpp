#include "semiends/green.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "json.hpp"

namespace semiends::green {

using models::Element;

SubsemigroupPredicate whole_semigroup() {
  return SubsemigroupPredicate{[](const Element&) { return true; },
                               "the whole semigroup", true};
}

SubsemigroupPredicate make_subsemigroup(
    const models::SpecPtr& spec,
    std::function<bool(const models::Element&)> contains,
    std::string description, int sample_radius, int samples) {
  cayley::CayleyBall ball = cayley::build_ball(spec, sample_radius);
  std::vector<int> members;
  for (int v = 0; v < ball.size(); ++v) {
    if (contains(ball.vertices[v])) {
      members.push_back(v);
    }
  }
  if (!members.empty()) {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<size_t> pick(0, members.size() - 1);
    for (int k = 0; k < samples; ++k) {
      const Element& x = ball.vertices[members[pick(rng)]];
      const Element& y = ball.vertices[members[pick(rng)]];
      if (!contains(spec->multiply(x, y))) {
        throw Error("make_subsemigroup: '" + description +
                    "' is not closed under multiplication (witness " +
                    spec->format(x) + " * " + spec->format(y) + ")");
      }
    }
  }
  return SubsemigroupPredicate{std::move(contains), std::move(description),
                               false};
}

namespace {

// Certified one-sided translation arcs x -> y: an in-ball path from x to y
// whose label block multiplies into T. Found by a bounded breadth-first
// search over (vertex, block product) states.
digraph::Digraph translation_arcs(const cayley::CayleyBall& ball,
                                  const SubsemigroupPredicate& T,
                                  const RelGreenOptions& opts) {
  const int n = ball.size();
  digraph::Digraph arcs(n);
  if (T.is_whole) {
    for (const auto& e : ball.edges) {
      arcs.add_edge(e.src, e.dst);
    }
    arcs.finalize();
    return arcs;
  }
  const int max_len = opts.max_block_len;
  const auto& spec = *ball.spec;
  const auto& gens = spec.generators();
  std::vector<std::vector<std::pair<int, int>>> out_edges(n);  // (label, dst)
  for (const auto& e : ball.edges) {
    out_edges[e.src].emplace_back(e.label, e.dst);
  }
  size_t states = 0;
  for (int x = 0; x < n; ++x) {
    struct State {
      int vertex;
      Element block;
      int len;
    };
    std::queue<State> queue;
    std::vector<std::set<std::string>> seen(n);
    std::vector<bool> reached(n, false);
    for (const auto& [label, dst] : out_edges[x]) {
      const Element& g = gens[label];
      if (seen[dst].insert(spec.format(g)).second) {
        if (T.contains(g)) {
          reached[dst] = true;
        }
        queue.push(State{dst, g, 1});
      }
    }
    while (!queue.empty()) {
      State st = std::move(queue.front());
      queue.pop();
      if (st.len >= max_len) {
        continue;
      }
      for (const auto& [label, dst] : out_edges[st.vertex]) {
        Element block = spec.multiply(st.block, gens[label]);
        if (!seen[dst].insert(spec.format(block)).second) {
          continue;
        }
        if (++states > opts.state_cap) {
          throw CapExceeded("translation_arcs: state cap exceeded");
        }
        if (T.contains(block)) {
          reached[dst] = true;
        }
        queue.push(State{dst, std::move(block), st.len + 1});
      }
    }
    for (int y = 0; y < n; ++y) {
      if (reached[y]) {
        arcs.add_edge(x, y);
      }
    }
  }
  arcs.finalize();
  return arcs;
}

RelativeClasses classes_from_arcs(const digraph::Digraph& arcs) {
  RelativeClasses out;
  out.classes = digraph::strongly_connected_components(arcs);
  out.class_of = digraph::scc_index(arcs);
  for (const auto& c : out.classes) {
    out.note.push_back(c.size() > 1
                           ? "mutual in-ball translation witnesses"
                           : "reflexive only; completeness horizon-limited");
  }
  return out;
}

}  // namespace

RelativeClasses relative_r_classes(const cayley::CayleyBall& ball,
                                   const SubsemigroupPredicate& T,
                                   const RelGreenOptions& opts) {
  return classes_from_arcs(translation_arcs(ball, T, opts));
}

RelativeClasses relative_l_classes(const cayley::CayleyBall& ball,
                                   const SubsemigroupPredicate& T,
                                   const RelGreenOptions& opts) {
  cayley::CayleyBall dual =
      cayley::build_ball(models::dual_spec(ball.spec), ball.radius);
  if (dual.keys != ball.keys) {
    throw Error("relative_l_classes: dual ball vertex set mismatch");
  }
  return classes_from_arcs(translation_arcs(dual, T, opts));
}

RelativeClasses intersect_partitions(const RelativeClasses& r,
                                     const RelativeClasses& l) {
  const int n = static_cast<int>(r.class_of.size());
  std::map<std::pair<int, int>, int> ids;
  RelativeClasses out;
  out.class_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    auto key = std::make_pair(r.class_of[v], l.class_of[v]);
    auto [it, inserted] = ids.emplace(key, static_cast<int>(out.classes.size()));
    if (inserted) {
      out.classes.emplace_back();
    }
    out.classes[it->second].push_back(v);
    out.class_of[v] = it->second;
  }
  // Canonical order: by smallest member.
  std::vector<int> order(out.classes.size());
  for (size_t i = 0; i < order.size(); ++i) {
    order[i] = static_cast<int>(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return out.classes[a].front() < out.classes[b].front();
  });
  RelativeClasses sorted;
  sorted.class_of.assign(n, -1);
  for (int rank = 0; rank < static_cast<int>(order.size()); ++rank) {
    sorted.classes.push_back(out.classes[order[rank]]);
    for (int v : sorted.classes.back()) {
      sorted.class_of[v] = rank;
    }
    sorted.note.push_back(sorted.classes.back().size() > 1
                              ? "mutual two-sided translation witnesses"
                              : "reflexive only; completeness horizon-limited");
  }
  return sorted;
}

GreenReport green_report(const cayley::CayleyBall& ball,
                         const SubsemigroupPredicate& T,
                         const RelGreenOptions& opts) {
  GreenReport report;
  report.r_classes = relative_r_classes(ball, T, opts);
  report.l_classes = relative_l_classes(ball, T, opts);
  report.h_classes = intersect_partitions(report.r_classes, report.l_classes);
  auto [idem, reg] = idempotents_and_regulars(ball);
  report.idempotents = std::move(idem);
  report.regulars = std::move(reg);
  return report;
}

std::string report_to_json(const cayley::CayleyBall& ball,
                           const GreenReport& report) {
  using json = nlohmann::json;
  auto partition = [&](const RelativeClasses& classes) {
    json out = json::array();
    for (size_t c = 0; c < classes.classes.size(); ++c) {
      json cls;
      json members = json::array();
      for (int v : classes.classes[c]) {
        members.push_back(ball.keys[v]);
      }
      cls["members"] = members;
      cls["certified_merge"] = classes.classes[c].size() > 1;
      cls["note"] = classes.note[c];
      out.push_back(cls);
    }
    return out;
  };
  json doc;
  doc["r_classes"] = partition(report.r_classes);
  doc["l_classes"] = partition(report.l_classes);
  doc["h_classes"] = partition(report.h_classes);
  json idem = json::array();
  for (int v : report.idempotents) {
    idem.push_back(ball.keys[v]);
  }
  doc["idempotents"] = idem;
  json reg = json::array();
  for (int v : report.regulars) {
    reg.push_back(ball.keys[v]);
  }
  doc["regular"] = reg;
  return doc.dump(2) + "\n";
}

std::pair<std::vector<int>, std::vector<int>> idempotents_and_regulars(
    const cayley::CayleyBall& ball) {
  std::vector<int> idempotents;
  std::vector<int> regulars;
  const auto& spec = *ball.spec;
  for (int x = 0; x < ball.size(); ++x) {
    if (spec.is_idempotent(ball.vertices[x])) {
      idempotents.push_back(x);
    }
    for (int z = 0; z < ball.size(); ++z) {
      Element xzx = spec.multiply(
          spec.multiply(ball.vertices[x], ball.vertices[z]),
          ball.vertices[x]);
      if (xzx == ball.vertices[x]) {
        regulars.push_back(x);
        break;
      }
    }
  }
  return {idempotents, regulars};
}

LeftCancelResult left_cancellative_check(const cayley::CayleyBall& ball) {
  const auto& spec = *ball.spec;
  for (int a = 0; a < ball.size(); ++a) {
    std::map<std::string, int> products;
    for (int x = 0; x < ball.size(); ++x) {
      std::string key =
          spec.format(spec.multiply(ball.vertices[a], ball.vertices[x]));
      auto [it, inserted] = products.emplace(key, x);
      if (!inserted) {
        return LeftCancelResult{false,
                                std::array<int, 3>{a, it->second, x}};
      }
    }
  }
  return LeftCancelResult{true, std::nullopt};
}

namespace {

void stabilize(IndexEvidence& ev, bool rees_convention) {
  const size_t n = ev.counts.size();
  if (n >= 3 && ev.counts[n - 1] == ev.counts[n - 2] &&
      ev.counts[n - 2] == ev.counts[n - 3]) {
    ev.stabilized = true;
    ev.value = rees_convention ? ev.counts.back() + 1 : ev.counts.back();
    ev.verdict = rees_convention
                     ? "index " + std::to_string(ev.value)
                     : "stabilizes at " + std::to_string(ev.value);
  } else {
    ev.stabilized = false;
    ev.value = -1;
    ev.verdict = "unbounded at horizon";
  }
}

}  // namespace

IndexEvidence rees_index_evidence(const models::SpecPtr& spec,
                                  const SubsemigroupPredicate& T,
                                  const std::vector<int>& radii,
                                  const cayley::BallLimits& limits) {
  if (!std::is_sorted(radii.begin(), radii.end()) ||
      std::adjacent_find(radii.begin(), radii.end()) != radii.end()) {
    throw Error("rees_index_evidence: radii must be strictly increasing");
  }
  IndexEvidence ev;
  ev.radii = radii;
  for (int r : radii) {
    cayley::CayleyBall ball = cayley::build_ball(spec, r, limits);
    long long count = 0;
    for (int v = 0; v < ball.size(); ++v) {
      if (!T.contains(ball.vertices[v])) {
        ++count;
      }
    }
    ev.counts.push_back(count);
  }
  stabilize(ev, true);
  return ev;
}

GreenIndexEvidence green_index_evidence(const models::SpecPtr& spec,
                                        const SubsemigroupPredicate& T,
                                        const std::vector<int>& radii,
                                        const cayley::BallLimits& limits,
                                        const RelGreenOptions& opts) {
  if (!std::is_sorted(radii.begin(), radii.end()) ||
      std::adjacent_find(radii.begin(), radii.end()) != radii.end()) {
    throw Error("green_index_evidence: radii must be strictly increasing");
  }
  GreenIndexEvidence ev;
  ev.radii = radii;
  for (int r : radii) {
    cayley::CayleyBall ball = cayley::build_ball(spec, r, limits);
    RelativeClasses rc = relative_r_classes(ball, T, opts);
    RelativeClasses lc = relative_l_classes(ball, T, opts);
    RelativeClasses hc = intersect_partitions(rc, lc);
    auto count_complement = [&](const RelativeClasses& classes) {
      long long count = 0;
      for (const auto& cls : classes.classes) {
        bool all_out = true;
        bool any_out = false;
        for (int v : cls) {
          if (T.contains(ball.vertices[v])) {
            all_out = false;
          } else {
            any_out = true;
          }
        }
        if (any_out && !all_out) {
          throw Error(
              "green_index_evidence: a certified class crosses the "
              "subsemigroup boundary");
        }
        if (all_out && any_out) {
          ++count;
        }
      }
      return count;
    };
    ev.counts.push_back(count_complement(hc));
    ev.r_counts.push_back(count_complement(rc));
  }
  stabilize(ev, false);
  return ev;
}

bool is_right_group(const models::SpecPtr& table_spec) {
  const auto* ft = std::get_if<models::SemigroupSpec::FiniteTable>(
      &table_spec->variant());
  if (ft == nullptr) {
    throw Error("is_right_group: requires a finite_table spec");
  }
  const auto& table = ft->table;
  const int n = static_cast<int>(table.size());
  // Left cancellative: every left translation x -> a*x is injective.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n; ++x) {
      if (hit[table[a][x]]) {
        return false;
      }
      hit[table[a][x]] = true;
    }
  }
  // R-simple: the right-multiplication digraph is strongly connected.
  digraph::Digraph g(n);
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < n; ++s) {
      g.add_edge(x, table[x][s]);
    }
  }
  g.finalize();
  return digraph::strongly_connected_components(g).size() == 1;
}

}  // namespace semiends::green
