#include "semiends/cayley.hpp"

#include <algorithm>
#include <unordered_map>

#include "semiends/spec_io.hpp"

namespace semiends::cayley {

std::optional<int> CayleyBall::find_key(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<int> CayleyBall::find(const models::Element& x) const {
  return find_key(spec->format(x));
}

std::vector<int> CayleyBall::interior_indices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (interior[v]) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> CayleyBall::frontier_indices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (!interior[v]) {
      out.push_back(v);
    }
  }
  return out;
}

CayleyBall build_ball(models::SpecPtr spec, int radius,
                      const BallLimits& limits) {
  if (radius < 1) {
    throw Error("build_ball: radius must be at least 1");
  }
  CayleyBall ball;
  ball.spec = spec;
  ball.radius = radius;

  // Deduplicate by canonical key during the closure; the canonical vertex
  // order is fixed by the sort below, not by this container.
  std::unordered_map<std::string, std::pair<models::Element, int>> seen;
  std::vector<models::Element> frontier;
  auto admit = [&](models::Element e, int level) -> bool {
    std::string key = spec->format(e);
    auto [it, inserted] = seen.emplace(key, std::make_pair(std::move(e), level));
    if (inserted && seen.size() > limits.max_vertices) {
      throw CapExceeded("build_ball: vertex cap (" +
                        std::to_string(limits.max_vertices) + ") exceeded");
    }
    return inserted;
  };

  if (spec->is_monoid()) {
    models::Element id = spec->identity();
    admit(id, 0);
    frontier.push_back(std::move(id));
  }
  for (const auto& g : spec->generators()) {
    if (admit(g, 1)) {
      frontier.push_back(g);
    }
  }
  for (int level = 2; level <= radius && !frontier.empty(); ++level) {
    std::vector<models::Element> next;
    for (const auto& x : frontier) {
      for (const auto& g : spec->generators()) {
        models::Element y = spec->multiply(x, g);
        if (admit(y, level)) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  // A frontier element of level == radius was admitted at its first level;
  // level-1 generators were handled above, so depths in `seen` are minimal.

  std::vector<std::string> order;
  order.reserve(seen.size());
  for (const auto& [key, _] : seen) {
    order.push_back(key);
  }
  std::sort(order.begin(), order.end(), models::canonical_less);

  ball.vertices.reserve(order.size());
  ball.keys = order;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    auto& entry = seen.at(order[i]);
    ball.vertices.push_back(std::move(entry.first));
    ball.depth.push_back(entry.second);
    ball.index_.emplace(order[i], i);
  }

  const int n = ball.size();
  const int ngens = static_cast<int>(spec->generators().size());
  ball.interior.assign(n, true);
  ball.graph = digraph::Digraph(n);
  for (int v = 0; v < n; ++v) {
    for (int a = 0; a < ngens; ++a) {
      models::Element t = spec->multiply(ball.vertices[v],
                                         spec->generators()[a]);
      auto w = ball.find(t);
      if (w) {
        ball.edges.push_back(Edge{v, *w, a});
        ball.graph.add_edge(v, *w);
      } else {
        ball.interior[v] = false;
      }
    }
  }
  ball.graph.finalize();
  // Edges come out sorted by (src, label) by construction.
  return ball;
}

std::vector<std::vector<int>> strongly_connected_components(
    const CayleyBall& ball) {
  return digraph::strongly_connected_components(ball.graph);
}

digraph::PathPacking vertex_disjoint_path_count(
    const CayleyBall& ball, const std::vector<int>& sources,
    const std::vector<int>& targets) {
  return digraph::max_vertex_disjoint_paths(ball.graph, sources, targets);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const CayleyBall& ball) {
  std::string out = "digraph cayley {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int v = 0; v < ball.size(); ++v) {
    std::string label = ball.keys[v].empty() ? "1" : ball.keys[v];
    out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(label) + "\"";
    if (!ball.interior[v]) {
      out += ", style=dashed";
    }
    out += "];\n";
  }
  const auto& names = ball.spec->generator_names();
  for (const auto& e : ball.edges) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) +
           " [label=\"" + dot_escape(names[e.label]) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(const CayleyBall& ball) {
  return spec_io::graph_to_json(ball);
}

}  // namespace semiends::cayley
