#include "semiends/digraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "semiends/error.hpp"

namespace semiends::digraph {

void Digraph::add_edge(int from, int to) {
  out_.at(from).push_back(to);
  in_.at(to).push_back(from);
}

void Digraph::finalize() {
  for (auto* lists : {&out_, &in_}) {
    for (auto& l : *lists) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  }
}

namespace {

// Iterative Tarjan.
struct TarjanState {
  const Digraph& g;
  std::vector<int> index, lowlink, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0;
  int next_comp = 0;

  explicit TarjanState(const Digraph& g)
      : g(g),
        index(g.size(), -1),
        lowlink(g.size(), 0),
        comp(g.size(), -1),
        on_stack(g.size(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      size_t child;
    };
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, child] = frames.back();
      if (child < g.out(v).size()) {
        int w = g.out(v)[child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == v) {
              break;
            }
          }
          ++next_comp;
        }
        int finished = v;
        frames.pop_back();
        if (!frames.empty()) {
          lowlink[frames.back().v] =
              std::min(lowlink[frames.back().v], lowlink[finished]);
        }
      }
    }
  }
};

}  // namespace

std::vector<int> scc_index(const Digraph& g) {
  TarjanState st(g);
  for (int v = 0; v < g.size(); ++v) {
    if (st.index[v] == -1) {
      st.run(v);
    }
  }
  // Renumber components by smallest member for a canonical order.
  std::vector<int> smallest(st.next_comp, g.size());
  for (int v = 0; v < g.size(); ++v) {
    smallest[st.comp[v]] = std::min(smallest[st.comp[v]], v);
  }
  std::vector<int> order(st.next_comp);
  for (int c = 0; c < st.next_comp; ++c) {
    order[c] = c;
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return smallest[a] < smallest[b]; });
  std::vector<int> rank(st.next_comp);
  for (int r = 0; r < st.next_comp; ++r) {
    rank[order[r]] = r;
  }
  std::vector<int> out(g.size());
  for (int v = 0; v < g.size(); ++v) {
    out[v] = rank[st.comp[v]];
  }
  return out;
}

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
  std::vector<int> idx = scc_index(g);
  int ncomp = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<std::vector<int>> comps(ncomp);
  for (int v = 0; v < g.size(); ++v) {
    comps[idx[v]].push_back(v);
  }
  return comps;
}

std::vector<bool> reachable_set(const Digraph& g, const std::vector<int>& from,
                                const std::vector<bool>* removed) {
  std::vector<bool> seen(g.size(), false);
  std::queue<int> queue;
  for (int v : from) {
    if (removed && (*removed)[v]) {
      continue;
    }
    if (!seen[v]) {
      seen[v] = true;
      queue.push(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : g.out(v)) {
      if (seen[w] || (removed && (*removed)[w])) {
        continue;
      }
      seen[w] = true;
      queue.push(w);
    }
  }
  return seen;
}

namespace {

// Dinic on the vertex-split network. Split arcs carry capacity 1; every
// other arc carries capacity n + 1, so any minimum cut consists of split
// arcs only and reads off as a vertex separator.
class SplitFlow {
 public:
  struct Arc {
    int to;
    int cap;
    int rev;
    bool real;
  };

  explicit SplitFlow(int nodes) : adj_(nodes), level_(nodes), iter_(nodes) {}

  void add_arc(int from, int to, int cap) {
    adj_[from].push_back(
        Arc{to, cap, static_cast<int>(adj_[to].size()), true});
    adj_[to].push_back(
        Arc{from, 0, static_cast<int>(adj_[from].size()) - 1, false});
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (int f = dfs(s, t, 1 << 30)) {
        flow += f;
      }
    }
    return flow;
  }

  // Net flow on a real arc equals the capacity accumulated on its reverse.
  int net_flow(int from, int arc_index) const {
    const Arc& a = adj_[from][arc_index];
    return adj_[a.to][a.rev].cap;
  }

  const std::vector<std::vector<Arc>>& adj() const { return adj_; }

  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<int> queue;
    seen[s] = true;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (const Arc& a : adj_[v]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          queue.push(a.to);
        }
      }
    }
    return seen;
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (const Arc& a : adj_[v]) {
        if (a.cap > 0 && level_[a.to] == -1) {
          level_[a.to] = level_[v] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[t] != -1;
  }

  int dfs(int v, int t, int f) {
    if (v == t) {
      return f;
    }
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      Arc& a = adj_[v][i];
      if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          adj_[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

PathPacking max_vertex_disjoint_paths(const Digraph& g,
                                      std::vector<int> sources,
                                      std::vector<int> targets) {
  const int n = g.size();
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  for (const auto* side : {&sources, &targets}) {
    for (int v : *side) {
      if (v < 0 || v >= n) {
        throw Error("max_vertex_disjoint_paths: vertex index out of range");
      }
    }
  }

  PathPacking result;
  // Shared vertices carry length-0 paths and are occupied by them.
  std::vector<bool> shared(n, false);
  {
    std::set<int> tset(targets.begin(), targets.end());
    for (int s : sources) {
      if (tset.count(s)) {
        shared[s] = true;
        result.paths.push_back({s});
        result.separator.push_back(s);
      }
    }
  }

  const int big = n + 1;
  const int source_node = 2 * n;
  const int target_node = 2 * n + 1;
  SplitFlow flow(2 * n + 2);
  std::vector<int> split_arc_index(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!shared[v]) {
      split_arc_index[v] = static_cast<int>(flow.adj()[2 * v].size());
      flow.add_arc(2 * v, 2 * v + 1, 1);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (shared[v]) {
      continue;
    }
    for (int w : g.out(v)) {
      if (w != v && !shared[w]) {
        flow.add_arc(2 * v + 1, 2 * w, big);
      }
    }
  }
  for (int s : sources) {
    if (!shared[s]) {
      flow.add_arc(source_node, 2 * s, big);
    }
  }
  for (int t : targets) {
    if (!shared[t]) {
      flow.add_arc(2 * t + 1, target_node, big);
    }
  }

  const int value = flow.max_flow(source_node, target_node);
  result.count = value + static_cast<int>(result.separator.size());

  // Separator: saturated split arcs on the residual boundary.
  std::vector<bool> reach = flow.residual_reachable(source_node);
  for (int v = 0; v < n; ++v) {
    if (split_arc_index[v] < 0) {
      continue;
    }
    if (reach[2 * v] && !reach[2 * v + 1]) {
      result.separator.push_back(v);
    }
  }
  std::sort(result.separator.begin(), result.separator.end());

  // Net flow per real arc, as a consumable successor table per node.
  std::vector<std::map<int, int>> succ(2 * n + 2);
  for (int node = 0; node < 2 * n + 2; ++node) {
    const auto& arcs = flow.adj()[node];
    for (size_t i = 0; i < arcs.size(); ++i) {
      if (!arcs[i].real) {
        continue;
      }
      int f = flow.net_flow(node, static_cast<int>(i));
      if (f > 0) {
        succ[node][arcs[i].to] += f;
      }
    }
  }
  auto pop_succ = [&](int node) -> int {
    auto& m = succ[node];
    if (m.empty()) {
      return -1;
    }
    auto it = m.begin();
    int to = it->first;
    if (--it->second == 0) {
      m.erase(it);
    }
    return to;
  };

  // Walk source-to-target flow paths; drop any circulation loop met on the
  // way (flow cycles cannot reach the target, so looping back to a node on
  // the current walk is the only way they appear).
  std::set<int> target_set(targets.begin(), targets.end());
  for (int k = 0; k < value; ++k) {
    std::vector<int> node_path{source_node};
    std::vector<int> pos_of(2 * n + 2, -1);
    pos_of[source_node] = 0;
    while (node_path.back() != target_node) {
      int next = pop_succ(node_path.back());
      if (next == -1) {
        throw Error("max_vertex_disjoint_paths: flow decomposition failed");
      }
      if (pos_of[next] != -1) {
        for (size_t i = pos_of[next] + 1; i < node_path.size(); ++i) {
          pos_of[node_path[i]] = -1;
        }
        node_path.resize(pos_of[next] + 1);
      } else {
        pos_of[next] = static_cast<int>(node_path.size());
        node_path.push_back(next);
      }
    }
    // Convert in/out node pairs to vertices; trim at the first target hit.
    std::vector<int> path;
    for (int node : node_path) {
      if (node < 2 * n && node % 2 == 0) {
        path.push_back(node / 2);
        if (target_set.count(node / 2)) {
          break;
        }
      }
    }
    result.paths.push_back(std::move(path));
  }

  // Menger equality and separator validity, checked on every call.
  if (static_cast<int>(result.separator.size()) != result.count) {
    throw Error("max_vertex_disjoint_paths: packing/separator size mismatch");
  }
  std::vector<bool> removed(n, false);
  for (int v : result.separator) {
    removed[v] = true;
  }
  std::vector<bool> reach_after = reachable_set(g, sources, &removed);
  for (int t : targets) {
    if (!removed[t] && reach_after[t]) {
      throw Error("max_vertex_disjoint_paths: separator does not separate");
    }
  }
  return result;
}

}  // namespace semiends::digraph
