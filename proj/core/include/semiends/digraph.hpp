#ifndef SEMIENDS_DIGRAPH_HPP_
#define SEMIENDS_DIGRAPH_HPP_

#include <cstdint>
#include <vector>

namespace semiends::digraph {

//! A plain digraph on vertices 0..n-1. Parallel edges and self-loops are
//! permitted; neighbour lists are kept sorted for deterministic traversal.
class Digraph {
 public:
  explicit Digraph(int n) : out_(n), in_(n) {}

  int size() const noexcept { return static_cast<int>(out_.size()); }
  void add_edge(int from, int to);
  void finalize();  // sort and deduplicate neighbour lists

  const std::vector<int>& out(int v) const { return out_.at(v); }
  const std::vector<int>& in(int v) const { return in_.at(v); }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

//! Strongly connected components, returned as a partition of 0..n-1.
//! Components are ordered by their smallest member and sorted internally.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

//! Component index per vertex, aligned with strongly_connected_components.
std::vector<int> scc_index(const Digraph& g);

//! Vertices reachable from `from` (including itself), optionally avoiding a
//! set of removed vertices.
std::vector<bool> reachable_set(const Digraph& g, const std::vector<int>& from,
                                const std::vector<bool>* removed = nullptr);

//! Result of a maximum vertex-disjoint path computation: a witness family
//! of pairwise vertex-disjoint directed paths (vertex index sequences,
//! length-0 paths are singletons) and a vertex separator of equal size
//! whose removal disconnects the sources from the targets.
struct PathPacking {
  int count = 0;
  std::vector<std::vector<int>> paths;
  std::vector<int> separator;
};

//! Maximum number of pairwise vertex-disjoint directed paths from `sources`
//! to `targets` (length-0 paths at shared vertices count), computed as a
//! max-flow on the vertex-split digraph with unit vertex capacities. The
//! Menger equality count == |separator| and the separator's validity are
//! checked before returning.
PathPacking max_vertex_disjoint_paths(const Digraph& g,
                                      std::vector<int> sources,
                                      std::vector<int> targets);

}  // namespace semiends::digraph

#endif  // SEMIENDS_DIGRAPH_HPP_
