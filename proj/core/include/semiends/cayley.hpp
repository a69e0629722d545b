#ifndef SEMIENDS_CAYLEY_HPP_
#define SEMIENDS_CAYLEY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiends/digraph.hpp"
#include "semiends/models.hpp"

namespace semiends::cayley {

struct BallLimits {
  size_t max_vertices = 2'000'000;
};

//! An edge (source, source * gen) of a right Cayley graph, labelled by the
//! index of the generator.
struct Edge {
  int src;
  int dst;
  int label;
  bool operator==(const Edge&) const = default;
};

//! A finite truncation of the right Cayley digraph of a spec: all products
//! of 1..radius generators (plus the identity for monoids), in canonical
//! order, together with every edge whose endpoints both lie in the ball.
//!
//! Interior vertices have all |generators| out-edges inside the ball; the
//! frontier is the complement. Immutable after construction; all queries
//! are safe to run concurrently.
class CayleyBall {
 public:
  models::SpecPtr spec;
  int radius = 0;
  std::vector<models::Element> vertices;  // canonical (length, lex) order
  std::vector<std::string> keys;          // canonical strings, same order
  std::vector<int> depth;                 // least word length realizing v
  std::vector<Edge> edges;                // sorted by (src, label)
  std::vector<bool> interior;
  digraph::Digraph graph{0};              // edge relation without labels

  int size() const { return static_cast<int>(vertices.size()); }
  std::optional<int> find_key(const std::string& key) const;
  std::optional<int> find(const models::Element& x) const;
  std::vector<int> interior_indices() const;
  std::vector<int> frontier_indices() const;

 private:
  friend CayleyBall build_ball(models::SpecPtr, int, const BallLimits&);
  std::unordered_map<std::string, int> index_;
};

//! Breadth-first closure of the generators (and identity, for monoids)
//! under right multiplication by generators, up to word length `radius`.
//! Throws CapExceeded when the vertex cap would be passed.
CayleyBall build_ball(models::SpecPtr spec, int radius,
                      const BallLimits& limits = {});

//! SCC partition of the truncated digraph, components in canonical order.
std::vector<std::vector<int>> strongly_connected_components(
    const CayleyBall& ball);

//! Maximum vertex-disjoint path packing between two vertex sets of a ball;
//! see digraph::max_vertex_disjoint_paths.
digraph::PathPacking vertex_disjoint_path_count(
    const CayleyBall& ball, const std::vector<int>& sources,
    const std::vector<int>& targets);

//! DOT rendering with generator names as edge labels and frontier vertices
//! drawn dashed. Byte-deterministic given a ball.
std::string export_dot(const CayleyBall& ball);

//! JSON rendering: {vertices, edges, interior, radius, spec}. The spec echo
//! makes the document self-contained; byte-deterministic given a ball.
std::string export_json(const CayleyBall& ball);

}  // namespace semiends::cayley

#endif  // SEMIENDS_CAYLEY_HPP_
