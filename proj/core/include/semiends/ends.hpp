#ifndef SEMIENDS_ENDS_HPP_
#define SEMIENDS_ENDS_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiends/cayley.hpp"

namespace semiends::ends {

enum class RayKind { ray, antiray };

//! An eventually periodic ray or anti-ray: the base word evaluates to the
//! start vertex, then the labels prefix . period . period ... are consumed
//! forward (ray: v_{k+1} = v_k * label) or against reversed edges
//! (anti-ray: v_{k+1} * label = v_k). Words index the spec's generators.
struct PeriodicRay {
  words::Word base;
  words::Word prefix;
  words::Word period;
  RayKind kind = RayKind::ray;
};

//! Shared evaluation state for one spec: a cache of balls and of
//! predecessor indices, grown on demand.
class EndContext {
 public:
  explicit EndContext(models::SpecPtr spec, cayley::BallLimits limits = {});

  const models::SpecPtr& spec() const noexcept { return spec_; }
  const cayley::BallLimits& limits() const noexcept { return limits_; }

  const cayley::CayleyBall& ball(int radius);

  //! Ball vertices u with u * gen(label) = v, ascending. Requires v to be a
  //! vertex of ball(radius).
  const std::vector<int>& predecessors(int radius, int vertex, int label);

 private:
  models::SpecPtr spec_;
  cayley::BallLimits limits_;
  std::map<int, std::unique_ptr<cayley::CayleyBall>> balls_;
  // radius -> [vertex][label] -> sorted predecessor indices
  std::map<int, std::vector<std::vector<std::vector<int>>>> preds_;
};

struct RayEval {
  enum class Status { ok, repeats, dead_end, cap_exceeded };
  Status status = Status::ok;
  std::vector<models::Element> vertices;
  std::vector<std::string> keys;
  std::vector<int> depth_estimate;         // generator length bound per vertex
  size_t fail_index = 0;                   // step at which evaluation failed
  std::pair<size_t, size_t> collision{0, 0};  // indices of a repeated vertex
  bool ok() const { return status == Status::ok; }
};

//! First `horizon` vertices of the ray with distinctness verified; a
//! rejection pinpoints the first repeated vertex. Anti-ray steps solve
//! x * label = v, closed-form where the variant allows and by predecessor
//! search in a context ball otherwise (ties resolved canonically).
RayEval ray_vertices(EndContext& ctx, const PeriodicRay& ray, int horizon);

//! The subsequence extraction that turns a finite walk whose vertices recur
//! only finitely often into a path: a(0) = 1 and a(i) is one past the last
//! occurrence of the vertex at a(i-1), truncated at the end of the walk.
//! The walk's first vertex is dropped by construction; the result has
//! pairwise distinct vertices and consecutive pairs remain edges.
struct WalkToRay {
  std::vector<size_t> picked;
  std::map<std::string, int> multiplicity;
};
WalkToRay walk_to_ray(const std::vector<std::string>& walk_keys);

struct ConcatCheck {
  bool pass = false;
  int max_multiplicity = 0;
  std::optional<int> max_vertex;    // ball vertex realizing the maximum
  std::string precondition_error;   // non-empty on a precondition violation
};

//! Checks, on the concatenation of the given walks (vertex index sequences
//! in the ball), that no vertex occurs in more walks than the number of
//! vertices reachable from it within K steps allows.
ConcatCheck bounded_concat_check(const cayley::CayleyBall& ball,
                                 const std::vector<std::vector<int>>& walks,
                                 int K);

struct DominanceResult {
  std::vector<int> prefix;                    // a path starting at alpha0
  std::vector<std::vector<int>> connectors;   // pairwise disjoint, start on
                                              // the prefix, end in sigma
};

//! The pigeonhole recursion that grows a ray prefix dominating sigma:
//! repeatedly fix a path to one target, split the remaining path family at
//! the last vertex shared with it, and follow the largest class. The
//! returned connectors are pairwise vertex-disjoint, each sharing exactly
//! its first vertex with the prefix.
DominanceResult dominance_ray(const digraph::Digraph& g, int alpha0,
                              std::vector<int> sigma);
DominanceResult dominance_ray(const cayley::CayleyBall& ball,
                              const std::string& alpha0_key,
                              const std::vector<std::string>& sigma_keys);

struct EnumOptions {
  int max_period = 2;
  int base_bound = 1;
  int horizon = 16;
  RayKind kind = RayKind::ray;
};

//! All (base of length <= base_bound, empty prefix, period of length <=
//! max_period) whose vertex sequence passes distinctness to the horizon,
//! deduplicated by the vertex set of the tail half at the horizon.
std::vector<PeriodicRay> enumerate_periodic_rays(EndContext& ctx,
                                                 const EnumOptions& opts);

struct TranslateOptions {
  int horizon = 48;        // working horizon for the label stream
  int max_segment = 8;     // longest s-initiated segment replaced at once
  int word_budget = 24;    // longest replacement word searched for
  size_t search_cap = 200'000;
};

struct TranslateResult {
  PeriodicRay ray;            // over the base spec's own generators
  int dropped = 0;            // leading input vertices outside the subsemigroup
  int budget_used = 0;        // longest replacement word actually needed
  int shared_at_horizon = 0;  // vertices shared with the input ray
};

//! Rewrites a ray over generators-plus-s into a ray over the generators
//! alone: every maximal s-initiated label segment is replaced by a word
//! found by bounded search, the resulting walk is straightened by
//! walk_to_ray, and eventual periodicity is recovered from the label
//! stream. The input ray's words index ctx.spec()'s generators followed by
//! one extra letter for s.
TranslateResult translate_ray(EndContext& ctx, const models::Element& s,
                              const PeriodicRay& ray,
                              const TranslateOptions& opts = {});

enum class Verdict {
  equivalent,
  first_below_second,
  second_below_first,
  incomparable,
  unknown,
};

std::string verdict_name(Verdict v);

struct DirectionEvidence {
  std::vector<int> horizons;
  std::vector<int> counts;
  bool growing = false;
  bool stagnant = false;
  bool monotone = true;                 // counts non-decreasing in horizon
  std::vector<std::string> separator;   // validated stable separator keys
};

struct EndVerdict {
  DirectionEvidence forward;   // disjoint paths first -> second
  DirectionEvidence backward;  // disjoint paths second -> first
  Verdict verdict = Verdict::unknown;
};

struct CompareOptions {
  std::vector<int> horizons{8, 12, 16, 20, 24};
  int k = 4;
  int radius_slack = 2;
};

//! Three-valued end comparison inside balls calibrated to each horizon h:
//! disjoint paths are counted from one ray's tail (indices in [h/2, h)) to
//! the other ray's window [h/2, 2h), since rays consuming several labels
//! per geometric step would outrun each other's plain tails. A direction is
//! certified growing when the counts reach k and still increased over the
//! last step; it is separator-stagnant when the counts agree over the last
//! three horizons and the separator found at the first of those remains a
//! valid cut at the later two.
EndVerdict end_compare(EndContext& ctx, const PeriodicRay& r1,
                       const PeriodicRay& r2, const CompareOptions& opts = {});

struct PosetResult {
  std::vector<PeriodicRay> rays;
  std::vector<std::vector<Verdict>> matrix;
  std::vector<std::vector<int>> classes;       // certified-equivalent groups
  std::vector<std::pair<int, int>> below;      // certified strict order on classes
  int unknown_pairs = 0;
  int conflict_pairs = 0;

  bool chain() const;      // every class pair comparable
  bool antichain() const;  // no class pair comparable
  //! Size of a largest set of pairwise incomparable classes.
  int max_antichain() const;
};

//! Pairwise end_compare over a ray sample; classes from certified
//! equivalences, Hasse-style strict edges from certified strict verdicts.
PosetResult end_poset(EndContext& ctx, const std::vector<PeriodicRay>& rays,
                      const CompareOptions& opts = {});

std::string poset_to_json(EndContext& ctx, const PosetResult& poset);
std::string poset_to_text(EndContext& ctx, const PosetResult& poset);

struct FreePairResult {
  enum class Kind { witness, free_evidence, inconclusive };
  Kind kind = Kind::inconclusive;
  words::Word u, v;        // witness: s * eval(u) = t * eval(v)
  std::string meet_key;    // canonical form of the common product
  long long words_checked = 0;
};

//! Searches for u, v of length <= depth with s*u = t*v; failing that,
//! verifies all {s,t}-words of length <= depth are pairwise distinct and
//! returns finite evidence of a free subsemigroup on {s, t}.
FreePairResult free_pair_witness(const models::SpecPtr& spec,
                                 const models::Element& s,
                                 const models::Element& t, int depth);

}  // namespace semiends::ends

#endif  // SEMIENDS_ENDS_HPP_
