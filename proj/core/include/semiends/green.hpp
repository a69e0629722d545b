#ifndef SEMIENDS_GREEN_HPP_
#define SEMIENDS_GREEN_HPP_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semiends/cayley.hpp"

namespace semiends::green {

//! A total membership test for a subsemigroup T of the ambient spec, with a
//! short description for reports. Closure under multiplication is sampled
//! at construction time via make_subsemigroup.
struct SubsemigroupPredicate {
  std::function<bool(const models::Element&)> contains;
  std::string description;
  bool is_whole = false;  // T = S, enabling exact reachability
};

SubsemigroupPredicate whole_semigroup();

//! Builds a predicate and probabilistically checks closure: random pairs of
//! members sampled from a small ball must multiply into T.
SubsemigroupPredicate make_subsemigroup(
    const models::SpecPtr& spec,
    std::function<bool(const models::Element&)> contains,
    std::string description, int sample_radius = 3, int samples = 200);

struct RelGreenOptions {
  //! Longest generator block whose product is tested for T-membership when
  //! searching translation witnesses. Blocks compose across certified arcs,
  //! so short blocks suffice unless T-membership needs long products.
  int max_block_len = 3;
  size_t state_cap = 4'000'000;
};

//! A partition of the ball's vertices into certified relative Green
//! classes. Merged classes carry in-ball translation witnesses; singletons
//! are certified only reflexively (their completeness is horizon-limited
//! evidence, not proof).
struct RelativeClasses {
  std::vector<std::vector<int>> classes;  // canonical order
  std::vector<int> class_of;              // vertex -> class
  std::vector<std::string> note;          // per class
};

//! x and y merge iff there are in-ball witness paths both ways whose label
//! blocks multiply into T (length-0 translations always count). With T = S
//! this is exactly mutual in-ball reachability.
RelativeClasses relative_r_classes(const cayley::CayleyBall& ball,
                                   const SubsemigroupPredicate& T,
                                   const RelGreenOptions& opts = {});

//! The left-sided analogue, computed on the dual ball (which shares this
//! ball's vertex set).
RelativeClasses relative_l_classes(const cayley::CayleyBall& ball,
                                   const SubsemigroupPredicate& T,
                                   const RelGreenOptions& opts = {});

//! Common refinement of R- and L-classes.
RelativeClasses intersect_partitions(const RelativeClasses& r,
                                     const RelativeClasses& l);

struct GreenReport {
  RelativeClasses r_classes;
  RelativeClasses l_classes;
  RelativeClasses h_classes;
  std::vector<int> idempotents;
  std::vector<int> regulars;  // x with some in-ball z, x z x = x
};

GreenReport green_report(const cayley::CayleyBall& ball,
                         const SubsemigroupPredicate& T,
                         const RelGreenOptions& opts = {});

std::string report_to_json(const cayley::CayleyBall& ball,
                           const GreenReport& report);

std::pair<std::vector<int>, std::vector<int>> idempotents_and_regulars(
    const cayley::CayleyBall& ball);

struct LeftCancelResult {
  bool pass;  // no in-ball counterexample (evidence, not proof)
  std::optional<std::array<int, 3>> counterexample;  // a, x, y
};

//! Searches all in-ball triples for a*x = a*y with x != y.
LeftCancelResult left_cancellative_check(const cayley::CayleyBall& ball);

struct IndexEvidence {
  std::vector<int> radii;
  std::vector<long long> counts;
  bool stabilized = false;      // equal counts over the last three radii
  long long value = -1;         // stabilized count (complement classes),
                                // or count+1 for the Rees index
  std::string verdict;          // human-readable summary
};

//! |complement of T in ball(r)| per radius; the Rees index is count + 1
//! when the counts stabilize, else "unbounded at horizon".
IndexEvidence rees_index_evidence(const models::SpecPtr& spec,
                                  const SubsemigroupPredicate& T,
                                  const std::vector<int>& radii,
                                  const cayley::BallLimits& limits = {});

//! Certified relative H^T-classes inside the complement per radius, with a
//! stabilization verdict. r_counts carries the R^T-class counts of the
//! complement alongside, since both readings of the index are in use.
struct GreenIndexEvidence : IndexEvidence {
  std::vector<long long> r_counts;
};

GreenIndexEvidence green_index_evidence(const models::SpecPtr& spec,
                                        const SubsemigroupPredicate& T,
                                        const std::vector<int>& radii,
                                        const cayley::BallLimits& limits = {},
                                        const RelGreenOptions& opts = {});

//! Exact check on a finite table: left cancellative and single R-class.
bool is_right_group(const models::SpecPtr& table_spec);

}  // namespace semiends::green

#endif  // SEMIENDS_GREEN_HPP_
