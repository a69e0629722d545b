#ifndef SEMIENDS_WORDS_HPP_
#define SEMIENDS_WORDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiends/error.hpp"

namespace semiends::words {

//! A letter is an index into an Alphabet.
using Letter = std::uint32_t;

//! A word is a (possibly empty) sequence of letters.
using Word = std::vector<Letter>;

//! An ordered set of distinct generator names. The order of the names fixes
//! the shortlex order on words.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Letter> index(std::string_view name) const;

  //! Render a word as a string. Single-character names are concatenated,
  //! otherwise letters are joined with ".".
  std::string format(const Word& w) const;

  //! Inverse of format. Throws Error on an unknown generator name.
  Word parse(std::string_view text) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  bool single_char_;
};

//! Shortlex: shorter words first, ties broken lexicographically by letter
//! index. A strict total order.
bool shortlex_less(const Word& u, const Word& v);

//! A rule lhs -> rhs with rhs strictly shortlex-smaller than lhs.
struct RewriteRule {
  Word lhs;
  Word rhs;
};

struct RewriteStep {
  size_t position;  // offset of the replaced occurrence
  size_t rule;      // index of the rule applied
  Word result;
};

//! One critical pair of a rewriting system: the superposed word together
//! with the normal forms of its two one-step reducts.
struct CriticalPair {
  Word superposition;
  size_t rule_a;
  size_t rule_b;
  size_t offset;  // where lhs of rule_b starts inside the superposition
  Word left_nf;
  Word right_nf;
  bool joinable() const { return left_nf == right_nf; }
};

struct ConfluenceReport {
  bool locally_confluent;
  std::vector<CriticalPair> unjoinable;
  size_t pairs_checked;
};

//! A shortlex-reducing string rewriting system over a fixed alphabet.
//!
//! Every rule must strictly decrease its word in shortlex order, so the
//! system terminates by construction; the step budget is a guard against
//! mis-specified inputs, not a termination proof.
class RewriteSystem {
 public:
  static constexpr size_t kDefaultMaxSteps = 1'000'000;

  RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                size_t max_steps = kDefaultMaxSteps);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  size_t max_steps() const noexcept { return max_steps_; }

  //! Repeatedly replaces the leftmost occurrence of any lhs (ties broken by
  //! rule order) until no rule applies. Throws BudgetExceeded if more than
  //! max_steps() replacements are needed.
  Word normal_form(Word w) const;

  //! As normal_form but records every replacement made.
  Word normal_form_trace(Word w, std::vector<RewriteStep>& steps) const;

  bool is_irreducible(const Word& w) const;

 private:
  std::optional<std::pair<size_t, size_t>> leftmost_redex(const Word& w) const;

  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  size_t max_steps_;
};

//! Computes all critical pairs arising from overlaps (including
//! self-overlaps and factor containments) of rule left hand sides and checks
//! that each pair rewrites to a common normal form. Together with the
//! shortlex-reducing construction invariant this certifies completeness.
ConfluenceReport is_locally_confluent(const RewriteSystem& sys);

}  // namespace semiends::words

#endif  // SEMIENDS_WORDS_HPP_
