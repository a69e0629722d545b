#include "semiends/words.hpp"

#include <algorithm>
#include <set>

namespace semiends::words {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error("Alphabet: must contain at least one generator name");
  }
  std::set<std::string> seen;
  single_char_ = true;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw Error("Alphabet: generator names must be non-empty");
    }
    if (n.find('.') != std::string::npos) {
      throw Error("Alphabet: generator name '" + n + "' may not contain '.'");
    }
    if (!seen.insert(n).second) {
      throw Error("Alphabet: duplicate generator name '" + n + "'");
    }
    if (n.size() > 1) {
      single_char_ = false;
    }
  }
}

std::optional<Letter> Alphabet::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return static_cast<Letter>(i);
    }
  }
  return std::nullopt;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) {
      out += '.';
    }
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  if (text.empty()) {
    return w;
  }
  if (single_char_) {
    for (char c : text) {
      auto x = index(std::string_view(&c, 1));
      if (!x) {
        throw Error("Alphabet: unknown generator '" + std::string(1, c) + "'");
      }
      w.push_back(*x);
    }
    return w;
  }
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t dot = text.find('.', pos);
    std::string_view piece =
        text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
    auto x = index(piece);
    if (!x) {
      throw Error("Alphabet: unknown generator '" + std::string(piece) + "'");
    }
    w.push_back(*x);
    if (dot == std::string_view::npos) {
      break;
    }
    pos = dot + 1;
  }
  return w;
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                             size_t max_steps)
    : alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      max_steps_(max_steps) {
  if (max_steps_ == 0) {
    throw Error("RewriteSystem: max_steps must be positive");
  }
  for (size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.lhs.empty()) {
      throw Error("RewriteSystem: rule " + std::to_string(i) +
                  " has an empty left hand side");
    }
    for (const Word* side : {&r.lhs, &r.rhs}) {
      for (Letter x : *side) {
        if (x >= alphabet_.size()) {
          throw Error("RewriteSystem: rule " + std::to_string(i) +
                      " uses a letter outside the alphabet");
        }
      }
    }
    if (!shortlex_less(r.rhs, r.lhs)) {
      throw Error("RewriteSystem: rule " + std::to_string(i) + " (" +
                  alphabet_.format(r.lhs) + " -> " + alphabet_.format(r.rhs) +
                  ") is not shortlex-reducing");
    }
  }
}

std::optional<std::pair<size_t, size_t>> RewriteSystem::leftmost_redex(
    const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (size_t r = 0; r < rules_.size(); ++r) {
      const Word& lhs = rules_[r].lhs;
      if (pos + lhs.size() <= w.size() &&
          std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
        return std::make_pair(pos, r);
      }
    }
  }
  return std::nullopt;
}

Word RewriteSystem::normal_form(Word w) const {
  size_t steps = 0;
  while (true) {
    auto redex = leftmost_redex(w);
    if (!redex) {
      return w;
    }
    if (++steps > max_steps_) {
      throw BudgetExceeded("normal_form: step budget (" +
                           std::to_string(max_steps_) + ") exhausted on '" +
                           alphabet_.format(w) + "'");
    }
    auto [pos, r] = *redex;
    Word next;
    next.reserve(w.size() - rules_[r].lhs.size() + rules_[r].rhs.size());
    next.insert(next.end(), w.begin(), w.begin() + pos);
    next.insert(next.end(), rules_[r].rhs.begin(), rules_[r].rhs.end());
    next.insert(next.end(), w.begin() + pos + rules_[r].lhs.size(), w.end());
    w = std::move(next);
  }
}

Word RewriteSystem::normal_form_trace(Word w,
                                      std::vector<RewriteStep>& steps) const {
  while (true) {
    auto redex = leftmost_redex(w);
    if (!redex) {
      return w;
    }
    if (steps.size() >= max_steps_) {
      throw BudgetExceeded("normal_form_trace: step budget exhausted");
    }
    auto [pos, r] = *redex;
    Word next;
    next.insert(next.end(), w.begin(), w.begin() + pos);
    next.insert(next.end(), rules_[r].rhs.begin(), rules_[r].rhs.end());
    next.insert(next.end(), w.begin() + pos + rules_[r].lhs.size(), w.end());
    steps.push_back(RewriteStep{pos, r, next});
    w = std::move(next);
  }
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  return !leftmost_redex(w).has_value();
}

ConfluenceReport is_locally_confluent(const RewriteSystem& sys) {
  ConfluenceReport report{true, {}, 0};
  const auto& rules = sys.rules();
  // Superpose lhs of rule b at every offset p inside lhs of rule a such that
  // the two occurrences overlap; p + |lhs_b| may stick out to the right.
  for (size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lhs;
    for (size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lhs;
      for (size_t p = 0; p < la.size(); ++p) {
        if (a == b && p == 0) {
          continue;  // identical occurrence, trivially joinable
        }
        size_t common = std::min(la.size() - p, lb.size());
        if (!std::equal(lb.begin(), lb.begin() + common, la.begin() + p)) {
          continue;
        }
        Word super(la);
        if (p + lb.size() > la.size()) {
          super.insert(super.end(), lb.begin() + (la.size() - p), lb.end());
        }
        // Reduce the occurrence of la at 0 and of lb at p.
        Word via_a(rules[a].rhs);
        via_a.insert(via_a.end(), super.begin() + la.size(), super.end());
        Word via_b(super.begin(), super.begin() + p);
        via_b.insert(via_b.end(), rules[b].rhs.begin(), rules[b].rhs.end());
        via_b.insert(via_b.end(), super.begin() + p + lb.size(), super.end());

        CriticalPair pair{std::move(super), a,
                          b,                p,
                          sys.normal_form(std::move(via_a)),
                          sys.normal_form(std::move(via_b))};
        ++report.pairs_checked;
        if (!pair.joinable()) {
          report.locally_confluent = false;
          report.unjoinable.push_back(std::move(pair));
        }
      }
    }
  }
  return report;
}

}  // namespace semiends::words
