#ifndef SEMIENDS_CATALOG_HPP_
#define SEMIENDS_CATALOG_HPP_

#include <string>
#include <vector>

#include "semiends/ends.hpp"
#include "semiends/green.hpp"

namespace semiends::catalog {

struct RunConfig {
  unsigned seed = 0xC0FFEE;
  size_t ball_cap = 2'000'000;
};

struct ExpectationResult {
  std::string name;
  std::string provenance;  // "stated" or "oracle: <method>"
  bool pass = false;
  std::string detail;
};

struct CaseResult {
  std::string name;
  int criterion = 0;  // acceptance criterion this case realizes
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::vector<ExpectationResult> expectations;

  bool pass() const;
};

//! Names of the shipped cases, in criterion order.
std::vector<std::string> case_names();

//! Acceptance criterion a case realizes, without running it.
int case_criterion(const std::string& name);

//! Runs one case. Throws Error for an unknown name.
CaseResult run_case(const std::string& name, const RunConfig& cfg = {});

std::vector<CaseResult> run_all(const RunConfig& cfg = {});

std::string format_result(const CaseResult& result, bool verbose);

//! Compact matrix rendering used by expected-verdict comparisons:
//! '=' equivalent, '<' first below second, '>' second below first,
//! 'X' incomparable, '?' unknown; rows joined by '/'.
std::string matrix_signature(const ends::PosetResult& poset);

}  // namespace semiends::catalog

#endif  // SEMIENDS_CATALOG_HPP_
