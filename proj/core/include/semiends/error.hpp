#ifndef SEMIENDS_ERROR_HPP_
#define SEMIENDS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace semiends {

//! Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

//! Raised when a rewriting or search step budget runs out.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

//! Raised when a ball or state-space cap would be exceeded.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace semiends

#endif  // SEMIENDS_ERROR_HPP_
