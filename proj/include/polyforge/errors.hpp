#ifndef POLYFORGE_ERRORS_HPP
#define POLYFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyforge {

// Raised when a computation cannot finish inside a resource budget.
// Not a proof of anything: enumeration past the bound is simply unknown.
struct LimitExceeded : std::runtime_error {
  long long limit;
  explicit LimitExceeded(const std::string& what, long long limit_)
      : std::runtime_error(what), limit(limit_) {}
};

struct MalformedPresentation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TypeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A tessellation quotient that is not a polytope (carries the axiom witness).
struct DegenerateQuotient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IncompatibleSections : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace polyforge

#endif
