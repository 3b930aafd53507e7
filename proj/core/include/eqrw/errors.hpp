#ifndef EQRW_ERRORS_HPP
#define EQRW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqrw {

struct LexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by zero or a singular matrix during evaluation.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input program admits no illegal edit (e.g. a bare terminal).
struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dataset build could not reach its target within the retry budget.
struct ExhaustionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eqrw

#endif
