#ifndef EQRW_CHECKER_HPP
#define EQRW_CHECKER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "eqrw/axioms.hpp"
#include "eqrw/lang.hpp"

namespace eqrw {

struct RewriteStep {
  Path path;
  Category category;
};

struct RewriteSequence {
  std::vector<RewriteStep> steps;

  // Selector words plus category names, the unit of the <= 25 dataset
  // bound.
  int token_count() const;
  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
};

bool operator==(const RewriteStep& a, const RewriteStep& b);
bool operator==(const RewriteSequence& a, const RewriteSequence& b);

// "DistributeRight right Commute" -> two steps. Selectors accumulate
// greedily until a category token closes the step. Throws SyntaxError on
// unknown tokens or trailing selectors.
RewriteSequence parse_sequence(std::string_view tokens);
std::string sequence_tokens(const RewriteSequence& s);

struct Verdict {
  enum class Kind { Proven, StepFailed, MismatchAfterRewrites };
  Kind kind;
  int failed_step = -1;       // StepFailed
  std::string reason;         // StepFailed
  std::string final_program;  // MismatchAfterRewrites

  bool proven() const { return kind == Kind::Proven; }
};

std::string to_string(const Verdict& v);

// Fold apply_at over the steps, each path read against the program as
// rewritten so far; Proven iff every step applies legally and the result
// prints identically to b. Never throws: failures are Verdict values.
Verdict check(const Expr& a, const RewriteSequence& s, const Expr& b);

}  // namespace eqrw

#endif
