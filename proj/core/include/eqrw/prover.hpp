#ifndef EQRW_PROVER_HPP
#define EQRW_PROVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>

#include "eqrw/checker.hpp"
#include "eqrw/lang.hpp"

namespace eqrw {

struct SearchConfig {
  int max_steps = 5;
  // Expansion budget; sized so depth-5 searches over 30-node programs
  // finish in seconds.
  std::size_t max_expansions = 200'000;
  // Zero means no time limit.
  std::chrono::milliseconds time_budget{0};
};

enum class SearchOutcome : std::uint8_t {
  Found,
  // Whole space within max_steps exhausted: no proof at this depth.
  NotFoundWithinDepth,
  // Expansion or time budget hit first; deeper/wider search might differ.
  BudgetExceeded,
};

struct ProveResult {
  SearchOutcome outcome;
  std::optional<RewriteSequence> sequence;  // set iff outcome == Found
  std::size_t expansions = 0;

  bool found() const { return outcome == SearchOutcome::Found; }
};

// Breadth-first search from a over single-axiom rewrites, deduplicated on
// the canonical printed form, stopping at the first program that prints
// like b. Successors are ordered by (position pre-order, category order),
// so results are deterministic and of minimal length. Any returned
// sequence is re-verified with check() before being handed back; an empty
// result is *not* a non-equivalence proof.
ProveResult prove(const Expr& a, const Expr& b, const SearchConfig& cfg = {});

}  // namespace eqrw

#endif
