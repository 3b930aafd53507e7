#include "eqrw/prover.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "eqrw/axioms.hpp"

namespace eqrw {

namespace {

struct StateRec {
  Expr program;
  std::int64_t parent;  // index into the arena, -1 for the root
  RewriteStep step;     // edge that produced this state
  int depth;
};

void collect_positions(const Expr& e, Path& prefix, std::vector<Path>& out) {
  out.push_back(prefix);
  for (int i = 0; i < e.arity(); ++i) {
    prefix.push_back(i == 0 ? Side::Left : Side::Right);
    collect_positions(e.child(i), prefix, out);
    prefix.pop_back();
  }
}

RewriteSequence reconstruct(const std::vector<StateRec>& arena,
                            std::int64_t index) {
  std::vector<RewriteStep> reversed;
  while (index >= 0 && arena[index].parent >= 0) {
    reversed.push_back(arena[index].step);
    index = arena[index].parent;
  }
  RewriteSequence seq;
  seq.steps.assign(reversed.rbegin(), reversed.rend());
  return seq;
}

}  // namespace

ProveResult prove(const Expr& a, const Expr& b, const SearchConfig& cfg) {
  if (a.type() != b.type()) {
    throw TypeError("cannot search between a " +
                    std::string(type_name(a.type())) + " and a " +
                    std::string(type_name(b.type())) + " program");
  }
  const std::string target = print(b);
  const auto deadline = cfg.time_budget.count() > 0
                            ? std::chrono::steady_clock::now() + cfg.time_budget
                            : std::chrono::steady_clock::time_point::max();

  auto verified = [&](RewriteSequence seq) -> ProveResult {
    if (!check(a, seq, b).proven()) {
      throw std::logic_error("prover produced a sequence the checker rejects");
    }
    return {SearchOutcome::Found, std::move(seq), 0};
  };

  if (print(a) == target) return verified(RewriteSequence{});

  std::vector<StateRec> arena;
  arena.push_back({a, -1, {}, 0});
  std::unordered_set<std::string> seen;
  seen.insert(print(a));
  std::deque<std::int64_t> frontier;
  frontier.push_back(0);

  std::size_t expansions = 0;
  bool budget_hit = false;
  while (!frontier.empty()) {
    std::int64_t index = frontier.front();
    frontier.pop_front();
    const int depth = arena[index].depth;
    if (depth >= cfg.max_steps) continue;
    if (++expansions > cfg.max_expansions ||
        std::chrono::steady_clock::now() > deadline) {
      budget_hit = true;
      break;
    }

    const Expr program = arena[index].program;
    std::vector<Path> positions;
    Path prefix;
    collect_positions(program, prefix, positions);
    for (const Path& pos : positions) {
      for (Category cat : all_categories()) {
        std::optional<Match> m = match_at(program, pos, cat);
        if (!m) continue;
        Expr next = replace_at(
            program, pos, instantiate(m->rule->replacement, m->bindings));
        std::string printed = print(next);
        if (!seen.insert(printed).second) continue;
        arena.push_back({next, index, {pos, cat}, depth + 1});
        if (printed == target) {
          RewriteSequence seq =
              reconstruct(arena, static_cast<std::int64_t>(arena.size()) - 1);
          ProveResult result = verified(std::move(seq));
          result.expansions = expansions;
          return result;
        }
        frontier.push_back(static_cast<std::int64_t>(arena.size()) - 1);
      }
    }
  }

  return {budget_hit ? SearchOutcome::BudgetExceeded
                     : SearchOutcome::NotFoundWithinDepth,
          std::nullopt, expansions};
}

}  // namespace eqrw
