#ifndef EQRW_GENERATOR_HPP
#define EQRW_GENERATOR_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "eqrw/checker.hpp"
#include "eqrw/lang.hpp"
#include "eqrw/rng.hpp"

namespace eqrw {

struct GenConfig {
  // Probability that a child of a fresh node is itself an operation.
  double initial_child_prob = 0.91;
  // Subtracted per level, so 0.91 - 5*0.23 < 0 bounds depth_edges at 5.
  double level_decrement = 0.23;
  // Per-category coin in gen_tgt.
  double apply_prob = 0.50;
  std::uint64_t rng_seed = 1;
  // Weighted operator multiset of the initial gen_src call; binary
  // operators are listed twice so they outnumber the unary ones.
  std::vector<Op> op_weights = default_op_weights();
  // Illegal edits per gen_unequal sample.
  int illegal_edits = 1;

  static std::vector<Op> default_op_weights();
};

struct SampleTuple {
  Expr prog_a;
  Expr prog_b;
  bool equal;           // false => outcome is Not_equal
  RewriteSequence seq;  // meaningful only when equal
};

// Random well-typed program: the root is drawn from `allowed` and each
// child slot becomes an operation with probability p (restricted to the
// operators producing the required type) or a uniform terminal of that
// type. Recursive calls use p - level_decrement.
Expr gen_src(const GenConfig& cfg, std::span<const Op> allowed, double p,
             Rng& rng);
Expr gen_src(const GenConfig& cfg, Rng& rng);

// Equivalent-pair generation: walk a, and at every node give each
// applicable category an independent apply_prob coin in catalog order;
// the first success rewrites the node (at most one rewrite per node) and
// the walk continues on the rewritten subtrees with paths updated to the
// new coordinates. The result always satisfies check(a, seq, b) == Proven.
std::pair<Expr, RewriteSequence> gen_tgt(const GenConfig& cfg, const Expr& a,
                                         Rng& rng);

// Corrupted-pair generation: cfg.illegal_edits structural edits that no
// axiom licenses (commuting a non-commutative operation, or mutating an
// operation into another of identical signature), then an ordinary
// gen_tgt pass whose legal rewrites are kept but not recorded. Throws
// DegenerateInput when a admits no illegal edit.
Expr gen_unequal(const GenConfig& cfg, const Expr& a, Rng& rng);

}  // namespace eqrw

#endif
