#include <doctest.h>

#include "eqrw/generator.hpp"
#include "eqrw/interp.hpp"
#include "test_util.hpp"

using namespace eqrw;

namespace {
const char* kProgA = "( d *s ( ( ( ns e ) /s a ) -s c ) )";
const char* kProgB = "( ( d *s ( ( ns e ) /s a ) ) -s ( c *s d ) )";

void check_well_typed(const Expr& e) {
  if (e.is_terminal()) return;
  const OpInfo& info = op_info(e.op());
  if (info.arity == 1) {
    bool ok = false;
    for (TypeTag t : info.unary_sigs) ok = ok || t == e.child(0).type();
    REQUIRE(ok);
    check_well_typed(e.child(0));
    return;
  }
  bool ok = false;
  for (const BinarySig& sig : info.binary_sigs) {
    ok = ok || (sig.left == e.left().type() && sig.right == e.right().type());
  }
  REQUIRE(ok);
  check_well_typed(e.left());
  check_well_typed(e.right());
}

}  // namespace

TEST_SUITE_BEGIN("generator");

TEST_CASE("default probabilities force the depth bound analytically") {
  GenConfig cfg;
  // Depth-4 operators see a negative child probability, so no operator
  // sits deeper than 4 edges and no leaf deeper than 5 ...
  CHECK(cfg.initial_child_prob - 5 * cfg.level_decrement < 0);
  CHECK(cfg.initial_child_prob - 4 * cfg.level_decrement < 0);
  // ... while depth-3 operators still spawn children, so depth 5 is hit.
  CHECK(cfg.initial_child_prob - 3 * cfg.level_decrement > 0);
}

TEST_CASE("default op weights double the binary operators") {
  std::vector<Op> w = GenConfig::default_op_weights();
  REQUIRE(w.size() == 26);
  auto count = [&](Op op) {
    int n = 0;
    for (Op x : w) n += x == op ? 1 : 0;
    return n;
  };
  for (Op op : all_ops()) {
    CHECK(count(op) == (op_info(op).arity == 2 ? 2 : 1));
  }
}

TEST_CASE("zero child probability forces single-operator programs") {
  GenConfig cfg;
  cfg.initial_child_prob = 0.0;
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    Expr e = gen_src(cfg, rng);
    CHECK(!e.is_terminal());
    CHECK(e.depth_edges() == 1);
    CHECK(e.node_count() <= 3);
  }
}

TEST_CASE("generated programs are well typed and depth bounded") {
  GenConfig cfg;
  Rng rng(2);
  int max_depth = 0;
  for (int i = 0; i < 3000; ++i) {
    Expr e = gen_src(cfg, rng);
    check_well_typed(e);
    max_depth = std::max(max_depth, e.depth_edges());
  }
  CHECK(max_depth == 5);
}

TEST_CASE("gen_tgt with apply_prob 0 returns the program unchanged") {
  GenConfig cfg;
  cfg.apply_prob = 0.0;
  Rng rng(3);
  Expr a = parse(kProgA);
  auto [b, seq] = gen_tgt(cfg, a, rng);
  CHECK(b == a);
  CHECK(seq.empty());
}

TEST_CASE("gen_tgt with apply_prob 1 eliminates the zero vector") {
  GenConfig cfg;
  cfg.apply_prob = 1.0;
  Rng rng(4);
  auto [b, seq] = gen_tgt(cfg, parse("( v -v o )"), rng);
  CHECK(print(b) == "v");
  REQUIRE(seq.size() == 1);
  CHECK(seq.steps[0].path.empty());
  CHECK(seq.steps[0].category == Category::Noop);
}

TEST_CASE("gen_tgt pairs always re-check") {
  GenConfig cfg;
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    Expr a = gen_src(cfg, rng);
    auto [b, seq] = gen_tgt(cfg, a, rng);
    check_well_typed(b);
    REQUIRE(check(a, seq, b).proven());
  }
}

TEST_CASE("gen_tgt can produce the listing pair") {
  GenConfig cfg;
  Expr a = parse(kProgA);
  bool reproduced = false;
  for (std::uint64_t seed = 0; seed < 2000 && !reproduced; ++seed) {
    Rng rng(derive_stream(99, seed));
    auto [b, seq] = gen_tgt(cfg, a, rng);
    if (print(b) == kProgB &&
        sequence_tokens(seq) == "DistributeRight right Commute") {
      reproduced = true;
    }
  }
  CHECK(reproduced);
}

TEST_CASE("determinism under the seed") {
  GenConfig cfg;
  auto run = [&] {
    std::vector<std::string> out;
    for (int i = 0; i < 200; ++i) {
      Rng rng(derive_stream(cfg.rng_seed, i));
      Expr a = gen_src(cfg, rng);
      auto [b, seq] = gen_tgt(cfg, a, rng);
      out.push_back(print(a) + "|" + print(b) + "|" + sequence_tokens(seq));
    }
    return out;
  };
  CHECK(run() == run());
}

TEST_CASE("gen_unequal commutes a subtraction") {
  GenConfig cfg;
  Expr a = parse("( a -s b )");
  bool swapped = false;
  for (std::uint64_t seed = 0; seed < 200 && !swapped; ++seed) {
    Rng rng(derive_stream(7, seed));
    Expr b = gen_unequal(cfg, a, rng);
    check_well_typed(b);
    CHECK(print(b) != print(a));
    if (print(b) == "( b -s a )") swapped = true;
  }
  CHECK(swapped);
}

TEST_CASE("gen_unequal mutates an operation") {
  GenConfig cfg;
  cfg.apply_prob = 0.0;  // keep the corrupted tree as-is
  Expr a = parse("( a +s b )");
  bool mutated_to_mul = false;
  for (std::uint64_t seed = 0; seed < 200 && !mutated_to_mul; ++seed) {
    Rng rng(derive_stream(8, seed));
    Expr b = gen_unequal(cfg, a, rng);
    // Commuting + is legal, so every candidate here is an op mutation.
    CHECK(b.op() != Op::AddS);
    if (print(b) == "( a *s b )") mutated_to_mul = true;
  }
  CHECK(mutated_to_mul);
}

TEST_CASE("degenerate inputs are rejected") {
  GenConfig cfg;
  Rng rng(9);
  CHECK_THROWS_AS(gen_unequal(cfg, parse("a"), rng), DegenerateInput);
  // aA == Aa and no operator of the same signature exists, so a lone
  // matrix-scalar product admits no illegal edit.
  CHECK_THROWS_AS(gen_unequal(cfg, parse("( A *m a )"), rng), DegenerateInput);
}

TEST_CASE("the oracle distinguishes nearly every corrupted pair") {
  GenConfig cfg;
  int distinguishable = 0;
  int total = 0;
  std::uint64_t seed = 0;
  while (total < 1000) {
    Rng rng(derive_stream(10, seed++));
    Expr a = gen_src(cfg, rng);
    // Sources that cannot be evaluated at all (e.g. they divide by a
    // structural zero) say nothing about the corruption step.
    if (semantically_equal(a, a, 5, seed).agree_count == 0) continue;
    Expr b;
    try {
      b = gen_unequal(cfg, a, rng);
    } catch (const DegenerateInput&) {
      continue;
    }
    ++total;
    EquivalenceEvidence ev = semantically_equal(a, b, 30, seed);
    if (ev.disagree_count > 0) ++distinguishable;
  }
  CHECK(distinguishable >= 990);
}

TEST_SUITE_END();
