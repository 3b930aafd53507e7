#include "eqrw/generator.hpp"

#include <algorithm>
#include <cassert>

#include "eqrw/axioms.hpp"

namespace eqrw {

std::vector<Op> GenConfig::default_op_weights() {
  return {
      Op::AddS, Op::SubS, Op::MulS, Op::DivS,
      Op::AddS, Op::SubS, Op::MulS, Op::DivS,
      Op::RecipS, Op::NegS,
      Op::AddM, Op::SubM, Op::MulM,
      Op::AddM, Op::SubM, Op::MulM,
      Op::InvM, Op::NegM, Op::TransM,
      Op::AddV, Op::SubV, Op::MulV,
      Op::AddV, Op::SubV, Op::MulV,
      Op::NegV,
  };
}

namespace {

std::vector<Op> ops_producing(std::span<const Op> weights, TypeTag t) {
  std::vector<Op> out;
  for (Op op : weights) {
    if (op_info(op).result == t) out.push_back(op);
  }
  return out;
}

Expr random_terminal(TypeTag t, Rng& rng) {
  std::span<const Terminal> pool = terminals_of_type(t);
  return Expr::terminal(pool[rng.next_below(static_cast<std::uint32_t>(pool.size()))]);
}

Expr child_of_type(const GenConfig& cfg, TypeTag t, double p, Rng& rng) {
  if (rng.bernoulli(p)) {
    std::vector<Op> allowed = ops_producing(cfg.op_weights, t);
    return gen_src(cfg, allowed, p - cfg.level_decrement, rng);
  }
  return random_terminal(t, rng);
}

}  // namespace

Expr gen_src(const GenConfig& cfg, std::span<const Op> allowed, double p,
             Rng& rng) {
  if (allowed.empty()) throw std::invalid_argument("empty operator set");
  Op op = allowed[rng.next_below(static_cast<std::uint32_t>(allowed.size()))];
  const OpInfo& info = op_info(op);
  if (info.arity == 1) {
    TypeTag t = info.unary_sigs.size() == 1
                    ? info.unary_sigs[0]
                    : info.unary_sigs[rng.next_below(
                          static_cast<std::uint32_t>(info.unary_sigs.size()))];
    return Expr::unary(op, child_of_type(cfg, t, p, rng));
  }
  // *m and *v have several operand-type options; pick one at random.
  BinarySig sig = info.binary_sigs.size() == 1
                      ? info.binary_sigs[0]
                      : info.binary_sigs[rng.next_below(
                            static_cast<std::uint32_t>(info.binary_sigs.size()))];
  Expr left = child_of_type(cfg, sig.left, p, rng);
  Expr right = child_of_type(cfg, sig.right, p, rng);
  return Expr::binary(op, std::move(left), std::move(right));
}

Expr gen_src(const GenConfig& cfg, Rng& rng) {
  return gen_src(cfg, cfg.op_weights, cfg.initial_child_prob, rng);
}

namespace {

class TargetWalker {
 public:
  TargetWalker(const GenConfig& cfg, Rng& rng, RewriteSequence* seq)
      : cfg_(cfg), rng_(rng), seq_(seq) {}

  Expr walk(const Expr& e) {
    if (e.is_terminal()) return e;
    static const Path kRoot;
    for (Category cat : all_categories()) {
      std::optional<Match> m = match_at(e, kRoot, cat);
      if (!m) continue;
      if (!rng_.bernoulli(cfg_.apply_prob)) continue;
      if (seq_) seq_->steps.push_back({path_, cat});
      Expr rewritten = instantiate(m->rule->replacement, m->bindings);
      if (m->rule->replacement.kind == Schema::Kind::Node) {
        // One rewrite per node: continue below the new operator only.
        return walk_children(rewritten);
      }
      // The node collapsed into one of its subtrees (or a constant);
      // whatever now stands at this position gets processed in full.
      return walk(rewritten);
    }
    return walk_children(e);
  }

 private:
  Expr walk_children(const Expr& e) {
    if (e.is_terminal()) return e;
    if (e.arity() == 1) {
      path_.push_back(Side::Left);
      Expr c = walk(e.child(0));
      path_.pop_back();
      return Expr::unary(e.op(), std::move(c));
    }
    path_.push_back(Side::Left);
    Expr l = walk(e.child(0));
    path_.pop_back();
    path_.push_back(Side::Right);
    Expr r = walk(e.child(1));
    path_.pop_back();
    return Expr::binary(e.op(), std::move(l), std::move(r));
  }

  const GenConfig& cfg_;
  Rng& rng_;
  RewriteSequence* seq_;
  Path path_;
};

}  // namespace

std::pair<Expr, RewriteSequence> gen_tgt(const GenConfig& cfg, const Expr& a,
                                         Rng& rng) {
  RewriteSequence seq;
  TargetWalker walker(cfg, rng, &seq);
  Expr b = walker.walk(a);
  return {std::move(b), std::move(seq)};
}

namespace {

struct IllegalEdit {
  enum class Kind : std::uint8_t { SwapChildren, MutateOp };
  Path path;
  Kind kind;
  Op new_op{};  // MutateOp
};

bool is_literal(const Expr& e, Terminal t) {
  return e.is_terminal() && e.terminal_value() == t;
}

bool is_zero_element(const Expr& e) {
  return is_literal(e, Terminal::Zero) || is_literal(e, Terminal::MatO) ||
         is_literal(e, Terminal::VecO);
}

Expr zero_of(TypeTag t) {
  switch (t) {
    case TypeTag::Scalar: return Expr::terminal(Terminal::Zero);
    case TypeTag::Matrix: return Expr::terminal(Terminal::MatO);
    case TypeTag::Vector: return Expr::terminal(Terminal::VecO);
  }
  throw std::logic_error("bad type");
}

// Bottom-up constant folding over the special elements: cancels x - x,
// strips identity wrappers, propagates zero through products, undoes
// double negations. Every fold is itself an equality, so two programs
// with equal folded forms are semantically equal. Used only to screen
// illegal-edit candidates whose effect a zero or identity would swallow.
Expr fold_constants(const Expr& e) {
  if (e.is_terminal()) return e;
  if (e.arity() == 1) {
    Expr c = fold_constants(e.child(0));
    switch (e.op()) {
      case Op::NegS: case Op::NegM: case Op::NegV:
        if (is_zero_element(c)) return c;
        if (!c.is_terminal() && c.op() == e.op()) return c.child(0);
        break;
      case Op::TransM:
        if (is_literal(c, Terminal::MatO) || is_literal(c, Terminal::MatI))
          return c;
        if (!c.is_terminal() && c.op() == Op::TransM) return c.child(0);
        break;
      case Op::InvM:
        if (is_literal(c, Terminal::MatI)) return c;
        if (!c.is_terminal() && c.op() == Op::InvM) return c.child(0);
        break;
      case Op::RecipS:
        if (is_literal(c, Terminal::One)) return c;
        if (!c.is_terminal() && c.op() == Op::RecipS) return c.child(0);
        break;
      default:
        break;
    }
    return Expr::unary(e.op(), std::move(c));
  }
  Expr l = fold_constants(e.left());
  Expr r = fold_constants(e.right());
  switch (e.op()) {
    case Op::AddS: case Op::AddM: case Op::AddV:
      if (is_zero_element(l)) return r;
      if (is_zero_element(r)) return l;
      break;
    case Op::SubS: case Op::SubM: case Op::SubV:
      if (l == r) return zero_of(e.type());
      if (is_zero_element(r)) return l;
      break;
    case Op::MulS:
      if (is_zero_element(l) || is_zero_element(r))
        return Expr::terminal(Terminal::Zero);
      if (is_literal(l, Terminal::One)) return r;
      if (is_literal(r, Terminal::One)) return l;
      break;
    case Op::DivS:
      if (l == r) return Expr::terminal(Terminal::One);
      if (is_zero_element(l)) return l;
      if (is_literal(r, Terminal::One)) return l;
      break;
    case Op::MulM:
      if (is_zero_element(l) || is_zero_element(r))
        return Expr::terminal(Terminal::MatO);
      // I only cancels against a matrix operand; a * I stays a matrix.
      if (r.type() == TypeTag::Matrix &&
          (is_literal(l, Terminal::MatI) || is_literal(l, Terminal::One)))
        return r;
      if (l.type() == TypeTag::Matrix &&
          (is_literal(r, Terminal::MatI) || is_literal(r, Terminal::One)))
        return l;
      break;
    case Op::MulV:
      if (is_zero_element(l) || is_zero_element(r))
        return Expr::terminal(Terminal::VecO);
      if (is_literal(l, Terminal::MatI) || is_literal(l, Terminal::One))
        return r;
      if (is_literal(r, Terminal::One)) return l;
      break;
    default:
      break;
  }
  return Expr::binary(e.op(), std::move(l), std::move(r));
}

// True when the folded program contains a division or inversion of a
// structural zero, so every valuation would hit a NumericError.
bool certainly_errors(const Expr& folded) {
  if (folded.is_terminal()) return false;
  if (folded.op() == Op::DivS && is_zero_element(folded.right())) return true;
  if (folded.op() == Op::RecipS && is_zero_element(folded.child(0))) return true;
  if (folded.op() == Op::InvM && is_zero_element(folded.child(0))) return true;
  for (int i = 0; i < folded.arity(); ++i) {
    if (certainly_errors(folded.child(i))) return true;
  }
  return false;
}

void collect_mutations(const Expr& e, const Path& path,
                       std::vector<IllegalEdit>& out) {
  const OpInfo& info = op_info(e.op());
  for (Op candidate : all_ops()) {
    if (candidate == e.op()) continue;
    const OpInfo& cinfo = op_info(candidate);
    if (cinfo.arity != info.arity) continue;
    bool fits = false;
    if (info.arity == 1) {
      for (TypeTag t : cinfo.unary_sigs) fits = fits || t == e.child(0).type();
    } else {
      for (const BinarySig& sig : cinfo.binary_sigs) {
        fits = fits ||
               (sig.left == e.left().type() && sig.right == e.right().type());
      }
    }
    if (fits) out.push_back({path, IllegalEdit::Kind::MutateOp, candidate});
  }
}

void collect_swaps(const Expr& e, const Path& path,
                   std::vector<IllegalEdit>& out) {
  if (e.arity() != 2) return;
  // A node Commute itself rewrites is not an illegal swap.
  static const Path kRoot;
  if (match_at(e, kRoot, Category::Commute)) return;
  const OpInfo& info = op_info(e.op());
  bool swapped_fits = false;
  for (const BinarySig& sig : info.binary_sigs) {
    swapped_fits = swapped_fits ||
                   (sig.left == e.right().type() && sig.right == e.left().type());
  }
  if (!swapped_fits) return;
  // aA == Aa: swapping a mixed matrix-scalar product changes nothing.
  if (e.op() == Op::MulM && e.left().type() != e.right().type()) return;
  out.push_back({path, IllegalEdit::Kind::SwapChildren, {}});
}

void collect_edits(const Expr& e, Path& path, std::vector<IllegalEdit>& out) {
  if (e.is_terminal()) return;
  collect_swaps(e, path, out);
  collect_mutations(e, path, out);
  for (int i = 0; i < e.arity(); ++i) {
    path.push_back(i == 0 ? Side::Left : Side::Right);
    collect_edits(e.child(i), path, out);
    path.pop_back();
  }
}

Expr apply_edit(const Expr& e, const IllegalEdit& edit) {
  Expr node = navigate(e, edit.path);
  Expr mutated;
  if (edit.kind == IllegalEdit::Kind::SwapChildren) {
    mutated = Expr::binary(node.op(), node.right(), node.left());
  } else if (op_info(edit.new_op).arity == 1) {
    mutated = Expr::unary(edit.new_op, node.child(0));
  } else {
    mutated = Expr::binary(edit.new_op, node.left(), node.right());
  }
  return replace_at(e, edit.path, std::move(mutated));
}

}  // namespace

Expr gen_unequal(const GenConfig& cfg, const Expr& a, Rng& rng) {
  Expr current = a;
  const int edit_count = std::max(1, cfg.illegal_edits);
  for (int i = 0; i < edit_count; ++i) {
    std::vector<IllegalEdit> edits;
    Path path;
    collect_edits(current, path, edits);
    // Keep only edits a zero or identity element cannot swallow: the
    // folded form must actually change and must stay evaluable.
    Expr folded = fold_constants(current);
    std::vector<IllegalEdit> viable;
    for (IllegalEdit& edit : edits) {
      Expr edited_folded = fold_constants(apply_edit(current, edit));
      if (edited_folded == folded) continue;
      if (certainly_errors(edited_folded)) continue;
      viable.push_back(std::move(edit));
    }
    if (viable.empty()) {
      throw DegenerateInput("program admits no illegal edit: '" + print(a) +
                            "'");
    }
    const IllegalEdit& pick =
        viable[rng.next_below(static_cast<std::uint32_t>(viable.size()))];
    current = apply_edit(current, pick);
  }
  // Optional legal rewrites on top; the sequence is discarded because the
  // pair is already broken.
  TargetWalker walker(cfg, rng, nullptr);
  return walker.walk(current);
}

}  // namespace eqrw
