#ifndef EQRW_LANG_HPP
#define EQRW_LANG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "eqrw/errors.hpp"

namespace eqrw {

enum class TypeTag : std::uint8_t { Scalar, Matrix, Vector };

std::string_view type_name(TypeTag t);

// The 16 operators. Mnemonics carry the result type as a suffix letter:
// +s -s *s /s is ns | +m -m *m im nm tm | +v -v *v nv
enum class Op : std::uint8_t {
  AddS, SubS, MulS, DivS, RecipS, NegS,
  AddM, SubM, MulM, InvM, NegM, TransM,
  AddV, SubV, MulV, NegV,
};
inline constexpr int kOpCount = 16;

struct BinarySig {
  TypeTag left;
  TypeTag right;
};

struct OpInfo {
  Op op;
  std::string_view symbol;
  int arity;          // 1 or 2
  TypeTag result;
  // Accepted operand types. *m takes (M,M), (M,S) or (S,M); *v takes
  // (M,V), (S,V) or (V,S); everything else has a single signature.
  std::span<const BinarySig> binary_sigs;  // arity 2
  std::span<const TypeTag> unary_sigs;     // arity 1
};

const OpInfo& op_info(Op op);
std::optional<Op> op_from_symbol(std::string_view symbol);
std::span<const Op> all_ops();

// The 20 terminals: scalars a..e 0 1, matrices A..E O I, vectors v..z o.
// 0/1/O/I/o are the special identity and zero elements.
enum class Terminal : std::uint8_t {
  ScaA, ScaB, ScaC, ScaD, ScaE, Zero, One,
  MatA, MatB, MatC, MatD, MatE, MatO, MatI,
  VecV, VecW, VecX, VecY, VecZ, VecO,
};
inline constexpr int kTerminalCount = 20;

struct TerminalInfo {
  Terminal terminal;
  std::string_view symbol;
  TypeTag type;
  bool is_special;
};

const TerminalInfo& terminal_info(Terminal t);
std::optional<Terminal> terminal_from_symbol(std::string_view symbol);
std::span<const Terminal> all_terminals();
std::span<const Terminal> terminals_of_type(TypeTag t);

// An immutable, well-typed expression tree. Copies are cheap (shared
// nodes); all operations on Expr are pure, so values can be shared
// freely across threads.
class Expr {
 public:
  Expr() = default;  // empty; only valid as a target of assignment

  static Expr terminal(Terminal t);
  // Throw TypeError when the children violate the operator signature.
  static Expr unary(Op op, Expr child);
  static Expr binary(Op op, Expr left, Expr right);

  bool valid() const { return node_ != nullptr; }
  bool is_terminal() const;
  Terminal terminal_value() const;  // pre: is_terminal()
  Op op() const;                    // pre: !is_terminal()
  int arity() const;                // 0 for terminals
  const Expr& child(int i) const;   // pre: i < arity()
  const Expr& left() const { return child(0); }
  const Expr& right() const { return child(1); }

  TypeTag type() const;
  int node_count() const;   // operators + terminals, parentheses excluded
  int depth_edges() const;  // edges from root to the deepest leaf

  // Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ExprMetrics {
  int node_count;
  int depth_edges;
};

// Fully parenthesized, space separated: "( a +s b )" and "( tm A )".
// Throws LexError / SyntaxError / TypeError.
Expr parse(std::string_view text);

// Canonical inverse of parse: parse(print(e)) == e, and print(parse(t))
// reproduces t up to whitespace normalization.
std::string print(const Expr& e);

// Display form with the untyped glyphs used in prose (+ - * / for binary,
// - for negations, i for reciprocal/inverse, t for transpose). Print-only:
// untyped glyphs are ambiguous across types and are never parsed.
std::string print_display(const Expr& e);

TypeTag infer_type(const Expr& e);
ExprMetrics metrics(const Expr& e);

}  // namespace eqrw

#endif
