#include "eqrw/lang.hpp"

#include <array>
#include <cassert>
#include <sstream>
#include <vector>

namespace eqrw {

namespace {

constexpr TypeTag S = TypeTag::Scalar;
constexpr TypeTag M = TypeTag::Matrix;
constexpr TypeTag V = TypeTag::Vector;

constexpr BinarySig kSigSS[] = {{S, S}};
constexpr BinarySig kSigMM[] = {{M, M}};
constexpr BinarySig kSigVV[] = {{V, V}};
constexpr BinarySig kSigMulM[] = {{M, M}, {M, S}, {S, M}};
constexpr BinarySig kSigMulV[] = {{M, V}, {S, V}, {V, S}};
constexpr TypeTag kSigS[] = {S};
constexpr TypeTag kSigM[] = {M};
constexpr TypeTag kSigV[] = {V};

constexpr std::array<OpInfo, kOpCount> kOps = {{
    {Op::AddS, "+s", 2, S, kSigSS, {}},
    {Op::SubS, "-s", 2, S, kSigSS, {}},
    {Op::MulS, "*s", 2, S, kSigSS, {}},
    {Op::DivS, "/s", 2, S, kSigSS, {}},
    {Op::RecipS, "is", 1, S, {}, kSigS},
    {Op::NegS, "ns", 1, S, {}, kSigS},
    {Op::AddM, "+m", 2, M, kSigMM, {}},
    {Op::SubM, "-m", 2, M, kSigMM, {}},
    {Op::MulM, "*m", 2, M, kSigMulM, {}},
    {Op::InvM, "im", 1, M, {}, kSigM},
    {Op::NegM, "nm", 1, M, {}, kSigM},
    {Op::TransM, "tm", 1, M, {}, kSigM},
    {Op::AddV, "+v", 2, V, kSigVV, {}},
    {Op::SubV, "-v", 2, V, kSigVV, {}},
    {Op::MulV, "*v", 2, V, kSigMulV, {}},
    {Op::NegV, "nv", 1, V, {}, kSigV},
}};

constexpr std::array<TerminalInfo, kTerminalCount> kTerminals = {{
    {Terminal::ScaA, "a", S, false},
    {Terminal::ScaB, "b", S, false},
    {Terminal::ScaC, "c", S, false},
    {Terminal::ScaD, "d", S, false},
    {Terminal::ScaE, "e", S, false},
    {Terminal::Zero, "0", S, true},
    {Terminal::One, "1", S, true},
    {Terminal::MatA, "A", M, false},
    {Terminal::MatB, "B", M, false},
    {Terminal::MatC, "C", M, false},
    {Terminal::MatD, "D", M, false},
    {Terminal::MatE, "E", M, false},
    {Terminal::MatO, "O", M, true},
    {Terminal::MatI, "I", M, true},
    {Terminal::VecV, "v", V, false},
    {Terminal::VecW, "w", V, false},
    {Terminal::VecX, "x", V, false},
    {Terminal::VecY, "y", V, false},
    {Terminal::VecZ, "z", V, false},
    {Terminal::VecO, "o", V, true},
}};

constexpr std::array<Op, kOpCount> kAllOps = {
    Op::AddS, Op::SubS, Op::MulS, Op::DivS, Op::RecipS, Op::NegS,
    Op::AddM, Op::SubM, Op::MulM, Op::InvM, Op::NegM, Op::TransM,
    Op::AddV, Op::SubV, Op::MulV, Op::NegV,
};

constexpr std::array<Terminal, kTerminalCount> kAllTerminals = {
    Terminal::ScaA, Terminal::ScaB, Terminal::ScaC, Terminal::ScaD,
    Terminal::ScaE, Terminal::Zero, Terminal::One,
    Terminal::MatA, Terminal::MatB, Terminal::MatC, Terminal::MatD,
    Terminal::MatE, Terminal::MatO, Terminal::MatI,
    Terminal::VecV, Terminal::VecW, Terminal::VecX, Terminal::VecY,
    Terminal::VecZ, Terminal::VecO,
};

}  // namespace

std::string_view type_name(TypeTag t) {
  switch (t) {
    case TypeTag::Scalar: return "Scalar";
    case TypeTag::Matrix: return "Matrix";
    case TypeTag::Vector: return "Vector";
  }
  return "?";
}

const OpInfo& op_info(Op op) { return kOps[static_cast<std::size_t>(op)]; }

std::optional<Op> op_from_symbol(std::string_view symbol) {
  for (const OpInfo& info : kOps) {
    if (info.symbol == symbol) return info.op;
  }
  return std::nullopt;
}

std::span<const Op> all_ops() { return kAllOps; }

const TerminalInfo& terminal_info(Terminal t) {
  return kTerminals[static_cast<std::size_t>(t)];
}

std::optional<Terminal> terminal_from_symbol(std::string_view symbol) {
  for (const TerminalInfo& info : kTerminals) {
    if (info.symbol == symbol) return info.terminal;
  }
  return std::nullopt;
}

std::span<const Terminal> all_terminals() { return kAllTerminals; }

std::span<const Terminal> terminals_of_type(TypeTag t) {
  switch (t) {
    case TypeTag::Scalar: return {kAllTerminals.data(), 7};
    case TypeTag::Matrix: return {kAllTerminals.data() + 7, 7};
    case TypeTag::Vector: return {kAllTerminals.data() + 14, 6};
  }
  return {};
}

struct Expr::Node {
  bool terminal;
  Terminal term{};
  Op op{};
  Expr children[2];
  TypeTag type;
  std::int32_t node_count;
  std::int32_t depth_edges;
};

Expr Expr::terminal(Terminal t) {
  auto n = std::make_shared<Node>();
  n->terminal = true;
  n->term = t;
  n->type = terminal_info(t).type;
  n->node_count = 1;
  n->depth_edges = 0;
  return Expr(std::move(n));
}

Expr Expr::unary(Op op, Expr child) {
  const OpInfo& info = op_info(op);
  if (info.arity != 1) throw TypeError(std::string(info.symbol) + " is not unary");
  if (!child.valid()) throw TypeError("unary child is empty");
  bool ok = false;
  for (TypeTag t : info.unary_sigs) ok = ok || t == child.type();
  if (!ok) {
    throw TypeError(std::string(info.symbol) + " cannot take a " +
                    std::string(type_name(child.type())) + " operand");
  }
  auto n = std::make_shared<Node>();
  n->terminal = false;
  n->op = op;
  n->type = info.result;
  n->node_count = 1 + child.node_count();
  n->depth_edges = 1 + child.depth_edges();
  n->children[0] = std::move(child);
  return Expr(std::move(n));
}

Expr Expr::binary(Op op, Expr left, Expr right) {
  const OpInfo& info = op_info(op);
  if (info.arity != 2) throw TypeError(std::string(info.symbol) + " is not binary");
  if (!left.valid() || !right.valid()) throw TypeError("binary child is empty");
  bool ok = false;
  for (const BinarySig& sig : info.binary_sigs) {
    ok = ok || (sig.left == left.type() && sig.right == right.type());
  }
  if (!ok) {
    throw TypeError(std::string(info.symbol) + " cannot take (" +
                    std::string(type_name(left.type())) + ", " +
                    std::string(type_name(right.type())) + ") operands");
  }
  auto n = std::make_shared<Node>();
  n->terminal = false;
  n->op = op;
  n->type = info.result;
  n->node_count = 1 + left.node_count() + right.node_count();
  n->depth_edges = 1 + std::max(left.depth_edges(), right.depth_edges());
  n->children[0] = std::move(left);
  n->children[1] = std::move(right);
  return Expr(std::move(n));
}

bool Expr::is_terminal() const { return node_->terminal; }

Terminal Expr::terminal_value() const {
  assert(node_->terminal);
  return node_->term;
}

Op Expr::op() const {
  assert(!node_->terminal);
  return node_->op;
}

int Expr::arity() const {
  return node_->terminal ? 0 : op_info(node_->op).arity;
}

const Expr& Expr::child(int i) const {
  assert(!node_->terminal && i < arity());
  return node_->children[i];
}

TypeTag Expr::type() const { return node_->type; }
int Expr::node_count() const { return node_->node_count; }
int Expr::depth_edges() const { return node_->depth_edges; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->terminal != b.node_->terminal) return false;
  if (a.node_->node_count != b.node_->node_count) return false;
  if (a.node_->terminal) return a.node_->term == b.node_->term;
  if (a.node_->op != b.node_->op) return false;
  for (int i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\n' || text[i] == '\r')) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\n' && text[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::span<const std::string_view> tokens) : tokens_(tokens) {}

  Expr parse_all() {
    Expr e = parse_expr();
    if (pos_ != tokens_.size()) {
      throw SyntaxError("trailing tokens after expression: '" +
                        std::string(tokens_[pos_]) + "'");
    }
    return e;
  }

 private:
  std::string_view peek() const {
    if (pos_ >= tokens_.size()) throw SyntaxError("unexpected end of input");
    return tokens_[pos_];
  }

  std::string_view next() {
    std::string_view t = peek();
    ++pos_;
    return t;
  }

  void expect(std::string_view token) {
    std::string_view t = next();
    if (t != token) {
      throw SyntaxError("expected '" + std::string(token) + "', found '" +
                        std::string(t) + "'");
    }
  }

  // expr := terminal | "(" unary-op expr ")" | "(" expr binary-op expr ")"
  Expr parse_expr() {
    std::string_view t = peek();
    if (t == "(") {
      next();
      Expr e = parse_parenthesized();
      expect(")");
      return e;
    }
    if (t == ")") throw SyntaxError("unexpected ')'");
    next();
    if (auto term = terminal_from_symbol(t)) return Expr::terminal(*term);
    if (op_from_symbol(t)) {
      throw SyntaxError("operator '" + std::string(t) +
                        "' outside parentheses");
    }
    throw LexError("unknown token '" + std::string(t) + "'");
  }

  Expr parse_parenthesized() {
    std::string_view t = peek();
    if (auto op = op_from_symbol(t)) {
      // "( op child )" — prefix layout is used for unary operators only.
      if (op_info(*op).arity != 1) {
        throw SyntaxError("binary operator '" + std::string(t) +
                          "' in prefix position");
      }
      next();
      return Expr::unary(*op, parse_expr());
    }
    Expr left = parse_expr();
    std::string_view opTok = next();
    auto op = op_from_symbol(opTok);
    if (!op) {
      if (terminal_from_symbol(opTok) || opTok == "(" || opTok == ")") {
        throw SyntaxError("expected operator, found '" + std::string(opTok) +
                          "'");
      }
      throw LexError("unknown token '" + std::string(opTok) + "'");
    }
    if (op_info(*op).arity != 2) {
      throw SyntaxError("unary operator '" + std::string(opTok) +
                        "' in infix position");
    }
    Expr right = parse_expr();
    return Expr::binary(*op, std::move(left), std::move(right));
  }

  std::span<const std::string_view> tokens_;
  std::size_t pos_ = 0;
};

void print_rec(const Expr& e, std::string& out) {
  if (e.is_terminal()) {
    out += terminal_info(e.terminal_value()).symbol;
    return;
  }
  const OpInfo& info = op_info(e.op());
  out += "( ";
  if (info.arity == 1) {
    out += info.symbol;
    out += ' ';
    print_rec(e.child(0), out);
  } else {
    print_rec(e.child(0), out);
    out += ' ';
    out += info.symbol;
    out += ' ';
    print_rec(e.child(1), out);
  }
  out += " )";
}

std::string_view display_glyph(Op op) {
  switch (op) {
    case Op::AddS: case Op::AddM: case Op::AddV: return "+";
    case Op::SubS: case Op::SubM: case Op::SubV: return "-";
    case Op::MulS: case Op::MulM: case Op::MulV: return "*";
    case Op::DivS: return "/";
    case Op::NegS: case Op::NegM: case Op::NegV: return "-";
    case Op::RecipS: case Op::InvM: return "i";
    case Op::TransM: return "t";
  }
  return "?";
}

void print_display_rec(const Expr& e, std::string& out) {
  if (e.is_terminal()) {
    out += terminal_info(e.terminal_value()).symbol;
    return;
  }
  const OpInfo& info = op_info(e.op());
  out += "( ";
  if (info.arity == 1) {
    out += display_glyph(e.op());
    out += ' ';
    print_display_rec(e.child(0), out);
  } else {
    print_display_rec(e.child(0), out);
    out += ' ';
    out += display_glyph(e.op());
    out += ' ';
    print_display_rec(e.child(1), out);
  }
  out += " )";
}

}  // namespace

Expr parse(std::string_view text) {
  std::vector<std::string_view> tokens = tokenize(text);
  if (tokens.empty()) throw SyntaxError("empty input");
  return Parser(tokens).parse_all();
}

std::string print(const Expr& e) {
  std::string out;
  out.reserve(static_cast<std::size_t>(e.node_count()) * 4);
  print_rec(e, out);
  return out;
}

std::string print_display(const Expr& e) {
  std::string out;
  print_display_rec(e, out);
  return out;
}

TypeTag infer_type(const Expr& e) { return e.type(); }

ExprMetrics metrics(const Expr& e) { return {e.node_count(), e.depth_edges()}; }

}  // namespace eqrw
