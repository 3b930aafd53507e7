#include <doctest.h>

#include "eqrw/generator.hpp"
#include "eqrw/lang.hpp"
#include "eqrw/rng.hpp"

using namespace eqrw;

namespace {
const char* kProgA = "( d *s ( ( ( ns e ) /s a ) -s c ) )";
}

TEST_SUITE_BEGIN("lang");

TEST_CASE("token alphabet") {
  CHECK(all_ops().size() == 16);
  CHECK(all_terminals().size() == 20);
  int unary = 0;
  for (Op op : all_ops()) {
    if (op_info(op).arity == 1) ++unary;
  }
  CHECK(unary == 6);
  CHECK(terminals_of_type(TypeTag::Scalar).size() == 7);
  CHECK(terminals_of_type(TypeTag::Matrix).size() == 7);
  CHECK(terminals_of_type(TypeTag::Vector).size() == 6);
  int specials = 0;
  for (Terminal t : all_terminals()) {
    if (terminal_info(t).is_special) ++specials;
  }
  CHECK(specials == 5);
}

TEST_CASE("parse smallest binary case") {
  Expr e = parse("( a +s b )");
  REQUIRE(!e.is_terminal());
  CHECK(e.op() == Op::AddS);
  CHECK(e.left().terminal_value() == Terminal::ScaA);
  CHECK(e.right().terminal_value() == Terminal::ScaB);
  CHECK(e.type() == TypeTag::Scalar);
}

TEST_CASE("parse the listing program") {
  Expr e = parse(kProgA);
  CHECK(e.op() == Op::MulS);
  ExprMetrics m = metrics(e);
  CHECK(m.node_count == 8);
  CHECK(m.depth_edges == 4);
  CHECK(print(e) == kProgA);
}

TEST_CASE("signature violations are TypeError") {
  CHECK_THROWS_AS(parse("( a +s A )"), TypeError);
  CHECK_THROWS_AS(parse("( v *v w )"), TypeError);   // no (V,V) product
  CHECK_THROWS_AS(parse("( tm a )"), TypeError);
  CHECK_THROWS_AS(parse("( A +m v )"), TypeError);
  CHECK_THROWS_AS(Expr::binary(Op::MulM, Expr::terminal(Terminal::VecV),
                               Expr::terminal(Terminal::MatA)),
                  TypeError);
}

TEST_CASE("mixed *m and *v signatures are accepted") {
  CHECK(parse("( A *m a )").type() == TypeTag::Matrix);
  CHECK(parse("( a *m A )").type() == TypeTag::Matrix);
  CHECK(parse("( A *v v )").type() == TypeTag::Vector);
  CHECK(parse("( a *v v )").type() == TypeTag::Vector);
  CHECK(parse("( v *v a )").type() == TypeTag::Vector);
}

TEST_CASE("syntax and lex errors") {
  CHECK_THROWS_AS(parse("( a +s b"), SyntaxError);
  CHECK_THROWS_AS(parse("( a +s )"), SyntaxError);
  CHECK_THROWS_AS(parse("( a +s b ) )"), SyntaxError);
  CHECK_THROWS_AS(parse("( +s a b )"), SyntaxError);  // binary in prefix spot
  CHECK_THROWS_AS(parse("( a ns b )"), SyntaxError);  // unary in infix spot
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("( a ++ b )"), LexError);
  CHECK_THROWS_AS(parse("q"), LexError);
}

TEST_CASE("print layouts") {
  CHECK(print(parse("(  a   +s  b )")) == "( a +s b )");
  CHECK(print(Expr::unary(Op::TransM, Expr::terminal(Terminal::MatA))) ==
        "( tm A )");
  CHECK(print(Expr::terminal(Terminal::Zero)) == "0");
}

TEST_CASE("display glyphs reproduce the prose spelling") {
  CHECK(print_display(parse(kProgA)) == "( d * ( ( ( - e ) / a ) - c ) )");
  CHECK(print_display(parse("( tm ( A *m B ) )")) == "( t ( A * B ) )");
}

TEST_CASE("infer_type") {
  CHECK(infer_type(parse("a")) == TypeTag::Scalar);
  CHECK(infer_type(parse("( A *v v )")) == TypeTag::Vector);
  CHECK(infer_type(parse("( A *m a )")) == TypeTag::Matrix);
}

TEST_CASE("metrics") {
  CHECK(metrics(parse("a")).node_count == 1);
  CHECK(metrics(parse("a")).depth_edges == 0);
  CHECK(metrics(parse("( a +s b )")).node_count == 3);
  CHECK(metrics(parse("( a +s b )")).depth_edges == 1);
}

TEST_CASE("structural equality") {
  CHECK(parse("( a +s b )") == parse("( a +s b )"));
  CHECK(parse("( a +s b )") != parse("( b +s a )"));
  CHECK(parse("( ns a )") != parse("a"));
}

TEST_CASE("round trips over generated programs") {
  GenConfig cfg;
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    Expr e = gen_src(cfg, rng);
    std::string text = print(e);
    Expr back = parse(text);
    CHECK(back == e);
    CHECK(print(back) == text);

    // node_count equals the non-parenthesis token count of the print.
    int tokens = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t space = text.find(' ', pos);
      std::string_view tok(text.data() + pos,
                           (space == std::string::npos ? text.size() : space) - pos);
      if (tok != "(" && tok != ")") ++tokens;
      if (space == std::string::npos) break;
      pos = space + 1;
    }
    CHECK(tokens == e.node_count());
  }
}

TEST_SUITE_END();
