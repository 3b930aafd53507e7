#ifndef EQRW_TEST_UTIL_HPP
#define EQRW_TEST_UTIL_HPP

#include <utility>
#include <vector>

#include "eqrw/axioms.hpp"
#include "eqrw/lang.hpp"

namespace eqrw::testutil {

// Canonical instance of a rule: every metavariable bound to the plain
// terminal spelled with the same letter, exactly as the tables print it.
inline std::vector<Binding> canonical_bindings(const AxiomRule& rule) {
  std::vector<Binding> bindings;
  auto add = [&](const Schema& s, auto&& self) -> void {
    if (s.kind == Schema::Kind::Meta) {
      for (const Binding& b : bindings) {
        if (b.meta == s.meta) return;
      }
      Terminal t = *terminal_from_symbol(std::string_view(&s.meta, 1));
      bindings.push_back({s.meta, Expr::terminal(t)});
      return;
    }
    for (const Schema& child : s.children) self(child, self);
  };
  add(rule.pattern, add);
  return bindings;
}

inline std::pair<Expr, Expr> canonical_instance(const AxiomRule& rule) {
  std::vector<Binding> bindings = canonical_bindings(rule);
  return {instantiate(rule.pattern, bindings),
          instantiate(rule.replacement, bindings)};
}

// All node positions of e in pre-order.
inline std::vector<Path> positions(const Expr& e) {
  std::vector<Path> out;
  Path prefix;
  auto rec = [&](const Expr& node, auto&& self) -> void {
    out.push_back(prefix);
    for (int i = 0; i < node.arity(); ++i) {
      prefix.push_back(i == 0 ? Side::Left : Side::Right);
      self(node.child(i), self);
      prefix.pop_back();
    }
  };
  rec(e, rec);
  return out;
}

}  // namespace eqrw::testutil

#endif
