#ifndef EQRW_AXIOMS_HPP
#define EQRW_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqrw/lang.hpp"

namespace eqrw {

// The 13 rewrite rule categories, in declaration order. The names double
// as the sequence token vocabulary, so spelling is load-bearing.
enum class Category : std::uint8_t {
  Cancel,
  Noop,
  Double,
  Commute,
  DistributeLeft,
  DistributeRight,
  FactorLeft,
  FactorRight,
  AssociativeLeft,
  AssociativeRight,
  FlipLeft,
  FlipRight,
  Transpose,
};
inline constexpr int kCategoryCount = 13;

std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);
std::span<const Category> all_categories();

// Root-to-node selector list. Unary children are addressed with Left.
enum class Side : std::uint8_t { Left, Right };
using Path = std::vector<Side>;

std::string path_to_string(const Path& p);

// Subtree at p; throws PathError when a selector exceeds a node's arity
// or descends into a terminal.
Expr navigate(const Expr& e, const Path& p);
// e with the subtree at p replaced; every node off the path is shared.
Expr replace_at(const Expr& e, const Path& p, Expr replacement);

// Pattern/template schema node. Metavariables are written with the plain
// terminal letters of the rule tables (a b c / A B C / v w x ...) and
// match any subexpression of their type; the special terminals 0 1 O I o
// match only themselves.
struct Schema {
  enum class Kind : std::uint8_t { Meta, Literal, Node };
  Kind kind;
  char meta = 0;                  // Meta: metavariable name
  Terminal literal{};             // Literal
  Op op{};                        // Node
  std::vector<Schema> children;   // Node
  TypeTag type;                   // type this schema node produces/requires
};

struct AxiomRule {
  int id;                  // 1..102
  Category category;
  Schema pattern;
  Schema replacement;
  std::string pattern_text;
  std::string replacement_text;
  // Metavariable occurrences in the replacement, pre-order. Drives the
  // post-rewrite traversal of the generator.
  std::vector<std::pair<Path, char>> replacement_meta_sites;
};

// The full directed rule set, Tables order, ids 1..102. Built once.
std::span<const AxiomRule> catalog();
std::span<const AxiomRule> rules_of(Category c);
const AxiomRule& rule_by_id(int id);

struct Binding {
  char meta;
  Expr value;
};

struct Match {
  const AxiomRule* rule;
  std::vector<Binding> bindings;
};

// Lowest-id rule of `cat` whose pattern matches the subtree at p.
// Distinct rules of one category only overlap on symmetric special-element
// nodes like ( 0 +s 0 ), where every match rewrites to the same tree, so
// (path, category) still determines the result.
std::optional<Match> match_at(const Expr& e, const Path& p, Category cat);

// Every rule of `cat` matching at p, id order. Test/diagnostic surface.
std::vector<Match> match_all_at(const Expr& e, const Path& p, Category cat);

// Instantiate a rule's replacement under the given bindings.
Expr instantiate(const Schema& schema, std::span<const Binding> bindings);

// Rewrite the subtree at p with the matching rule of `cat`. Throws
// NotApplicable when no rule of the category matches, PathError when p
// does not resolve.
Expr apply_at(const Expr& e, const Path& p, Category cat);

// Categories with a match at p, declaration order.
std::vector<Category> applicable(const Expr& e, const Path& p);

// Machine-readable catalog dump: one "id<TAB>category<TAB>pattern<TAB>
// replacement" line per rule.
std::string catalog_tsv();

}  // namespace eqrw

#endif
