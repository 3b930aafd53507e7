#include "eqrw/axioms.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace eqrw {

namespace {

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "Cancel",        "Noop",           "Double",
    "Commute",       "DistributeLeft", "DistributeRight",
    "FactorLeft",    "FactorRight",    "AssociativeLeft",
    "AssociativeRight", "FlipLeft",    "FlipRight",
    "Transpose",
};

constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::Cancel,        Category::Noop,
    Category::Double,        Category::Commute,
    Category::DistributeLeft, Category::DistributeRight,
    Category::FactorLeft,    Category::FactorRight,
    Category::AssociativeLeft, Category::AssociativeRight,
    Category::FlipLeft,      Category::FlipRight,
    Category::Transpose,
};

struct RuleSpec {
  int id;
  Category cat;
  std::string_view pattern;
  std::string_view replacement;
};

// Tables order. Metavariable letters follow the printed tables; the
// special terminals 0 1 O I o are literals.
constexpr RuleSpec kRuleSpecs[] = {
    // Cancel 1-4
    {1, Category::Cancel, "( a -s a )", "0"},
    {2, Category::Cancel, "( b /s b )", "1"},
    {3, Category::Cancel, "( A -m A )", "O"},
    {4, Category::Cancel, "( v -v v )", "o"},
    // Noop 5-18
    {5, Category::Noop, "( a +s 0 )", "a"},
    {6, Category::Noop, "( 0 +s a )", "a"},
    {7, Category::Noop, "( a -s 0 )", "a"},
    {8, Category::Noop, "( a *s 1 )", "a"},
    {9, Category::Noop, "( 1 *s a )", "a"},
    {10, Category::Noop, "( a /s 1 )", "a"},
    {11, Category::Noop, "( A +m O )", "A"},
    {12, Category::Noop, "( O +m A )", "A"},
    {13, Category::Noop, "( A -m O )", "A"},
    {14, Category::Noop, "( A *m I )", "A"},
    {15, Category::Noop, "( I *m A )", "A"},
    {16, Category::Noop, "( v +v o )", "v"},
    {17, Category::Noop, "( o +v v )", "v"},
    {18, Category::Noop, "( v -v o )", "v"},
    // Double 19-24
    {19, Category::Double, "( ns ( ns a ) )", "a"},
    {20, Category::Double, "( is ( is a ) )", "a"},
    {21, Category::Double, "( nm ( nm A ) )", "A"},
    {22, Category::Double, "( im ( im A ) )", "A"},
    {23, Category::Double, "( tm ( tm A ) )", "A"},
    {24, Category::Double, "( nv ( nv v ) )", "v"},
    // Commute 25-30
    {25, Category::Commute, "( a +s b )", "( b +s a )"},
    {26, Category::Commute, "( a *s b )", "( b *s a )"},
    {27, Category::Commute, "( A +m B )", "( B +m A )"},
    {28, Category::Commute, "( v +v w )", "( w +v v )"},
    {29, Category::Commute, "( v *v a )", "( a *v v )"},
    {30, Category::Commute, "( a *v v )", "( v *v a )"},
    // DistributeLeft 31-42
    {31, Category::DistributeLeft, "( ( a +s b ) *s c )",
     "( ( a *s c ) +s ( b *s c ) )"},
    {32, Category::DistributeLeft, "( ( a -s b ) *s c )",
     "( ( a *s c ) -s ( b *s c ) )"},
    {33, Category::DistributeLeft, "( ( a +s b ) /s c )",
     "( ( a /s c ) +s ( b /s c ) )"},
    {34, Category::DistributeLeft, "( ( a -s b ) /s c )",
     "( ( a /s c ) -s ( b /s c ) )"},
    {35, Category::DistributeLeft, "( ( v +v w ) *v a )",
     "( ( v *v a ) +v ( w *v a ) )"},
    {36, Category::DistributeLeft, "( ( v -v w ) *v a )",
     "( ( v *v a ) -v ( w *v a ) )"},
    {37, Category::DistributeLeft, "( ( A +m B ) *m C )",
     "( ( A *m C ) +m ( B *m C ) )"},
    {38, Category::DistributeLeft, "( ( A -m B ) *m C )",
     "( ( A *m C ) -m ( B *m C ) )"},
    {39, Category::DistributeLeft, "( ( A +m B ) *v v )",
     "( ( A *v v ) +v ( B *v v ) )"},
    {40, Category::DistributeLeft, "( ( A -m B ) *v v )",
     "( ( A *v v ) -v ( B *v v ) )"},
    {41, Category::DistributeLeft, "( ( A +m B ) *m a )",
     "( ( A *m a ) +m ( B *m a ) )"},
    {42, Category::DistributeLeft, "( ( A -m B ) *m a )",
     "( ( A *m a ) -m ( B *m a ) )"},
    // DistributeRight 43-50
    {43, Category::DistributeRight, "( a *s ( b +s c ) )",
     "( ( a *s b ) +s ( a *s c ) )"},
    {44, Category::DistributeRight, "( a *s ( b -s c ) )",
     "( ( a *s b ) -s ( a *s c ) )"},
    {45, Category::DistributeRight, "( a *v ( v +v w ) )",
     "( ( a *v v ) +v ( a *v w ) )"},
    {46, Category::DistributeRight, "( a *v ( v -v w ) )",
     "( ( a *v v ) -v ( a *v w ) )"},
    {47, Category::DistributeRight, "( A *m ( B +m C ) )",
     "( ( A *m B ) +m ( A *m C ) )"},
    {48, Category::DistributeRight, "( A *m ( B -m C ) )",
     "( ( A *m B ) -m ( A *m C ) )"},
    {49, Category::DistributeRight, "( a *m ( B +m C ) )",
     "( ( a *m B ) +m ( a *m C ) )"},
    {50, Category::DistributeRight, "( a *m ( B -m C ) )",
     "( ( a *m B ) -m ( a *m C ) )"},
    // FactorLeft 51-60
    {51, Category::FactorLeft, "( ( a *s b ) +s ( a *s c ) )",
     "( a *s ( b +s c ) )"},
    {52, Category::FactorLeft, "( ( a *s b ) -s ( a *s c ) )",
     "( a *s ( b -s c ) )"},
    {53, Category::FactorLeft, "( ( A *m B ) +m ( A *m C ) )",
     "( A *m ( B +m C ) )"},
    {54, Category::FactorLeft, "( ( A *m B ) -m ( A *m C ) )",
     "( A *m ( B -m C ) )"},
    {55, Category::FactorLeft, "( ( A *v v ) +v ( A *v w ) )",
     "( A *v ( v +v w ) )"},
    {56, Category::FactorLeft, "( ( A *v v ) -v ( A *v w ) )",
     "( A *v ( v -v w ) )"},
    {57, Category::FactorLeft, "( ( A *m a ) +m ( A *m b ) )",
     "( A *m ( a +s b ) )"},
    {58, Category::FactorLeft, "( ( A *m a ) -m ( A *m b ) )",
     "( A *m ( a -s b ) )"},
    {59, Category::FactorLeft, "( ( v *v a ) +v ( v *v b ) )",
     "( v *v ( a +s b ) )"},
    {60, Category::FactorLeft, "( ( v *v a ) -v ( v *v b ) )",
     "( v *v ( a -s b ) )"},
    // FactorRight 61-72
    {61, Category::FactorRight, "( ( a *s c ) +s ( b *s c ) )",
     "( ( a +s b ) *s c )"},
    {62, Category::FactorRight, "( ( a *s c ) -s ( b *s c ) )",
     "( ( a -s b ) *s c )"},
    {63, Category::FactorRight, "( ( a /s c ) +s ( b /s c ) )",
     "( ( a +s b ) /s c )"},
    {64, Category::FactorRight, "( ( a /s c ) -s ( b /s c ) )",
     "( ( a -s b ) /s c )"},
    {65, Category::FactorRight, "( ( A *m C ) +m ( B *m C ) )",
     "( ( A +m B ) *m C )"},
    {66, Category::FactorRight, "( ( A *m C ) -m ( B *m C ) )",
     "( ( A -m B ) *m C )"},
    {67, Category::FactorRight, "( ( A *v v ) +v ( B *v v ) )",
     "( ( A +m B ) *v v )"},
    {68, Category::FactorRight, "( ( A *v v ) -v ( B *v v ) )",
     "( ( A -m B ) *v v )"},
    {69, Category::FactorRight, "( ( A *m a ) +m ( B *m a ) )",
     "( ( A +m B ) *m a )"},
    {70, Category::FactorRight, "( ( A *m a ) -m ( B *m a ) )",
     "( ( A -m B ) *m a )"},
    {71, Category::FactorRight, "( ( v *v a ) +v ( w *v a ) )",
     "( ( v +v w ) *v a )"},
    {72, Category::FactorRight, "( ( v *v a ) -v ( w *v a ) )",
     "( ( v -v w ) *v a )"},
    // AssociativeLeft 73-78
    {73, Category::AssociativeLeft, "( a +s ( b +s c ) )",
     "( ( a +s b ) +s c )"},
    {74, Category::AssociativeLeft, "( a *s ( b *s c ) )",
     "( ( a *s b ) *s c )"},
    {75, Category::AssociativeLeft, "( A +m ( B +m C ) )",
     "( ( A +m B ) +m C )"},
    {76, Category::AssociativeLeft, "( A *m ( B *m C ) )",
     "( ( A *m B ) *m C )"},
    {77, Category::AssociativeLeft, "( A *m ( B *m a ) )",
     "( ( A *m B ) *m a )"},
    {78, Category::AssociativeLeft, "( v +v ( w +v x ) )",
     "( ( v +v w ) +v x )"},
    // AssociativeRight 79-84
    {79, Category::AssociativeRight, "( ( a +s b ) +s c )",
     "( a +s ( b +s c ) )"},
    {80, Category::AssociativeRight, "( ( a *s b ) *s c )",
     "( a *s ( b *s c ) )"},
    {81, Category::AssociativeRight, "( ( A +m B ) +m C )",
     "( A +m ( B +m C ) )"},
    {82, Category::AssociativeRight, "( ( A *m B ) *m C )",
     "( A *m ( B *m C ) )"},
    {83, Category::AssociativeRight, "( ( A *m B ) *m a )",
     "( A *m ( B *m a ) )"},
    {84, Category::AssociativeRight, "( ( v +v w ) +v x )",
     "( v +v ( w +v x ) )"},
    // FlipLeft 85-88
    {85, Category::FlipLeft, "( ns ( a -s b ) )", "( b -s a )"},
    {86, Category::FlipLeft, "( is ( a /s b ) )", "( b /s a )"},
    {87, Category::FlipLeft, "( nm ( A -m B ) )", "( B -m A )"},
    {88, Category::FlipLeft, "( nv ( v -v w ) )", "( w -v v )"},
    // FlipRight 89-96
    {89, Category::FlipRight, "( a /s ( b /s c ) )", "( a *s ( c /s b ) )"},
    {90, Category::FlipRight, "( a /s ( is b ) )", "( a *s b )"},
    {91, Category::FlipRight, "( a -s ( b -s c ) )", "( a +s ( c -s b ) )"},
    {92, Category::FlipRight, "( a -s ( ns b ) )", "( a +s b )"},
    {93, Category::FlipRight, "( A -m ( B -m C ) )", "( A +m ( C -m B ) )"},
    {94, Category::FlipRight, "( A -m ( nm B ) )", "( A +m B )"},
    {95, Category::FlipRight, "( v -v ( w -v x ) )", "( v +v ( x -v w ) )"},
    {96, Category::FlipRight, "( v -v ( nv w ) )", "( v +v w )"},
    // Transpose 97-102
    {97, Category::Transpose, "( A *m B )", "( tm ( ( tm B ) *m ( tm A ) ) )"},
    {98, Category::Transpose, "( A +m B )", "( tm ( ( tm A ) +m ( tm B ) ) )"},
    {99, Category::Transpose, "( A -m B )", "( tm ( ( tm A ) -m ( tm B ) ) )"},
    {100, Category::Transpose, "( tm ( A *m B ) )", "( ( tm B ) *m ( tm A ) )"},
    {101, Category::Transpose, "( tm ( A +m B ) )", "( ( tm A ) +m ( tm B ) )"},
    {102, Category::Transpose, "( tm ( A -m B ) )", "( ( tm A ) -m ( tm B ) )"},
};

static_assert(std::size(kRuleSpecs) == 102);

std::vector<std::string_view> schema_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

class SchemaParser {
 public:
  explicit SchemaParser(std::span<const std::string_view> tokens)
      : tokens_(tokens) {}

  Schema parse_all() {
    Schema s = parse_node();
    if (pos_ != tokens_.size()) throw std::logic_error("bad rule text");
    return s;
  }

 private:
  std::string_view next() {
    if (pos_ >= tokens_.size()) throw std::logic_error("bad rule text");
    return tokens_[pos_++];
  }

  Schema parse_node() {
    std::string_view t = next();
    if (t == "(") {
      Schema s;
      s.kind = Schema::Kind::Node;
      std::string_view head = tokens_[pos_];
      if (auto op = op_from_symbol(head); op && op_info(*op).arity == 1) {
        ++pos_;
        s.op = *op;
        s.children.push_back(parse_node());
        check_unary_sig(s);
      } else {
        s.children.push_back(parse_node());
        auto op2 = op_from_symbol(next());
        if (!op2 || op_info(*op2).arity != 2)
          throw std::logic_error("bad rule text");
        s.op = *op2;
        s.children.push_back(parse_node());
        check_binary_sig(s);
      }
      s.type = op_info(s.op).result;
      if (next() != ")") throw std::logic_error("bad rule text");
      return s;
    }
    auto term = terminal_from_symbol(t);
    if (!term) throw std::logic_error("bad rule text");
    Schema s;
    const TerminalInfo& info = terminal_info(*term);
    if (info.is_special) {
      s.kind = Schema::Kind::Literal;
      s.literal = *term;
    } else {
      s.kind = Schema::Kind::Meta;
      s.meta = info.symbol[0];
    }
    s.type = info.type;
    return s;
  }

  void check_unary_sig(const Schema& s) {
    for (TypeTag t : op_info(s.op).unary_sigs) {
      if (t == s.children[0].type) return;
    }
    throw std::logic_error("rule text violates signature table");
  }

  void check_binary_sig(const Schema& s) {
    for (const BinarySig& sig : op_info(s.op).binary_sigs) {
      if (sig.left == s.children[0].type && sig.right == s.children[1].type)
        return;
    }
    throw std::logic_error("rule text violates signature table");
  }

  std::span<const std::string_view> tokens_;
  std::size_t pos_ = 0;
};

Schema parse_schema(std::string_view text) {
  std::vector<std::string_view> tokens = schema_tokens(text);
  return SchemaParser(tokens).parse_all();
}

void collect_meta_sites(const Schema& s, Path& prefix,
                        std::vector<std::pair<Path, char>>& out) {
  if (s.kind == Schema::Kind::Meta) {
    out.emplace_back(prefix, s.meta);
    return;
  }
  if (s.kind != Schema::Kind::Node) return;
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    prefix.push_back(i == 0 ? Side::Left : Side::Right);
    collect_meta_sites(s.children[i], prefix, out);
    prefix.pop_back();
  }
}

struct CatalogData {
  std::vector<AxiomRule> rules;
  std::array<std::pair<std::size_t, std::size_t>, kCategoryCount> spans;
};

const CatalogData& catalog_data() {
  static const CatalogData data = [] {
    CatalogData d;
    d.rules.reserve(std::size(kRuleSpecs));
    for (const RuleSpec& spec : kRuleSpecs) {
      AxiomRule rule;
      rule.id = spec.id;
      rule.category = spec.cat;
      rule.pattern = parse_schema(spec.pattern);
      rule.replacement = parse_schema(spec.replacement);
      rule.pattern_text = std::string(spec.pattern);
      rule.replacement_text = std::string(spec.replacement);
      Path prefix;
      collect_meta_sites(rule.replacement, prefix, rule.replacement_meta_sites);
      d.rules.push_back(std::move(rule));
    }
    for (int c = 0; c < kCategoryCount; ++c) {
      std::size_t begin = 0, end = 0;
      bool seen = false;
      for (std::size_t i = 0; i < d.rules.size(); ++i) {
        if (d.rules[i].category == static_cast<Category>(c)) {
          if (!seen) begin = i;
          seen = true;
          end = i + 1;
        }
      }
      d.spans[c] = {begin, end};
    }
    return d;
  }();
  return data;
}

bool match_schema(const Schema& s, const Expr& e,
                  std::vector<Binding>& bindings) {
  if (s.type != e.type()) return false;
  switch (s.kind) {
    case Schema::Kind::Meta: {
      for (const Binding& b : bindings) {
        if (b.meta == s.meta) return b.value == e;
      }
      bindings.push_back({s.meta, e});
      return true;
    }
    case Schema::Kind::Literal:
      return e.is_terminal() && e.terminal_value() == s.literal;
    case Schema::Kind::Node: {
      if (e.is_terminal() || e.op() != s.op) return false;
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        if (!match_schema(s.children[i], e.child(static_cast<int>(i)),
                          bindings))
          return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view category_name(Category c) {
  return kCategoryNames[static_cast<std::size_t>(c)];
}

std::optional<Category> category_from_name(std::string_view name) {
  for (int i = 0; i < kCategoryCount; ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

std::span<const Category> all_categories() { return kAllCategories; }

std::string path_to_string(const Path& p) {
  std::string out;
  for (Side s : p) {
    if (!out.empty()) out += ' ';
    out += s == Side::Left ? "left" : "right";
  }
  return out;
}

Expr navigate(const Expr& e, const Path& p) {
  Expr cur = e;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int idx = p[i] == Side::Left ? 0 : 1;
    if (idx >= cur.arity()) {
      throw PathError("path selector " + std::to_string(i + 1) + " (" +
                      (p[i] == Side::Left ? std::string("left") : "right") +
                      ") does not resolve in '" + print(cur) + "'");
    }
    cur = cur.child(idx);
  }
  return cur;
}

Expr replace_at(const Expr& e, const Path& p, Expr replacement) {
  if (p.empty()) return replacement;
  int idx = p.front() == Side::Left ? 0 : 1;
  if (idx >= e.arity()) {
    throw PathError("path does not resolve in '" + print(e) + "'");
  }
  Path rest(p.begin() + 1, p.end());
  Expr new_child = replace_at(e.child(idx), rest, std::move(replacement));
  if (e.arity() == 1) return Expr::unary(e.op(), std::move(new_child));
  if (idx == 0) return Expr::binary(e.op(), std::move(new_child), e.right());
  return Expr::binary(e.op(), e.left(), std::move(new_child));
}

std::span<const AxiomRule> catalog() { return catalog_data().rules; }

std::span<const AxiomRule> rules_of(Category c) {
  const CatalogData& d = catalog_data();
  auto [begin, end] = d.spans[static_cast<std::size_t>(c)];
  return {d.rules.data() + begin, end - begin};
}

const AxiomRule& rule_by_id(int id) {
  const CatalogData& d = catalog_data();
  if (id < 1 || id > static_cast<int>(d.rules.size())) {
    throw std::out_of_range("rule id out of range");
  }
  return d.rules[static_cast<std::size_t>(id - 1)];
}

std::optional<Match> match_at(const Expr& e, const Path& p, Category cat) {
  Expr sub = navigate(e, p);
  for (const AxiomRule& rule : rules_of(cat)) {
    std::vector<Binding> bindings;
    if (match_schema(rule.pattern, sub, bindings)) {
      return Match{&rule, std::move(bindings)};
    }
  }
  return std::nullopt;
}

std::vector<Match> match_all_at(const Expr& e, const Path& p, Category cat) {
  Expr sub = navigate(e, p);
  std::vector<Match> out;
  for (const AxiomRule& rule : rules_of(cat)) {
    std::vector<Binding> bindings;
    if (match_schema(rule.pattern, sub, bindings)) {
      out.push_back(Match{&rule, std::move(bindings)});
    }
  }
  return out;
}

Expr instantiate(const Schema& schema, std::span<const Binding> bindings) {
  switch (schema.kind) {
    case Schema::Kind::Meta:
      for (const Binding& b : bindings) {
        if (b.meta == schema.meta) return b.value;
      }
      throw std::logic_error("unbound metavariable in replacement");
    case Schema::Kind::Literal:
      return Expr::terminal(schema.literal);
    case Schema::Kind::Node: {
      if (schema.children.size() == 1) {
        return Expr::unary(schema.op, instantiate(schema.children[0], bindings));
      }
      return Expr::binary(schema.op,
                          instantiate(schema.children[0], bindings),
                          instantiate(schema.children[1], bindings));
    }
  }
  throw std::logic_error("bad schema");
}

Expr apply_at(const Expr& e, const Path& p, Category cat) {
  std::optional<Match> m = match_at(e, p, cat);
  if (!m) {
    throw NotApplicable(std::string(category_name(cat)) +
                        " does not apply at [" + path_to_string(p) + "] of '" +
                        print(e) + "'");
  }
  Expr replacement = instantiate(m->rule->replacement, m->bindings);
  return replace_at(e, p, std::move(replacement));
}

std::vector<Category> applicable(const Expr& e, const Path& p) {
  Expr sub = navigate(e, p);
  std::vector<Category> out;
  Path root;
  for (Category c : kAllCategories) {
    if (match_at(sub, root, c)) out.push_back(c);
  }
  return out;
}

std::string catalog_tsv() {
  std::string out = "id\tcategory\tpattern\treplacement\n";
  for (const AxiomRule& rule : catalog()) {
    out += std::to_string(rule.id);
    out += '\t';
    out += category_name(rule.category);
    out += '\t';
    out += rule.pattern_text;
    out += '\t';
    out += rule.replacement_text;
    out += '\n';
  }
  return out;
}

}  // namespace eqrw
