#include "eqrw/checker.hpp"

namespace eqrw {

int RewriteSequence::token_count() const {
  int n = 0;
  for (const RewriteStep& step : steps) {
    n += static_cast<int>(step.path.size()) + 1;
  }
  return n;
}

bool operator==(const RewriteStep& a, const RewriteStep& b) {
  return a.category == b.category && a.path == b.path;
}

bool operator==(const RewriteSequence& a, const RewriteSequence& b) {
  return a.steps == b.steps;
}

RewriteSequence parse_sequence(std::string_view tokens) {
  RewriteSequence seq;
  Path pending;
  std::size_t i = 0;
  while (i < tokens.size()) {
    while (i < tokens.size() && (tokens[i] == ' ' || tokens[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < tokens.size() && tokens[i] != ' ' && tokens[i] != '\t') ++i;
    if (i == start) break;
    std::string_view tok = tokens.substr(start, i - start);
    if (tok == "left") {
      pending.push_back(Side::Left);
    } else if (tok == "right") {
      pending.push_back(Side::Right);
    } else if (auto cat = category_from_name(tok)) {
      seq.steps.push_back({std::move(pending), *cat});
      pending.clear();
    } else {
      throw SyntaxError("unknown sequence token '" + std::string(tok) + "'");
    }
  }
  if (!pending.empty()) {
    throw SyntaxError("trailing selectors without a category");
  }
  return seq;
}

std::string sequence_tokens(const RewriteSequence& s) {
  std::string out;
  for (const RewriteStep& step : s.steps) {
    for (Side side : step.path) {
      if (!out.empty()) out += ' ';
      out += side == Side::Left ? "left" : "right";
    }
    if (!out.empty()) out += ' ';
    out += category_name(step.category);
  }
  return out;
}

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Proven:
      return "Proven";
    case Verdict::Kind::StepFailed:
      return "StepFailed at step " + std::to_string(v.failed_step) + ": " +
             v.reason;
    case Verdict::Kind::MismatchAfterRewrites:
      return "MismatchAfterRewrites: final program '" + v.final_program + "'";
  }
  return "?";
}

Verdict check(const Expr& a, const RewriteSequence& s, const Expr& b) {
  Expr current = a;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const RewriteStep& step = s.steps[i];
    try {
      current = apply_at(current, step.path, step.category);
    } catch (const PathError& e) {
      return {Verdict::Kind::StepFailed, static_cast<int>(i), e.what(), {}};
    } catch (const NotApplicable& e) {
      return {Verdict::Kind::StepFailed, static_cast<int>(i), e.what(), {}};
    }
  }
  // "Compared lexically": token-identical canonical prints.
  if (print(current) == print(b)) return {Verdict::Kind::Proven, -1, {}, {}};
  return {Verdict::Kind::MismatchAfterRewrites, -1, {}, print(current)};
}

}  // namespace eqrw
