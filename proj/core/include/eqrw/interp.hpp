#ifndef EQRW_INTERP_HPP
#define EQRW_INTERP_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <variant>

#include "eqrw/lang.hpp"
#include "eqrw/rng.hpp"

namespace eqrw {

// Concrete bindings for every terminal: five scalars, five dim x dim
// matrices, five dim-vectors. 0, 1, O, I and o are fixed to their
// algebraic constants and need no storage.
struct Valuation {
  int dim = 3;
  std::array<double, 5> scalars{};           // a..e
  std::array<Eigen::MatrixXd, 5> matrices;   // A..E
  std::array<Eigen::VectorXd, 5> vectors;    // v..z
};

inline constexpr double kRelTolerance = 1e-6;
inline constexpr double kAbsFloor = 1e-9;

// Entries uniform on [-2,-0.1] u [0.1,2]; matrices are resampled until
// their condition number is at most 1e3 so im stays numerically safe.
// dim 3 is the smallest dimension where *m is generically non-commutative.
Valuation sample_valuation(Rng& rng, int dim = 3);

using Value = std::variant<double, Eigen::MatrixXd, Eigen::VectorXd>;

// Standard linear-algebra semantics; throws NumericError on a zero
// divisor or a singular matrix (reachable only when e itself constructs
// one, e.g. dividing by ( a -s a )).
Value eval(const Expr& e, const Valuation& val);

// Element-wise: |x - y| <= max(kAbsFloor, rel * max(|x|, |y|)).
bool approx_equal(const Value& x, const Value& y, double rel = kRelTolerance,
                  double abs_floor = kAbsFloor);

struct EquivalenceEvidence {
  int agree_count = 0;
  int disagree_count = 0;
  int skip_count = 0;  // trials that hit a NumericError
};

// Sample `trials` valuations and compare eval(a) against eval(b).
// Disagreement is evidence of inequality; agreement is not a proof.
// Throws TypeError when the result types differ.
EquivalenceEvidence semantically_equal(const Expr& a, const Expr& b,
                                       int trials,
                                       std::uint64_t seed = 0x5eedu);

}  // namespace eqrw

#endif
