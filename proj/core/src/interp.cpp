#include "eqrw/interp.hpp"

#include <cmath>
#include <limits>

namespace eqrw {

namespace {

constexpr double kConditionLimit = 1e3;
constexpr double kSingularEps = 1e-9;

double sample_entry(Rng& rng) {
  // Uniform on [-2,-0.1] u [0.1,2].
  double magnitude = 0.1 + 1.9 * rng.next_double();
  return rng.bernoulli(0.5) ? magnitude : -magnitude;
}

double condition_number(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  double smin = svd.singularValues().minCoeff();
  double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

Eigen::MatrixXd sample_matrix(Rng& rng, int dim) {
  Eigen::MatrixXd m(dim, dim);
  for (;;) {
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) m(r, c) = sample_entry(rng);
    }
    if (condition_number(m) <= kConditionLimit) return m;
  }
}

double scalar_binding(const Valuation& val, Terminal t) {
  switch (t) {
    case Terminal::Zero: return 0.0;
    case Terminal::One: return 1.0;
    default:
      return val.scalars[static_cast<int>(t) - static_cast<int>(Terminal::ScaA)];
  }
}

Eigen::MatrixXd matrix_binding(const Valuation& val, Terminal t) {
  switch (t) {
    case Terminal::MatO: return Eigen::MatrixXd::Zero(val.dim, val.dim);
    case Terminal::MatI: return Eigen::MatrixXd::Identity(val.dim, val.dim);
    default:
      return val.matrices[static_cast<int>(t) - static_cast<int>(Terminal::MatA)];
  }
}

Eigen::VectorXd vector_binding(const Valuation& val, Terminal t) {
  if (t == Terminal::VecO) return Eigen::VectorXd::Zero(val.dim);
  return val.vectors[static_cast<int>(t) - static_cast<int>(Terminal::VecV)];
}

}  // namespace

Valuation sample_valuation(Rng& rng, int dim) {
  Valuation val;
  val.dim = dim;
  for (double& s : val.scalars) s = sample_entry(rng);
  for (Eigen::MatrixXd& m : val.matrices) m = sample_matrix(rng, dim);
  for (Eigen::VectorXd& v : val.vectors) {
    v.resize(dim);
    for (int i = 0; i < dim; ++i) v(i) = sample_entry(rng);
  }
  return val;
}

namespace {

Eigen::MatrixXd invert_or_throw(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible()) throw NumericError("singular matrix");
  return lu.inverse();
}

Value eval_rec(const Expr& e, const Valuation& val) {
  if (e.is_terminal()) {
    Terminal t = e.terminal_value();
    const TerminalInfo& info = terminal_info(t);
    switch (info.type) {
      case TypeTag::Scalar:
        return scalar_binding(val, t);
      case TypeTag::Matrix:
        return matrix_binding(val, t);
      case TypeTag::Vector:
        return vector_binding(val, t);
    }
  }
  switch (e.op()) {
    case Op::AddS:
      return std::get<double>(eval_rec(e.left(), val)) +
             std::get<double>(eval_rec(e.right(), val));
    case Op::SubS:
      return std::get<double>(eval_rec(e.left(), val)) -
             std::get<double>(eval_rec(e.right(), val));
    case Op::MulS:
      return std::get<double>(eval_rec(e.left(), val)) *
             std::get<double>(eval_rec(e.right(), val));
    case Op::DivS: {
      double den = std::get<double>(eval_rec(e.right(), val));
      if (std::abs(den) < kSingularEps) throw NumericError("division by zero");
      return std::get<double>(eval_rec(e.left(), val)) / den;
    }
    case Op::RecipS: {
      double x = std::get<double>(eval_rec(e.left(), val));
      if (std::abs(x) < kSingularEps) throw NumericError("division by zero");
      return 1.0 / x;
    }
    case Op::NegS:
      return -std::get<double>(eval_rec(e.left(), val));
    case Op::AddM:
      return Eigen::MatrixXd(std::get<Eigen::MatrixXd>(eval_rec(e.left(), val)) +
                             std::get<Eigen::MatrixXd>(eval_rec(e.right(), val)));
    case Op::SubM:
      return Eigen::MatrixXd(std::get<Eigen::MatrixXd>(eval_rec(e.left(), val)) -
                             std::get<Eigen::MatrixXd>(eval_rec(e.right(), val)));
    case Op::MulM: {
      Value l = eval_rec(e.left(), val);
      Value r = eval_rec(e.right(), val);
      if (std::holds_alternative<double>(l)) {
        return Eigen::MatrixXd(std::get<double>(l) *
                               std::get<Eigen::MatrixXd>(r));
      }
      if (std::holds_alternative<double>(r)) {
        return Eigen::MatrixXd(std::get<Eigen::MatrixXd>(l) *
                               std::get<double>(r));
      }
      return Eigen::MatrixXd(std::get<Eigen::MatrixXd>(l) *
                             std::get<Eigen::MatrixXd>(r));
    }
    case Op::InvM:
      return invert_or_throw(std::get<Eigen::MatrixXd>(eval_rec(e.left(), val)));
    case Op::NegM:
      return Eigen::MatrixXd(-std::get<Eigen::MatrixXd>(eval_rec(e.left(), val)));
    case Op::TransM:
      return Eigen::MatrixXd(
          std::get<Eigen::MatrixXd>(eval_rec(e.left(), val)).transpose());
    case Op::AddV:
      return Eigen::VectorXd(std::get<Eigen::VectorXd>(eval_rec(e.left(), val)) +
                             std::get<Eigen::VectorXd>(eval_rec(e.right(), val)));
    case Op::SubV:
      return Eigen::VectorXd(std::get<Eigen::VectorXd>(eval_rec(e.left(), val)) -
                             std::get<Eigen::VectorXd>(eval_rec(e.right(), val)));
    case Op::MulV: {
      Value l = eval_rec(e.left(), val);
      Value r = eval_rec(e.right(), val);
      if (std::holds_alternative<Eigen::MatrixXd>(l)) {
        return Eigen::VectorXd(std::get<Eigen::MatrixXd>(l) *
                               std::get<Eigen::VectorXd>(r));
      }
      if (std::holds_alternative<double>(l)) {
        return Eigen::VectorXd(std::get<double>(l) *
                               std::get<Eigen::VectorXd>(r));
      }
      return Eigen::VectorXd(std::get<Eigen::VectorXd>(l) *
                             std::get<double>(r));
    }
    case Op::NegV:
      return Eigen::VectorXd(-std::get<Eigen::VectorXd>(eval_rec(e.left(), val)));
  }
  throw std::logic_error("unreachable op");
}

bool scalar_close(double x, double y, double rel, double abs_floor) {
  double diff = std::abs(x - y);
  double scale = std::max(std::abs(x), std::abs(y));
  return diff <= std::max(abs_floor, rel * scale);
}

}  // namespace

Value eval(const Expr& e, const Valuation& val) { return eval_rec(e, val); }

bool approx_equal(const Value& x, const Value& y, double rel,
                  double abs_floor) {
  if (x.index() != y.index()) return false;
  if (std::holds_alternative<double>(x)) {
    return scalar_close(std::get<double>(x), std::get<double>(y), rel,
                        abs_floor);
  }
  if (std::holds_alternative<Eigen::MatrixXd>(x)) {
    const auto& mx = std::get<Eigen::MatrixXd>(x);
    const auto& my = std::get<Eigen::MatrixXd>(y);
    if (mx.rows() != my.rows() || mx.cols() != my.cols()) return false;
    for (int r = 0; r < mx.rows(); ++r) {
      for (int c = 0; c < mx.cols(); ++c) {
        if (!scalar_close(mx(r, c), my(r, c), rel, abs_floor)) return false;
      }
    }
    return true;
  }
  const auto& vx = std::get<Eigen::VectorXd>(x);
  const auto& vy = std::get<Eigen::VectorXd>(y);
  if (vx.size() != vy.size()) return false;
  for (int i = 0; i < vx.size(); ++i) {
    if (!scalar_close(vx(i), vy(i), rel, abs_floor)) return false;
  }
  return true;
}

EquivalenceEvidence semantically_equal(const Expr& a, const Expr& b,
                                       int trials, std::uint64_t seed) {
  if (a.type() != b.type()) {
    throw TypeError("cannot compare a " + std::string(type_name(a.type())) +
                    " against a " + std::string(type_name(b.type())));
  }
  EquivalenceEvidence evidence;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Valuation val = sample_valuation(rng);
    try {
      Value va = eval(a, val);
      Value vb = eval(b, val);
      if (approx_equal(va, vb)) {
        ++evidence.agree_count;
      } else {
        ++evidence.disagree_count;
      }
    } catch (const NumericError&) {
      ++evidence.skip_count;
    }
  }
  return evidence;
}

}  // namespace eqrw
