#pragma once

#include <climits>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "syv/smodule.hpp"

namespace syv {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// One factor of a series body; the exponent is slope * s + base.s().
struct SeriesFactor {
  Mode base;
  int slope = 0;
  Mode at(int s) const { return base.with_s(slope * s + base.s()); }
};

constexpr int kMixed = INT_MIN;

class Expr {
 public:
  enum class Op { Zero, Scalar, Mode, Sum, Product, Bracket, Anti, Series };

  Op op() const { return op_; }
  const PolyScalar& coef() const { return coef_; }
  Mode mode() const { return mode_; }
  const std::vector<ExprPtr>& kids() const { return kids_; }
  const std::vector<SeriesFactor>& factors() const { return factors_; }
  // Parity / t-degree; kMixed if inhomogeneous (zero is homogeneous of any kind).
  int parity() const { return parity_; }
  int degree() const { return degree_; }
  bool memo() const { return memo_; }
  int series_max() const { return series_max_; }

  static ExprPtr zero();
  static ExprPtr scalar(const PolyScalar& c);
  static ExprPtr mode(Mode x, const PolyScalar& c = PolyScalar(1));
  static ExprPtr sum(std::vector<ExprPtr> terms);
  static ExprPtr product(std::vector<ExprPtr> factors, const PolyScalar& c = PolyScalar(1));
  static ExprPtr bracket(ExprPtr a, ExprPtr b);
  static ExprPtr anti(ExprPtr a, ExprPtr b);
  // Sum over s >= 0 (or 0..series_max when given) of c * f_1(s) ... f_k(s).
  // The rightmost factor must have slope +1 unless series_max is finite.
  static ExprPtr series(std::vector<SeriesFactor> factors, const PolyScalar& c = PolyScalar(1),
                        int series_max = -1);
  static ExprPtr scale(const PolyScalar& c, const ExprPtr& e);
  static ExprPtr memoize(const ExprPtr& e);

  bool is_zero() const { return op_ == Op::Zero; }
  std::string str(const Context& ctx) const;

 private:
  Op op_ = Op::Zero;
  PolyScalar coef_{1};
  Mode mode_{};
  std::vector<ExprPtr> kids_;
  std::vector<SeriesFactor> factors_;
  int parity_ = 0;
  int degree_ = 0;
  bool memo_ = false;
  int series_max_ = -1;

  friend ExprPtr clone_with(const Expr& e, const PolyScalar& c);
};

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator*(const PolyScalar& c, const ExprPtr& e);
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b);

// Evaluates expressions on a vacuum module; results of memoized nodes are
// cached per basis monomial.
class Evaluator {
 public:
  explicit Evaluator(VacuumModule& mod, int extra_series_terms = 0)
      : mod_(mod), extra_(extra_series_terms) {}

  ModuleVector eval(const ExprPtr& e, const ModuleVector& v);
  ModuleVector eval(const ExprPtr& e, const Monomial& m);
  VacuumModule& module() { return mod_; }
  void clear() { cache_.clear(); }
  size_t cached_entries() const;

 private:
  void eval_into(const ExprPtr& e, const Monomial& m, const PolyScalar& c, ModuleVector& out);
  void eval_vec_into(const ExprPtr& e, const ModuleVector& v, const PolyScalar& c, ModuleVector& out);
  void compute(const ExprPtr& e, const Monomial& m, ModuleVector& out);

  struct NodeCache {
    ExprPtr pin;
    std::unordered_map<Monomial, ModuleVector, MonomialHash> values;
  };
  VacuumModule& mod_;
  int extra_;
  std::unordered_map<const Expr*, NodeCache> cache_;
};

struct Counterexample {
  Monomial vector;
  ModuleVector lhs, rhs;
  std::string describe(const PbwEngine& eng) const;
};

// Compares two operators on every basis monomial; returns the first
// mismatch if any.
std::optional<Counterexample> op_equal(Evaluator& ev, const ExprPtr& a, const ExprPtr& b,
                                       const std::vector<Monomial>& basis);

// The anti-automorphism E_{ij}t^s -> (-1)^{[i>j](p(i)+p(j))} E_{ji}t^{-s}
// (positions compared in the order 1..m, -1..-n), extended with
// pi(xy) = (-1)^{p(x)p(y)} pi(y) pi(x). Only E modes are accepted.
ExprPtr omega_tilde(const ExprPtr& e, const Context& ctx);

// Replaces every mode of tag t by the sum of the same mode over tags
// f(t). Used to realize primitive coproducts and tag relabelings.
ExprPtr map_tags(const ExprPtr& e, const std::vector<std::vector<int>>& f);
// Replaces every mode x (and every series factor base) by the sum of f(x).
// Series factors keep their slopes.
ExprPtr map_modes(const ExprPtr& e, const std::function<std::vector<Mode>(Mode)>& f);

}  // namespace syv
