#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "nullforge/errors.hpp"

namespace nullforge {

namespace detail {
struct Node;
using NodePtr = std::shared_ptr<const Node>;
}  // namespace detail

/// A scalar function of one real variable, represented as an expression
/// tree over constants, the variable x, the arithmetic operators,
/// integer powers and exp/sin/cos. Values are immutable and cheap to
/// copy; derivatives are symbolic and cached, so repeated derivative()
/// calls share structure.
class ScalarFn {
 public:
  // Grammar:
  //   expr   := term (('+'|'-') term)*
  //   term   := factor (('*'|'/') factor)*
  //   factor := '-' factor | atom ('^' intlit)?
  //   atom   := number | 'x' | func '(' expr ')' | '(' expr ')'
  //   func   := 'exp' | 'sin' | 'cos'
  static ScalarFn parse(std::string_view source);

  static ScalarFn constant(double c);
  static ScalarFn variable();

  /// Exact symbolic derivative. Total: never fails.
  ScalarFn derivative() const;

  /// Evaluate at xi. Throws EvalDomainError if the result is not finite.
  double operator()(double xi) const;

  std::string to_string() const;

  bool is_constant_zero() const;

  ScalarFn pow(int exponent) const;
  static ScalarFn exp(const ScalarFn& f);
  static ScalarFn sin(const ScalarFn& f);
  static ScalarFn cos(const ScalarFn& f);

  friend ScalarFn operator+(const ScalarFn& a, const ScalarFn& b);
  friend ScalarFn operator-(const ScalarFn& a, const ScalarFn& b);
  friend ScalarFn operator*(const ScalarFn& a, const ScalarFn& b);
  friend ScalarFn operator/(const ScalarFn& a, const ScalarFn& b);
  friend ScalarFn operator-(const ScalarFn& a);
  friend ScalarFn operator+(double a, const ScalarFn& b) { return constant(a) + b; }
  friend ScalarFn operator+(const ScalarFn& a, double b) { return a + constant(b); }
  friend ScalarFn operator-(double a, const ScalarFn& b) { return constant(a) - b; }
  friend ScalarFn operator-(const ScalarFn& a, double b) { return a - constant(b); }
  friend ScalarFn operator*(double a, const ScalarFn& b) { return constant(a) * b; }
  friend ScalarFn operator*(const ScalarFn& a, double b) { return a * constant(b); }
  friend ScalarFn operator/(double a, const ScalarFn& b) { return constant(a) / b; }
  friend ScalarFn operator/(const ScalarFn& a, double b) { return a / constant(b); }

 private:
  struct State {
    detail::NodePtr root;
    mutable std::mutex mutex;
    mutable std::shared_ptr<const State> deriv;  // lazily built
  };

  explicit ScalarFn(detail::NodePtr root);
  explicit ScalarFn(std::shared_ptr<const State> state) : state_(std::move(state)) {}

  std::shared_ptr<const State> state_;
};

}  // namespace nullforge
