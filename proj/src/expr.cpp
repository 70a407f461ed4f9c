#include "nullforge/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace nullforge {
namespace detail {

enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Exp, Sin, Cos };

struct Node {
  Kind kind;
  double value = 0.0;  // Const
  int exponent = 0;    // Pow
  NodePtr a, b;
};

namespace {

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr num(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = v;
  return n;
}

bool is_const(const NodePtr& n, double v) {
  return n->kind == Kind::Const && n->value == v;
}

// Smart constructors: constant folding plus the x*0 / x*1 / x+0
// eliminations. No deeper rewriting; tests compare by evaluation.
NodePtr add(NodePtr a, NodePtr b) {
  if (a->kind == Kind::Const && b->kind == Kind::Const) return num(a->value + b->value);
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  return make(Kind::Add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b) {
  if (a->kind == Kind::Const && b->kind == Kind::Const) return num(a->value - b->value);
  if (is_const(b, 0)) return a;
  if (is_const(a, 0)) return make(Kind::Neg, std::move(b));
  return make(Kind::Sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
  if (a->kind == Kind::Const && b->kind == Kind::Const) return num(a->value * b->value);
  if (is_const(a, 0) || is_const(b, 0)) return num(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  return make(Kind::Mul, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b) {
  if (is_const(a, 0)) return num(0);
  if (is_const(b, 1)) return a;
  if (a->kind == Kind::Const && b->kind == Kind::Const && b->value != 0)
    return num(a->value / b->value);
  return make(Kind::Div, std::move(a), std::move(b));
}

NodePtr neg(NodePtr a) {
  if (a->kind == Kind::Const) return num(-a->value);
  if (a->kind == Kind::Neg) return a->a;
  return make(Kind::Neg, std::move(a));
}

NodePtr pow_int(NodePtr a, int e) {
  if (e == 0) return num(1);
  if (e == 1) return a;
  if (a->kind == Kind::Const) return num(std::pow(a->value, e));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->a = std::move(a);
  n->exponent = e;
  return n;
}

double eval(const Node& n, double x) {
  switch (n.kind) {
    case Kind::Const: return n.value;
    case Kind::Var: return x;
    case Kind::Add: return eval(*n.a, x) + eval(*n.b, x);
    case Kind::Sub: return eval(*n.a, x) - eval(*n.b, x);
    case Kind::Mul: return eval(*n.a, x) * eval(*n.b, x);
    case Kind::Div: return eval(*n.a, x) / eval(*n.b, x);
    case Kind::Neg: return -eval(*n.a, x);
    case Kind::Pow: return std::pow(eval(*n.a, x), n.exponent);
    case Kind::Exp: return std::exp(eval(*n.a, x));
    case Kind::Sin: return std::sin(eval(*n.a, x));
    case Kind::Cos: return std::cos(eval(*n.a, x));
  }
  return 0;  // unreachable
}

NodePtr diff(const NodePtr& n) {
  switch (n->kind) {
    case Kind::Const: return num(0);
    case Kind::Var: return num(1);
    case Kind::Add: return add(diff(n->a), diff(n->b));
    case Kind::Sub: return sub(diff(n->a), diff(n->b));
    case Kind::Mul: return add(mul(diff(n->a), n->b), mul(n->a, diff(n->b)));
    case Kind::Div:
      return div(sub(mul(diff(n->a), n->b), mul(n->a, diff(n->b))),
                 pow_int(n->b, 2));
    case Kind::Neg: return neg(diff(n->a));
    case Kind::Pow:
      return mul(mul(num(n->exponent), pow_int(n->a, n->exponent - 1)), diff(n->a));
    case Kind::Exp: return mul(make(Kind::Exp, n->a), diff(n->a));
    case Kind::Sin: return mul(make(Kind::Cos, n->a), diff(n->a));
    case Kind::Cos: return neg(mul(make(Kind::Sin, n->a), diff(n->a)));
  }
  return num(0);  // unreachable
}

int precedence(Kind k) {
  switch (k) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
  }
}

void print(const Node& n, std::ostream& os, int parent_prec) {
  const int prec = precedence(n.kind);
  const bool paren = prec < parent_prec;
  if (paren) os << '(';
  switch (n.kind) {
    case Kind::Const: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", n.value);
      if (n.value < 0) {
        os << '(' << buf << ')';
      } else {
        os << buf;
      }
      break;
    }
    case Kind::Var: os << 'x'; break;
    case Kind::Add:
      print(*n.a, os, prec);
      os << '+';
      print(*n.b, os, prec + 1);
      break;
    case Kind::Sub:
      print(*n.a, os, prec);
      os << '-';
      print(*n.b, os, prec + 1);
      break;
    case Kind::Mul:
      print(*n.a, os, prec);
      os << '*';
      print(*n.b, os, prec + 1);
      break;
    case Kind::Div:
      print(*n.a, os, prec);
      os << '/';
      print(*n.b, os, prec + 1);
      break;
    case Kind::Neg:
      os << '-';
      print(*n.a, os, prec + 1);
      break;
    case Kind::Pow:
      print(*n.a, os, prec + 1);
      os << '^' << n.exponent;
      break;
    case Kind::Exp:
      os << "exp(";
      print(*n.a, os, 0);
      os << ')';
      break;
    case Kind::Sin:
      os << "sin(";
      print(*n.a, os, 0);
      os << ')';
      break;
    case Kind::Cos:
      os << "cos(";
      print(*n.a, os, 0);
      os << ')';
      break;
  }
  if (paren) os << ')';
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr run() {
    auto e = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError(pos_, "unexpected trailing input; expected operator or end");
    return e;
  }

 private:
  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        lhs = add(lhs, term());
      } else if (accept('-')) {
        lhs = sub(lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    auto lhs = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        lhs = mul(lhs, factor());
      } else if (accept('/')) {
        lhs = div(lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    skip_ws();
    if (accept('-')) return neg(factor());
    auto base = atom();
    skip_ws();
    if (accept('^')) return pow_int(base, int_literal());
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= src_.size())
      throw ParseError(pos_, "expected number, 'x', function, or '('");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isalpha(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == "x") return make(Kind::Var);
      Kind k;
      if (name == "exp") {
        k = Kind::Exp;
      } else if (name == "sin") {
        k = Kind::Sin;
      } else if (name == "cos") {
        k = Kind::Cos;
      } else {
        throw ParseError(start, "unknown identifier '" + name +
                                    "'; expected x, exp, sin, or cos");
      }
      expect('(');
      auto e = expr();
      expect(')');
      return make(k, std::move(e));
    }
    throw ParseError(pos_, std::string("unexpected character '") + c +
                               "'; expected number, 'x', function, or '('");
  }

  NodePtr number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' was not an exponent
      }
    }
    if (pos_ == start) throw ParseError(start, "expected number");
    return num(std::strtod(std::string(src_.substr(start, pos_ - start)).c_str(), nullptr));
  }

  int int_literal() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(src_[start]))))
      throw ParseError(start, "expected integer exponent after '^'");
    return std::atoi(std::string(src_.substr(start, pos_ - start)).c_str());
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!accept(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace
}  // namespace detail

ScalarFn::ScalarFn(detail::NodePtr root) {
  auto s = std::make_shared<State>();
  s->root = std::move(root);
  state_ = std::move(s);
}

ScalarFn ScalarFn::parse(std::string_view source) {
  return ScalarFn(detail::Parser(source).run());
}

ScalarFn ScalarFn::constant(double c) { return ScalarFn(detail::num(c)); }

ScalarFn ScalarFn::variable() {
  return ScalarFn(detail::make(detail::Kind::Var));
}

ScalarFn ScalarFn::derivative() const {
  std::scoped_lock lock(state_->mutex);
  if (!state_->deriv) {
    auto s = std::make_shared<State>();
    s->root = detail::diff(state_->root);
    state_->deriv = std::move(s);
  }
  return ScalarFn(state_->deriv);
}

double ScalarFn::operator()(double xi) const {
  double v = detail::eval(*state_->root, xi);
  if (!std::isfinite(v))
    throw EvalDomainError("expression '" + to_string() + "' is not finite at xi=" +
                          std::to_string(xi));
  return v;
}

std::string ScalarFn::to_string() const {
  std::ostringstream os;
  detail::print(*state_->root, os, 0);
  return os.str();
}

bool ScalarFn::is_constant_zero() const {
  return state_->root->kind == detail::Kind::Const && state_->root->value == 0;
}

ScalarFn ScalarFn::pow(int exponent) const {
  return ScalarFn(detail::pow_int(state_->root, exponent));
}

ScalarFn ScalarFn::exp(const ScalarFn& f) {
  return ScalarFn(detail::make(detail::Kind::Exp, f.state_->root));
}

ScalarFn ScalarFn::sin(const ScalarFn& f) {
  return ScalarFn(detail::make(detail::Kind::Sin, f.state_->root));
}

ScalarFn ScalarFn::cos(const ScalarFn& f) {
  return ScalarFn(detail::make(detail::Kind::Cos, f.state_->root));
}

ScalarFn operator+(const ScalarFn& a, const ScalarFn& b) {
  return ScalarFn(detail::add(a.state_->root, b.state_->root));
}
ScalarFn operator-(const ScalarFn& a, const ScalarFn& b) {
  return ScalarFn(detail::sub(a.state_->root, b.state_->root));
}
ScalarFn operator*(const ScalarFn& a, const ScalarFn& b) {
  return ScalarFn(detail::mul(a.state_->root, b.state_->root));
}
ScalarFn operator/(const ScalarFn& a, const ScalarFn& b) {
  return ScalarFn(detail::div(a.state_->root, b.state_->root));
}
ScalarFn operator-(const ScalarFn& a) {
  return ScalarFn(detail::neg(a.state_->root));
}

}  // namespace nullforge
