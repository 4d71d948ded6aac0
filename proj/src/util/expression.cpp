#include "oeg/util/expression.hpp"

#include <cctype>
#include <vector>

namespace oeg::util {

struct Expression::Node {
  enum Kind { constant, variable, add, sub, mul, neg, pow } kind;
  long long value = 0;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (i_ != s_.size()) {
      fail("unexpected '" + std::string(1, s_[i_]) + "'");
    }
    return n;
  }

 private:
  NodePtr expr() {
    skip();
    NodePtr n;
    if (peek() == '-') {
      ++i_;
      n = make(Node::neg, term());
    } else {
      if (peek() == '+') {
        ++i_;
      }
      n = term();
    }
    for (;;) {
      skip();
      if (peek() == '+') {
        ++i_;
        n = make(Node::add, n, term());
      } else if (peek() == '-') {
        ++i_;
        n = make(Node::sub, n, term());
      } else {
        return n;
      }
    }
  }

  NodePtr term() {
    NodePtr n = factor();
    for (;;) {
      skip();
      const char c = peek();
      if (c == '*') {
        ++i_;
        n = make(Node::mul, n, factor());
      } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
        n = make(Node::mul, n, factor());
      } else {
        return n;
      }
    }
  }

  NodePtr factor() {
    NodePtr base = primary();
    skip();
    if (peek() != '^') {
      return base;
    }
    ++i_;
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a non-negative integer exponent");
    }
    auto e = std::make_shared<Node>();
    e->kind = Node::constant;
    e->value = number();
    return make(Node::pow, base, e);
  }

  NodePtr primary() {
    skip();
    const char c = peek();
    if (c == '(') {
      ++i_;
      NodePtr n = expr();
      skip();
      if (peek() != ')') {
        fail("expected ')'");
      }
      ++i_;
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<Node>();
      n->kind = Node::constant;
      n->value = number();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<Node>();
      n->kind = Node::variable;
      n->name = std::string(1, c);
      ++i_;
      while (peek() == '\'') {
        n->name += '\'';
        ++i_;
      }
      return n;
    }
    fail(i_ == s_.size() ? "unexpected end of expression" : "unexpected '" + std::string(1, c) + "'");
  }

  long long number() {
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, peek() - '0', &v)) {
        fail("integer literal too large");
      }
      ++i_;
    }
    return v;
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      ++i_;
    }
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError("expression '" + std::string(s_) + "' at " + std::to_string(i_ + 1) + ": " + what);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

long long eval(const Node& n, const Bindings& vars) {
  auto overflow = [] { throw ExpressionError("integer overflow in expression"); };
  long long a = 0;
  long long b = 0;
  long long r = 0;
  switch (n.kind) {
    case Node::constant:
      return n.value;
    case Node::variable: {
      auto it = vars.find(n.name);
      if (it == vars.end()) {
        throw ExpressionError("unbound variable '" + n.name + "'");
      }
      return it->second;
    }
    case Node::neg:
      if (__builtin_sub_overflow(0LL, eval(*n.lhs, vars), &r)) overflow();
      return r;
    case Node::add:
      a = eval(*n.lhs, vars);
      b = eval(*n.rhs, vars);
      if (__builtin_add_overflow(a, b, &r)) overflow();
      return r;
    case Node::sub:
      a = eval(*n.lhs, vars);
      b = eval(*n.rhs, vars);
      if (__builtin_sub_overflow(a, b, &r)) overflow();
      return r;
    case Node::mul:
      a = eval(*n.lhs, vars);
      b = eval(*n.rhs, vars);
      if (__builtin_mul_overflow(a, b, &r)) overflow();
      return r;
    case Node::pow:
      a = eval(*n.lhs, vars);
      r = 1;
      for (long long k = 0; k < n.rhs->value; ++k) {
        if (__builtin_mul_overflow(r, a, &r)) overflow();
      }
      return r;
  }
  return 0;
}

void collect(const Node& n, std::set<std::string>& out) {
  if (n.kind == Node::variable) {
    out.insert(n.name);
  }
  if (n.lhs) {
    collect(*n.lhs, out);
  }
  if (n.rhs && n.kind != Node::pow) {
    collect(*n.rhs, out);
  }
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.root_ = Parser(text).parse();
  e.text_ = std::string(text);
  return e;
}

long long Expression::evaluate(const Bindings& vars) const {
  if (!root_) {
    throw ExpressionError("empty expression");
  }
  return eval(*root_, vars);
}

std::set<std::string> Expression::variables() const {
  std::set<std::string> out;
  if (root_) {
    collect(*root_, out);
  }
  return out;
}

}  // namespace oeg::util
