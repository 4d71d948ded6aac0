#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oeg::util {

class ExpressionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Bindings = std::map<std::string, long long, std::less<>>;

/// Integer polynomial expression. Variables are single letters with
/// optional primes (`n`, `n'`); juxtaposition multiplies, so `2m`, `md`
/// and `(1+2m)d` all parse. `^` takes a non-negative integer exponent.
class Expression {
 public:
  Expression() = default;
  static Expression parse(std::string_view text);

  /// Throws ExpressionError on an unbound variable or overflow.
  long long evaluate(const Bindings& vars) const;
  std::set<std::string> variables() const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace oeg::util
