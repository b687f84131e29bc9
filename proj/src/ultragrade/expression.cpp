#include "ultragrade/expression.hpp"

#include <cctype>
#include <optional>

#include "ultragrade/error.hpp"

namespace ultragrade {

namespace {

class ExprParser {
 public:
  ExprParser(const Presentation& p, std::string_view text) : p_(p), s_(text) {}

  AlgebraElement parse() {
    AlgebraElement x = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return x;
  }

 private:
  // A factor is either a bare scalar or an element.
  struct Value {
    std::optional<Coefficient> scalar;
    AlgebraElement element;
  };

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Syntax, "expression, column " + std::to_string(i_ + 1) + ": " + msg);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(i_, tok.size()) != tok) return false;
    i_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::string_view until(char close) {
    std::size_t end = s_.find(close, i_);
    if (end == std::string_view::npos) fail(std::string("missing '") + close + "'");
    std::string_view inner = s_.substr(i_, end - i_);
    i_ = end + 1;
    return inner;
  }

  Coefficient integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return Coefficient(boost::multiprecision::cpp_int(std::string(s_.substr(start, i_ - start))));
  }

  AlgebraElement to_element(Value v) {
    if (v.scalar) fail("a scalar must multiply an algebra element");
    return std::move(v.element);
  }

  Value factor() {
    skip();
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      Coefficient c = integer();
      if (accept("/")) {
        Coefficient d = integer();
        if (d == 0) fail("division by zero");
        c /= d;
      }
      return {c, {}};
    }
    if (accept("st(")) {
      auto e = parse_edge_inst(p_, until(')'));
      return {std::nullopt, AlgebraElement::s_star(p_, e)};
    }
    if (accept("s(")) {
      auto e = parse_edge_inst(p_, until(')'));
      return {std::nullopt, AlgebraElement::s(p_, e)};
    }
    if (accept("p{")) {
      auto inner = until('}');
      if (inner.find_first_not_of(" \t") == std::string_view::npos) {
        throw Error(ErrorCode::EmptyRange, "p{} denotes the empty set, which is not a generalized vertex");
      }
      return {std::nullopt, AlgebraElement::projection(p_, parse_vertex_set(p_, inner))};
    }
    if (accept("(")) {
      AlgebraElement x = expr();
      expect(")");
      return {std::nullopt, std::move(x)};
    }
    fail("expected s(...), st(...), p{...}, a number or '('");
  }

  AlgebraElement term() {
    Coefficient sign = accept("-") ? -1 : 1;
    Value acc = factor();
    while (accept("*")) {
      Value next = factor();
      if (acc.scalar && next.scalar) {
        acc.scalar = *acc.scalar * *next.scalar;
      } else if (acc.scalar) {
        acc = {std::nullopt, next.element.scaled(*acc.scalar)};
      } else if (next.scalar) {
        acc.element = acc.element.scaled(*next.scalar);
      } else {
        acc.element = acc.element * next.element;
      }
    }
    return to_element(std::move(acc)).scaled(sign);
  }

  AlgebraElement expr() {
    AlgebraElement x = term();
    for (;;) {
      if (accept("+")) {
        x += term();
      } else if (accept("-")) {
        x += term().scaled(-1);
      } else {
        return x;
      }
    }
  }

  const Presentation& p_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

AlgebraElement parse_expression(const Presentation& p, std::string_view text) {
  AlgebraElement x = ExprParser(p, text).parse();
  if (!x.presentation()) return AlgebraElement::zero(p);
  return x;
}

}  // namespace ultragrade
