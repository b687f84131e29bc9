#include "doctest.h"
#include "test_support.hpp"
#include "ultragrade/error.hpp"
#include "ultragrade/expression.hpp"

using namespace ultragrade;

namespace {

ErrorCode parse_error(const Presentation& p, const std::string& text) {
  try {
    parse_expression(p, text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("expression parsing") {
  auto p = test::load("ef.ug");
  auto e = test::edge(p, "e"), f = test::edge(p, "f");
  CHECK(parse_expression(p, "s(e)") == AlgebraElement::s(p, e));
  CHECK(parse_expression(p, "st(f)") == AlgebraElement::s_star(p, f));
  CHECK(parse_expression(p, "p{u, v}") == AlgebraElement::projection(p, p.universe()));
  CHECK(parse_expression(p, "2*s(e) - s(e)") == AlgebraElement::s(p, e));
  CHECK(parse_expression(p, "-s(e)") == -AlgebraElement::s(p, e));
  CHECK(parse_expression(p, "(s(e) + s(f)) * st(f)") ==
        AlgebraElement::s(p, e) * AlgebraElement::s_star(p, f) + AlgebraElement::s(p, f) * AlgebraElement::s_star(p, f));
  CHECK(parse_expression(p, "1/2*p{u} + 1/2*p{u}") == AlgebraElement::vertex(p, test::vref(p, "u")));
  CHECK(parse_expression(p, "s(e) - s(e)").is_zero());
}

TEST_CASE("printed elements parse back") {
  auto p = test::load("ex2.ug");
  for (auto text : {"s(e)*p{v[0]}", "s(f[3])*st(f[3]) - 2/3*p{v[0], v[1], w[*]}", "st(e1)*s(e1)"}) {
    auto x = parse_expression(p, text);
    CHECK(parse_expression(p, x.to_string()) == x);
  }
}

TEST_CASE("expression errors") {
  auto p = test::load("ef.ug");
  CHECK(parse_error(p, "s(q)") == ErrorCode::DanglingReference);
  CHECK(parse_error(p, "p{}") == ErrorCode::EmptyRange);
  CHECK(parse_error(p, "3") == ErrorCode::Syntax);
  CHECK(parse_error(p, "s(e) +") == ErrorCode::Syntax);
  CHECK(parse_error(p, "s(e")  == ErrorCode::Syntax);
}
