#include <doctest.h>

#include "parse.hpp"

using namespace ehv;
using namespace ehv::cli;

TEST_CASE("expression grammar") {
  UEElement e = parse_expression("L(2)*L(-2)");
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first.word == std::vector<Generator>{L(2), L(-2)});

  CHECK(parse_scalar("-1/2") == Scalar(Rational(-1, 2)));
  CHECK(parse_scalar("(alpha+1)^2") ==
        (Scalar::parameter(Parameter::alpha) + Scalar(1)) *
            (Scalar::parameter(Parameter::alpha) + Scalar(1)));
  CHECK(parse_scalar("2*alpha - beta") ==
        Scalar(2) * Scalar::parameter(Parameter::alpha) -
            Scalar::parameter(Parameter::beta));

  LieElement x = parse_lie_element("2/3*J(0) + C2 - G(-1)");
  LieElement expected;
  expected.add(J(0), Scalar(Rational(2, 3)));
  expected.add(C(2), Scalar(1));
  expected.add(G(-1), Scalar(-1));
  CHECK(x == expected);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_expression("L(2"), ParseError);
  CHECK_THROWS_AS(parse_expression("Q(1)"), ParseError);
  CHECK_THROWS_AS(parse_expression("1 +"), ParseError);
  CHECK_THROWS_AS(parse_scalar("L(1)"), ParseError);
  CHECK_THROWS_AS(parse_lie_element("L(1)*L(2)"), ParseError);
  CHECK_THROWS_AS(parse_bindings("gamma=1"), ParseError);
  CHECK_THROWS_AS(parse_bindings("alpha"), ParseError);
}

TEST_CASE("bindings") {
  Substitution b = parse_bindings("alpha=0,beta=-1/2,F=1");
  CHECK(b.size() == 3);
  CHECK(b.at(Parameter::alpha).is_zero());
  CHECK(b.at(Parameter::beta) == Scalar(Rational(-1, 2)));
  CHECK(b.at(Parameter::F) == Scalar(1));
  CHECK(parse_bindings("").empty());

  Substitution r = parse_bindings("ell3=2*ell2");
  CHECK(r.at(Parameter::ell3) ==
        Scalar(2) * Scalar::parameter(Parameter::ell2));
}
