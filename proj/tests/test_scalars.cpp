#include <doctest.h>

#include <random>

#include "ehv/scalar.hpp"

using namespace ehv;

namespace {

Scalar alpha() { return Scalar::parameter(Parameter::alpha); }
Scalar beta() { return Scalar::parameter(Parameter::beta); }
Scalar F() { return Scalar::parameter(Parameter::F); }

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> param(0, 8);
  std::uniform_int_distribution<int> nterms(1, 3);
  Scalar s(coeff(rng));
  for (int t = nterms(rng); t > 0; --t) {
    s = s + Scalar(coeff(rng)) * Scalar::parameter(static_cast<Parameter>(param(rng))) *
                Scalar::parameter(static_cast<Parameter>(param(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("ring arithmetic on fixed values") {
  CHECK(((alpha() + Scalar(1)) + (Scalar(0) - alpha())) == Scalar(1));

  // (m^3 - m)/12 at m = 2
  const Rational m = 2;
  CHECK(Rational((m * m * m - m) / 12) == Rational(1, 2));

  CHECK(((alpha() + beta()) * F() - F() * (alpha() + beta())).is_zero());
}

TEST_CASE("substitute") {
  Scalar rel = Scalar::parameter(Parameter::ell3) -
               Scalar(2) * Scalar::parameter(Parameter::ell2);
  Substitution b;
  b[Parameter::ell3] = Scalar(2) * Scalar::parameter(Parameter::ell2);
  CHECK(rel.substitute(b).is_zero());

  CHECK((alpha() + beta()).substitute({}) == (alpha() + beta()));

  Substitution f3;
  f3[Parameter::F] = Scalar(3);
  CHECK((F() * F()).substitute(f3) == Scalar(9));
}

TEST_CASE("zero and nonzero predicates") {
  CHECK((alpha() - alpha()).is_zero());
  CHECK((alpha() + Scalar(3) - Scalar(2) * beta()).is_identically_nonzero());
  CHECK_FALSE((Scalar(0) * F()).is_identically_nonzero());
}

TEST_CASE("ring axioms and canonicality on random samples") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Scalar(1) == a);
    CHECK((a - a).is_zero());

    Substitution s;
    s[Parameter::alpha] = random_scalar(rng);
    s[Parameter::mu] = Scalar(Rational(-7, 3));
    CHECK((a * b).substitute(s) == a.substitute(s) * b.substitute(s));
    CHECK((a + b).substitute(s) == a.substitute(s) + b.substitute(s));
  }
}

TEST_CASE("constant_value and names") {
  CHECK(*Scalar(Rational(3, 4)).constant_value() == Rational(3, 4));
  CHECK_FALSE(alpha().constant_value().has_value());
  CHECK(*parameter_from_name("ell2") == Parameter::ell2);
  CHECK_FALSE(parameter_from_name("gamma").has_value());
  CHECK(std::string(parameter_name(Parameter::lambda)) == "lambda");
}
