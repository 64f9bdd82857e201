#include <doctest.h>

#include "ehv/algebra.hpp"

using namespace ehv;

namespace {

const AlgebraSpec kEhv;

Scalar alpha() { return Scalar::parameter(Parameter::alpha); }
Scalar beta() { return Scalar::parameter(Parameter::beta); }
Scalar F() { return Scalar::parameter(Parameter::F); }

LieElement lin(std::initializer_list<std::pair<Generator, Scalar>> terms) {
  LieElement e;
  for (const auto& [g, c] : terms) e.add(g, c);
  return e;
}

}  // namespace

TEST_CASE("EHV bracket table rows") {
  CHECK(bracket(kEhv, L(2), L(-2)) ==
        lin({{L(0), Scalar(4)}, {C(1), Scalar(Rational(1, 2))}}));
  CHECK(bracket(kEhv, L(1), J(-1)) == lin({{J(0), Scalar(1)}, {C(2), Scalar(-2)}}));
  CHECK(bracket(kEhv, G(5), G(-3)).is_zero());
  CHECK(bracket(kEhv, L(1), G(0)) == lin({{G(1), Scalar(0) - (alpha() + beta())}}));
  CHECK(bracket(kEhv, J(3), J(-3)) == lin({{C(3), Scalar(3)}}));
  // skew-symmetry
  CHECK((bracket(kEhv, L(3), G(2)) + bracket(kEhv, G(2), L(3))).is_zero());
  // centrals bracket to zero
  CHECK(bracket(kEhv, C(1), L(5)).is_zero());
}

TEST_CASE("intermediate series action") {
  CHECK(intermediate_series_action(L(1), 0) ==
        lin({{G(1), Scalar(0) - (alpha() + beta())}}));
  CHECK(intermediate_series_action(C(1), 7).is_zero());
  CHECK(intermediate_series_action(J(0), 0) == lin({{G(0), F()}}));
}

TEST_CASE("jacobi identity and negative control") {
  CHECK(jacobi_check(kEhv, 2).ok());
  AlgebraSpec hv;
  hv.table = BracketTable::HV;
  CHECK(jacobi_check(hv, 2).ok());

  AlgebraSpec bad;
  bad.corrupt_for_tests = true;
  CHECK_FALSE(jacobi_check(bad, 2).ok());
}

TEST_CASE("the maps phi_1..phi_4 on generators") {
  CHECK(phi(1, 3, G(5)) == LieElement(G(2)));
  CHECK(phi(4, 0, J(0)) == lin({{J(0), Scalar(-1)}, {C(2), Scalar(2)}}));
  CHECK(phi(3, 0, C(2)) == lin({{C(2), F()}}));
  // phi_1 composition law: shift p then q equals shift p+q
  for (int m : {-2, 0, 5}) {
    CHECK(phi(1, 2, phi(1, 3, G(m))) == phi(1, 5, G(m)));
  }
}

TEST_CASE("homomorphism checks") {
  for (int which : {1, 2, 3, 4}) {
    CHECK(homomorphism_check(which, 1, 3).ok());
  }
  // phi_4 defect without ell3 = 2 ell2 is a nonzero multiple of (ell3 - 2 ell2)
  Scalar d = phi4_central_defect(3);
  CHECK(d.is_identically_nonzero());
  Substitution rel;
  rel[Parameter::ell3] = Scalar(2) * Scalar::parameter(Parameter::ell2);
  CHECK(d.substitute(rel).is_zero());
}

TEST_CASE("embedding rows") {
  CHECK(embedding_check(EmbedCase::N2_plus, 3).ok());
  CHECK(embedding_check(EmbedCase::N2_minus, 3).ok());
  CHECK(embedding_check(EmbedCase::BP_plus, 3, Rational(1)).ok());
  CHECK(embedding_check(EmbedCase::BP_minus, 3, Rational(5, 2)).ok());
}

TEST_CASE("subalgebra membership") {
  SubalgebraSpec ld = SubalgebraSpec::ld(2);
  CHECK(in_subalgebra(ld, G(-2)));
  CHECK_FALSE(in_subalgebra(ld, G(-3)));

  SubalgebraSpec lp = SubalgebraSpec::lplus();
  CHECK(in_subalgebra(lp, L(-1)));
  CHECK_FALSE(in_subalgebra(lp, J(-1)));

  SubalgebraSpec lklm = SubalgebraSpec::lklm(1, 2, 3);
  CHECK(in_subalgebra(lklm, J(2)));
  CHECK_FALSE(in_subalgebra(lklm, J(1)));
}

TEST_CASE("subalgebra bracket closure") {
  CHECK(subalgebra_closure_check(SubalgebraSpec::lplus(), 4).ok());
  CHECK(subalgebra_closure_check(SubalgebraSpec::lminus(), 4).ok());
  CHECK(subalgebra_closure_check(SubalgebraSpec::ld(2), 4).ok());
  CHECK(subalgebra_closure_check(SubalgebraSpec::ldbar(1, 2), 4).ok());
  CHECK(subalgebra_closure_check(SubalgebraSpec::lklm(1, 2, 3), 4).ok());
}
