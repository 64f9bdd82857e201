#include <doctest.h>

#include "ehv/vertex.hpp"

using namespace ehv;

TEST_CASE("mode dictionary and fixed products") {
  const QuotientModule vac = vacuum_module();
  const auto unit = QuotientModule::unit();

  CHECK(mode_generator(FieldId::Lfield, 0) == L(-1));
  CHECK(mode_generator(FieldId::Lfield, 3) == L(2));
  CHECK(mode_generator(FieldId::Jfield, 1) == J(1));
  CHECK(mode_generator(FieldId::Gfield, 0) == G(0));

  // (J-1 1)_1 (J-1 1) = ell3 1
  auto out = mode_product(vac, FieldId::Jfield, 1, vac.act(J(-1), unit));
  CHECK(out == QuotientModule::Vec{{{}, Scalar::parameter(Parameter::ell3)}});

  CHECK(QuotientModule::is_zero(mode_product(vac, FieldId::Gfield, 0, unit)));

  // (J-1 1)_0 (G-1 1) = F G-1 1
  auto jg = mode_product(vac, FieldId::Jfield, 0, vac.act(G(-1), unit));
  CHECK(jg == QuotientModule::Vec{{{G(-1)}, Scalar::parameter(Parameter::F)}});
}

TEST_CASE("generating-field product table") {
  CHECK(product_table_check(4).ok());
}

TEST_CASE("field commutators") {
  CHECK(field_commutator_check(2, 3).ok());
}

TEST_CASE("grading") {
  CHECK(l0_grading_check(4).ok());
  CHECK(mode_grading_check(3, 3).ok());
}
