#include <doctest.h>

#include "ehv/induced.hpp"

using namespace ehv;

namespace {

Scalar ell3() { return Scalar::parameter(Parameter::ell3); }
Scalar F() { return Scalar::parameter(Parameter::F); }

QuotientModule::Vec vec(QuotientModule::Mono m, Scalar c = Scalar(1)) {
  return {{std::move(m), std::move(c)}};
}

}  // namespace

TEST_CASE("vacuum action on fixed vectors") {
  const QuotientModule vac = vacuum_module();
  const auto unit = QuotientModule::unit();

  // L1 (L-2 1) = 3 L-1 1 = 0
  CHECK(QuotientModule::is_zero(vac.act(L(1), vac.act(L(-2), unit))));
  CHECK(vac.act(J(1), vac.act(J(-1), unit)) ==
        vec({}, ell3()));
  CHECK(QuotientModule::is_zero(vac.act(G(0), unit)));
  CHECK(QuotientModule::is_zero(vac.act(L(-1), unit)));
  CHECK(vac.act(C(3), unit) == vec({}, ell3()));
}

TEST_CASE("vacuum graded dimensions and basis") {
  const long expected[] = {1, 2, 6, 13, 29, 57, 113, 208, 381};
  for (int n = 0; n <= 8; ++n) {
    CHECK(graded_dimension(n) == expected[n]);
    CHECK(static_cast<long>(enumerate_vacuum_basis(n).size()) == expected[n]);
  }
  // n = 2: {L-2, J-2, J-1^2, G-2, G-1^2, G-1 J-1} . 1
  auto basis2 = enumerate_vacuum_basis(2);
  CHECK(basis2.size() == 6);
  for (const auto& m : basis2) {
    long deg = 0;
    for (const auto& g : m) deg -= g.index;
    CHECK(deg == 2);
  }
}

TEST_CASE("vacuum module axioms") {
  const QuotientModule vac = vacuum_module();
  CHECK(vac.annihilator_closure_check(4).ok());
  CHECK(vac.module_axiom_check(3, 60, 17, 4).ok());
}

TEST_CASE("universal V over L_d") {
  UniversalV V(1, 0, 2);  // (k, d, l) = (1, 0, 2)
  const auto& M = V.module();
  const auto w = QuotientModule::unit();

  CHECK(QuotientModule::is_zero(M.act(J(3), w)));           // J_{k+d+i}, i=2
  CHECK(M.act(G(1), w) == vec({G(1)}));                     // G_k injective direction
  CHECK(QuotientModule::is_zero(M.act(L(3), M.act(J(0), w))));  // [L3,J0]=0, L3 w=0

  CHECK(M.stability_check(5).ok());
  CHECK(V.injectivity_check(GenKind::G, 3, 1).ok());
  CHECK(V.injectivity_check(GenKind::L, 3, 2).ok());

  CHECK_THROWS_AS(UniversalV(2, 1, 3), std::invalid_argument);  // needs l > k+d
}

TEST_CASE("induced module over L_d") {
  UniversalV V(1, 0, 2);
  InducedD ind(V);
  const auto w = QuotientModule::unit();

  auto v = ind.make({J(-1)}, w);
  // G2 . (J-1 (x) w) = [G2, J-1] w = -F G1 w
  auto gv = ind.act(G(2), v);
  REQUIRE(gv.size() == 1);
  CHECK(gv.begin()->first.empty());
  CHECK(gv.begin()->second == vec({G(1)}, Scalar(0) - F()));

  // central action
  CHECK(ind.act(C(3), v) == ind.make({J(-1)}, vec({}, ell3())));
  // subalgebra generator on 1 (x) w
  CHECK(ind.act(J(0), ind.unit()) == ind.make({}, V.module().act(J(0), w)));

  // degrees
  CHECK(ind.degree(ind.unit()) == ExpTriple{});
  auto mixed = ind.make({L(-1)}, w);
  for (auto& [p, t] : ind.make({J(-1)}, w)) mixed.emplace(p, t);
  CHECK(ind.degree(mixed) ==
        ExpTriple{ExponentVector::unit(1), {}, {}});
  CHECK_THROWS(ind.degree(InducedD::Vec{}));
}

TEST_CASE("L_d lemma steps and full reduction") {
  UniversalV V(1, 0, 2);
  InducedD ind(V);
  const auto w = QuotientModule::unit();

  // j-block: operator G_{k+r} with r = min; here G2, degree drops to zero
  auto v = ind.make({J(-1)}, w);
  auto [op, nv] = ind.lemma_reduction_step(Row::G_row, v);
  CHECK(op == G(2));
  CHECK_FALSE(InducedD::is_zero(nv));
  CHECK(ind.degree(nv) == ExpTriple{});

  // i-block: operator J_{k+d+q}
  auto vi = ind.make({G(-1)}, w);
  auto [op2, nv2] = ind.lemma_reduction_step(Row::J_row, vi);
  CHECK(op2 == J(2));

  // hypothesis mismatch
  CHECK_THROWS_AS(ind.lemma_reduction_step(Row::G_row, vi), std::invalid_argument);

  // reduce_to_V: 1 (x) w in 0 steps; J-1 (x) w -> -F G1 w in 1 step
  std::vector<ExpTriple> t0;
  CHECK(ind.reduce_to_V(ind.unit(), 10, &t0) == w);
  CHECK(t0.size() == 1);  // just the starting degree

  std::vector<ExpTriple> t1;
  auto out = ind.reduce_to_V(ind.make({J(-1)}, w), 10, &t1);
  CHECK(out == vec({G(1)}, Scalar(0) - F()));
  CHECK(t1.size() == 2);

  // strictly decreasing degrees on a composite prefix
  std::vector<ExpTriple> t2;
  auto big = ind.make({L(-2), G(-1), J(-1)}, w);
  out = ind.reduce_to_V(big, 100, &t2);
  CHECK_FALSE(QuotientModule::is_zero(out));
  for (std::size_t i = 1; i < t2.size(); ++i) {
    CHECK(compare_principal_o(t2[i], t2[i - 1]) == Ordering::Less);
  }
}

TEST_CASE("L_dbar opaque model") {
  InducedDbar ind(1, 1, 1);  // (k, d1, d2)
  auto w0 = InducedDbar::OVec{{OpaqueSymbol{0}, Scalar(1)}};

  CHECK(ind.annihilates(G(2)));
  CHECK(ind.annihilates(J(2)));
  CHECK(ind.annihilates(L(3)));
  CHECK_FALSE(ind.annihilates(G(1)));

  // c-block (L-prefix): operator G_{k+r}, guard alpha + (k+r) - r beta
  auto v = ind.make({L(-1)}, w0);
  auto [op, nv] = ind.lemma_reduction_step(Row::G_row, v);
  CHECK(op == G(2));
  CHECK_FALSE(InducedDbar::is_zero(nv));
  CHECK(ind.degree(nv) == ExpTriple{});

  // a-block: operator L_{k+d1+p} with p = MAX index
  auto va = ind.make({G(-3), G(-2)}, w0);  // a = e1 + e2, p = 2
  CHECK(ind.lemma_operator(Row::L_row, ind.degree(va)) == L(4));

  // b-block: operator J_{d2+q}; coefficient carries ell3 (never vanishes)
  auto vb = ind.make({J(-2)}, w0);
  auto [opb, nvb] = ind.lemma_reduction_step(Row::J_row, vb);
  CHECK(opb == J(2));
  bool has_ell3 = false;
  Substitution kill;
  kill[Parameter::ell3] = Scalar(0);
  for (const auto& [p, tail] : nvb) {
    for (const auto& [sym, c] : tail) {
      if (!c.is_zero() && c.substitute(kill).is_zero()) has_ell3 = true;
    }
  }
  CHECK(has_ell3);
}

TEST_CASE("L_dbar guards trip on adversarial bindings") {
  auto w0 = InducedDbar::OVec{{OpaqueSymbol{0}, Scalar(1)}};
  {
    Substitution bad;  // alpha - (d1+p) + (k+d1+p) beta = 0 at alpha=2, beta=0
    bad[Parameter::alpha] = Scalar(2);
    bad[Parameter::beta] = Scalar(0);
    InducedDbar ind(1, 1, 1, bad);
    CHECK_THROWS_AS(ind.lemma_reduction_step(Row::L_row, ind.make({G(-2)}, w0)),
                    std::domain_error);
  }
  {
    Substitution bad;  // alpha + (k+r) - r beta = 0 at alpha=-2, beta=0
    bad[Parameter::alpha] = Scalar(-2);
    bad[Parameter::beta] = Scalar(0);
    InducedDbar ind(1, 1, 1, bad);
    CHECK_THROWS_AS(ind.lemma_reduction_step(Row::G_row, ind.make({L(-1)}, w0)),
                    std::domain_error);
  }
}

TEST_CASE("annihilation bound model") {
  std::vector<ExpTriple> descendants = {
      ExpTriple{},
      {ExponentVector::unit(1), {}, {}},
      {{}, ExponentVector::unit(1), {}},
      {{}, {}, ExponentVector::unit(2)},
      {ExponentVector::unit(1), ExponentVector::unit(1), {}},
  };
  CHECK(annihilation_bound_check(1, 1, 1, descendants, 3).ok());
  CHECK(annihilation_bound_check(2, 1, 3, descendants, 3).ok());
}
