#include "ehv/vertex.hpp"

namespace ehv {

namespace {

long monomial_degree(const QuotientModule::Mono& m) {
  long n = 0;
  for (const auto& g : m) n -= g.index;
  return n;
}

int field_weight(FieldId a) { return a == FieldId::Lfield ? 2 : 1; }

void sub_into(QuotientModule::Vec& acc, const QuotientModule::Vec& v) {
  for (const auto& [m, c] : v) QuotientModule::add(acc, m, -c);
}

}  // namespace

Generator mode_generator(FieldId a, int i) {
  switch (a) {
    case FieldId::Lfield: return L(i - 1);
    case FieldId::Jfield: return J(i);
    case FieldId::Gfield: return G(i);
  }
  throw std::logic_error("bad field");
}

QuotientModule::Vec mode_product(const QuotientModule& vac, FieldId a, int i,
                                 const QuotientModule::Vec& v) {
  return vac.act(mode_generator(a, i), v);
}

CheckReport product_table_check(int window) {
  CheckReport report;
  report.suite = "product_table";
  report.config["window"] = window;
  const QuotientModule vac = vacuum_module();
  const auto unit = QuotientModule::unit();
  const Scalar alpha = Scalar::parameter(Parameter::alpha);
  const Scalar ell1 = Scalar::parameter(Parameter::ell1);
  const Scalar ell2 = Scalar::parameter(Parameter::ell2);
  const Scalar ell3 = Scalar::parameter(Parameter::ell3);
  const Scalar F = Scalar::parameter(Parameter::F);

  auto check = [&](const std::string& name, int i, QuotientModule::Vec lhs,
                   QuotientModule::Vec rhs) {
    ++report.cases_run;
    sub_into(lhs, rhs);
    if (!lhs.empty()) {
      report.fail({{"identity", name}, {"i", i}}, "0", QuotientModule::str(lhs));
    }
  };

  for (int i = 0; i <= window; ++i) {
    const Rational im1 = i - 1;

    // (L_{-2}1)_i L_{-2}1 = (i+1) L_{i-3}1 + d_{i-3,0} ((i-1)^3-(i-1))/12 C1 1
    {
      auto lhs = mode_product(vac, FieldId::Lfield, i, vac.act(L(-2), unit));
      auto rhs = QuotientModule::scale(vac.act(L(i - 3), unit), Scalar(i + 1));
      if (i == 3) {
        for (const auto& [m, c] :
             QuotientModule::scale(unit, Scalar((im1 * im1 * im1 - im1) / 12) * ell1)) {
          QuotientModule::add(rhs, m, c);
        }
      }
      check("(L)_i L", i, std::move(lhs), std::move(rhs));
    }
    // (L_{-2}1)_i J_{-1}1 = J_{i-2}1 - d_{i-2,0} ((i-1)^2+(i-1)) C2 1
    {
      auto lhs = mode_product(vac, FieldId::Lfield, i, vac.act(J(-1), unit));
      auto rhs = vac.act(J(i - 2), unit);
      if (i == 2) {
        for (const auto& [m, c] :
             QuotientModule::scale(unit, Scalar(-(im1 * im1 + im1)) * ell2)) {
          QuotientModule::add(rhs, m, c);
        }
      }
      check("(L)_i J", i, std::move(lhs), std::move(rhs));
    }
    // (L_{-2}1)_i G_{-1}1 = -(alpha - 1 + (i-1) beta) G_{i-2}1, with beta = alpha
    {
      auto lhs = mode_product(vac, FieldId::Lfield, i, vac.act(G(-1), unit));
      Scalar coeff = -(alpha - Scalar(1) + Scalar(i - 1) * alpha);
      auto rhs = QuotientModule::scale(vac.act(G(i - 2), unit), coeff);
      check("(L)_i G", i, std::move(lhs), std::move(rhs));
    }
    // (G_{-1}1)_i G_{-1}1 = 0
    {
      auto lhs = mode_product(vac, FieldId::Gfield, i, vac.act(G(-1), unit));
      check("(G)_i G", i, std::move(lhs), {});
    }
    // (J_{-1}1)_i J_{-1}1 = i d_{i-1,0} C3 1
    {
      auto lhs = mode_product(vac, FieldId::Jfield, i, vac.act(J(-1), unit));
      QuotientModule::Vec rhs;
      if (i == 1) rhs = QuotientModule::scale(unit, Scalar(i) * ell3);
      check("(J)_i J", i, std::move(lhs), std::move(rhs));
    }
    // (J_{-1}1)_i G_{-1}1 = F G_{i-1}1
    {
      auto lhs = mode_product(vac, FieldId::Jfield, i, vac.act(G(-1), unit));
      auto rhs = QuotientModule::scale(vac.act(G(i - 1), unit), F);
      check("(J)_i G", i, std::move(lhs), std::move(rhs));
    }
  }
  return report;
}

CheckReport field_commutator_check(int window, int degree_cap) {
  CheckReport report;
  report.suite = "field_commutators";
  report.config["window"] = window;
  report.config["degree_cap"] = degree_cap;
  const QuotientModule vac = vacuum_module();
  AlgebraSpec spec;
  spec.bindings = vac.bindings();

  std::vector<QuotientModule::Vec> vectors;
  for (int n = 0; n <= degree_cap; ++n) {
    for (const auto& m : enumerate_vacuum_basis(n)) {
      vectors.push_back({{m, Scalar(1)}});
    }
  }

  const FieldId fields[] = {FieldId::Lfield, FieldId::Jfield, FieldId::Gfield};
  for (FieldId a : fields) {
    for (FieldId b : fields) {
      for (int m = -window; m <= window; ++m) {
        for (int n = -window; n <= window; ++n) {
          Generator ga = mode_generator(a, m);
          Generator gb = mode_generator(b, n);
          const LieElement br = bracket(spec, ga, gb);
          for (const auto& v : vectors) {
            ++report.cases_run;
            QuotientModule::Vec lhs = vac.act(ga, vac.act(gb, v));
            sub_into(lhs, vac.act(gb, vac.act(ga, v)));
            sub_into(lhs, vac.act_elem(br, v));
            if (!lhs.empty()) {
              report.fail({{"a", ga.str()}, {"b", gb.str()},
                           {"v", QuotientModule::str(v)}},
                          "0", QuotientModule::str(lhs));
            }
          }
        }
      }
    }
  }
  return report;
}

CheckReport l0_grading_check(int degree_cap) {
  CheckReport report;
  report.suite = "l0_grading";
  report.config["degree_cap"] = degree_cap;
  Substitution zero;
  zero[Parameter::alpha] = Scalar(0);
  zero[Parameter::beta] = Scalar(0);
  QuotientModule vac(0, 0, -1, GeneratorOrder::order_32(), std::move(zero));
  for (int n = 0; n <= degree_cap; ++n) {
    for (const auto& m : enumerate_vacuum_basis(n)) {
      ++report.cases_run;
      QuotientModule::Vec v{{m, Scalar(1)}};
      QuotientModule::Vec lhs = vac.act(L(0), v);
      sub_into(lhs, QuotientModule::scale(v, Scalar(n)));
      if (!lhs.empty()) {
        report.fail({{"v", QuotientModule::str(v)}, {"degree", n}},
                    "eigenvalue " + std::to_string(n), QuotientModule::str(lhs));
      }
    }
  }
  return report;
}

CheckReport mode_grading_check(int window, int degree_cap) {
  CheckReport report;
  report.suite = "mode_grading";
  report.config["window"] = window;
  report.config["degree_cap"] = degree_cap;
  const QuotientModule vac = vacuum_module();
  const FieldId fields[] = {FieldId::Lfield, FieldId::Jfield, FieldId::Gfield};
  for (int n = 0; n <= degree_cap; ++n) {
    for (const auto& m : enumerate_vacuum_basis(n)) {
      for (FieldId a : fields) {
        for (int i = -window; i <= window; ++i) {
          ++report.cases_run;
          auto out = mode_product(vac, a, i, {{m, Scalar(1)}});
          long expect = n + field_weight(a) - i - 1;
          for (const auto& [om, oc] : out) {
            if (monomial_degree(om) != expect) {
              report.fail({{"field", field_weight(a) == 2 ? "L" : (a == FieldId::Jfield ? "J" : "G")},
                           {"i", i}, {"v_degree", n}},
                          "degree " + std::to_string(expect),
                          "degree " + std::to_string(monomial_degree(om)));
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace ehv
