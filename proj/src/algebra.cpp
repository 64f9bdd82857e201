#include "ehv/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace ehv {

namespace {

Scalar sym(Parameter p) { return Scalar::parameter(p); }

Rational virasoro_cocycle(int m) {
  // (m^3 - m) / 12
  Rational num = Rational(m) * m * m - m;
  return num / 12;
}

// [L_m, L_n], [L_m, J_n], [L_m, G_n], [J_m, J_n], [J_m, G_n], [G_m, G_n]
// for the EHV table, symbolic in alpha, beta, F.
LieElement raw_bracket_ehv(const Generator& a, const Generator& b, bool corrupt) {
  if (a.central() || b.central()) return {};
  const int m = a.index;
  const int n = b.index;
  // Reduce to kind order L < J < G via antisymmetry.
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) {
    return raw_bracket_ehv(b, a, corrupt) * Scalar(-1);
  }
  LieElement r;
  if (a.kind == GenKind::L && b.kind == GenKind::L) {
    long c = m - n;
    if (corrupt) c += 1;  // negative-control perturbation
    r.add(L(m + n), Scalar(c));
    if (m + n == 0) r.add(C(1), Scalar(virasoro_cocycle(m)));
  } else if (a.kind == GenKind::L && b.kind == GenKind::J) {
    r.add(J(m + n), Scalar(-static_cast<long>(n)));
    if (m + n == 0) {
      r.add(C(2), Scalar(-(Rational(m) * m + m)));
    }
  } else if (a.kind == GenKind::L && b.kind == GenKind::G) {
    r.add(G(m + n), -(sym(Parameter::alpha) + Scalar(n) + Scalar(m) * sym(Parameter::beta)));
  } else if (a.kind == GenKind::J && b.kind == GenKind::J) {
    if (m + n == 0) r.add(C(3), Scalar(static_cast<long>(m)));
  } else if (a.kind == GenKind::J && b.kind == GenKind::G) {
    r.add(G(m + n), sym(Parameter::F));
  }
  // [G, G] = 0
  return r;
}

LieElement raw_bracket_n2(const Generator& a, const Generator& b, int sign) {
  if (a.central() || b.central()) return {};
  const int m = a.index;
  const int n = b.index;
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) {
    return raw_bracket_n2(b, a, sign) * Scalar(-1);
  }
  LieElement r;
  if (a.kind == GenKind::L && b.kind == GenKind::L) {
    r.add(L(m + n), Scalar(static_cast<long>(m - n)));
    if (m + n == 0) r.add(C(1), Scalar(virasoro_cocycle(m)));
  } else if (a.kind == GenKind::L && b.kind == GenKind::J) {
    r.add(J(m + n), Scalar(-static_cast<long>(n)));
  } else if (a.kind == GenKind::L && b.kind == GenKind::G) {
    r.add(G(m + n), Scalar(Rational(m) / 2 - n));
  } else if (a.kind == GenKind::J && b.kind == GenKind::J) {
    if (m + n == 0) r.add(C(1), Scalar(Rational(m) / 3));
  } else if (a.kind == GenKind::J && b.kind == GenKind::G) {
    r.add(G(m + n), Scalar(static_cast<long>(sign)));
  }
  return r;
}

// Non-central rows of the BP table; the central scalars live in
// bracket_leveled since the BP center acts by numbers.
LieElement raw_bracket_bp(const Generator& a, const Generator& b, int sign) {
  if (a.central() || b.central()) return {};
  const int m = a.index;
  const int n = b.index;
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) {
    return raw_bracket_bp(b, a, sign) * Scalar(-1);
  }
  LieElement r;
  if (a.kind == GenKind::L && b.kind == GenKind::L) {
    r.add(L(m + n), Scalar(static_cast<long>(m - n)));
  } else if (a.kind == GenKind::L && b.kind == GenKind::J) {
    r.add(J(m + n), Scalar(-static_cast<long>(n)));
  } else if (a.kind == GenKind::L && b.kind == GenKind::G) {
    if (sign > 0) {
      r.add(G(m + n), Scalar(-static_cast<long>(n)));
    } else {
      r.add(G(m + n), Scalar(static_cast<long>(m - n)));
    }
  } else if (a.kind == GenKind::J && b.kind == GenKind::G) {
    r.add(G(m + n), Scalar(static_cast<long>(sign)));
  }
  return r;
}

Rational bp_central_charge(const Rational& k) {
  if (k == -3) throw std::invalid_argument("BP level k must not be -3");
  return Rational(-4) * (k + 1) * (2 * k + 3) / (k + 3);
}

}  // namespace

std::string Generator::str() const {
  switch (kind) {
    case GenKind::L: return "L(" + std::to_string(index) + ")";
    case GenKind::J: return "J(" + std::to_string(index) + ")";
    case GenKind::G: return "G(" + std::to_string(index) + ")";
    case GenKind::C1: return "C1";
    case GenKind::C2: return "C2";
    case GenKind::C3: return "C3";
  }
  return "?";
}

LieElement::LieElement(const Generator& g, const Scalar& coeff) {
  add(g, coeff);
}

void LieElement::add(const Generator& g, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement r = *this;
  r += o;
  return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
  LieElement r = *this;
  r -= o;
  return r;
}

LieElement LieElement::operator*(const Scalar& s) const {
  LieElement r;
  for (const auto& [g, c] : terms_) r.add(g, c * s);
  return r;
}

LieElement LieElement::substitute(const Substitution& bindings) const {
  LieElement r;
  for (const auto& [g, c] : terms_) r.add(g, c.substitute(bindings));
  return r;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (c == Scalar(1)) {
      out << g.str();
    } else if (c.terms().size() > 1) {
      out << "(" << c.str() << ")*" << g.str();
    } else {
      out << c.str() << "*" << g.str();
    }
  }
  return out.str();
}

LieElement bracket(const AlgebraSpec& spec, const Generator& a, const Generator& b) {
  LieElement raw;
  switch (spec.table) {
    case BracketTable::EHV:
      raw = raw_bracket_ehv(a, b, spec.corrupt_for_tests);
      break;
    case BracketTable::HV:
      if (a.kind == GenKind::G || b.kind == GenKind::G) {
        throw std::invalid_argument("generator kind G unknown to the HV table");
      }
      raw = raw_bracket_ehv(a, b, spec.corrupt_for_tests);
      break;
    case BracketTable::N2_even_rows:
      raw = raw_bracket_n2(a, b, spec.g_sign);
      break;
    case BracketTable::BP_rows:
      raw = raw_bracket_bp(a, b, spec.g_sign);
      break;
  }
  return spec.bindings.empty() ? raw : raw.substitute(spec.bindings);
}

LieElement bracket(const AlgebraSpec& spec, const LieElement& a, const LieElement& b) {
  LieElement r;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      r += bracket(spec, ga, gb) * (ca * cb);
    }
  }
  return r;
}

LieElement intermediate_series_action(const Generator& x, int n) {
  if (x.central()) return {};
  const int m = x.index;
  switch (x.kind) {
    case GenKind::L:
      return LieElement(G(m + n), -(sym(Parameter::alpha) + Scalar(n) +
                                    Scalar(m) * sym(Parameter::beta)));
    case GenKind::J:
      return LieElement(G(m + n), sym(Parameter::F));
    default:
      throw std::invalid_argument("only L, J, C act on V_{alpha,beta,F}");
  }
}

LeveledElement LeveledElement::substitute(const Substitution& bindings) const {
  LeveledElement r;
  r.central = central.substitute(bindings);
  for (const auto& [g, c] : terms) {
    Scalar s = c.substitute(bindings);
    if (!s.is_zero()) r.terms.emplace(g, s);
  }
  return r;
}

LeveledElement LeveledElement::operator-(const LeveledElement& o) const {
  LeveledElement r = *this;
  r.central -= o.central;
  for (const auto& [g, c] : o.terms) {
    auto it = r.terms.find(g);
    if (it == r.terms.end()) {
      r.terms.emplace(g, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

bool LeveledElement::is_zero() const {
  return central.is_zero() && terms.empty();
}

std::string LeveledElement::str() const {
  std::ostringstream out;
  LieElement nc;
  for (const auto& [g, c] : terms) nc.add(g, c);
  out << nc.str();
  if (!central.is_zero()) out << " + (" << central.str() << ")";
  return out.str();
}

LeveledElement fold_levels(const LieElement& e) {
  LeveledElement r;
  for (const auto& [g, c] : e.terms()) {
    if (g.kind == GenKind::C1) {
      r.central += c * sym(Parameter::ell1);
    } else if (g.kind == GenKind::C2) {
      r.central += c * sym(Parameter::ell2);
    } else if (g.kind == GenKind::C3) {
      r.central += c * sym(Parameter::ell3);
    } else {
      r.terms.emplace(g, c);
    }
  }
  return r;
}

LeveledElement bracket_leveled(const AlgebraSpec& spec, const Generator& a,
                               const Generator& b) {
  LeveledElement r = fold_levels(bracket(spec, a, b));
  if (spec.table == BracketTable::BP_rows && !a.central() && !b.central()) {
    const int m = a.index;
    const int n = b.index;
    const Rational k = spec.bp_level;
    if (m + n == 0) {
      auto pair_is = [&](GenKind x, GenKind y) {
        return (a.kind == x && b.kind == y) || (a.kind == y && b.kind == x);
      };
      int mm = (a.kind <= b.kind) ? m : n;  // index of the first-kind factor
      int flip = (a.kind <= b.kind) ? 1 : -1;
      if (pair_is(GenKind::L, GenKind::L)) {
        r.central += Scalar(virasoro_cocycle(m) * bp_central_charge(k));
      } else if (pair_is(GenKind::L, GenKind::J)) {
        Rational c2 = (2 * k + 3) / 6;
        r.central += Scalar(-(Rational(mm) * mm + mm) * c2 * flip);
      } else if (pair_is(GenKind::J, GenKind::J)) {
        Rational c3 = (2 * k + 3) / 3;
        r.central += Scalar(Rational(m) * c3);
      }
    }
  }
  return r;
}

CheckReport jacobi_check(const AlgebraSpec& spec, int window) {
  CheckReport report;
  report.suite = "jacobi";
  report.config["window"] = window;
  std::vector<Generator> gens;
  std::vector<GenKind> kinds = {GenKind::L, GenKind::J};
  if (spec.table != BracketTable::HV) kinds.push_back(GenKind::G);
  for (GenKind k : kinds) {
    for (int m = -window; m <= window; ++m) gens.push_back({k, m});
  }
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      for (const auto& c : gens) {
        ++report.cases_run;
        LieElement cycle = bracket(spec, bracket(spec, a, b), LieElement(c));
        cycle += bracket(spec, bracket(spec, b, c), LieElement(a));
        cycle += bracket(spec, bracket(spec, c, a), LieElement(b));
        if (!cycle.is_zero()) {
          report.fail({{"a", a.str()}, {"b", b.str()}, {"c", c.str()}}, "0",
                      cycle.str());
        }
      }
    }
  }
  return report;
}

LieElement phi(int which, int p, const Generator& g) {
  switch (which) {
    case 1:
      if (g.kind == GenKind::G) return LieElement(G(g.index - p));
      return LieElement(g);
    case 2:
      if (g.kind == GenKind::G) {
        return LieElement(g, sym(Parameter::alpha) + Scalar(g.index));
      }
      return LieElement(g);
    case 3:
      if (g.kind == GenKind::J) return LieElement(g, sym(Parameter::F));
      if (g.kind == GenKind::C2) return LieElement(g, sym(Parameter::F));
      if (g.kind == GenKind::C3) return LieElement(g, sym(Parameter::F).pow(2));
      return LieElement(g);
    case 4: {
      if (g.kind == GenKind::L) {
        LieElement r(g);
        r.add(J(g.index), Scalar(static_cast<long>(g.index)));
        return r;
      }
      if (g.kind == GenKind::J) {
        LieElement r(g, Scalar(-1));
        if (g.index == 0) r.add(C(2), Scalar(2));
        return r;
      }
      if (g.kind == GenKind::G) return LieElement(g, Scalar(-1));
      return LieElement(g);
    }
    default:
      throw std::invalid_argument("phi index must be 1..4");
  }
}

LieElement phi(int which, int p, const LieElement& e) {
  LieElement r;
  for (const auto& [g, c] : e.terms()) r += phi(which, p, g) * c;
  return r;
}

IsoSpec iso_spec(int which, int p) {
  IsoSpec iso;
  switch (which) {
    case 1:
      iso.target.bindings[Parameter::alpha] =
          sym(Parameter::alpha) + Scalar(static_cast<long>(p));
      break;
    case 2:
      iso.source.bindings[Parameter::beta] = Scalar(0);
      iso.source.bindings[Parameter::F] = Scalar(0);
      iso.target.bindings[Parameter::beta] = Scalar(1);
      iso.target.bindings[Parameter::F] = Scalar(0);
      break;
    case 3:
      iso.target.bindings[Parameter::F] = Scalar(1);
      break;
    case 4:
      iso.source.bindings[Parameter::alpha] = Scalar(0);
      iso.source.bindings[Parameter::beta] = Scalar(0);
      iso.source.bindings[Parameter::F] = Scalar(1);
      iso.target.bindings[Parameter::alpha] = Scalar(0);
      iso.target.bindings[Parameter::beta] = Scalar(-1);
      iso.target.bindings[Parameter::F] = Scalar(-1);
      iso.level_relation[Parameter::ell3] = 2 * sym(Parameter::ell2);
      break;
    default:
      throw std::invalid_argument("phi index must be 1..4");
  }
  return iso;
}

CheckReport homomorphism_check(int which, int p, int window) {
  CheckReport report;
  report.suite = "homomorphism_phi" + std::to_string(which);
  report.config["window"] = window;
  if (which == 1) report.config["p"] = p;
  IsoSpec iso = iso_spec(which, p);
  std::vector<Generator> gens;
  for (GenKind k : {GenKind::L, GenKind::J, GenKind::G}) {
    for (int m = -window; m <= window; ++m) gens.push_back({k, m});
  }
  for (int i = 1; i <= 3; ++i) gens.push_back(C(i));
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      ++report.cases_run;
      LieElement lhs = phi(which, p, bracket(iso.source, x, y));
      LieElement rhs =
          bracket(iso.target, phi(which, p, x), phi(which, p, y));
      LeveledElement defect = fold_levels(lhs - rhs);
      if (!iso.level_relation.empty()) {
        defect = defect.substitute(iso.level_relation);
      }
      if (!defect.is_zero()) {
        report.fail({{"x", x.str()}, {"y", y.str()}}, "0", defect.str());
      }
    }
  }
  return report;
}

Scalar phi4_central_defect(int m) {
  IsoSpec iso = iso_spec(4, 0);
  Generator x = L(m);
  Generator y = J(-m);
  LieElement lhs = phi(4, 0, bracket(iso.source, x, y));
  LieElement rhs = bracket(iso.target, phi(4, 0, x), phi(4, 0, y));
  return fold_levels(lhs - rhs).central;
}

CheckReport embedding_check(EmbedCase which, int window, const Rational& bp_level) {
  CheckReport report;
  report.config["window"] = window;
  AlgebraSpec ehv;
  AlgebraSpec other;
  Substitution levels;
  switch (which) {
    case EmbedCase::N2_plus:
    case EmbedCase::N2_minus: {
      const bool plus = which == EmbedCase::N2_plus;
      report.suite = plus ? "embed_n2_plus" : "embed_n2_minus";
      other.table = BracketTable::N2_even_rows;
      other.g_sign = plus ? +1 : -1;
      ehv.bindings[Parameter::alpha] = Scalar(0);
      ehv.bindings[Parameter::beta] = Scalar(Rational(-1, 2));
      ehv.bindings[Parameter::F] = Scalar(plus ? 1 : -1);
      levels[Parameter::ell2] = Scalar(0);
      levels[Parameter::ell3] = sym(Parameter::ell1) * Scalar(Rational(1, 3));
      break;
    }
    case EmbedCase::BP_plus:
    case EmbedCase::BP_minus: {
      const bool plus = which == EmbedCase::BP_plus;
      report.suite = plus ? "embed_bp_plus" : "embed_bp_minus";
      report.config["bp_level"] = bp_level.str();
      other.table = BracketTable::BP_rows;
      other.g_sign = plus ? +1 : -1;
      other.bp_level = bp_level;
      ehv.bindings[Parameter::alpha] = Scalar(0);
      ehv.bindings[Parameter::beta] = Scalar(plus ? 0 : -1);
      ehv.bindings[Parameter::F] = Scalar(plus ? 1 : -1);
      levels[Parameter::ell1] = Scalar(bp_central_charge(bp_level));
      levels[Parameter::ell2] = Scalar((2 * bp_level + 3) / 6);
      levels[Parameter::ell3] = Scalar((2 * bp_level + 3) / 3);
      break;
    }
  }
  std::vector<Generator> gens;
  for (GenKind k : {GenKind::L, GenKind::J, GenKind::G}) {
    for (int m = -window; m <= window; ++m) gens.push_back({k, m});
  }
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      ++report.cases_run;
      LeveledElement lhs = bracket_leveled(ehv, x, y).substitute(levels);
      LeveledElement rhs = bracket_leveled(other, x, y);
      LeveledElement defect = lhs - rhs;
      if (!defect.is_zero()) {
        report.fail({{"x", x.str()}, {"y", y.str()}}, "0", defect.str());
      }
    }
  }
  return report;
}

SubalgebraSpec SubalgebraSpec::lplus() { return {Kind::Lplus}; }
SubalgebraSpec SubalgebraSpec::lminus() { return {Kind::Lminus}; }

SubalgebraSpec SubalgebraSpec::ld(int d) {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  SubalgebraSpec s{Kind::Ld};
  s.d = d;
  return s;
}

SubalgebraSpec SubalgebraSpec::ldbar(int d1, int d2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("d1,d2 must be nonnegative");
  SubalgebraSpec s{Kind::Ldbar};
  s.d1 = d1;
  s.d2 = d2;
  return s;
}

SubalgebraSpec SubalgebraSpec::lklm(int k, int l, int m) {
  if (k < 0 || l < 0 || m < 0) throw std::invalid_argument("k,l,m must be nonnegative");
  SubalgebraSpec s{Kind::Lklm};
  s.k = k;
  s.l = l;
  s.m = m;
  return s;
}

bool in_subalgebra(const SubalgebraSpec& s, const Generator& g) {
  switch (s.kind) {
    case SubalgebraSpec::Kind::Lplus:
      if (g.central()) return true;
      if (g.kind == GenKind::L) return g.index >= -1;
      return g.index >= 0;
    case SubalgebraSpec::Kind::Lminus:
      if (g.central()) return false;
      if (g.kind == GenKind::L) return g.index <= -2;
      return g.index <= -1;
    case SubalgebraSpec::Kind::Ld:
      if (g.central()) return true;
      if (g.kind == GenKind::G) return g.index >= -s.d;
      return g.index >= 0;
    case SubalgebraSpec::Kind::Ldbar:
      if (g.central()) return true;
      if (g.kind == GenKind::G) return g.index >= -s.d1;
      if (g.kind == GenKind::J) return g.index >= -s.d2;
      return g.index >= 0;
    case SubalgebraSpec::Kind::Lklm:
      if (g.central()) return false;
      if (g.kind == GenKind::G) return g.index >= s.k;
      if (g.kind == GenKind::J) return g.index >= s.l;
      return g.index >= s.m;
  }
  return false;
}

CheckReport subalgebra_closure_check(const SubalgebraSpec& s, int window) {
  CheckReport report;
  report.suite = "subalgebra_closure";
  report.config["window"] = window;
  AlgebraSpec ehv;
  if (s.kind == SubalgebraSpec::Kind::Lplus) {
    // L_+ is a subalgebra only under the alpha = beta hypothesis:
    // [L_{-1}, G_0] = -(alpha - beta) G_{-1}.
    ehv.bindings[Parameter::beta] = Scalar::parameter(Parameter::alpha);
    report.config["bind"] = "beta=alpha";
  }
  if (s.kind == SubalgebraSpec::Kind::Ldbar) {
    // L_dbar is a subalgebra only in the F = 0 setting:
    // [J_{-d2}, G_{-d1}] = F G_{-d1-d2}.
    ehv.bindings[Parameter::F] = Scalar(0);
    report.config["bind"] = "F=0";
  }
  std::vector<Generator> gens;
  for (GenKind k : {GenKind::L, GenKind::J, GenKind::G}) {
    for (int m = -window; m <= window; ++m) {
      Generator g{k, m};
      if (in_subalgebra(s, g)) gens.push_back(g);
    }
  }
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      ++report.cases_run;
      const LieElement b = bracket(ehv, x, y);
      for (const auto& [g, c] : b.terms()) {
        if (!in_subalgebra(s, g)) {
          report.fail({{"x", x.str()}, {"y", y.str()}}, "bracket stays in span",
                      g.str());
        }
      }
    }
  }
  return report;
}

}  // namespace ehv
