#include "ehv/induced.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ehv {

namespace {

Parameter level_of(GenKind k) {
  switch (k) {
    case GenKind::C1: return Parameter::ell1;
    case GenKind::C2: return Parameter::ell2;
    case GenKind::C3: return Parameter::ell3;
    default: throw std::logic_error("not central");
  }
}

}  // namespace

Row row_for(const ExpTriple& deg) {
  if (!deg.third.is_zero()) return Row::G_row;
  if (!deg.second.is_zero()) return Row::J_row;
  if (!deg.first.is_zero()) return Row::L_row;
  throw std::invalid_argument("zero degree triple has no reduction row");
}

InducedD::InducedD(UniversalV V)
    : V_(std::move(V)), sub_(SubalgebraSpec::ld(V_.d())) {
  spec_.bindings = V_.module().bindings();
}

bool InducedD::in_prefix_region(const Generator& g) const {
  return !g.central() && !in_subalgebra(sub_, g);
}

std::array<long, 3> InducedD::key(const Generator& g) const {
  static const GeneratorOrder o31 = GeneratorOrder::order_31();
  return {in_subalgebra(sub_, g) ? 1L : 0L,
          static_cast<long>(o31.block_rank[static_cast<int>(g.kind)]),
          static_cast<long>(g.index)};
}

void InducedD::add(Vec& v, const Prefix& p, const QuotientModule::Vec& tail,
                   const Scalar& c) const {
  if (tail.empty() || c.is_zero()) return;
  auto& slot = v[p];
  for (const auto& [m, s] : tail) QuotientModule::add(slot, m, s * c);
  if (slot.empty()) v.erase(p);
}

InducedD::Vec InducedD::unit() const {
  Vec v;
  v.emplace(Prefix{}, QuotientModule::unit());
  return v;
}

InducedD::Vec InducedD::make(Prefix prefix, QuotientModule::Vec tail) const {
  for (const auto& g : prefix) {
    if (!in_prefix_region(g)) {
      throw std::invalid_argument(g.str() + " is not a prefix direction");
    }
  }
  std::sort(prefix.begin(), prefix.end(),
            [this](const Generator& a, const Generator& b) { return key(a) < key(b); });
  Vec v;
  add(v, prefix, tail, Scalar(1));
  return v;
}

std::string InducedD::str(const Vec& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, tail] : v) {
    if (!first) out << " + ";
    first = false;
    for (const auto& g : p) out << g.str() << "*";
    out << "(" << QuotientModule::str(tail) << ")";
  }
  return out.str();
}

InducedD::Vec InducedD::act(const Generator& g, const Vec& v) const {
  Vec result;
  if (g.central()) {
    Scalar s = Scalar::parameter(level_of(g.kind)).substitute(spec_.bindings);
    for (const auto& [p, tail] : v) add(result, p, tail, s);
    return result;
  }
  struct Work {
    Scalar coeff;
    std::vector<Generator> word;
  };
  for (const auto& [prefix, tail] : v) {
    Work seed;
    seed.coeff = Scalar(1);
    seed.word.reserve(prefix.size() + 1);
    seed.word.push_back(g);
    seed.word.insert(seed.word.end(), prefix.begin(), prefix.end());

    std::vector<Work> work{std::move(seed)};
    while (!work.empty()) {
      Work t = std::move(work.back());
      work.pop_back();

      std::size_t i = 0;
      while (i + 1 < t.word.size() && key(t.word[i]) <= key(t.word[i + 1])) ++i;
      if (i + 1 >= t.word.size()) {
        auto split = std::find_if(t.word.begin(), t.word.end(),
                                  [this](const Generator& h) {
                                    return in_subalgebra(sub_, h);
                                  });
        Prefix p(t.word.begin(), split);
        std::vector<Generator> suffix(split, t.word.end());
        add(result, p, V_.module().act_word(suffix, tail), t.coeff);
        continue;
      }

      const LieElement corr = bracket(spec_, t.word[i], t.word[i + 1]);
      for (const auto& [h, hc] : corr.terms()) {
        Work u;
        u.coeff = t.coeff * hc;
        u.word.reserve(t.word.size() - 1);
        u.word.insert(u.word.end(), t.word.begin(), t.word.begin() + i);
        if (h.central()) {
          u.coeff *= Scalar::parameter(level_of(h.kind)).substitute(spec_.bindings);
        } else {
          u.word.push_back(h);
        }
        u.word.insert(u.word.end(), t.word.begin() + i + 2, t.word.end());
        work.push_back(std::move(u));
      }
      std::swap(t.word[i], t.word[i + 1]);
      work.push_back(std::move(t));
    }
  }
  return result;
}

ExpTriple InducedD::triple_of_prefix(const Prefix& p) const {
  ExpTriple t;
  for (const auto& g : p) {
    switch (g.kind) {
      case GenKind::L: t.first.add(-g.index, 1); break;
      case GenKind::G: t.second.add(-g.index - V_.d(), 1); break;
      case GenKind::J: t.third.add(-g.index, 1); break;
      default: throw std::logic_error("central in prefix");
    }
  }
  return t;
}

InducedD::Prefix InducedD::prefix_of_triple(const ExpTriple& t) const {
  Prefix p;
  for (const auto& [x, mult] : t.first.entries()) {
    for (int c = 0; c < mult; ++c) p.push_back(L(-x));
  }
  for (const auto& [y, mult] : t.second.entries()) {
    for (int c = 0; c < mult; ++c) p.push_back(G(-y - V_.d()));
  }
  for (const auto& [z, mult] : t.third.entries()) {
    for (int c = 0; c < mult; ++c) p.push_back(J(-z));
  }
  std::sort(p.begin(), p.end(),
            [this](const Generator& a, const Generator& b) { return key(a) < key(b); });
  return p;
}

ExpTriple InducedD::degree(const Vec& v) const {
  if (v.empty()) throw std::invalid_argument("the degree of 0 is not defined");
  bool have = false;
  ExpTriple best;
  for (const auto& [p, tail] : v) {
    ExpTriple t = triple_of_prefix(p);
    if (!have || compare_principal_o(t, best) == Ordering::Greater) {
      best = t;
      have = true;
    }
  }
  return best;
}

std::vector<ExpTriple> InducedD::support(const Vec& v) const {
  std::vector<ExpTriple> out;
  out.reserve(v.size());
  for (const auto& [p, tail] : v) out.push_back(triple_of_prefix(p));
  return out;
}

Generator InducedD::lemma_operator(Row row, const ExpTriple& deg) const {
  switch (row) {
    case Row::G_row: return G(V_.k() + deg.third.min_position());
    case Row::J_row: return J(V_.k() + V_.d() + deg.second.min_position());
    case Row::L_row: return L(V_.l() + deg.first.min_position());
  }
  throw std::logic_error("bad row");
}

ExpTriple InducedD::predicted_degree(Row row, const ExpTriple& deg) const {
  ExpTriple t = deg;
  switch (row) {
    case Row::G_row:
      t.third = t.third.minus_unit(t.third.min_position());
      break;
    case Row::J_row:
      t.second = t.second.minus_unit(t.second.min_position());
      t.third = {};
      break;
    case Row::L_row:
      t.first = t.first.minus_unit(t.first.min_position());
      t.second = {};
      t.third = {};
      break;
  }
  return t;
}

std::pair<Generator, InducedD::Vec> InducedD::lemma_reduction_step(
    Row row, const Vec& v) const {
  ExpTriple deg = degree(v);
  if (row_for(deg) != row) {
    throw std::invalid_argument("degree " + deg.str() +
                                " does not match the requested lemma row");
  }
  Generator op = lemma_operator(row, deg);
  return {op, act(op, v)};
}

QuotientModule::Vec InducedD::reduce_to_V(const Vec& v, int max_steps,
                                          std::vector<ExpTriple>* trace) const {
  if (v.empty()) throw std::invalid_argument("cannot reduce the zero vector");
  Vec cur = v;
  for (int step = 0; step <= max_steps; ++step) {
    ExpTriple deg = degree(cur);
    if (trace) trace->push_back(deg);
    if (deg.is_zero()) {
      return cur.at(Prefix{});
    }
    auto [op, next] = lemma_reduction_step(row_for(deg), cur);
    if (next.empty()) {
      throw std::logic_error("lemma step produced zero from " + str(cur));
    }
    if (compare_principal_o(degree(next), deg) != Ordering::Less) {
      throw std::logic_error("lemma step did not lower the degree");
    }
    cur = std::move(next);
  }
  throw std::runtime_error("reduce_to_V: step budget exhausted");
}

std::string OpaqueSymbol::str() const {
  std::string s = "w" + std::to_string(base);
  if (has_applied) s = applied.str() + "." + s;
  return s;
}

InducedDbar::InducedDbar(int k, int d1, int d2, Substitution bindings)
    : k_(k), d1_(d1), d2_(d2), sub_(SubalgebraSpec::ldbar(d1, d2)),
      bindings_(std::move(bindings)) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  bindings_[Parameter::F] = Scalar(0);  // this model only exists at F = 0
  spec_.bindings = bindings_;
}

bool InducedDbar::annihilates(const Generator& g) const {
  switch (g.kind) {
    case GenKind::G: return g.index >= k_ + 1;
    case GenKind::J: return g.index >= d2_ + 1;
    case GenKind::L: return g.index >= k_ + d1_ + 1;
    default: return false;
  }
}

bool InducedDbar::in_prefix_region(const Generator& g) const {
  return !g.central() && !in_subalgebra(sub_, g);
}

std::array<long, 3> InducedDbar::key(const Generator& g) const {
  static const GeneratorOrder o32 = GeneratorOrder::order_32();
  return {in_subalgebra(sub_, g) ? 1L : 0L,
          static_cast<long>(o32.block_rank[static_cast<int>(g.kind)]),
          static_cast<long>(g.index)};
}

void InducedDbar::add(Vec& v, const Prefix& p, const OVec& tail,
                      const Scalar& c) const {
  if (tail.empty() || c.is_zero()) return;
  auto& slot = v[p];
  for (const auto& [sym, s] : tail) {
    auto it = slot.find(sym);
    if (it == slot.end()) {
      Scalar val = s * c;
      if (!val.is_zero()) slot.emplace(sym, std::move(val));
    } else {
      it->second += s * c;
      if (it->second.is_zero()) slot.erase(it);
    }
  }
  if (slot.empty()) v.erase(p);
}

InducedDbar::Vec InducedDbar::unit(int base) const {
  Vec v;
  v[Prefix{}].emplace(OpaqueSymbol{base}, Scalar(1));
  return v;
}

InducedDbar::Vec InducedDbar::make(Prefix prefix, OVec tail) const {
  for (const auto& g : prefix) {
    if (!in_prefix_region(g)) {
      throw std::invalid_argument(g.str() + " is not a prefix direction");
    }
  }
  std::sort(prefix.begin(), prefix.end(),
            [this](const Generator& a, const Generator& b) { return key(a) < key(b); });
  Vec v;
  add(v, prefix, tail, Scalar(1));
  return v;
}

std::string InducedDbar::str(const Vec& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, tail] : v) {
    if (!first) out << " + ";
    first = false;
    for (const auto& g : p) out << g.str() << "*";
    out << "(";
    bool f2 = true;
    for (const auto& [sym, c] : tail) {
      if (!f2) out << " + ";
      f2 = false;
      out << "(" << c.str() << ")*" << sym.str();
    }
    out << ")";
  }
  return out.str();
}

InducedDbar::OVec InducedDbar::apply_to_symbols(const Generator& g,
                                                const OVec& tail) const {
  if (annihilates(g)) return {};
  OVec r;
  for (const auto& [sym, c] : tail) {
    if (sym.has_applied) {
      throw std::runtime_error("opaque-V depth exceeded applying " + g.str() +
                               " to " + sym.str());
    }
    r.emplace(OpaqueSymbol{sym.base, true, g}, c);
  }
  return r;
}

InducedDbar::Vec InducedDbar::act(const Generator& g, const Vec& v) const {
  Vec result;
  if (g.central()) {
    Scalar s = Scalar::parameter(level_of(g.kind)).substitute(bindings_);
    for (const auto& [p, tail] : v) add(result, p, tail, s);
    return result;
  }
  struct Work {
    Scalar coeff;
    std::vector<Generator> word;
  };
  for (const auto& [prefix, tail] : v) {
    Work seed;
    seed.coeff = Scalar(1);
    seed.word.reserve(prefix.size() + 1);
    seed.word.push_back(g);
    seed.word.insert(seed.word.end(), prefix.begin(), prefix.end());

    std::vector<Work> work{std::move(seed)};
    while (!work.empty()) {
      Work t = std::move(work.back());
      work.pop_back();

      std::size_t i = 0;
      while (i + 1 < t.word.size() && key(t.word[i]) <= key(t.word[i + 1])) ++i;
      if (i + 1 >= t.word.size()) {
        auto split = std::find_if(t.word.begin(), t.word.end(),
                                  [this](const Generator& h) {
                                    return in_subalgebra(sub_, h);
                                  });
        Prefix p(t.word.begin(), split);
        OVec cur = tail;
        for (auto it = t.word.end(); it != split && !cur.empty();) {
          --it;
          cur = apply_to_symbols(*it, cur);
        }
        add(result, p, cur, t.coeff);
        continue;
      }

      const LieElement corr = bracket(spec_, t.word[i], t.word[i + 1]);
      for (const auto& [h, hc] : corr.terms()) {
        Work u;
        u.coeff = t.coeff * hc;
        u.word.reserve(t.word.size() - 1);
        u.word.insert(u.word.end(), t.word.begin(), t.word.begin() + i);
        if (h.central()) {
          u.coeff *= Scalar::parameter(level_of(h.kind)).substitute(bindings_);
        } else {
          u.word.push_back(h);
        }
        u.word.insert(u.word.end(), t.word.begin() + i + 2, t.word.end());
        work.push_back(std::move(u));
      }
      std::swap(t.word[i], t.word[i + 1]);
      work.push_back(std::move(t));
    }
  }
  return result;
}

ExpTriple InducedDbar::triple_of_prefix(const Prefix& p) const {
  ExpTriple t;
  for (const auto& g : p) {
    switch (g.kind) {
      case GenKind::G: t.first.add(-g.index - d1_, 1); break;
      case GenKind::J: t.second.add(-g.index - d2_, 1); break;
      case GenKind::L: t.third.add(-g.index, 1); break;
      default: throw std::logic_error("central in prefix");
    }
  }
  return t;
}

InducedDbar::Prefix InducedDbar::prefix_of_triple(const ExpTriple& t) const {
  Prefix p;
  for (const auto& [y, mult] : t.first.entries()) {
    for (int c = 0; c < mult; ++c) p.push_back(G(-y - d1_));
  }
  for (const auto& [z, mult] : t.second.entries()) {
    for (int c = 0; c < mult; ++c) p.push_back(J(-z - d2_));
  }
  for (const auto& [x, mult] : t.third.entries()) {
    for (int c = 0; c < mult; ++c) p.push_back(L(-x));
  }
  std::sort(p.begin(), p.end(),
            [this](const Generator& a, const Generator& b) { return key(a) < key(b); });
  return p;
}

ExpTriple InducedDbar::degree(const Vec& v) const {
  if (v.empty()) throw std::invalid_argument("the degree of 0 is not defined");
  bool have = false;
  ExpTriple best;
  for (const auto& [p, tail] : v) {
    ExpTriple t = triple_of_prefix(p);
    if (!have || compare_principal_o_prime(t, best) == Ordering::Greater) {
      best = t;
      have = true;
    }
  }
  return best;
}

std::vector<ExpTriple> InducedDbar::support(const Vec& v) const {
  std::vector<ExpTriple> out;
  out.reserve(v.size());
  for (const auto& [p, tail] : v) out.push_back(triple_of_prefix(p));
  return out;
}

Generator InducedDbar::lemma_operator(Row row, const ExpTriple& deg) const {
  switch (row) {
    case Row::G_row: return G(k_ + deg.third.min_position());
    case Row::J_row: return J(d2_ + deg.second.min_position());
    case Row::L_row: return L(k_ + d1_ + deg.first.max_position());
  }
  throw std::logic_error("bad row");
}

ExpTriple InducedDbar::predicted_degree(Row row, const ExpTriple& deg) const {
  ExpTriple t = deg;
  switch (row) {
    case Row::G_row:
      t.third = t.third.minus_unit(t.third.min_position());
      break;
    case Row::J_row:
      t.second = t.second.minus_unit(t.second.min_position());
      t.third = {};
      break;
    case Row::L_row:
      t.first = t.first.minus_unit(t.first.max_position());
      t.second = {};
      t.third = {};
      break;
  }
  return t;
}

std::optional<Scalar> InducedDbar::guard_polynomial(Row row,
                                                    const ExpTriple& deg) const {
  const Scalar alpha = Scalar::parameter(Parameter::alpha);
  const Scalar beta = Scalar::parameter(Parameter::beta);
  switch (row) {
    case Row::G_row: {
      // [G_{k+r}, L_{-r}] = (alpha + (k+r) - r*beta) G_k
      long r = deg.third.min_position();
      return (alpha + Scalar(k_ + r) - Scalar(r) * beta).substitute(bindings_);
    }
    case Row::L_row: {
      long p = deg.first.max_position();
      return (alpha - Scalar(static_cast<long>(d1_) + p) +
              Scalar(static_cast<long>(k_ + d1_) + p) * beta)
          .substitute(bindings_);
    }
    case Row::J_row:
      return std::nullopt;  // coefficient (d2+q) * ell3, nonzero by C3 != 0
  }
  return std::nullopt;
}

std::pair<Generator, InducedDbar::Vec> InducedDbar::lemma_reduction_step(
    Row row, const Vec& v) const {
  ExpTriple deg = degree(v);
  if (row_for(deg) != row) {
    throw std::invalid_argument("degree " + deg.str() +
                                " does not match the requested lemma row");
  }
  if (auto guard = guard_polynomial(row, deg);
      guard && !guard->is_identically_nonzero()) {
    throw std::domain_error(
        "lemma step coefficient vanishes under the given (alpha,beta) binding");
  }
  Generator op = lemma_operator(row, deg);
  return {op, act(op, v)};
}

}  // namespace ehv
