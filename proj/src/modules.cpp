#include "ehv/modules.hpp"

#include <algorithm>
#include <random>
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

std::string mono_str(const std::vector<Generator>& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "*";
    out += m[i].str();
  }
  return out;
}

}  // namespace

QuotientModule::QuotientModule(int g_kill, int j_kill, int l_kill,
                               GeneratorOrder order, Substitution bindings,
                               std::optional<SubalgebraSpec> domain)
    : g_kill_(g_kill),
      j_kill_(j_kill),
      l_kill_(l_kill),
      order_(order),
      bindings_(std::move(bindings)),
      domain_(std::move(domain)) {
  spec_.bindings = bindings_;
}

bool QuotientModule::kills(const Generator& g) const {
  switch (g.kind) {
    case GenKind::G: return g.index >= g_kill_;
    case GenKind::J: return g.index >= j_kill_;
    case GenKind::L: return g.index >= l_kill_;
    default: return false;
  }
}

bool QuotientModule::in_domain(const Generator& g) const {
  if (g.central() || !domain_) return true;
  return in_subalgebra(*domain_, g);
}

std::array<long, 3> QuotientModule::key(const Generator& g) const {
  return {kills(g) ? 1L : 0L,
          static_cast<long>(order_.block_rank[static_cast<int>(g.kind)]),
          static_cast<long>(g.index)};
}

void QuotientModule::add(Vec& v, const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(m);
  if (it == v.end()) {
    v.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

QuotientModule::Vec QuotientModule::scale(const Vec& v, const Scalar& c) {
  Vec r;
  for (const auto& [m, s] : v) add(r, m, s * c);
  return r;
}

std::string QuotientModule::str(const Vec& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : v) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")*";
    if (m.empty()) {
      out << "1";
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out << "*";
        out << m[i].str();
      }
    }
  }
  return out.str();
}

QuotientModule::Vec QuotientModule::act_mono(const Generator& g, const Mono& m,
                                             const Scalar& c) const {
  Vec result;
  WorkTerm seed;
  seed.coeff = c;
  seed.word.reserve(m.size() + 1);
  seed.word.push_back(g);
  seed.word.insert(seed.word.end(), m.begin(), m.end());

  std::vector<WorkTerm> work{std::move(seed)};
  while (!work.empty()) {
    WorkTerm t = std::move(work.back());
    work.pop_back();
    if (!t.word.empty() && kills(t.word.back())) continue;  // kills the cyclic vector

    std::size_t i = 0;
    while (i + 1 < t.word.size() && key(t.word[i]) <= key(t.word[i + 1])) ++i;
    if (i + 1 >= t.word.size()) {
      add(result, t.word, t.coeff);
      continue;
    }

    const LieElement corr = bracket(spec_, t.word[i], t.word[i + 1]);
    for (const auto& [h, hc] : corr.terms()) {
      WorkTerm u;
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
  return result;
}

QuotientModule::Vec QuotientModule::act(const Generator& g, const Vec& v) const {
  if (g.central()) {
    return scale(v, Scalar::parameter(level_of(g.kind)).substitute(bindings_));
  }
  if (!in_domain(g)) {
    throw std::invalid_argument(g.str() + " is outside the acting subalgebra");
  }
  Vec result;
  for (const auto& [m, c] : v) {
    for (const auto& [rm, rc] : act_mono(g, m, c)) add(result, rm, rc);
  }
  return result;
}

QuotientModule::Vec QuotientModule::act_word(const std::vector<Generator>& w,
                                             const Vec& v) const {
  Vec cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(*it, cur);
  return cur;
}

QuotientModule::Vec QuotientModule::act_elem(const LieElement& e, const Vec& v) const {
  Vec result;
  for (const auto& [g, c] : e.terms()) {
    for (const auto& [m, mc] : scale(act(g, v), c.substitute(bindings_))) {
      add(result, m, mc);
    }
  }
  return result;
}

CheckReport QuotientModule::stability_check(int window) const {
  CheckReport report;
  report.suite = "annihilator_stability";
  report.config["window"] = window;
  std::vector<Generator> killed, all;
  for (GenKind k : {GenKind::L, GenKind::J, GenKind::G}) {
    for (int m = -window; m <= window; ++m) {
      Generator g{k, m};
      if (!in_domain(g)) continue;
      all.push_back(g);
      if (kills(g)) killed.push_back(g);
    }
  }
  for (const auto& s : killed) {
    for (const auto& g : all) {
      ++report.cases_run;
      const LieElement b = bracket(spec_, s, g);
      for (const auto& [h, c] : b.terms()) {
        if (!h.central() && !kills(h)) {
          report.fail({{"annihilator", s.str()}, {"generator", g.str()}},
                      "bracket in annihilator span", h.str());
        }
      }
    }
  }
  return report;
}

CheckReport QuotientModule::annihilator_closure_check(int window) const {
  CheckReport report;
  report.suite = "annihilator_closure";
  report.config["window"] = window;
  std::vector<Generator> killed;
  for (GenKind k : {GenKind::L, GenKind::J, GenKind::G}) {
    for (int m = -window; m <= window; ++m) {
      Generator g{k, m};
      if (in_domain(g) && kills(g)) killed.push_back(g);
    }
  }
  for (const auto& s : killed) {
    for (const auto& g : killed) {
      ++report.cases_run;
      const LieElement b = bracket(spec_, s, g);
      for (const auto& [h, c] : b.terms()) {
        if (!h.central() && !kills(h)) {
          report.fail({{"x", s.str()}, {"y", g.str()}},
                      "bracket in annihilator span", h.str());
        }
      }
    }
  }
  return report;
}

std::vector<Generator> QuotientModule::creation_pool(int window) const {
  std::vector<Generator> pool;
  for (GenKind k : {GenKind::L, GenKind::J, GenKind::G}) {
    for (int m = -window; m <= window; ++m) {
      Generator g{k, m};
      if (in_domain(g) && !kills(g)) pool.push_back(g);
    }
  }
  return pool;
}

CheckReport QuotientModule::module_axiom_check(int window, int samples,
                                               unsigned long seed,
                                               int max_creation_weight) const {
  CheckReport report;
  report.suite = "module_axiom";
  report.config["window"] = window;
  report.config["samples"] = samples;
  report.config["seed"] = seed;

  std::vector<Generator> acting;
  for (GenKind k : {GenKind::L, GenKind::J, GenKind::G}) {
    for (int m = -window; m <= window; ++m) {
      Generator g{k, m};
      if (in_domain(g)) acting.push_back(g);
    }
  }
  const std::vector<Generator> pool = creation_pool(window);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_acting(0, acting.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_pool(0, pool.size() - 1);

  auto cmp = [this](const Generator& a, const Generator& b) { return key(a) < key(b); };

  for (int s = 0; s < samples; ++s) {
    ++report.cases_run;
    Generator g = acting[pick_acting(rng)];
    Generator h = acting[pick_acting(rng)];
    Mono m;
    int budget = max_creation_weight;
    while (budget > 0) {
      Generator cand = pool[pick_pool(rng)];
      int w = 1 + std::abs(cand.index);
      if (w > budget) break;
      m.push_back(cand);
      budget -= w;
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;
    }
    std::sort(m.begin(), m.end(), cmp);
    Vec v{{m, Scalar(1)}};

    Vec lhs = act(g, act(h, v));
    for (const auto& [mm, c] : act(h, act(g, v))) add(lhs, mm, -c);
    Vec rhs = act_elem(bracket(spec_, g, h), v);
    for (const auto& [mm, c] : rhs) add(lhs, mm, -c);
    if (!lhs.empty()) {
      report.fail({{"g", g.str()}, {"h", h.str()}, {"v", str(v)}}, "0", str(lhs));
    }
  }
  return report;
}

QuotientModule vacuum_module() {
  Substitution alpha_eq_beta;
  alpha_eq_beta[Parameter::beta] = Scalar::parameter(Parameter::alpha);
  return QuotientModule(0, 0, -1, GeneratorOrder::order_32(),
                        std::move(alpha_eq_beta));
}

long graded_dimension(int n) {
  if (n < 0) return 0;
  std::vector<long> dp(n + 1, 0);
  dp[0] = 1;
  auto mult_factor = [&](int k) {  // multiply by (1 - q^k)^{-1}
    for (int i = k; i <= n; ++i) dp[i] += dp[i - k];
  };
  for (int k = 1; k <= n; ++k) {  // J and G directions
    mult_factor(k);
    mult_factor(k);
  }
  for (int k = 2; k <= n; ++k) mult_factor(k);  // L direction
  return dp[n];
}

namespace {

// Partitions of total into parts >= min_part, parts nonincreasing.
void partitions_into(int total, int min_part, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= min_part; --p) {
    cur.push_back(p);
    partitions_into(total - p, min_part, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int total, int min_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(total, min_part, total, cur, out);
  return out;
}

}  // namespace

std::vector<QuotientModule::Mono> enumerate_vacuum_basis(int n) {
  std::vector<QuotientModule::Mono> out;
  for (int c = 0; c <= n; ++c) {        // G-part degree
    for (int b = 0; b + c <= n; ++b) {  // J-part degree
      int a = n - b - c;                // L-part degree
      for (const auto& gp : partitions(c, 1)) {
        for (const auto& jp : partitions(b, 1)) {
          for (const auto& lp : partitions(a, 2)) {
            QuotientModule::Mono m;
            for (int p : gp) m.push_back(G(-p));
            for (int p : jp) m.push_back(J(-p));
            for (int p : lp) m.push_back(L(-p));
            out.push_back(std::move(m));
          }
        }
      }
    }
  }
  return out;
}

UniversalV::UniversalV(int k, int d, int l, Substitution bindings)
    : k_(k),
      d_(d),
      l_(l),
      module_(k + 1, k + d + 1, l + 1, GeneratorOrder::order_31(),
              std::move(bindings), SubalgebraSpec::ld(d)) {
  if (!(l > k + d && k + d > 0)) {
    throw std::invalid_argument("universal V needs l > k+d > 0");
  }
}

std::vector<QuotientModule::Mono> UniversalV::basis_up_to_weight(int W) const {
  // Creation generators listed in normal-form order (L-block, G-block, J-block).
  std::vector<Generator> gens;
  for (int i = 0; i <= l_; ++i) gens.push_back(L(i));
  for (int i = -d_; i <= k_; ++i) gens.push_back(G(i));
  for (int i = 0; i <= k_ + d_; ++i) gens.push_back(J(i));

  std::vector<QuotientModule::Mono> out;
  QuotientModule::Mono cur;
  auto rec = [&](auto&& self, std::size_t from, int budget) -> void {
    out.push_back(cur);
    for (std::size_t i = from; i < gens.size(); ++i) {
      int w = 1 + std::abs(gens[i].index);
      if (w > budget) continue;
      cur.push_back(gens[i]);
      self(self, i, budget - w);
      cur.pop_back();
    }
  };
  rec(rec, 0, W);
  return out;
}

CheckReport UniversalV::injectivity_check(GenKind kind, int W,
                                          unsigned long seed) const {
  CheckReport report;
  report.suite = "injectivity";
  report.config["weight_cap"] = W;
  report.config["seed"] = seed;
  report.config["operator"] = (kind == GenKind::G) ? G(k_).str() : L(l_).str();
  const Generator op = (kind == GenKind::G) ? G(k_) : L(l_);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  Substitution special;
  for (int i = 0; i < kNumParameters; ++i) {
    long nu = num(rng);
    if (nu == 0) nu = 17;
    special[static_cast<Parameter>(i)] = Scalar(Rational(nu, den(rng)));
  }

  const auto basis = basis_up_to_weight(W);
  report.cases_run = static_cast<long>(basis.size());

  std::map<QuotientModule::Mono, int> row_ids;
  std::vector<std::map<int, Rational>> cols;
  for (const auto& b : basis) {
    QuotientModule::Vec img = module_.act(op, {{b, Scalar(1)}});
    std::map<int, Rational> col;
    for (const auto& [m, c] : img) {
      auto val = c.substitute(special).constant_value();
      if (!val) throw std::logic_error("specialization left a free parameter");
      if (*val == 0) continue;
      auto [it, _] = row_ids.emplace(m, static_cast<int>(row_ids.size()));
      col[it->second] = *val;
    }
    cols.push_back(std::move(col));
  }

  // Sparse Gaussian elimination; injective iff every column adds a pivot.
  std::map<int, std::map<int, Rational>> pivots;  // leading row -> column
  int rank = 0;
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    auto col = cols[ci];
    while (!col.empty()) {
      int lead = col.begin()->first;
      auto p = pivots.find(lead);
      if (p == pivots.end()) break;
      Rational factor = col.begin()->second / p->second.begin()->second;
      for (const auto& [r, val] : p->second) {
        Rational& cell = col[r];
        cell -= factor * val;
        if (cell == 0) col.erase(r);
      }
    }
    if (col.empty()) {
      report.fail({{"basis_monomial", mono_str(basis[ci])}},
                  "independent image", "0 after elimination");
    } else {
      pivots.emplace(col.begin()->first, std::move(col));
      ++rank;
    }
  }
  report.config["rank"] = rank;
  return report;
}

CheckReport annihilation_bound_check(int k, int l, int m,
                                     const std::vector<ExpTriple>& descendants,
                                     int window) {
  CheckReport report;
  report.suite = "annihilation_bound";
  report.config["thresholds"] = {k, l, m};
  report.config["window"] = window;
  QuotientModule mod(k, l, m, GeneratorOrder::order_31());
  for (const auto& t : descendants) {
    std::vector<Generator> word;
    for (const auto& [s, mult] : t.first.entries()) {
      for (int c = 0; c < mult; ++c) word.push_back(G(k - s));
    }
    for (const auto& [s, mult] : t.second.entries()) {
      for (int c = 0; c < mult; ++c) word.push_back(J(l - s));
    }
    for (const auto& [s, mult] : t.third.entries()) {
      for (int c = 0; c < mult; ++c) word.push_back(L(m - s));
    }
    QuotientModule::Vec desc = mod.act_word(word, QuotientModule::unit());
    long bound = k + l + m + t.total_weight();
    for (long n = bound + 1; n <= bound + window; ++n) {
      for (GenKind kd : {GenKind::L, GenKind::J, GenKind::G}) {
        ++report.cases_run;
        QuotientModule::Vec r =
            mod.act(Generator{kd, static_cast<int>(n)}, desc);
        if (!r.empty()) {
          report.fail({{"descendant", t.str()},
                       {"operator", Generator{kd, static_cast<int>(n)}.str()}},
                      "0", QuotientModule::str(r));
        }
      }
    }
  }
  return report;
}

}  // namespace ehv
