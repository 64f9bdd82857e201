#include "ehv/suites.hpp"

#include <random>

namespace ehv::suites {

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  long n = num(rng);
  if (n == 0) n = 5;
  return Rational(n, den(rng));
}

std::string row_name(Row row) {
  switch (row) {
    case Row::G_row: return "G_row";
    case Row::J_row: return "J_row";
    case Row::L_row: return "L_row";
  }
  return "?";
}

UEElement word_elem(const std::vector<Generator>& w, const GeneratorOrder& o) {
  return normalize(o, w);
}

// All exponent triples of total weight <= cap.
std::vector<ExpTriple> small_triples(int cap) {
  std::vector<std::vector<ExponentVector>> by_weight(cap + 1);
  by_weight[0].push_back({});
  for (int w = 1; w <= cap; ++w) {
    // vectors of weight w: add one unit at position s to a vector of weight w-s
    // (dedupe through a set keyed by string form)
    std::map<std::string, ExponentVector> seen;
    for (int s = 1; s <= w; ++s) {
      for (const auto& base : by_weight[w - s]) {
        ExponentVector v = base.plus(ExponentVector::unit(s));
        seen.emplace(v.str(), v);
      }
    }
    for (auto& [_, v] : seen) by_weight[w].push_back(v);
  }
  std::vector<ExpTriple> out;
  for (int w1 = 0; w1 <= cap; ++w1) {
    for (int w2 = 0; w1 + w2 <= cap; ++w2) {
      for (int w3 = 0; w1 + w2 + w3 <= cap; ++w3) {
        for (const auto& a : by_weight[w1]) {
          for (const auto& b : by_weight[w2]) {
            for (const auto& c : by_weight[w3]) out.push_back({a, b, c});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

CheckReport merge(const std::string& suite, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.suite = suite;
  for (const auto& p : parts) {
    r.config[p.suite] = p.config;
    r.cases_run += p.cases_run;
    for (const auto& f : p.failures) {
      nlohmann::json inputs = f.inputs;
      inputs["part"] = p.suite;
      r.failures.push_back({inputs, f.expected, f.got});
    }
  }
  return r;
}

CheckReport jacobi(int window, bool corrupt) {
  AlgebraSpec spec;
  spec.corrupt_for_tests = corrupt;
  return jacobi_check(spec, window);
}

CheckReport isomorphisms(int window) {
  std::vector<CheckReport> parts;
  parts.push_back(homomorphism_check(1, 1, window));
  parts.back().suite = "phi1_p1";
  parts.push_back(homomorphism_check(1, 3, window));
  parts.back().suite = "phi1_p3";
  parts.push_back(homomorphism_check(2, 0, window));
  parts.push_back(homomorphism_check(3, 0, window));
  parts.push_back(homomorphism_check(4, 0, window));

  CheckReport defect;
  defect.suite = "phi4_defect";
  defect.config["window"] = window;
  Substitution relation;
  relation[Parameter::ell3] = Scalar(2) * Scalar::parameter(Parameter::ell2);
  for (int m = -window; m <= window; ++m) {
    ++defect.cases_run;
    Scalar d = phi4_central_defect(m);
    bool ok = d.substitute(relation).is_zero() && (m == 0 ? d.is_zero() : !d.is_zero());
    if (!ok) {
      defect.fail({{"m", m}}, "nonzero multiple of (ell3 - 2*ell2)", d.str());
    }
  }
  parts.push_back(std::move(defect));
  return merge("isomorphisms", parts);
}

CheckReport embeddings(int window, const Rational& bp_level) {
  return merge("embeddings",
               {embedding_check(EmbedCase::N2_plus, window),
                embedding_check(EmbedCase::N2_minus, window),
                embedding_check(EmbedCase::BP_plus, window, bp_level),
                embedding_check(EmbedCase::BP_minus, window, bp_level)});
}

CheckReport pbw(int window, int samples, unsigned long seed) {
  const GeneratorOrder o31 = GeneratorOrder::order_31();
  const GeneratorOrder o32 = GeneratorOrder::order_32();
  const AlgebraSpec ehv;

  CheckReport comm;
  comm.suite = "pbw_commutator";
  comm.config["window"] = window;
  for (GenKind ka : {GenKind::L, GenKind::J, GenKind::G}) {
    for (GenKind kb : {GenKind::L, GenKind::J, GenKind::G}) {
      for (int m = -window; m <= window; ++m) {
        for (int n = -window; n <= window; ++n) {
          ++comm.cases_run;
          Generator x{ka, m}, y{kb, n};
          UEElement lhs = multiply(o31, word_elem({x}, o31), word_elem({y}, o31)) -
                          multiply(o31, word_elem({y}, o31), word_elem({x}, o31));
          UEElement rhs;
          const LieElement br = bracket(ehv, x, y);
          for (const auto& [g, c] : br.terms()) {
            UEMonomial mono;
            if (g.central()) {
              mono.central[static_cast<int>(g.kind) - 3] = 1;
            } else {
              mono.word = {g};
            }
            rhs.add(mono, c);
          }
          if (!(lhs == rhs)) {
            comm.fail({{"x", x.str()}, {"y", y.str()}}, rhs.str(), lhs.str());
          }
        }
      }
    }
  }

  CheckReport assoc;
  assoc.suite = "pbw_associativity";
  assoc.config["samples"] = samples;
  assoc.config["seed"] = seed;
  CheckReport idem;
  idem.suite = "pbw_idempotent";
  CheckReport round;
  round.suite = "pbw_order_roundtrip";

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> idx(-3, 3);
  auto random_word = [&] {
    std::vector<Generator> w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      w.push_back({static_cast<GenKind>(kind(rng)), idx(rng)});
    }
    return w;
  };

  for (int s = 0; s < samples; ++s) {
    auto wa = random_word(), wb = random_word(), wc = random_word();
    UEElement a = normalize(o31, wa), b = normalize(o31, wb), c = normalize(o31, wc);
    ++assoc.cases_run;
    UEElement left = multiply(o31, multiply(o31, a, b), c);
    UEElement right = multiply(o31, a, multiply(o31, b, c));
    if (!(left == right)) {
      assoc.fail({{"sample", s}}, "(a*b)*c == a*(b*c)", (left - right).str());
    }
    ++idem.cases_run;
    if (!(normalize(o31, left) == left)) {
      idem.fail({{"sample", s}}, left.str(), normalize(o31, left).str());
    }
    ++round.cases_run;
    UEElement back = normalize(o31, normalize(o32, a));
    if (!(back == a)) {
      round.fail({{"sample", s}}, a.str(), back.str());
    }
  }
  return merge("pbw", {comm, assoc, idem, round});
}

CheckReport vacuum_axioms(int window, int samples, unsigned long seed,
                          int degree_cap) {
  const QuotientModule vac = vacuum_module();
  return merge("vacuum_axioms",
               {vac.annihilator_closure_check(window),
                vac.module_axiom_check(window, samples, seed, degree_cap)});
}

CheckReport vacuum_dimensions(int nmax) {
  CheckReport r;
  r.suite = "vacuum_dimensions";
  r.config["nmax"] = nmax;
  const long frozen[] = {1, 2, 6, 13};
  for (int n = 0; n <= nmax; ++n) {
    ++r.cases_run;
    long gf = graded_dimension(n);
    long brute = static_cast<long>(enumerate_vacuum_basis(n).size());
    if (gf != brute) {
      r.fail({{"n", n}}, std::to_string(gf) + " (product formula)",
             std::to_string(brute) + " (enumeration)");
    }
    if (n <= 3 && gf != frozen[n]) {
      r.fail({{"n", n}}, std::to_string(frozen[n]), std::to_string(gf));
    }
  }
  return r;
}

CheckReport vertex(int window, int degree_cap) {
  return merge("vertex", {product_table_check(window),
                          field_commutator_check(4, degree_cap),
                          l0_grading_check(window),
                          mode_grading_check(4, degree_cap)});
}

namespace {

// Sampled vectors in Ind(V) for the lemma suites: a couple of random prefix
// terms with random tails. The builders differ per module type.
template <class Ind, class TailFn>
typename Ind::Vec random_vector(const Ind& ind, std::mt19937_64& rng,
                                const std::vector<Generator>& prefix_pool,
                                TailFn make_tail) {
  std::uniform_int_distribution<int> nterms(1, 2);
  std::uniform_int_distribution<int> plen(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, prefix_pool.size() - 1);
  typename Ind::Vec v;
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    typename Ind::Prefix p;
    int n = plen(rng);
    for (int i = 0; i < n; ++i) p.push_back(prefix_pool[pick(rng)]);
    auto term = ind.make(p, make_tail(rng));
    for (auto& [tp, tail] : term) {
      auto& slot = v[tp];
      for (auto& [key, c] : tail) {
        auto it = slot.find(key);
        if (it == slot.end()) {
          slot.emplace(key, c);
        } else {
          it->second += c;
          if (it->second.is_zero()) slot.erase(it);
        }
      }
      if (slot.empty()) v.erase(tp);
    }
  }
  return v;
}

}  // namespace

CheckReport lemma_d(int k, int d, int l, int per_row, unsigned long seed) {
  UniversalV V(k, d, l);
  InducedD ind(V);

  std::vector<CheckReport> parts;
  parts.push_back(V.module().stability_check(2 * l + 2));
  parts.push_back(V.injectivity_check(GenKind::G, 4, seed));
  parts.back().suite = "injectivity_G";
  parts.push_back(V.injectivity_check(GenKind::L, 4, seed + 1));
  parts.back().suite = "injectivity_L";

  CheckReport rows;
  rows.suite = "lemma_d_degree_predictions";
  rows.config["thresholds"] = {k, d, l};
  rows.config["per_row"] = per_row;
  rows.config["seed"] = seed;

  std::vector<Generator> prefix_pool;
  for (int i = 1; i <= 3; ++i) {
    prefix_pool.push_back(L(-i));
    prefix_pool.push_back(G(-d - i));
    prefix_pool.push_back(J(-i));
  }
  const auto creation = V.module().creation_pool(l);
  std::mt19937_64 rng(seed);
  auto make_tail = [&](std::mt19937_64& r) {
    QuotientModule::Mono m;
    std::uniform_int_distribution<int> count(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, creation.size() - 1);
    int n = count(r);
    for (int i = 0; i < n; ++i) m.push_back(creation[pick(r)]);
    std::sort(m.begin(), m.end());
    QuotientModule::Vec tail;
    tail.emplace(m, Scalar(random_rational(r)));
    return tail;
  };

  std::map<Row, int> done;
  int attempts = 0;
  while ((done[Row::G_row] < per_row || done[Row::J_row] < per_row ||
          done[Row::L_row] < per_row) &&
         attempts < 100 * per_row) {
    ++attempts;
    auto v = random_vector(ind, rng, prefix_pool, make_tail);
    if (InducedD::is_zero(v)) continue;
    ExpTriple deg = ind.degree(v);
    if (deg.is_zero()) continue;
    Row row = row_for(deg);
    if (done[row] >= per_row) continue;
    ++done[row];
    ++rows.cases_run;
    ExpTriple predicted = ind.predicted_degree(row, deg);
    auto [op, nv] = ind.lemma_reduction_step(row, v);
    if (InducedD::is_zero(nv)) {
      rows.fail({{"row", row_name(row)}, {"v", InducedD::str(v)}},
                predicted.str(), "0");
      continue;
    }
    ExpTriple got = ind.degree(nv);
    if (!(got == predicted)) {
      rows.fail({{"row", row_name(row)}, {"op", op.str()}, {"deg", deg.str()}},
                predicted.str(), got.str());
    }
  }
  rows.config["attempts"] = attempts;
  parts.push_back(std::move(rows));

  // Hypothesis mismatch is rejected.
  CheckReport precond;
  precond.suite = "lemma_d_precondition";
  ++precond.cases_run;
  auto v = ind.make({G(-d - 1)}, QuotientModule::unit());  // i-block only
  try {
    ind.lemma_reduction_step(Row::G_row, v);
    precond.fail({{"v", InducedD::str(v)}}, "hypothesis mismatch rejected",
                 "step accepted");
  } catch (const std::invalid_argument&) {
  }
  parts.push_back(std::move(precond));
  return merge("lemma_d", parts);
}

CheckReport reduction_d(int k, int d, int l, int count, unsigned long seed,
                        int weight_cap, int max_steps) {
  UniversalV V(k, d, l);
  InducedD ind(V);
  CheckReport r;
  r.suite = "reduction_d";
  r.config["thresholds"] = {k, d, l};
  r.config["count"] = count;
  r.config["seed"] = seed;
  r.config["weight_cap"] = weight_cap;

  std::vector<Generator> pool;
  for (int i = 1; i <= weight_cap; ++i) {
    pool.push_back(L(-i));
    pool.push_back(G(-d - i));
    pool.push_back(J(-i));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int s = 0; s < count; ++s) {
    ++r.cases_run;
    InducedD::Prefix p;
    long weight = 0;
    while (true) {
      Generator g = pool[pick(rng)];
      long w = (g.kind == GenKind::G) ? -g.index - d : -g.index;
      if (weight + w > weight_cap) break;
      p.push_back(g);
      weight += w;
      if (weight == weight_cap) break;
    }
    if (p.empty()) p.push_back(J(-1));
    auto v = ind.make(p, QuotientModule::unit());
    try {
      std::vector<ExpTriple> trace;
      auto out = ind.reduce_to_V(v, max_steps, &trace);
      if (out.empty()) {
        r.fail({{"v", InducedD::str(v)}}, "nonzero element of V", "0");
      }
    } catch (const std::exception& e) {
      r.fail({{"v", InducedD::str(v)}}, "reduction terminates", e.what());
    }
  }
  return r;
}

CheckReport lemma_dbar(int k, int d1, int d2, int per_row, unsigned long seed) {
  InducedDbar ind(k, d1, d2);
  CheckReport rows;
  rows.suite = "lemma_dbar_degree_predictions";
  rows.config["thresholds"] = {k, d1, d2};
  rows.config["per_row"] = per_row;
  rows.config["seed"] = seed;

  std::vector<Generator> prefix_pool;
  for (int i = 1; i <= 3; ++i) {
    prefix_pool.push_back(G(-d1 - i));
    prefix_pool.push_back(J(-d2 - i));
    prefix_pool.push_back(L(-i));
  }
  std::mt19937_64 rng(seed);
  auto make_tail = [&](std::mt19937_64& r) {
    InducedDbar::OVec tail;
    tail.emplace(OpaqueSymbol{0}, Scalar(random_rational(r)));
    return tail;
  };

  std::map<Row, int> done;
  int attempts = 0;
  while ((done[Row::G_row] < per_row || done[Row::J_row] < per_row ||
          done[Row::L_row] < per_row) &&
         attempts < 100 * per_row) {
    ++attempts;
    auto v = random_vector(ind, rng, prefix_pool, make_tail);
    if (InducedDbar::is_zero(v)) continue;
    ExpTriple deg = ind.degree(v);
    if (deg.is_zero()) continue;
    Row row = row_for(deg);
    if (done[row] >= per_row) continue;
    ++done[row];
    ++rows.cases_run;
    ExpTriple predicted = ind.predicted_degree(row, deg);
    auto [op, nv] = ind.lemma_reduction_step(row, v);
    if (InducedDbar::is_zero(nv)) {
      rows.fail({{"row", row_name(row)}, {"v", InducedDbar::str(v)}},
                predicted.str(), "0");
      continue;
    }
    ExpTriple got = ind.degree(nv);
    if (!(got == predicted)) {
      rows.fail({{"row", row_name(row)}, {"op", op.str()}, {"deg", deg.str()}},
                predicted.str(), got.str());
    }
  }
  rows.config["attempts"] = attempts;
  return rows;
}

CheckReport lemma_dbar_guards() {
  CheckReport r;
  r.suite = "lemma_dbar_guards";

  {  // L-row guard: alpha - (d1+p) + (k+d1+p) beta = 0 at alpha=2, beta=0
    ++r.cases_run;
    Substitution bad;
    bad[Parameter::alpha] = Scalar(2);
    bad[Parameter::beta] = Scalar(0);
    InducedDbar ind(1, 1, 1, bad);
    auto v = ind.make({G(-2)}, {{OpaqueSymbol{0}, Scalar(1)}});
    try {
      ind.lemma_reduction_step(Row::L_row, v);
      r.fail({{"case", "L_row guard"}}, "domain_error", "step accepted");
    } catch (const std::domain_error&) {
    }
  }
  {  // G-row guard: alpha + (k+r) - r beta = 0 at alpha=-2, beta=0 (k=r=1)
    ++r.cases_run;
    Substitution bad;
    bad[Parameter::alpha] = Scalar(-2);
    bad[Parameter::beta] = Scalar(0);
    InducedDbar ind(1, 1, 1, bad);
    auto v = ind.make({L(-1)}, {{OpaqueSymbol{0}, Scalar(1)}});
    try {
      ind.lemma_reduction_step(Row::G_row, v);
      r.fail({{"case", "G_row guard"}}, "domain_error", "step accepted");
    } catch (const std::domain_error&) {
    }
  }
  {  // row/hypothesis mismatch
    ++r.cases_run;
    InducedDbar ind(1, 1, 1);
    auto v = ind.make({J(-2)}, {{OpaqueSymbol{0}, Scalar(1)}});
    try {
      ind.lemma_reduction_step(Row::G_row, v);
      r.fail({{"case", "hypothesis mismatch"}}, "invalid_argument", "step accepted");
    } catch (const std::invalid_argument&) {
    }
  }
  return r;
}

CheckReport bound(int window, int weight_cap) {
  const auto descendants = small_triples(weight_cap);
  auto a = annihilation_bound_check(1, 1, 1, descendants, window);
  a.suite = "bound_1_1_1";
  auto b = annihilation_bound_check(2, 1, 3, descendants, window);
  b.suite = "bound_2_1_3";
  return merge("annihilation_bound", {a, b});
}

}  // namespace ehv::suites
