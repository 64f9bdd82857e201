#pragma once

#include <utility>

#include "ehv/modules.hpp"

namespace ehv {

// Which reduction operator a degree-lowering step applies.
enum class Row { G_row, J_row, L_row };

// Row matching the nonzero block of a degree triple: third -> G_row,
// second -> J_row, first -> L_row (shared by the 𝔏_d and 𝔏_d̲ lemmas).
Row row_for(const ExpTriple& deg);

// Ind_{𝔏_d}^𝔏(V) with V the universal coefficient module. Vectors are sums
// of prefix monomials L^k G^i J^j (generators outside 𝔏_d) applied to
// elements of V; degrees live in the principal order (o).
class InducedD {
 public:
  using Prefix = std::vector<Generator>;
  using Vec = std::map<Prefix, QuotientModule::Vec>;

  explicit InducedD(UniversalV V);

  const UniversalV& coeff_module() const { return V_; }
  bool in_prefix_region(const Generator& g) const;

  Vec unit() const;  // 1 ⊗ w
  Vec make(Prefix prefix, QuotientModule::Vec tail) const;
  static bool is_zero(const Vec& v) { return v.empty(); }
  static std::string str(const Vec& v);

  Vec act(const Generator& g, const Vec& v) const;

  // L_{-x} -> first, G_{-d-y} -> second, J_{-z} -> third.
  ExpTriple triple_of_prefix(const Prefix& p) const;
  Prefix prefix_of_triple(const ExpTriple& t) const;

  ExpTriple degree(const Vec& v) const;  // throws on the zero vector
  std::vector<ExpTriple> support(const Vec& v) const;

  Generator lemma_operator(Row row, const ExpTriple& deg) const;
  ExpTriple predicted_degree(Row row, const ExpTriple& deg) const;
  // Validates the row hypothesis against deg(v), applies the operator.
  std::pair<Generator, Vec> lemma_reduction_step(Row row, const Vec& v) const;

  // Repeated lemma steps until the prefix is trivial; checks the degree
  // strictly decreases each step and the result is nonzero.
  QuotientModule::Vec reduce_to_V(const Vec& v, int max_steps,
                                  std::vector<ExpTriple>* trace = nullptr) const;

 private:
  std::array<long, 3> key(const Generator& g) const;
  void add(Vec& v, const Prefix& p, const QuotientModule::Vec& tail,
           const Scalar& c) const;

  UniversalV V_;
  SubalgebraSpec sub_;
  AlgebraSpec spec_;
};

// Formal coefficient vector for the opaque-V model: a free symbol, possibly
// with a single subalgebra generator applied (depth 1).
struct OpaqueSymbol {
  int base = 0;
  bool has_applied = false;
  Generator applied{GenKind::L, 0};

  auto operator<=>(const OpaqueSymbol&) const = default;
  std::string str() const;
};

// Ind_{𝔏_d̲}^𝔏(V) in opaque-V mode (the F = 0, C3 ≠ 0 setting). Prefixes
// are G^a J^b L^c monomials; the coefficient space keeps V-side products
// formal except for the threshold annihilation rules.
class InducedDbar {
 public:
  using OVec = std::map<OpaqueSymbol, Scalar>;
  using Prefix = std::vector<Generator>;
  using Vec = std::map<Prefix, OVec>;

  InducedDbar(int k, int d1, int d2, Substitution bindings = {});

  int k() const { return k_; }
  int d1() const { return d1_; }
  int d2() const { return d2_; }
  const Substitution& bindings() const { return bindings_; }

  bool annihilates(const Generator& g) const;  // G>k, J>d2, L>k+d1
  bool in_prefix_region(const Generator& g) const;

  Vec unit(int base = 0) const;
  Vec make(Prefix prefix, OVec tail) const;
  static bool is_zero(const Vec& v) { return v.empty(); }
  static std::string str(const Vec& v);

  Vec act(const Generator& g, const Vec& v) const;

  // G_{-d1-y} -> first, J_{-d2-z} -> second, L_{-x} -> third.
  ExpTriple triple_of_prefix(const Prefix& p) const;
  Prefix prefix_of_triple(const ExpTriple& t) const;

  ExpTriple degree(const Vec& v) const;  // principal order (o'); throws on 0
  std::vector<ExpTriple> support(const Vec& v) const;

  Generator lemma_operator(Row row, const ExpTriple& deg) const;
  ExpTriple predicted_degree(Row row, const ExpTriple& deg) const;
  // The nonvanishing guard polynomial a lemma step divides by, if any:
  // G_row: alpha + (k+r) - r*beta; L_row: alpha - (d1+p) + (k+d1+p)beta.
  std::optional<Scalar> guard_polynomial(Row row, const ExpTriple& deg) const;
  // Throws std::domain_error if the bound guard polynomial vanishes.
  std::pair<Generator, Vec> lemma_reduction_step(Row row, const Vec& v) const;

 private:
  std::array<long, 3> key(const Generator& g) const;
  void add(Vec& v, const Prefix& p, const OVec& tail, const Scalar& c) const;
  OVec apply_to_symbols(const Generator& g, const OVec& tail) const;

  int k_, d1_, d2_;
  SubalgebraSpec sub_;
  AlgebraSpec spec_;
  Substitution bindings_;
};

}  // namespace ehv
