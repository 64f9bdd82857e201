#pragma once

#include <optional>
#include <vector>

#include "ehv/exponents.hpp"
#include "ehv/pbw.hpp"

namespace ehv {

// Cyclic module U(𝔤)/I where I is the left ideal generated by all G_n with
// n >= g_kill, J_n with n >= j_kill and L_n with n >= l_kill. Vectors are
// combinations of creation monomials applied to the cyclic vector; killed
// generators sort to the right during normalization and vanish there, and
// the centrals act by the level parameters ell_i. An optional domain
// restricts which generators are allowed to act (e.g. only 𝔏_d).
class QuotientModule {
 public:
  using Mono = std::vector<Generator>;  // sorted creation word
  using Vec = std::map<Mono, Scalar>;

  QuotientModule(int g_kill, int j_kill, int l_kill, GeneratorOrder order,
                 Substitution bindings = {},
                 std::optional<SubalgebraSpec> domain = std::nullopt);

  bool kills(const Generator& g) const;
  bool in_domain(const Generator& g) const;
  const Substitution& bindings() const { return bindings_; }

  static Vec unit() { return {{Mono{}, Scalar(1)}}; }
  static void add(Vec& v, const Mono& m, const Scalar& c);
  static Vec scale(const Vec& v, const Scalar& c);
  static bool is_zero(const Vec& v) { return v.empty(); }
  static std::string str(const Vec& v);

  Vec act(const Generator& g, const Vec& v) const;
  // Applies the word right to left (w[0] acts last).
  Vec act_word(const std::vector<Generator>& w, const Vec& v) const;
  Vec act_elem(const LieElement& e, const Vec& v) const;

  // The annihilator rules survive commutation: [killed, domain gen] lies in
  // the span of killed generators and centrals for all pairs in the window.
  CheckReport stability_check(int window) const;
  // Weaker property, enough for the induced-module basis: the killed set is
  // closed under bracket (modulo centrals). The vacuum needs alpha = beta here.
  CheckReport annihilator_closure_check(int window) const;
  // g.(h.v) - h.(g.v) = [g,h].v on sampled generators and vectors.
  CheckReport module_axiom_check(int window, int samples, unsigned long seed,
                                 int max_creation_weight) const;

  // Creation (non-killed) domain generators with |index| <= window.
  std::vector<Generator> creation_pool(int window) const;

 private:
  struct WorkTerm {
    Scalar coeff;
    std::vector<Generator> word;
  };
  std::array<long, 3> key(const Generator& g) const;
  Vec act_mono(const Generator& g, const Mono& m, const Scalar& c) const;

  int g_kill_, j_kill_, l_kill_;
  GeneratorOrder order_;
  Substitution bindings_;
  std::optional<SubalgebraSpec> domain_;
  AlgebraSpec spec_;
};

// V_𝔏(ℓ,0): kills L_n (n >= -1), J_m, G_m (m >= 0); basis monomials are
// G-block J-block L-block; requires alpha = beta, imposed as beta -> alpha.
QuotientModule vacuum_module();

// dim V_𝔏(ℓ,0)_(n) as the q^n coefficient of
// prod_{k>=2}(1-q^k)^{-1} * prod_{k>=1}(1-q^k)^{-2}.
long graded_dimension(int n);
// Independent enumeration of the degree-n basis monomials.
std::vector<QuotientModule::Mono> enumerate_vacuum_basis(int n);

// The universal coefficient module over 𝔏_d: U(𝔏_d) modulo the left ideal
// generated by {G_{k+i}, J_{k+d+i}, L_{l+i} : i >= 1}. Requires l > k+d > 0.
class UniversalV {
 public:
  UniversalV(int k, int d, int l, Substitution bindings = {});

  int k() const { return k_; }
  int d() const { return d_; }
  int l() const { return l_; }
  const QuotientModule& module() const { return module_; }

  // Creation monomials of total weight <= W, weight(g) = 1 + |index|.
  std::vector<QuotientModule::Mono> basis_up_to_weight(int W) const;

  // Left multiplication by G_k (kind = G) or L_l (kind = L) is injective on
  // the weight-<=W truncation: rank of the induced linear map after a random
  // rational specialization of the parameters.
  CheckReport injectivity_check(GenKind kind, int W, unsigned long seed) const;

 private:
  int k_, d_, l_;
  QuotientModule module_;
};

// Model for the annihilation-bound claim: w is the cyclic vector of
// U(𝔏)/(left ideal of 𝔏^{(k,l,m)}), descendants are
// prod G_{k-s}^{kv_s} prod J_{l-s}^{iv_s} prod L_{m-s}^{jv_s} . w, and
// X_n must kill them for every X in {L,J,G} and
// n > k + l + m + w(kv+iv+jv), checked up to bound+window.
CheckReport annihilation_bound_check(int k, int l, int m,
                                     const std::vector<ExpTriple>& descendants,
                                     int window);

}  // namespace ehv
