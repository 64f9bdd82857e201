#pragma once

#include "ehv/induced.hpp"
#include "ehv/vertex.hpp"

namespace ehv::suites {

// Folds sub-reports into one report; failure inputs gain a "part" tag.
CheckReport merge(const std::string& suite, const std::vector<CheckReport>& parts);

CheckReport jacobi(int window, bool corrupt = false);

// phi_1 (p = 1 and 3), phi_2, phi_3, phi_4 homomorphism checks, plus the
// phi_4 defect property: without ell3 = 2*ell2 the defect on (L_m, J_{-m})
// is a nonzero multiple of (ell3 - 2*ell2).
CheckReport isomorphisms(int window);

CheckReport embeddings(int window, const Rational& bp_level);

// Commutator identity, random associativity, idempotent normalize and the
// order_31/order_32 round trip.
CheckReport pbw(int window, int samples, unsigned long seed);

CheckReport vacuum_axioms(int window, int samples, unsigned long seed,
                          int degree_cap);
CheckReport vacuum_dimensions(int nmax);

CheckReport vertex(int window, int degree_cap);

// L_d reduction machinery over the universal V: stability, truncated
// injectivity, per-row degree predictions on sampled vectors.
CheckReport lemma_d(int k, int d, int l, int per_row, unsigned long seed);
// Full reductions to V on random prefixes of bounded weight.
CheckReport reduction_d(int k, int d, int l, int count, unsigned long seed,
                        int weight_cap, int max_steps);

// L_dbar rows in opaque-V mode (F -> 0, ell3 symbolic).
CheckReport lemma_dbar(int k, int d1, int d2, int per_row, unsigned long seed);
// Adversarial bindings must trip the coefficient-nonvanishing guards, and a
// row/hypothesis mismatch must be rejected.
CheckReport lemma_dbar_guards();

// Annihilation bound for (k,l,m) in {(1,1,1),(2,1,3)} on all descendants
// of weight <= weight_cap.
CheckReport bound(int window, int weight_cap = 4);

}  // namespace ehv::suites
