#pragma once

#include "ehv/modules.hpp"

namespace ehv {

// The three generating fields on the vacuum module, with the usual mode
// shifts: L(x) = sum L_n x^{-n-2}, J(x), G(x) = sum X_n x^{-n-1}.
enum class FieldId { Lfield, Jfield, Gfield };

// The i-th product of the field's generating vector acts as this generator:
// (L_{-2}1)_i = L_{i-1}, (J_{-1}1)_i = J_i, (G_{-1}1)_i = G_i.
Generator mode_generator(FieldId a, int i);

QuotientModule::Vec mode_product(const QuotientModule& vac, FieldId a, int i,
                                 const QuotientModule::Vec& v);

// The six generating-field product identities (the full i-th product table
// on the generators), for i in [0, window], on the alpha = beta vacuum module.
CheckReport product_table_check(int window);

// [a_m, b_n]v computed by two-sided mode application equals the Lie bracket
// applied to v, over all field pairs, |m|,|n| <= window, deg(v) <= cap.
CheckReport field_commutator_check(int window, int degree_cap);

// With alpha = beta = 0, L_0 acts on the degree-n space as n.
CheckReport l0_grading_check(int degree_cap);

// mode_product(a, i, .) maps degree n into degree n + wt(a) - i - 1
// (wt(L) = 2, wt(J) = wt(G) = 1).
CheckReport mode_grading_check(int window, int degree_cap);

}  // namespace ehv
