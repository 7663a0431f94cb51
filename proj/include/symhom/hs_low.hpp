#pragma once

#include <string>
#include <vector>

#include "symhom/algebra.hpp"
#include "symhom/exact_linalg.hpp"

namespace symhom {

// The low-degree complex 0 <- A <- A^{(x)3} <- A^{(x)4} (+) A over the
// canonical tuple bases:
//   d1: a(x)b(x)c -> abc - cba
//   d2: a(x)b(x)c(x)d -> ab(x)c(x)d + d(x)ca(x)b + bca(x)1(x)d + d(x)bc(x)a
//       a -> 1(x)a(x)1
struct PartialComplex {
    SparseIntMatrix d1;  // dim x dim^3
    SparseIntMatrix d2;  // dim^3 x (dim^4 + dim)
};

// Builds the boundary matrices and asserts d1*d2 = 0.
PartialComplex build_partial_complex(const FinAlgebra& a);

// HS_0(A) = coker d1 (= A/([A,A])).
HomologyGroup hs0(const FinAlgebra& a);

// Independent route: saturate the commutator span [A,A] into the two-sided
// ideal by repeated basis multiplication, then quotient.
HomologyGroup hs0_via_ideal(const FinAlgebra& a, int* rounds_taken = nullptr);

// Verifies that the span of {abc - cba} is already closed under one round of
// left/right multiplication (so the d1 image is the full ideal without
// saturation).
bool triple_span_is_ideal(const FinAlgebra& a);

// HS_1(A) = ker d1 / im d2.
HomologyGroup hs1(const FinAlgebra& a);

// Per-layer results for a commutative monoid grading.  Layers appear in basis
// order; the absorbing-zero layer, when present, is reported last.
struct LayeredReport {
    struct Layer {
        std::string label;
        HomologyGroup hs0;
        HomologyGroup hs1;
    };
    std::vector<Layer> layers;

    HomologyGroup merged_hs0() const;
    HomologyGroup merged_hs1() const;
};
LayeredReport hs_layered(const FinAlgebra& a);

// HS_1(Z[t])_{t^m}, computed as the s^m layer of the cyclic monoid algebra
// Z[M^{m+2}_{m+1}].
HomologyGroup free_monoid_layer(int m);

// Action of HS_0(A) on HS_1(A).  Generators of HS_1 are the coordinates of a
// fixed presentation (kernel-basis cycle representatives); action matrices
// give the image of each generator under multiplication by each algebra
// basis element, reduced in that presentation.  The left and right
// chain-level formulas must induce the same maps.
struct Hs0ActionReport {
    HomologyGroup group;
    std::vector<Int> generator_orders;            // 0 = free generator
    std::vector<SparseIntMatrix> left_action;     // one per algebra basis element
    std::vector<SparseIntMatrix> right_action;
    bool left_equals_right = false;
    bool unit_acts_as_identity = false;
};
Hs0ActionReport hs0_action_on_hs1(const FinAlgebra& a);

// The cyclic-homology comparison in low degrees: the partial cyclic complex
// 0 <- A <- A^{(x)2} <- A^{(x)3} (+) A, the chain maps gamma, the commuting
// squares, and the induced maps HC_i -> HS_i in presentation coordinates.
struct CyclicComparison {
    SparseIntMatrix d1_cyc, d2_cyc;
    SparseIntMatrix gamma1, gamma2;
    bool squares_commute = false;
    // the same check against the alternate transcription of d2 (second term
    // negated); kept as a diagnostic of the two printed versions
    bool variant_commutes = false;
    std::string variant_witness;
    HomologyGroup hc0, hc1, hs0, hs1;
    SparseIntMatrix hc0_to_hs0, hc1_to_hs1;
};
CyclicComparison cyclic_low_complex(const FinAlgebra& a);

}  // namespace symhom
