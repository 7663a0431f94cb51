#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symhom/deltas.hpp"
#include "symhom/exact_linalg.hpp"
#include "symhom/sparse_matrix.hpp"

namespace symhom {

// Basis element of Sym_i^{(p)}: disjoint non-empty ordered blocks covering
// {0..p}, stored with blocks ascending by minimal contained letter.  The
// degree is p minus the number of tensor symbols, i.e. p - (#blocks - 1).
struct SymBasisElement {
    std::vector<std::vector<int>> blocks;

    int p() const;
    int degree() const;
    auto operator<=>(const SymBasisElement&) const = default;
};

// Sorts blocks into canonical order; the sign is the parity of the
// degree-weighted inversion count (adjacent blocks of degrees a and b commute
// up to (-1)^{ab}).
std::pair<int, SymBasisElement> canonicalize(std::vector<std::vector<int>> blocks);

// Homogeneous integer combination at a fixed (p, degree).
using SignedSymElement = std::map<SymBasisElement, Int>;

// Canonical ordered basis of Sym_i^{(p)}; its size is the Lah number
// L(p+1, p-i+1).
std::vector<SymBasisElement> sym_basis(int p, int i);

// Matrix of d: Sym_i -> Sym_{i-1} over the canonical bases (alternating sum
// over cut points, numbered left to right through the blocks).
SparseIntMatrix sym_differential(int p, int i);

// Worker thread count for matrix assembly.  Columns are computed
// independently and merged in order, so the result does not depend on it.
void set_worker_threads(int n);
int worker_threads();

// Differential applied to a single element.
SignedSymElement sym_d(const SymBasisElement& e);
SignedSymElement sym_d(const SignedSymElement& w);

// Betti numbers over Q (characteristic 0) or F_p as coefficients of t^0..t^p.
std::vector<long> poincare_polynomial(int p, long characteristic);
std::string poincare_to_string(const std::vector<long>& coeffs);

// H_i(Sym^{(p)}; Z)
HomologyGroup sym_integral_homology(int p, int i);

// Relabels the formal indeterminates z_l -> z_{sigma(l)} and recanonicalizes.
SignedSymElement permute(const Permutation& sigma, const SignedSymElement& w);

// b_p = sum_j (-1)^{jp} tau_p^j (z_0 z_1 ... z_p), a top-degree cycle.
SignedSymElement b_cycle(int p);

// W boxtimes V: shift V's letters past W's and concatenate.
SignedSymElement boxtimes(const SignedSymElement& w, const SignedSymElement& v);

// Partition of the canonical basis by the multiset of block sizes
// (partitions written in descending order).
using Partition = std::vector<int>;
std::map<Partition, std::vector<SymBasisElement>> decompose_by_partition(int p, int i);

// dim Sym_lambda = (p+1)! / prod_s m_s! over multiplicities m_s of the sizes.
Int partition_type_dim(const Partition& lambda);

// (contains an alternating representation, contains a trivial representation):
// no repeated components, resp. no repeated even components.
std::pair<bool, bool> special_reps(const Partition& lambda);

// Lowest degree of Sym^{(p)} in which an alternating representation occurs:
// p+1-r with r = floor(sqrt(2p + 9/4) - 1/2).
int lowest_alternating_degree(int p);

Int lah_number(int n, int k);

}  // namespace symhom
