#pragma once

#include <string>
#include <vector>

#include "symhom/sparse_matrix.hpp"

namespace symhom {

// Finitely generated abelian group: free rank plus invariant factors in
// divisibility order (each entry > 1 and divides the next).
struct HomologyGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const HomologyGroup&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    // GAP-style diagonal list: invariant factors followed by one 0 per Z factor.
    std::vector<Int> diag_list() const;
    // e.g. "Z^2 + (Z/2)^11 + Z/6", "0" for the trivial group.
    std::string pretty() const;
};

// Direct sum, with the combined torsion renormalized into divisibility order
// (e.g. Z/2 + Z/3 = Z/6).
HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

// Diagonal of the Smith normal form: invariant factors d1 | d2 | ... | dr
// followed by zeros up to min(rows, cols).
std::vector<Int> smith_normal_form(const SparseIntMatrix& m);

// Explicit presentation of Z^rows / im(M): a unimodular change of coordinates
// u (with inverse u_inv) under which the image lattice becomes coordinate-wise.
// order_of_coord[i] is the modulus of coordinate i after the change (0 for a
// free coordinate, 1 for a collapsed one).  The class of y is read off from
// (u*y) componentwise; the generator for coordinate i is column i of u_inv.
struct QuotientPresentation {
    long ambient = 0;
    SparseIntMatrix u;
    SparseIntMatrix u_inv;
    std::vector<Int> order_of_coord;

    // indices of coordinates that carry the group (order != 1), free first is
    // not guaranteed; order follows coordinate index
    std::vector<int> generator_coords() const;
    HomologyGroup group() const;
    // reduce (u*y) coordinates into canonical range [0, order)
    std::vector<Int> reduce(const std::vector<Int>& y) const;
};
QuotientPresentation cokernel_presentation(const SparseIntMatrix& m);

// Rank over Q (characteristic 0) or F_p (characteristic prime).
int rank_over_field(const SparseIntMatrix& m, long characteristic);

// Columns form a lattice basis of ker(m) in Z^cols (the kernel of an integer
// matrix is saturated, so this basis generates all integer kernel vectors).
SparseIntMatrix kernel_basis(const SparseIntMatrix& m);

// Solves k * x = d exactly; throws if no integral solution exists.
// k must have full column rank.
SparseIntMatrix express_in_lattice_basis(const SparseIntMatrix& k,
                                         const SparseIntMatrix& d);

// H = ker(d_out) / im(d_in) via kernel basis restriction: computes a kernel
// lattice basis of d_out, rewrites the columns of d_in in that basis and reads
// the invariant factors off the Smith normal form of the rewritten matrix.
HomologyGroup homology(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in);

// Independent route for the same group: free rank from field ranks, torsion
// from the Smith normal form of d_in alone.  ker(d_out) is a direct summand
// of the ambient lattice, so coker(d_in) splits as H plus a free part and the
// nontrivial invariant factors agree.
HomologyGroup homology_by_rank_and_snf(const SparseIntMatrix& d_out,
                                       const SparseIntMatrix& d_in);

// Canonical column Hermite normal form (zero columns dropped, pivots positive,
// off-pivot entries reduced).  Two integer matrices span the same column
// lattice iff their canonical forms are equal.
SparseIntMatrix column_hnf(const SparseIntMatrix& m);

bool is_prime(long n);

}  // namespace symhom
