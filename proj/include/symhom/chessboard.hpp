#pragma once

#include <utility>
#include <vector>

#include "symhom/sym_complex.hpp"

namespace symhom {

// Simplex of the cycle-free chessboard complex: rooks (row, col) with
// 1 <= row, col <= n, pairwise distinct rows and columns, containing no
// closed chain l0 -> l1 -> ... -> l0 (a rook on the diagonal is already a
// closed chain of length one).  Stored ascending by row; reordering carries
// the sign of the permutation.
struct ChessSimplex {
    std::vector<std::pair<int, int>> rooks;

    int dimension() const { return (int)rooks.size() - 1; }
    auto operator<=>(const ChessSimplex&) const = default;
};

bool is_cycle_free(const std::vector<std::pair<int, int>>& rooks);

// The augmented complex Omega^+_n as explicit bases and boundary matrices.
// bases[m+1] lists the m-simplices (bases[0] is the single empty (-1)-chain);
// boundary[d] maps degree d to degree d-1 in that shifted indexing, with the
// boundary of a vertex hitting the empty chain.
struct ChessComplex {
    int n = 0;
    std::vector<std::vector<ChessSimplex>> bases;
    std::vector<SparseIntMatrix> boundary;
};

ChessComplex chessboard_complex(int n);

// The chain isomorphism omega: S Omega^+_{p+1} -> Sym^{(p)}.  An m-simplex
// maps into degree m+1: the stored rook list is reordered into concatenated
// maximal queues (contributing the sign of that reordering), each queue
// (l0,l1),(l1,l2),... becomes the word z_{l0-1} z_{l1-1} ..., and untouched
// letters become singleton blocks.
std::pair<int, SymBasisElement> omega_image(const ChessSimplex& simplex, int p);

// Full degree-indexed translation tables between the two complexes, checked
// to be a bijection on bases.
struct OmegaIso {
    int p = 0;
    ChessComplex chess;
    std::vector<std::vector<SymBasisElement>> sym_bases;   // degree 0..p
    std::vector<std::vector<std::pair<int, int>>> tables;  // degree -> (sign, sym idx)
};
OmegaIso omega_iso(int p);

// Betti numbers of S Omega^+_{p+1} over Q, indexed by suspension degree 0..p.
std::vector<long> chessboard_betti(int p);

}  // namespace symhom
