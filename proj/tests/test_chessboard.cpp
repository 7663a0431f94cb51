#include <doctest.h>

#include "symhom/chessboard.hpp"
#include "symhom/errors.hpp"

using namespace symhom;

TEST_CASE("cycle detection") {
    CHECK(is_cycle_free({{1, 2}}));
    CHECK(is_cycle_free({{1, 2}, {2, 3}}));
    // a rook on the diagonal closes a chain of length one
    CHECK_FALSE(is_cycle_free({{1, 1}}));
    // 1 -> 2 -> 1
    CHECK_FALSE(is_cycle_free({{1, 2}, {2, 1}}));
    // 1 -> 2 -> 3 -> 1
    CHECK_FALSE(is_cycle_free({{1, 2}, {2, 3}, {3, 1}}));
    // chain into a far cycle: 4 -> 1 -> 2 -> 3 -> 1
    CHECK_FALSE(is_cycle_free({{1, 2}, {2, 3}, {3, 1}, {4, 1}}));
}

TEST_CASE("the 2x2 board") {
    ChessComplex cx = chessboard_complex(2);
    REQUIRE(cx.bases.size() == 2);
    CHECK(cx.bases[0].size() == 1);  // empty chain
    REQUIRE(cx.bases[1].size() == 2);
    CHECK(cx.bases[1][0].rooks == std::vector<std::pair<int, int>>({{1, 2}}));
    CHECK(cx.bases[1][1].rooks == std::vector<std::pair<int, int>>({{2, 1}}));
}

TEST_CASE("boundary squares to zero, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        ChessComplex cx = chessboard_complex(n);
        for (std::size_t d = 1; d < cx.boundary.size(); ++d)
            CHECK((cx.boundary[d - 1] * cx.boundary[d]).is_zero());
    }
}

TEST_CASE("omega on distinguished elements") {
    // empty board maps to the fully separated tensor
    auto [s0, e0] = omega_image(ChessSimplex{}, 3);
    CHECK(s0 == 1);
    CHECK(e0.blocks == std::vector<std::vector<int>>({{0}, {1}, {2}, {3}}));
    // single rook (i, j) becomes the word z_{i-1} z_{j-1} plus singletons
    auto [s1, e1] = omega_image(ChessSimplex{{{2, 4}}}, 3);
    CHECK(s1 == 1);
    CHECK(e1.blocks == std::vector<std::vector<int>>({{0}, {1, 3}, {2}}));
    CHECK_THROWS_AS(omega_image(ChessSimplex{{{1, 2}, {2, 1}}}, 3), NotCycleFree);
}

TEST_CASE("omega is a chain isomorphism, p <= 4") {
    for (int p = 0; p <= 4; ++p) {
        OmegaIso iso = omega_iso(p);  // constructor validates bijectivity
        // translation matrices per degree
        std::vector<SparseIntMatrix> omega_mat;
        for (std::size_t d = 0; d < iso.tables.size(); ++d) {
            SparseIntMatrix m((int)iso.sym_bases[d].size(),
                              (int)iso.chess.bases[d].size());
            for (std::size_t c = 0; c < iso.tables[d].size(); ++c)
                m.set(iso.tables[d][c].second, (int)c, Int(iso.tables[d][c].first));
            omega_mat.push_back(std::move(m));
        }
        for (std::size_t d = 1; d < iso.tables.size(); ++d) {
            SparseIntMatrix lhs = sym_differential(p, (int)d) * omega_mat[d];
            SparseIntMatrix rhs = omega_mat[d - 1] * iso.chess.boundary[d - 1];
            CAPTURE(p);
            CAPTURE(d);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("suspension Betti numbers equal the Sym Betti numbers, p <= 4") {
    for (int p = 0; p <= 4; ++p)
        CHECK(chessboard_betti(p) == poincare_polynomial(p, 0));
}
