#include "symhom/chessboard.hpp"

#include <algorithm>
#include <map>

#include "symhom/errors.hpp"

namespace symhom {

bool is_cycle_free(const std::vector<std::pair<int, int>>& rooks) {
    // successor map of the partial injection row -> col
    std::map<int, int> next;
    for (const auto& [i, j] : rooks) next[i] = j;
    for (const auto& [start, unused] : next) {
        int cur = start;
        for (std::size_t steps = 0; steps <= next.size(); ++steps) {
            auto it = next.find(cur);
            if (it == next.end()) break;
            cur = it->second;
            if (cur == start) return false;
        }
    }
    return true;
}

namespace {

void gen_simplices(int n, int m, int min_row, std::vector<std::pair<int, int>>& cur,
                   std::vector<bool>& col_used, std::vector<ChessSimplex>& out) {
    if ((int)cur.size() == m + 1) {
        ChessSimplex s;
        s.rooks = cur;
        out.push_back(std::move(s));
        return;
    }
    int need = m + 1 - (int)cur.size();
    for (int i = min_row; i + need - 1 <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (col_used[j]) continue;
            cur.push_back({i, j});
            if (is_cycle_free(cur)) {
                col_used[j] = true;
                gen_simplices(n, m, i + 1, cur, col_used, out);
                col_used[j] = false;
            }
            cur.pop_back();
        }
}

}  // namespace

ChessComplex chessboard_complex(int n) {
    if (n < 1) throw DegreeOutOfRange("chessboard_complex: n < 1");
    ChessComplex cx;
    cx.n = n;
    cx.bases.push_back({ChessSimplex{}});  // the empty (-1)-chain
    for (int m = 0;; ++m) {
        std::vector<ChessSimplex> simplices;
        std::vector<std::pair<int, int>> cur;
        std::vector<bool> col_used(n + 1, false);
        gen_simplices(n, m, 1, cur, col_used, simplices);
        if (simplices.empty()) break;
        std::sort(simplices.begin(), simplices.end());
        cx.bases.push_back(std::move(simplices));
    }
    for (std::size_t d = 1; d < cx.bases.size(); ++d) {
        const auto& domain = cx.bases[d];
        const auto& codomain = cx.bases[d - 1];
        SparseIntMatrix b((int)codomain.size(), (int)domain.size());
        for (std::size_t col = 0; col < domain.size(); ++col) {
            for (std::size_t s = 0; s < domain[col].rooks.size(); ++s) {
                ChessSimplex face;
                face.rooks = domain[col].rooks;
                face.rooks.erase(face.rooks.begin() + (long)s);
                auto it = std::lower_bound(codomain.begin(), codomain.end(), face);
                b.add((int)(it - codomain.begin()), (int)col, Int(s % 2 == 0 ? 1 : -1));
            }
        }
        cx.boundary.push_back(std::move(b));
    }
    return cx;
}

std::pair<int, SymBasisElement> omega_image(const ChessSimplex& simplex, int p) {
    const auto& rooks = simplex.rooks;
    if (!is_cycle_free(rooks)) throw NotCycleFree("omega: simplex contains a cycle");
    // queue structure: predecessor/successor on letters 1..p+1
    std::map<int, std::size_t> rook_at_row;
    std::map<int, int> has_pred;
    for (std::size_t s = 0; s < rooks.size(); ++s) {
        auto [i, j] = rooks[s];
        if (i < 1 || i > p + 1 || j < 1 || j > p + 1)
            throw NotCycleFree("omega: rook outside the board");
        rook_at_row[i] = s;
        has_pred[j] = 1;
    }
    // maximal queues start at rows with no incoming rook; collect the
    // reordering permutation of the stored list while walking them
    std::vector<int> perm;
    std::vector<std::vector<int>> blocks;
    std::vector<bool> letter_used(p + 2, false);
    for (std::size_t s = 0; s < rooks.size(); ++s) {
        int start = rooks[s].first;
        if (has_pred.count(start)) continue;
        std::vector<int> word = {start - 1};
        int cur = start;
        for (;;) {
            auto it = rook_at_row.find(cur);
            if (it == rook_at_row.end()) break;
            perm.push_back((int)it->second);
            cur = rooks[it->second].second;
            word.push_back(cur - 1);
        }
        for (int l : word) letter_used[l + 1] = true;
        blocks.push_back(std::move(word));
    }
    for (int l = 0; l <= p; ++l)
        if (!letter_used[l + 1]) blocks.push_back({l});
    // parity of the reordering of the stored rook list into queue order
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;
    auto [cano_sign, elt] = canonicalize(std::move(blocks));
    return {(inversions % 2 == 0 ? 1 : -1) * cano_sign, std::move(elt)};
}

OmegaIso omega_iso(int p) {
    if (p < 0) throw DegreeOutOfRange("omega_iso: p < 0");
    OmegaIso iso;
    iso.p = p;
    iso.chess = chessboard_complex(p + 1);
    for (int i = 0; i <= p; ++i) iso.sym_bases.push_back(sym_basis(p, i));
    iso.tables.resize(iso.chess.bases.size());
    for (std::size_t d = 0; d < iso.chess.bases.size(); ++d) {
        const auto& sym = iso.sym_bases.at(d);
        std::vector<bool> hit(sym.size(), false);
        for (const ChessSimplex& s : iso.chess.bases[d]) {
            auto [sign, elt] = omega_image(s, p);
            auto it = std::lower_bound(sym.begin(), sym.end(), elt);
            if (it == sym.end() || *it != elt)
                throw Error("Internal", "omega image missing from Sym basis");
            int idx = (int)(it - sym.begin());
            if (hit[idx]) throw Error("Internal", "omega image collision");
            hit[idx] = true;
            iso.tables[d].push_back({sign, idx});
        }
        if (iso.chess.bases[d].size() != sym.size())
            throw Error("Internal", "omega is not a bijection on bases");
    }
    return iso;
}

std::vector<long> chessboard_betti(int p) {
    ChessComplex cx = chessboard_complex(p + 1);
    std::vector<long> dims(p + 1, 0), ranks(p + 2, 0);
    for (std::size_t d = 0; d < cx.bases.size(); ++d) dims.at(d) = (long)cx.bases[d].size();
    for (std::size_t d = 0; d < cx.boundary.size(); ++d)
        ranks.at(d + 1) = rank_over_field(cx.boundary[d], 0);
    std::vector<long> betti(p + 1);
    for (int d = 0; d <= p; ++d) betti[d] = dims[d] - ranks[d] - ranks[d + 1];
    return betti;
}

}  // namespace symhom
