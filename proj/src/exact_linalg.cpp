#include "symhom/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "symhom/errors.hpp"

namespace symhom {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// xgcd: g = x*a + y*b, g >= 0
void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Row-major elimination workspace with per-column occupancy tracking.
struct RowWorkspace {
    int rows, cols;
    std::vector<std::map<int, Int>> row;
    std::vector<std::set<int>> col_rows;
    std::vector<bool> row_done, col_done;

    explicit RowWorkspace(const SparseIntMatrix& m)
        : rows(m.rows()),
          cols(m.cols()),
          row(m.rows()),
          col_rows(m.cols()),
          row_done(m.rows(), false),
          col_done(m.cols(), false) {
        for (const auto& [rc, v] : m.entries()) {
            row[rc.first][rc.second] = v;
            col_rows[rc.second].insert(rc.first);
        }
    }

    Int get(int r, int c) const {
        auto it = row[r].find(c);
        return it == row[r].end() ? Int(0) : it->second;
    }

    void set(int r, int c, const Int& v) {
        if (v == 0) {
            if (row[r].erase(c)) col_rows[c].erase(r);
        } else {
            auto [it, inserted] = row[r].insert_or_assign(c, v);
            (void)it;
            if (inserted) col_rows[c].insert(r);
        }
    }

    // row[dst] -= q*row[src]
    void row_axpy(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (const auto& [c, v] : row[src]) {
            auto it = row[dst].find(c);
            if (it == row[dst].end()) {
                row[dst].emplace(c, -q * v);
                col_rows[c].insert(dst);
            } else {
                it->second -= q * v;
                if (it->second == 0) {
                    row[dst].erase(it);
                    col_rows[c].erase(dst);
                }
            }
        }
    }

    // (row[r1], row[r2]) <- (a*row[r1] + b*row[r2], c*row[r1] + d*row[r2])
    void row_transform2(int r1, int r2, const Int& a, const Int& b, const Int& c,
                        const Int& d) {
        std::map<int, Int> n1, n2;
        auto accumulate = [](std::map<int, Int>& dst, const std::map<int, Int>& src,
                             const Int& f) {
            if (f == 0) return;
            for (const auto& [cc, v] : src) {
                auto it = dst.find(cc);
                if (it == dst.end())
                    dst.emplace(cc, f * v);
                else {
                    it->second += f * v;
                    if (it->second == 0) dst.erase(it);
                }
            }
        };
        accumulate(n1, row[r1], a);
        accumulate(n1, row[r2], b);
        accumulate(n2, row[r1], c);
        accumulate(n2, row[r2], d);
        for (const auto& [cc, v] : row[r1]) col_rows[cc].erase(r1);
        for (const auto& [cc, v] : row[r2]) col_rows[cc].erase(r2);
        row[r1] = std::move(n1);
        row[r2] = std::move(n2);
        for (const auto& [cc, v] : row[r1]) col_rows[cc].insert(r1);
        for (const auto& [cc, v] : row[r2]) col_rows[cc].insert(r2);
    }

    // (col[c1], col[c2]) <- (a*col[c1] + b*col[c2], c*col[c1] + d*col[c2])
    void col_transform2(int c1, int c2, const Int& a, const Int& b, const Int& c,
                        const Int& d) {
        std::set<int> touched = col_rows[c1];
        touched.insert(col_rows[c2].begin(), col_rows[c2].end());
        for (int r : touched) {
            Int v1 = get(r, c1), v2 = get(r, c2);
            set(r, c1, a * v1 + b * v2);
            set(r, c2, c * v1 + d * v2);
        }
    }

    void divide_row(int r, const Int& g) {
        if (g == 1) return;
        for (auto& [c, v] : row[r]) v /= g;
    }

    Int row_content(int r) const {
        Int g = 0;
        for (const auto& [c, v] : row[r]) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    // Deterministic pivot choice: minimal Markowitz cost
    // (row_nnz-1)*(col_nnz-1), then minimal |value|, then lexicographic (r,c).
    bool find_pivot(int& pr, int& pc) const {
        bool found = false;
        long best_cost = 0;
        Int best_abs;
        for (int r = 0; r < rows; ++r) {
            if (row_done[r] || row[r].empty()) continue;
            long rn = (long)row[r].size() - 1;
            for (const auto& [c, v] : row[r]) {
                long cost = rn * ((long)col_rows[c].size() - 1);
                Int a = abs_int(v);
                if (!found || cost < best_cost || (cost == best_cost && a < best_abs)) {
                    found = true;
                    best_cost = cost;
                    best_abs = a;
                    pr = r;
                    pc = c;
                    if (cost == 0 && a == 1) return true;
                }
            }
        }
        return found;
    }
};

using RowOpHook = std::function<void(int, int, const Int&)>;           // axpy dst,src,q
using RowTf2Hook = std::function<void(int, int, const Int&, const Int&, const Int&,
                                      const Int&)>;  // 2x2 transform

// Clears the pivot row and column at (pr, pc) by unimodular row and column
// operations; the surviving pivot value is returned.  Column operations may
// only touch the pivot row once the pivot column is clear, so they reduce to
// entry erasure plus occasional gcd column transforms that re-dirty the
// column (the loop re-runs until stable; |pivot| strictly decreases on every
// gcd step, so this terminates).
Int process_pivot(RowWorkspace& w, int pr, int pc, const RowOpHook& on_axpy,
                  const RowTf2Hook& on_tf2) {
    for (;;) {
        // Clear pivot column with row operations.
        for (;;) {
            int r = -1;
            for (int rr : w.col_rows[pc])
                if (rr != pr) {
                    r = rr;
                    break;
                }
            if (r < 0) break;
            Int v = w.get(pr, pc), a = w.get(r, pc);
            if (a % v == 0) {
                Int q = a / v;
                w.row_axpy(r, pr, q);
                if (on_axpy) on_axpy(r, pr, q);
            } else {
                Int g, x, y;
                xgcd(v, a, g, x, y);
                Int mb = -(a / g), md = v / g;
                w.row_transform2(pr, r, x, y, mb, md);
                if (on_tf2) on_tf2(pr, r, x, y, mb, md);
            }
        }
        // Clear pivot row with column operations.
        bool dirtied = false;
        for (;;) {
            Int v = w.get(pr, pc);
            int c = -1;
            for (const auto& [cc, vv] : w.row[pr])
                if (cc != pc) {
                    c = cc;
                    break;
                }
            if (c < 0) break;
            Int b = w.get(pr, c);
            if (b % v == 0) {
                // col[c] -= (b/v)*col[pc]; pivot column is clear, so only the
                // pivot row changes.
                w.set(pr, c, Int(0));
            } else {
                Int g, x, y;
                xgcd(v, b, g, x, y);
                w.col_transform2(pc, c, x, y, -(b / g), v / g);
                dirtied = true;
                break;
            }
        }
        if (!dirtied) return w.get(pr, pc);
    }
}

void normalize_divisibility(std::vector<Int>& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i] == 0 && d[i + 1] != 0) {
                std::swap(d[i], d[i + 1]);
                changed = true;
            } else if (d[i] != 0 && d[i + 1] % d[i] != 0) {
                Int g;
                mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[i + 1].get_mpz_t());
                Int l = d[i] / g * d[i + 1];
                d[i] = g;
                d[i + 1] = l;
                changed = true;
            }
        }
    }
}

// Returns (pivot_row, |pivot_value|) pairs in retirement order.
std::vector<std::pair<int, Int>> snf_core(const SparseIntMatrix& m,
                                          const RowOpHook& on_axpy,
                                          const RowTf2Hook& on_tf2) {
    RowWorkspace w(m);
    std::vector<std::pair<int, Int>> pivots;
    int pr, pc;
    while (w.find_pivot(pr, pc)) {
        Int v = process_pivot(w, pr, pc, on_axpy, on_tf2);
        pivots.push_back({pr, abs_int(v)});
        w.set(pr, pc, Int(0));
        w.row_done[pr] = true;
        w.col_done[pc] = true;
    }
    return pivots;
}

}  // namespace

std::vector<Int> HomologyGroup::diag_list() const {
    std::vector<Int> d = torsion;
    d.insert(d.end(), (std::size_t)free_rank, Int(0));
    return d;
}

std::string HomologyGroup::pretty() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        sep();
        if (j - i == 1)
            os << "Z/" << torsion[i].get_str();
        else
            os << "(Z/" << torsion[i].get_str() << ")^" << (j - i);
        i = j;
    }
    return os.str();
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
    HomologyGroup out;
    out.free_rank = a.free_rank + b.free_rank;
    std::vector<Int> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    normalize_divisibility(t);
    for (const Int& d : t)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

std::vector<Int> smith_normal_form(const SparseIntMatrix& m) {
    std::vector<Int> diag;
    for (auto& [r, v] : snf_core(m, nullptr, nullptr)) diag.push_back(v);
    diag.resize((std::size_t)std::min(m.rows(), m.cols()), Int(0));
    normalize_divisibility(diag);
    return diag;
}

std::vector<int> QuotientPresentation::generator_coords() const {
    std::vector<int> idx;
    for (int i = 0; i < (int)order_of_coord.size(); ++i)
        if (order_of_coord[i] != 1) idx.push_back(i);
    return idx;
}

HomologyGroup QuotientPresentation::group() const {
    HomologyGroup h;
    std::vector<Int> t;
    for (const Int& d : order_of_coord) {
        if (d == 0)
            ++h.free_rank;
        else if (d > 1)
            t.push_back(d);
    }
    normalize_divisibility(t);
    for (const Int& d : t)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

std::vector<Int> QuotientPresentation::reduce(const std::vector<Int>& y) const {
    if ((long)y.size() != ambient) throw ShapeMismatch("reduce: wrong vector length");
    std::vector<Int> z(ambient, Int(0));
    for (const auto& [rc, v] : u.entries()) z[rc.first] += v * y[rc.second];
    for (long i = 0; i < ambient; ++i) {
        const Int& d = order_of_coord[i];
        if (d == 1)
            z[i] = 0;
        else if (d > 1)
            mpz_fdiv_r(z[i].get_mpz_t(), z[i].get_mpz_t(), d.get_mpz_t());
    }
    return z;
}

QuotientPresentation cokernel_presentation(const SparseIntMatrix& m) {
    int n = m.rows();
    // u as rows, u_inv as columns; both start as the identity.
    std::vector<std::map<int, Int>> u(n), uinv_col(n);
    for (int i = 0; i < n; ++i) {
        u[i][i] = 1;
        uinv_col[i][i] = 1;
    }
    auto axpy_map = [](std::map<int, Int>& dst, const std::map<int, Int>& src,
                       const Int& f) {
        if (f == 0) return;
        for (const auto& [k, v] : src) {
            auto it = dst.find(k);
            if (it == dst.end())
                dst.emplace(k, f * v);
            else {
                it->second += f * v;
                if (it->second == 0) dst.erase(it);
            }
        }
    };
    auto tf2_map = [&](std::map<int, Int>& m1, std::map<int, Int>& m2, const Int& a,
                       const Int& b, const Int& c, const Int& d) {
        std::map<int, Int> n1, n2;
        axpy_map(n1, m1, a);
        axpy_map(n1, m2, b);
        axpy_map(n2, m1, c);
        axpy_map(n2, m2, d);
        m1 = std::move(n1);
        m2 = std::move(n2);
    };
    RowOpHook on_axpy = [&](int dst, int src, const Int& q) {
        // row_dst -= q*row_src on u; inverse column op on u_inv.
        axpy_map(u[dst], u[src], -q);
        axpy_map(uinv_col[src], uinv_col[dst], q);
    };
    RowTf2Hook on_tf2 = [&](int r1, int r2, const Int& a, const Int& b, const Int& c,
                            const Int& d) {
        tf2_map(u[r1], u[r2], a, b, c, d);
        // inverse acts on the stored columns: det is +-1
        Int det = a * d - b * c;
        tf2_map(uinv_col[r1], uinv_col[r2], det * d, det * (-c), det * (-b), det * a);
    };
    QuotientPresentation out;
    out.ambient = n;
    out.order_of_coord.assign(n, Int(0));
    for (const auto& [r, v] : snf_core(m, on_axpy, on_tf2)) out.order_of_coord[r] = v;
    out.u = SparseIntMatrix(n, n);
    out.u_inv = SparseIntMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        for (const auto& [j, v] : u[i]) out.u.set(i, j, v);
        for (const auto& [j, v] : uinv_col[i]) out.u_inv.set(j, i, v);
    }
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

int rank_char_zero(const SparseIntMatrix& m) {
    RowWorkspace w(m);
    int rank = 0;
    int pr, pc;
    while (w.find_pivot(pr, pc)) {
        Int v = w.get(pr, pc);
        std::vector<int> rows_to_clear(w.col_rows[pc].begin(), w.col_rows[pc].end());
        for (int r : rows_to_clear) {
            if (r == pr) continue;
            Int a = w.get(r, pc);
            // cross-multiplication keeps everything integral; stripping the
            // content afterwards keeps entries small
            std::map<int, Int> nr;
            for (const auto& [c, x] : w.row[r]) nr[c] = v * x;
            for (const auto& [c, x] : w.row[pr]) {
                auto it = nr.find(c);
                if (it == nr.end())
                    nr.emplace(c, -a * x);
                else {
                    it->second -= a * x;
                    if (it->second == 0) nr.erase(it);
                }
            }
            for (const auto& [c, x] : w.row[r]) w.col_rows[c].erase(r);
            w.row[r] = std::move(nr);
            for (const auto& [c, x] : w.row[r]) w.col_rows[c].insert(r);
            Int g = w.row_content(r);
            if (g > 1) w.divide_row(r, g);
        }
        for (const auto& [c, x] : w.row[pr]) w.col_rows[c].erase(pr);
        w.row[pr].clear();
        w.row_done[pr] = true;
        w.col_done[pc] = true;
        ++rank;
    }
    return rank;
}

int rank_mod_p(const SparseIntMatrix& m, long p) {
    std::vector<std::map<int, long>> row(m.rows());
    std::vector<std::set<int>> col_rows(m.cols());
    for (const auto& [rc, v] : m.entries()) {
        long x = (long)mpz_fdiv_ui(v.get_mpz_t(), (unsigned long)p);
        if (x != 0) {
            row[rc.first][rc.second] = x;
            col_rows[rc.second].insert(rc.first);
        }
    }
    auto mulmod = [p](long a, long b) { return (long)((__int128)a * b % p); };
    auto invmod = [&](long a) {
        long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        return t < 0 ? t + p : t;
    };
    int rank = 0;
    std::vector<bool> row_done(m.rows(), false);
    for (;;) {
        // cheapest column first, then lowest row
        int pc = -1;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (int c = 0; c < m.cols(); ++c)
            if (!col_rows[c].empty() && col_rows[c].size() < best) {
                best = col_rows[c].size();
                pc = c;
            }
        if (pc < 0) break;
        int pr = *col_rows[pc].begin();
        long inv = invmod(row[pr][pc]);
        std::vector<int> tr(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : tr) {
            if (r == pr) continue;
            long f = mulmod(row[r][pc], inv);
            for (const auto& [c, x] : row[pr]) {
                long& dst = row[r][c];
                bool was = dst != 0;
                dst = (dst - mulmod(f, x)) % p;
                if (dst < 0) dst += p;
                if (dst == 0) {
                    row[r].erase(c);
                    if (was) col_rows[c].erase(r);
                } else if (!was) {
                    col_rows[c].insert(r);
                }
            }
        }
        for (const auto& [c, x] : row[pr]) col_rows[c].erase(pr);
        row[pr].clear();
        row_done[pr] = true;
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_over_field(const SparseIntMatrix& m, long characteristic) {
    if (characteristic == 0) return rank_char_zero(m);
    if (!is_prime(characteristic))
        throw CompositeCharacteristic(std::to_string(characteristic));
    return rank_mod_p(m, characteristic);
}

namespace {

// Column-major workspace for kernel and HNF computations.
struct ColWorkspace {
    int rows = 0;
    std::vector<std::map<int, Int>> col;  // col -> (row -> val)

    Int get(int c, int r) const {
        auto it = col[c].find(r);
        return it == col[c].end() ? Int(0) : it->second;
    }
    // col[dst] -= q*col[src]
    void axpy(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (const auto& [r, v] : col[src]) {
            auto it = col[dst].find(r);
            if (it == col[dst].end())
                col[dst].emplace(r, -q * v);
            else {
                it->second -= q * v;
                if (it->second == 0) col[dst].erase(it);
            }
        }
    }
};

// Reduces the entries of the given columns at `row` to a single column by gcd
// sweeps (unimodular: only axpy and role swaps).  Returns that column.
int gcd_sweep_row(ColWorkspace& w, std::vector<int>& cand, int row) {
    for (;;) {
        int pivot = -1;
        Int pv;
        std::vector<int> live;
        for (int c : cand) {
            Int v = w.get(c, row);
            if (v == 0) continue;
            live.push_back(c);
            Int a = abs_int(v);
            if (pivot < 0 || a < pv || (a == pv && c < pivot)) {
                pivot = c;
                pv = a;
            }
        }
        if (live.size() <= 1) return live.empty() ? -1 : live[0];
        Int vpiv = w.get(pivot, row);
        for (int c : live) {
            if (c == pivot) continue;
            Int q;
            // truncated quotient: remainder strictly smaller than |pivot|
            mpz_tdiv_q(q.get_mpz_t(), w.get(c, row).get_mpz_t(), vpiv.get_mpz_t());
            w.axpy(c, pivot, q);
        }
        cand = std::move(live);
    }
}

}  // namespace

SparseIntMatrix kernel_basis(const SparseIntMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    // stacked [A; I], column reduced
    ColWorkspace w;
    w.rows = rows + cols;
    w.col.resize(cols);
    for (const auto& [rc, v] : m.entries()) w.col[rc.second][rc.first] = v;
    for (int c = 0; c < cols; ++c) w.col[c][rows + c] = 1;

    std::vector<bool> active(cols, true);
    for (int r = 0; r < rows; ++r) {
        std::vector<int> cand;
        for (int c = 0; c < cols; ++c)
            if (active[c] && w.col[c].count(r)) cand.push_back(c);
        if (cand.empty()) continue;
        int pivot = gcd_sweep_row(w, cand, r);
        if (pivot >= 0) active[pivot] = false;
    }
    std::vector<int> kernel_cols;
    for (int c = 0; c < cols; ++c)
        if (active[c]) kernel_cols.push_back(c);
    SparseIntMatrix k(cols, (int)kernel_cols.size());
    for (std::size_t j = 0; j < kernel_cols.size(); ++j)
        for (const auto& [r, v] : w.col[kernel_cols[j]]) {
            // the A-part must have fully cancelled
            if (r < rows) throw Error("Internal", "kernel reduction left residue");
            k.set(r - rows, (int)j, v);
        }
    return k;
}

SparseIntMatrix express_in_lattice_basis(const SparseIntMatrix& k,
                                         const SparseIntMatrix& d) {
    if (k.rows() != d.rows()) throw ShapeMismatch("lattice solve shape mismatch");
    int n = k.rows(), kc = k.cols(), q = d.cols();
    // Row elimination on [K | D]: row scaling and axpy preserve solutions of
    // K*X = D, so content can be stripped freely.
    std::vector<std::map<int, Int>> row(n);
    for (const auto& [rc, v] : k.entries()) row[rc.first][rc.second] = v;
    for (const auto& [rc, v] : d.entries()) row[rc.first][kc + rc.second] = v;

    std::vector<int> pivot_row_of(kc, -1);
    std::vector<bool> row_used(n, false);
    for (int pc = 0; pc < kc; ++pc) {
        // choose the unused row with an entry at pc minimizing (nnz, |v|, index)
        int pr = -1;
        std::size_t best_n = 0;
        Int best_a;
        for (int r = 0; r < n; ++r) {
            if (row_used[r]) continue;
            auto it = row[r].find(pc);
            if (it == row[r].end() || it->second == 0) continue;
            Int a = abs_int(it->second);
            if (pr < 0 || row[r].size() < best_n ||
                (row[r].size() == best_n && a < best_a)) {
                pr = r;
                best_n = row[r].size();
                best_a = a;
            }
        }
        if (pr < 0) throw Error("Internal", "lattice basis not full column rank");
        Int v = row[pr][pc];
        for (int r = 0; r < n; ++r) {
            if (r == pr || row_used[r]) continue;
            auto it = row[r].find(pc);
            if (it == row[r].end() || it->second == 0) continue;
            Int a = it->second;
            std::map<int, Int> nr;
            for (const auto& [c, x] : row[r]) nr[c] = v * x;
            for (const auto& [c, x] : row[pr]) {
                auto jt = nr.find(c);
                if (jt == nr.end())
                    nr.emplace(c, -a * x);
                else {
                    jt->second -= a * x;
                    if (jt->second == 0) nr.erase(jt);
                }
            }
            Int g = 0;
            for (const auto& [c, x] : nr) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                if (g == 1) break;
            }
            if (g > 1)
                for (auto& [c, x] : nr) x /= g;
            row[r] = std::move(nr);
        }
        row_used[pr] = true;
        pivot_row_of[pc] = pr;
    }
    // consistency: rows without pivots must be entirely zero now
    for (int r = 0; r < n; ++r)
        if (!row_used[r] && !row[r].empty())
            throw Error("Internal", "inconsistent lattice system");
    // back-substitution over Q; results must be integral
    SparseIntMatrix x(kc, q);
    std::vector<mpq_class> xcol(kc);
    for (int j = 0; j < q; ++j) {
        for (int pc = kc - 1; pc >= 0; --pc) {
            int pr = pivot_row_of[pc];
            mpq_class acc = 0;
            auto it = row[pr].find(kc + j);
            if (it != row[pr].end()) acc = it->second;
            for (const auto& [c, v] : row[pr]) {
                if (c <= pc) continue;
                if (c >= kc) break;
                if (xcol[c] != 0) acc -= mpq_class(v) * xcol[c];
            }
            acc /= mpq_class(row[pr][pc]);
            xcol[pc] = acc;
        }
        for (int i = 0; i < kc; ++i) {
            if (xcol[i] == 0) continue;
            xcol[i].canonicalize();
            if (xcol[i].get_den() != 1)
                throw Error("Internal", "non-integral lattice coordinates");
            x.set(i, j, xcol[i].get_num());
            xcol[i] = 0;
        }
    }
    return x;
}

namespace {

void check_complex(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw ShapeMismatch("boundary pair: " + std::to_string(d_out.cols()) + " vs " +
                            std::to_string(d_in.rows()));
    SparseIntMatrix prod = d_out * d_in;
    if (!prod.is_zero()) {
        int col = prod.entries().begin()->first.second;
        throw NotAComplex("d_out*d_in nonzero at column " + std::to_string(col));
    }
}

std::vector<Int> torsion_part(const std::vector<Int>& snf_diag) {
    std::vector<Int> t;
    for (const Int& d : snf_diag)
        if (d > 1) t.push_back(d);
    return t;
}

}  // namespace

HomologyGroup homology(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in) {
    check_complex(d_out, d_in);
    SparseIntMatrix k = kernel_basis(d_out);
    SparseIntMatrix x = express_in_lattice_basis(k, d_in);
    std::vector<Int> diag = smith_normal_form(x);
    HomologyGroup h;
    long rank = 0;
    for (const Int& d : diag)
        if (d != 0) ++rank;
    h.free_rank = k.cols() - rank;
    h.torsion = torsion_part(diag);
    return h;
}

HomologyGroup homology_by_rank_and_snf(const SparseIntMatrix& d_out,
                                       const SparseIntMatrix& d_in) {
    check_complex(d_out, d_in);
    HomologyGroup h;
    h.free_rank = ((long)d_out.cols() - rank_over_field(d_out, 0)) -
                  rank_over_field(d_in, 0);
    h.torsion = torsion_part(smith_normal_form(d_in));
    return h;
}

SparseIntMatrix column_hnf(const SparseIntMatrix& m) {
    ColWorkspace w;
    w.rows = m.rows();
    w.col.resize(m.cols());
    for (const auto& [rc, v] : m.entries()) w.col[rc.second][rc.first] = v;
    std::vector<bool> active(m.cols(), true);
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<int> cand;
        for (int c = 0; c < m.cols(); ++c)
            if (active[c] && w.col[c].count(r)) cand.push_back(c);
        if (cand.empty()) continue;
        int pivot = gcd_sweep_row(w, cand, r);
        if (pivot < 0) continue;
        if (w.get(pivot, r) < 0)
            for (auto& [rr, v] : w.col[pivot]) v = -v;
        active[pivot] = false;
        pivots.push_back({r, pivot});
    }
    // reduce earlier pivot columns against later pivots for canonicity
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        auto [r, c] = pivots[i];
        Int d = w.get(c, r);
        for (std::size_t j = 0; j < i; ++j) {
            int cj = pivots[j].second;
            Int a = w.get(cj, r);
            if (a == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
            w.axpy(cj, c, q);
        }
    }
    SparseIntMatrix h(m.rows(), (int)pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (const auto& [r, v] : w.col[pivots[i].second]) h.set(r, (int)i, v);
    return h;
}

}  // namespace symhom
