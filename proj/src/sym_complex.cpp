#include "symhom/sym_complex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "symhom/errors.hpp"

namespace symhom {

int SymBasisElement::p() const {
    int total = 0;
    for (const auto& b : blocks) total += (int)b.size();
    return total - 1;
}

int SymBasisElement::degree() const { return p() - ((int)blocks.size() - 1); }

std::pair<int, SymBasisElement> canonicalize(std::vector<std::vector<int>> blocks) {
    int total = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw InvalidCover("empty block in Sym element");
        total += (int)b.size();
    }
    std::vector<bool> seen(total, false);
    for (const auto& b : blocks)
        for (int l : b) {
            if (l < 0 || l >= total || seen[l])
                throw InvalidCover("Sym blocks must cover {0..p} without repeats");
            seen[l] = true;
        }
    // degree-weighted inversion parity over pairs out of min-order
    std::vector<int> mins(blocks.size()), degs(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        mins[i] = *std::min_element(blocks[i].begin(), blocks[i].end());
        degs[i] = (int)blocks[i].size() - 1;
    }
    long weight = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (mins[i] > mins[j]) weight += (long)degs[i] * degs[j];
    std::vector<std::size_t> order(blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return mins[a] < mins[b]; });
    SymBasisElement e;
    e.blocks.reserve(blocks.size());
    for (std::size_t i : order) e.blocks.push_back(std::move(blocks[i]));
    return {weight % 2 == 0 ? 1 : -1, std::move(e)};
}

namespace {

void gen_partitions(int p, int next, int k, std::vector<std::vector<int>>& cur,
                    std::vector<SymBasisElement>& out) {
    if (next == p + 1) {
        if ((int)cur.size() == k) {
            SymBasisElement e;
            e.blocks = cur;
            out.push_back(std::move(e));
        }
        return;
    }
    // elements are placed in increasing order, so a fresh block keeps the
    // ascending-min invariant
    if ((int)cur.size() < k) {
        cur.push_back({next});
        gen_partitions(p, next + 1, k, cur, out);
        cur.pop_back();
    }
    int remaining = p - next;  // elements still to place after this one
    int deficit = k - (int)cur.size();
    if (remaining >= deficit) {
        for (std::size_t b = 0; b < cur.size(); ++b)
            for (std::size_t pos = 0; pos <= cur[b].size(); ++pos) {
                cur[b].insert(cur[b].begin() + (long)pos, next);
                gen_partitions(p, next + 1, k, cur, out);
                cur[b].erase(cur[b].begin() + (long)pos);
            }
    }
}

}  // namespace

std::vector<SymBasisElement> sym_basis(int p, int i) {
    if (p < 0 || i < 0 || i > p)
        throw DegreeOutOfRange("sym_basis(" + std::to_string(p) + "," +
                               std::to_string(i) + ")");
    std::vector<SymBasisElement> out;
    std::vector<std::vector<int>> cur;
    gen_partitions(p, 0, p - i + 1, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

SignedSymElement sym_d(const SymBasisElement& e) {
    SignedSymElement out;
    int cut = 0;
    for (std::size_t b = 0; b < e.blocks.size(); ++b) {
        const auto& word = e.blocks[b];
        for (std::size_t l = 0; l + 1 < word.size(); ++l, ++cut) {
            std::vector<std::vector<int>> split;
            split.reserve(e.blocks.size() + 1);
            for (std::size_t bb = 0; bb < e.blocks.size(); ++bb) {
                if (bb != b) {
                    split.push_back(e.blocks[bb]);
                } else {
                    split.emplace_back(word.begin(), word.begin() + (long)l + 1);
                    split.emplace_back(word.begin() + (long)l + 1, word.end());
                }
            }
            auto [sign, elt] = canonicalize(std::move(split));
            Int& dst = out[elt];
            dst += (cut % 2 == 0 ? sign : -sign);
            if (dst == 0) out.erase(elt);
        }
    }
    return out;
}

SignedSymElement sym_d(const SignedSymElement& w) {
    SignedSymElement out;
    for (const auto& [e, c] : w)
        for (const auto& [e2, s] : sym_d(e)) {
            Int& dst = out[e2];
            dst += c * s;
            if (dst == 0) out.erase(e2);
        }
    return out;
}

namespace {
int g_worker_threads = 1;
}

void set_worker_threads(int n) { g_worker_threads = n < 1 ? 1 : n; }
int worker_threads() { return g_worker_threads; }

SparseIntMatrix sym_differential(int p, int i) {
    if (i < 1 || i > p)
        throw DegreeOutOfRange("sym_differential(" + std::to_string(p) + "," +
                               std::to_string(i) + ")");
    std::vector<SymBasisElement> domain = sym_basis(p, i);
    std::vector<SymBasisElement> codomain = sym_basis(p, i - 1);
    std::vector<std::vector<std::pair<int, Int>>> cols(domain.size());
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t col = begin; col < end; ++col)
            for (const auto& [elt, c] : sym_d(domain[col])) {
                auto it = std::lower_bound(codomain.begin(), codomain.end(), elt);
                cols[col].push_back({(int)(it - codomain.begin()), c});
            }
    };
    int nthreads = std::min<int>(worker_threads(), (int)domain.size());
    if (nthreads <= 1) {
        run(0, domain.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (domain.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t begin = (std::size_t)t * chunk;
            std::size_t end = std::min(domain.size(), begin + chunk);
            if (begin < end) pool.emplace_back(run, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    SparseIntMatrix m((int)codomain.size(), (int)domain.size());
    for (std::size_t col = 0; col < domain.size(); ++col)
        for (const auto& [row, c] : cols[col]) m.add(row, (int)col, c);
    return m;
}

std::vector<long> poincare_polynomial(int p, long characteristic) {
    if (p < 0) throw DegreeOutOfRange("poincare_polynomial: p < 0");
    if (characteristic != 0 && !is_prime(characteristic))
        throw CompositeCharacteristic(std::to_string(characteristic));
    std::vector<long> dims(p + 1), ranks(p + 2, 0);
    for (int i = 0; i <= p; ++i) dims[i] = (long)sym_basis(p, i).size();
    for (int i = 1; i <= p; ++i)
        ranks[i] = rank_over_field(sym_differential(p, i), characteristic);
    std::vector<long> betti(p + 1);
    for (int i = 0; i <= p; ++i) betti[i] = dims[i] - ranks[i] - ranks[i + 1];
    return betti;
}

std::string poincare_to_string(const std::vector<long>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (int k = (int)coeffs.size() - 1; k >= 0; --k) {
        if (coeffs[k] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0) {
            os << coeffs[k];
            continue;
        }
        if (coeffs[k] != 1) os << coeffs[k] << "*";
        os << "t";
        if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

HomologyGroup sym_integral_homology(int p, int i) {
    if (p < 0 || i < 0 || i > p)
        throw DegreeOutOfRange("sym_integral_homology(" + std::to_string(p) + "," +
                               std::to_string(i) + ")");
    long dim_i = (long)sym_basis(p, i).size();
    SparseIntMatrix d_out =
        i >= 1 ? sym_differential(p, i) : SparseIntMatrix(0, (int)dim_i);
    SparseIntMatrix d_in =
        i < p ? sym_differential(p, i + 1) : SparseIntMatrix((int)dim_i, 0);
    return homology(d_out, d_in);
}

SignedSymElement permute(const Permutation& sigma, const SignedSymElement& w) {
    SignedSymElement out;
    for (const auto& [e, c] : w) {
        if (e.p() + 1 != sigma.degree())
            throw ArityMismatch("permutation degree does not match element");
        std::vector<std::vector<int>> blocks = e.blocks;
        for (auto& b : blocks)
            for (int& l : b) l = sigma(l);
        auto [sign, elt] = canonicalize(std::move(blocks));
        Int& dst = out[elt];
        dst += sign * c;
        if (dst == 0) out.erase(elt);
    }
    return out;
}

SignedSymElement b_cycle(int p) {
    if (p < 0) throw DegreeOutOfRange("b_cycle: p < 0");
    SignedSymElement out;
    Permutation tau = tau_cycle(p);
    Permutation power = Permutation::identity(p);
    for (int j = 0; j <= p; ++j) {
        std::vector<int> word(p + 1);
        for (int l = 0; l <= p; ++l) word[l] = power(l);
        SymBasisElement e;
        e.blocks = {std::move(word)};
        Int& dst = out[e];
        dst += ((long)j * p) % 2 == 0 ? 1 : -1;
        if (dst == 0) out.erase(e);
        power = tau.after(power);
    }
    return out;
}

SignedSymElement boxtimes(const SignedSymElement& w, const SignedSymElement& v) {
    if (w.empty() || v.empty()) return {};
    int shift = w.begin()->first.p() + 1;
    SignedSymElement out;
    for (const auto& [we, wc] : w)
        for (const auto& [ve, vc] : v) {
            std::vector<std::vector<int>> blocks = we.blocks;
            for (const auto& b : ve.blocks) {
                std::vector<int> nb;
                nb.reserve(b.size());
                for (int l : b) nb.push_back(l + shift);
                blocks.push_back(std::move(nb));
            }
            auto [sign, elt] = canonicalize(std::move(blocks));
            Int& dst = out[elt];
            dst += sign * wc * vc;
            if (dst == 0) out.erase(elt);
        }
    return out;
}

std::map<Partition, std::vector<SymBasisElement>> decompose_by_partition(int p, int i) {
    std::map<Partition, std::vector<SymBasisElement>> out;
    for (SymBasisElement& e : sym_basis(p, i)) {
        Partition lambda;
        for (const auto& b : e.blocks) lambda.push_back((int)b.size());
        std::sort(lambda.rbegin(), lambda.rend());
        out[lambda].push_back(std::move(e));
    }
    return out;
}

Int partition_type_dim(const Partition& lambda) {
    int n = 0;
    for (int part : lambda) n += part;
    Int dim = 1;
    for (int k = 2; k <= n; ++k) dim *= k;
    std::map<int, int> mult;
    for (int part : lambda) ++mult[part];
    for (const auto& [size, m] : mult)
        for (int k = 2; k <= m; ++k) dim /= k;
    return dim;
}

std::pair<bool, bool> special_reps(const Partition& lambda) {
    bool alternating = true, trivial = true;
    std::map<int, int> mult;
    for (int part : lambda) ++mult[part];
    for (const auto& [size, m] : mult) {
        if (m > 1) {
            alternating = false;
            if (size % 2 == 0) trivial = false;
        }
    }
    return {alternating, trivial};
}

int lowest_alternating_degree(int p) {
    if (p < 0) throw DegreeOutOfRange("lowest_alternating_degree: p < 0");
    // largest r with r(r+1)/2 <= p+1
    int r = 1;
    while ((long)(r + 1) * (r + 2) / 2 <= p + 1) ++r;
    return p + 1 - r;
}

Int lah_number(int n, int k) {
    if (k < 1 || k > n) return 0;
    // C(n-1, k-1) * n! / k!
    Int c = 1;
    for (int t = 0; t < k - 1; ++t) c = c * (n - 1 - t) / (t + 1);
    Int f = 1;
    for (int t = k + 1; t <= n; ++t) f *= t;
    return c * f;
}

}  // namespace symhom
