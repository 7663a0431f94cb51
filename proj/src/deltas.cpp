#include "symhom/deltas.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "symhom/errors.hpp"

namespace symhom {

DeltaSMorphism::DeltaSMorphism(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    int total = 0;
    for (const auto& b : blocks_) total += (int)b.size();
    std::vector<bool> seen(total, false);
    for (const auto& b : blocks_)
        for (int i : b) {
            if (i < 0 || i >= total || seen[i])
                throw InvalidCover("blocks must cover {0..n} without repeats");
            seen[i] = true;
        }
    total_ = total;
}

bool DeltaSMorphism::is_epi() const {
    for (const auto& b : blocks_)
        if (b.empty()) return false;
    return true;
}

DeltaSMorphism identity_morphism(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i <= n; ++i) blocks.push_back({i});
    return DeltaSMorphism(std::move(blocks));
}

DeltaSMorphism compose(const DeltaSMorphism& f, const DeltaSMorphism& g) {
    if (g.target() != f.source())
        throw ArityMismatch("compose: target(g) = " + std::to_string(g.target()) +
                            " but source(f) = " + std::to_string(f.source()));
    std::vector<std::vector<int>> blocks;
    blocks.reserve(f.blocks().size());
    for (const auto& fb : f.blocks()) {
        std::vector<int> z;
        for (int j : fb) {
            const auto& gb = g.blocks()[j];
            z.insert(z.end(), gb.begin(), gb.end());
        }
        blocks.push_back(std::move(z));
    }
    return DeltaSMorphism(std::move(blocks));
}

Int count_morphisms(int n, int m) {
    if (n == -1 && m >= -1) return 1;
    if (n >= 0 && m == -1) return 0;
    if (n < -1 || m < -1) throw std::domain_error("count: arity below -1");
    // (m+n+1)!/m! = (m+1)(m+2)...(m+n+1)
    Int r = 1;
    for (int k = m + 1; k <= m + n + 1; ++k) r *= k;
    return r;
}

namespace {

void enumerate_block_orders(const std::vector<std::vector<int>>& contents, int b,
                            std::vector<std::vector<int>>& current,
                            std::vector<DeltaSMorphism>& out) {
    if (b == (int)contents.size()) {
        out.push_back(DeltaSMorphism(current));
        return;
    }
    std::vector<int> word = contents[b];  // ascending = lexicographically first
    std::sort(word.begin(), word.end());
    do {
        current[b] = word;
        enumerate_block_orders(contents, b + 1, current, out);
    } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace

std::vector<DeltaSMorphism> enumerate_morphisms(int n, int m, bool epi_only) {
    if (n < -1 || m < -1) throw std::domain_error("enumerate: arity below -1");
    std::vector<DeltaSMorphism> out;
    if (n == -1) {
        DeltaSMorphism iota{std::vector<std::vector<int>>((std::size_t)(m + 1))};
        if (!epi_only || iota.is_epi()) out.push_back(iota);
        return out;
    }
    if (m == -1) return out;
    // odometer over assignment vectors {0..n} -> {0..m}, lexicographic
    std::vector<int> assign(n + 1, 0);
    for (;;) {
        std::vector<std::vector<int>> contents(m + 1);
        for (int i = 0; i <= n; ++i) contents[assign[i]].push_back(i);
        bool ok = true;
        if (epi_only)
            for (const auto& c : contents)
                if (c.empty()) {
                    ok = false;
                    break;
                }
        if (ok) {
            std::vector<std::vector<int>> current(m + 1);
            enumerate_block_orders(contents, 0, current, out);
        }
        int pos = n;
        while (pos >= 0 && assign[pos] == m) assign[pos--] = 0;
        if (pos < 0) break;
        ++assign[pos];
    }
    return out;
}

std::pair<DeltaSMorphism, DeltaSMorphism> epi_mono_factor(const DeltaSMorphism& f) {
    std::vector<std::vector<int>> epi_blocks;
    std::vector<std::vector<int>> mono_blocks(f.blocks().size());
    int k = 0;
    for (std::size_t j = 0; j < f.blocks().size(); ++j) {
        if (f.blocks()[j].empty()) continue;
        epi_blocks.push_back(f.blocks()[j]);
        mono_blocks[j] = {k++};
    }
    return {DeltaSMorphism(std::move(epi_blocks)), DeltaSMorphism(std::move(mono_blocks))};
}

DeltaSMorphism monoidal_product(const DeltaSMorphism& f, const DeltaSMorphism& g) {
    int shift = f.source() + 1;
    std::vector<std::vector<int>> blocks = f.blocks();
    for (const auto& gb : g.blocks()) {
        std::vector<int> b;
        b.reserve(gb.size());
        for (int i : gb) b.push_back(i + shift);
        blocks.push_back(std::move(b));
    }
    return DeltaSMorphism(std::move(blocks));
}

DeltaSMorphism block_transposition(int m, int n) {
    if (m < -1 || n < -1) throw std::domain_error("block_transposition: arity below -1");
    int total = m + n + 2;
    std::vector<std::vector<int>> blocks(total);
    for (int i = 0; i < total; ++i) {
        int image = i <= m ? i + n + 1 : i - m - 1;
        blocks[image] = {i};
    }
    return DeltaSMorphism(std::move(blocks));
}

DeltaSMorphism parse_morphism(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("morphism literal: expected '" + std::string(1, c) +
                             "' at offset " + std::to_string(pos));
        ++pos;
    };
    expect('[');
    std::vector<std::vector<int>> blocks;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            expect('[');
            std::vector<int> block;
            skip_ws();
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
            } else {
                for (;;) {
                    skip_ws();
                    std::size_t start = pos;
                    while (pos < text.size() &&
                           (std::isdigit((unsigned char)text[pos]) || text[pos] == '-'))
                        ++pos;
                    if (start == pos) throw ParseError("morphism literal: expected integer");
                    block.push_back(std::stoi(std::string(text.substr(start, pos - start))));
                    skip_ws();
                    if (pos < text.size() && text[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    expect(']');
                    break;
                }
            }
            blocks.push_back(std::move(block));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']');
            break;
        }
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("morphism literal: trailing characters");
    return DeltaSMorphism(std::move(blocks));
}

std::string to_literal(const DeltaSMorphism& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < f.blocks().size(); ++j) {
        if (j) os << ',';
        os << '[';
        for (std::size_t i = 0; i < f.blocks()[j].size(); ++i) {
            if (i) os << ',';
            os << f.blocks()[j][i];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<bool> seen(images.size(), false);
    for (int i : images) {
        if (i < 0 || i >= (int)images.size() || seen[i])
            throw InvalidCover("permutation images must be a bijection");
        seen[i] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n + 1);
    for (int i = 0; i <= n; ++i) im[i] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images.size());
    for (int i = 0; i < (int)images.size(); ++i) im[images[i]] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::after(const Permutation& rhs) const {
    if (images.size() != rhs.images.size()) throw ArityMismatch("permutation degrees");
    std::vector<int> im(images.size());
    for (int i = 0; i < (int)images.size(); ++i) im[i] = images[rhs.images[i]];
    return Permutation(std::move(im));
}

int Permutation::sign() const {
    std::vector<bool> seen(images.size(), false);
    int parity = 0;
    for (int i = 0; i < (int)images.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = images[j];
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
}

Permutation tau_cycle(int n) {
    std::vector<int> im(n + 1);
    im[0] = n;
    for (int i = 1; i <= n; ++i) im[i] = i - 1;
    return Permutation(std::move(im));
}

}  // namespace symhom
