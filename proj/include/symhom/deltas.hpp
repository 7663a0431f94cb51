#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symhom/sparse_matrix.hpp"

namespace symhom {

// Morphism of DeltaS_+ in tensor notation: block j lists, in order, the source
// indices whose product forms tensor factor j.  The blocks cover {0..n} with
// no repeats; n = -1 (no indices at all) encodes the morphisms out of the
// initial object.  The number of blocks is part of the morphism's identity,
// so trailing empty blocks matter.
class DeltaSMorphism {
public:
    DeltaSMorphism() = default;  // identity of [-1]
    explicit DeltaSMorphism(std::vector<std::vector<int>> blocks);

    int source() const { return total_ - 1; }
    int target() const { return (int)blocks_.size() - 1; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool is_epi() const;
    auto operator<=>(const DeltaSMorphism&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
    int total_ = 0;
};

DeltaSMorphism identity_morphism(int n);

// f after g (substitution rule: block i of the result concatenates g's blocks
// named by f's block i).
DeltaSMorphism compose(const DeltaSMorphism& f, const DeltaSMorphism& g);

// (m+n+1)!/m! without enumeration; counts the DeltaS_+ conventions
// count(-1, m) = 1 and count(n, -1) = 0 for n >= 0.
Int count_morphisms(int n, int m);

// All morphisms [n] -> [m] in canonical order: ascending lexicographic on the
// block-assignment vector (index -> block), then ascending lexicographic on
// the concatenated within-block words.
std::vector<DeltaSMorphism> enumerate_morphisms(int n, int m, bool epi_only = false);

// Unique factorization f = mono o epi with epi surjective and mono an
// order-preserving injection of Delta_+.
std::pair<DeltaSMorphism, DeltaSMorphism> epi_mono_factor(const DeltaSMorphism& f);

// Permutative structure of DeltaS_+: f acts on the first source(f)+1 points,
// g (shifted) on the rest.
DeltaSMorphism monoidal_product(const DeltaSMorphism& f, const DeltaSMorphism& g);

// The block transposition automorphism of [m+n+1]: i -> i+n+1 for i <= m,
// i -> i-m-1 otherwise.
DeltaSMorphism block_transposition(int m, int n);

// Literal grammar `[[4,0],[],[2,3],[1]]`, whitespace-insensitive.
DeltaSMorphism parse_morphism(std::string_view text);
std::string to_literal(const DeltaSMorphism& f);

// Bijection of {0..n}; images[i] is where i goes.
struct Permutation {
    std::vector<int> images;

    explicit Permutation(std::vector<int> im);
    static Permutation identity(int n);
    int degree() const { return (int)images.size(); }
    int operator()(int i) const { return images.at(i); }
    Permutation inverse() const;
    Permutation after(const Permutation& rhs) const;  // this o rhs
    int sign() const;
    bool operator==(const Permutation&) const = default;
};

// tau_n = (0, n, n-1, ..., 1): 0 -> n and i -> i-1 otherwise.
Permutation tau_cycle(int n);

}  // namespace symhom
