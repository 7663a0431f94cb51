#include <doctest.h>

#include <random>

#include "symhom/algebra.hpp"
#include "symhom/errors.hpp"

using namespace symhom;

namespace {

AlgebraTensor tensor(std::initializer_list<int> idx) {
    return AlgebraTensor::basis_tuple(std::vector<int>(idx));
}

}  // namespace

TEST_CASE("one-dimensional algebra validates") {
    FinAlgebra a = build_algebra(1, {"1"}, {Int(1)}, {{0, 0, 0}}, {Int(1)});
    CHECK(a.dim() == 1);
    CHECK(a.multiply({{0, Int(2)}}, {{0, Int(3)}}) == SparseVec{{0, Int(6)}});
}

TEST_CASE("deliberate violations are rejected with witnesses") {
    // non-associative: b1*b1 = b2, b1*b2 = 0, b2*b1 = b1 makes (b1 b1) b1 = b1
    // but b1 (b1 b1) = 0
    CHECK_THROWS_AS(build_algebra(3, {"1", "x", "y"}, {Int(1), Int(0), Int(0)},
                                  {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2},
                                   {2, 0, 2}, {1, 1, 2}, {2, 1, 1}},
                                  {Int(1), Int(1), Int(1), Int(1), Int(1), Int(1),
                                   Int(1)}),
                    NotAssociative);
    // wrong unit
    CHECK_THROWS_AS(build_algebra(2, {"1", "x"}, {Int(0), Int(1)},
                                  {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}},
                                  {Int(1), Int(1), Int(1)}),
                    NotUnital);
}

TEST_CASE("2x2 matrix algebra against the matrix multiplication oracle") {
    FinAlgebra m2 = matrix_ring(2);
    // dense oracle: multiply the elementary matrices directly
    auto dense_mul = [](int a, int b) {
        int r1 = a / 2, c1 = a % 2, r2 = b / 2, c2 = b % 2;
        SparseVec out;
        if (c1 == r2) out[r1 * 2 + c2] = 1;
        return out;
    };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(m2.basis_product(a, b) == dense_mul(a, b));
}

TEST_CASE("trunc_poly presets") {
    FinAlgebra a = trunc_poly({3, 2});
    CHECK(a.dim() == 6);
    CHECK(a.basis_names() ==
          std::vector<std::string>({"1", "t2", "t1", "t1*t2", "t1^2", "t1^2*t2"}));
    FinAlgebra b = trunc_poly({2});
    CHECK(b.dim() == 2);
    // t * t = 0
    CHECK(b.basis_product(1, 1).empty());
    CHECK(trunc_poly({2, 2, 2}).dim() == 8);
    CHECK_THROWS_AS(trunc_poly({1}), std::domain_error);
}

TEST_CASE("monoid rings") {
    FinAlgebra c4 = cyclic_group_ring(4);
    CHECK(c4.dim() == 4);
    CHECK(c4.grading().has_value());
    CHECK(c4.grading()->is_commutative());

    // cyclic monoid M^{m+2}_{m+1} has dimension m+2
    for (int m = 0; m <= 4; ++m) CHECK(cyclic_monoid_ring(m + 2, m + 1).dim() == m + 2);
    // s^4 = s^3 in M^4_3: index arithmetic collapses high powers
    FinAlgebra m43 = cyclic_monoid_ring(4, 3);
    CHECK(m43.basis_product(3, 3) == SparseVec{{3, Int(1)}});
    CHECK(m43.basis_product(2, 2) == SparseVec{{3, Int(1)}});

    FinAlgebra v4 = abelian_group_ring({2, 2});
    CHECK(v4.dim() == 4);
    CHECK(v4.basis_names() == std::vector<std::string>({"1", "g2", "g1", "g1*g2"}));

    CHECK_THROWS_AS(
        monoid_ring({"a", "b"}, {{1, 1}, {1, 1}}, -1, "bad"),  // constant, no identity
        NoIdentity);
}

TEST_CASE("quaternion and symmetric group rings") {
    FinAlgebra q8 = quaternion_units();
    CHECK(q8.dim() == 8);
    const auto& g = *q8.grading();
    CHECK_FALSE(g.is_commutative());
    auto idx = [&](const std::string& s) {
        for (int i = 0; i < q8.dim(); ++i)
            if (q8.basis_names()[i] == s) return i;
        return -1;
    };
    // i*j = k, j*i = -k, i*i = -1
    CHECK(q8.basis_product(idx("i"), idx("j")) == SparseVec{{idx("k"), Int(1)}});
    CHECK(q8.basis_product(idx("j"), idx("i")) == SparseVec{{idx("-k"), Int(1)}});
    CHECK(q8.basis_product(idx("i"), idx("i")) == SparseVec{{idx("-1"), Int(1)}});

    FinAlgebra s3 = symmetric_group_ring(3);
    CHECK(s3.dim() == 6);
    CHECK_FALSE(s3.grading()->is_commutative());
}

TEST_CASE("apply_morphism matches the transcript examples") {
    FinAlgebra a = trunc_poly({3, 2});
    // v = xy (x) 1 (x) y^2 with x = t2, y = t1
    AlgebraTensor v = tensor({3, 0, 4});
    AlgebraTensor r1 = apply_morphism(parse_morphism("[[2],[],[0],[1]]"), v, a);
    CHECK(r1 == tensor({4, 0, 3, 0}));
    AlgebraTensor r2 = apply_morphism(parse_morphism("[[2],[0,1]]"), v, a);
    CHECK(r2 == tensor({4, 3}));
    // y^2 * xy = 0 kills the term
    AlgebraTensor r3 = apply_morphism(parse_morphism("[[2,0],[1]]"), v, a);
    CHECK(r3.terms.empty());
    // identity acts as identity
    CHECK(apply_morphism(identity_morphism(2), v, a) == v);
    CHECK_THROWS_AS(apply_morphism(parse_morphism("[[0],[1]]"), v, a), ArityMismatch);
}

TEST_CASE("functoriality of the bar-construction action") {
    FinAlgebra a = trunc_poly({2, 2});
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int k = (int)(rng() % 4), n = (int)(rng() % 4), m = (int)(rng() % 4);
        // random morphisms g: [k] -> [n], f: [n] -> [m]
        auto rand_mor = [&](int src, int tgt) {
            std::vector<std::vector<int>> blocks(tgt + 1);
            std::vector<int> idx(src + 1);
            for (int i = 0; i <= src; ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            for (int i : idx) blocks[rng() % (tgt + 1)].push_back(i);
            return DeltaSMorphism(std::move(blocks));
        };
        DeltaSMorphism g = rand_mor(k, n), f = rand_mor(n, m);
        AlgebraTensor t;
        t.arity = k + 1;
        for (int terms = 0; terms < 3; ++terms) {
            std::vector<int> tuple(k + 1);
            for (int& x : tuple) x = (int)(rng() % a.dim());
            t.terms[tuple] = Int((long)(rng() % 5) - 2);
        }
        std::erase_if(t.terms, [](const auto& kv) { return kv.second == 0; });
        CHECK(apply_morphism(compose(f, g), t, a) ==
              apply_morphism(f, apply_morphism(g, t, a), a));
    }
}

TEST_CASE("layers") {
    FinAlgebra zt4 = trunc_poly({4});
    const MonoidGrading& g = *zt4.grading();
    CHECK(layer_of({1, 1, 0}, g) == 2);  // t * t * 1 = t^2
    FinAlgebra c3 = cyclic_group_ring(3);
    CHECK(layer_of({1, 2}, *c3.grading()) == 0);  // g * g^2 = 1
    FinAlgebra zt2 = trunc_poly({2});
    CHECK(layer_of({1, 1}, *zt2.grading()) == zt2.grading()->zero_label);
}

TEST_CASE("action respects layers on graded presets") {
    std::mt19937 rng(31);
    for (const FinAlgebra& a : {trunc_poly({3, 2}), cyclic_group_ring(4),
                                cyclic_monoid_ring(4, 2)}) {
        const MonoidGrading& g = *a.grading();
        for (int trial = 0; trial < 30; ++trial) {
            int n = (int)(rng() % 3), m = (int)(rng() % 3);
            std::vector<std::vector<int>> blocks(m + 1);
            std::vector<int> idx(n + 1);
            for (int i = 0; i <= n; ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            for (int i : idx) blocks[rng() % (m + 1)].push_back(i);
            DeltaSMorphism f{std::move(blocks)};
            std::vector<int> tuple(n + 1);
            for (int& x : tuple) x = (int)(rng() % a.dim());
            AlgebraTensor out = apply_morphism(f, AlgebraTensor::basis_tuple(tuple), a);
            for (const auto& [key, c] : out.terms)
                CHECK(layer_of(key, g) == layer_of(tuple, g));
        }
    }
}

TEST_CASE("preset literals and JSON round trip") {
    CHECK(preset_algebra("trunc_poly(3,2)").dim() == 6);
    CHECK(preset_algebra("quaternion_units").dim() == 8);
    CHECK(preset_algebra("matrix_ring(2)").dim() == 4);
    CHECK_THROWS_AS(preset_algebra("mystery(2)"), ParseError);

    for (const char* lit : {"trunc_poly(2,2)", "cyclic_group(3)", "matrix_ring(2)"}) {
        FinAlgebra a = preset_algebra(lit);
        FinAlgebra b = algebra_from_json_text(algebra_to_json_text(a));
        CHECK(a.dim() == b.dim());
        CHECK(a.unit() == b.unit());
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                CHECK(a.basis_product(i, j) == b.basis_product(i, j));
        CHECK(a.content_key() == b.content_key());
    }
}
