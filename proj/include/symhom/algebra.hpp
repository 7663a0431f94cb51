#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symhom/deltas.hpp"
#include "symhom/sparse_matrix.hpp"

namespace symhom {

// Sparse coefficient vector over the algebra basis.
using SparseVec = std::map<int, Int>;

// Commutative-monoid layer structure on the basis.  A distinguished absorbing
// label may represent the zero of the algebra; it never labels a basis
// element.  Layering requires commutativity, which is checked at use.
struct MonoidGrading {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> product;  // label x label -> label
    std::vector<int> layer_of_basis;        // basis index -> label index
    int zero_label = -1;

    int times(int a, int b) const { return product.at(a).at(b); }
    bool is_commutative() const;
    int label_index(const std::string& name) const;
};

// Finite-rank unital associative algebra over Z, given by structure constants.
// Immutable after validation.
class FinAlgebra {
public:
    FinAlgebra(std::string name, std::vector<std::string> basis_names,
               std::vector<Int> unit, std::vector<SparseVec> structure,
               std::optional<MonoidGrading> grading = std::nullopt);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const std::vector<Int>& unit() const { return unit_; }
    SparseVec unit_vec() const;
    const SparseVec& basis_product(int i, int j) const {
        return structure_[(std::size_t)i * dim_ + j];
    }
    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
    const std::optional<MonoidGrading>& grading() const { return grading_; }

    // stable content hash for caching keyed on the structure constants
    std::string content_key() const;

private:
    std::string name_;
    int dim_;
    std::vector<std::string> basis_names_;
    std::vector<Int> unit_;
    std::vector<SparseVec> structure_;
    std::optional<MonoidGrading> grading_;
    void validate() const;
};

// build_algebra: raw structure constants [(i, j, k, c)] meaning
// b_i * b_j += c * b_k.
FinAlgebra build_algebra(int dim, const std::vector<std::string>& basis_names,
                         const std::vector<Int>& unit,
                         const std::vector<std::array<long, 3>>& triples,
                         const std::vector<Int>& coeffs,
                         std::optional<MonoidGrading> grading = std::nullopt,
                         const std::string& name = "custom");

// Element of A^{(x) arity} as a sparse integer combination of basis tuples.
struct AlgebraTensor {
    int arity = 0;
    std::map<std::vector<int>, Int> terms;

    static AlgebraTensor basis_tuple(std::vector<int> idx);
    bool operator==(const AlgebraTensor&) const = default;
};

// The symmetric bar construction action: factor j of the result multiplies
// the entries named by block j of f in order; an empty block inserts the unit.
AlgebraTensor apply_morphism(const DeltaSMorphism& f, const AlgebraTensor& t,
                             const FinAlgebra& a);

// Monoid label of a basis tuple (product of the entry labels).
int layer_of(const std::vector<int>& tuple, const MonoidGrading& g);

// ---- preset families -------------------------------------------------------

// Z[t1..tr]/(t1^e1, ..., tr^er), basis = monomials in exponent-vector
// lexicographic order, graded by its defining monoid with absorbed zero.
FinAlgebra trunc_poly(const std::vector<int>& exponents);

// Monoid ring Z[M] from an explicit multiplication table on labels; an
// optional absorbing zero label is excluded from the basis.
FinAlgebra monoid_ring(const std::vector<std::string>& labels,
                       const std::vector<std::vector<int>>& table, int zero_label = -1,
                       const std::string& name = "monoid_ring");

FinAlgebra cyclic_group_ring(int n);
FinAlgebra abelian_group_ring(const std::vector<int>& orders);
FinAlgebra symmetric_group_ring(int n);
FinAlgebra matrix_ring(int n);
// cyclic monoid M^p_q generated by s with s^p = s^q (p > q >= 0), dim p
FinAlgebra cyclic_monoid_ring(int p, int q);
// group ring of the quaternion group {+-1, +-i, +-j, +-k}
FinAlgebra quaternion_units();

// preset addressable by literal like "trunc_poly(3,2)" or "quaternion_units"
FinAlgebra preset_algebra(const std::string& literal);

// Algebra spec document (JSON), see docs/formats.md
FinAlgebra algebra_from_json_text(const std::string& text);
std::string algebra_to_json_text(const FinAlgebra& a);

// All basis tuples of given arity in lexicographic order (the canonical basis
// of A^{(x) arity}), enumerated on demand via the mixed-radix odometer.
std::vector<int> first_tuple(int arity);
bool next_tuple(std::vector<int>& t, int dim);
long tuple_index(const std::vector<int>& t, int dim);
long power_dim(int dim, int arity);

}  // namespace symhom
