#include "symhom/hs_low.hpp"

#include <algorithm>
#include <sstream>

#include "symhom/errors.hpp"

namespace symhom {

namespace {

// outer product of factor vectors, flattened to tuple indices
std::map<long, Int> tensor_outer(int dim, const std::vector<SparseVec>& factors) {
    std::map<long, Int> acc{{0, Int(1)}};
    for (const SparseVec& f : factors) {
        std::map<long, Int> next;
        for (const auto& [idx, c] : acc)
            for (const auto& [i, x] : f) {
                Int v = c * x;
                long key = idx * dim + i;
                Int& dst = next[key];
                dst += v;
                if (dst == 0) next.erase(key);
            }
        acc = std::move(next);
    }
    return acc;
}

void add_tensor_term(SparseIntMatrix& m, long col, int dim,
                     const std::vector<SparseVec>& factors, const Int& scale,
                     long row_offset = 0) {
    for (const auto& [row, c] : tensor_outer(dim, factors))
        m.add((int)(row + row_offset), (int)col, scale * c);
}

SparseVec basis_vec(int i) { return SparseVec{{i, Int(1)}}; }

SparseVec mul3(const FinAlgebra& a, int x, int y, int z) {
    return a.multiply(a.basis_product(x, y), basis_vec(z));
}

SparseIntMatrix build_d1(const FinAlgebra& a) {
    int dim = a.dim();
    SparseIntMatrix d1(dim, (int)power_dim(dim, 3));
    std::vector<int> t = first_tuple(3);
    long col = 0;
    do {
        SparseVec v = mul3(a, t[0], t[1], t[2]);
        for (const auto& [k, c] : mul3(a, t[2], t[1], t[0])) {
            Int& dst = v[k];
            dst -= c;
            if (dst == 0) v.erase(k);
        }
        for (const auto& [k, c] : v) d1.add(k, (int)col, c);
        ++col;
    } while (next_tuple(t, dim));
    return d1;
}

SparseIntMatrix build_d2(const FinAlgebra& a) {
    int dim = a.dim();
    long n4 = power_dim(dim, 4);
    SparseIntMatrix d2((int)power_dim(dim, 3), (int)(n4 + dim));
    SparseVec unit = a.unit_vec();
    std::vector<int> t = first_tuple(4);
    long col = 0;
    do {
        int x = t[0], y = t[1], z = t[2], w = t[3];
        // ab (x) c (x) d
        add_tensor_term(d2, col, dim, {a.basis_product(x, y), basis_vec(z), basis_vec(w)},
                        Int(1));
        // d (x) ca (x) b
        add_tensor_term(d2, col, dim, {basis_vec(w), a.basis_product(z, x), basis_vec(y)},
                        Int(1));
        // bca (x) 1 (x) d
        add_tensor_term(d2, col, dim, {mul3(a, y, z, x), unit, basis_vec(w)}, Int(1));
        // d (x) bc (x) a
        add_tensor_term(d2, col, dim, {basis_vec(w), a.basis_product(y, z), basis_vec(x)},
                        Int(1));
        ++col;
    } while (next_tuple(t, dim));
    for (int g = 0; g < dim; ++g)
        add_tensor_term(d2, n4 + g, dim, {unit, basis_vec(g), unit}, Int(1));
    return d2;
}

}  // namespace

PartialComplex build_partial_complex(const FinAlgebra& a) {
    PartialComplex cx{build_d1(a), build_d2(a)};
    SparseIntMatrix prod = cx.d1 * cx.d2;
    if (!prod.is_zero())
        throw NotAComplex("partial complex: d1*d2 nonzero at column " +
                          std::to_string(prod.entries().begin()->first.second));
    return cx;
}

HomologyGroup hs0(const FinAlgebra& a) {
    SparseIntMatrix d1 = build_d1(a);
    return homology(SparseIntMatrix(0, a.dim()), d1);
}

namespace {

SparseIntMatrix span_matrix(int dim, const std::vector<SparseVec>& vs) {
    SparseIntMatrix m(dim, (int)vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c)
        for (const auto& [k, v] : vs[c]) m.set(k, (int)c, v);
    return m;
}

// one round of left/right basis multiplication added to the generators
std::vector<SparseVec> multiply_round(const FinAlgebra& a,
                                      const std::vector<SparseVec>& gens) {
    std::vector<SparseVec> next = gens;
    for (const SparseVec& v : gens)
        for (int b = 0; b < a.dim(); ++b) {
            SparseVec left = a.multiply(basis_vec(b), v);
            SparseVec right = a.multiply(v, basis_vec(b));
            if (!left.empty()) next.push_back(std::move(left));
            if (!right.empty()) next.push_back(std::move(right));
        }
    return next;
}

}  // namespace

HomologyGroup hs0_via_ideal(const FinAlgebra& a, int* rounds_taken) {
    int dim = a.dim();
    // commutator span [A,A]
    std::vector<SparseVec> gens;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            SparseVec v = a.basis_product(i, j);
            for (const auto& [k, c] : a.basis_product(j, i)) {
                Int& dst = v[k];
                dst -= c;
                if (dst == 0) v.erase(k);
            }
            if (!v.empty()) gens.push_back(std::move(v));
        }
    SparseIntMatrix hnf = column_hnf(span_matrix(dim, gens));
    int rounds = 0;
    for (;;) {
        std::vector<SparseVec> next = multiply_round(a, gens);
        SparseIntMatrix next_hnf = column_hnf(span_matrix(dim, next));
        ++rounds;
        if (next_hnf == hnf) break;
        gens = std::move(next);
        hnf = std::move(next_hnf);
    }
    if (rounds_taken) *rounds_taken = rounds;
    return homology(SparseIntMatrix(0, dim), hnf);
}

bool triple_span_is_ideal(const FinAlgebra& a) {
    int dim = a.dim();
    std::vector<SparseVec> gens;
    std::vector<int> t = first_tuple(3);
    do {
        SparseVec v = mul3(a, t[0], t[1], t[2]);
        for (const auto& [k, c] : mul3(a, t[2], t[1], t[0])) {
            Int& dst = v[k];
            dst -= c;
            if (dst == 0) v.erase(k);
        }
        if (!v.empty()) gens.push_back(std::move(v));
    } while (next_tuple(t, dim));
    SparseIntMatrix before = column_hnf(span_matrix(dim, gens));
    SparseIntMatrix after = column_hnf(span_matrix(dim, multiply_round(a, gens)));
    return before == after;
}

HomologyGroup hs1(const FinAlgebra& a) {
    PartialComplex cx = build_partial_complex(a);
    return homology(cx.d1, cx.d2);
}

HomologyGroup LayeredReport::merged_hs0() const {
    HomologyGroup g;
    for (const Layer& l : layers) g = direct_sum(g, l.hs0);
    return g;
}

HomologyGroup LayeredReport::merged_hs1() const {
    HomologyGroup g;
    for (const Layer& l : layers) g = direct_sum(g, l.hs1);
    return g;
}

namespace {

struct LayerSlices {
    std::vector<int> deg0, deg1, deg2;  // selected indices per chain degree
};

LayerSlices layer_slices(const FinAlgebra& a, const MonoidGrading& g, int label) {
    LayerSlices s;
    int dim = a.dim();
    for (int i = 0; i < dim; ++i)
        if (g.layer_of_basis[i] == label) s.deg0.push_back(i);
    std::vector<int> t = first_tuple(3);
    long idx = 0;
    do {
        if (layer_of(t, g) == label) s.deg1.push_back((int)idx);
        ++idx;
    } while (next_tuple(t, dim));
    t = first_tuple(4);
    idx = 0;
    do {
        if (layer_of(t, g) == label) s.deg2.push_back((int)idx);
        ++idx;
    } while (next_tuple(t, dim));
    long n4 = power_dim(dim, 4);
    for (int i = 0; i < dim; ++i)
        if (g.layer_of_basis[i] == label) s.deg2.push_back((int)(n4 + i));
    return s;
}

}  // namespace

LayeredReport hs_layered(const FinAlgebra& a) {
    if (!a.grading()) throw UngradedAlgebra(a.name());
    const MonoidGrading& g = *a.grading();
    if (!g.is_commutative()) throw NonCommutativeMonoid(a.name());
    PartialComplex cx = build_partial_complex(a);
    std::vector<int> label_order;
    for (int i = 0; i < a.dim(); ++i) {
        int l = g.layer_of_basis[i];
        if (std::find(label_order.begin(), label_order.end(), l) == label_order.end())
            label_order.push_back(l);
    }
    if (g.zero_label >= 0) label_order.push_back(g.zero_label);
    LayeredReport report;
    for (int label : label_order) {
        LayerSlices s = layer_slices(a, g, label);
        SparseIntMatrix d1 = cx.d1.select(s.deg0, s.deg1);
        SparseIntMatrix d2 = cx.d2.select(s.deg1, s.deg2);
        LayeredReport::Layer layer;
        layer.label = g.labels[label];
        layer.hs0 = homology(SparseIntMatrix(0, (int)s.deg0.size()), d1);
        layer.hs1 = homology(d1, d2);
        report.layers.push_back(std::move(layer));
    }
    return report;
}

HomologyGroup free_monoid_layer(int m) {
    if (m < 0) throw DegreeOutOfRange("free_monoid_layer: m < 0");
    FinAlgebra a = cyclic_monoid_ring(m + 2, m + 1);
    const MonoidGrading& g = *a.grading();
    PartialComplex cx = build_partial_complex(a);
    LayerSlices s = layer_slices(a, g, m);  // label index of s^m
    SparseIntMatrix d1 = cx.d1.select(s.deg0, s.deg1);
    SparseIntMatrix d2 = cx.d2.select(s.deg1, s.deg2);
    return homology(d1, d2);
}

namespace {

SparseIntMatrix action_matrix(const FinAlgebra& a, int g, bool left) {
    int dim = a.dim();
    long n3 = power_dim(dim, 3);
    SparseIntMatrix m((int)n3, (int)n3);
    std::vector<int> t = first_tuple(3);
    long col = 0;
    do {
        int x = t[0], y = t[1], z = t[2];
        if (left) {
            // ax (x) y (x) z - x (x) ya (x) z + x (x) y (x) az
            add_tensor_term(m, col, dim,
                            {a.basis_product(g, x), basis_vec(y), basis_vec(z)}, Int(1));
            add_tensor_term(m, col, dim,
                            {basis_vec(x), a.basis_product(y, g), basis_vec(z)}, Int(-1));
            add_tensor_term(m, col, dim,
                            {basis_vec(x), basis_vec(y), a.basis_product(g, z)}, Int(1));
        } else {
            // xa (x) y (x) z - x (x) ay (x) z + x (x) y (x) za
            add_tensor_term(m, col, dim,
                            {a.basis_product(x, g), basis_vec(y), basis_vec(z)}, Int(1));
            add_tensor_term(m, col, dim,
                            {basis_vec(x), a.basis_product(g, y), basis_vec(z)}, Int(-1));
            add_tensor_term(m, col, dim,
                            {basis_vec(x), basis_vec(y), a.basis_product(z, g)}, Int(1));
        }
        ++col;
    } while (next_tuple(t, dim));
    return m;
}

std::vector<Int> column_of(const SparseIntMatrix& m, int col) {
    std::vector<Int> v(m.rows(), Int(0));
    for (const auto& [rc, x] : m.entries())
        if (rc.second == col) v[rc.first] = x;
    return v;
}

}  // namespace

Hs0ActionReport hs0_action_on_hs1(const FinAlgebra& a) {
    PartialComplex cx = build_partial_complex(a);
    SparseIntMatrix kernel = kernel_basis(cx.d1);
    SparseIntMatrix x = express_in_lattice_basis(kernel, cx.d2);
    QuotientPresentation pres = cokernel_presentation(x);
    std::vector<int> gen_coords = pres.generator_coords();

    Hs0ActionReport report;
    report.group = pres.group();
    for (int c : gen_coords) report.generator_orders.push_back(pres.order_of_coord[c]);

    // cycle representatives: columns of kernel * u_inv restricted to generators
    SparseIntMatrix gen_select((int)pres.ambient, (int)gen_coords.size());
    for (std::size_t j = 0; j < gen_coords.size(); ++j)
        gen_select.set(gen_coords[j], (int)j, Int(1));
    SparseIntMatrix cycles = kernel * (pres.u_inv * gen_select);

    auto induced = [&](bool left) {
        std::vector<SparseIntMatrix> out;
        for (int g = 0; g < a.dim(); ++g) {
            SparseIntMatrix chain = action_matrix(a, g, left) * cycles;
            if (!(cx.d1 * chain).is_zero())
                throw Error("Internal", "action image is not a cycle");
            SparseIntMatrix coords = express_in_lattice_basis(kernel, chain);
            SparseIntMatrix m((int)gen_coords.size(), (int)gen_coords.size());
            for (int j = 0; j < coords.cols(); ++j) {
                std::vector<Int> red = pres.reduce(column_of(coords, j));
                for (std::size_t i = 0; i < gen_coords.size(); ++i)
                    m.set((int)i, j, red[gen_coords[i]]);
            }
            out.push_back(std::move(m));
        }
        return out;
    };
    report.left_action = induced(true);
    report.right_action = induced(false);
    report.left_equals_right = report.left_action == report.right_action;

    // the unit acts as the identity: sum unit_g * M_g reduces to I
    SparseIntMatrix unit_act((int)gen_coords.size(), (int)gen_coords.size());
    for (int g = 0; g < a.dim(); ++g)
        if (a.unit()[g] != 0)
            for (const auto& [rc, v] : report.left_action[g].entries())
                unit_act.add(rc.first, rc.second, a.unit()[g] * v);
    bool ok = true;
    for (std::size_t i = 0; i < gen_coords.size() && ok; ++i) {
        std::vector<Int> col = column_of(unit_act, (int)i);
        for (std::size_t r = 0; r < gen_coords.size() && ok; ++r) {
            Int expect = r == i ? 1 : 0;
            Int diff = col[r] - expect;
            const Int& ord = report.generator_orders[r];
            if (ord > 0) mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), ord.get_mpz_t());
            if (diff != 0) ok = false;
        }
    }
    report.unit_acts_as_identity = ok;
    return report;
}

namespace {

SparseIntMatrix build_d1_cyc(const FinAlgebra& a) {
    int dim = a.dim();
    SparseIntMatrix m(dim, (int)power_dim(dim, 2));
    std::vector<int> t = first_tuple(2);
    long col = 0;
    do {
        SparseVec v = a.basis_product(t[0], t[1]);
        for (const auto& [k, c] : a.basis_product(t[1], t[0])) {
            Int& dst = v[k];
            dst -= c;
            if (dst == 0) v.erase(k);
        }
        for (const auto& [k, c] : v) m.add(k, (int)col, c);
        ++col;
    } while (next_tuple(t, dim));
    return m;
}

SparseIntMatrix build_d2_cyc(const FinAlgebra& a) {
    int dim = a.dim();
    long n3 = power_dim(dim, 3);
    SparseIntMatrix m((int)power_dim(dim, 2), (int)(n3 + dim));
    SparseVec unit = a.unit_vec();
    std::vector<int> t = first_tuple(3);
    long col = 0;
    do {
        int x = t[0], y = t[1], z = t[2];
        // ab (x) c - a (x) bc + ca (x) b
        add_tensor_term(m, col, dim, {a.basis_product(x, y), basis_vec(z)}, Int(1));
        add_tensor_term(m, col, dim, {basis_vec(x), a.basis_product(y, z)}, Int(-1));
        add_tensor_term(m, col, dim, {a.basis_product(z, x), basis_vec(y)}, Int(1));
        ++col;
    } while (next_tuple(t, dim));
    for (int g = 0; g < dim; ++g) {
        // 1 (x) a - a (x) 1
        add_tensor_term(m, n3 + g, dim, {unit, basis_vec(g)}, Int(1));
        add_tensor_term(m, n3 + g, dim, {basis_vec(g), unit}, Int(-1));
    }
    return m;
}

SparseIntMatrix build_gamma1(const FinAlgebra& a) {
    int dim = a.dim();
    SparseIntMatrix m((int)power_dim(dim, 3), (int)power_dim(dim, 2));
    SparseVec unit = a.unit_vec();
    std::vector<int> t = first_tuple(2);
    long col = 0;
    do {
        add_tensor_term(m, col, dim, {basis_vec(t[0]), basis_vec(t[1]), unit}, Int(1));
        ++col;
    } while (next_tuple(t, dim));
    return m;
}

SparseIntMatrix build_gamma2(const FinAlgebra& a) {
    int dim = a.dim();
    long n3 = power_dim(dim, 3), n4 = power_dim(dim, 4);
    SparseIntMatrix m((int)(n4 + dim), (int)(n3 + dim));
    SparseVec unit = a.unit_vec();
    std::vector<int> t = first_tuple(3);
    long col = 0;
    do {
        int x = t[0], y = t[1], z = t[2];
        add_tensor_term(m, col, dim,
                        {basis_vec(x), basis_vec(y), basis_vec(z), unit}, Int(1));
        add_tensor_term(m, col, dim, {unit, basis_vec(x), a.basis_product(y, z), unit},
                        Int(-1));
        add_tensor_term(m, col, dim, {unit, a.basis_product(z, x), basis_vec(y), unit},
                        Int(1));
        add_tensor_term(m, col, dim, {unit, unit, mul3(a, x, y, z), unit}, Int(1));
        add_tensor_term(m, col, dim, {basis_vec(y), a.basis_product(z, x), unit, unit},
                        Int(-1));
        // A summand: -2abc - cab
        for (const auto& [k, c] : mul3(a, x, y, z)) m.add((int)(n4 + k), (int)col, -2 * c);
        for (const auto& [k, c] : mul3(a, z, x, y)) m.add((int)(n4 + k), (int)col, -c);
        ++col;
    } while (next_tuple(t, dim));
    for (int g = 0; g < dim; ++g) {
        add_tensor_term(m, n3 + g, dim, {unit, unit, basis_vec(g), unit}, Int(-1));
        m.add((int)(n4 + g), (int)(n3 + g), Int(4));
    }
    return m;
}

// the second term of d2 with the opposite sign, as printed in the cyclic
// comparison section; kept solely to document which transcription is the
// consistent one
SparseIntMatrix build_d2_variant(const FinAlgebra& a) {
    int dim = a.dim();
    long n4 = power_dim(dim, 4);
    SparseIntMatrix d2((int)power_dim(dim, 3), (int)(n4 + dim));
    SparseVec unit = a.unit_vec();
    std::vector<int> t = first_tuple(4);
    long col = 0;
    do {
        int x = t[0], y = t[1], z = t[2], w = t[3];
        add_tensor_term(d2, col, dim, {a.basis_product(x, y), basis_vec(z), basis_vec(w)},
                        Int(1));
        add_tensor_term(d2, col, dim, {basis_vec(w), a.basis_product(z, x), basis_vec(y)},
                        Int(-1));
        add_tensor_term(d2, col, dim, {mul3(a, y, z, x), unit, basis_vec(w)}, Int(1));
        add_tensor_term(d2, col, dim, {basis_vec(w), a.basis_product(y, z), basis_vec(x)},
                        Int(1));
        ++col;
    } while (next_tuple(t, dim));
    for (int g = 0; g < dim; ++g)
        add_tensor_term(d2, n4 + g, dim, {unit, basis_vec(g), unit}, Int(1));
    return d2;
}

std::string tuple_name(const FinAlgebra& a, long idx, int arity, long offset_dim) {
    if (idx >= offset_dim && arity > 0) {
        // A-summand column
        return a.basis_names()[(int)(idx - offset_dim)];
    }
    std::vector<int> t(arity);
    for (int i = arity - 1; i >= 0; --i) {
        t[i] = (int)(idx % a.dim());
        idx /= a.dim();
    }
    std::string s;
    for (int i = 0; i < arity; ++i) s += (i ? "(x)" : "") + a.basis_names()[t[i]];
    return s;
}

}  // namespace

CyclicComparison cyclic_low_complex(const FinAlgebra& a) {
    CyclicComparison out;
    PartialComplex cx = build_partial_complex(a);
    out.d1_cyc = build_d1_cyc(a);
    out.d2_cyc = build_d2_cyc(a);
    SparseIntMatrix prod = out.d1_cyc * out.d2_cyc;
    if (!prod.is_zero()) throw NotAComplex("cyclic complex: d1*d2 nonzero");
    out.gamma1 = build_gamma1(a);
    out.gamma2 = build_gamma2(a);

    bool square1 = (cx.d1 * out.gamma1) == out.d1_cyc;
    SparseIntMatrix lhs = out.gamma1 * out.d2_cyc;
    bool square2 = (cx.d2 * out.gamma2) == lhs;
    out.squares_commute = square1 && square2;
    if (!out.squares_commute)
        throw ChainMapViolation("gamma squares fail for " + a.name());

    SparseIntMatrix variant = build_d2_variant(a) * out.gamma2;
    out.variant_commutes = variant == lhs;
    if (!out.variant_commutes) {
        // witness: first column where the squares differ
        long n3 = power_dim(a.dim(), 3);
        for (int c = 0; c < lhs.cols(); ++c) {
            bool differ = false;
            for (int r = 0; r < lhs.rows() && !differ; ++r)
                if (lhs.get(r, c) != variant.get(r, c)) differ = true;
            if (differ) {
                out.variant_witness = tuple_name(a, c, 3, n3);
                break;
            }
        }
    }

    // homology groups and induced maps
    QuotientPresentation hc0_pres = cokernel_presentation(out.d1_cyc);
    QuotientPresentation hs0_pres = cokernel_presentation(cx.d1);
    out.hc0 = hc0_pres.group();
    out.hs0 = hs0_pres.group();
    std::vector<int> hc0_gens = hc0_pres.generator_coords();
    std::vector<int> hs0_gens = hs0_pres.generator_coords();
    out.hc0_to_hs0 = SparseIntMatrix((int)hs0_gens.size(), (int)hc0_gens.size());
    for (std::size_t j = 0; j < hc0_gens.size(); ++j) {
        std::vector<Int> rep = column_of(hc0_pres.u_inv, hc0_gens[j]);
        std::vector<Int> red = hs0_pres.reduce(rep);
        for (std::size_t i = 0; i < hs0_gens.size(); ++i)
            out.hc0_to_hs0.set((int)i, (int)j, red[hs0_gens[i]]);
    }

    SparseIntMatrix kc = kernel_basis(out.d1_cyc);
    SparseIntMatrix xc = express_in_lattice_basis(kc, out.d2_cyc);
    QuotientPresentation hc1_pres = cokernel_presentation(xc);
    out.hc1 = hc1_pres.group();
    SparseIntMatrix ks = kernel_basis(cx.d1);
    SparseIntMatrix xs = express_in_lattice_basis(ks, cx.d2);
    QuotientPresentation hs1_pres = cokernel_presentation(xs);
    out.hs1 = hs1_pres.group();
    std::vector<int> hc1_gens = hc1_pres.generator_coords();
    std::vector<int> hs1_gens = hs1_pres.generator_coords();
    SparseIntMatrix gen_select((int)hc1_pres.ambient, (int)hc1_gens.size());
    for (std::size_t j = 0; j < hc1_gens.size(); ++j)
        gen_select.set(hc1_gens[j], (int)j, Int(1));
    SparseIntMatrix reps = out.gamma1 * (kc * (hc1_pres.u_inv * gen_select));
    SparseIntMatrix coords = express_in_lattice_basis(ks, reps);
    out.hc1_to_hs1 = SparseIntMatrix((int)hs1_gens.size(), (int)hc1_gens.size());
    for (std::size_t j = 0; j < hc1_gens.size(); ++j) {
        std::vector<Int> red = hs1_pres.reduce(column_of(coords, (int)j));
        for (std::size_t i = 0; i < hs1_gens.size(); ++i)
            out.hc1_to_hs1.set((int)i, (int)j, red[hs1_gens[i]]);
    }
    return out;
}

}  // namespace symhom
