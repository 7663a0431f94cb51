#include "symhom/algebra.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "symhom/errors.hpp"

namespace symhom {

bool MonoidGrading::is_commutative() const {
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b)
            if (product[a][b] != product[b][a]) return false;
    return true;
}

int MonoidGrading::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return (int)i;
    throw std::out_of_range("unknown monoid label " + name);
}

FinAlgebra::FinAlgebra(std::string name, std::vector<std::string> basis_names,
                       std::vector<Int> unit, std::vector<SparseVec> structure,
                       std::optional<MonoidGrading> grading)
    : name_(std::move(name)),
      dim_((int)basis_names.size()),
      basis_names_(std::move(basis_names)),
      unit_(std::move(unit)),
      structure_(std::move(structure)),
      grading_(std::move(grading)) {
    if (dim_ <= 0) throw ShapeMismatch("algebra dimension must be positive");
    if ((int)unit_.size() != dim_ || structure_.size() != (std::size_t)dim_ * dim_)
        throw ShapeMismatch("algebra spec shapes inconsistent");
    validate();
}

SparseVec FinAlgebra::unit_vec() const {
    SparseVec u;
    for (int i = 0; i < dim_; ++i)
        if (unit_[i] != 0) u[i] = unit_[i];
    return u;
}

SparseVec FinAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            Int c = x * y;
            for (const auto& [k, s] : basis_product(i, j)) {
                Int& dst = out[k];
                dst += c * s;
                if (dst == 0) out.erase(k);
            }
        }
    return out;
}

void FinAlgebra::validate() const {
    SparseVec u = unit_vec();
    for (int i = 0; i < dim_; ++i) {
        SparseVec bi{{i, Int(1)}};
        if (multiply(u, bi) != bi || multiply(bi, u) != bi)
            throw NotUnital("unit fails on basis element " + std::to_string(i) + " (" +
                            basis_names_[i] + ")");
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                SparseVec bi{{i, Int(1)}}, bj{{j, Int(1)}}, bk{{k, Int(1)}};
                if (multiply(multiply(bi, bj), bk) != multiply(bi, multiply(bj, bk)))
                    throw NotAssociative("witness triple (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) +
                                         ")");
            }
    if (grading_) {
        const MonoidGrading& g = *grading_;
        if ((int)g.layer_of_basis.size() != dim_)
            throw ShapeMismatch("grading does not cover the basis");
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                int l = g.times(g.layer_of_basis[i], g.layer_of_basis[j]);
                for (const auto& [k, c] : basis_product(i, j)) {
                    if (l == g.zero_label || g.layer_of_basis[k] != l)
                        throw ShapeMismatch("grading violated by product " +
                                            basis_names_[i] + "*" + basis_names_[j]);
                }
            }
    }
}

std::string FinAlgebra::content_key() const {
    std::ostringstream os;
    os << dim_ << ';';
    for (const Int& u : unit_) os << u.get_str() << ',';
    os << ';';
    for (std::size_t s = 0; s < structure_.size(); ++s)
        for (const auto& [k, c] : structure_[s])
            os << s << ':' << k << ':' << c.get_str() << ',';
    // FNV-1a over the serialized structure
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : os.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream key;
    key << std::hex << h;
    return key.str();
}

FinAlgebra build_algebra(int dim, const std::vector<std::string>& basis_names,
                         const std::vector<Int>& unit,
                         const std::vector<std::array<long, 3>>& triples,
                         const std::vector<Int>& coeffs,
                         std::optional<MonoidGrading> grading, const std::string& name) {
    if (triples.size() != coeffs.size()) throw ShapeMismatch("triples/coeffs mismatch");
    std::vector<SparseVec> structure((std::size_t)dim * dim);
    for (std::size_t t = 0; t < triples.size(); ++t) {
        auto [i, j, k] = triples[t];
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
            throw ShapeMismatch("structure index out of range");
        Int& dst = structure[(std::size_t)i * dim + j][(int)k];
        dst += coeffs[t];
        if (dst == 0) structure[(std::size_t)i * dim + j].erase((int)k);
    }
    std::vector<std::string> names = basis_names;
    if (names.empty())
        for (int i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i));
    return FinAlgebra(name, names, unit, std::move(structure), std::move(grading));
}

AlgebraTensor AlgebraTensor::basis_tuple(std::vector<int> idx) {
    AlgebraTensor t;
    t.arity = (int)idx.size();
    t.terms[std::move(idx)] = 1;
    return t;
}

AlgebraTensor apply_morphism(const DeltaSMorphism& f, const AlgebraTensor& t,
                             const FinAlgebra& a) {
    if (f.source() + 1 != t.arity)
        throw ArityMismatch("morphism expects arity " + std::to_string(f.source() + 1) +
                            ", tensor has " + std::to_string(t.arity));
    AlgebraTensor out;
    out.arity = f.target() + 1;
    for (const auto& [tuple, coeff] : t.terms) {
        // per-block products
        std::vector<SparseVec> factors;
        factors.reserve(f.blocks().size());
        bool dead = false;
        for (const auto& block : f.blocks()) {
            SparseVec v = a.unit_vec();
            for (int idx : block) v = a.multiply(v, SparseVec{{tuple[idx], Int(1)}});
            if (v.empty()) {
                dead = true;
                break;
            }
            factors.push_back(std::move(v));
        }
        if (dead) continue;
        // expand the outer product
        std::vector<SparseVec::const_iterator> its;
        for (const auto& v : factors) its.push_back(v.begin());
        for (;;) {
            std::vector<int> key(factors.size());
            Int c = coeff;
            for (std::size_t b = 0; b < factors.size(); ++b) {
                key[b] = its[b]->first;
                c *= its[b]->second;
            }
            Int& dst = out.terms[key];
            dst += c;
            if (dst == 0) out.terms.erase(key);
            std::size_t b = factors.size();
            while (b > 0) {
                --b;
                if (++its[b] != factors[b].end()) break;
                its[b] = factors[b].begin();
                if (b == 0) {
                    b = SIZE_MAX;
                    break;
                }
            }
            if (b == SIZE_MAX || factors.empty()) break;
        }
    }
    return out;
}

int layer_of(const std::vector<int>& tuple, const MonoidGrading& g) {
    int acc = -1;
    for (int idx : tuple) {
        int l = g.layer_of_basis.at(idx);
        acc = acc < 0 ? l : g.times(acc, l);
    }
    if (acc < 0) throw ShapeMismatch("layer_of: empty tuple");
    return acc;
}

// ---- presets ----------------------------------------------------------------

FinAlgebra trunc_poly(const std::vector<int>& exponents) {
    if (exponents.empty()) throw std::domain_error("trunc_poly: no exponents");
    for (int e : exponents)
        if (e < 2) throw std::domain_error("trunc_poly: exponents must be >= 2");
    int r = (int)exponents.size();
    std::vector<std::vector<int>> monomials;
    std::vector<int> cur(r, 0);
    for (;;) {
        monomials.push_back(cur);
        int pos = r - 1;
        while (pos >= 0 && cur[pos] == exponents[pos] - 1) cur[pos--] = 0;
        if (pos < 0) break;
        ++cur[pos];
    }
    std::sort(monomials.begin(), monomials.end());
    auto mono_name = [&](const std::vector<int>& m) {
        std::string s;
        for (int v = 0; v < r; ++v) {
            if (m[v] == 0) continue;
            if (!s.empty()) s += "*";
            s += r == 1 ? "t" : "t" + std::to_string(v + 1);
            if (m[v] > 1) s += "^" + std::to_string(m[v]);
        }
        return s.empty() ? std::string("1") : s;
    };
    int dim = (int)monomials.size();
    std::map<std::vector<int>, int> index;
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i) {
        index[monomials[i]] = i;
        names.push_back(mono_name(monomials[i]));
    }
    std::vector<SparseVec> structure((std::size_t)dim * dim);
    MonoidGrading g;
    g.labels = names;
    g.labels.push_back("0");
    g.zero_label = dim;
    g.layer_of_basis.resize(dim);
    std::iota(g.layer_of_basis.begin(), g.layer_of_basis.end(), 0);
    g.product.assign(dim + 1, std::vector<int>(dim + 1, dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::vector<int> sum(r);
            bool zero = false;
            for (int v = 0; v < r; ++v) {
                sum[v] = monomials[i][v] + monomials[j][v];
                if (sum[v] >= exponents[v]) zero = true;
            }
            if (!zero) {
                structure[(std::size_t)i * dim + j][index[sum]] = 1;
                g.product[i][j] = index[sum];
            }
        }
    std::vector<Int> unit(dim, Int(0));
    unit[index[std::vector<int>(r, 0)]] = 1;
    std::string name = "trunc_poly(";
    for (int v = 0; v < r; ++v) name += (v ? "," : "") + std::to_string(exponents[v]);
    name += ")";
    return FinAlgebra(name, names, unit, std::move(structure), std::move(g));
}

FinAlgebra monoid_ring(const std::vector<std::string>& labels,
                       const std::vector<std::vector<int>>& table, int zero_label,
                       const std::string& name) {
    int n = (int)labels.size();
    if ((int)table.size() != n) throw ShapeMismatch("monoid table shape");
    for (const auto& row : table)
        if ((int)row.size() != n) throw ShapeMismatch("monoid table shape");
    // identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = e != zero_label;
        for (int x = 0; x < n && ok; ++x)
            if (table[e][x] != x || table[x][e] != x) ok = false;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw NoIdentity("monoid table has no identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw NotAssociative("monoid table at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) +
                                         ")");
    if (zero_label >= 0)
        for (int x = 0; x < n; ++x)
            if (table[zero_label][x] != zero_label || table[x][zero_label] != zero_label)
                throw ShapeMismatch("declared zero label is not absorbing");
    // basis = non-zero labels
    std::vector<int> basis_of_label(n, -1);
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) {
        if (x == zero_label) continue;
        basis_of_label[x] = (int)names.size();
        names.push_back(labels[x]);
    }
    int dim = (int)names.size();
    std::vector<SparseVec> structure((std::size_t)dim * dim);
    MonoidGrading g;
    g.labels = labels;
    g.zero_label = zero_label;
    g.product = table;
    g.layer_of_basis.resize(dim);
    for (int x = 0; x < n; ++x)
        if (basis_of_label[x] >= 0) g.layer_of_basis[basis_of_label[x]] = x;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int bx = basis_of_label[x], by = basis_of_label[y];
            if (bx < 0 || by < 0) continue;
            int bz = basis_of_label[table[x][y]];
            if (bz >= 0) structure[(std::size_t)bx * dim + by][bz] = 1;
        }
    std::vector<Int> unit(dim, Int(0));
    unit[basis_of_label[id]] = 1;
    return FinAlgebra(name, names, unit, std::move(structure), std::move(g));
}

FinAlgebra cyclic_group_ring(int n) {
    if (n < 1) throw std::domain_error("cyclic_group: order must be >= 1");
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k)
        labels.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return monoid_ring(labels, table, -1, "cyclic_group(" + std::to_string(n) + ")");
}

FinAlgebra abelian_group_ring(const std::vector<int>& orders) {
    if (orders.empty()) throw std::domain_error("abelian_group: empty order list");
    for (int n : orders)
        if (n < 1) throw std::domain_error("abelian_group: orders must be >= 1");
    int r = (int)orders.size();
    std::vector<std::vector<int>> elems;
    std::vector<int> cur(r, 0);
    for (;;) {
        elems.push_back(cur);
        int pos = r - 1;
        while (pos >= 0 && cur[pos] == orders[pos] - 1) cur[pos--] = 0;
        if (pos < 0) break;
        ++cur[pos];
    }
    std::map<std::vector<int>, int> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        index[elems[i]] = (int)i;
        std::string s;
        for (int v = 0; v < r; ++v) {
            if (elems[i][v] == 0) continue;
            if (!s.empty()) s += "*";
            s += "g" + std::to_string(v + 1);
            if (elems[i][v] > 1) s += "^" + std::to_string(elems[i][v]);
        }
        labels.push_back(s.empty() ? "1" : s);
    }
    int n = (int)elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> sum(r);
            for (int v = 0; v < r; ++v) sum[v] = (elems[a][v] + elems[b][v]) % orders[v];
            table[a][b] = index[sum];
        }
    std::string name = "abelian_group(";
    for (int v = 0; v < r; ++v) name += (v ? "," : "") + std::to_string(orders[v]);
    name += ")";
    return monoid_ring(labels, table, -1, name);
}

FinAlgebra symmetric_group_ring(int n) {
    if (n < 1) throw std::domain_error("symmetric_group: degree must be >= 1");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        index[perms[i]] = (int)i;
        std::string s = "[";
        for (int v = 0; v < n; ++v) s += (v ? "," : "") + std::to_string(perms[i][v]);
        labels.push_back(s + "]");
    }
    int sz = (int)perms.size();
    std::vector<std::vector<int>> table(sz, std::vector<int>(sz));
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            table[a][b] = index[comp];
        }
    return monoid_ring(labels, table, -1, "symmetric_group(" + std::to_string(n) + ")");
}

FinAlgebra matrix_ring(int n) {
    if (n < 1) throw std::domain_error("matrix_ring: size must be >= 1");
    int dim = n * n;
    std::vector<std::string> names;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            names.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
    std::vector<SparseVec> structure((std::size_t)dim * dim);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (b == c)
                        structure[(std::size_t)(a * n + b) * dim + (c * n + d)]
                                 [a * n + d] = 1;
    std::vector<Int> unit(dim, Int(0));
    for (int r = 0; r < n; ++r) unit[r * n + r] = 1;
    return FinAlgebra("matrix_ring(" + std::to_string(n) + ")", names, unit,
                      std::move(structure));
}

FinAlgebra cyclic_monoid_ring(int p, int q) {
    if (!(p > q && q >= 0)) throw std::domain_error("cyclic_monoid: need p > q >= 0");
    std::vector<std::string> labels;
    for (int k = 0; k < p; ++k)
        labels.push_back(k == 0 ? "1" : (k == 1 ? "s" : "s^" + std::to_string(k)));
    std::vector<std::vector<int>> table(p, std::vector<int>(p));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            int s = a + b;
            if (s >= p) s = q + (s - q) % (p - q);
            table[a][b] = s;
        }
    return monoid_ring(labels, table, -1,
                       "cyclic_monoid(" + std::to_string(p) + "," + std::to_string(q) +
                           ")");
}

FinAlgebra quaternion_units() {
    // elements encoded as (axis, sign): axis 0 = 1, 1 = i, 2 = j, 3 = k
    auto idx = [](int axis, int neg) { return axis * 2 + neg; };
    std::vector<std::string> labels(8);
    const char* axis_names[4] = {"1", "i", "j", "k"};
    for (int a = 0; a < 4; ++a) {
        labels[idx(a, 0)] = axis_names[a];
        labels[idx(a, 1)] = std::string("-") + axis_names[a];
    }
    // axis multiplication: (axis, sign) for each ordered pair
    int mul_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    int mul_neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // fix the signs: i*j=k, j*i=-k, j*k=i, k*j=-i, k*i=j, i*k=-j, x*x=-1
    mul_neg[1][1] = 1;
    mul_neg[2][2] = 1;
    mul_neg[3][3] = 1;
    mul_neg[1][2] = 0;
    mul_neg[2][1] = 1;
    mul_neg[2][3] = 0;
    mul_neg[3][2] = 1;
    mul_neg[3][1] = 0;
    mul_neg[1][3] = 1;
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 4; ++a)
        for (int sa = 0; sa < 2; ++sa)
            for (int b = 0; b < 4; ++b)
                for (int sb = 0; sb < 2; ++sb)
                    table[idx(a, sa)][idx(b, sb)] =
                        idx(mul_axis[a][b], (sa ^ sb ^ mul_neg[a][b]) & 1);
    return monoid_ring(labels, table, -1, "quaternion_units");
}

FinAlgebra preset_algebra(const std::string& literal) {
    std::string name = literal;
    std::vector<int> args;
    auto open = literal.find('(');
    if (open != std::string::npos) {
        if (literal.back() != ')') throw ParseError("preset literal: missing ')'");
        name = literal.substr(0, open);
        std::string inner = literal.substr(open + 1, literal.size() - open - 2);
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) continue;
            args.push_back(std::stoi(tok));
        }
    }
    if (name == "trunc_poly") return trunc_poly(args);
    if (name == "cyclic_group" && args.size() == 1) return cyclic_group_ring(args[0]);
    if (name == "abelian_group") return abelian_group_ring(args);
    if (name == "symmetric_group" && args.size() == 1)
        return symmetric_group_ring(args[0]);
    if (name == "matrix_ring" && args.size() == 1) return matrix_ring(args[0]);
    if (name == "cyclic_monoid" && args.size() == 2)
        return cyclic_monoid_ring(args[0], args[1]);
    if (name == "quaternion_units" && args.empty()) return quaternion_units();
    throw ParseError("unknown preset: " + literal);
}

FinAlgebra algebra_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int dim = j.at("dim").get<int>();
    std::vector<std::string> names = j.value("basis", std::vector<std::string>{});
    std::vector<Int> unit;
    for (const auto& u : j.at("unit")) unit.push_back(Int(u.get<long>()));
    std::vector<std::array<long, 3>> triples;
    std::vector<Int> coeffs;
    for (const auto& row : j.at("structure")) {
        triples.push_back({row.at(0).get<long>(), row.at(1).get<long>(),
                           row.at(2).get<long>()});
        coeffs.push_back(Int(row.at(3).get<long>()));
    }
    std::optional<MonoidGrading> grading;
    if (j.contains("grading")) {
        const auto& jg = j.at("grading");
        MonoidGrading g;
        g.labels = jg.at("labels").get<std::vector<std::string>>();
        if (jg.contains("zero")) {
            std::string z = jg.at("zero").get<std::string>();
            for (std::size_t i = 0; i < g.labels.size(); ++i)
                if (g.labels[i] == z) g.zero_label = (int)i;
            if (g.zero_label < 0) throw ParseError("grading zero label not in labels");
        }
        for (const auto& s : jg.at("layer_of_basis")) {
            std::string lab = s.get<std::string>();
            int li = -1;
            for (std::size_t i = 0; i < g.labels.size(); ++i)
                if (g.labels[i] == lab) li = (int)i;
            if (li < 0) throw ParseError("layer label not in labels: " + lab);
            g.layer_of_basis.push_back(li);
        }
        g.product = jg.at("product").get<std::vector<std::vector<int>>>();
        grading = std::move(g);
    }
    return build_algebra(dim, names, unit, triples, coeffs, std::move(grading),
                         j.value("name", "custom"));
}

std::string algebra_to_json_text(const FinAlgebra& a) {
    nlohmann::json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();
    std::vector<long> unit;
    for (const Int& u : a.unit()) unit.push_back((long)u.get_si());
    j["unit"] = unit;
    nlohmann::json st = nlohmann::json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int jj = 0; jj < a.dim(); ++jj)
            for (const auto& [k, c] : a.basis_product(i, jj))
                st.push_back({i, jj, k, (long)c.get_si()});
    j["structure"] = st;
    if (a.grading()) {
        const MonoidGrading& g = *a.grading();
        nlohmann::json jg;
        jg["labels"] = g.labels;
        if (g.zero_label >= 0) jg["zero"] = g.labels[g.zero_label];
        std::vector<std::string> lob;
        for (int l : g.layer_of_basis) lob.push_back(g.labels[l]);
        jg["layer_of_basis"] = lob;
        jg["product"] = g.product;
        j["grading"] = jg;
    }
    return j.dump(2);
}

std::vector<int> first_tuple(int arity) { return std::vector<int>(arity, 0); }

bool next_tuple(std::vector<int>& t, int dim) {
    int pos = (int)t.size() - 1;
    while (pos >= 0 && t[pos] == dim - 1) t[pos--] = 0;
    if (pos < 0) return false;
    ++t[pos];
    return true;
}

long tuple_index(const std::vector<int>& t, int dim) {
    long idx = 0;
    for (int v : t) idx = idx * dim + v;
    return idx;
}

long power_dim(int dim, int arity) {
    long d = 1;
    for (int i = 0; i < arity; ++i) d *= dim;
    return d;
}

}  // namespace symhom
