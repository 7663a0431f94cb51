// Acceptance suite: runs every criterion end to end and prints one verdict
// line per criterion.  Extended (non-gating) checks report pass/skip without
// affecting the exit status.
//
// Environment:
//   SYMHOM_SKIP_EXTENDED=1  skip the extended checks (quick run)
//   SYMHOM_TRY_P7=1         also attempt the p = 7 Poincare polynomial

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "symhom/chessboard.hpp"
#include "symhom/deltas.hpp"
#include "symhom/hs_low.hpp"
#include "symhom/sym_complex.hpp"

using namespace symhom;

namespace {

int g_failures = 0;

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << "FAILED: " << what;
        }
    }
};

double run_criterion(int number, const std::string& description,
                     const std::function<void(Check&)>& body, double budget_seconds) {
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (budget_seconds > 0 && secs >= budget_seconds) {
        std::ostringstream os;
        os << "runtime " << secs << "s exceeds " << budget_seconds << "s";
        c.require(false, os.str());
    }
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << description << " (" << secs << "s)";
    if (!c.detail.str().empty()) std::cout << "  -- " << c.detail.str();
    std::cout << "\n" << std::flush;
    if (!c.ok) ++g_failures;
    return secs;
}

void run_extended(const std::string& label, const std::function<void(Check&)>& body,
                  bool enabled) {
    if (!enabled) {
        std::cout << "[SKIP] extended: " << label << "\n" << std::flush;
        return;
    }
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " extended: " << label << " (" << secs
              << "s)";
    if (!c.detail.str().empty()) std::cout << "  -- " << c.detail.str();
    std::cout << "\n" << std::flush;
    // extended checks are reported but never gate
}

HomologyGroup group_of(long free_rank, std::initializer_list<long> torsion) {
    HomologyGroup g;
    g.free_rank = free_rank;
    for (long t : torsion) g.torsion.push_back(Int(t));
    return g;
}

std::string show(const HomologyGroup& g) { return g.pretty(); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> im(n + 1);
    for (int i = 0; i <= n; ++i) im[i] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace

int main() {
    bool extended = std::getenv("SYMHOM_SKIP_EXTENDED") == nullptr;
    bool try_p7 = std::getenv("SYMHOM_TRY_P7") != nullptr;

    // 1. DeltaS combinatorics
    run_criterion(
        1, "DeltaS combinatorics: counts, enumeration, composition, factorization",
        [](Check& c) {
            c.require(count_morphisms(6, 4) == Int(1663200), "count 6 4");
            c.require(enumerate_morphisms(2, 2).size() == 60, "|enumerate(2,2)| = 60");
            c.require(enumerate_morphisms(2, 2, true).size() == 6, "epi subset = 6");
            DeltaSMorphism f = parse_morphism("[[4,0],[],[2,3],[1]]");
            DeltaSMorphism g = parse_morphism("[[1,6,0],[7,4],[],[3],[2,5]]");
            c.require(compose(f, g) == parse_morphism("[[2,5,1,6,0],[],[3],[7,4]]"),
                      "tensor composition example");
            for (int n = -1; n <= 3; ++n)
                for (int m = -1; m <= 3; ++m)
                    for (const auto& h : enumerate_morphisms(n, m)) {
                        auto [epi, mono] = epi_mono_factor(h);
                        if (!(epi.is_epi() && compose(mono, epi) == h)) {
                            c.require(false, "factorization round-trip at " + to_literal(h));
                            return;
                        }
                    }
        },
        1.0);

    // 2. Poincare polynomials and torsion-freeness
    run_criterion(
        2, "Sym Poincare polynomials P_0..P_5 and torsion-free integral homology",
        [](Check& c) {
            const std::vector<std::vector<long>> expected = {
                {1},          {0, 1},          {0, 1, 2},
                {0, 0, 7, 6}, {0, 0, 0, 43, 24}, {0, 0, 0, 1, 272, 120}};
            for (int p = 0; p <= 5; ++p) {
                auto betti = poincare_polynomial(p, 0);
                c.require(betti == expected[p],
                          "P_" + std::to_string(p) + " = " + poincare_to_string(betti));
                for (int i = 0; i <= p; ++i) {
                    HomologyGroup h = sym_integral_homology(p, i);
                    c.require(h.torsion.empty(), "torsion at (p,i) = (" +
                                                     std::to_string(p) + "," +
                                                     std::to_string(i) + ")");
                    c.require(h.free_rank == betti[i],
                              "integral rank vs Betti at p=" + std::to_string(p));
                }
            }
        },
        600.0);
    run_extended(
        "P_6 = 36t^4+1847t^5+720t^6",
        [](Check& c) {
            auto betti = poincare_polynomial(6, 0);
            c.require(betti == std::vector<long>({0, 0, 0, 0, 36, 1847, 720}),
                      "got " + poincare_to_string(betti));
        },
        extended);
    run_extended(
        "P_7 = 829t^5+13710t^6+5040t^7",
        [](Check& c) {
            auto betti = poincare_polynomial(7, 0);
            c.require(betti == std::vector<long>({0, 0, 0, 0, 0, 829, 13710, 5040}),
                      "got " + poincare_to_string(betti));
        },
        extended && try_p7);

    // 3. Top homology
    run_criterion(
        3, "top homology: rank H_p = p! and d(b_p) = 0 for p <= 5",
        [](Check& c) {
            long fact = 1;
            for (int p = 0; p <= 5; ++p) {
                if (p >= 2) fact *= p;
                c.require(sym_d(b_cycle(p)).empty(), "d(b_" + std::to_string(p) + ")");
                HomologyGroup h = sym_integral_homology(p, p);
                c.require(h.free_rank == fact && h.torsion.empty(),
                          "H_p rank at p=" + std::to_string(p));
            }
        },
        600.0);

    // 4. connectivity
    run_criterion(
        4, "connectivity: H_i(Sym^(p)) = 0 for i <= floor(2(p-1)/3), p <= 5",
        [](Check& c) {
            for (int p = 0; p <= 5; ++p) {
                int bound = (int)std::floor(2.0 * (p - 1) / 3.0);
                for (int i = 0; i <= std::min(bound, p); ++i) {
                    HomologyGroup h = sym_integral_homology(p, i);
                    c.require(h.is_trivial(), "H_" + std::to_string(i) + " at p=" +
                                                  std::to_string(p));
                }
            }
        },
        600.0);

    // 5. chessboard isomorphism
    run_criterion(
        5, "chessboard suspension: omega bijection, chain map, Betti equality, p <= 4",
        [](Check& c) {
            for (int p = 0; p <= 4; ++p) {
                OmegaIso iso = omega_iso(p);  // throws unless a bijection
                for (std::size_t d = 1; d < iso.tables.size(); ++d) {
                    SparseIntMatrix om_d((int)iso.sym_bases[d].size(),
                                         (int)iso.chess.bases[d].size());
                    for (std::size_t col = 0; col < iso.tables[d].size(); ++col)
                        om_d.set(iso.tables[d][col].second, (int)col,
                                 Int(iso.tables[d][col].first));
                    SparseIntMatrix om_prev((int)iso.sym_bases[d - 1].size(),
                                            (int)iso.chess.bases[d - 1].size());
                    for (std::size_t col = 0; col < iso.tables[d - 1].size(); ++col)
                        om_prev.set(iso.tables[d - 1][col].second, (int)col,
                                    Int(iso.tables[d - 1][col].first));
                    c.require(sym_differential(p, (int)d) * om_d ==
                                  om_prev * iso.chess.boundary[d - 1],
                              "chain map at p=" + std::to_string(p) +
                                  ", degree=" + std::to_string(d));
                }
                c.require(chessboard_betti(p) == poincare_polynomial(p, 0),
                          "Betti equality at p=" + std::to_string(p));
            }
        },
        60.0);

    // 6. HS_1 tables
    run_criterion(
        6, "HS_1 tables: Z[t]/(t^n) and Z[C_n] for n = 2..6, Z[t,u]/(t^3,u^2)",
        [](Check& c) {
            const std::vector<HomologyGroup> trunc_expect = {
                group_of(0, {2, 2}), group_of(0, {2, 2}), group_of(0, {2, 2, 2, 2}),
                group_of(0, {2, 2, 2, 2}), group_of(0, {2, 2, 2, 2, 2, 2})};
            const std::vector<HomologyGroup> cyclic_expect = {
                group_of(0, {2, 2}), group_of(0, {}), group_of(0, {2, 2, 2, 2}),
                group_of(0, {}), group_of(0, {2, 2, 2, 2, 2, 2})};
            for (int n = 2; n <= 6; ++n) {
                HomologyGroup ht = hs1(trunc_poly({n}));
                c.require(ht == trunc_expect[n - 2],
                          "HS_1(Z[t]/(t^" + std::to_string(n) + ")) = " + show(ht));
                HomologyGroup hc = hs1(cyclic_group_ring(n));
                c.require(hc == cyclic_expect[n - 2],
                          "HS_1(Z[C_" + std::to_string(n) + "]) = " + show(hc));
            }
            HomologyGroup h = hs1(trunc_poly({3, 2}));
            c.require(h == group_of(2, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 6}),
                      "HS_1(Z[t,u]/(t^3,u^2)) = " + show(h));
        },
        600.0);
    run_extended(
        "dim-8 table rows and Z[S_3]",
        [](Check& c) {
            HomologyGroup q = hs1(quaternion_units());
            c.require(q == group_of(0, {2, 2, 2, 2, 2, 2, 2, 2}),
                      "quaternion units: " + show(q));
            HomologyGroup v = hs1(abelian_group_ring({2, 2}));
            c.require(v == group_of(0, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}),
                      "Z[C_2 x C_2]: " + show(v));
            HomologyGroup t22 = hs1(trunc_poly({2, 2}));
            c.require(t22 == group_of(1, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}),
                      "Z[t,u]/(t^2,u^2): " + show(t22));
            HomologyGroup s3 = hs1(symmetric_group_ring(3));
            c.require(s3 == group_of(0, {2, 2}), "Z[S_3]: " + show(s3));
        },
        extended);

    // 7. HS_0 law
    run_criterion(
        7, "HS_0(A) = A/([A,A]) against ideal saturation for every preset; HS_0(M_2) = 0",
        [](Check& c) {
            for (const char* preset :
                 {"trunc_poly(2)", "trunc_poly(3)", "trunc_poly(4)", "trunc_poly(2,2)",
                  "trunc_poly(3,2)", "cyclic_group(2)", "cyclic_group(3)",
                  "cyclic_group(4)", "cyclic_group(5)", "cyclic_group(6)",
                  "abelian_group(2,2)", "symmetric_group(3)", "matrix_ring(2)",
                  "cyclic_monoid(3,2)", "cyclic_monoid(4,3)", "cyclic_monoid(4,2)",
                  "quaternion_units"}) {
                FinAlgebra a = preset_algebra(preset);
                HomologyGroup direct = hs0(a);
                HomologyGroup ideal = hs0_via_ideal(a);
                c.require(direct == ideal, std::string("hs0 mismatch for ") + preset);
                c.require(triple_span_is_ideal(a),
                          std::string("triple span not an ideal for ") + preset);
            }
            c.require(hs0(matrix_ring(2)).is_trivial(), "HS_0(M_2(Z)) = 0");
        },
        600.0);

    // 8. layers
    run_criterion(
        8, "layers: Z[C_2 x C_2] per-layer [Z],[2,2,2]; free-monoid layers m = 0..10",
        [](Check& c) {
            FinAlgebra a = abelian_group_ring({2, 2});
            LayeredReport rep = hs_layered(a);
            c.require(rep.layers.size() == 4, "four layers");
            for (const auto& layer : rep.layers) {
                c.require(layer.hs0 == group_of(1, {}),
                          "layer " + layer.label + " hs0 = " + show(layer.hs0));
                c.require(layer.hs1 == group_of(0, {2, 2, 2}),
                          "layer " + layer.label + " hs1 = " + show(layer.hs1));
            }
            c.require(rep.merged_hs0() == hs0(a), "layers merge to HS_0");
            c.require(rep.merged_hs1() == hs1(a), "layers merge to HS_1");
            for (int m = 0; m <= 10; ++m) {
                HomologyGroup h = free_monoid_layer(m);
                HomologyGroup expect = m < 2 ? group_of(0, {}) : group_of(0, {2});
                c.require(h == expect, "HS_1(Z[t])_{t^" + std::to_string(m) +
                                           "} = " + show(h));
            }
        },
        600.0);
    run_extended(
        "free-monoid layers m = 11..18 (conjecture-support range)",
        [](Check& c) {
            for (int m = 11; m <= 18; ++m) {
                HomologyGroup h = free_monoid_layer(m);
                c.require(h == group_of(0, {2}),
                          "HS_1(Z[t])_{t^" + std::to_string(m) + "} = " + show(h));
            }
        },
        extended);

    // 9. module structure
    run_criterion(
        9, "HS_0-module structure of HS_1 for Z[t]/(t^2) and Z[t]/(t^3)",
        [](Check& c) {
            for (int n : {2, 3}) {
                FinAlgebra a = trunc_poly({n});
                Hs0ActionReport rep = hs0_action_on_hs1(a);
                std::string tag = " for Z[t]/(t^" + std::to_string(n) + ")";
                c.require(rep.group == group_of(0, {2, 2}), "HS_1 = (Z/2)^2" + tag);
                c.require(rep.left_equals_right, "left = right action" + tag);
                c.require(rep.unit_acts_as_identity, "unit acts as identity" + tag);
                // cyclic over HS_0 with 2u = 0: some u with {u, t.u} spanning
                const SparseIntMatrix& t_act = rep.left_action[1];
                auto at = [&](int r, int cc) {
                    return (int)mpz_fdiv_ui(t_act.get(r, cc).get_mpz_t(), 2);
                };
                bool cyclic = false;
                for (int u0 = 0; u0 < 2 && !cyclic; ++u0)
                    for (int u1 = 0; u1 < 2 && !cyclic; ++u1) {
                        if (!u0 && !u1) continue;
                        int t0 = (at(0, 0) * u0 + at(0, 1) * u1) % 2;
                        int t1 = (at(1, 0) * u0 + at(1, 1) * u1) % 2;
                        if ((u0 * t1 - u1 * t0) % 2 != 0) cyclic = true;
                    }
                c.require(cyclic, "generated by a single u" + tag);
                c.require(rep.generator_orders ==
                              std::vector<Int>({Int(2), Int(2)}),
                          "relation 2u = 0" + tag);
                if (n == 3) {
                    const SparseIntMatrix& t2_act = rep.left_action[2];
                    bool killed = true;
                    for (int r = 0; r < 2; ++r)
                        for (int cc = 0; cc < 2; ++cc)
                            if (mpz_fdiv_ui(t2_act.get(r, cc).get_mpz_t(), 2) != 0)
                                killed = false;
                    c.require(killed, "t^2 u = 0" + tag);
                }
            }
        },
        600.0);

    // 10. cyclic comparison
    run_criterion(
        10, "cyclic comparison: gamma squares commute for presets of dim <= 4",
        [](Check& c) {
            bool diagnostic_printed = false;
            for (const char* preset :
                 {"trunc_poly(2)", "trunc_poly(3)", "trunc_poly(4)", "trunc_poly(2,2)",
                  "cyclic_group(2)", "cyclic_group(3)", "cyclic_group(4)",
                  "abelian_group(2,2)", "matrix_ring(2)", "cyclic_monoid(3,2)",
                  "cyclic_monoid(4,3)"}) {
                CyclicComparison cmp = cyclic_low_complex(preset_algebra(preset));
                c.require(cmp.squares_commute, std::string("squares for ") + preset);
                c.require(!cmp.variant_commutes,
                          std::string("variant transcription unexpectedly consistent for ") +
                              preset);
                if (!diagnostic_printed && !cmp.variant_commutes) {
                    std::cout << "  note: alternate-sign d2 transcription fails its "
                                 "chain-map square (first witness "
                              << cmp.variant_witness << "); the all-plus convention is "
                              << "the consistent one\n";
                    diagnostic_printed = true;
                }
            }
        },
        600.0);

    // 11. property suites
    run_criterion(
        11, "property suites: d^2 = 0, Lah counts p <= 6, SNF oracle, equivariance",
        [](Check& c) {
            for (int p = 1; p <= 5; ++p)
                for (int i = 2; i <= p; ++i)
                    c.require((sym_differential(p, i - 1) * sym_differential(p, i))
                                  .is_zero(),
                              "d^2 at p=" + std::to_string(p));
            for (const char* preset : {"trunc_poly(2)", "matrix_ring(2)",
                                       "cyclic_group(3)", "symmetric_group(3)"}) {
                PartialComplex cx = build_partial_complex(preset_algebra(preset));
                c.require((cx.d1 * cx.d2).is_zero(),
                          std::string("partial complex d1 d2 for ") + preset);
            }
            for (int n = 2; n <= 5; ++n) {
                ChessComplex cx = chessboard_complex(n);
                for (std::size_t d = 1; d < cx.boundary.size(); ++d)
                    c.require((cx.boundary[d - 1] * cx.boundary[d]).is_zero(),
                              "chessboard d^2 at n=" + std::to_string(n));
            }
            for (int p = 0; p <= 6; ++p)
                for (int i = 0; i <= p; ++i)
                    c.require(Int((long)sym_basis(p, i).size()) ==
                                  lah_number(p + 1, p - i + 1),
                              "Lah count at p=" + std::to_string(p));
            std::mt19937 rng(987654);
            for (int trial = 0; trial < 200; ++trial) {
                int rows = 1 + (int)(rng() % 8), cols = 1 + (int)(rng() % 8);
                SparseIntMatrix m = oracle::random_sparse(rows, cols, 0.5, 9, rng);
                if (smith_normal_form(m) != oracle::dense_snf(oracle::to_dense(m))) {
                    c.require(false, "SNF oracle trial " + std::to_string(trial));
                    break;
                }
            }
            for (int p = 1; p <= 4; ++p) {
                auto perms = all_perms(p);
                for (int i = 1; i <= p; ++i)
                    for (const auto& e : sym_basis(p, i)) {
                        const Permutation& s = perms[(e.blocks[0][0] * 7 + i) % perms.size()];
                        SignedSymElement x{{e, Int(1)}};
                        if (permute(s, sym_d(x)) != sym_d(permute(s, x))) {
                            c.require(false, "equivariance at p=" + std::to_string(p));
                            break;
                        }
                    }
            }
        },
        600.0);

    std::cout << (g_failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED"
                                  : "ACCEPTANCE FAILURES PRESENT")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
