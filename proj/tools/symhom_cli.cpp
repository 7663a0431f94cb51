// Command-line surface for the symmetric homology toolkit.
//
// Results go to stdout, progress and warnings to stderr.  Exit codes:
// 0 success, 2 usage error, 3 computation error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symhom/cache.hpp"
#include "symhom/chessboard.hpp"
#include "symhom/deltas.hpp"
#include "symhom/errors.hpp"
#include "symhom/hs_low.hpp"
#include "symhom/sym_complex.hpp"

using namespace symhom;
using nlohmann::json;

namespace {

struct JobConfig {
    std::string format = "text";  // text | json
    long characteristic = 0;
    std::string cache_dir;
    int threads = 1;
    long memory_advice_mb = 0;  // 0 = no ceiling
    bool verbose = false;

    Cache cache() const { return cache_dir.empty() ? Cache() : Cache(cache_dir); }

    // Advisory only: warn when a computation is about to materialize bases
    // whose footprint estimate crosses the ceiling.
    void advise_memory(long estimated_mb, const std::string& what) const {
        if (memory_advice_mb > 0 && estimated_mb > memory_advice_mb)
            std::cerr << "warning: " << what << " is estimated to need ~" << estimated_mb
                      << " MB, above the advised ceiling of " << memory_advice_mb
                      << " MB\n";
    }
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json group_json(const HomologyGroup& g) {
    json j;
    j["free"] = g.free_rank;
    json t = json::array();
    for (const Int& d : g.torsion) t.push_back(std::stol(d.get_str()));
    j["torsion"] = t;
    return j;
}

std::string diag_text(const HomologyGroup& g) {
    std::string s = "[";
    auto diag = g.diag_list();
    for (std::size_t i = 0; i < diag.size(); ++i)
        s += (i ? "," : "") + diag[i].get_str();
    return s + "]";
}

SparseIntMatrix cached_sym_differential(int p, int i, const Cache& cache, bool verbose) {
    std::string key = "sym-d-p" + std::to_string(p) + "-i" + std::to_string(i);
    if (auto hit = cache.get(key)) {
        if (verbose) std::cerr << "cache hit " << key << "\n";
        return SparseIntMatrix::from_coord_text(*hit);
    }
    Timer t;
    SparseIntMatrix m = sym_differential(p, i);
    if (verbose)
        std::cerr << "assembled d(" << p << "," << i << ") in " << t.secs() << "s\n";
    cache.put(key, m.to_coord_text());
    return m;
}

std::vector<Int> cached_snf(const SparseIntMatrix& m, const Cache& cache, bool verbose) {
    std::string key = "snf-" + Cache::hash_hex(m.to_coord_text());
    if (auto hit = cache.get(key)) {
        if (verbose) std::cerr << "cache hit " << key << "\n";
        std::istringstream is(*hit);
        std::vector<Int> diag;
        std::string tok;
        while (is >> tok) diag.push_back(Int(tok));
        return diag;
    }
    Timer t;
    std::vector<Int> diag = smith_normal_form(m);
    if (verbose) std::cerr << "snf of " << m.rows() << "x" << m.cols() << " in "
                           << t.secs() << "s\n";
    std::string payload;
    for (const Int& d : diag) payload += d.get_str() + "\n";
    cache.put(key, payload);
    return diag;
}

FinAlgebra algebra_from_options(const std::string& preset, const std::string& file) {
    if (!preset.empty()) return preset_algebra(preset);
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open algebra file " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return algebra_from_json_text(buf.str());
}

int run_count(int n, int m, const JobConfig& cfg) {
    Int c = count_morphisms(n, m);
    if (cfg.format == "json") {
        json j{{"n", n}, {"m", m}, {"count", c.get_str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << c.get_str() << "\n";
    }
    return 0;
}

int run_enumerate(int n, int m, bool epi, const JobConfig& cfg) {
    auto all = enumerate_morphisms(n, m, epi);
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& f : all) j.push_back(to_literal(f));
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& f : all) std::cout << to_literal(f) << "\n";
    }
    return 0;
}

int run_compose(const std::string& f_lit, const std::string& g_lit,
                const JobConfig& cfg) {
    DeltaSMorphism h = compose(parse_morphism(f_lit), parse_morphism(g_lit));
    if (cfg.format == "json")
        std::cout << json{{"composite", to_literal(h)}}.dump() << "\n";
    else
        std::cout << to_literal(h) << "\n";
    return 0;
}

int run_factor(const std::string& f_lit, const JobConfig& cfg) {
    auto [epi, mono] = epi_mono_factor(parse_morphism(f_lit));
    if (cfg.format == "json")
        std::cout << json{{"epi", to_literal(epi)}, {"mono", to_literal(mono)}}.dump()
                  << "\n";
    else
        std::cout << "epi: " << to_literal(epi) << "\nmono: " << to_literal(mono) << "\n";
    return 0;
}

int run_monoid_product(const std::string& f_lit, const std::string& g_lit,
                       const JobConfig& cfg) {
    DeltaSMorphism h = monoidal_product(parse_morphism(f_lit), parse_morphism(g_lit));
    if (cfg.format == "json")
        std::cout << json{{"product", to_literal(h)}}.dump() << "\n";
    else
        std::cout << to_literal(h) << "\n";
    return 0;
}

int run_act(const std::string& preset, const std::string& file,
            const std::string& tensor_lit, const std::string& f_lit,
            const JobConfig& cfg) {
    FinAlgebra a = algebra_from_options(preset, file);
    // tensor literal: a bracketed list of basis indices, e.g. [3,0,4]
    std::string inner = tensor_lit;
    if (inner.size() < 2 || inner.front() != '[' || inner.back() != ']')
        throw ParseError("tensor literal must look like [i0,i1,...]");
    inner = inner.substr(1, inner.size() - 2);
    std::vector<int> tuple;
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) tuple.push_back(std::stoi(tok));
    for (int idx : tuple)
        if (idx < 0 || idx >= a.dim()) throw ParseError("basis index out of range");
    AlgebraTensor t = AlgebraTensor::basis_tuple(tuple);
    AlgebraTensor out = apply_morphism(parse_morphism(f_lit), t, a);
    if (cfg.format == "json") {
        json terms = json::array();
        for (const auto& [key, coeff] : out.terms) {
            json names = json::array();
            for (int idx : key) names.push_back(a.basis_names()[idx]);
            terms.push_back({{"indices", key},
                             {"basis", names},
                             {"coefficient", std::stol(coeff.get_str())}});
        }
        std::cout << json{{"arity", out.arity}, {"terms", terms}}.dump() << "\n";
    } else {
        if (out.terms.empty()) std::cout << "0\n";
        for (const auto& [key, coeff] : out.terms) {
            std::cout << coeff.get_str() << " * (";
            for (std::size_t i = 0; i < key.size(); ++i)
                std::cout << (i ? ")(x)(" : "") << a.basis_names()[key[i]];
            std::cout << ")\n";
        }
    }
    return 0;
}

long sym_footprint_mb(int p) {
    // rough: basis elements of all degrees at ~64 bytes plus matrix entries
    Int total = 0;
    for (int i = 0; i <= p; ++i) total += lah_number(p + 1, p - i + 1);
    return std::stol(Int(total * 64 * 4 / (1024 * 1024)).get_str());
}

int run_sym_poincare(int p, const JobConfig& cfg) {
    Cache cache = cfg.cache();
    cfg.advise_memory(sym_footprint_mb(p), "Sym^(" + std::to_string(p) + ")");
    std::vector<long> dims(p + 1), ranks(p + 2, 0);
    for (int i = 0; i <= p; ++i) dims[i] = (long)sym_basis(p, i).size();
    for (int i = 1; i <= p; ++i) {
        std::string key = "sym-rank-p" + std::to_string(p) + "-i" + std::to_string(i) +
                          "-c" + std::to_string(cfg.characteristic);
        if (auto hit = cache.get(key)) {
            if (cfg.verbose) std::cerr << "cache hit " << key << "\n";
            ranks[i] = std::stol(*hit);
            continue;
        }
        SparseIntMatrix d = cached_sym_differential(p, i, cache, cfg.verbose);
        Timer t;
        ranks[i] = rank_over_field(d, cfg.characteristic);
        if (cfg.verbose)
            std::cerr << "rank d(" << p << "," << i << ") = " << ranks[i] << " in "
                      << t.secs() << "s\n";
        cache.put(key, std::to_string(ranks[i]));
    }
    std::vector<long> betti(p + 1);
    for (int i = 0; i <= p; ++i) betti[i] = dims[i] - ranks[i] - ranks[i + 1];
    if (cfg.format == "json") {
        json j{{"p", p},
               {"characteristic", cfg.characteristic},
               {"poincare", {{"coefficients", betti}, {"text", poincare_to_string(betti)}}}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << poincare_to_string(betti) << "\n";
    }
    return 0;
}

int run_sym_homology(int p, int degree, const JobConfig& cfg) {
    Cache cache = cfg.cache();
    HomologyGroup h;
    std::string key = "sym-h-p" + std::to_string(p) + "-i" + std::to_string(degree);
    bool have = false;
    if (auto hit = cache.get(key)) {
        if (cfg.verbose) std::cerr << "cache hit " << key << "\n";
        std::istringstream is(*hit);
        std::string tok;
        is >> tok;
        h.free_rank = std::stol(tok);
        while (is >> tok) h.torsion.push_back(Int(tok));
        have = true;
    }
    if (!have) {
        if (degree < 0 || degree > p)
            throw DegreeOutOfRange("sym --degree " + std::to_string(degree));
        long dim_i = (long)sym_basis(p, degree).size();
        SparseIntMatrix d_out = degree >= 1
                                    ? cached_sym_differential(p, degree, cache, cfg.verbose)
                                    : SparseIntMatrix(0, (int)dim_i);
        SparseIntMatrix d_in = degree < p ? cached_sym_differential(p, degree + 1, cache,
                                                                    cfg.verbose)
                                          : SparseIntMatrix((int)dim_i, 0);
        h = homology(d_out, d_in);
        // persist the SNF of the incoming boundary as well; its nontrivial
        // invariant factors must agree with the homology torsion
        std::vector<Int> diag = cached_snf(d_in, cache, cfg.verbose);
        std::vector<Int> torsion;
        for (const Int& d : diag)
            if (d > 1) torsion.push_back(d);
        if (torsion != h.torsion)
            throw Error("Internal", "kernel-restricted torsion disagrees with SNF");
        std::string payload = std::to_string(h.free_rank);
        for (const Int& t : h.torsion) payload += " " + t.get_str();
        cache.put(key, payload);
    }
    if (cfg.format == "json") {
        json j{{"p", p}, {"degree", degree}, {"homology", group_json(h)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "H_" << degree << "(Sym^(" << p << ")) = " << h.pretty() << "  "
                  << diag_text(h) << "\n";
    }
    return 0;
}

int run_sym_basis(int p, int degree, const JobConfig& cfg) {
    auto basis = sym_basis(p, degree);
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& e : basis) {
            DeltaSMorphism f{e.blocks};
            j.push_back(to_literal(f));
        }
        std::cout << json{{"p", p}, {"degree", degree}, {"basis", j}}.dump() << "\n";
    } else {
        for (const auto& e : basis) std::cout << to_literal(DeltaSMorphism{e.blocks}) << "\n";
    }
    return 0;
}

int run_sym_verify_chessboard(int p, const JobConfig& cfg) {
    OmegaIso iso = omega_iso(p);  // throws if not a bijection
    bool chain_ok = true;
    std::vector<SparseIntMatrix> omega_mat;
    for (std::size_t d = 0; d < iso.tables.size(); ++d) {
        SparseIntMatrix m((int)iso.sym_bases[d].size(), (int)iso.chess.bases[d].size());
        for (std::size_t c = 0; c < iso.tables[d].size(); ++c)
            m.set(iso.tables[d][c].second, (int)c, Int(iso.tables[d][c].first));
        omega_mat.push_back(std::move(m));
    }
    for (std::size_t d = 1; d < iso.tables.size() && chain_ok; ++d)
        chain_ok = (sym_differential(p, (int)d) * omega_mat[d]) ==
                   (omega_mat[d - 1] * iso.chess.boundary[d - 1]);
    bool betti_ok = chessboard_betti(p) == poincare_polynomial(p, 0);
    if (!chain_ok || !betti_ok)
        throw ChainMapViolation("chessboard isomorphism failed at p = " +
                                std::to_string(p));
    if (cfg.format == "json") {
        json j{{"p", p},
               {"bijection", true},
               {"chain_map", true},
               {"betti_match", true}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "omega: basis bijection, chain map and Betti numbers verified for p="
                  << p << "\n";
    }
    return 0;
}

json action_json(const FinAlgebra& a, const Hs0ActionReport& rep) {
    json act = json::object();
    for (int g = 0; g < a.dim(); ++g) {
        json rows = json::array();
        int n = rep.left_action[g].rows();
        for (int r = 0; r < n; ++r) {
            json row = json::array();
            for (int c = 0; c < n; ++c)
                row.push_back(std::stol(rep.left_action[g].get(r, c).get_str()));
            rows.push_back(row);
        }
        act[a.basis_names()[g]] = rows;
    }
    return act;
}

int run_hs(const std::string& preset, const std::string& file, const std::string& degree,
           bool layered, bool action, const JobConfig& cfg) {
    FinAlgebra a = algebra_from_options(preset, file);
    Cache cache = cfg.cache();
    auto cached_group = [&](int deg, auto&& compute) {
        std::string key = "hs-" + a.content_key() + "-d" + std::to_string(deg);
        if (auto hit = cache.get(key)) {
            if (cfg.verbose) std::cerr << "cache hit " << key << "\n";
            HomologyGroup h;
            std::istringstream is(*hit);
            std::string tok;
            is >> tok;
            h.free_rank = std::stol(tok);
            while (is >> tok) h.torsion.push_back(Int(tok));
            return h;
        }
        Timer t;
        HomologyGroup h = compute();
        if (cfg.verbose)
            std::cerr << "hs" << deg << "(" << a.name() << ") in " << t.secs() << "s\n";
        std::string payload = std::to_string(h.free_rank);
        for (const Int& x : h.torsion) payload += " " + x.get_str();
        cache.put(key, payload);
        return h;
    };

    json doc;
    doc["algebra"] = a.name();
    std::ostringstream text;
    text << "algebra: " << a.name() << " (dim " << a.dim() << ")\n";
    if (degree == "0" || degree == "both") {
        HomologyGroup h = cached_group(0, [&] { return hs0(a); });
        doc["hs0"] = group_json(h);
        text << "HS_0 = " << h.pretty() << "  " << diag_text(h) << "\n";
    }
    if (degree == "1" || degree == "both") {
        HomologyGroup h = cached_group(1, [&] { return hs1(a); });
        doc["hs1"] = group_json(h);
        text << "HS_1 = " << h.pretty() << "  " << diag_text(h) << "\n";
    }
    if (layered) {
        LayeredReport rep = hs_layered(a);
        json layers = json::object();
        for (const auto& layer : rep.layers) {
            layers[layer.label] = {{"hs0", group_json(layer.hs0)},
                                   {"hs1", group_json(layer.hs1)}};
            text << "layer " << layer.label << ": HS_0 = " << layer.hs0.pretty()
                 << ", HS_1 = " << layer.hs1.pretty() << "\n";
        }
        doc["layers"] = layers;
    }
    if (action) {
        Hs0ActionReport rep = hs0_action_on_hs1(a);
        if (!rep.left_equals_right)
            throw Error("Internal", "left and right HS_0 actions disagree");
        doc["action"] = action_json(a, rep);
        json orders = json::array();
        for (const Int& d : rep.generator_orders)
            orders.push_back(std::stol(d.get_str()));
        doc["action_orders"] = orders;
        text << "HS_0 action computed on " << rep.generator_orders.size()
             << " generators (left = right, unit acts as identity: "
             << (rep.unit_acts_as_identity ? "yes" : "no") << ")\n";
    }
    if (cfg.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int run_free_monoid_layers(int from, int to, const JobConfig& cfg) {
    if (from < 0 || to < from) throw DegreeOutOfRange("free-monoid-layers range");
    json j = json::array();
    for (int m = from; m <= to; ++m) {
        HomologyGroup h = free_monoid_layer(m);
        if (cfg.format == "json")
            j.push_back({{"m", m}, {"hs1", group_json(h)}});
        else
            std::cout << "HS_1(Z[t])_{t^" << m << "} = " << diag_text(h) << "\n";
    }
    if (cfg.format == "json") std::cout << j.dump() << "\n";
    return 0;
}

int run_cyclic_compare(const std::string& preset, const std::string& file,
                       const JobConfig& cfg) {
    FinAlgebra a = algebra_from_options(preset, file);
    CyclicComparison cmp = cyclic_low_complex(a);
    if (cfg.format == "json") {
        json j{{"algebra", a.name()},
               {"squares_commute", cmp.squares_commute},
               {"variant_commutes", cmp.variant_commutes},
               {"variant_witness", cmp.variant_witness},
               {"hc0", group_json(cmp.hc0)},
               {"hc1", group_json(cmp.hc1)},
               {"hs0", group_json(cmp.hs0)},
               {"hs1", group_json(cmp.hs1)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "algebra: " << a.name() << "\n"
                  << "gamma chain-map squares commute: yes\n"
                  << "alternate-sign d2 transcription commutes: "
                  << (cmp.variant_commutes ? "yes" : "no") << "\n";
        if (!cmp.variant_commutes)
            std::cout << "  first failing column: " << cmp.variant_witness << "\n";
        std::cout << "HC_0 = " << cmp.hc0.pretty() << ", HS_0 = " << cmp.hs0.pretty()
                  << "\n"
                  << "HC_1 = " << cmp.hc1.pretty() << ", HS_1 = " << cmp.hs1.pretty()
                  << "\n"
                  << "induced maps: HC_0->HS_0 is " << cmp.hc0_to_hs0.rows() << "x"
                  << cmp.hc0_to_hs0.cols() << ", HC_1->HS_1 is " << cmp.hc1_to_hs1.rows()
                  << "x" << cmp.hc1_to_hs1.cols() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symhom: exact symmetric-homology computations"};
    app.require_subcommand(1);
    app.fallthrough();

    JobConfig cfg;
    if (const char* env = std::getenv("SYMHOM_CACHE_DIR")) cfg.cache_dir = env;
    app.add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", cfg.cache_dir, "cache directory");
    app.add_option("--threads", cfg.threads, "worker thread count")
        ->check(CLI::PositiveNumber);
    app.add_option("--memory-advice", cfg.memory_advice_mb,
                   "advisory memory ceiling in MB (warn when estimates exceed it)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--verbose", cfg.verbose, "progress and timing on stderr");

    int n = 0, m = 0, p = 0, degree = 0, from = 0, to = 0;
    bool epi = false, poincare = false, homology_flag = false, basis_flag = false,
         verify_chessboard = false, layered = false, action = false;
    std::string f_lit, g_lit, preset, algebra_file, degree_sel = "both";

    auto* c_count = app.add_subcommand("count", "number of morphisms [n] -> [m]");
    c_count->add_option("n", n)->required();
    c_count->add_option("m", m)->required();

    auto* c_enum = app.add_subcommand("enumerate", "list morphisms [n] -> [m]");
    c_enum->add_option("n", n)->required();
    c_enum->add_option("m", m)->required();
    c_enum->add_flag("--epi", epi, "epimorphisms only");

    auto* c_comp = app.add_subcommand("compose", "compose two morphism literals (f after g)");
    c_comp->add_option("f", f_lit)->required();
    c_comp->add_option("g", g_lit)->required();

    auto* c_fact = app.add_subcommand("factor", "epi-mono factorization of a morphism");
    c_fact->add_option("f", f_lit)->required();

    std::string tensor_lit;
    auto* c_prod = app.add_subcommand("monoid-product",
                                      "permutative product f (.) g of DeltaS_+");
    c_prod->add_option("f", f_lit)->required();
    c_prod->add_option("g", g_lit)->required();

    auto* c_act = app.add_subcommand("act", "apply a morphism to a basis tensor");
    auto* act_preset = c_act->add_option("--preset", preset, "preset algebra literal");
    auto* act_file = c_act->add_option("--algebra", algebra_file, "algebra spec JSON");
    act_preset->excludes(act_file);
    c_act->add_option("--tensor", tensor_lit, "basis-index tuple, e.g. [3,0,4]")
        ->required();
    c_act->add_option("f", f_lit, "morphism literal")->required();

    auto* c_sym = app.add_subcommand("sym", "the complex Sym^(p)");
    c_sym->add_option("--p", p, "complex parameter p")->required();
    c_sym->add_flag("--poincare", poincare, "Poincare polynomial");
    c_sym->add_option("--char", cfg.characteristic, "field characteristic (0 or prime)");
    c_sym->add_flag("--homology", homology_flag, "integral homology in one degree");
    c_sym->add_flag("--basis", basis_flag, "print the canonical basis in one degree");
    c_sym->add_option("--degree", degree, "chain degree");
    c_sym->add_flag("--verify-chessboard", verify_chessboard,
                    "check the suspension isomorphism");

    auto* c_hs = app.add_subcommand("hs", "low-degree symmetric homology of an algebra");
    auto* hs_preset = c_hs->add_option("--preset", preset, "preset algebra literal");
    auto* hs_file = c_hs->add_option("--algebra", algebra_file, "algebra spec JSON file");
    hs_preset->excludes(hs_file);
    c_hs->add_option("--degree", degree_sel, "0, 1 or both")
        ->check(CLI::IsMember({"0", "1", "both"}));
    c_hs->add_flag("--layered", layered, "per-layer results (graded algebras)");
    c_hs->add_flag("--action", action, "HS_0 action on HS_1");

    auto* c_fml = app.add_subcommand("free-monoid-layers",
                                     "HS_1(Z[t])_{t^m} via cyclic monoids");
    c_fml->add_option("--from", from)->required();
    c_fml->add_option("--to", to)->required();

    auto* c_cyc = app.add_subcommand("cyclic-compare",
                                     "cyclic homology comparison in low degrees");
    auto* cyc_preset = c_cyc->add_option("--preset", preset, "preset algebra literal");
    auto* cyc_file = c_cyc->add_option("--algebra", algebra_file, "algebra spec JSON file");
    cyc_preset->excludes(cyc_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (cfg.characteristic != 0 && !is_prime(cfg.characteristic))
            throw CompositeCharacteristic(std::to_string(cfg.characteristic));
        set_worker_threads(cfg.threads);
        if (c_count->parsed()) return run_count(n, m, cfg);
        if (c_enum->parsed()) return run_enumerate(n, m, epi, cfg);
        if (c_comp->parsed()) return run_compose(f_lit, g_lit, cfg);
        if (c_fact->parsed()) return run_factor(f_lit, cfg);
        if (c_prod->parsed()) return run_monoid_product(f_lit, g_lit, cfg);
        if (c_act->parsed()) {
            if (preset.empty() && algebra_file.empty()) {
                std::cerr << "act: --preset or --algebra is required\n";
                return 2;
            }
            return run_act(preset, algebra_file, tensor_lit, f_lit, cfg);
        }
        if (c_sym->parsed()) {
            if (poincare) return run_sym_poincare(p, cfg);
            if (homology_flag) return run_sym_homology(p, degree, cfg);
            if (basis_flag) return run_sym_basis(p, degree, cfg);
            if (verify_chessboard) return run_sym_verify_chessboard(p, cfg);
            std::cerr << "sym: one of --poincare, --homology, --basis, "
                         "--verify-chessboard is required\n";
            return 2;
        }
        if (c_hs->parsed()) {
            if (preset.empty() && algebra_file.empty()) {
                std::cerr << "hs: --preset or --algebra is required\n";
                return 2;
            }
            return run_hs(preset, algebra_file, degree_sel, layered, action, cfg);
        }
        if (c_fml->parsed()) return run_free_monoid_layers(from, to, cfg);
        if (c_cyc->parsed()) {
            if (preset.empty() && algebra_file.empty()) {
                std::cerr << "cyclic-compare: --preset or --algebra is required\n";
                return 2;
            }
            return run_cyclic_compare(preset, algebra_file, cfg);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
