#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kms.hpp"
#include "pipeline.hpp"
#include "polyrep.hpp"
#include "triangle.hpp"

namespace kz::suite {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += "failed: " + what;
        }
    }
    void note(const std::string& s) {
        if (pass) detail += (detail.empty() ? "" : "; ") + s;
    }
};

inline std::string fmt(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

inline std::map<std::string, MatrixRun>& run_cache() {
    static std::map<std::string, MatrixRun> c;
    return c;
}

inline const MatrixRun& run_of(const std::string& name) {
    auto& c = run_cache();
    auto it = c.find(name);
    if (it == c.end()) it = c.emplace(name, run_matrix_entry(matrix_entry(name), 1e-8)).first;
    return it->second;
}

inline Outcome catalog_exactness() {
    Outcome o;
    for (const auto& e : vertex_group_catalog()) {
        FiniteGroup X = closure({e.a, e.b});
        FiniteGroup A = cyclic_subgroup(e.a), B = cyclic_subgroup(e.b);
        CosetGraph G = build_coset_graph(X, A, B);
        auto rep = dense_second_eigenvalue(G.graph);
        double eps = rep.eta2 / rep.k;
        o.require(X.order() == e.group_order, e.name + " order");
        o.require(G.vertices() == e.graph_order, e.name + " graph order");
        o.require(girth(G).girth == e.girth, e.name + " girth");
        o.require(std::abs(eps - e.epsilon) < 1e-9, e.name + " epsilon " + fmt(eps));
        o.require(rep.ramanujan == RamanujanStatus::Ramanujan, e.name + " Ramanujan");
        o.require(verify_presentation(e.relator_words(), e.model()).all_pass(), e.name + " relators");
    }
    double g = gauss_period_epsilon(13, 3).angle.epsilon;
    o.require(std::abs(g - vertex_group(26).epsilon) < 1e-12, "X26 Gauss period");
    o.note("10 entries, orders/graph orders/girths/epsilons exact, all Ramanujan");
    return o;
}

inline Outcome matrix_pair(const std::vector<std::string>& names, double tol) {
    Outcome o;
    for (auto& n : names) {
        const auto& e = matrix_entry(n);
        const MatrixRun& r = run_of(n);
        o.require(r.group_order == e.group_order, n + " order");
        o.require(r.girth == e.girth, n + " girth " + std::to_string(r.girth));
        o.require(r.phi_error < tol, n + " 5eps " + fmt(r.phi));
        auto want = e.ramanujan ? RamanujanStatus::Ramanujan : RamanujanStatus::NotRamanujan;
        o.require(r.spectrum.ramanujan == want, n + " Ramanujan status " + ramanujan_name(r.spectrum.ramanujan));
        o.note(n + ": girth " + std::to_string(r.girth) + ", 5eps " + fmt(r.phi) + ", bound " +
               fmt(r.spectrum.bound, 2) + ", " + ramanujan_name(r.spectrum.ramanujan) + ", " + fmt(r.seconds, 3) + " s");
    }
    return o;
}

inline Outcome oracle_equivalence() {
    Outcome o;
    double worst = 0;
    for (const auto& e : vertex_group_catalog()) {
        if (e.group_order > kOracleLimit) continue;
        FiniteGroup X = closure({e.a, e.b});
        FiniteGroup A = cyclic_subgroup(e.a), B = cyclic_subgroup(e.b);
        double d = std::abs(epsilon_spectral(X, A, B).epsilon - epsilon_projection_oracle(X, A, B).epsilon);
        worst = std::max(worst, d);
        o.require(d <= 1e-8, e.name);
    }
    o.note("max |spectral - oracle| = " + fmt(worst, 3));
    return o;
}

inline Outcome gauss_periods() {
    Outcome o;
    int count = 0;
    double worst = 0;
    for (long p = 5; p <= 199; ++p) {
        if (!is_prime(p)) continue;
        auto g = gauss_period_epsilon(p, (p - 1) / 2);
        double d = std::abs(g.angle.epsilon - g.closed_form);
        worst = std::max(worst, d);
        o.require(g.has_closed_form && d < 1e-10, "p=" + std::to_string(p));
        ++count;
    }
    o.note(std::to_string(count) + " primes, max deviation " + fmt(worst, 3));
    return o;
}

inline Outcome ej_certifier() {
    Outcome o;
    double r = std::sqrt(2.0) / 3, t = std::sqrt(3.0) / 3;
    auto ronan = ej_certify(r, r, r);
    o.require(ronan.verdict == Verdict::TCertified && std::abs(ronan.S - (2.0 / 3 + 4 * std::sqrt(2.0) / 27)) < 1e-12 && std::abs(ronan.S - 0.87616) < 1e-4, "Ronan triple");
    o.require(ej_certify(t, t, t).verdict == Verdict::Inconclusive, "(sqrt3/3)^3 inconclusive");
    for (const char* name : {"H31", "H109"}) {
        auto c = certify_h_group(name);
        o.require(c.models_pass, std::string(name) + " vertex models");
        o.require(c.certificate.verdict == Verdict::TCertified, std::string(name) + " certificate");
        o.note(std::string(name) + ": eps = (" + fmt(c.eps_ac, 6) + ", " + fmt(c.eps_bc, 9) + ", " +
               fmt(c.ab.epsilon, 12) + "), S = " + fmt(c.certificate.S, 9));
    }
    return o;
}

inline Outcome kms_thresholds() {
    Outcome o;
    std::map<std::array<int, 3>, long> cutoff{
        {{2, 4, 4}, 5}, {{3, 3, 3}, 5}, {{3, 3, 4}, 7}, {{3, 4, 4}, 7}, {{4, 4, 4}, 11}};
    for (auto& [type, first] : cutoff)
        for (long p = 3; p <= 997; p += 2) {
            if (!is_prime(p)) continue;
            auto r = kms_kazhdan_threshold(type, p);
            if (r.certified != (p >= first) || !r.agrees_with_ej) {
                o.require(false, "type (" + std::to_string(type[0]) + "," + std::to_string(type[1]) + "," +
                                     std::to_string(type[2]) + ") p=" + std::to_string(p));
            }
        }
    o.note("5 types, odd primes 3..997");
    return o;
}

inline Outcome enumeration(const std::string& data_dir) {
    Outcome o;
    auto all = enumerate_all();
    o.require(all.size() == 252, "total " + std::to_string(all.size()));
    auto ells = [](const Triple& t) {
        std::vector<int> v;
        for (auto& p : enumerate_trivalent(t)) v.push_back(p.ell);
        return v;
    };
    o.require(ells({14, 14, 14}) == std::vector<int>{0, 1, 2, 6}, "(14,14,14)");
    o.require(ells({14, 14, 16}) == std::vector<int>{0, 1, 4, 5}, "(14,14,16)");
    o.require(ells({26, 26, 26}) == std::vector<int>{0, 1, 5, 21}, "(26,26,26)");
    o.require(ells({6, 40, 40}) == std::vector<int>{0}, "(6,40,40)");
    o.require(ells({54, 54, 54}) == std::vector<int>{0, 2}, "(54,54,54)");

    std::ifstream in(data_dir + "/triangle_presentations.txt");
    size_t matched = 0, sampled = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        Triple t;
        int ell;
        std::string colon, w;
        is >> t[0] >> t[1] >> t[2] >> ell >> colon;
        std::vector<Word> want;
        while (is >> w) want.push_back(parse_word(w).canonical_relator());
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        ++sampled;
        for (auto& P : all)
            if (P.triple == t && P.ell == ell && P.relators == want) ++matched;
    }
    o.require(matched >= 20, "reference matches " + std::to_string(matched) + "/" + std::to_string(sampled));
    o.note("252 representatives, 5 index sets, " + std::to_string(matched) + "/" + std::to_string(sampled) +
           " sampled reference presentations match");
    return o;
}

inline Outcome presentation_lengths() {
    Outcome o;
    struct Row {
        Triple t;
        size_t count;
        size_t len;
    };
    std::vector<Row> rows = {
        {{6, 40, 40}, 1, 45},  {{6, 40, 48}, 1, 37},  {{6, 40, 54}, 2, 49},  {{6, 48, 48}, 1, 29},
        {{6, 48, 54}, 2, 41},  {{6, 54, 54}, 3, 53},  {{8, 40, 40}, 1, 45},  {{8, 40, 48}, 1, 37},
        {{8, 40, 54}, 2, 49},  {{8, 48, 48}, 2, 29},  {{8, 48, 54}, 2, 41},  {{8, 54, 54}, 3, 53},
        {{40, 40, 40}, 1, 57}, {{40, 40, 48}, 1, 49}, {{40, 40, 54}, 1, 61}, {{40, 48, 48}, 1, 41},
        {{40, 48, 54}, 2, 53}, {{40, 54, 54}, 3, 65}, {{48, 48, 48}, 2, 33}, {{48, 48, 54}, 1, 45},
        {{48, 54, 54}, 3, 57}, {{54, 54, 54}, 2, 69},
    };
    size_t n244 = 0, n444 = 0;
    for (auto& r : rows) {
        auto got = enumerate_trivalent(r.t);
        std::string id = std::to_string(r.t[0]) + "," + std::to_string(r.t[1]) + "," + std::to_string(r.t[2]);
        o.require(got.size() == r.count, id + " row count");
        for (auto& P : got) o.require(presentation_length(P) == r.len, P.name() + " length");
        (r.t[0] < 40 ? n244 : n444) += got.size();
    }
    o.require(n244 == 21 && n444 == 17, "row totals");
    o.note(std::to_string(n244) + " (2,4,4) rows and " + std::to_string(n444) + " (4,4,4) rows");
    return o;
}

inline Outcome poly_rep() {
    Outcome o;
    std::mt19937_64 rng(0xC0FFEE);
    for (long p : {3, 5, 7}) {
        for (RepId r : {RepId::A2_T, RepId::A2_block, RepId::C2_sigma, RepId::B2_sigma_prime, RepId::HC2_free,
                        RepId::HBC2_free})
            o.require(verify_rep(r, p).pass(), std::string(rep_name(r)) + " p=" + std::to_string(p));
        for (RepId r : {RepId::A2_block, RepId::C2_sigma, RepId::B2_sigma_prime})
            for (size_t k : {1, 2, 3})
                for (int i = 0; i < 20; ++i) {
                    FpMat a = random_fpmat(k, p, rng), b = random_fpmat(k, p, rng), c = random_fpmat(k, p, rng);
                    o.require(verify_rep_blocks(r, a, b, c).pass(), std::string(rep_name(r)) + " blocks");
                }
        o.require(verify_commuting_pair_A2(p).pass(), "commuting pair p=" + std::to_string(p));
        auto u3 = root_group_model(Unipotent::U3, p), u4 = root_group_model(Unipotent::U4, p);
        o.require(u3.pass() && u3.closure_order == size_t(p * p * p), "U3 p=" + std::to_string(p));
        o.require(u4.pass() && u4.closure_order == size_t(p * p * p * p), "U4 p=" + std::to_string(p));
    }
    for (auto [p, k] : std::vector<std::pair<long, size_t>>{{3, 2}, {5, 2}, {7, 2}, {5, 3}, {7, 3}})
        o.require(kassabov_witness(p, k).pass(), "witness (" + std::to_string(p) + "," + std::to_string(k) + ")");
    o.note("6 representations x 3 primes, 540 random block triples, 5 witnesses, root groups U3/U4");
    return o;
}

inline Outcome properties() {
    Outcome o;
    bool shifted_ok = true;
    for (const auto& e : vertex_group_catalog()) {
        FiniteGroup X = closure({e.a, e.b});
        FiniteGroup A = cyclic_subgroup(e.a), B = cyclic_subgroup(e.b);
        CosetGraph G = build_coset_graph(X, A, B);
        auto ev = dense_spectrum(G.graph);
        size_t n = ev.size();
        double s1 = 0, s2 = 0;
        bool sym = true;
        for (size_t i = 0; i < n; ++i) {
            sym = sym && std::abs(ev[i] + ev[n - 1 - i]) < 1e-9;
            s1 += ev[i];
            s2 += ev[i] * ev[i];
        }
        o.require(sym, e.name + " spectral symmetry");
        o.require(std::abs(s1) < 1e-9 && std::abs(s2 - 2.0 * double(G.edges)) < 1e-8, e.name + " traces");
        double eta2 = ev[n - 2], k = 3;
        auto cev = dense_spectrum(cayley_graph(X, {e.a, e.a.inverse(), e.b, e.b.inverse()}));
        o.require(std::abs(cev[cev.size() - 2] - (eta2 + k - 2)) < 1e-8, e.name + " Cayley relation");
        double D = double(diameter(G)), h = std::floor(D / 2);
        double lower = 2 * std::sqrt(k - 1) / k * (1 - 1 / h) + 1 / (k * h);
        o.require(eta2 / k >= lower - 1e-12, e.name + " diameter bound (D = " + fmt(D) + ", eps = " + fmt(eta2 / k) +
                                                 " < " + fmt(lower) + ")");
        // edges at distance >= 2b+2 are guaranteed only for b+1 = floor(D/2) - 1
        if (h >= 2) {
            double h1 = h - 1, shifted = 2 * std::sqrt(k - 1) / k * (1 - 1 / h1) + 1 / (k * h1);
            if (eta2 / k < shifted - 1e-12) shifted_ok = false;
        }
    }
    for (const Triple& t : all_triples(false)) {
        size_t total = 0;
        for (auto& orb : gluing_orbits(t)) total += orb.members.size();
        o.require(total == 64, "orbit sizes");
    }
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_real_distribution<double> u(0, 1);
    size_t disagree = 0;
    for (int i = 0; i < 100000; ++i) {
        auto c = ej_certify(u(rng), u(rng), u(rng));
        if (c.verdict != c.angle_verdict) ++disagree;
    }
    o.require(disagree == 0, std::to_string(disagree) + " EJ verdict disagreements");
    o.note("spectral symmetry, traces, Cayley relation, diameter bound, 220 orbit partitions, 1e5 EJ triples");
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "bound with floor(D/2) - 1 " + (shifted_ok ? "holds on every catalog graph with D >= 4" : "fails");
    return o;
}

struct CriterionResult {
    int id = 0;
    std::string title;
    bool skipped = false;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteOptions {
    bool skip_slow = false;
    int only = 0;
    std::string data_dir = ".";
    std::function<void(const CriterionResult&)> on_result;
};

inline std::vector<CriterionResult> run(const SuiteOptions& opt) {
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
        bool slow;
    };
    std::vector<Criterion> cs = {
        {1, "catalog exactness", catalog_exactness, false},
        {2, "SL2(5) and SL2(9)", [] { return matrix_pair({"SL2_5", "SL2_9"}, 1e-9); }, false},
        {3, "PSL2(31) and PSL2(41)", [] { return matrix_pair({"PSL2_31", "PSL2_41"}, 1e-6); }, false},
        {4, "PSL2(109) and PSL2(131)", [] { return matrix_pair({"PSL2_109", "PSL2_131"}, 1e-6); }, true},
        {5, "oracle equivalence", oracle_equivalence, false},
        {6, "Gauss-period closed form", gauss_periods, false},
        {7, "EJ certifier", ej_certifier, false},
        {8, "KMS thresholds", kms_thresholds, false},
        {9, "enumeration", [&] { return enumeration(opt.data_dir); }, false},
        {10, "presentation lengths", presentation_lengths, false},
        {11, "poly-rep", poly_rep, false},
        {12, "property suites", properties, false},
    };
    std::vector<CriterionResult> out;
    for (auto& c : cs) {
        if (opt.only && c.id != opt.only) continue;
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        if (opt.skip_slow && c.slow) {
            r.skipped = true;
        } else {
            auto t0 = std::chrono::steady_clock::now();
            Outcome o;
            try {
                o = c.run();
            } catch (const std::exception& e) {
                o.pass = false;
                o.detail = std::string("exception: ") + e.what();
            }
            r.pass = o.pass;
            r.detail = o.detail;
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        if (opt.on_result) opt.on_result(r);
        out.push_back(r);
    }
    return out;
}

} // namespace kz::suite
