#pragma once

#include <chrono>
#include <cmath>
#include <string>

#include "angle.hpp"
#include "catalog.hpp"
#include "certifier.hpp"
#include "coset_graph.hpp"
#include "spectra.hpp"

namespace kz {

struct MatrixRun {
    std::string name;
    size_t group_order = 0;
    size_t vertices = 0;
    long girth = 0;
    SpectralReport spectrum;
    double epsilon = 0;
    double phi = 0;       // computed 5 * epsilon
    double phi_error = 0; // |phi - expected|
    double seconds = 0;
};

/// Closure, coset graph, girth and second eigenvalue of a matrix catalog entry.
inline MatrixRun run_matrix_entry(const MatrixEntry& e, double tol = 1e-8, const LanczosOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    MatrixRun r;
    r.name = e.name;
    FiniteGroup X = closure({e.a, e.b});
    FiniteGroup A = cyclic_subgroup(e.a), B = cyclic_subgroup(e.b);
    r.group_order = X.order();
    CosetGraph G = build_coset_graph(X, A, B);
    r.vertices = G.vertices();
    r.girth = girth(G).girth;
    r.spectrum = second_eigenvalue(G, tol, opt);
    r.epsilon = r.spectrum.eta2 / r.spectrum.k;
    r.phi = 5 * r.epsilon;
    r.phi_error = std::abs(r.phi - e.phi);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

struct HCertificate {
    std::string name;
    MatrixRun ab;
    double eps_bc = 0;
    double eps_ac = 0;
    bool models_pass = false;
    TCertificate certificate;
};

/// Property (T) certificate for H31 / H109 from the computed <a,b> angle and
/// the closed-form angles of the <b,c> and <a,c> vertex groups.
inline HCertificate certify_h_group(const std::string& name, double tol = 1e-8, const LanczosOptions& opt = {}) {
    const HGroupData& h = h_group(name);
    HCertificate c;
    c.name = name;
    c.ab = run_matrix_entry(h.ab, tol, opt);
    c.eps_bc = epsilon_unipotent(h.bc_name == "U4(5)" ? Unipotent::U4 : Unipotent::U3, 5).epsilon;
    c.eps_ac = epsilon_unipotent(Unipotent::U2, 5).epsilon;
    c.models_pass = verify_presentation(relators_on(h.relators, "ab"), {{'a', h.ab.a}, {'b', h.ab.b}}).all_pass() &&
                    verify_presentation(relators_on(h.relators, "bc"), h.bc).all_pass() &&
                    verify_presentation(relators_on(h.relators, "ac"), h.ac).all_pass();
    // worst-case growth of S when the computed angle moves by its error radius
    double d = c.ab.spectrum.bound / c.ab.spectrum.k;
    double margin = d * (2 * c.ab.epsilon + d + 2 * c.eps_ac * c.eps_bc);
    c.certificate = ej_certify(c.eps_ac, c.eps_bc, c.ab.epsilon, margin);
    return c;
}

} // namespace kz
