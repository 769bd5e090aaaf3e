#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "coset_graph.hpp"
#include "error.hpp"
#include "group.hpp"
#include "spectra.hpp"

namespace kz {

struct AngleResult {
    double epsilon = 0;
    double alpha_degrees = 90;
    std::string route; // spectral, closed-form, oracle
    double bound = 0;
};

inline double degrees_of(double eps) {
    return std::acos(std::clamp(eps, -1.0, 1.0)) * 180.0 / M_PI;
}

inline AngleResult make_angle(double eps, const std::string& route, double bound) {
    AngleResult r;
    r.epsilon = eps;
    r.alpha_degrees = degrees_of(eps);
    r.route = route;
    r.bound = bound;
    return r;
}

/// Checks that A and B generate X.
inline void require_generating(const FiniteGroup& X, const FiniteGroup& A, const FiniteGroup& B) {
    std::vector<GroupElement> gens = A.generators();
    gens.insert(gens.end(), B.generators().begin(), B.generators().end());
    if (gens.empty() || FiniteGroup::closure(gens, X.order() + 1).order() != X.order())
        throw Error(Errc::NotGenerating, "A and B do not generate X");
}

/// epsilon = eta2 / k on the coset graph.
inline AngleResult epsilon_spectral(const FiniteGroup& X, const FiniteGroup& A, const FiniteGroup& B,
                                    double tol = 1e-8, SpectralReport* report = nullptr,
                                    const LanczosOptions& opt = {}) {
    require_generating(X, A, B);
    CosetGraph G = build_coset_graph(X, A, B);
    if (!G.regular()) throw Error(Errc::UnequalIndices, "[A:A∩B] differs from [B:A∩B]");
    SpectralReport rep = second_eigenvalue(G, tol, opt);
    if (report) *report = rep;
    double k = double(G.k());
    return make_angle(rep.eta2 / k, "spectral", rep.bound / k);
}

inline constexpr size_t kOracleLimit = 200;

/// Largest singular value of p_A p_B - p_X on the left regular representation,
/// with (p_A f)(x) the average of f(a x) over a in A.
inline AngleResult epsilon_projection_oracle(const FiniteGroup& X, const FiniteGroup& A, const FiniteGroup& B) {
    const size_t n = X.order();
    if (n > kOracleLimit) throw Error(Errc::TooLarge, "oracle limited to groups of order " + std::to_string(kOracleLimit));
    auto projector = [&](const FiniteGroup& H) {
        auto idx = detail::subgroup_indices(X, H);
        std::vector<double> P(n * n, 0.0);
        double w = 1.0 / double(idx.size());
        for (size_t x = 0; x < n; ++x)
            for (long h : idx) P[x * n + X.mul_index(size_t(h), x)] += w;
        return P;
    };
    auto PA = projector(A), PB = projector(B);
    std::vector<double> M(n * n, 0.0);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            double a = PA[i * n + k];
            if (a == 0) continue;
            for (size_t j = 0; j < n; ++j) M[i * n + j] += a * PB[k * n + j];
        }
    for (auto& v : M) v -= 1.0 / double(n);
    std::vector<double> MtM(n * n, 0.0);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            double a = M[k * n + i];
            if (a == 0) continue;
            for (size_t j = 0; j < n; ++j) MtM[i * n + j] += a * M[k * n + j];
        }
    auto ev = symmetric_eigen(MtM, n);
    double s = std::sqrt(std::max(0.0, ev.back()));
    return make_angle(s, "oracle", 1e-10);
}

struct GaussPeriodResult {
    AngleResult angle;
    long omega = 0;
    std::vector<std::complex<double>> periods; // one per coset of <omega>, indexed by the least member
    std::complex<double> period_sum;
    bool has_closed_form = false;
    double closed_form = 0;
};

/// Smallest positive integer of multiplicative order r modulo p.
inline long element_of_order(long p, long r) {
    for (long w = 1; w < p; ++w) {
        long x = 1, ord = 0;
        do {
            x = x * w % p;
            ++ord;
        } while (x != 1 && ord <= r);
        if (ord == r && x == 1) return w;
    }
    throw Error(Errc::BadParameters, "no element of order " + std::to_string(r) + " mod " + std::to_string(p));
}

/// (1/r) max |sum_j zeta^(n omega^j)| over n != 0, with zeta = exp(2 pi i / p).
inline GaussPeriodResult gauss_period_epsilon(long p, long r) {
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    if (!is_prime(p)) throw Error(Errc::BadParameters, std::to_string(p) + " is not prime");
    if (r <= 1 || (p - 1) % r != 0) throw Error(Errc::BadParameters, "r must be a divisor of p-1 greater than 1");
    GaussPeriodResult out;
    out.omega = element_of_order(p, r);
    const Quad pi = boost::math::constants::pi<Quad>();
    std::vector<Quad> c(p), s(p);
    for (long m = 0; m < p; ++m) {
        Quad t = 2 * pi * m / p;
        c[m] = cos(t);
        s[m] = sin(t);
    }
    std::vector<long> pw(r);
    pw[0] = 1;
    for (long j = 1; j < r; ++j) pw[j] = pw[j - 1] * out.omega % p;
    std::vector<char> covered(p, 0);
    Quad best = 0, sr = 0, si = 0;
    for (long n = 1; n < p; ++n) {
        Quad re = 0, im = 0;
        for (long j = 0; j < r; ++j) {
            long e = n * pw[j] % p;
            re += c[e];
            im += s[e];
        }
        Quad mod2 = re * re + im * im;
        if (mod2 > best) best = mod2;
        if (!covered[n]) {
            for (long j = 0; j < r; ++j) covered[n * pw[j] % p] = 1;
            out.periods.push_back({double(re), double(im)});
            sr += re;
            si += im;
        }
    }
    out.period_sum = {double(sr), double(si)};
    double eps = double(sqrt(best) / r);
    out.angle = make_angle(eps, "closed-form", 1e-15);
    if (r == (p - 1) / 2 && p > 3) {
        out.has_closed_form = true;
        double sp = std::sqrt(double(p));
        out.closed_form = p % 4 == 1 ? (sp + 1) / double(p - 1) : std::sqrt(double(p + 1)) / double(p - 1);
        if (std::abs(out.closed_form - eps) > 1e-10)
            throw Error(Errc::NoConvergence, "period maximum disagrees with the closed form");
    }
    return out;
}

enum class Unipotent { U2, U3, U4 };

/// Closed-form angle of the root-group vertex models: U2 -> 0, U3 -> 1/sqrt p, U4 -> sqrt(2/p).
inline AngleResult epsilon_unipotent(Unipotent family, long p) {
    if (p <= 2 || !is_prime(p)) throw Error(Errc::BadPrime, "p must be an odd prime");
    double e = 0;
    switch (family) {
    case Unipotent::U2: e = 0; break;
    case Unipotent::U3: e = 1.0 / std::sqrt(double(p)); break;
    case Unipotent::U4: e = std::sqrt(2.0 / double(p)); break;
    }
    return make_angle(e, "closed-form", 0);
}

} // namespace kz
