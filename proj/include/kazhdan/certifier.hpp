#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace kz {

/// Exact value q * sqrt(m) with q = num/den in lowest terms and m squarefree.
struct Surd {
    long num = 0;
    long den = 1;
    long m = 1;

    static Surd make(long num, long den, long radicand) {
        if (den == 0 || radicand <= 0) throw Error(Errc::BadParameters, "bad surd");
        long sq = 1;
        for (long d = 2; d * d <= radicand; ++d)
            while (radicand % (d * d) == 0) {
                radicand /= d * d;
                sq *= d;
            }
        Surd s;
        s.num = num * sq;
        s.den = den;
        s.m = radicand;
        s.reduce();
        return s;
    }
    static Surd root(long radicand) { return make(1, 1, radicand); }
    static Surd integer(long v) { return make(v, 1, 1); }

    double value() const { return double(num) / double(den) * std::sqrt(double(m)); }
    bool operator==(const Surd& o) const { return num == o.num && den == o.den && m == o.m; }

    std::string to_string() const {
        std::string q = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
        if (m == 1) return q;
        if (num == 1 && den == 1) return "sqrt(" + std::to_string(m) + ")";
        return q + "*sqrt(" + std::to_string(m) + ")";
    }

private:
    void reduce() {
        if (den < 0) {
            den = -den;
            num = -num;
        }
        long g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

enum class Verdict { TCertified, Inconclusive };

inline const char* verdict_name(Verdict v) { return v == Verdict::TCertified ? "T-certified" : "inconclusive"; }

struct TCertificate {
    std::array<double, 3> epsilons{};
    std::array<double, 3> angles{}; // radians
    double S = 0;
    double angle_sum = 0;
    double margin = 0;
    Verdict verdict = Verdict::Inconclusive;
    Verdict angle_verdict = Verdict::Inconclusive;
};

inline double ej_quantity(double e0, double e1, double e2) {
    return e0 * e0 + e1 * e1 + e2 * e2 + 2 * e0 * e1 * e2;
}

/// Certified iff S + margin < 1. The angle form (sum of arccos > pi) is
/// recorded alongside; with zero margin the two verdicts coincide.
inline TCertificate ej_certify(double e0, double e1, double e2, double margin = 0) {
    for (double e : {e0, e1, e2})
        if (!(e >= 0 && e <= 1)) throw Error(Errc::OutOfRange, "epsilon outside [0,1]");
    if (margin < 0) throw Error(Errc::OutOfRange, "negative margin");
    TCertificate c;
    c.epsilons = {e0, e1, e2};
    c.margin = margin;
    c.S = ej_quantity(e0, e1, e2);
    for (int i = 0; i < 3; ++i) c.angles[i] = std::acos(c.epsilons[i]);
    c.angle_sum = c.angles[0] + c.angles[1] + c.angles[2];
    c.verdict = c.S + margin < 1 ? Verdict::TCertified : Verdict::Inconclusive;
    c.angle_verdict = c.angle_sum > M_PI ? Verdict::TCertified : Verdict::Inconclusive;
    return c;
}

/// Certificate from the smallest positive Laplacian eigenvalues, epsilon_i = 1 - delta_i.
inline TCertificate ej_certify_from_gaps(double d0, double d1, double d2, double margin = 0) {
    for (double d : {d0, d1, d2})
        if (!(d >= 0 && d <= 1)) throw Error(Errc::OutOfRange, "gap outside [0,1]");
    return ej_certify(1 - d0, 1 - d1, 1 - d2, margin);
}

enum class Curvature { Hyperbolic, EuclideanBorderline, ViolatesNPC };

inline const char* curvature_name(Curvature c) {
    switch (c) {
    case Curvature::Hyperbolic: return "hyperbolic";
    case Curvature::EuclideanBorderline: return "euclidean-borderline";
    case Curvature::ViolatesNPC: return "violates-NPC";
    }
    return "";
}

struct CurvatureClass {
    std::array<int, 3> r{};
    Curvature cls = Curvature::Hyperbolic;
};

/// Compares 1/r0 + 1/r1 + 1/r2 with 1 exactly.
inline CurvatureClass npc_gate(int r0, int r1, int r2) {
    for (int r : {r0, r1, r2})
        if (r < 2) throw Error(Errc::OutOfRange, "half-girths must be at least 2");
    long num = long(r1) * r2 + long(r0) * r2 + long(r0) * r1, den = long(r0) * r1 * r2;
    CurvatureClass c;
    c.r = {r0, r1, r2};
    c.cls = num < den ? Curvature::Hyperbolic : num == den ? Curvature::EuclideanBorderline : Curvature::ViolatesNPC;
    return c;
}

/// Closed-form angle of a KMS vertex group of half-girth r at prime p.
inline double kms_vertex_epsilon(int r, long p) {
    switch (r) {
    case 2: return 0.0;
    case 3: return 1.0 / std::sqrt(double(p));
    case 4: return std::sqrt(2.0 / double(p));
    }
    throw Error(Errc::BadType, "vertex half-girth must be 2, 3 or 4");
}

struct ThresholdResult {
    std::array<int, 3> type{};
    long p = 0;
    long cubic = 0; // value of the type's polynomial at p (p - 4 for (2,4,4))
    bool certified = false;
    bool agrees_with_ej = false;
};

/// Evaluates the threshold polynomial of a KMS half-girth type at p and
/// cross-checks against ej_certify on the closed-form epsilons.
inline ThresholdResult kms_kazhdan_threshold(std::array<int, 3> type, long p) {
    if (p <= 2 || !is_prime(p)) throw Error(Errc::BadPrime, "p must be an odd prime");
    std::sort(type.begin(), type.end());
    ThresholdResult r;
    r.type = type;
    r.p = p;
    const long p2 = p * p, p3 = p2 * p;
    if (type == std::array<int, 3>{2, 4, 4}) r.cubic = p - 4;
    else if (type == std::array<int, 3>{3, 3, 3}) r.cubic = p3 - 6 * p2 + 9 * p - 4;
    else if (type == std::array<int, 3>{3, 3, 4}) r.cubic = p3 - 8 * p2 + 16 * p - 8;
    else if (type == std::array<int, 3>{3, 4, 4}) r.cubic = p3 - 10 * p2 + 25 * p - 16;
    else if (type == std::array<int, 3>{4, 4, 4}) r.cubic = p3 - 12 * p2 + 36 * p - 32;
    else throw Error(Errc::BadType, "unsupported half-girth type");
    r.certified = r.cubic > 0;
    auto c = ej_certify(kms_vertex_epsilon(type[0], p), kms_vertex_epsilon(type[1], p), kms_vertex_epsilon(type[2], p));
    r.agrees_with_ej = (c.verdict == Verdict::TCertified) == r.certified;
    return r;
}

struct FlatWitness {
    std::string pattern;
    std::array<int, 3> type{};
    Surd length;
};

inline const std::vector<FlatWitness>& flat_witness_table() {
    static const std::vector<FlatWitness> t = {
        {"abcb'", {3, 3, 3}, Surd::root(3)},
        {"abca'b'c'", {3, 3, 3}, Surd::integer(3)},
        {"abcb'a'b''c'b'''", {3, 3, 3}, Surd::make(2, 1, 3)},
        {"abca'b'c'a''b''c''b'''", {3, 3, 3}, Surd::root(21)},
        {"abcb'a'b''c'b'''a''b''''c''b'''''", {3, 3, 3}, Surd::make(3, 1, 3)},
        {"acbc'", {2, 4, 4}, Surd::root(2)},
        {"aca'bc'b'", {2, 4, 4}, Surd::integer(2)},
        {"acbc'a'c''b'c'''", {2, 4, 4}, Surd::make(2, 1, 2)},
        {"aca'bc'a''b'c''b''c'''", {2, 4, 4}, Surd::root(10)},
        {"aca'bc'b'a''c''a'''b''c'''b'''", {2, 4, 4}, Surd::integer(4)},
    };
    return t;
}

/// Strips separators and maps typographic primes to apostrophes.
inline std::string normalize_pattern(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size();) {
        unsigned char c = (unsigned char)s[i];
        auto starts = [&](const char* u) { return s.compare(i, std::strlen(u), u) == 0; };
        if (starts("′")) { out += "'"; i += 3; continue; }
        if (starts("″")) { out += "''"; i += 3; continue; }
        if (starts("‴")) { out += "'''"; i += 3; continue; }
        if (starts("·")) { i += 2; continue; }
        if (starts("⋅")) { i += 3; continue; }
        if (std::isspace(c) || c == '.' || c == '*') { ++i; continue; }
        out.push_back(char(c));
        ++i;
    }
    return out;
}

/// Translation length of a flat-witness word; type {0,0,0} accepts either table.
inline FlatWitness flat_witness_length(const std::string& pattern, std::array<int, 3> type = {0, 0, 0}) {
    std::string p = normalize_pattern(pattern);
    std::sort(type.begin(), type.end());
    for (auto& w : flat_witness_table())
        if (w.pattern == p && (type == std::array<int, 3>{0, 0, 0} || type == w.type)) return w;
    throw Error(Errc::UnknownPattern, "no flat witness \"" + pattern + "\"");
}

struct RatioTest {
    bool rational = false;
    long k = 0; // |x|/|y| = k/l when rational
    long l = 0;
    Surd ratio;
};

/// Exact test whether |x|/|y| is rational.
inline RatioTest z2_exclusion(const Surd& x, const Surd& y) {
    static const long supported[] = {1, 2, 3, 7, 10, 21};
    for (const Surd* s : {&x, &y})
        if (std::find(std::begin(supported), std::end(supported), s->m) == std::end(supported) || s->num <= 0)
            throw Error(Errc::UnsupportedAlgebraicForm, "length " + s->to_string() + " is not a supported surd");
    RatioTest r;
    // x/y = (qx/qy) sqrt(mx/my) = (qx / (qy my)) sqrt(mx my)
    r.ratio = Surd::make(x.num * y.den, x.den * y.num * y.m, x.m * y.m);
    r.rational = x.m == y.m;
    if (r.rational) {
        r.k = r.ratio.num;
        r.l = r.ratio.den;
    }
    return r;
}

} // namespace kz
