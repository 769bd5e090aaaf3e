#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "angle.hpp"
#include "catalog.hpp"
#include "element.hpp"
#include "error.hpp"
#include "field.hpp"
#include "kms.hpp"
#include "word.hpp"

namespace kz {

/// F_p-linear combination of words over single-letter indeterminates. In
/// commutative mode monomials are kept with sorted letters.
class NCPoly {
public:
    NCPoly() = default;
    NCPoly(long p, bool commutative) : p_(p), comm_(commutative) {}

    static NCPoly constant(long p, bool commutative, long c) {
        NCPoly r(p, commutative);
        r.add_term("", c);
        return r;
    }
    static NCPoly var(long p, bool commutative, char x, long c = 1) {
        NCPoly r(p, commutative);
        r.add_term(std::string(1, x), c);
        return r;
    }

    long p() const { return p_; }
    bool commutative() const { return comm_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::string, long>& terms() const { return t_; }

    void add_term(std::string mono, long c) {
        if (comm_) std::sort(mono.begin(), mono.end());
        long v = mod(t_.count(mono) ? t_[mono] + c : c, p_);
        if (v == 0) t_.erase(mono);
        else t_[mono] = v;
    }

    NCPoly operator+(const NCPoly& o) const {
        NCPoly r = *this;
        for (auto& [m, c] : o.t_) r.add_term(m, c);
        return r;
    }
    NCPoly operator-() const {
        NCPoly r(p_, comm_);
        for (auto& [m, c] : t_) r.add_term(m, -c);
        return r;
    }
    NCPoly operator-(const NCPoly& o) const { return *this + (-o); }
    NCPoly operator*(const NCPoly& o) const {
        NCPoly r(p_, comm_);
        for (auto& [m1, c1] : t_)
            for (auto& [m2, c2] : o.t_) r.add_term(m1 + m2, c1 * c2 % p_);
        return r;
    }
    NCPoly scaled(long c) const {
        NCPoly r(p_, comm_);
        for (auto& [m, v] : t_) r.add_term(m, v * mod(c, p_) % p_);
        return r;
    }
    bool operator==(const NCPoly& o) const { return t_ == o.t_; }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            if (m.empty()) s += std::to_string(c);
            else s += (c == 1 ? "" : std::to_string(c)) + m;
        }
        return s;
    }

private:
    long p_ = 2;
    bool comm_ = false;
    std::map<std::string, long> t_;
};

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(size_t n, long p, bool commutative) : n_(n), p_(p), comm_(commutative), e_(n * n, NCPoly(p, commutative)) {}

    static PolyMatrix identity(size_t n, long p, bool commutative) {
        PolyMatrix m(n, p, commutative);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = NCPoly::constant(p, commutative, 1);
        return m;
    }

    size_t n() const { return n_; }
    NCPoly& at(size_t i, size_t j) { return e_[i * n_ + j]; }
    const NCPoly& at(size_t i, size_t j) const { return e_[i * n_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const {
        if (o.n_ != n_ || o.comm_ != comm_) throw Error(Errc::BadParameters, "matrix shapes or modes differ");
        PolyMatrix r(n_, p_, comm_);
        for (size_t i = 0; i < n_; ++i)
            for (size_t k = 0; k < n_; ++k) {
                const NCPoly& a = at(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < n_; ++j)
                    if (!o.at(k, j).is_zero()) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }
    PolyMatrix operator+(const PolyMatrix& o) const {
        PolyMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
        return r;
    }
    PolyMatrix operator-(const PolyMatrix& o) const {
        PolyMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }
    bool operator==(const PolyMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool is_identity() const { return *this == identity(n_, p_, comm_); }

    /// Inverse of I + N where N is strictly triangular up to a simultaneous
    /// permutation of rows and columns (its support has no directed cycle).
    PolyMatrix unitriangular_inverse() const {
        PolyMatrix N = *this - identity(n_, p_, comm_);
        std::vector<int> indeg(n_, 0);
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                if (!N.at(i, j).is_zero()) {
                    if (i == j) throw Error(Errc::NonUnitriangularInverse, "diagonal is not the identity");
                    ++indeg[j];
                }
        std::vector<size_t> ready;
        for (size_t j = 0; j < n_; ++j)
            if (indeg[j] == 0) ready.push_back(j);
        size_t seen = 0;
        while (!ready.empty()) {
            size_t i = ready.back();
            ready.pop_back();
            ++seen;
            for (size_t j = 0; j < n_; ++j)
                if (!N.at(i, j).is_zero() && --indeg[j] == 0) ready.push_back(j);
        }
        if (seen != n_) throw Error(Errc::NonUnitriangularInverse, "matrix is not unitriangular");
        PolyMatrix negN = identity(n_, p_, comm_) - *this, term = identity(n_, p_, comm_), r = term;
        for (size_t k = 1; k < n_; ++k) {
            term = term * negN;
            r = r + term;
        }
        return r;
    }

    PolyMatrix pow(long e) const {
        PolyMatrix r = identity(n_, p_, comm_), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

private:
    size_t n_ = 0;
    long p_ = 2;
    bool comm_ = false;
    std::vector<NCPoly> e_;
};

using PolyAssignment = std::map<char, PolyMatrix>;

inline PolyMatrix evaluate_poly_word(const Word& w, const PolyAssignment& as) {
    if (as.empty()) throw Error(Errc::UnassignedSymbol, "empty assignment");
    const PolyMatrix& any = as.begin()->second;
    PolyMatrix r = PolyMatrix::identity(any.n(), any.at(0, 0).p(), any.at(0, 0).commutative());
    std::map<char, PolyMatrix> inv;
    for (auto& l : w.letters()) {
        auto it = as.find(l.sym);
        if (it == as.end()) throw Error(Errc::UnassignedSymbol, std::string("symbol '") + l.sym + "' has no image");
        if (l.exp > 0) {
            r = r * it->second;
        } else {
            auto jt = inv.find(l.sym);
            if (jt == inv.end()) jt = inv.emplace(l.sym, it->second.unitriangular_inverse()).first;
            r = r * jt->second;
        }
    }
    return r;
}

/// Dense matrix over F_p, possibly singular.
struct FpMat {
    size_t n = 0;
    long p = 2;
    std::vector<long> a;

    FpMat() = default;
    FpMat(size_t n_, long p_) : n(n_), p(p_), a(n_ * n_, 0) {}
    static FpMat identity(size_t n, long p) {
        FpMat m(n, p);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    long& operator()(size_t i, size_t j) { return a[i * n + j]; }
    long operator()(size_t i, size_t j) const { return a[i * n + j]; }
    FpMat operator*(const FpMat& o) const {
        FpMat r(n, p);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                long x = a[i * n + k];
                if (!x) continue;
                for (size_t j = 0; j < n; ++j) r.a[i * n + j] = (r.a[i * n + j] + x * o.a[k * n + j]) % p;
            }
        return r;
    }
    FpMat operator+(const FpMat& o) const {
        FpMat r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = (r.a[i] + o.a[i]) % p;
        return r;
    }
    FpMat scaled(long c) const {
        FpMat r = *this;
        for (auto& x : r.a) x = mod(x * c, p);
        return r;
    }
    bool operator==(const FpMat& o) const { return n == o.n && a == o.a; }
    GroupElement element() const {
        std::vector<std::vector<long>> rows(n, std::vector<long>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) rows[i][j] = (*this)(i, j);
        return GroupElement::matrix(Field::prime(int(p)), rows);
    }
    static FpMat from(const GroupElement& g) {
        FpMat m(size_t(g.space().n), g.space().field->p);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = g.entries()[i];
        return m;
    }
    FpMat inverse() const { return from(element().inverse()); }
};

/// Block matrix I + sum of blocks, with `blocks` indexed by (row, column) block position.
inline GroupElement block_unipotent(size_t nb, size_t k, long p, const std::map<std::pair<int, int>, FpMat>& blocks) {
    FpMat m = FpMat::identity(nb * k, p);
    for (auto& [pos, B] : blocks)
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) m(size_t(pos.first) * k + i, size_t(pos.second) * k + j) = mod(B(i, j), p);
    return m.element();
}

enum class RepId { A2_T, A2_block, C2_sigma, B2_sigma_prime, HC2_free, HBC2_free };

inline const char* rep_name(RepId r) {
    switch (r) {
    case RepId::A2_T: return "A2_T";
    case RepId::A2_block: return "A2_block";
    case RepId::C2_sigma: return "C2_sigma";
    case RepId::B2_sigma_prime: return "B2_sigma'";
    case RepId::HC2_free: return "HC2_free";
    case RepId::HBC2_free: return "HBC2_free";
    }
    return "";
}

inline RepId rep_from_name(const std::string& s) {
    for (RepId r : {RepId::A2_T, RepId::A2_block, RepId::C2_sigma, RepId::B2_sigma_prime, RepId::HC2_free,
                    RepId::HBC2_free})
        if (s == rep_name(r) || (r == RepId::B2_sigma_prime && s == "B2_sigma_prime")) return r;
    throw Error(Errc::BadParameters, "unknown representation " + s);
}

/// KMS group each representation is defined on.
inline std::string rep_source(RepId r) {
    switch (r) {
    case RepId::A2_T:
    case RepId::A2_block: return "A2t";
    case RepId::C2_sigma: return "C2t";
    case RepId::B2_sigma_prime: return "HB2_2";
    case RepId::HC2_free: return "HC2_2";
    case RepId::HBC2_free: return "HBC2_2";
    }
    return "";
}

struct RepCheck {
    RepId rep;
    std::string source;
    long p = 0;
    std::vector<RelatorCheck> relators;
    bool pass() const {
        return !relators.empty() && std::all_of(relators.begin(), relators.end(), [](auto& r) { return r.holds; });
    }
};

/// Symbolic images: A2_T over F_p[T]; the block forms and the Prop-style free
/// forms over F_p<x,y,z>, where x, y, z stand for arbitrary blocks.
inline PolyAssignment rep_images(RepId r, long p) {
    if (p <= 2 || !is_prime(p)) throw Error(Errc::BadParameters, "p must be an odd prime");
    bool comm = r == RepId::A2_T;
    auto X = [&](char c, long k = 1) { return NCPoly::var(p, comm, c, k); };
    auto mat = [&](size_t n, std::vector<std::tuple<int, int, NCPoly>> es) {
        PolyMatrix m = PolyMatrix::identity(n, p, comm);
        for (auto& [i, j, v] : es) m.at(size_t(i), size_t(j)) = v;
        return m;
    };
    switch (r) {
    case RepId::A2_T: {
        NCPoly one = NCPoly::constant(p, true, 1);
        return {{'a', mat(3, {{0, 1, one}})}, {'b', mat(3, {{1, 2, one}})}, {'c', mat(3, {{2, 0, X('T')}})}};
    }
    case RepId::A2_block:
        return {{'a', mat(3, {{0, 1, X('x')}})}, {'b', mat(3, {{1, 2, X('y')}})}, {'c', mat(3, {{2, 0, X('z')}})}};
    case RepId::C2_sigma:
        return {{'a', mat(4, {{2, 0, X('x')}})}, {'b', mat(4, {{3, 1, X('y')}})},
                {'c', mat(4, {{0, 3, X('z')}, {1, 2, X('z')}})}};
    case RepId::B2_sigma_prime:
        return {{'a', mat(4, {{0, 3, X('x')}, {1, 2, X('x')}})}, {'b', mat(4, {{1, 0, X('y')}, {2, 3, X('y', -1)}})},
                {'c', mat(4, {{3, 1, X('z')}})}};
    case RepId::HC2_free:
        return {{'a', mat(4, {{0, 1, X('x')}})}, {'b', mat(4, {{3, 0, X('y')}})},
                {'c', mat(4, {{1, 2, X('z')}, {2, 3, X('z')}})}};
    case RepId::HBC2_free: {
        NCPoly half_x2 = (X('x') * X('x')).scaled(inv_mod(2, p));
        return {{'a', mat(5, {{1, 2, X('x')}, {1, 3, half_x2}, {2, 3, X('x')}})}, {'b', mat(5, {{4, 0, X('y')}})},
                {'c', mat(5, {{0, 1, X('z')}, {3, 4, X('z')}})}};
    }
    }
    throw Error(Errc::BadParameters, "unknown representation");
}

/// Every relator of the source KMS presentation evaluated on the symbolic images.
inline RepCheck verify_rep(RepId r, long p) {
    RepCheck out;
    out.rep = r;
    out.source = rep_source(r);
    out.p = p;
    PolyAssignment as = rep_images(r, p);
    KMSSpec K = kms_presentation(out.source, p);
    for (auto& w : K.relators) out.relators.push_back({w, evaluate_poly_word(w, as).is_identity()});
    return out;
}

/// Block layouts of the block representations: (row, column, generator, sign).
inline std::vector<std::tuple<int, int, char, int>> rep_block_layout(RepId r, size_t& nb) {
    switch (r) {
    case RepId::A2_block: nb = 3; return {{0, 1, 'a', 1}, {1, 2, 'b', 1}, {2, 0, 'c', 1}};
    case RepId::C2_sigma: nb = 4; return {{2, 0, 'a', 1}, {3, 1, 'b', 1}, {0, 3, 'c', 1}, {1, 2, 'c', 1}};
    case RepId::B2_sigma_prime:
        nb = 4;
        return {{0, 3, 'a', 1}, {1, 2, 'a', 1}, {1, 0, 'b', 1}, {2, 3, 'b', -1}, {3, 1, 'c', 1}};
    default: throw Error(Errc::BadParameters, std::string(rep_name(r)) + " is not a block representation");
    }
}

/// Concrete images over F_p for given k x k blocks Ma, Mb, Mc.
inline Assignment rep_block_images(RepId r, const FpMat& Ma, const FpMat& Mb, const FpMat& Mc) {
    size_t nb = 0;
    auto layout = rep_block_layout(r, nb);
    const size_t k = Ma.n;
    const long p = Ma.p;
    if (Mb.n != k || Mc.n != k || Mb.p != p || Mc.p != p) throw Error(Errc::BadParameters, "block shapes differ");
    Assignment as;
    for (char g : {'a', 'b', 'c'}) {
        std::map<std::pair<int, int>, FpMat> blocks;
        for (auto& [i, j, h, s] : layout)
            if (h == g) blocks[{i, j}] = (h == 'a' ? Ma : h == 'b' ? Mb : Mc).scaled(s);
        as[g] = block_unipotent(nb, k, p, blocks);
    }
    return as;
}

inline RepCheck verify_rep_blocks(RepId r, const FpMat& Ma, const FpMat& Mb, const FpMat& Mc) {
    RepCheck out;
    out.rep = r;
    out.source = rep_source(r);
    out.p = Ma.p;
    Assignment as = rep_block_images(r, Ma, Mb, Mc);
    KMSSpec K = kms_presentation(out.source, Ma.p);
    for (auto& w : K.relators) out.relators.push_back({w, evaluate_word(w, as).is_identity()});
    return out;
}

inline FpMat random_fpmat(size_t k, long p, std::mt19937_64& rng) {
    FpMat m(k, p);
    std::uniform_int_distribution<long> d(0, p - 1);
    for (auto& x : m.a) x = d(rng);
    return m;
}

/// Multiplicative order of an invertible matrix, or 0 when it exceeds cap.
inline long matrix_order(const FpMat& C, long cap) {
    FpMat I = FpMat::identity(C.n, C.p), x = C;
    for (long k = 1; k <= cap; ++k) {
        if (x == I) return k;
        x = x * C;
    }
    return 0;
}

struct SingerResult {
    FpMat C;
    std::vector<long> poly; // c_0..c_(k-1) of x^k + c_(k-1) x^(k-1) + ... + c_0
};

/// Singer element with last column e_1: companion matrix of the
/// lexicographically first primitive monic polynomial, conjugated by the
/// cyclic shift Q (Q e_j = e_(j+1), Q e_k = e_1).
inline SingerResult singer_matrix(long p, size_t k) {
    if (!is_prime(p) || k < 2) throw Error(Errc::BadParameters, "need p prime and k >= 2");
    long target = 1;
    for (size_t i = 0; i < k; ++i) target *= p;
    --target;
    std::vector<long> c(k, 0);
    for (;;) {
        if (c[0] != 0) {
            FpMat K(k, p);
            for (size_t i = 0; i + 1 < k; ++i) K(i + 1, i) = 1;
            for (size_t i = 0; i < k; ++i) K(i, k - 1) = mod(-c[i], p);
            if (matrix_order(K, target) == target) {
                FpMat Q(k, p);
                for (size_t j = 0; j + 1 < k; ++j) Q(j + 1, j) = 1;
                Q(0, k - 1) = 1;
                return {Q.inverse() * K * Q, c};
            }
        }
        size_t i = k;
        while (i > 0 && c[i - 1] == p - 1) c[--i] = 0;
        if (i == 0) throw Error(Errc::SearchExhausted, "no primitive polynomial found");
        ++c[i - 1];
    }
}

struct KassabovWitness {
    long p = 0;
    size_t k = 0;
    FpMat Ma, Mb, Mc, M1, M3, C;
    GroupElement Va, Vb, Vc;
    bool order_check = false;       // order(M1 Mc) = p^k - 1
    bool noncommuting_check = false; // M1 Mc M3 != M3 Mc M1
    bool commutator_check = false;   // [Va,Vb] has -M1 in block (1,3)
    bool long_commutator_check = false; // [Vc,Vb,Vb,Va,Va] has -4 M3 in block (1,3)
    bool pass() const { return order_check && noncommuting_check && commutator_check && long_commutator_check; }
};

inline KassabovWitness kassabov_witness(long p, size_t k) {
    if (p <= 2 || !is_prime(p) || !is_prime(long(k)) || long(k) == p)
        throw Error(Errc::PreconditionViolated, "need p an odd prime, k prime and k != p");
    KassabovWitness w;
    w.p = p;
    w.k = k;
    w.Ma = FpMat(k, p);
    w.Mb = FpMat(k, p);
    for (size_t i = 0; i + 1 < k; ++i) {
        w.Ma(i + 1, i) = 1;
        w.Mb(i, i + 1) = 1;
    }
    w.M1 = w.Ma * w.Mb + w.Mb * w.Ma;
    w.C = singer_matrix(p, k).C;
    w.Mc = w.M1.inverse() * w.C;
    w.M3 = w.Ma * w.Mb * w.Mc * w.Mb * w.Ma;
    long target = 1;
    for (size_t i = 0; i < k; ++i) target *= p;
    --target;
    w.order_check = matrix_order(w.M1 * w.Mc, target) == target;
    w.noncommuting_check = !(w.M1 * w.Mc * w.M3 == w.M3 * w.Mc * w.M1);
    w.Va = block_unipotent(4, k, p, {{{0, 3}, w.Ma}, {{1, 2}, w.Ma}});
    w.Vb = block_unipotent(4, k, p, {{{1, 0}, w.Mb}, {{2, 3}, w.Mb.scaled(-1)}});
    w.Vc = block_unipotent(4, k, p, {{{3, 1}, w.Mc}});
    Assignment as{{'a', w.Va}, {'b', w.Vb}, {'c', w.Vc}};
    GroupElement c1 = evaluate_word(parse_word("[a,b]"), as);
    GroupElement c2 = evaluate_word(parse_word("[c,b,b,a,a]"), as);
    w.commutator_check = c1 == block_unipotent(4, k, p, {{{1, 3}, w.M1.scaled(-1)}});
    w.long_commutator_check = c2 == block_unipotent(4, k, p, {{{1, 3}, w.M3.scaled(-4)}});
    return w;
}

struct RootGroupCheck {
    std::string family;
    long p = 0;
    size_t relations_checked = 0;
    size_t failures = 0;
    size_t closure_order = 0;
    bool pass() const { return failures == 0; }
};

inline GroupElement u3_root(int i, long t, long p) {
    const Field* F = Field::prime(int(p));
    std::vector<std::vector<long>> m{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    if (i == 1) m[0][1] = t;
    else if (i == 2) m[0][2] = t;
    else if (i == 3) m[1][2] = t;
    else throw Error(Errc::BadParameters, "root index must be 1..3");
    return GroupElement::matrix(F, m);
}

/// Checks every commutation relation between root groups for all parameters,
/// and the order of the group generated by x1(1) and x_n(-1) (n = 3 or 4).
inline RootGroupCheck root_group_model(Unipotent family, long p) {
    if (p <= 2 || !is_prime(p)) throw Error(Errc::BadPrime, "p must be an odd prime");
    RootGroupCheck r;
    r.p = p;
    auto comm = [](const GroupElement& x, const GroupElement& y) { return x.inverse() * y.inverse() * x * y; };
    auto expect = [&](bool ok) {
        ++r.relations_checked;
        if (!ok) ++r.failures;
    };
    if (family == Unipotent::U3) {
        r.family = "U3";
        for (long s = 0; s < p; ++s)
            for (long t = 0; t < p; ++t) {
                expect(comm(u3_root(1, s, p), u3_root(3, t, p)) == u3_root(2, s * t, p));
                expect(comm(u3_root(1, s, p), u3_root(2, t, p)).is_identity());
                expect(comm(u3_root(2, s, p), u3_root(3, t, p)).is_identity());
            }
        r.closure_order = closure({u3_root(1, 1, p), u3_root(3, 1, p)}).order();
    } else if (family == Unipotent::U4) {
        r.family = "U4";
        for (long s = 0; s < p; ++s)
            for (long t = 0; t < p; ++t) {
                expect(comm(root_x(2, s, p), root_x(4, t, p).inverse()) == root_x(3, 2 * s * t, p));
                expect(comm(root_x(1, s, p), root_x(4, t, p).inverse()) == root_x(2, s * t, p) * root_x(3, s * t * t, p));
                for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 4}})
                    expect(comm(root_x(i, s, p), root_x(j, t, p)).is_identity());
            }
        auto [a, b] = unipotent_pair(4, p);
        r.closure_order = closure({a, b}).order();
    } else {
        throw Error(Errc::BadType, "root-group models exist for U3 and U4");
    }
    return r;
}

struct CommutingPairCheck {
    long p = 0;
    bool commute = false;       // rho(x) rho(y) = rho(y) rho(x)
    bool product_identity = false; // rho(xy) = rho(a b c^2 b)
    bool pass() const { return commute && product_identity; }
};

/// Necessary condition only: x = a b a^((p-1)/2) c and y = a c a^((p-1)/2) b
/// commute in the F_p[T] image.
inline CommutingPairCheck verify_commuting_pair_A2(long p) {
    PolyAssignment as = rep_images(RepId::A2_T, p);
    int h = int((p - 1) / 2);
    Word a = Word::gen('a'), b = Word::gen('b'), c = Word::gen('c');
    Word x = a * b * a.pow(h) * c, y = a * c * a.pow(h) * b;
    PolyMatrix X = evaluate_poly_word(x, as), Y = evaluate_poly_word(y, as);
    CommutingPairCheck r;
    r.p = p;
    r.commute = X * Y == Y * X;
    r.product_identity = X * Y == evaluate_poly_word(parse_word("abc^2b"), as);
    return r;
}

} // namespace kz
