#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "error.hpp"

namespace kz {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long mod(long x, long p) {
    x %= p;
    return x < 0 ? x + p : x;
}

inline long pow_mod(long b, long e, long p) {
    long r = 1 % p;
    b = mod(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline long inv_mod(long a, long p) {
    a = mod(a, p);
    if (a == 0) throw Error(Errc::BadParameters, "zero has no inverse");
    return pow_mod(a, p - 2, p);
}

/// Finite field F_{p^e}. Elements are integers 0..q-1 read as base-p digit
/// vectors (least significant digit = constant term). Extension fields use
/// full operation tables, so keep q small.
class Field {
public:
    int p = 0;
    int e = 1;
    int q = 0;
    std::vector<int> modulus; // monic, low-to-high, size e+1

    static const Field* prime(int p) {
        if (!is_prime(p)) throw Error(Errc::BadPrime, "characteristic " + std::to_string(p) + " is not prime");
        return intern(p, {0, 1});
    }

    /// F_{p^e} = F_p[x]/(modulus); modulus is monic of degree e, given low-to-high.
    static const Field* extension(int p, const std::vector<int>& modulus) {
        if (!is_prime(p)) throw Error(Errc::BadPrime, "characteristic " + std::to_string(p) + " is not prime");
        if (modulus.size() < 2 || mod(modulus.back(), p) != 1)
            throw Error(Errc::BadParameters, "modulus must be monic of degree >= 1");
        return intern(p, modulus);
    }

    /// F_9 with the Conway polynomial x^2 + 2x + 2.
    static const Field* f9() { return extension(3, {2, 2, 1}); }

    int add(int a, int b) const {
        if (e == 1) return (a + b) % p;
        return add_[a * q + b];
    }
    int neg(int a) const {
        if (e == 1) return a == 0 ? 0 : p - a;
        return neg_[a];
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        if (e == 1) return int(long(a) * b % p);
        return mul_[a * q + b];
    }
    int inv(int a) const {
        if (a == 0) throw Error(Errc::BadParameters, "zero has no inverse");
        if (e == 1) return int(inv_mod(a, p));
        return inv_[a];
    }
    int from_int(long v) const { return int(mod(v, p)); }
    int pow(int a, long n) const {
        int r = 1;
        while (n > 0) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }
    /// The class of x in F_p[x]/(modulus); for prime fields returns 1.
    int generator() const { return e == 1 ? 1 : p; }

private:
    std::vector<int> add_, neg_, mul_, inv_;

    static const Field* intern(int p, const std::vector<int>& modulus) {
        static std::mutex mu;
        static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<Field>> pool;
        std::vector<int> m;
        for (int c : modulus) m.push_back(int(mod(c, p)));
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(p, m);
        auto it = pool.find(key);
        if (it != pool.end()) return it->second.get();
        auto f = std::make_unique<Field>();
        f->p = p;
        f->e = int(m.size()) - 1;
        f->modulus = m;
        long q = 1;
        for (int i = 0; i < f->e; ++i) q *= p;
        if (q > 4096 && f->e > 1) throw Error(Errc::BadParameters, "extension field too large for tables");
        f->q = int(q);
        if (f->e > 1) f->build_tables();
        const Field* out = f.get();
        pool.emplace(key, std::move(f));
        return out;
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(e);
        for (int i = 0; i < e; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }
    int pack(const std::vector<int>& d) const {
        int a = 0;
        for (int i = e - 1; i >= 0; --i) a = a * p + d[i];
        return a;
    }

    void build_tables() {
        add_.assign(size_t(q) * q, 0);
        mul_.assign(size_t(q) * q, 0);
        neg_.assign(q, 0);
        inv_.assign(q, -1);
        for (int a = 0; a < q; ++a) {
            auto da = digits(a);
            std::vector<int> dn(e);
            for (int i = 0; i < e; ++i) dn[i] = int(mod(-da[i], p));
            neg_[a] = pack(dn);
            for (int b = 0; b < q; ++b) {
                auto db = digits(b);
                std::vector<int> s(e);
                for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
                add_[size_t(a) * q + b] = pack(s);
                std::vector<long> prod(2 * e - 1, 0);
                for (int i = 0; i < e; ++i)
                    for (int j = 0; j < e; ++j) prod[i + j] += long(da[i]) * db[j];
                for (int k = 2 * e - 2; k >= e; --k) {
                    long c = mod(prod[k], p);
                    prod[k] = 0;
                    for (int i = 0; i < e; ++i) prod[k - e + i] -= c * modulus[i];
                }
                std::vector<int> r(e);
                for (int i = 0; i < e; ++i) r[i] = int(mod(prod[i], p));
                mul_[size_t(a) * q + b] = pack(r);
            }
        }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul_[size_t(a) * q + b] == 1) {
                    inv_[a] = b;
                    break;
                }
        for (int a = 1; a < q; ++a)
            if (inv_[a] < 0) throw Error(Errc::BadParameters, "modulus is not irreducible");
    }
};

} // namespace kz
