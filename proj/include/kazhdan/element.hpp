#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace kz {

enum class Kind : uint8_t { Perm = 1, Mat = 2, Proj = 3 };

/// Ambient type of an element: permutations of degree n, or n x n (projective)
/// matrices over a field. Elements of one space have a fixed number of entries.
struct Space {
    Kind kind = Kind::Perm;
    int n = 0;
    const Field* field = nullptr;

    int width() const { return kind == Kind::Perm ? n : n * n; }
    bool operator==(const Space& o) const { return kind == o.kind && n == o.n && field == o.field; }

    void identity(uint16_t* out) const {
        if (kind == Kind::Perm) {
            for (int i = 0; i < n; ++i) out[i] = uint16_t(i);
        } else {
            std::fill(out, out + n * n, uint16_t(0));
            for (int i = 0; i < n; ++i) out[i * n + i] = 1;
        }
    }

    /// out = x * y (x first, then y); out must not alias x or y.
    void mul(const uint16_t* x, const uint16_t* y, uint16_t* out) const {
        if (kind == Kind::Perm) {
            for (int i = 0; i < n; ++i) out[i] = y[x[i]];
            return;
        }
        const Field& F = *field;
        if (F.e == 1) {
            const long p = F.p;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    long s = 0;
                    for (int k = 0; k < n; ++k) s += long(x[i * n + k]) * y[k * n + j];
                    out[i * n + j] = uint16_t(s % p);
                }
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int s = 0;
                    for (int k = 0; k < n; ++k) s = F.add(s, F.mul(x[i * n + k], y[k * n + j]));
                    out[i * n + j] = uint16_t(s);
                }
        }
        if (kind == Kind::Proj) normalize(out);
    }

    /// Scale a projective matrix so its first nonzero entry is 1.
    void normalize(uint16_t* m) const {
        const Field& F = *field;
        int w = n * n, i = 0;
        while (i < w && m[i] == 0) ++i;
        if (i == w || m[i] == 1) return;
        int s = F.inv(m[i]);
        for (int j = i; j < w; ++j) m[j] = uint16_t(F.mul(m[j], s));
    }

    void inverse(const uint16_t* x, uint16_t* out) const {
        if (kind == Kind::Perm) {
            for (int i = 0; i < n; ++i) out[x[i]] = uint16_t(i);
            return;
        }
        const Field& F = *field;
        std::vector<int> a(x, x + n * n), r(n * n, 0);
        for (int i = 0; i < n; ++i) r[i * n + i] = 1;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            while (piv < n && a[piv * n + c] == 0) ++piv;
            if (piv == n) throw Error(Errc::BadParameters, "singular matrix");
            if (piv != c)
                for (int j = 0; j < n; ++j) {
                    std::swap(a[piv * n + j], a[c * n + j]);
                    std::swap(r[piv * n + j], r[c * n + j]);
                }
            int s = F.inv(a[c * n + c]);
            for (int j = 0; j < n; ++j) {
                a[c * n + j] = F.mul(a[c * n + j], s);
                r[c * n + j] = F.mul(r[c * n + j], s);
            }
            for (int i = 0; i < n; ++i) {
                if (i == c || a[i * n + c] == 0) continue;
                int f = a[i * n + c];
                for (int j = 0; j < n; ++j) {
                    a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[c * n + j]));
                    r[i * n + j] = F.sub(r[i * n + j], F.mul(f, r[c * n + j]));
                }
            }
        }
        for (int i = 0; i < n * n; ++i) out[i] = uint16_t(r[i]);
        if (kind == Kind::Proj) normalize(out);
    }

    int determinant(const uint16_t* x) const {
        if (kind == Kind::Perm) throw Error(Errc::BadParameters, "determinant of a permutation");
        const Field& F = *field;
        std::vector<int> a(x, x + n * n);
        int det = 1;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            while (piv < n && a[piv * n + c] == 0) ++piv;
            if (piv == n) return 0;
            if (piv != c) {
                for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
                det = F.neg(det);
            }
            det = F.mul(det, a[c * n + c]);
            int s = F.inv(a[c * n + c]);
            for (int i = c + 1; i < n; ++i) {
                if (a[i * n + c] == 0) continue;
                int f = F.mul(a[i * n + c], s);
                for (int j = c; j < n; ++j) a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[c * n + j]));
            }
        }
        return det;
    }
};

/// An exact group element: a permutation or an invertible (projective) matrix.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(Space s, std::vector<uint16_t> v) : space_(s), v_(std::move(v)) {
        if (int(v_.size()) != s.width()) throw Error(Errc::BadParameters, "entry count does not match space");
        if (s.kind == Kind::Proj) s.normalize(v_.data());
    }

    /// Permutation from 0-based images; composition acts on the right.
    static GroupElement permutation(const std::vector<int>& images) {
        int n = int(images.size());
        std::vector<uint16_t> v(n);
        std::vector<char> hit(n, 0);
        for (int i = 0; i < n; ++i) {
            if (images[i] < 0 || images[i] >= n || hit[images[i]])
                throw Error(Errc::BadParameters, "not a permutation");
            hit[images[i]] = 1;
            v[i] = uint16_t(images[i]);
        }
        return GroupElement(Space{Kind::Perm, n, nullptr}, std::move(v));
    }

    /// Matrix from integer rows (reduced mod p for prime fields; raw field codes otherwise).
    static GroupElement matrix(const Field* F, const std::vector<std::vector<long>>& rows, bool projective = false) {
        int n = int(rows.size());
        std::vector<uint16_t> v;
        v.reserve(n * n);
        for (auto& r : rows) {
            if (int(r.size()) != n) throw Error(Errc::BadParameters, "matrix must be square");
            for (long x : r) v.push_back(uint16_t(F->e == 1 ? F->from_int(x) : int(x)));
        }
        GroupElement g(Space{projective ? Kind::Proj : Kind::Mat, n, F}, std::move(v));
        if (g.space_.determinant(g.v_.data()) == 0) throw Error(Errc::BadParameters, "singular matrix");
        return g;
    }

    static GroupElement identity(Space s) {
        std::vector<uint16_t> v(s.width());
        s.identity(v.data());
        return GroupElement(s, std::move(v));
    }

    const Space& space() const { return space_; }
    const std::vector<uint16_t>& entries() const { return v_; }
    int determinant() const { return space_.determinant(v_.data()); }
    const uint16_t* data() const { return v_.data(); }

    GroupElement operator*(const GroupElement& o) const {
        if (!(space_ == o.space_)) throw Error(Errc::MixedVariant, "product of elements from different spaces");
        std::vector<uint16_t> out(v_.size());
        space_.mul(v_.data(), o.v_.data(), out.data());
        GroupElement r;
        r.space_ = space_;
        r.v_ = std::move(out);
        return r;
    }

    GroupElement inverse() const {
        std::vector<uint16_t> out(v_.size());
        space_.inverse(v_.data(), out.data());
        GroupElement r;
        r.space_ = space_;
        r.v_ = std::move(out);
        return r;
    }

    GroupElement pow(long e) const {
        GroupElement base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? (unsigned long)(-e) : (unsigned long)e;
        GroupElement r = identity(space_);
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    bool is_identity() const { return *this == identity(space_); }

    long order(long cap = 100000000) const {
        GroupElement x = *this;
        for (long k = 1; k <= cap; ++k) {
            if (x.is_identity()) return k;
            x = x * *this;
        }
        throw Error(Errc::CapExceeded, "element order exceeds cap");
    }

    /// Byte encoding: kind tag followed by big-endian 16-bit entries.
    std::string encode() const {
        std::string s;
        s.push_back(char(space_.kind));
        for (uint16_t x : v_) {
            s.push_back(char(x >> 8));
            s.push_back(char(x & 0xff));
        }
        return s;
    }

    bool operator==(const GroupElement& o) const { return space_ == o.space_ && v_ == o.v_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const {
        if (space_.kind != o.space_.kind) return space_.kind < o.space_.kind;
        return v_ < o.v_;
    }

    std::string to_string() const {
        std::string s;
        if (space_.kind == Kind::Perm) {
            s = "[";
            for (int i = 0; i < space_.n; ++i) s += (i ? "," : "") + std::to_string(v_[i]);
            return s + "]";
        }
        s = "[";
        for (int i = 0; i < space_.n; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < space_.n; ++j) s += (j ? "," : "") + std::to_string(v_[i * space_.n + j]);
            s += "]";
        }
        return s + "]";
    }

private:
    Space space_;
    std::vector<uint16_t> v_;
};

} // namespace kz
