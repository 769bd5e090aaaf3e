#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "coset_graph.hpp"
#include "error.hpp"

namespace kz {

/// Dense symmetric eigensolver: Householder tridiagonalisation followed by
/// implicit QL. `a` is row-major n x n and is overwritten. Eigenvalues come out
/// ascending; with want_vectors, column j of `vecs` (row-major) pairs with value j.
inline std::vector<double> symmetric_eigen(std::vector<double> a, size_t n, bool want_vectors = false,
                                           std::vector<double>* vecs = nullptr) {
    std::vector<double> d(n), e(n);
    auto V = [&](size_t i, size_t j) -> double& { return a[i * n + j]; };
    if (n == 0) return d;
    for (size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);
    for (size_t i = n - 1; i > 0; --i) {
        double scale = 0, h = 0;
        for (size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
        if (scale == 0) {
            e[i] = d[i - 1];
            for (size_t j = 0; j < i; ++j) {
                d[j] = V(i - 1, j);
                V(i, j) = 0;
                V(j, i) = 0;
            }
        } else {
            for (size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1], g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (size_t j = 0; j < i; ++j) e[j] = 0;
            for (size_t j = 0; j < i; ++j) {
                f = d[j];
                V(j, i) = f;
                g = e[j] + V(j, j) * f;
                for (size_t k = j + 1; k <= i - 1; ++k) {
                    g += V(k, j) * d[k];
                    e[k] += V(k, j) * f;
                }
                e[j] = g;
            }
            f = 0;
            for (size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            double hh = f / (h + h);
            for (size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
            for (size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (size_t k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
                d[j] = V(i - 1, j);
                V(i, j) = 0;
            }
        }
        d[i] = h;
    }
    if (want_vectors) {
        for (size_t i = 0; i + 1 < n; ++i) {
            V(n - 1, i) = V(i, i);
            V(i, i) = 1;
            double h = d[i + 1];
            if (h != 0) {
                for (size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
                for (size_t j = 0; j <= i; ++j) {
                    double g = 0;
                    for (size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
                    for (size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
                }
            }
            for (size_t k = 0; k <= i; ++k) V(k, i + 1) = 0;
        }
        for (size_t j = 0; j < n; ++j) {
            d[j] = V(n - 1, j);
            V(n - 1, j) = 0;
        }
        V(n - 1, n - 1) = 1;
    } else {
        for (size_t j = 0; j < n; ++j) d[j] = V(j, j);
    }
    e[0] = 0;

    for (size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0;
    double f = 0, tst1 = 0;
    const double eps = std::ldexp(1.0, -52);
    for (size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        size_t m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 200) throw Error(Errc::NoConvergence, "QL iteration did not converge");
                double g = d[l];
                double p = (d[l + 1] - g) / (2 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                double dl1 = d[l + 1];
                double h = g - d[l];
                for (size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;
                p = d[m];
                double c = 1, c2 = 1, c3 = 1, el1 = e[l + 1], s = 0, s2 = 0;
                for (size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    if (want_vectors)
                        for (size_t k = 0; k < n; ++k) {
                            h = V(k, ii + 1);
                            V(k, ii + 1) = s * V(k, ii) + c * h;
                            V(k, ii) = c * V(k, ii) - s * h;
                        }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0;
    }
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t(0));
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return d[x] < d[y]; });
    std::vector<double> out(n);
    for (size_t j = 0; j < n; ++j) out[j] = d[idx[j]];
    if (want_vectors && vecs) {
        vecs->assign(n * n, 0.0);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) (*vecs)[k * n + j] = V(k, idx[j]);
    }
    return out;
}

inline std::vector<double> adjacency_matrix(const Graph& g) {
    std::vector<double> a(g.n * g.n, 0.0);
    for (size_t u = 0; u < g.n; ++u)
        for (auto* w = g.begin(u); w != g.end(u); ++w) a[u * g.n + *w] = 1.0;
    return a;
}

inline constexpr size_t kDenseLimit = 4000;

/// Full adjacency spectrum, ascending.
inline std::vector<double> dense_spectrum(const Graph& g) {
    if (g.n > kDenseLimit) throw Error(Errc::TooLarge, "dense path limited to " + std::to_string(kDenseLimit) + " vertices");
    return symmetric_eigen(adjacency_matrix(g), g.n);
}

enum class RamanujanStatus { Ramanujan, NotRamanujan, Undecided };

inline const char* ramanujan_name(RamanujanStatus s) {
    switch (s) {
    case RamanujanStatus::Ramanujan: return "ramanujan";
    case RamanujanStatus::NotRamanujan: return "not-ramanujan";
    case RamanujanStatus::Undecided: return "undecided";
    }
    return "undecided";
}

struct SpectralReport {
    double eta2 = 0;    // second largest adjacency eigenvalue
    double k = 0;       // degree
    double delta = 0;   // 1 - eta2/k
    double lambda2 = 0; // eta2 + k - 2, the Cayley-graph value when A∩B is trivial
    double bound = 0;   // absolute error radius on eta2
    RamanujanStatus ramanujan = RamanujanStatus::Undecided;
    double ramanujan_margin = 0; // 2 sqrt(k-1) - eta2
    std::string method;
    size_t vertices = 0;
    size_t matvecs = 0;
    size_t restarts = 0;
};

/// Ramanujan test with the error bound taken adversarially.
inline RamanujanStatus is_ramanujan(double eta2, double bound, double k, double* margin = nullptr) {
    double t = 2 * std::sqrt(k - 1);
    if (margin) *margin = t - eta2;
    if (eta2 + bound <= t) return RamanujanStatus::Ramanujan;
    if (eta2 - bound > t) return RamanujanStatus::NotRamanujan;
    return RamanujanStatus::Undecided;
}

inline void finish_report(SpectralReport& r) {
    r.delta = 1 - r.eta2 / r.k;
    r.lambda2 = r.eta2 + r.k - 2;
    r.ramanujan = is_ramanujan(r.eta2, r.bound, r.k, &r.ramanujan_margin);
}

inline size_t regular_degree(const Graph& g) {
    if (g.n == 0) throw Error(Errc::BadParameters, "empty graph");
    size_t k = g.degree(0);
    for (size_t v = 1; v < g.n; ++v)
        if (g.degree(v) != k) throw Error(Errc::BadParameters, "graph is not regular");
    return k;
}

inline SpectralReport dense_second_eigenvalue(const Graph& g) {
    if (g.n > kDenseLimit) throw Error(Errc::TooLarge, "dense path limited to " + std::to_string(kDenseLimit) + " vertices");
    if (!is_connected(g)) throw Error(Errc::Disconnected, "spectral gap needs a connected graph");
    SpectralReport r;
    r.k = double(regular_degree(g));
    auto ev = dense_spectrum(g);
    r.eta2 = g.n >= 2 ? ev[g.n - 2] : ev[0];
    r.bound = 1e-10;
    r.method = "dense";
    r.vertices = g.n;
    finish_report(r);
    return r;
}

struct LanczosOptions {
    size_t krylov = 120;
    size_t keep = 40;
    size_t max_restarts = 2000;
    uint64_t seed = 0xC0FFEE;
    unsigned threads = default_threads();
};

struct LanczosResult {
    double value = 0;
    double residual = 0; // ||A x - value x|| for the unit Ritz vector x
    std::vector<double> vector;
    size_t matvecs = 0;
    size_t restarts = 0;
};

namespace detail {

inline double dot(const double* x, const double* y, size_t n) {
    double s = 0;
    for (size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

inline void axpy(double a, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

} // namespace detail

/// Largest eigenpair of a symmetric operator on the orthogonal complement of
/// `deflate` (orthonormal vectors). Thick-restart Lanczos with full
/// reorthogonalisation (two Gram-Schmidt passes) and explicit Rayleigh-Ritz.
/// Converges when the true residual norm of the Ritz pair is at most tol.
template <class Op>
LanczosResult lanczos_largest(size_t N, Op&& op, const std::vector<std::vector<double>>& deflate, double tol,
                              const LanczosOptions& opt = {}) {
    if (deflate.size() >= N) throw Error(Errc::BadParameters, "nothing left after deflation");
    const size_t m = std::min(opt.krylov, N - deflate.size());
    const size_t keep = std::min(opt.keep, m > 1 ? m - 1 : 0);
    std::vector<double> V((m + 1) * N, 0.0), T((m + 1) * (m + 1), 0.0), w(N);
    auto col = [&](size_t j) { return V.data() + j * N; };
    auto Tij = [&](size_t i, size_t j) -> double& { return T[i * (m + 1) + j]; };
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    LanczosResult res;

    auto orth_deflate = [&](double* x) {
        for (int pass = 0; pass < 2; ++pass)
            for (auto& d : deflate) detail::axpy(-detail::dot(d.data(), x, N), d.data(), x, N);
    };
    // Orthogonalise x against columns 0..j-1, returning the accumulated coefficients.
    auto orth_basis = [&](double* x, size_t j, std::vector<double>& h) {
        h.assign(j, 0.0);
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<double> c(j);
            parallel_for(j, opt.threads, [&](size_t i) { c[i] = detail::dot(col(i), x, N); });
            for (size_t i = 0; i < j; ++i) {
                detail::axpy(-c[i], col(i), x, N);
                h[i] += c[i];
            }
        }
    };
    auto random_unit = [&](size_t j, double* x) {
        for (int attempt = 0; attempt < 5; ++attempt) {
            for (size_t i = 0; i < N; ++i) x[i] = uni(rng);
            orth_deflate(x);
            std::vector<double> h;
            orth_basis(x, j, h);
            double nr = std::sqrt(detail::dot(x, x, N));
            if (nr > 1e-8) {
                for (size_t i = 0; i < N; ++i) x[i] /= nr;
                return true;
            }
        }
        return false;
    };

    if (!random_unit(0, col(0))) throw Error(Errc::NoConvergence, "could not build a start vector");
    size_t j = 0;
    std::vector<double> h;
    for (size_t restart = 0;; ++restart) {
        size_t size = m;
        bool exhausted = false;
        while (j < m) {
            op(col(j), w.data());
            ++res.matvecs;
            orth_deflate(w.data());
            orth_basis(w.data(), j + 1, h);
            for (size_t i = 0; i <= j; ++i) Tij(i, j) = Tij(j, i) = h[i];
            double beta = std::sqrt(detail::dot(w.data(), w.data(), N));
            double scale = std::abs(h[j]) + 1.0;
            if (beta <= 1e-12 * scale) {
                Tij(j + 1, j) = Tij(j, j + 1) = 0;
                if (!random_unit(j + 1, col(j + 1))) {
                    size = j + 1;
                    exhausted = true;
                    break;
                }
            } else {
                for (size_t i = 0; i < N; ++i) col(j + 1)[i] = w[i] / beta;
                Tij(j + 1, j) = Tij(j, j + 1) = beta;
            }
            ++j;
        }
        std::vector<double> t(size * size), Y;
        for (size_t a = 0; a < size; ++a)
            for (size_t b = 0; b < size; ++b) t[a * size + b] = Tij(a, b);
        auto theta = symmetric_eigen(t, size, true, &Y);
        double beta_last = exhausted ? 0.0 : Tij(size, size - 1);
        size_t top = size - 1;
        double estimate = std::abs(beta_last * Y[(size - 1) * size + top]);
        if (estimate <= tol || exhausted || restart >= opt.max_restarts) {
            std::vector<double> x(N, 0.0), ax(N);
            for (size_t a = 0; a < size; ++a) detail::axpy(Y[a * size + top], col(a), x.data(), N);
            double nx = std::sqrt(detail::dot(x.data(), x.data(), N));
            for (auto& v : x) v /= nx;
            op(x.data(), ax.data());
            ++res.matvecs;
            detail::axpy(-theta[top], x.data(), ax.data(), N);
            double r = std::sqrt(detail::dot(ax.data(), ax.data(), N));
            if (r <= tol || exhausted) {
                res.value = theta[top];
                res.residual = r;
                res.vector = std::move(x);
                res.restarts = restart;
                return res;
            }
            if (restart >= opt.max_restarts)
                throw Error(Errc::NoConvergence, "Lanczos residual " + std::to_string(r) + " above tolerance after " +
                                                     std::to_string(restart) + " restarts");
        }
        // thick restart: keep the largest Ritz vectors and the residual direction
        std::vector<double> nv(keep * N, 0.0);
        for (size_t q = 0; q < keep; ++q) {
            size_t idx = size - 1 - q;
            parallel_for(size, 1, [&](size_t a) { detail::axpy(Y[a * size + idx], col(a), nv.data() + q * N, N); });
        }
        std::copy(col(size), col(size) + N, col(keep));
        std::copy(nv.begin(), nv.end(), V.begin());
        std::fill(T.begin(), T.end(), 0.0);
        for (size_t q = 0; q < keep; ++q) {
            size_t idx = size - 1 - q;
            Tij(q, q) = theta[idx];
            Tij(q, keep) = Tij(keep, q) = beta_last * Y[(size - 1) * size + idx];
        }
        j = keep;
    }
}

/// Second adjacency eigenvalue of a connected bipartite k-regular graph whose
/// first `left` vertices form one side. Runs Lanczos on B B^T over the left
/// side (eigenvalues eta^2) with the constant vector deflated, then lifts the
/// Ritz vector to the whole graph; the bound is the residual of A on the lift.
inline SpectralReport iterative_second_eigenvalue(const Graph& g, size_t left, double tol,
                                                  const LanczosOptions& opt = {}) {
    const size_t k = regular_degree(g);
    const size_t nl = left, nr = g.n - left;
    if (nl == 0 || nr == 0) throw Error(Errc::BadParameters, "bipartition has an empty side");
    for (size_t u = 0; u < nl; ++u)
        for (auto* w = g.begin(u); w != g.end(u); ++w)
            if (*w < nl) throw Error(Errc::BadParameters, "graph is not bipartite with the given sides");
    std::vector<double> z(nr);
    auto btrans = [&](const double* y, double* out) { // out[r] = sum over left neighbours
        parallel_for(nr, opt.threads, [&](size_t r) {
            double s = 0;
            for (auto* w = g.begin(nl + r); w != g.end(nl + r); ++w) s += y[*w];
            out[r] = s;
        });
    };
    auto b = [&](const double* zz, double* out) {
        parallel_for(nl, opt.threads, [&](size_t l) {
            double s = 0;
            for (auto* w = g.begin(l); w != g.end(l); ++w) s += zz[*w - nl];
            out[l] = s;
        });
    };
    auto op = [&](const double* y, double* out) {
        btrans(y, z.data());
        b(z.data(), out);
    };
    std::vector<std::vector<double>> deflate{std::vector<double>(nl, 1.0 / std::sqrt(double(nl)))};
    // the residual of A on the lift is about 1/(eta sqrt 2) times that of B B^T
    SpectralReport r;
    r.k = double(k);
    r.method = "iterative";
    r.vertices = g.n;
    double inner = tol;
    for (int attempt = 0;; ++attempt) {
        LanczosResult lr = lanczos_largest(nl, op, deflate, inner, opt);
        double eta = std::sqrt(std::max(0.0, lr.value));
        std::vector<double> x(g.n), ax(g.n);
        std::copy(lr.vector.begin(), lr.vector.end(), x.begin());
        btrans(lr.vector.data(), x.data() + nl);
        for (size_t q = 0; q < nr; ++q) x[nl + q] = eta > 0 ? x[nl + q] / eta : 0.0;
        double nx = std::sqrt(detail::dot(x.data(), x.data(), g.n));
        for (auto& v : x) v /= nx;
        b(x.data() + nl, ax.data());
        btrans(x.data(), ax.data() + nl);
        detail::axpy(-eta, x.data(), ax.data(), g.n);
        r.eta2 = eta;
        r.bound = std::sqrt(detail::dot(ax.data(), ax.data(), g.n));
        r.matvecs += lr.matvecs;
        r.restarts += lr.restarts;
        if (r.bound <= tol) break;
        if (attempt == 3)
            throw Error(Errc::NoConvergence, "lifted residual " + std::to_string(r.bound) + " above tolerance");
        inner /= 10;
    }
    finish_report(r);
    return r;
}

/// Dense path up to the size limit, iterative beyond it.
inline SpectralReport second_eigenvalue(const CosetGraph& G, double tol = 1e-8, const LanczosOptions& opt = {}) {
    if (!is_connected(G.graph)) throw Error(Errc::Disconnected, "coset graph is disconnected");
    if (G.vertices() <= kDenseLimit / 4) return dense_second_eigenvalue(G.graph);
    return iterative_second_eigenvalue(G.graph, G.left, tol, opt);
}

} // namespace kz
