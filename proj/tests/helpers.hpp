#pragma once

#include <cmath>
#include <vector>

#include "bh/linalg.hpp"
#include "bh/rng.hpp"
#include "bh/spaces.hpp"

namespace bh::testing {

inline Vec rand_vec(CounterRng& rng, int dim, double lo = -5.0, double hi = 5.0) {
    Vec v(dim);
    for (auto& c : v)
        c = rng.uniform(lo, hi);
    return v;
}

// Random symmetric PSD matrix A = B^T B with B entries in [-1, 1].
inline Matrix random_psd(std::uint64_t seed, int dim) {
    CounterRng rng(seed, 0xbadfeed);
    Matrix B(dim, Vec(dim));
    for (auto& row : B)
        for (auto& c : row)
            c = rng.uniform(-1.0, 1.0);
    Matrix A(dim, Vec(dim, 0.0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                A[i][j] += B[k][i] * B[k][j];
    return A;
}

// Independent brute-force largest-eigenvalue oracle: plain power
// iteration with Rayleigh quotient, run to 1e-12.  Kept free of any
// library eigenvalue code on purpose.
inline double power_lambda_max(const Matrix& A, std::uint64_t seed = 7) {
    const int n = static_cast<int>(A.size());
    CounterRng rng(seed, 0x9e1);
    Vec v(n);
    for (auto& c : v)
        c = rng.uniform(0.1, 1.0);
    // shift to make the dominant eigenvalue positive and largest
    double shift = 0.0;
    for (const auto& row : A) {
        double s = 0.0;
        for (double c : row)
            s += std::abs(c);
        shift = std::max(shift, s);
    }
    shift += 1.0;
    double prev = 0.0;
    for (int it = 0; it < 200000; ++it) {
        Vec w(n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                w[i] += A[i][j] * v[j];
            w[i] += shift * v[i];
        }
        double nw = 0.0;
        for (double c : w)
            nw += c * c;
        nw = std::sqrt(nw);
        for (auto& c : w)
            c /= nw;
        double rq = 0.0;
        for (int i = 0; i < n; ++i) {
            double Ai = 0.0;
            for (int j = 0; j < n; ++j)
                Ai += A[i][j] * w[j];
            rq += w[i] * Ai;
        }
        if (it > 5 && std::abs(rq - prev) <= 1e-12 * (1.0 + std::abs(rq)))
            return rq;
        prev = rq;
        v = std::move(w);
    }
    return prev;
}

// Random direction scaled to exact ambient norm rho.
inline Vec random_direction(CounterRng& rng, const NormedSpace& s, double rho) {
    Vec d(s.dim());
    double n = 0.0;
    do {
        for (auto& c : d)
            c = rng.uniform(-1.0, 1.0);
        n = s.norm(d);
    } while (n == 0.0);
    for (auto& c : d)
        c *= rho / n;
    return d;
}

} // namespace bh::testing
