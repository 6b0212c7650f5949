#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bh {

using Vec = std::vector<double>;

// Element of the dual space; measured in the dual norm.
struct Covector {
    Vec c;

    std::size_t size() const { return c.size(); }
    double operator[](std::size_t i) const { return c[i]; }
};

using Matrix = std::vector<Vec>; // row-major, square when used here

inline void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b)
        throw std::invalid_argument("dimension mismatch");
}

inline Vec sub(const Vec& a, const Vec& b) {
    require_same_dim(a.size(), b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    require_same_dim(a.size(), b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vec scale(double s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

inline Vec combine(double la, const Vec& a, double lb, const Vec& b) {
    require_same_dim(a.size(), b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = la * a[i] + lb * b[i];
    return r;
}

inline Covector sub(const Covector& a, const Covector& b) {
    return Covector{sub(a.c, b.c)};
}

// Standard bilinear pairing <phi, v> = sum_i phi_i v_i.
inline double pairing(const Covector& phi, const Vec& v) {
    require_same_dim(phi.size(), v.size());
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += phi.c[i] * v[i];
    return s;
}

inline double dot(const Vec& a, const Vec& b) {
    require_same_dim(a.size(), b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Vec mat_vec(const Matrix& A, const Vec& x) {
    Vec r(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        r[i] = dot(A[i], x);
    return r;
}

bool is_symmetric(const Matrix& A, double tol = 1e-12);

// Solves A z = b by Gaussian elimination with partial pivoting.
// Throws std::domain_error on (numerically) singular A.
Vec solve_linear(Matrix A, Vec b);

// Largest eigenvalue of a symmetric matrix by power iteration with a
// deterministic start vector.  Intended for the small dense matrices
// used here.
double sym_lambda_max(const Matrix& A, double tol = 1e-13, int max_iter = 100000);

double sym_lambda_min(const Matrix& A);

} // namespace bh
