#include "bh/linalg.hpp"

#include <cmath>

namespace bh {

bool is_symmetric(const Matrix& A, double tol) {
    const std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n)
            return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(A[i][j] - A[j][i]) > tol)
                return false;
    }
    return true;
}

Vec solve_linear(Matrix A, Vec b) {
    const std::size_t n = A.size();
    require_same_dim(n, b.size());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col]))
                piv = r;
        if (std::abs(A[piv][col]) < 1e-300)
            throw std::domain_error("singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = A[r][col] / A[col][col];
            if (m == 0.0)
                continue;
            for (std::size_t c = col; c < n; ++c)
                A[r][c] -= m * A[col][c];
            b[r] -= m * b[col];
        }
    }
    Vec x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c)
            s -= A[ri][c] * x[c];
        x[ri] = s / A[ri][ri];
    }
    return x;
}

namespace {

double gershgorin_bound(const Matrix& A) {
    double bound = 0.0;
    for (const auto& row : A) {
        double s = 0.0;
        for (double v : row)
            s += std::abs(v);
        bound = std::max(bound, s);
    }
    return bound;
}

} // namespace

double sym_lambda_max(const Matrix& A, double tol, int max_iter) {
    const std::size_t n = A.size();
    if (n == 0)
        return 0.0;
    // Shift so that the dominant eigenvalue of A + cI is the largest
    // eigenvalue of A even when A is indefinite.
    const double shift = gershgorin_bound(A) + 1.0;
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = 1.0 / std::sqrt(static_cast<double>(n)) + 1e-3 * static_cast<double>(i + 1);
    double nv = std::sqrt(dot(v, v));
    for (auto& c : v)
        c /= nv;
    double lambda = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Vec w = mat_vec(A, v);
        for (std::size_t i = 0; i < n; ++i)
            w[i] += shift * v[i];
        const double nw = std::sqrt(dot(w, w));
        if (nw == 0.0)
            return -shift;
        for (auto& c : w)
            c /= nw;
        Vec Aw = mat_vec(A, w);
        const double next = dot(w, Aw);
        if (it > 2 && std::abs(next - lambda) <= tol * (1.0 + std::abs(next))) {
            lambda = next;
            break;
        }
        lambda = next;
        v = std::move(w);
    }
    return lambda;
}

double sym_lambda_min(const Matrix& A) {
    Matrix neg(A.size(), Vec(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j)
            neg[i][j] = -A[i][j];
    return -sym_lambda_max(neg);
}

} // namespace bh
