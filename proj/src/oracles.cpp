#include "bh/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace bh {

FunctionOracle make_quadratic(const Matrix& A) {
    if (A.empty())
        throw std::invalid_argument("quadratic: empty matrix");
    if (!is_symmetric(A))
        throw std::invalid_argument("quadratic: matrix must be symmetric");
    FunctionOracle f;
    f.name = "quadratic";
    f.dim = static_cast<int>(A.size());
    f.value = [A](const Vec& x) { return 0.5 * dot(x, mat_vec(A, x)); };
    f.gradient = [A](const Vec& x) { return Covector{mat_vec(A, x)}; };
    f.convex = sym_lambda_min(A) >= -1e-10;
    f.quadratic_matrix = A;
    return f;
}

FunctionOracle make_saddle_half_diff() {
    FunctionOracle f;
    f.name = "saddle_half_diff";
    f.dim = 2;
    f.value = [](const Vec& x) {
        require_same_dim(x.size(), 2);
        return 0.5 * (x[0] * x[0] - x[1] * x[1]);
    };
    f.gradient = [](const Vec& x) {
        require_same_dim(x.size(), 2);
        return Covector{{x[0], -x[1]}};
    };
    f.convex = false;
    f.known_constants["lip_gradient@linf"] = 2.0;
    f.known_constants["one_sided_lip@linf"] = 1.0;
    return f;
}

FunctionOracle make_half_sq_norm(int dim) {
    if (dim < 1)
        throw std::invalid_argument("half_sq_norm: dim must be positive");
    FunctionOracle f;
    f.name = "half_sq_norm";
    f.dim = dim;
    f.value = [dim](const Vec& x) {
        require_same_dim(x.size(), static_cast<std::size_t>(dim));
        double s = 0.0;
        for (double c : x)
            s += c * c;
        return 0.5 * s;
    };
    f.gradient = [dim](const Vec& x) {
        require_same_dim(x.size(), static_cast<std::size_t>(dim));
        return Covector{x};
    };
    f.convex = true;
    if (dim == 2)
        f.known_constants["lip_gradient@linf"] = 2.0;
    Matrix eye(dim, Vec(dim, 0.0));
    for (int i = 0; i < dim; ++i)
        eye[i][i] = 1.0;
    f.quadratic_matrix = std::move(eye);
    return f;
}

FunctionOracle make_linear(const Vec& c) {
    if (c.empty())
        throw std::invalid_argument("linear: empty coefficient vector");
    FunctionOracle f;
    f.name = "linear";
    f.dim = static_cast<int>(c.size());
    f.value = [c](const Vec& x) {
        require_same_dim(x.size(), c.size());
        double s = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i)
            s += c[i] * x[i];
        return s;
    };
    f.gradient = [c](const Vec& x) {
        require_same_dim(x.size(), c.size());
        return Covector{c};
    };
    f.convex = true;
    return f;
}

FunctionOracle make_softplus_norm(int dim) {
    if (dim < 1)
        throw std::invalid_argument("softplus_norm: dim must be positive");
    FunctionOracle f;
    f.name = "softplus_norm";
    f.dim = dim;
    f.value = [dim](const Vec& x) {
        require_same_dim(x.size(), static_cast<std::size_t>(dim));
        double s = 1.0;
        for (double c : x)
            s += c * c;
        return std::sqrt(s);
    };
    f.gradient = [dim](const Vec& x) {
        require_same_dim(x.size(), static_cast<std::size_t>(dim));
        double s = 1.0;
        for (double c : x)
            s += c * c;
        const double r = std::sqrt(s);
        Vec g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            g[i] = x[i] / r;
        return Covector{std::move(g)};
    };
    f.convex = true;
    return f;
}

FunctionOracle make_log_sum_exp(int dim) {
    if (dim < 1)
        throw std::invalid_argument("log_sum_exp: dim must be positive");
    FunctionOracle f;
    f.name = "log_sum_exp";
    f.dim = dim;
    f.value = [dim](const Vec& x) {
        require_same_dim(x.size(), static_cast<std::size_t>(dim));
        double m = x[0];
        for (double c : x)
            m = std::max(m, c);
        double s = 0.0;
        for (double c : x)
            s += std::exp(c - m);
        return m + std::log(s);
    };
    f.gradient = [dim](const Vec& x) {
        require_same_dim(x.size(), static_cast<std::size_t>(dim));
        double m = x[0];
        for (double c : x)
            m = std::max(m, c);
        double s = 0.0;
        Vec g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            g[i] = std::exp(x[i] - m);
            s += g[i];
        }
        for (auto& c : g)
            c /= s;
        return Covector{std::move(g)};
    };
    f.convex = true;
    return f;
}

FunctionOracle make_abs_sum(int dim) {
    if (dim < 1)
        throw std::invalid_argument("abs_sum: dim must be positive");
    FunctionOracle f;
    f.name = "abs_sum";
    f.dim = dim;
    f.value = [dim](const Vec& x) {
        require_same_dim(x.size(), static_cast<std::size_t>(dim));
        double s = 0.0;
        for (double c : x)
            s += std::abs(c);
        return s;
    };
    // deliberately no gradient: nonsmooth negative control
    f.convex = true;
    return f;
}

std::vector<std::string> builtin_names() {
    return {"quadratic", "saddle_half_diff", "half_sq_norm",
            "linear",    "softplus_norm",    "log_sum_exp",
            "abs_sum"};
}

FunctionOracle builtin(const std::string& name, const OracleParams& params) {
    if (name == "quadratic") {
        if (!params.A)
            throw std::invalid_argument("quadratic requires matrix parameter A");
        return make_quadratic(*params.A);
    }
    if (name == "saddle_half_diff")
        return make_saddle_half_diff();
    if (name == "half_sq_norm")
        return make_half_sq_norm(params.dim);
    if (name == "linear") {
        if (!params.c)
            throw std::invalid_argument("linear requires coefficient vector c");
        return make_linear(*params.c);
    }
    if (name == "softplus_norm")
        return make_softplus_norm(params.dim);
    if (name == "log_sum_exp")
        return make_log_sum_exp(params.dim);
    if (name == "abs_sum")
        return make_abs_sum(params.dim);
    throw std::invalid_argument("unknown oracle name: " + name);
}

Covector fd_gradient(const FunctionOracle& oracle, const Vec& x, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("fd_gradient: h must be positive");
    require_same_dim(x.size(), static_cast<std::size_t>(oracle.dim));
    Vec g(x.size());
    Vec xp = x, xm = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xp[i] = x[i] + h;
        xm[i] = x[i] - h;
        g[i] = (oracle.value(xp) - oracle.value(xm)) / (2.0 * h);
        xp[i] = x[i];
        xm[i] = x[i];
    }
    return Covector{std::move(g)};
}

double directional_defect(const FunctionOracle& oracle, const Vec& x, const Vec& dir,
                          const std::vector<double>& t_grid) {
    if (t_grid.empty())
        throw std::invalid_argument("directional_defect: empty t grid");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0.0))
            throw std::invalid_argument("directional_defect: t grid must be positive");
        if (i > 0 && !(t_grid[i] < t_grid[i - 1]))
            throw std::invalid_argument("directional_defect: t grid must be decreasing");
    }
    const double f0 = oracle.value(x);
    std::vector<double> q(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        Vec xp = x, xm = x;
        for (std::size_t k = 0; k < x.size(); ++k) {
            xp[k] += t * dir[k];
            xm[k] -= t * dir[k];
        }
        q[i] = (oracle.value(xp) - f0) / t + (oracle.value(xm) - f0) / t;
    }
    if (q.size() == 1)
        return q[0];
    // Neville extrapolation of q(t) to t = 0
    std::vector<double> tab = q;
    const std::size_t m = t_grid.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = 0; i + level < m; ++i)
            tab[i] = (t_grid[i] * tab[i + 1] - t_grid[i + level] * tab[i]) /
                     (t_grid[i] - t_grid[i + level]);
    return tab[0];
}

} // namespace bh
