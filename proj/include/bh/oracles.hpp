#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bh/linalg.hpp"

namespace bh {

// f with value and (optionally) analytic gradient.  Gradients are
// Covectors throughout; identification with primal vectors happens
// only through NormedSpace::riesz.
struct FunctionOracle {
    std::string name;
    int dim = 0;
    std::function<double(const Vec&)> value;
    std::function<Covector(const Vec&)> gradient; // empty if unavailable
    bool convex = false;
    // Known best constants, keyed "condition@norm", for regression
    // anchoring of the gallery scenarios.
    std::map<std::string, double> known_constants;
    // Set for quadratic oracles; enables gradient preimages by linear
    // solve.
    std::optional<Matrix> quadratic_matrix;

    bool has_gradient() const { return static_cast<bool>(gradient); }
};

FunctionOracle make_quadratic(const Matrix& A); // A symmetric
FunctionOracle make_saddle_half_diff();         // (x1^2 - x2^2)/2 on R^2
FunctionOracle make_half_sq_norm(int dim);      // sum x_i^2 / 2
FunctionOracle make_linear(const Vec& c);
FunctionOracle make_softplus_norm(int dim); // sqrt(1 + |x|_2^2)
FunctionOracle make_log_sum_exp(int dim);
FunctionOracle make_abs_sum(int dim); // |x|_1, value only; nonsmooth control

// Registry lookup used by the CLI.  params carries "A" (matrix) for
// quadratic, "c" (vector) for linear, "dim" for the dimension-generic
// oracles.  Throws std::invalid_argument on unknown names or bad
// parameters.
struct OracleParams {
    std::optional<Matrix> A;
    std::optional<Vec> c;
    int dim = 2;
};
FunctionOracle builtin(const std::string& name, const OracleParams& params = {});

std::vector<std::string> builtin_names();

// Central finite differences, component i = (f(x + h e_i) - f(x - h e_i)) / 2h.
Covector fd_gradient(const FunctionOracle& oracle, const Vec& x, double h);

// Extrapolated estimate of f'(x; dir) + f'(x; -dir) from one-sided
// difference quotients on t_grid (positive, decreasing); 0 for
// Gateaux-differentiable f.
double directional_defect(const FunctionOracle& oracle, const Vec& x, const Vec& dir,
                          const std::vector<double>& t_grid);

} // namespace bh
