#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "bh/domains.hpp"
#include "bh/oracles.hpp"

namespace bh {

// One tag per inequality of the smoothness characterizations; the
// string forms are the stable identifiers used by the CLI and reports.
enum class ConditionId {
    lip_gradient,     // |f'(y)-f'(x)|_* <= L |y-x|
    one_sided_lip,    // |<f'(y)-f'(x), y-x>| <= L |y-x|^2
    taylor_remainder, // |f(y)-f(x)-<f'(x),y-x>| <= L/2 |y-x|^2
    strong_smoothness,
    descent_lemma,
    comonotone_upper, // <f'(y)-f'(x), y-x> <= L |y-x|^2
    cocoercivity,     // <f'(y)-f'(x), y-x> >= 1/L |f'(y)-f'(x)|_*^2
    bregman_lower,    // f(y) >= f(x) + <f'(x),y-x> + 1/(2L) |f'(y)-f'(x)|_*^2
    nonexpansive_transform, // 2 f'/L - R nonexpansive (Hilbert only)
    aux_convexity,          // L/2 |.|^2 - f convex
};

std::string to_string(ConditionId c);
ConditionId condition_from_string(const std::string& s);
std::vector<ConditionId> all_conditions();

bool needs_gradient(ConditionId c);
bool needs_lambda(ConditionId c);
bool needs_hilbert(ConditionId c);
bool needs_positive_L(ConditionId c); // cocoercivity-type conditions reject L = 0

// Thrown when a condition cannot be evaluated for the given
// oracle/space (missing gradient, Banach space for the Riesz-based
// transform, L = 0 where L > 0 is required).  Distinct from a
// violation verdict.
struct InapplicableCondition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Pointwise margins: nonnegative iff the defining inequality holds at
// the given arguments.  All are pure functions.
double check_lip_gradient(const FunctionOracle& f, const NormedSpace& s,
                          const Vec& x, const Vec& y, double L);
double check_one_sided(const FunctionOracle& f, const NormedSpace& s,
                       const Vec& x, const Vec& y, double L);
double check_taylor(const FunctionOracle& f, const NormedSpace& s,
                    const Vec& x, const Vec& y, double L);
double check_strong_smoothness(const FunctionOracle& f, const NormedSpace& s,
                               const Vec& x, const Vec& y, double lambda, double L);
double check_descent(const FunctionOracle& f, const NormedSpace& s,
                     const Vec& x, const Vec& y, double L);
double check_comonotone_upper(const FunctionOracle& f, const NormedSpace& s,
                              const Vec& x, const Vec& y, double L);
double check_cocoercivity(const FunctionOracle& f, const NormedSpace& s,
                          const Vec& x, const Vec& y, double L);
double check_bregman_lower(const FunctionOracle& f, const NormedSpace& s,
                           const Vec& x, const Vec& y, double L);
double check_nonexpansive_transform(const FunctionOracle& f, const NormedSpace& s,
                                    const Vec& x, const Vec& y, double L);
double check_convexity_of_auxiliary(const FunctionOracle& f, const NormedSpace& s,
                                    const Vec& x, const Vec& y, double lambda, double L);

// Dispatch on the tag; lambda ignored unless needs_lambda(c).
double condition_margin(const FunctionOracle& f, const NormedSpace& s, ConditionId c,
                        const Vec& x, const Vec& y, double lambda, double L);

inline constexpr double kMarginTolerance = 1e-9;

struct ConditionVerdict {
    ConditionId condition;
    double L = 0.0;
    bool holds = false;
    double worst_margin = 0.0;
    Vec witness_x, witness_y;
    std::optional<double> witness_lambda;
};

enum class Exec { serial, parallel };

// Aggregates the pointwise margin over sample_pairs(domain, 0, budget,
// seed) and, for lambda-conditions, a fixed grid plus seeded random
// lambdas per pair.  Worst margin is an exact minimum with ties broken
// by lowest sample index, so serial and parallel runs agree bitwise.
ConditionVerdict run_condition(const FunctionOracle& f, const NormedSpace& s,
                               const ConvexDomain& domain, ConditionId condition,
                               double L, int budget, std::uint64_t seed,
                               Exec exec = Exec::parallel);

// Lambda values evaluated per pair for the lambda-quantified
// conditions: {0.1, 0.25, 0.5, 0.75, 0.9} plus 8 seeded random draws.
std::vector<double> lambda_grid(std::uint64_t seed);

} // namespace bh
