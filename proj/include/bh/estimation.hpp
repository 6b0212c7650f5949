#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bh/conditions.hpp"

namespace bh {

// Sampled lower bound on the best (smallest) constant for a condition.
struct ConstantEstimate {
    ConditionId condition;
    double L_hat = 0.0;
    bool unbounded = false;  // cocoercivity-type ratio with nonpositive denominator
    bool degenerate = false; // no informative samples (zero/linear oracles)
    Vec witness_x, witness_y;
    std::optional<double> witness_lambda;
    long samples_used = 0;
};

// Max over sampled pairs (and lambdas) of the smallest L making the
// pointwise inequality tight, followed by a coordinate-descent polish
// of the witness.  Polish is applied at every running-max improvement,
// which keeps L_hat exactly monotone under sample-prefix extension.
ConstantEstimate estimate_constant(const FunctionOracle& f, const NormedSpace& s,
                                   const ConvexDomain& domain, ConditionId condition,
                                   int budget, std::uint64_t seed,
                                   Exec exec = Exec::parallel);

// Smallest L making the condition inequality tight at one sample;
// negative infinity marks uninformative samples, +infinity unbounded
// evidence.
double pointwise_ratio(const FunctionOracle& f, const NormedSpace& s, ConditionId c,
                       const Vec& x, const Vec& y, double lambda);

// Chained bound max_i |f'(x_i)-f'(x_{i-1})|_* / |x_i - x_{i-1}| over
// the n-point subdivision of [x, y]; upper-bounds the endpoint ratio
// by the triangle inequality.
double segment_refine(const FunctionOracle& f, const NormedSpace& s,
                      const Vec& x, const Vec& y, int n);

struct TaylorLipBound {
    double L_taylor = 0.0;
    double L_lip = 0.0;
    double ratio = 1.0;
    bool degenerate = false;
};

// Estimates the Taylor-remainder and Lipschitz constants on a shared
// sample set and reports L_lip / L_taylor; at most 2 for convex
// oracles on the supported norms.  Per-pair Taylor and one-sided
// ratios are themselves valid lower bounds on the Lipschitz constant
// and are folded into L_lip.
TaylorLipBound banach_taylor_to_lip_bound(const FunctionOracle& f, const NormedSpace& s,
                                          const ConvexDomain& domain, int budget,
                                          std::uint64_t seed);

// Preimages x_i = A^{-1} x_i^* of the affine gradient interpolants
// x_i^* = (1 - i/n) f'(x) + (i/n) f'(y); quadratic oracles with
// invertible A only.
std::vector<Vec> gradient_range_segment(const FunctionOracle& f, const NormedSpace& s,
                                        const Vec& x, const Vec& y, int n);

enum class RangeMode { coco_to_bregman, descent_to_coco };

struct RangeConditionalResult {
    bool hypothesis_range_ok = false;
    double margin = 0.0; // conclusion margin, meaningful when hypothesis_range_ok
    std::string note;
};

// Checks the conclusion inequality at (x, y) with a previously
// certified L, after verifying the gradient-segment hypotheses:
//   coco_to_bregman: all preimages x_i in O        -> bregman_lower margin
//   descent_to_coco: all x_i in O_rho and
//                    |f'(y)-f'(x)|_* < L rho n     -> cocoercivity margin
RangeConditionalResult check_range_conditional(const FunctionOracle& f,
                                               const NormedSpace& s,
                                               const ConvexDomain& domain, double rho,
                                               const Vec& x, const Vec& y, int n,
                                               RangeMode mode, double L);

enum class MatrixEntry { verified, violated, not_applicable, observational };

struct ConstantOrdering {
    ConditionId a, b;
    double L_a = 0.0, L_b = 0.0;
    std::string relation; // "equal_within_tol", "leq", "observational", ...
    bool satisfied = true;
};

struct ImplicationReport {
    std::string space_class; // "hilbert" or "banach"
    std::map<ConditionId, ConstantEstimate> estimates;
    std::vector<std::pair<std::pair<ConditionId, ConditionId>, MatrixEntry>> matrix;
    std::vector<ConstantOrdering> constant_orderings;
    bool degenerate = false;
    bool all_verified = true;
};

inline constexpr double kClassAgreementTol = 5e-2;

// Estimates every applicable constant and checks the orderings of the
// equivalence class {strong_smoothness, descent_lemma,
// comonotone_upper, lip_gradient} and the chain bregman >= cocoercive
// >= class.  In Hilbert spaces cocoercivity must agree with the class;
// in Banach spaces the class-vs-cocoercivity direction is recorded as
// observational only.
ImplicationReport verify_implication_matrix(const FunctionOracle& f, const NormedSpace& s,
                                            const ConvexDomain& domain, int budget,
                                            std::uint64_t seed);

} // namespace bh
