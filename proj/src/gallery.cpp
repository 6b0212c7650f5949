#include "bh/gallery.hpp"

#include <cmath>
#include <stdexcept>

namespace bh {

namespace {

void expect_range(ScenarioReport& rep, const std::string& what, double observed,
                  double lo, double hi) {
    ExpectationResult r;
    r.description = what;
    r.observed = observed;
    r.expected = 0.5 * (lo + hi);
    r.passed = observed >= lo && observed <= hi;
    rep.all_passed = rep.all_passed && r.passed;
    rep.results.push_back(std::move(r));
}

void expect_flag(ScenarioReport& rep, const std::string& what, bool observed,
                 bool expected) {
    ExpectationResult r;
    r.description = what;
    r.observed = observed ? 1.0 : 0.0;
    r.expected = expected ? 1.0 : 0.0;
    r.passed = observed == expected;
    rep.all_passed = rep.all_passed && r.passed;
    rep.results.push_back(std::move(r));
}

// Gradient map diag(1,-1) is 1-one-sided-Lipschitz but only
// 2-Lipschitz into the l1 dual of l-infinity.
ScenarioReport banach_lemma_failure(int budget, std::uint64_t seed) {
    ScenarioReport rep;
    rep.name = "banach_lemma_failure";
    const auto f = make_saddle_half_diff();
    const auto space = NormedSpace::linf(2);
    const auto domain = ConvexDomain::whole_space(space);

    const auto one_sided =
        run_condition(f, space, domain, ConditionId::one_sided_lip, 1.0, budget, seed);
    expect_flag(rep, "one_sided_lip holds at L=1", one_sided.holds, true);

    const auto lip =
        run_condition(f, space, domain, ConditionId::lip_gradient, 1.0, budget, seed);
    expect_flag(rep, "lip_gradient violated at L=1", lip.holds, false);

    const auto est =
        estimate_constant(f, space, domain, ConditionId::lip_gradient, budget, seed);
    expect_range(rep, "lip_gradient best constant", est.L_hat, 1.99, 2.0);
    return rep;
}

// For f = |x|_2^2/2 on (R^2, l-infinity): f' is 2-Lipschitz but
// L/2 |.|_inf^2 - f is nonconvex for every L, witnessed at
// ((1,1), (1,-1), 1/2) where the margin is exactly -1/2.
ScenarioReport banach_theorem_failure(int budget, std::uint64_t seed) {
    ScenarioReport rep;
    rep.name = "banach_theorem_failure";
    const auto f = make_half_sq_norm(2);
    const auto space = NormedSpace::linf(2);
    const auto domain = ConvexDomain::whole_space(space);

    const auto est =
        estimate_constant(f, space, domain, ConditionId::lip_gradient, budget, seed);
    expect_range(rep, "lip_gradient best constant", est.L_hat, 1.99, 2.0);

    const Vec wx = {1.0, 1.0};
    const Vec wy = {1.0, -1.0};
    for (double L : {0.5, 1.0, 2.0, 10.0}) {
        const double margin = check_convexity_of_auxiliary(f, space, wx, wy, 0.5, L);
        expect_range(rep,
                     "aux_convexity analytic witness margin at L=" + std::to_string(L),
                     margin, -0.5 - 1e-12, -0.5 + 1e-12);
        const auto verdict = run_condition(f, space, domain, ConditionId::aux_convexity,
                                           L, budget, seed);
        expect_flag(rep, "aux_convexity violated at L=" + std::to_string(L),
                    verdict.holds, false);
    }
    return rep;
}

// Identity gradient on the Euclidean plane: every characterization is
// tight at L = 1.
ScenarioReport hilbert_sanity(int budget, std::uint64_t seed) {
    ScenarioReport rep;
    rep.name = "hilbert_sanity";
    const auto f = make_half_sq_norm(2);
    const auto space = NormedSpace::euclidean(2);
    const auto domain = ConvexDomain::whole_space(space);

    for (ConditionId c : all_conditions()) {
        const auto verdict = run_condition(f, space, domain, c, 1.0, budget, seed);
        expect_flag(rep, to_string(c) + " holds at L=1", verdict.holds, true);
        expect_range(rep, to_string(c) + " equality margin at L=1",
                     verdict.worst_margin, -1e-9, 1e-9);
    }
    return rep;
}

} // namespace

std::vector<std::string> scenario_names() {
    return {"banach_lemma_failure", "banach_theorem_failure", "hilbert_sanity"};
}

ScenarioReport run_scenario(const std::string& name, int budget, std::uint64_t seed) {
    if (name == "banach_lemma_failure")
        return banach_lemma_failure(budget, seed);
    if (name == "banach_theorem_failure")
        return banach_theorem_failure(budget, seed);
    if (name == "hilbert_sanity")
        return hilbert_sanity(budget, seed);
    throw std::invalid_argument("unregistered scenario: " + name);
}

} // namespace bh
