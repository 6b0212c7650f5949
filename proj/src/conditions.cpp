#include "bh/conditions.hpp"

#include <cmath>

#include "bh/rng.hpp"

namespace bh {

std::string to_string(ConditionId c) {
    switch (c) {
    case ConditionId::lip_gradient: return "lip_gradient";
    case ConditionId::one_sided_lip: return "one_sided_lip";
    case ConditionId::taylor_remainder: return "taylor_remainder";
    case ConditionId::strong_smoothness: return "strong_smoothness";
    case ConditionId::descent_lemma: return "descent_lemma";
    case ConditionId::comonotone_upper: return "comonotone_upper";
    case ConditionId::cocoercivity: return "cocoercivity";
    case ConditionId::bregman_lower: return "bregman_lower";
    case ConditionId::nonexpansive_transform: return "nonexpansive_transform";
    case ConditionId::aux_convexity: return "aux_convexity";
    }
    return "?";
}

ConditionId condition_from_string(const std::string& s) {
    for (ConditionId c : all_conditions())
        if (to_string(c) == s)
            return c;
    throw std::invalid_argument("unknown condition: " + s);
}

std::vector<ConditionId> all_conditions() {
    return {ConditionId::lip_gradient,     ConditionId::one_sided_lip,
            ConditionId::taylor_remainder, ConditionId::strong_smoothness,
            ConditionId::descent_lemma,    ConditionId::comonotone_upper,
            ConditionId::cocoercivity,     ConditionId::bregman_lower,
            ConditionId::nonexpansive_transform, ConditionId::aux_convexity};
}

bool needs_gradient(ConditionId c) {
    switch (c) {
    case ConditionId::strong_smoothness:
    case ConditionId::aux_convexity:
        return false;
    default:
        return true;
    }
}

bool needs_lambda(ConditionId c) {
    return c == ConditionId::strong_smoothness || c == ConditionId::aux_convexity;
}

bool needs_hilbert(ConditionId c) { return c == ConditionId::nonexpansive_transform; }

bool needs_positive_L(ConditionId c) {
    switch (c) {
    case ConditionId::cocoercivity:
    case ConditionId::bregman_lower:
    case ConditionId::nonexpansive_transform:
        return true;
    default:
        return false;
    }
}

namespace {

void require_gradient(const FunctionOracle& f) {
    if (!f.has_gradient())
        throw InapplicableCondition("oracle '" + f.name + "' has no gradient");
}

void require_positive_L(ConditionId c, double L) {
    if (!(L > 0.0))
        throw InapplicableCondition(to_string(c) + " requires L > 0");
}

} // namespace

double check_lip_gradient(const FunctionOracle& f, const NormedSpace& s,
                          const Vec& x, const Vec& y, double L) {
    require_gradient(f);
    const Vec d = sub(y, x);
    return L * s.norm(d) - s.dual_norm(sub(f.gradient(y), f.gradient(x)));
}

double check_one_sided(const FunctionOracle& f, const NormedSpace& s,
                       const Vec& x, const Vec& y, double L) {
    require_gradient(f);
    const Vec d = sub(y, x);
    const double nd = s.norm(d);
    return L * nd * nd - std::abs(pairing(sub(f.gradient(y), f.gradient(x)), d));
}

double check_taylor(const FunctionOracle& f, const NormedSpace& s,
                    const Vec& x, const Vec& y, double L) {
    require_gradient(f);
    const Vec d = sub(y, x);
    const double nd = s.norm(d);
    return 0.5 * L * nd * nd - std::abs(f.value(y) - f.value(x) - pairing(f.gradient(x), d));
}

double check_strong_smoothness(const FunctionOracle& f, const NormedSpace& s,
                               const Vec& x, const Vec& y, double lambda, double L) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("strong_smoothness: lambda must be in (0,1)");
    const Vec z = combine(lambda, x, 1.0 - lambda, y);
    const double nd = s.norm(sub(y, x));
    // lambda*(1-lambda) computed first so the margin is exactly
    // symmetric under (x, lambda) <-> (y, 1-lambda)
    const double w = lambda * (1.0 - lambda);
    return f.value(z) + 0.5 * L * w * (nd * nd) -
           (lambda * f.value(x) + (1.0 - lambda) * f.value(y));
}

double check_descent(const FunctionOracle& f, const NormedSpace& s,
                     const Vec& x, const Vec& y, double L) {
    require_gradient(f);
    const Vec d = sub(y, x);
    const double nd = s.norm(d);
    return f.value(x) + pairing(f.gradient(x), d) + 0.5 * L * nd * nd - f.value(y);
}

double check_comonotone_upper(const FunctionOracle& f, const NormedSpace& s,
                              const Vec& x, const Vec& y, double L) {
    require_gradient(f);
    const Vec d = sub(y, x);
    const double nd = s.norm(d);
    return L * nd * nd - pairing(sub(f.gradient(y), f.gradient(x)), d);
}

double check_cocoercivity(const FunctionOracle& f, const NormedSpace& s,
                          const Vec& x, const Vec& y, double L) {
    require_gradient(f);
    require_positive_L(ConditionId::cocoercivity, L);
    const Vec d = sub(y, x);
    const Covector dg = sub(f.gradient(y), f.gradient(x));
    const double dn = s.dual_norm(dg);
    return pairing(dg, d) - dn * dn / L;
}

double check_bregman_lower(const FunctionOracle& f, const NormedSpace& s,
                           const Vec& x, const Vec& y, double L) {
    require_gradient(f);
    require_positive_L(ConditionId::bregman_lower, L);
    const Vec d = sub(y, x);
    const double dn = s.dual_norm(sub(f.gradient(y), f.gradient(x)));
    return f.value(y) - f.value(x) - pairing(f.gradient(x), d) - dn * dn / (2.0 * L);
}

double check_nonexpansive_transform(const FunctionOracle& f, const NormedSpace& s,
                                    const Vec& x, const Vec& y, double L) {
    require_gradient(f);
    require_positive_L(ConditionId::nonexpansive_transform, L);
    if (!s.is_hilbert())
        throw InapplicableCondition(
            "nonexpansive_transform requires a Hilbert-kind space (Riesz map)");
    const Covector dg = sub(f.gradient(y), f.gradient(x));
    const Covector dr = sub(s.riesz(y), s.riesz(x));
    Vec t(dg.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = (2.0 / L) * dg.c[i] - dr.c[i];
    return s.norm(sub(y, x)) - s.dual_norm(Covector{std::move(t)});
}

double check_convexity_of_auxiliary(const FunctionOracle& f, const NormedSpace& s,
                                    const Vec& x, const Vec& y, double lambda, double L) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("aux_convexity: lambda must be in (0,1)");
    auto h = [&](const Vec& v) {
        const double nv = s.norm(v);
        return 0.5 * L * nv * nv - f.value(v);
    };
    const Vec z = combine(lambda, x, 1.0 - lambda, y);
    return lambda * h(x) + (1.0 - lambda) * h(y) - h(z);
}

double condition_margin(const FunctionOracle& f, const NormedSpace& s, ConditionId c,
                        const Vec& x, const Vec& y, double lambda, double L) {
    switch (c) {
    case ConditionId::lip_gradient: return check_lip_gradient(f, s, x, y, L);
    case ConditionId::one_sided_lip: return check_one_sided(f, s, x, y, L);
    case ConditionId::taylor_remainder: return check_taylor(f, s, x, y, L);
    case ConditionId::strong_smoothness: return check_strong_smoothness(f, s, x, y, lambda, L);
    case ConditionId::descent_lemma: return check_descent(f, s, x, y, L);
    case ConditionId::comonotone_upper: return check_comonotone_upper(f, s, x, y, L);
    case ConditionId::cocoercivity: return check_cocoercivity(f, s, x, y, L);
    case ConditionId::bregman_lower: return check_bregman_lower(f, s, x, y, L);
    case ConditionId::nonexpansive_transform:
        return check_nonexpansive_transform(f, s, x, y, L);
    case ConditionId::aux_convexity:
        return check_convexity_of_auxiliary(f, s, x, y, lambda, L);
    }
    throw std::invalid_argument("bad condition id");
}

std::vector<double> lambda_grid(std::uint64_t seed) {
    std::vector<double> g = {0.1, 0.25, 0.5, 0.75, 0.9};
    CounterRng rng(seed, 0x1a3bda);
    for (int i = 0; i < 8; ++i)
        g.push_back(rng.uniform(0.01, 0.99));
    return g;
}

ConditionVerdict run_condition(const FunctionOracle& f, const NormedSpace& s,
                               const ConvexDomain& domain, ConditionId condition,
                               double L, int budget, std::uint64_t seed, Exec exec) {
    if (budget < 1)
        throw std::invalid_argument("run_condition: budget must be >= 1");
    if (needs_gradient(condition))
        require_gradient(f);
    if (needs_positive_L(condition))
        require_positive_L(condition, L);
    if (needs_hilbert(condition) && !s.is_hilbert())
        throw InapplicableCondition(
            "nonexpansive_transform requires a Hilbert-kind space (Riesz map)");

    const auto pairs = sample_pairs(domain, 0.0, budget, seed);
    const std::vector<double> lambdas =
        needs_lambda(condition) ? lambda_grid(seed) : std::vector<double>{0.5};
    const std::size_t per_pair = lambdas.size();
    const std::size_t total = pairs.size() * per_pair;

    std::vector<double> margins(total);
    auto eval = [&](std::size_t t) {
        const auto& pr = pairs[t / per_pair];
        margins[t] = condition_margin(f, s, condition, pr.first, pr.second,
                                      lambdas[t % per_pair], L);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long t = 0; t < static_cast<long long>(total); ++t)
            eval(static_cast<std::size_t>(t));
    } else {
        for (std::size_t t = 0; t < total; ++t)
            eval(t);
    }

    // exact minimum, ties broken by lowest sample index
    std::size_t worst = 0;
    for (std::size_t t = 1; t < total; ++t)
        if (margins[t] < margins[worst])
            worst = t;

    ConditionVerdict v;
    v.condition = condition;
    v.L = L;
    v.worst_margin = margins[worst];
    v.holds = v.worst_margin >= -kMarginTolerance;
    v.witness_x = pairs[worst / per_pair].first;
    v.witness_y = pairs[worst / per_pair].second;
    if (needs_lambda(condition))
        v.witness_lambda = lambdas[worst % per_pair];
    return v;
}

} // namespace bh
