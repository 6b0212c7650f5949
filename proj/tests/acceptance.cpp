// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL
// line; the process exits nonzero if any criterion fails.
//
// Usage: acceptance <path-to-bhverify>   (the CLI path is needed for
// the byte-determinism criterion, which runs the binary twice).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bh/estimation.hpp"
#include "bh/gallery.hpp"
#include "bh/report.hpp"
#include "helpers.hpp"

using namespace bh;
using namespace bh::testing;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  %s  (%s)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!ok)
        ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion 1: the saddle breaks the Lipschitz lemma on l-infinity ---
void criterion_lemma_failure() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = run_scenario("banach_lemma_failure", 10000, 42);
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << "scenario " << (rep.all_passed ? "passed" : "failed") << ", " << dt << "s";
    report("counterexample: one-sided Lipschitz without Lipschitz (l-inf)",
           rep.all_passed && dt < 5.0, d.str());
}

// --- criterion 2: aux-convexity fails for every L on l-infinity ---
void criterion_theorem_failure() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = run_scenario("banach_theorem_failure", 10000, 42);
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << "scenario " << (rep.all_passed ? "passed" : "failed") << ", " << dt << "s";
    report("counterexample: smooth convex f with L/2|.|^2 - f never convex (l-inf)",
           rep.all_passed && dt < 5.0, d.str());
}

// --- criterion 3: random PSD quadratics against an independent eigen oracle ---
void criterion_spectral_agreement() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream d;
    const std::vector<ConditionId> six = {
        ConditionId::lip_gradient,  ConditionId::one_sided_lip,
        ConditionId::taylor_remainder, ConditionId::strong_smoothness,
        ConditionId::descent_lemma, ConditionId::comonotone_upper};
    for (int i = 0; i < 20 && ok; ++i) {
        const int dim = 2 + i % 3;
        const Matrix A = random_psd(9000 + i, dim);
        const double lmax = power_lambda_max(A);
        const auto f = make_quadratic(A);
        const auto s = NormedSpace::euclidean(dim);
        const auto dom = ConvexDomain::whole_space(s);
        for (ConditionId c : six) {
            const auto est = estimate_constant(f, s, dom, c, 10000, 42);
            if (std::abs(est.L_hat - lmax) > 5e-2 * lmax) {
                ok = false;
                d << "matrix " << i << " " << to_string(c) << ": estimate " << est.L_hat
                  << " vs lambda_max " << lmax << "; ";
                break;
            }
        }
        const double L = lmax * (1.0 + 1e-6);
        for (ConditionId c : six) {
            const auto v = run_condition(f, s, dom, c, L, 10000, 42);
            if (!v.holds || v.worst_margin < -1e-9) {
                ok = false;
                d << "matrix " << i << " " << to_string(c) << " margin "
                  << v.worst_margin << "; ";
                break;
            }
        }
    }
    const double dt = seconds_since(t0);
    d << dt << "s";
    report("spectral agreement: 20 seeded PSD quadratics, six estimates within 5%",
           ok && dt < 60.0, d.str());
}

// --- criterion 4: cocoercivity and the nonexpansive transform never disagree ---
void criterion_transform_equivalence() {
    bool ok = true;
    int disagreements = 0;
    int n_cases = 0;
    // 100 (oracle, L, pair-set) triples with L above, below and near
    // the critical constant
    const double mult[] = {0.3, 0.7, 1.05, 1.6, 2.5};
    for (int i = 0; i < 100; ++i) {
        const int dim = 2 + i % 3;
        const Matrix A = random_psd(12000 + i, dim);
        const auto f = make_quadratic(A);
        const auto s = NormedSpace::euclidean(dim);
        const auto dom = ConvexDomain::whole_space(s);
        const double L = power_lambda_max(A) * mult[i % 5];
        if (!(L > 1e-12))
            continue;
        const auto coco =
            run_condition(f, s, dom, ConditionId::cocoercivity, L, 200, 100 + i);
        const auto nexp = run_condition(f, s, dom, ConditionId::nonexpansive_transform,
                                        L, 200, 100 + i);
        ++n_cases;
        if (coco.holds != nexp.holds) {
            ++disagreements;
            ok = false;
        }
    }
    std::ostringstream d;
    d << n_cases << " cases, " << disagreements << " disagreements";
    report("cocoercivity <=> nonexpansive transform verdict equality", ok && n_cases >= 95,
           d.str());
}

// --- criterion 5: Taylor-to-Lipschitz factor stays in [1, 2] ---
void criterion_taylor_band() {
    bool ok = true;
    std::ostringstream d;
    std::vector<FunctionOracle> convex_oracles;
    for (int dim = 2; dim <= 4; ++dim) {
        convex_oracles.push_back(make_half_sq_norm(dim));
        convex_oracles.push_back(make_softplus_norm(dim));
        convex_oracles.push_back(make_log_sum_exp(dim));
        convex_oracles.push_back(make_quadratic(random_psd(7000 + dim, dim)));
        Vec c(dim, 1.0);
        convex_oracles.push_back(make_linear(c));
    }
    for (const auto& f : convex_oracles) {
        const std::vector<NormedSpace> spaces = {NormedSpace::linf(f.dim),
                                                 NormedSpace::l1(f.dim),
                                                 NormedSpace::lp(f.dim, 3.0)};
        for (const auto& s : spaces) {
            const auto dom = ConvexDomain::whole_space(s);
            const auto r = banach_taylor_to_lip_bound(f, s, dom, 10000, 42);
            if (!(r.ratio >= 1.0 - 1e-9 && r.ratio <= 2.0 + 1e-9)) {
                ok = false;
                d << f.name << " dim " << f.dim << " on " << to_string(s.kind())
                  << ": ratio " << r.ratio << "; ";
            }
        }
    }
    const auto li = NormedSpace::linf(2);
    const auto saddle_ratio = banach_taylor_to_lip_bound(
        make_saddle_half_diff(), li, ConvexDomain::whole_space(li), 10000, 42);
    if (!(saddle_ratio.ratio >= 1.9 && saddle_ratio.ratio <= 2.0)) {
        ok = false;
        d << "saddle ratio " << saddle_ratio.ratio << "; ";
    }
    d << "45 convex cases + saddle";
    report("Taylor-to-Lipschitz factor within [1, 2], saddle realizes ~2", ok, d.str());
}

// --- criterion 6: analytic inner shrink vs Monte-Carlo perturbations ---
void criterion_shrink_agreement() {
    bool ok = true;
    std::ostringstream d;
    const std::vector<NormedSpace> spaces = {
        NormedSpace::euclidean(2), NormedSpace::linf(2), NormedSpace::l1(2),
        NormedSpace::lp(2, 3.0)};
    int fp = 0, fn = 0;
    for (int kindcase = 0; kindcase < 3 && ok; ++kindcase) {
        for (int i = 0; i < 100; ++i) {
            const auto& sp = spaces[i % spaces.size()];
            CounterRng rng(50000 + 1000 * kindcase + i, 0x6d);
            ConvexDomain dom = ConvexDomain::whole_space(sp);
            std::vector<Vec> extreme; // per-kind worst-case directions
            Vec x(2);
            if (kindcase == 0) {
                const Vec c = rand_vec(rng, 2, -1.0, 1.0);
                const double radius = rng.uniform(1.0, 3.0);
                dom = ConvexDomain::open_ball(sp, c, radius);
                do {
                    x = add(c, rand_vec(rng, 2, -radius, radius));
                } while (!dom.contains(x));
                Vec out = sub(x, c);
                if (sp.norm(out) > 1e-9)
                    extreme.push_back(out);
            } else if (kindcase == 1) {
                const Vec lo = rand_vec(rng, 2, -3.0, -0.5);
                const Vec hi = rand_vec(rng, 2, 0.5, 3.0);
                dom = ConvexDomain::open_box(sp, lo, hi);
                for (int k = 0; k < 2; ++k)
                    x[k] = rng.uniform(lo[k], hi[k]);
                for (int k = 0; k < 2; ++k) {
                    Vec e(2, 0.0);
                    e[k] = 1.0;
                    extreme.push_back(e);
                    e[k] = -1.0;
                    extreme.push_back(e);
                }
            } else {
                std::vector<Halfspace> faces;
                const int nf = 2 + static_cast<int>(rng.next_u64() % 3);
                for (int k = 0; k < nf; ++k)
                    faces.push_back(Halfspace{Covector{rand_vec(rng, 2, -1.0, 1.0)},
                                              rng.uniform(0.5, 3.0)});
                dom = ConvexDomain::halfspace_intersection(sp, faces);
                bool found = false;
                for (int a = 0; a < 500 && !found; ++a) {
                    x = rand_vec(rng, 2, -4.0, 4.0);
                    found = dom.contains(x);
                }
                if (!found)
                    continue;
                for (const auto& fc : faces)
                    if (sp.dual_norm(fc.normal) > 1e-9)
                        extreme.push_back(sp.norming_vector(fc.normal, 1.0));
            }
            const double rho = rng.uniform(0.05, 1.5);
            const bool analytic = dom.contains_shrunk(x, rho);

            bool violated = false;
            auto probe = [&](Vec h) {
                const double nh = sp.norm(h);
                if (nh <= 0.0)
                    return;
                for (auto& cmp : h)
                    cmp *= rho / nh;
                if (!dom.contains(add(x, h)))
                    violated = true;
            };
            for (const auto& e : extreme)
                probe(e);
            for (int k = 0; k < 200 && !violated; ++k)
                probe(rand_vec(rng, 2, -1.0, 1.0));

            if (analytic && violated) {
                ++fp; // inner-shrink membership must be safe
                ok = false;
                d << "false positive kind " << kindcase << " case " << i << "; ";
            }
            if (!analytic && !violated) {
                // acceptable only within rounding distance of the boundary
                if (!dom.contains_shrunk(x, rho * (1.0 - 1e-12))) {
                    ++fn;
                    ok = false;
                    d << "false negative kind " << kindcase << " case " << i << "; ";
                }
            }
        }
    }
    d << "balls/boxes/halfspaces x 100 cases, 200 samples each; fp=" << fp
      << " fn=" << fn;
    report("inner shrink O_rho agrees with Monte-Carlo perturbation checks", ok, d.str());
}

// --- criterion 7: parallelogram law separates Hilbert from Banach kinds ---
void criterion_parallelogram() {
    bool ok = true;
    std::ostringstream d;
    const auto hilbert = {NormedSpace::euclidean(3), NormedSpace::weighted({1.0, 2.0, 0.5})};
    for (const auto& s : hilbert) {
        CounterRng rng(60000, 0x71);
        for (int i = 0; i < 1000; ++i) {
            const Vec a = rand_vec(rng, 3), b = rand_vec(rng, 3);
            if (std::abs(s.parallelogram_defect(a, b)) > 1e-12) {
                ok = false;
                d << "hilbert defect " << s.parallelogram_defect(a, b) << "; ";
                break;
            }
        }
    }
    for (const auto& s : {NormedSpace::linf(3), NormedSpace::l1(3), NormedSpace::lp(3, 3.0)}) {
        CounterRng rng(60001, 0x73);
        double worst = 0.0;
        int needed = -1;
        for (int i = 0; i < 1000; ++i) {
            const Vec a = rand_vec(rng, 3), b = rand_vec(rng, 3);
            worst = std::max(worst, std::abs(s.parallelogram_defect(a, b)));
            if (worst > 1e-6 && needed < 0)
                needed = i + 1;
        }
        if (needed < 0) {
            ok = false;
            d << to_string(s.kind()) << " no witness in 1000 samples; ";
        }
    }
    d << "1000 pairs per kind";
    report("parallelogram defect: zero on Hilbert kinds, witnessed otherwise", ok,
           d.str());
}

// --- criterion 8: range-conditional implications on a reference quadratic ---
void criterion_range_conditional() {
    bool ok = true;
    std::ostringstream d;
    const auto e2 = NormedSpace::euclidean(2);
    const auto dom = ConvexDomain::whole_space(e2);
    const auto f = make_quadratic({{1.0, 0.0}, {0.0, 3.0}});
    const auto pairs = sample_pairs(dom, 0.0, 1000, 42);
    int hyp_fail = 0;
    double worst = 0.0;
    for (const auto& [x, y] : pairs) {
        for (RangeMode mode : {RangeMode::coco_to_bregman, RangeMode::descent_to_coco}) {
            const auto r = check_range_conditional(f, e2, dom, 1.0, x, y, 16, mode, 3.0);
            if (!r.hypothesis_range_ok) {
                ++hyp_fail;
                ok = false;
                continue;
            }
            worst = std::min(worst, r.margin);
            if (r.margin < -1e-9)
                ok = false;
        }
    }
    d << "1000 pairs, n=16, hypothesis failures " << hyp_fail << ", worst margin "
      << worst;
    report("range-conditional implications certified for quadratic diag(1,3) at L=3", ok,
           d.str());
}

// --- criterion 9: the CLI implication-matrix report is byte-deterministic ---
void criterion_cli_determinism(const std::string& cli) {
    const std::string out1 = "acceptance_matrix_run1.json";
    const std::string out2 = "acceptance_matrix_run2.json";
    const std::string args =
        " matrix --oracle '{\"name\":\"quadratic\",\"params\":{\"A\":[[1,0],[0,3]]}}'"
        " --space euclidean:2 --domain all --budget 2000 --seed 42 --out ";
    const int rc1 = std::system((cli + args + out1).c_str());
    const int rc2 = std::system((cli + args + out2).c_str());
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(out1);
    const std::string b = slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::ostringstream d;
    d << "exit codes " << rc1 << "/" << rc2 << ", " << a.size() << " bytes";
    report("two identical CLI matrix runs produce byte-identical reports",
           rc1 == rc2 && !a.empty() && a == b, d.str());
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "./bhverify";
    criterion_lemma_failure();
    criterion_theorem_failure();
    criterion_spectral_agreement();
    criterion_transform_equivalence();
    criterion_taylor_band();
    criterion_shrink_agreement();
    criterion_parallelogram();
    criterion_range_conditional();
    criterion_cli_determinism(cli);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
