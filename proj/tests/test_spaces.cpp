#include <doctest.h>

#include <cmath>

#include "bh/spaces.hpp"
#include "helpers.hpp"

using namespace bh;
using namespace bh::testing;

namespace {

const std::vector<NormedSpace> kAllSpaces3 = {
    NormedSpace::euclidean(3),     NormedSpace::weighted({1.0, 2.0, 0.5}),
    NormedSpace::lp(3, 3.0),       NormedSpace::linf(3),
    NormedSpace::l1(3),
};

} // namespace

TEST_CASE("norm values on reference vectors") {
    const Vec v = {3.0, -4.0};
    CHECK(NormedSpace::euclidean(2).norm(v) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(NormedSpace::linf(2).norm(v) == 4.0);
    CHECK(NormedSpace::l1(2).norm(v) == 7.0);
    CHECK(NormedSpace::lp(2, 3.0).norm(v) ==
          doctest::Approx(std::pow(27.0 + 64.0, 1.0 / 3.0)).epsilon(1e-14));
    CHECK(NormedSpace::weighted({2.0, 0.5}).norm(v) ==
          doctest::Approx(std::sqrt(2.0 * 9.0 + 0.5 * 16.0)).epsilon(1e-14));
}

TEST_CASE("dual norms are the conjugate-exponent norms") {
    const Covector phi{{3.0, -4.0}};
    CHECK(NormedSpace::euclidean(2).dual_norm(phi) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(NormedSpace::linf(2).dual_norm(phi) == 7.0); // dual of linf is l1
    CHECK(NormedSpace::l1(2).dual_norm(phi) == 4.0);   // dual of l1 is linf
    // dual of l3 is l(3/2)
    CHECK(NormedSpace::lp(2, 3.0).dual_norm(phi) ==
          doctest::Approx(std::pow(std::pow(3.0, 1.5) + 8.0, 2.0 / 3.0)).epsilon(1e-13));
    // weighted dual: sqrt(sum phi_i^2 / w_i)
    CHECK(NormedSpace::weighted({2.0, 0.5}).dual_norm(phi) ==
          doctest::Approx(std::sqrt(9.0 / 2.0 + 16.0 / 0.5)).epsilon(1e-14));
}

TEST_CASE("norm axioms on random vectors") {
    for (const auto& s : kAllSpaces3) {
        CounterRng rng(11, 0x5);
        for (int i = 0; i < 200; ++i) {
            const Vec a = rand_vec(rng, 3), b = rand_vec(rng, 3);
            const double t = rng.uniform(-3.0, 3.0);
            CHECK(s.norm(a) >= 0.0);
            CHECK(s.norm(scale(t, a)) ==
                  doctest::Approx(std::abs(t) * s.norm(a)).epsilon(1e-12));
            CHECK(s.norm(add(a, b)) <= s.norm(a) + s.norm(b) + 1e-12);
        }
        CHECK(s.norm(Vec(3, 0.0)) == 0.0);
    }
}

TEST_CASE("Hoelder inequality and its sharpness via norming vectors") {
    for (const auto& s : kAllSpaces3) {
        CounterRng rng(23, 0x6);
        for (int i = 0; i < 200; ++i) {
            const Covector phi{rand_vec(rng, 3)};
            const Vec v = rand_vec(rng, 3);
            CHECK(std::abs(pairing(phi, v)) <=
                  s.dual_norm(phi) * s.norm(v) * (1.0 + 1e-12) + 1e-15);

            const double t = rng.uniform(0.1, 4.0);
            const Vec z = s.norming_vector(phi, t);
            CHECK(s.norm(z) == doctest::Approx(t).epsilon(1e-12));
            CHECK(pairing(phi, z) ==
                  doctest::Approx(s.dual_norm(phi) * t).epsilon(1e-12));
        }
    }
}

TEST_CASE("norming vector closed forms") {
    SUBCASE("euclidean rescaling") {
        const auto s = NormedSpace::euclidean(2);
        const Vec z = s.norming_vector(Covector{{3.0, 4.0}}, 1.0);
        CHECK(z[0] == doctest::Approx(0.6).epsilon(1e-14));
        CHECK(z[1] == doctest::Approx(0.8).epsilon(1e-14));
    }
    SUBCASE("linf sign vector") {
        const auto s = NormedSpace::linf(2);
        const Vec z = s.norming_vector(Covector{{1.0, -1.0}}, 1.0);
        CHECK(z[0] == 1.0);
        CHECK(z[1] == -1.0);
        CHECK(pairing(Covector{{1.0, -1.0}}, z) == 2.0);
    }
    SUBCASE("l1 coordinate extremal") {
        const auto s = NormedSpace::l1(2);
        const Vec z = s.norming_vector(Covector{{1.0, -3.0}}, 2.0);
        CHECK(z[0] == 0.0);
        CHECK(z[1] == -2.0);
        CHECK(pairing(Covector{{1.0, -3.0}}, z) == 6.0);
    }
    SUBCASE("zero functional is rejected") {
        const auto s = NormedSpace::lp(2, 3.0);
        CHECK_THROWS_AS(s.norming_vector(Covector{{0.0, 0.0}}, 1.5), std::invalid_argument);
    }
}

TEST_CASE("Riesz map on inner-product kinds only") {
    const Vec v = {1.0, -2.0, 0.5};
    const auto e = NormedSpace::euclidean(3);
    const auto w = NormedSpace::weighted({1.0, 2.0, 0.5});
    CHECK(e.riesz(v).c == v);
    const Covector rw = w.riesz(v);
    CHECK(rw[0] == 1.0);
    CHECK(rw[1] == -4.0);
    CHECK(rw[2] == 0.25);

    // <R v, v> = |v|^2 and |R v|_* = |v|
    for (const auto& s : {e, w}) {
        CounterRng rng(31, 0x7);
        for (int i = 0; i < 100; ++i) {
            const Vec u = rand_vec(rng, 3);
            const Covector r = s.riesz(u);
            CHECK(pairing(r, u) == doctest::Approx(s.norm(u) * s.norm(u)).epsilon(1e-12));
            CHECK(s.dual_norm(r) == doctest::Approx(s.norm(u)).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(NormedSpace::linf(3).riesz(v), RieszUndefinedError);
    CHECK_THROWS_AS(NormedSpace::l1(3).riesz(v), RieszUndefinedError);
    CHECK_THROWS_AS(NormedSpace::lp(3, 3.0).riesz(v), RieszUndefinedError);
}

TEST_CASE("parallelogram defect separates inner-product norms") {
    SUBCASE("reference value on linf") {
        const auto s = NormedSpace::linf(2);
        CHECK(s.parallelogram_defect({1.0, 0.0}, {0.0, 1.0}) == -2.0);
    }
    SUBCASE("identically zero on Hilbert kinds") {
        for (const auto& s : {NormedSpace::euclidean(3), NormedSpace::weighted({1.0, 2.0, 0.5})}) {
            CounterRng rng(41, 0x8);
            for (int i = 0; i < 500; ++i) {
                const Vec a = rand_vec(rng, 3), b = rand_vec(rng, 3);
                CHECK(std::abs(s.parallelogram_defect(a, b)) <= 1e-12);
            }
        }
    }
    SUBCASE("nonzero witness on the Banach kinds") {
        for (const auto& s : {NormedSpace::linf(3), NormedSpace::l1(3), NormedSpace::lp(3, 3.0)}) {
            CounterRng rng(43, 0x9);
            double worst = 0.0;
            for (int i = 0; i < 500; ++i) {
                const Vec a = rand_vec(rng, 3), b = rand_vec(rng, 3);
                worst = std::max(worst, std::abs(s.parallelogram_defect(a, b)));
            }
            CHECK(worst > 1e-6);
        }
    }
}

TEST_CASE("factory validation") {
    CHECK_THROWS_AS(NormedSpace::euclidean(0), std::invalid_argument);
    CHECK_THROWS_AS(NormedSpace::weighted({1.0, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(NormedSpace::lp(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(NormedSpace::lp(2, 0.5), std::invalid_argument);
}
