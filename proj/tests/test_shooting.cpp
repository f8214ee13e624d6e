#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "liouk/errors.hpp"
#include "liouk/shooting.hpp"

using namespace liouk;

TEST_CASE("closed form equals the real mode on the positive axis") {
    for (int N : {0, 1, 3}) {
        ProblemParams p{N, {0.0, 0.0}};
        for (int k : {0, 1, 4}) {
            for (double r : {0.3, 1.0, 2.7}) {
                double direct = phi_mode_complex(p, k, cplx{r, 0.0}).real();
                CHECK(closed_form_mode(p, k, r) == doctest::Approx(direct).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("the zero mode vanishes exactly at radius one") {
    for (int N : {0, 1, 2, 3}) {
        ProblemParams p{N, {0.0, 0.0}};
        CHECK(std::abs(closed_form_mode(p, 0, 1.0)) < 1e-15);
        CHECK(closed_form_mode(p, 0, 0.5) > 0.0);
        CHECK(closed_form_mode(p, 0, 2.0) < 0.0);
    }
}

TEST_CASE("radial potential peaks at the stated height") {
    ProblemParams p{0, {0.0, 0.0}};
    CHECK(radial_potential(p, 0.0) == doctest::Approx(8.0).epsilon(1e-14));
    ProblemParams p2{2, {0.0, 0.0}};
    // 8 (N+1)^2 r^{2N} / (1 + r^{2(N+1)})^2 at r = 1 is 2 (N+1)^2.
    CHECK(radial_potential(p2, 1.0) == doctest::Approx(18.0).epsilon(1e-14));
}

TEST_CASE("mode classification separates bounded and growing indices") {
    ProblemParams p{1, {0.0, 0.0}};
    GrowthClassification g0 = shoot_mode(RadialMode{0, p}, 1e-6, 50.0, 1e-12);
    CHECK(g0.verdict == Verdict::Bounded);
    GrowthClassification g2 = shoot_mode(RadialMode{2, p}, 1e-6, 50.0, 1e-12);
    CHECK(g2.verdict == Verdict::Bounded);

    GrowthClassification g1 = shoot_mode(RadialMode{1, p}, 1e-6, 100.0, 1e-10);
    CHECK(g1.verdict == Verdict::Grows);
    CHECK(g1.fitted_exponent == doctest::Approx(1.0).epsilon(0.05));
    GrowthClassification g3 = shoot_mode(RadialMode{3, p}, 1e-6, 100.0, 1e-10);
    CHECK(g3.verdict == Verdict::Grows);
    CHECK(g3.fitted_exponent == doctest::Approx(3.0).epsilon(0.02));
}

TEST_CASE("classification is stable under tolerance halving") {
    ProblemParams p{1, {0.0, 0.0}};
    GrowthClassification a = shoot_mode(RadialMode{3, p}, 1e-6, 100.0, 1e-10);
    GrowthClassification b = shoot_mode(RadialMode{3, p}, 1e-6, 100.0, 5e-11);
    CHECK(a.fitted_exponent == doctest::Approx(b.fitted_exponent).epsilon(1e-4));
}

TEST_CASE("bounded set contains exactly the flat and the principal mode") {
    ProblemParams p0{0, {0.0, 0.0}};
    std::set<int> want0{0, 1};
    CHECK(bounded_mode_set(p0, 10) == want0);
    ProblemParams p2{2, {0.0, 0.0}};
    std::set<int> want2{0, 3};
    CHECK(bounded_mode_set(p2, 6) == want2);
}

TEST_CASE("shooting tracks the closed form over the window") {
    ProblemParams p{0, {0.0, 0.0}};
    CHECK(shooting_vs_closed_form(RadialMode{1, p}, 50.0) < 1e-6);
    ProblemParams p2{2, {0.0, 0.0}};
    CHECK(shooting_vs_closed_form(RadialMode{1, p2}, 50.0) < 1e-6);
}

TEST_CASE("argument validation") {
    ProblemParams p{1, {0.0, 0.0}};
    CHECK_THROWS_AS(shoot_mode(RadialMode{1, p}, 1e-6, 40.0, 1e-10), UsageError);
    CHECK_THROWS_AS(shoot_mode(RadialMode{1, p}, 1e-6, 100.0, 0.0), UsageError);
    CHECK_THROWS_AS(shoot_mode(RadialMode{1, p}, 1e-6, 100.0, 1e-5), UsageError);
    CHECK_THROWS_AS(shoot_mode(RadialMode{1, p}, 0.5, 100.0, 1e-10), UsageError);
    CHECK_THROWS_AS(bounded_mode_set(p, 2), UsageError);

    ProblemParams off{1, {0.3, 0.0}};
    RadialMode bad{1, off};
    CHECK_THROWS_AS(bad.validate(), UsageError);
    CHECK_THROWS_AS(shoot_mode(bad, 1e-6, 100.0, 1e-10), UsageError);
}

TEST_CASE("negative-control growth exponents are not near integers they should avoid") {
    // k = N+1 decays; every other k grows like r^k. Check a non-adjacent one.
    ProblemParams p{0, {0.0, 0.0}};
    GrowthClassification g = shoot_mode(RadialMode{5, p}, 1e-6, 100.0, 1e-10);
    CHECK(g.verdict == Verdict::Grows);
    CHECK(g.fitted_exponent == doctest::Approx(5.0).epsilon(0.01));
    CHECK(g.terminal_value > 1.0);
}
