#include <doctest.h>

#include <cmath>

#include "qkdsim/rng.hpp"
#include "qkdsim/stats.hpp"

using namespace qkdsim;

TEST_CASE("DistTable bookkeeping") {
    DistTable t;
    t.add("a");
    t.add("a");
    t.add("b", 2.0);
    CHECK(t.total() == doctest::Approx(4.0));
    DistTable n = t.normalized();
    CHECK(n.entries.at("a") == doctest::Approx(0.5));
    CHECK(n.entries.at("b") == doctest::Approx(0.5));
}

TEST_CASE("estimate_tv on known distributions") {
    DistTable a, b;
    a.add("0", 1.0);
    b.add("0", 1.0);
    CHECK(estimate_tv(a, b) == doctest::Approx(0.0));

    // Point masses on distinct outcomes (shared label set).
    DistTable c, d;
    c.add("0", 1.0);
    c.add("1", 0.0);
    d.add("0", 0.0);
    d.add("1", 1.0);
    CHECK(estimate_tv(c, d) == doctest::Approx(1.0));

    // Uniform over 4 outcomes vs a point mass: (1/2)(3/4 + 3/4) = 3/4.
    DistTable u, pm;
    for (int i = 0; i < 4; ++i) {
        u.add(std::to_string(i), 1.0);
        pm.add(std::to_string(i), i == 0 ? 1.0 : 0.0);
    }
    CHECK(estimate_tv(u, pm) == doctest::Approx(0.75));

    DistTable e, f;
    e.add("0", 1.0);
    f.add("1", 1.0);
    CHECK_THROWS_AS(estimate_tv(e, f), LabelMismatch);
}

TEST_CASE("estimate_tv is a metric on randomized triples") {
    for (int t = 0; t < 1000; ++t) {
        RngStream rng(700, uint64_t(t));
        DistTable a, b, c;
        for (int i = 0; i < 5; ++i) {
            std::string l = std::to_string(i);
            a.add(l, double(1 + rng.below(100)));
            b.add(l, double(1 + rng.below(100)));
            c.add(l, double(1 + rng.below(100)));
        }
        double ab = estimate_tv(a, b), ba = estimate_tv(b, a);
        double bc = estimate_tv(b, c), ac = estimate_tv(a, c);
        REQUIRE(ab == doctest::Approx(ba));
        REQUIRE(ab >= 0.0);
        REQUIRE(ab <= 1.0);
        REQUIRE(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("gamma_q basic values") {
    // Q(1, x) = exp(-x); Q(1/2, x) = erfc(sqrt(x)).
    CHECK(gamma_q(1.0, 0.0) == doctest::Approx(1.0));
    CHECK(gamma_q(1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
    CHECK(gamma_q(1.0, 5.0) == doctest::Approx(std::exp(-5.0)).epsilon(1e-10));
    CHECK(gamma_q(0.5, 2.0) == doctest::Approx(std::erfc(std::sqrt(2.0))).epsilon(1e-9));
    CHECK(gamma_q(3.5, 3.0) == doctest::Approx(0.5397493504).epsilon(1e-8));
}

TEST_CASE("chi_square_uniform trivial cases") {
    // Perfectly uniform counts give the maximal p-value.
    DistTable even;
    for (int i = 0; i < 4; ++i) even.add(std::to_string(i), 1000.0);
    CHECK(chi_square_uniform(even) == doctest::Approx(1.0));

    // Grossly skewed counts give a vanishing p-value.
    DistTable skew;
    skew.add("0", 3000.0);
    skew.add("1", 10.0);
    skew.add("2", 10.0);
    skew.add("3", 10.0);
    CHECK(chi_square_uniform(skew) < 1e-9);

    DistTable one;
    one.add("0", 100.0);
    CHECK_THROWS_AS(chi_square_uniform(one), InsufficientCounts);

    DistTable tiny;
    tiny.add("0", 2.0);
    tiny.add("1", 3.0);
    CHECK_THROWS_AS(chi_square_uniform(tiny), InsufficientCounts); // expected < 5
}

TEST_CASE("chi-square p-values are calibrated under the null") {
    // Sampling truly uniform data, p < 0.01 should occur in ~1% of repetitions.
    const int reps = 10000, samples = 800, cells = 8;
    int small_p = 0;
    for (int r = 0; r < reps; ++r) {
        RngStream rng(900, uint64_t(r));
        DistTable t;
        for (int s = 0; s < samples; ++s)
            t.add(std::to_string(rng.below(cells)));
        if (chi_square_uniform(t) < 0.01) ++small_p;
    }
    double rate = double(small_p) / reps;
    // 3-sigma band around 0.01 with reps = 1e4 (sigma ~ 0.001), plus slack
    // for the discreteness of the statistic.
    CHECK(rate > 0.004);
    CHECK(rate < 0.017);
}
