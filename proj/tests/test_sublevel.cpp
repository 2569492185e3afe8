#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "vdc/sublevel.hpp"

using vdc::chebyshev;
using vdc::chebyshev_value;
using vdc::measure_sublevel;
using vdc::Polynomial;
using vdc::sublevel_bound;
using vdc::SublevelMeasurement;
using vdc::verify_sublevel;

TEST_CASE("sublevel measure of simple functions") {
    auto ident = [](double x) { return x; };
    const SublevelMeasurement m1 = measure_sublevel(ident, -1.0, 1.0, 0.5);
    CHECK(m1.measure == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(m1.intervals.size() == 1);
    CHECK(m1.intervals[0].first == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(m1.intervals[0].second == doctest::Approx(0.5).epsilon(1e-9));

    // |T_3| <= 1 everywhere on [-1,1], so the whole interval qualifies.
    const Polynomial t3 = chebyshev(3);
    const SublevelMeasurement m3 =
        measure_sublevel([&](double x) { return t3(x); }, -1.0, 1.0, 1.0);
    CHECK(m3.measure == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(m3.intervals.size() == 1);

    // x^2 - 1/2 under alpha = 1/4: two symmetric bands around +-1/sqrt(2).
    auto shifted = [](double x) { return x * x - 0.5; };
    const SublevelMeasurement m2 = measure_sublevel(shifted, -2.0, 2.0, 0.25);
    CHECK(m2.measure == doctest::Approx(0.7320508076).epsilon(1e-8));
    CHECK(m2.intervals.size() == 2);
}

TEST_CASE("sublevel measure: monotone in the threshold") {
    const Polynomial t4 = chebyshev(4);
    auto f = [&](double x) { return t4(x); };
    double prev = 0.0;
    for (double alpha : {0.1, 0.3, 0.5, 0.8, 1.0, 2.0}) {
        const double m = measure_sublevel(f, -1.0, 1.0, alpha).measure;
        CHECK(m >= prev - 1e-12);
        prev = m;
    }
    CHECK(prev == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sublevel measure: stable under grid refinement") {
    auto f = [](double x) { return std::sin(3.0 * x) + 0.2 * x; };
    const double coarse = measure_sublevel(f, -3.0, 3.0, 0.4, 2000).measure;
    const double fine = measure_sublevel(f, -3.0, 3.0, 0.4, 200000).measure;
    CHECK(std::abs(coarse - fine) < 10.0 * 6.0 / 2000.0);
    // With bisection refinement the error should in fact be far below a cell.
    CHECK(std::abs(coarse - fine) < 1e-6);
}

TEST_CASE("closed-form bound values") {
    // n = 1: (1! * 2^1 * alpha/lambda) = 2 alpha/lambda.
    CHECK(sublevel_bound(1, 1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(sublevel_bound(1, 0.5, 2.0) == doctest::Approx(0.5).epsilon(1e-13));
    // n = 2: (2! * 2^3 alpha/lambda)^(1/2) = 4 sqrt(alpha/lambda).
    CHECK(sublevel_bound(2, 1.0, 1.0) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(sublevel_bound(2, 0.25, 4.0) == doctest::Approx(1.0).epsilon(1e-13));
    // n = 3, alpha = 0.1, lambda = 6: (192 * 0.1 / 6)^(1/3).
    CHECK(sublevel_bound(3, 0.1, 6.0) == doctest::Approx(1.473612599).epsilon(1e-9));
    CHECK_THROWS_AS(sublevel_bound(0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sublevel_bound(2, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sublevel_bound(2, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("prefactor growth stays below 2n and approaches 4n/e") {
    const double target = 4.0 / std::exp(1.0);
    double prev_rel_gap = 1e9;
    for (int n = 1; n <= 1000; ++n) {
        const double cn = sublevel_bound(n, 1.0, 1.0);
        CHECK(cn <= 2.0 * n * (1.0 + 1e-12));
        if (n % 100 == 0 || n == 1000) {
            const double rel_gap = std::abs(cn - target * n) / (target * n);
            CHECK(rel_gap < prev_rel_gap + 1e-15);
            prev_rel_gap = rel_gap;
        }
    }
    const double c1000 = sublevel_bound(1000, 1.0, 1.0);
    CHECK(c1000 == doctest::Approx(1476.94256).epsilon(1e-6));
    // The absolute gap at n = 1000 is still sizable; only the relative gap is
    // small, which is why the growth claim is read relatively.
    CHECK(std::abs(c1000 - target * 1000.0) ==
          doctest::Approx(5.4248).epsilon(1e-3));
    CHECK(std::abs(c1000 - target * 1000.0) / (target * 1000.0) < 0.05);
}

TEST_CASE("cubic example: measured set against its guaranteed ceiling") {
    auto cube = [](double x) { return x * x * x; };
    const vdc::RealFn third = [](double) { return 6.0; };
    const vdc::BoundReport r =
        verify_sublevel(cube, 3, -1.0, 1.0, 0.1, 6.0, 100000, &third);
    CHECK(r.passed);
    CHECK(r.measured.has_value());
    CHECK(*r.measured == doctest::Approx(0.9283177667).epsilon(1e-7));
    CHECK(r.bound == doctest::Approx(1.473612599).epsilon(1e-9));
    CHECK(*r.margin > 0.5);
}

TEST_CASE("chebyshev equality cases meet the bound exactly") {
    for (int n = 2; n <= 6; ++n) {
        const Polynomial tn = chebyshev(n);
        const double lambda = tn.derivative(n).coeffs()[0];  // n! 2^(n-1)
        const vdc::RealFn nth = [lambda](double) { return lambda; };
        const vdc::BoundReport r = verify_sublevel(
            [&](double x) { return chebyshev_value(n, x); }, n, -2.0, 2.0, 1.0,
            lambda, 100000, &nth);
        CHECK(r.passed);
        CHECK(*r.measured == doctest::Approx(2.0).epsilon(1e-7));
        CHECK(r.bound == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(std::abs(*r.margin) < 1e-6);
    }
}

TEST_CASE("derivative floor is spot-checked before trusting lambda") {
    auto cube = [](double x) { return x * x * x; };
    const vdc::RealFn third = [](double) { return 6.0; };
    // Claimed lambda = 10 but the third derivative is 6 everywhere.
    CHECK_THROWS_AS(verify_sublevel(cube, 3, -1.0, 1.0, 0.1, 10.0, 1000, &third),
                    std::invalid_argument);
}

TEST_CASE("input validation") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(measure_sublevel(f, 1.0, -1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(measure_sublevel(f, -1.0, 1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(measure_sublevel(f, -1.0, 1.0, 0.5, 1), std::invalid_argument);
    auto bad = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(measure_sublevel(bad, -1.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("random polynomials never violate the guaranteed ceiling") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> lead(0.2, 3.0);
    std::uniform_real_distribution<double> alpha_draw(0.01, 2.0);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<double> c(static_cast<std::size_t>(n) + 1);
        for (double& v : c) v = coeff(rng);
        double an = lead(rng);
        if (rng() % 2 == 0) an = -an;
        c.back() = an;
        const Polynomial p(c);
        // Degree equals n, so the n-th derivative is the constant n! * a_n and
        // the true derivative floor is known exactly.
        const double lambda = std::abs(p.derivative(n).coeffs()[0]);
        const double alpha = alpha_draw(rng);
        const double measured =
            measure_sublevel([&](double x) { return p(x); }, -1.0, 1.0, alpha, 2000)
                .measure;
        const double ceiling = sublevel_bound(n, alpha, lambda);
        if (measured > ceiling + 1e-9) ++violations;
    }
    CHECK(violations == 0);
}
