#include <doctest.h>

#include <cmath>

#include "sconv/convexity.hpp"
#include "sconv/function_catalog.hpp"

using namespace sconv;
using namespace sconv::funcat;

TEST_CASE("power function derivatives") {
    const auto linear = make_power_function(1);
    for (double x : {0.0, 0.3, 1.7, 9.0}) CHECK(linear.f2(x) == 0.0);

    const auto square = make_power_function(2);
    for (double x : {0.0, 0.5, 4.0}) CHECK(square.f2(x) == 2.0);

    const auto root = make_power_function(0.5);
    CHECK(root.f2(4.0) == doctest::Approx(-1.0 / 32.0).epsilon(1e-14));
    CHECK(std::abs(root.f2(4.0)) == doctest::Approx(1.0 / 32.0).epsilon(1e-14));
    CHECK(root.domain_min == kFractionalPowerFloor);
    CHECK(root.value_domain_min == 0.0);
    CHECK(square.domain_min == 0.0);
    CHECK(square.symmetry_center == 0.0);
    CHECK_FALSE(root.symmetry_center.has_value());
}

TEST_CASE("derivative consistency across the catalog") {
    const Interval iv(0.5, 2.0);
    for (const auto& name : default_catalog_names()) {
        CAPTURE(name);
        const auto fs = lookup(name);
        CHECK(derivative_mismatch(fs.f, fs.f1, iv) <= 1e-6);
        CHECK(derivative_mismatch(fs.f1, fs.f2, iv) <= 1e-6);
    }
}

TEST_CASE("catalog names resolve and validate") {
    CHECK(lookup("pow:0.5").name == "pow:0.5");
    CHECK(lookup("exp").name == "exp");
    CHECK(lookup("neg:exp").f(0.0) == -1.0);
    CHECK(lookup("shift:1.5:pow:2").f(2.0) == doctest::Approx(5.5));
    const auto poly = lookup("poly:1,2,3");  // 1 + 2x + 3x^2
    CHECK(poly.f(2.0) == doctest::Approx(17.0));
    CHECK(poly.f1(2.0) == doctest::Approx(14.0));
    CHECK(poly.f2(2.0) == doctest::Approx(6.0));

    CHECK_THROWS_AS(lookup("gauss"), InvalidParameter);
    CHECK_THROWS_AS(lookup("pow:abc"), InvalidParameter);
    CHECK_THROWS_AS(lookup("poly:1,2,3,4,5,6"), InvalidParameter);
    CHECK_THROWS_AS(lookup("shift:pow:2"), InvalidParameter);
}

TEST_CASE("s-convexity certification") {
    const Interval unit(0, 1);

    SUBCASE("x^{1/2} is 1/2-convex") {
        const auto r = check_s_convexity(lookup("pow:0.5"), unit, 0.5, 256, 1);
        CHECK(r.pass);
        CHECK(r.max_violation <= r.tolerance());
    }
    SUBCASE("x^{1/2} is rejected at s = 0.6 with a witness") {
        const auto r = check_s_convexity(lookup("pow:0.5"), unit, 0.6, 256, 1);
        CHECK_FALSE(r.pass);
        REQUIRE(r.witness.has_value());
        // The witness reproduces the violation.
        const auto fs = lookup("pow:0.5");
        const double alpha = r.witness->alpha, beta = 1 - alpha;
        const double lhs = fs.f(alpha * r.witness->x + beta * r.witness->y);
        const double rhs = std::pow(alpha, 0.6) * fs.f(r.witness->x) +
                           std::pow(beta, 0.6) * fs.f(r.witness->y);
        CHECK(lhs - rhs == doctest::Approx(r.max_violation));
        CHECK(lhs - rhs > r.tolerance());
    }
    SUBCASE("x^2 is convex, hence 1-convex") {
        CHECK(check_s_convexity(lookup("pow:2"), unit, 1.0, 256, 1).pass);
    }
    SUBCASE("-x^2 fails with a witness") {
        const auto r = check_s_convexity(lookup("neg:pow:2"), unit, 1.0, 256, 1);
        CHECK_FALSE(r.pass);
        REQUIRE(r.witness.has_value());
        CHECK(r.max_violation > r.tolerance());
    }
}

TEST_CASE("s-concavity certification") {
    const Interval unit(0, 1);

    SUBCASE("positive constant is 1-concave") {
        CHECK(check_s_concavity(lookup("pow:0"), unit, 1.0, 256, 1).pass);
    }
    SUBCASE("positive constant fails 1/2-concavity at alpha = beta = 1/2") {
        const auto r = check_s_concavity(lookup("pow:0"), unit, 0.5, 256, 1);
        CHECK_FALSE(r.pass);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->alpha == 0.5);
        // c < (alpha^s + beta^s) c = sqrt(2) c
        CHECK(r.max_violation == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-12));
    }
    SUBCASE("x^2 is not concave") {
        CHECK_FALSE(check_s_concavity(lookup("pow:2"), unit, 1.0, 256, 1).pass);
    }
}

TEST_CASE("estimate_max_s") {
    const Interval unit(0, 1);
    CHECK(estimate_max_s(lookup("pow:1"), unit) == 1.0);
    CHECK(estimate_max_s(lookup("pow:2"), unit) == 1.0);
    CHECK(estimate_max_s(lookup("pow:0.5"), unit) == doctest::Approx(0.5).epsilon(2e-3));
    CHECK_THROWS_AS(estimate_max_s(lookup("neg:pow:2"), unit), HypothesisViolated);
}

TEST_CASE("class membership is monotone in s for nonnegative functions") {
    const Interval unit(0, 1);
    for (const auto& name : {"pow:0.5", "pow:1.5", "pow:2", "exp", "poly:1,2,2"}) {
        CAPTURE(name);
        const auto fs = lookup(name);
        bool failed_below = false;  // a failure at small s with a pass above it
        bool seen_fail = false;
        for (int i = 1; i <= 10; ++i) {
            const double s = i / 10.0;
            const bool pass = check_s_convexity(fs, unit, s, 128, 7).pass;
            if (pass && seen_fail) failed_below = true;
            if (!pass) seen_fail = true;
        }
        CHECK_FALSE(failed_below);
    }
}

TEST_CASE("certification is deterministic in (seed, n_samples)") {
    const Interval iv(0.25, 1.75);
    const auto fs = lookup("pow:2.5");
    const auto r1 = check_s_convexity(fs, iv, 0.7, 333, 99);
    const auto r2 = check_s_convexity(fs, iv, 0.7, 333, 99);
    CHECK(r1.max_violation == r2.max_violation);
    CHECK(r1.samples == r2.samples);
    CHECK(r1.scale == r2.scale);
    CHECK(r1.pass == r2.pass);

    const auto r3 = check_s_convexity(fs, iv, 0.7, 333, 100);
    CHECK(r3.samples == r1.samples);  // same plan size, different draw
}

TEST_CASE("negative exponents keep the positive domain floor") {
    const auto inv = lookup("pow:-1");
    CHECK(inv.value_domain_min == kFractionalPowerFloor);
    CHECK(inv.domain_min == kFractionalPowerFloor);
    CHECK(inv.f(2.0) == doctest::Approx(0.5));
    CHECK(inv.f2(2.0) == doctest::Approx(0.25));  // 2 x^{-3}
    const Interval iv(0.5, 1.5);
    CHECK(derivative_mismatch(inv.f, inv.f1, iv) <= 1e-6);
    CHECK(derivative_mismatch(inv.f1, inv.f2, iv) <= 1e-6);
}
