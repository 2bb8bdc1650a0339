#include <doctest.h>

#include <cmath>
#include <random>

#include "sconv/companions.hpp"
#include "sconv/function_catalog.hpp"
#include "sconv/means.hpp"

using namespace sconv;
using namespace sconv::means;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (double(rng() >> 11) * 0x1p-53);
}

} // namespace

TEST_CASE("arithmetic mean") {
    CHECK(arithmetic_mean({1, 3}) == 2.0);
    CHECK(arithmetic_mean({7.25, 7.25}) == 7.25);
    CHECK(arithmetic_mean({0, 1}) == 0.5);
    CHECK_THROWS_AS(MeanArgs(-1, 2), InvalidParameter);
}

TEST_CASE("generalized logarithmic mean") {
    // n = 1 collapses to the arithmetic mean: (b^2-a^2)/(2(b-a)) = (a+b)/2
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = uniform(rng, 0.1, 3.0);
        const double b = a + uniform(rng, 0.1, 3.0);
        CHECK(generalized_log_mean({a, b}, 1) ==
              doctest::Approx(arithmetic_mean({a, b})).epsilon(1e-13));
    }
    CHECK(generalized_log_mean({1, 2}, 2) ==
          doctest::Approx(1.5275252316519467).epsilon(1e-14));  // sqrt(7/3)
    CHECK(power_log_mean({1, 2}, 0.5) ==
          doctest::Approx(1.2189514164974601).epsilon(1e-14));  // (2 sqrt 2 - 1)/1.5
    // L_s^s really is the s-th power of L_s
    CHECK(std::pow(generalized_log_mean({1, 2}, 0.5), 0.5) ==
          doctest::Approx(power_log_mean({1, 2}, 0.5)).epsilon(1e-13));

    CHECK_THROWS_AS(generalized_log_mean({1, 2}, -1), InvalidParameter);
    CHECK_THROWS_AS(generalized_log_mean({1, 2}, 0), InvalidParameter);
    CHECK_THROWS_AS(generalized_log_mean({2, 2}, 3), InvalidParameter);
}

TEST_CASE("generalized log mean sits between its arguments") {
    std::mt19937_64 rng(23);
    for (double n = -5; n <= 5; n += 0.5) {
        if (n == -1 || n == 0) continue;
        for (int trial = 0; trial < 10; ++trial) {
            const double a = uniform(rng, 0.2, 4.0);
            const double b = a + uniform(rng, 0.05, 4.0);
            const double mean = generalized_log_mean({a, b}, n);
            CAPTURE(n);
            CHECK(mean >= a * (1 - 1e-12));
            CHECK(mean <= b * (1 + 1e-12));
        }
    }
}

TEST_CASE("proposition spot values") {
    {
        const auto r = verify_proposition(PropositionId::p3_1a, 1, 2, 0.5);
        CHECK(r.lhs == doctest::Approx(0.0057934548941289840).epsilon(1e-10));
        CHECK(r.rhs == doctest::Approx(0.0080828448640775925).epsilon(1e-10));
        CHECK(r.verdict == Verdict::holds);
    }
    {
        const auto r = verify_proposition(PropositionId::p3_1b, 1, 2, 0.5);
        CHECK(r.lhs == doctest::Approx(0.0015034056436350067).epsilon(1e-10));
        CHECK(r.rhs == doctest::Approx(0.0019823649439792579).epsilon(1e-10));
        CHECK(r.verdict == Verdict::holds);
    }
    {
        const auto r = verify_proposition(PropositionId::p3_2, 1, 2, 0.5, 2.0);
        CHECK(r.lhs == doctest::Approx(0.0057934548941289840).epsilon(1e-10));
        CHECK(r.rhs == doctest::Approx(0.010199184526986277).epsilon(1e-10));
        CHECK(r.verdict == Verdict::holds);
    }
    {
        const auto r = verify_proposition(PropositionId::p3_3, 1, 2, 0.5, 2.0);
        CHECK(r.lhs == doctest::Approx(0.011844635310912541).epsilon(1e-10));
        CHECK(r.rhs == doctest::Approx(0.012103072956898178).epsilon(1e-10));
        CHECK(r.verdict == Verdict::holds);
    }
}

TEST_CASE("propositions are pure specializations of the fixed-point forms") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 40; ++trial) {
        const double a = uniform(rng, 0.3, 2.0);
        const double b = a + uniform(rng, 0.2, 2.0);
        const double s = uniform(rng, 0.05, 0.95);
        const double q = uniform(rng, 1.2, 4.0);
        const Interval iv(a, b);
        const auto fs = funcat::make_power_function(s);
        const SParam sp(s);
        const HoelderPair hp(q);
        CAPTURE(a); CAPTURE(b); CAPTURE(s); CAPTURE(q);

        auto close = [](double u, double v) {
            return std::abs(u - v) <= 1e-12 * (std::abs(u) + std::abs(v) + 1e-300);
        };
        CHECK(close(proposition_rhs(PropositionId::p3_1a, a, b, s, {}),
                    companions::cor_2_3_1(fs, iv, sp)));
        CHECK(close(proposition_rhs(PropositionId::p3_1b, a, b, s, {}),
                    companions::cor_2_3_2(fs, iv, sp)));
        CHECK(close(proposition_rhs(PropositionId::p3_2, a, b, s, q),
                    companions::cor_2_7_1(fs, iv, sp, hp)));
        CHECK(close(proposition_rhs(PropositionId::p3_3, a, b, s, q),
                    companions::cor_2_8(fs, iv, sp, hp)));
    }
}

TEST_CASE("mean-difference equals the companion deviation at the midpoint") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        const double a = uniform(rng, 0.3, 2.0);
        const double b = a + uniform(rng, 0.2, 2.0);
        const double s = uniform(rng, 0.1, 0.9);
        const Interval iv(a, b);
        const auto fs = funcat::make_power_function(s);
        const auto dev = companions::companion_deviation(fs, iv, {iv.midpoint(), iv});
        const double lhs = proposition_lhs(PropositionId::p3_1a, a, b, s);
        CHECK(std::abs(lhs - std::abs(dev.value)) <= 5 * dev.quad_error + 1e-12);
    }
}

TEST_CASE("printed coefficient s(s-1) would produce a negative bound") {
    const double bad = proposition_rhs_bad_sign(PropositionId::p3_1a, 1, 2, 0.5, {});
    const double good = proposition_rhs(PropositionId::p3_1a, 1, 2, 0.5, {});
    CHECK(bad < 0.0);
    CHECK(good > 0.0);
    CHECK(bad == -good);  // the sign flip is the entire difference
    // a bound on an absolute value can never hold with a negative rhs
    CHECK(proposition_lhs(PropositionId::p3_1a, 1, 2, 0.5) > bad);
}

TEST_CASE("proposition parameter domains") {
    CHECK_THROWS_AS(verify_proposition(PropositionId::p3_1a, 2, 1, 0.5), InvalidParameter);
    CHECK_THROWS_AS(verify_proposition(PropositionId::p3_1a, 0, 1, 0.5), InvalidParameter);
    CHECK_THROWS_AS(verify_proposition(PropositionId::p3_1a, 1, 2, 1.0), InvalidParameter);
    CHECK_THROWS_AS(verify_proposition(PropositionId::p3_2, 1, 2, 0.5), InvalidParameter);
    CHECK_THROWS_AS(verify_proposition(PropositionId::p3_3, 1, 2, 0.5, 1.0), InvalidParameter);
    CHECK(parse_proposition_id("3.1a") == PropositionId::p3_1a);
    CHECK_THROWS_AS(parse_proposition_id("3.4"), InvalidParameter);
}
