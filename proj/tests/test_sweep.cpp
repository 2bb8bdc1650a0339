#include <doctest.h>

#include <cmath>

#include "sconv/config.hpp"
#include "sconv/report.hpp"
#include "sconv/sweep.hpp"

using namespace sconv;
using namespace sconv::sweep;

TEST_CASE("theorem id round trip and parameter shape") {
    for (const auto* name :
         {"thm2.1", "thm2.2", "thm2.3", "thm1.2", "cor2.3.1", "cor2.3.2", "cor2.7.1",
          "cor2.7.2", "cor2.8", "cor2.11", "cor1.1", "hadamard", "ostrowski_classical",
          "prop3.1a", "prop3.1b", "prop3.2", "prop3.3"}) {
        CHECK(to_string(parse_theorem_id(name)) == name);
    }
    CHECK_THROWS_AS(parse_theorem_id("thm9.9"), InvalidParameter);

    CHECK(needs_x(TheoremId::thm2_1));
    CHECK_FALSE(needs_x(TheoremId::cor2_3_1));
    CHECK(needs_q(TheoremId::thm2_2));
    CHECK_FALSE(needs_q(TheoremId::thm2_1));
    CHECK(x_spans_full_interval(TheoremId::thm1_2));
    CHECK_FALSE(x_spans_full_interval(TheoremId::thm2_3));

    // malformed cases are rejected before evaluation
    CHECK_THROWS_AS(
        (InequalityCase{TheoremId::thm2_1, "pow:2", Interval(0, 1), 0.25, 1.0, 2.0})
            .validate(),
        InvalidParameter);
    CHECK_THROWS_AS(
        (InequalityCase{TheoremId::thm2_2, "pow:2", Interval(0, 1), 0.25, 1.0, {}})
            .validate(),
        InvalidParameter);
    CHECK_THROWS_AS(
        (InequalityCase{TheoremId::cor2_3_1, "pow:2", Interval(0, 1), 0.25, 1.0, {}})
            .validate(),
        InvalidParameter);
    CHECK_THROWS_AS(
        (InequalityCase{TheoremId::thm2_1, "pow:2", Interval(0, 1), 0.75, 1.0, {}})
            .validate(),
        InvalidParameter);  // x beyond (a+b)/2
    CHECK_NOTHROW(
        (InequalityCase{TheoremId::thm1_2, "pow:2", Interval(0, 1), 0.75, 1.0, 2.0})
            .validate());
}

TEST_CASE("evaluate_case: the constant-curvature equality family") {
    const auto r = evaluate_case(
        InequalityCase{TheoremId::thm2_1, "pow:2", Interval(0, 1), 0.25, 1.0, {}});
    CHECK(r.hypothesis_certified);
    CHECK(r.verdict == Verdict::holds);
    CHECK(std::abs(r.slack) <= 1e-10);
    CHECK(r.tightness == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.lhs == doctest::Approx(1.0 / 48.0).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(1.0 / 48.0).epsilon(1e-12));
}

TEST_CASE("evaluate_case: sharp Hadamard witness") {
    const auto r = evaluate_case(
        InequalityCase{TheoremId::hadamard, "pow:0.5", Interval(0, 1), {}, 0.5, {}});
    CHECK(r.hypothesis_certified);
    CHECK(r.verdict == Verdict::holds);
    CHECK(std::abs(r.rhs - r.lhs) <= 1e-10);  // upper - mean
    CHECK(r.tightness == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("evaluate_case: failed hypothesis is downgraded, not asserted") {
    const auto r = evaluate_case(
        InequalityCase{TheoremId::thm2_3, "pow:2", Interval(0, 1), 0.25, 0.5, 2.0});
    CHECK_FALSE(r.hypothesis_certified);
    CHECK(r.verdict == Verdict::hypothesis_failed);
}

TEST_CASE("evaluate_case: classical Ostrowski") {
    const auto r = evaluate_case(InequalityCase{TheoremId::ostrowski_classical, "pow:2",
                                                Interval(0, 1), 0.0, 1.0, {}});
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.lhs == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("evaluate_case: propositions ride the sweep") {
    const auto r = evaluate_case(
        InequalityCase{TheoremId::prop3_1a, "pow:0.5", Interval(1, 2), {}, 0.5, {}});
    CHECK(r.hypothesis_certified);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.lhs == doctest::Approx(0.0057934548941289840).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(0.0080828448640775925).epsilon(1e-9));
}

TEST_CASE("run_sweep: empty function list gives an empty report") {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::thm2_1};
    cfg.functions = {};
    cfg.intervals = {Interval(0, 1)};
    cfg.s_values = {1.0};
    const auto report = run_sweep(cfg);
    CHECK(report.total == 0);
    CHECK(report.records.empty());
    CHECK(report.min_slack_case() == nullptr);
}

TEST_CASE("run_sweep: equality family has tightness 1 at every x") {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::thm2_1};
    cfg.functions = {"pow:2"};
    cfg.intervals = {Interval(0, 1), Interval(0.5, 2)};
    cfg.s_values = {1.0};
    cfg.x_count = 9;
    const auto report = run_sweep(cfg);
    CHECK(report.total == 18);
    CHECK(report.holds == 18);
    CHECK(report.violated == 0);
    for (const auto& rec : report.records) {
        CHECK(rec.r.tightness == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(rec.r.slack) <= 1e-9 * (1 + rec.r.rhs) + 5 * rec.r.quad_error);
    }
    REQUIRE(report.min_slack_case() != nullptr);
    CHECK(report.min_slack_case()->r.tightness == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("run_sweep: deterministic and order-preserving") {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::thm2_1, TheoremId::thm2_2, TheoremId::hadamard};
    cfg.functions = {"pow:2", "exp", "pow:2.5"};
    cfg.intervals = {Interval(0.5, 1.5)};
    cfg.s_values = {0.5, 1.0};
    cfg.q_values = {2.0};
    cfg.x_count = 5;
    cfg.seed = 7;

    const auto r1 = run_sweep(cfg);
    const auto r2 = run_sweep(cfg);
    CHECK(io::to_csv(r1) == io::to_csv(r2));

    SweepConfig parallel = cfg;
    parallel.jobs = 4;
    const auto r4 = run_sweep(parallel);
    CHECK(io::to_csv(r1) == io::to_csv(r4));

    // counts are consistent
    CHECK(r1.total ==
          r1.holds + r1.violated + r1.hypothesis_failed + r1.numerical_failure);
    CHECK(r1.total == static_cast<long>(r1.records.size()));
}

TEST_CASE("run_sweep: grid shape covers endpoints") {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::thm2_1};
    cfg.functions = {"pow:2"};
    cfg.intervals = {Interval(0, 1)};
    cfg.s_values = {1.0};
    cfg.x_count = 9;
    const auto report = run_sweep(cfg);
    REQUIRE(report.total == 9);
    CHECK(*report.records.front().c.x == 0.0);
    CHECK(*report.records.back().c.x == 0.5);
}

TEST_CASE("sweep config validation") {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::thm2_2};
    cfg.functions = {"pow:2"};
    cfg.intervals = {Interval(0, 1)};
    cfg.s_values = {1.0};
    cfg.q_values = {};  // required by thm2.2
    CHECK_THROWS_AS(run_sweep(cfg), InvalidParameter);
    cfg.q_values = {2.0};
    cfg.functions = {"nope"};
    CHECK_THROWS_AS(run_sweep(cfg), InvalidParameter);
}

TEST_CASE("zero-curvature cases report tightness 0, not a blowup") {
    const auto r = evaluate_case(
        InequalityCase{TheoremId::thm2_1, "pow:1", Interval(0, 1), 0.25, 1.0, {}});
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.rhs == 0.0);
    CHECK(r.tightness == 0.0);
    CHECK(std::isfinite(r.slack));
}

TEST_CASE("min-slack witness exists even when every hypothesis fails") {
    SweepConfig cfg;
    cfg.theorems = {TheoremId::thm2_3};
    cfg.functions = {"pow:3"};  // (6t)^q is convex, never s-concave
    cfg.intervals = {Interval(0.5, 1.5)};
    cfg.s_values = {0.5};
    cfg.q_values = {2.0};
    cfg.x_count = 3;
    const auto report = run_sweep(cfg);
    CHECK(report.total == 3);
    CHECK(report.hypothesis_failed == 3);
    CHECK(report.min_slack_case() != nullptr);
}
