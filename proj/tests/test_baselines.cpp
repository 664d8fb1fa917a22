#include "oracles.hpp"
#include "bintab/baselines.hpp"
#include "bintab/datasets.hpp"
#include "bintab/geometry.hpp"
#include "bintab/loglinear.hpp"

#include <doctest.h>

using namespace bintab;

namespace {

MarginTargets targets(const char* name, MarginMode mode = MarginMode::uniform, int digits = 3) {
    return targets_from_pmf(datasets::table(name).pmf(), mode, digits);
}

}  // namespace

TEST_CASE("running example converges to the no-three-way table") {
    const auto t = targets("example1");
    const auto report = ipf_max_entropy(t, 1e-10);
    CHECK(report.converged);
    CHECK(report.final_residual < 1e-10);
    CHECK(max_abs_residual(build_constraint_matrix(t), report.table) < 1e-10);
    CHECK(std::abs(zero_mean_params(report.table, 0.0)[7]) < 1e-8);
    CHECK(std::abs(top_order_odds_ratio(report.table).as_double() - 1.0) < 1e-6);
}

TEST_CASE("independence targets give the uniform table") {
    const auto report = ipf_max_entropy(MarginTargets::uniform(3, std::vector<Rational>(3, oracle::ratio(1, 4))));
    CHECK(report.converged);
    CHECK(report.iterations == 0);
    for (double c : report.table.cells()) CHECK(c == doctest::Approx(0.125));
}

TEST_CASE("product margins give the product table") {
    const auto t = MarginTargets::independence({oracle::ratio(3, 10), oracle::ratio(3, 5), oracle::ratio(1, 5)});
    const auto report = ipf_max_entropy(t);
    CHECK(report.converged);
    CHECK(report.table[7] == doctest::Approx(0.3 * 0.6 * 0.2));
}

TEST_CASE("rater table lands strictly inside its segment") {
    const auto t = targets("raters", MarginMode::uniform, 6);
    const auto report = ipf_max_entropy(t, 1e-10);
    REQUIRE(report.converged);
    const auto v = enumerate_vertices(build_constraint_matrix(t));
    REQUIRE(v.size() == 2);
    const auto w = decompose(report.table, v, 1e-9);
    CHECK(w.theta[0] > 0.0);
    CHECK(w.theta[0] < 1.0);
    CHECK(w.theta[1] > 0.0);
    CHECK(std::abs(top_order_odds_ratio(report.table).as_double() - 1.0) < 1e-6);
    CHECK(top_order_odds_ratio(datasets::table("raters").pmf()).as_double() == doctest::Approx(2.96625));
}

TEST_CASE("higher-order interactions vanish at d = 4") {
    const auto report = ipf_max_entropy(targets("water"), 1e-11);
    REQUIRE(report.converged);
    const auto params = zero_mean_params(report.table, 0.0);
    for (std::uint32_t m = 0; m < 16; ++m)
        if (std::popcount(m) >= 3) CHECK(std::abs(params[m]) <= 1e-9);
}

TEST_CASE("symmetric under reflection for uniform margins") {
    const auto report = ipf_max_entropy(targets("water"), 1e-11);
    const auto r = reflect(report.table);
    for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(r[k] - report.table[k]) <= 1e-10);
}

TEST_CASE("deviation never increases across sweeps") {
    for (const char* name : {"example1", "raters", "water"})
        for (auto mode : {MarginMode::uniform, MarginMode::observed}) {
            const auto report = ipf_max_entropy(targets(name, mode, 6), 1e-12);
            for (std::size_t s = 1; s < report.history.size(); ++s) CHECK(report.history[s] <= report.history[s - 1] + 1e-15);
            CHECK(report.history.size() == report.iterations);
        }
}

TEST_CASE("iteration cap and infeasible targets") {
    const auto report = ipf_max_entropy(targets("raters"), 1e-14, 1);
    CHECK_FALSE(report.converged);
    CHECK(report.iterations == 1);
    CHECK_THROWS_AS(ipf_max_entropy(MarginTargets::uniform(2, {oracle::ratio(3, 5)})), InfeasibleError);
}
