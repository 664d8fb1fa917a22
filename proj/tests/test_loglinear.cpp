#include "bintab/datasets.hpp"
#include "bintab/geometry.hpp"
#include "bintab/loglinear.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace bintab;

namespace {

VertexSet fine_vertices(const char* name) {
    return enumerate_vertices(build_constraint_matrix(targets_from_pmf(datasets::table(name).pmf(), MarginMode::uniform, 6)));
}

std::vector<double> ordered(const LogLinearParams& params) {
    std::vector<double> out;
    for (auto mask : subsets_by_order(params.d)) out.push_back(params[mask]);
    return out;
}

std::vector<double> logs(const Pmf& p, double eps) {
    std::vector<double> out;
    for (double v : p.cells()) out.push_back(std::log(v + eps));
    return out;
}

}  // namespace

TEST_CASE("subset labels") {
    CHECK(subset_mask({0}, 3) == 4);
    CHECK(subset_mask({1, 2}, 3) == 3);
    CHECK(subset_label(5, 3) == "13");
    CHECK(subset_label(0, 3).empty());
    CHECK(parse_subset_label("23", 3) == 3);
    CHECK(parse_subset_label("∅", 3) == 0);
    CHECK_THROWS_AS(parse_subset_label("4", 3), DomainError);
    CHECK_THROWS_AS(parse_subset_label("x", 3), ParseError);
    const auto order = subsets_by_order(3);
    std::vector<std::string> labels;
    for (auto m : order) labels.push_back(subset_label(m, 3));
    CHECK(labels == std::vector<std::string>{"", "1", "2", "3", "12", "13", "23", "123"});
}

TEST_CASE("uniform table has only an intercept") {
    for (int d : {2, 3, 4}) {
        const auto u = Pmf::uniform(d);
        for (const auto& params : {zero_mean_params(u, 0.0), corner_params(u, 0.0)}) {
            CHECK(params[0] == doctest::Approx(-d * std::log(2.0)));
            for (std::uint32_t m = 1; m < u.size(); ++m) CHECK(std::abs(params[m]) < 1e-12);
            const auto back = reconstruct(params);
            for (std::size_t k = 0; k < u.size(); ++k) CHECK(back[k] == doctest::Approx(u[k]));
        }
    }
}

TEST_CASE("coefficients agree with the design-matrix oracle") {
    std::mt19937_64 rng(3);
    for (int d : {2, 3, 4}) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto p = to_floating(oracle::random_pmf(rng, d));
            const auto lp = logs(p, 0.0);
            const auto zm = zero_mean_params(p, 0.0);
            const auto cn = corner_params(p, 0.0);
            const auto zm_oracle = oracle::loglinear_by_design(lp, d, true);
            const auto cn_oracle = oracle::loglinear_by_design(lp, d, false);
            for (std::uint32_t m = 0; m < p.size(); ++m) {
                CHECK(zm[m] == doctest::Approx(zm_oracle[m]).epsilon(1e-9));
                CHECK(cn[m] == doctest::Approx(cn_oracle[m]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("zero-mean intercept is the mean log") {
    const auto p = to_floating(datasets::table("raters").pmf());
    double mean = 0;
    for (double v : logs(p, 1e-8)) mean += v / 8.0;
    CHECK(zero_mean_params(p, 1e-8)[0] == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("running example coefficients") {
    const auto v = fine_vertices("example1");
    const auto ref = datasets::reference("example1");
    for (std::size_t i = 0; i < 2; ++i) {
        const auto zm = ordered(zero_mean_params(to_floating(v[i])));
        for (std::size_t s = 0; s < 8; ++s) CHECK(std::abs(zm[s] - ref.zero_mean[i][s]) <= 5e-3);
    }
    const auto cn = ordered(corner_params(to_floating(v[1])));
    for (std::size_t s = 0; s < 7; ++s) CHECK(std::abs(cn[s] - ref.corner[1][s]) <= 5e-2);
    CHECK(cn[7] < -15);
}

TEST_CASE("rater coefficients") {
    const auto v = fine_vertices("raters");
    const auto ref = datasets::reference("raters");
    for (std::size_t i = 0; i < 2; ++i) {
        const auto zm = ordered(zero_mean_params(to_floating(v[i])));
        for (std::size_t s = 0; s < 8; ++s) CHECK(std::abs(zm[s] - ref.zero_mean[i][s]) <= 5e-3);
        const auto cn = ordered(corner_params(to_floating(v[i])));
        for (std::size_t s = 0; s < 8; ++s) {
            if (std::abs(ref.corner[i][s]) > 15) {
                CHECK(cn[s] * ref.corner[i][s] > 0);
                CHECK(std::abs(cn[s]) > 15);
            } else {
                CHECK(std::abs(cn[s] - ref.corner[i][s]) <= 5e-2);
            }
        }
    }
}

TEST_CASE("round trips") {
    const auto v = fine_vertices("example1");
    const auto r1 = to_floating(v[0]);
    const auto back = reconstruct(zero_mean_params(r1, 1e-8));
    for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(back[k] - r1[k]) <= 1e-6);
    const auto p0 = to_floating(datasets::table("example1").pmf());
    const auto again = reconstruct(corner_params(p0, 0.0));
    for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(again[k] - p0[k]) <= 1e-10);
    // both codings describe the same saturated model
    const auto z = reconstruct(zero_mean_params(r1, 1e-8));
    const auto c = reconstruct(corner_params(r1, 1e-8));
    for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(z[k] - c[k]) <= 1e-10);
}

TEST_CASE("zero-mean coefficients flip with odd order under reflection") {
    const auto v = fine_vertices("example1");
    const auto a = zero_mean_params(to_floating(v[0]));
    const auto b = zero_mean_params(to_floating(v[1]));
    for (std::uint32_t m = 0; m < 8; ++m) {
        const double sign = std::popcount(m) % 2 ? -1.0 : 1.0;
        CHECK(std::abs(b[m] - sign * a[m]) <= 1e-9);
    }
}

TEST_CASE("corner coefficients have no such symmetry") {
    const auto v = fine_vertices("example1");
    const auto a = corner_params(to_floating(v[0]));
    const auto b = corner_params(to_floating(v[1]));
    bool differs = false;
    for (std::uint32_t m = 0; m < 8; ++m) differs = differs || std::abs(std::abs(a[m]) - std::abs(b[m])) > 1e-3;
    CHECK(differs);
}

TEST_CASE("zero cells need smoothing") {
    const auto v = fine_vertices("example1");
    CHECK_THROWS_AS(zero_mean_params(to_floating(v[0]), 0.0), DomainError);
    CHECK_THROWS_AS(corner_params(to_floating(v[0]), 0.0), DomainError);
    CHECK_THROWS_AS(zero_mean_params(Pmf::uniform(2), -1.0), DomainError);
}
