#pragma once

// Random pmfs from the feasible polytope.
//
// Two samplers are provided and they target different distributions:
//
//  * sample_dirichlet mixes the vertices with Dirichlet(1, ..., 1) weights.
//    It is fast and covers the whole polytope, but for polytopes of
//    dimension >= 2 the induced law is NOT uniform.
//  * sample_hit_and_run is a random walk whose stationary law is uniform on
//    the polytope. Draws are correlated; use burn_in and thinning.
//
// Both are driven by CounterRng, so a seed reproduces the draw sequence
// bit for bit.

#include "bintab/constraints.hpp"
#include "bintab/geometry.hpp"
#include "bintab/table.hpp"

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace bintab {

/// Counter-based generator "splitmix64-ctr/1": the i-th output (i = 1, 2, ...)
/// is the SplitMix64 finalizer applied to seed + i * 0x9E3779B97F4A7C15.
/// Doubles use the top 53 bits; normals use Box-Muller with both outputs.
class CounterRng {
public:
    using result_type = std::uint64_t;
    static constexpr std::string_view kName = "splitmix64-ctr/1";

    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    /// Uniform on the open interval (0, 1).
    double uniform();
    double exponential();
    double normal();

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

struct SamplerConfig {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::size_t burn_in = 500;  ///< hit-and-run steps discarded before the first draw
    std::size_t thinning = 10;  ///< hit-and-run steps skipped between kept draws

    void validate() const;
};

/// mixture(theta, V) with theta ~ Dirichlet(1, ..., 1).
std::vector<Pmf> sample_dirichlet(const VertexSet& vertices, const SamplerConfig& config);

/// Hit-and-run inside {p >= 0 : H p = 0, sum p = 1}. Directions are uniform
/// on the unit sphere of an orthonormal basis of the kernel of [H; 1^T];
/// cells that are zero in `start` stay at zero, so a start on a face walks
/// within that face. A zero-dimensional polytope yields `start` repeatedly.
/// Throws DomainError when `start` is infeasible (residual above 1e-10).
std::vector<Pmf> sample_hit_and_run(const ConstraintMatrix& h, const Pmf& start, const SamplerConfig& config);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

}  // namespace bintab
