#pragma once

// Iterative proportional fitting onto the pairwise margins implied by a set
// of targets. The fixed point is the feasible table of maximum entropy: all
// interactions of order three and higher vanish, so every higher-order odds
// ratio equals one.

#include "bintab/constraints.hpp"
#include "bintab/table.hpp"

#include <cstddef>
#include <vector>

namespace bintab {

struct IpfReport {
    Pmf table;
    std::size_t iterations = 0;  ///< full sweeps over all pairs
    double final_residual = 0.0; ///< max |margin - target| over every 2x2 entry
    bool converged = false;
    std::vector<double> history; ///< deviation after each sweep
};

/// Starts from the uniform table and, pair by pair in pair-lexicographic
/// order, rescales cells so the bivariate margin of (i, j) equals
/// [[1 - a - b + mu, b - mu], [a - mu, mu]]. Stops once the deviation is at
/// most `tol` or after `max_iter` sweeps (converged = false).
/// Throws InfeasibleError when the targets break a Frechet bound.
IpfReport ipf_max_entropy(const MarginTargets& targets, double tol = 1e-10, std::size_t max_iter = 10000);

}  // namespace bintab
