#pragma once

// Saturated log-linear coordinates of binary tables.
//
//   log p_alpha = lambda + sum_{S nonempty} lambda^S_{alpha_S}
//
// Zero-mean coding: each lambda^S sums to zero along every index, so for
// binary tables lambda^S_{alpha_S} = lambda^S * prod_{i in S} (alpha_i ? +1 : -1)
// and only the all-ones level lambda^S is stored.
// Corner coding: lambda^S_{alpha_S} vanishes unless alpha_S is all ones.

#include "bintab/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bintab {

inline constexpr double kDefaultSmoothing = 1e-8;

enum class Parametrization { zero_mean, corner };

/// Coefficients indexed by subset mask: bit (d - 1 - i) set means axis i is
/// in S, so the mask of S is the offset of the cell whose ones are S.
struct LogLinearParams {
    int d = 0;
    Parametrization parametrization = Parametrization::zero_mean;
    double eps = 0.0;  ///< smoothing added to every cell before the logarithm
    std::vector<double> lambda;

    double operator[](std::uint32_t mask) const { return lambda.at(mask); }
    /// Coefficient for S given as 0-based axes.
    double coefficient(const std::vector<int>& subset) const;
};

std::uint32_t subset_mask(const std::vector<int>& axes, int d);
/// "" for the intercept, otherwise 1-based axis digits such as "13".
std::string subset_label(std::uint32_t mask, int d);
std::uint32_t parse_subset_label(const std::string& label, int d);

/// Subsets ordered by size, then lexicographically: {}, {1}, {2}, ..., {1,2}, ...
std::vector<std::uint32_t> subsets_by_order(int d);

/// lambda^S = 2^-d sum_alpha prod_{i in S} (alpha_i ? +1 : -1) log(p_alpha + eps).
/// Throws DomainError when some p_alpha + eps is not positive.
LogLinearParams zero_mean_params(const Pmf& p, double eps = kDefaultSmoothing);

/// lambda^S = sum_{T subset of S} (-1)^{|S| - |T|} log(p_{1_T} + eps), the
/// Moebius inversion on the subset lattice with baseline cell 0...0.
LogLinearParams corner_params(const Pmf& p, double eps = kDefaultSmoothing);

/// Exponentiates the represented log-table and renormalizes to mass one.
Pmf reconstruct(const LogLinearParams& params);

}  // namespace bintab
