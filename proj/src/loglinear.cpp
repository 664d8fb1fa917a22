#include "bintab/loglinear.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bintab {

namespace {

std::vector<double> log_cells(const Pmf& p, double eps) {
    if (!(eps >= 0)) throw DomainError("smoothing constant must be nonnegative");
    std::vector<double> out;
    out.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double v = p[k] + eps;
        if (!(v > 0)) throw DomainError("cell " + std::to_string(k) + " is zero; logarithm needs a positive smoothing constant");
        out.push_back(std::log(v));
    }
    return out;
}

}  // namespace

std::uint32_t subset_mask(const std::vector<int>& axes, int d) {
    std::uint32_t mask = 0;
    for (int a : axes) {
        detail::check_axis(a, d);
        mask |= std::uint32_t{1} << (d - 1 - a);
    }
    return mask;
}

double LogLinearParams::coefficient(const std::vector<int>& subset) const { return lambda.at(subset_mask(subset, d)); }

std::string subset_label(std::uint32_t mask, int d) {
    std::string s;
    for (int a = 0; a < d; ++a)
        if (mask & (std::uint32_t{1} << (d - 1 - a))) s += std::to_string(a + 1);
    return s;
}

std::uint32_t parse_subset_label(const std::string& label, int d) {
    if (label.empty() || label == "\u2205") return 0;
    std::vector<int> axes;
    for (char c : label) {
        if (c < '1' || c > '9') throw ParseError("bad subset label '" + label + "'");
        axes.push_back(c - '1');
    }
    return subset_mask(axes, d);
}

std::vector<std::uint32_t> subsets_by_order(int d) {
    std::vector<std::uint32_t> masks(cell_count(d));
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [d](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return subset_label(a, d) < subset_label(b, d);
    });
    return masks;
}

LogLinearParams zero_mean_params(const Pmf& p, double eps) {
    const auto logs = log_cells(p, eps);
    LogLinearParams out;
    out.d = p.dimension();
    out.parametrization = Parametrization::zero_mean;
    out.eps = eps;
    out.lambda.assign(p.size(), 0.0);
    const double scale = 1.0 / static_cast<double>(p.size());
    for (std::uint32_t mask = 0; mask < p.size(); ++mask) {
        double acc = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            // cells with an odd number of zeros inside S enter with a minus sign
            const int zeros_in_s = std::popcount(static_cast<std::uint32_t>(~k) & mask);
            acc += (zeros_in_s % 2 == 0 ? 1.0 : -1.0) * logs[k];
        }
        out.lambda[mask] = acc * scale;
    }
    return out;
}

LogLinearParams corner_params(const Pmf& p, double eps) {
    const auto logs = log_cells(p, eps);
    LogLinearParams out;
    out.d = p.dimension();
    out.parametrization = Parametrization::corner;
    out.eps = eps;
    out.lambda.assign(p.size(), 0.0);
    for (std::uint32_t mask = 0; mask < p.size(); ++mask) {
        double acc = 0.0;
        const int s = std::popcount(mask);
        // iterate over all T subset of S, including the empty set
        for (std::uint32_t t = mask;; t = (t - 1) & mask) {
            acc += ((s - std::popcount(t)) % 2 == 0 ? 1.0 : -1.0) * logs[t];
            if (t == 0) break;
        }
        out.lambda[mask] = acc;
    }
    return out;
}

Pmf reconstruct(const LogLinearParams& params) {
    check_dimension(params.d);
    const std::size_t n = cell_count(params.d);
    if (params.lambda.size() != n) throw DomainError("coefficient count differs from 2^d");
    std::vector<double> logs(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::uint32_t mask = 0; mask < n; ++mask) {
            if (params.parametrization == Parametrization::zero_mean) {
                const int zeros_in_s = std::popcount(static_cast<std::uint32_t>(~k) & mask);
                acc += (zeros_in_s % 2 == 0 ? 1.0 : -1.0) * params.lambda[mask];
            } else if ((mask & k) == mask) {
                acc += params.lambda[mask];
            }
        }
        logs[k] = acc;
    }
    const double top = *std::max_element(logs.begin(), logs.end());
    std::vector<double> cells(n);
    for (std::size_t k = 0; k < n; ++k) cells[k] = std::exp(logs[k] - top);
    return normalized(params.d, std::move(cells));
}

}  // namespace bintab
