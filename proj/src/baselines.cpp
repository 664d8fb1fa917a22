#include "bintab/baselines.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace bintab {

namespace {

using Cell2x2 = std::array<std::array<double, 2>, 2>;

Cell2x2 pair_target(const MarginTargets& t, int i, int j) {
    const double a = t.univariate[static_cast<std::size_t>(i)].get_d();
    const double b = t.univariate[static_cast<std::size_t>(j)].get_d();
    const double mu = t.moment(i, j).get_d();
    return {{{1.0 - a - b + mu, b - mu}, {a - mu, mu}}};
}

Cell2x2 pair_margin(const std::vector<double>& p, int i, int j, int d) {
    Cell2x2 m{};
    for (std::size_t k = 0; k < p.size(); ++k) m[axis_bit(k, i, d)][axis_bit(k, j, d)] += p[k];
    return m;
}

}  // namespace

IpfReport ipf_max_entropy(const MarginTargets& targets, double tol, std::size_t max_iter) {
    targets.validate();
    if (!(tol > 0)) throw DomainError("IPF tolerance must be positive");
    const int d = targets.d;
    const auto pairs = axis_pairs(d);
    std::vector<Cell2x2> goal;
    goal.reserve(pairs.size());
    for (auto [i, j] : pairs) goal.push_back(pair_target(targets, i, j));

    std::vector<double> p(cell_count(d), 1.0 / static_cast<double>(cell_count(d)));
    auto deviation = [&] {
        double worst = 0.0;
        for (std::size_t r = 0; r < pairs.size(); ++r) {
            const auto m = pair_margin(p, pairs[r].first, pairs[r].second, d);
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) worst = std::max(worst, std::abs(m[x][y] - goal[r][x][y]));
        }
        return worst;
    };

    IpfReport report;
    report.final_residual = deviation();
    while (report.final_residual > tol && report.iterations < max_iter) {
        for (std::size_t r = 0; r < pairs.size(); ++r) {
            const auto [i, j] = pairs[r];
            const auto m = pair_margin(p, i, j, d);
            for (std::size_t k = 0; k < p.size(); ++k) {
                const int x = axis_bit(k, i, d), y = axis_bit(k, j, d);
                p[k] = m[x][y] > 0 ? p[k] * goal[r][x][y] / m[x][y] : 0.0;
            }
            double total = 0.0;
            for (double v : p) total += v;
            for (double& v : p) v /= total;
        }
        ++report.iterations;
        report.final_residual = deviation();
        report.history.push_back(report.final_residual);
    }
    report.converged = report.final_residual <= tol;
    report.table = normalized(d, std::move(p));
    return report;
}

}  // namespace bintab
