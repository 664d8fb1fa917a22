#include "oracles.hpp"

#include <Eigen/Dense>

namespace oracle {

std::vector<double> loglinear_by_design(const std::vector<double>& log_p, int d, bool zero_mean) {
    const auto cfg = configurations(d);
    const auto n = static_cast<Eigen::Index>(cfg.size());
    Eigen::MatrixXd x(n, n);
    // column s <-> subset whose membership bits spell s in binary, axis 0 leftmost
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < n; ++s) {
            double v = 1.0;
            for (int i = 0; i < d; ++i) {
                if (!((s >> (d - 1 - i)) & 1)) continue;
                const int a = cfg[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
                v *= zero_mean ? (a ? 1.0 : -1.0) : a;
            }
            x(r, s) = v;
        }
    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(log_p.data(), n);
    const Eigen::VectorXd lambda = x.fullPivLu().solve(y);
    return {lambda.data(), lambda.data() + n};
}

}  // namespace oracle
