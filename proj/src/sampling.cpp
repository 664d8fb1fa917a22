#include "bintab/sampling.hpp"

#include "bintab/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bintab {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kFeasibilityTolerance = 1e-10;
}  // namespace

CounterRng::result_type CounterRng::operator()() {
    ++counter_;
    std::uint64_t z = seed_ + counter_ * kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform() {
    // (k + 0.5) / 2^53 keeps both endpoints out
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::exponential() { return -std::log(uniform()); }

double CounterRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

void SamplerConfig::validate() const {
    if (count < 1) throw DomainError("sampler count must be at least 1");
}

std::vector<Pmf> sample_dirichlet(const VertexSet& vertices, const SamplerConfig& config) {
    config.validate();
    if (vertices.empty()) throw DomainError("cannot sample from an empty vertex set");
    const std::size_t n = vertices.size();
    const std::size_t cells = cell_count(vertices.d);
    std::vector<std::vector<double>> dense(n, std::vector<double>(cells));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < cells; ++k) dense[i][k] = vertices[i][k].get_d();

    CounterRng rng(config.seed);
    std::vector<Pmf> out;
    out.reserve(config.count);
    std::vector<double> theta(n);
    for (std::size_t draw = 0; draw < config.count; ++draw) {
        double total = 0.0;
        for (auto& t : theta) {
            t = rng.exponential();
            total += t;
        }
        std::vector<double> p(cells, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double w = theta[i] / total;
            for (std::size_t k = 0; k < cells; ++k) p[k] += w * dense[i][k];
        }
        out.push_back(normalized(vertices.d, std::move(p)));
    }
    return out;
}

std::vector<Pmf> sample_hit_and_run(const ConstraintMatrix& h, const Pmf& start, const SamplerConfig& config) {
    config.validate();
    if (start.dimension() != h.d) throw DomainError("start pmf dimension differs from the constraint matrix");
    if (max_abs_residual(h, start) > kFeasibilityTolerance) throw DomainError("hit-and-run start point is infeasible");

    const std::size_t n = h.columns();
    linalg::Matrix system = h.rows;
    system.emplace_back(n, Rational(1));
    std::vector<bool> pinned(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        if (start[k] != 0.0) continue;
        pinned[k] = true;
        std::vector<Rational> unit(n, Rational(0));
        unit[k] = 1;
        system.push_back(std::move(unit));
    }
    const linalg::Matrix kernel = linalg::kernel_basis(system, n);
    const std::size_t dim = kernel.size();
    if (dim == 0) return std::vector<Pmf>(config.count, start);

    Eigen::MatrixXd basis(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t k = 0; k < n; ++k) basis(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)) = kernel[c][k].get_d();
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));

    Eigen::VectorXd anchor(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) anchor[static_cast<Eigen::Index>(k)] = start[k];
    Eigen::VectorXd x = anchor;
    Eigen::VectorXd z(static_cast<Eigen::Index>(dim));

    CounterRng rng(config.seed);
    auto step = [&]() {
        for (Eigen::Index c = 0; c < z.size(); ++c) z[c] = rng.normal();
        Eigen::VectorXd u = q * z;
        u.normalize();
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (Eigen::Index k = 0; k < u.size(); ++k) {
            if (pinned[static_cast<std::size_t>(k)] || std::abs(u[k]) < 1e-15) continue;
            const double bound = -x[k] / u[k];
            if (u[k] > 0)
                lo = std::max(lo, bound);
            else
                hi = std::min(hi, bound);
        }
        const double t = hi > lo ? lo + (hi - lo) * rng.uniform() : 0.0;
        x += t * u;
        // pull back onto the affine hull to stop round-off drift
        x = anchor + q * (q.transpose() * (x - anchor));
        x = x.cwiseMax(0.0);
    };

    for (std::size_t s = 0; s < config.burn_in; ++s) step();
    std::vector<Pmf> out;
    out.reserve(config.count);
    for (std::size_t draw = 0; draw < config.count; ++draw) {
        if (draw > 0)
            for (std::size_t s = 0; s < config.thinning; ++s) step();
        step();
        out.push_back(normalized(h.d, std::vector<double>(x.data(), x.data() + x.size())));
    }
    return out;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw DomainError("KS statistic needs two nonempty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double worst = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        worst = std::max(worst, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return worst;
}

}  // namespace bintab
