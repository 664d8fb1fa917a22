#include "bintab/constraints.hpp"

#include <algorithm>
#include <cmath>

namespace bintab {

MarginTargets MarginTargets::uniform(int d, std::vector<Rational> moments) {
    MarginTargets t;
    t.d = d;
    t.univariate.assign(static_cast<std::size_t>(d), Rational(1, 2));
    t.moments = std::move(moments);
    return t;
}

MarginTargets MarginTargets::independence(std::vector<Rational> univariate) {
    MarginTargets t;
    t.d = static_cast<int>(univariate.size());
    t.univariate = std::move(univariate);
    for (auto [i, j] : axis_pairs(t.d))
        t.moments.push_back(t.univariate[static_cast<std::size_t>(i)] * t.univariate[static_cast<std::size_t>(j)]);
    return t;
}

std::size_t pair_offset(int i, int j, int d) {
    detail::check_pair(i, j, d);
    if (i > j) std::swap(i, j);
    // pairs starting before i: sum_{r < i} (d - 1 - r)
    const auto before = static_cast<std::size_t>(i * (2 * d - i - 1) / 2);
    return before + static_cast<std::size_t>(j - i - 1);
}

const Rational& MarginTargets::moment(int i, int j) const { return moments.at(pair_offset(i, j, d)); }

bool MarginTargets::is_uniform() const {
    return std::all_of(univariate.begin(), univariate.end(), [](const Rational& m) { return m == Rational(1, 2); });
}

void MarginTargets::validate() const {
    check_dimension(d);
    if (univariate.size() != static_cast<std::size_t>(d))
        throw DomainError("expected " + std::to_string(d) + " univariate targets");
    if (moments.size() != axis_pairs(d).size())
        throw DomainError("expected " + std::to_string(axis_pairs(d).size()) + " moment targets");
    for (const auto& m : univariate)
        if (m <= 0 || m >= 1) throw DomainError("univariate target " + to_string(m) + " outside (0, 1)");
    for (auto [i, j] : axis_pairs(d)) {
        const Rational& a = univariate[static_cast<std::size_t>(i)];
        const Rational& b = univariate[static_cast<std::size_t>(j)];
        const Rational& mu = moment(i, j);
        const Rational lower = std::max(Rational(0), Rational(a + b - 1));
        const Rational upper = std::min(a, b);
        if (mu < lower || mu > upper)
            throw InfeasibleError("moment target for pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") = " + to_string(mu) + " violates the Frechet bounds [" + to_string(lower) + ", " +
                                  to_string(upper) + "]");
    }
}

Rational moment_from_odds_ratio(double omega, int digits) {
    if (!(omega > 0) || !std::isfinite(omega)) throw DomainError("odds ratio must be finite and positive");
    const long double s = std::sqrt(static_cast<long double>(omega));
    return round_to_digits(s / (2.0L * (s + 1.0L)), digits);
}

Rational moment_from_odds_ratio(double omega, const Rational& a_exact, const Rational& b_exact, int digits) {
    if (!(omega > 0) || !std::isfinite(omega)) throw DomainError("odds ratio must be finite and positive");
    const long double w = omega;
    const long double a = a_exact.get_d();
    const long double b = b_exact.get_d();
    const long double lo = std::max(0.0L, a + b - 1.0L);
    const long double hi = std::min(a, b);
    const long double qa = 1.0L - w;
    const long double qb = 1.0L - a - b + w * (a + b);
    const long double qc = -w * a * b;
    long double x;
    if (std::abs(qa) < 1e-15L) {
        x = -qc / qb;
    } else {
        const long double disc = std::max(0.0L, qb * qb - 4.0L * qa * qc);
        const long double sq = std::sqrt(disc);
        // cancellation-free pair of roots
        const long double q = -0.5L * (qb + std::copysign(sq, qb));
        const long double r1 = q / qa;
        const long double r2 = qc / q;
        const long double slack = 1e-12L;
        const bool in1 = r1 >= lo - slack && r1 <= hi + slack;
        const bool in2 = r2 >= lo - slack && r2 <= hi + slack;
        if (in1 == in2 && !in1) throw DomainError("no moment in the Frechet interval for this odds ratio");
        x = in1 ? r1 : r2;
    }
    return round_to_digits(std::clamp(x, lo, hi), digits);
}

MarginTargets targets_from_pmf(const ExactPmf& p, MarginMode mode, int digits) {
    MarginTargets t;
    t.d = p.dimension();
    for (int i = 0; i < t.d; ++i)
        t.univariate.push_back(mode == MarginMode::uniform ? Rational(1, 2) : univariate_margin(p, i).second);
    for (auto [i, j] : axis_pairs(t.d)) {
        const auto omega = marginal_odds_ratio(p, i, j);
        if (!omega.is_finite() || omega.value == 0)
            throw DomainError("marginal odds ratio of pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is not finite and positive");
        const double w = omega.value.get_d();
        t.moments.push_back(mode == MarginMode::uniform
                                ? moment_from_odds_ratio(w, digits)
                                : moment_from_odds_ratio(w, t.univariate[static_cast<std::size_t>(i)],
                                                         t.univariate[static_cast<std::size_t>(j)], digits));
    }
    return t;
}

std::string RowLabel::to_string() const {
    if (kind == RowKind::margin) return "m" + std::to_string(i + 1);
    return "mu" + std::to_string(i + 1) + std::to_string(j + 1);
}

ConstraintMatrix build_constraint_matrix(const MarginTargets& targets) {
    targets.validate();
    const int d = targets.d;
    const std::size_t n = cell_count(d);
    ConstraintMatrix h;
    h.d = d;
    for (int i = 0; i < d; ++i) {
        const Rational& m = targets.univariate[static_cast<std::size_t>(i)];
        const bool half = m == Rational(1, 2);
        std::vector<Rational> row(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (half)
                row[k] = axis_bit(k, i, d) ? -1 : 1;
            else
                row[k] = axis_bit(k, i, d) ? Rational(m - 1) : m;
        }
        h.rows.push_back(std::move(row));
        h.labels.push_back({RowKind::margin, i, -1});
    }
    for (auto [i, j] : axis_pairs(d)) {
        const Rational& mu = targets.moment(i, j);
        std::vector<Rational> row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = (axis_bit(k, i, d) && axis_bit(k, j, d)) ? Rational(mu - 1) : mu;
        h.rows.push_back(std::move(row));
        h.labels.push_back({RowKind::moment, i, j});
    }
    return h;
}

bool satisfies(const ConstraintMatrix& h, const ExactPmf& p) {
    const auto r = residual(h, p);
    return std::all_of(r.begin(), r.end(), [](const Rational& v) { return v == 0; });
}

double max_abs_residual(const ConstraintMatrix& h, const Pmf& p) {
    double worst = 0.0;
    for (double v : residual(h, p)) worst = std::max(worst, std::abs(v));
    return worst;
}

bool satisfies(const ConstraintMatrix& h, const Pmf& p, double tol) { return max_abs_residual(h, p) <= tol; }

}  // namespace bintab
