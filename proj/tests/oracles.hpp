#pragma once

// Reference implementations that share no code with the library: plain
// loops over configurations and a separate rational elimination.

#include "bintab/constraints.hpp"
#include "bintab/table.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using bintab::Rational;
using RMatrix = std::vector<std::vector<Rational>>;

/// n/d in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational ratio(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// All cells of {0,1}^d in lexicographic order, built by counting in base 2 from the right.
inline std::vector<std::vector<int>> configurations(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(static_cast<std::size_t>(d), 0);
    for (;;) {
        out.push_back(a);
        int pos = d - 1;
        while (pos >= 0 && a[static_cast<std::size_t>(pos)] == 1) a[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        a[static_cast<std::size_t>(pos)] = 1;
    }
    return out;
}

template <class T>
T margin_one(const std::vector<T>& p, int d, int i) {
    const auto cfg = configurations(d);
    T acc = T(0);
    for (std::size_t k = 0; k < cfg.size(); ++k)
        if (cfg[k][static_cast<std::size_t>(i)] == 1) acc += p[k];
    return acc;
}

template <class T>
T joint(const std::vector<T>& p, int d, int i, int j, int vi, int vj) {
    const auto cfg = configurations(d);
    T acc = T(0);
    for (std::size_t k = 0; k < cfg.size(); ++k)
        if (cfg[k][static_cast<std::size_t>(i)] == vi && cfg[k][static_cast<std::size_t>(j)] == vj) acc += p[k];
    return acc;
}

/// H assembled cell by cell from the indicator definitions.
inline RMatrix constraint_matrix(int d, const std::vector<Rational>& univariate, const std::vector<Rational>& moments) {
    const auto cfg = configurations(d);
    RMatrix h;
    for (int i = 0; i < d; ++i) {
        std::vector<Rational> row;
        const bool half = univariate[static_cast<std::size_t>(i)] == Rational(1, 2);
        for (const auto& a : cfg) {
            const int one = a[static_cast<std::size_t>(i)];
            if (half)
                row.emplace_back(one ? -1 : 1);
            else
                row.push_back(univariate[static_cast<std::size_t>(i)] - one);
        }
        h.push_back(row);
    }
    std::size_t r = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++r) {
            std::vector<Rational> row;
            for (const auto& a : cfg) row.push_back(moments[r] - a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)]);
            h.push_back(row);
        }
    return h;
}

/// Solves A x = b exactly. Returns nullopt unless the solution is unique.
inline std::optional<std::vector<Rational>> solve_unique(RMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) return std::nullopt;  // free column: not unique
        std::swap(a[pr], a[r]);
        std::swap(b[pr], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

/// Vertices of {p >= 0 : H p = 0, sum p = 1} by trying every cell support:
/// a vertex is the unique solution on its support with all entries positive.
inline std::vector<std::vector<Rational>> brute_force_vertices(const RMatrix& h) {
    const std::size_t n = h.front().size();
    std::vector<std::vector<Rational>> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) support.push_back(k);
        RMatrix a;
        std::vector<Rational> b;
        for (const auto& row : h) {
            std::vector<Rational> r;
            for (auto k : support) r.push_back(row[k]);
            a.push_back(r);
            b.emplace_back(0);
        }
        a.emplace_back(support.size(), Rational(1));
        b.emplace_back(1);
        const auto x = solve_unique(a, b);
        if (!x) continue;
        if (!std::all_of(x->begin(), x->end(), [](const Rational& v) { return v > 0; })) continue;
        std::vector<Rational> p(n, Rational(0));
        for (std::size_t i = 0; i < support.size(); ++i) p[support[i]] = (*x)[i];
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// P(X_i = 1, X_j = 1) of the 2x2 table with margins (a, b) and odds ratio
/// omega, found by bisection: the odds ratio increases along the Frechet interval.
inline double moment_by_bisection(double omega, double a, double b) {
    double lo = std::max(0.0, a + b - 1.0), hi = std::min(a, b);
    for (int it = 0; it < 200; ++it) {
        const double x = 0.5 * (lo + hi);
        const double ratio = x * (1.0 - a - b + x) / ((a - x) * (b - x));
        (ratio < omega ? lo : hi) = x;
    }
    return 0.5 * (lo + hi);
}

/// Random exact pmf with small-denominator cells, all positive.
inline bintab::ExactPmf random_pmf(std::mt19937_64& rng, int d, int max_weight = 20) {
    std::uniform_int_distribution<int> w(1, max_weight);
    std::vector<Rational> cells(std::size_t{1} << d);
    Rational total = 0;
    for (auto& c : cells) {
        c = w(rng);
        total += c;
    }
    for (auto& c : cells) c /= total;
    return bintab::ExactPmf(d, cells);
}

/// (q + reflect(q)) / 2 has every univariate margin equal to 1/2.
inline bintab::ExactPmf random_uniform_margin_pmf(std::mt19937_64& rng, int d, int max_weight = 20) {
    const auto q = random_pmf(rng, d, max_weight);
    std::vector<Rational> cells(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) cells[k] = (q[k] + q[q.size() - 1 - k]) / 2;
    return bintab::ExactPmf(d, cells);
}

/// Position along the segment r2 -> r1: p = t r1 + (1 - t) r2.
inline double segment_coordinate(const std::vector<double>& p, const std::vector<double>& r1, const std::vector<double>& r2) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < p.size(); ++k)
        if (std::abs(r1[k] - r2[k]) > std::abs(r1[best] - r2[best])) best = k;
    return (p[best] - r2[best]) / (r1[best] - r2[best]);
}

/// Saturated log-linear coefficients by solving the design system with a
/// dense LU factorization (column for S = product of per-axis codes).
std::vector<double> loglinear_by_design(const std::vector<double>& log_p, int d, bool zero_mean);

}  // namespace oracle
