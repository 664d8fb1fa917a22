#pragma once

// Dependence targets and the homogeneous linear system whose nonnegative
// solutions are the tables meeting them.

#include "bintab/rational.hpp"
#include "bintab/table.hpp"

#include <string>
#include <vector>

namespace bintab {

inline constexpr int kDefaultDigits = 6;

enum class MarginMode {
    uniform,   ///< every univariate margin is (1/2, 1/2)
    observed,  ///< univariate margins copied from the source table
};

/// Target univariate margins m_i^1 and second-order moments mu_ij.
struct MarginTargets {
    int d = 0;
    std::vector<Rational> univariate;  ///< m_i^1, one per axis
    std::vector<Rational> moments;     ///< mu_ij in pair-lexicographic order

    static MarginTargets uniform(int d, std::vector<Rational> moments);
    /// Targets met by the product of independent coordinates.
    static MarginTargets independence(std::vector<Rational> univariate);

    const Rational& moment(int i, int j) const;
    bool is_uniform() const;

    /// Throws DomainError for malformed targets and InfeasibleError when a
    /// moment leaves its Frechet interval [max(0, a + b - 1), min(a, b)].
    void validate() const;
};

/// Position of the pair (i, j), i < j, in pair-lexicographic order.
std::size_t pair_offset(int i, int j, int d);

/// P(X_i = 1, X_j = 1) of the uniform-margin 2x2 table with odds ratio
/// omega: sqrt(omega) / (2 (sqrt(omega) + 1)), rounded to `digits` decimals.
Rational moment_from_odds_ratio(double omega, int digits = kDefaultDigits);

/// Same for margins (a, b) = (m_i^1, m_j^1): the root of
/// (1 - w) x^2 + (1 - a - b + w (a + b)) x - w a b = 0 inside the Frechet
/// interval, rounded to `digits` decimals.
Rational moment_from_odds_ratio(double omega, const Rational& a, const Rational& b, int digits = kDefaultDigits);

/// Targets carrying the marginal odds ratios of `p` under the chosen margins.
/// Throws DomainError when an odds ratio of `p` is zero, infinite or undefined.
MarginTargets targets_from_pmf(const ExactPmf& p, MarginMode mode, int digits = kDefaultDigits);

enum class RowKind { margin, moment };

struct RowLabel {
    RowKind kind = RowKind::margin;
    int i = 0;
    int j = -1;  ///< second axis for moment rows

    /// "m1" or "mu12" (1-based axis numbers).
    std::string to_string() const;
    bool operator==(const RowLabel&) const = default;
};

/// H with d margin rows followed by d(d-1)/2 moment rows, 2^d columns.
struct ConstraintMatrix {
    int d = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<RowLabel> labels;

    std::size_t columns() const { return cell_count(d); }
    bool operator==(const ConstraintMatrix&) const = default;
};

/// Margin row i: +1 where alpha_i = 0 and -1 where alpha_i = 1 for uniform
/// margins; in general m_i^1 where alpha_i = 0 and m_i^1 - 1 where alpha_i = 1.
/// Moment row (i, j): mu_ij - 1 where alpha_i alpha_j = 1, mu_ij elsewhere.
/// Validates the targets first.
ConstraintMatrix build_constraint_matrix(const MarginTargets& targets);

/// H p.
template <class T>
std::vector<T> residual(const ConstraintMatrix& h, const BasicPmf<T>& p) {
    if (p.size() != h.columns()) throw DomainError("pmf size does not match the constraint matrix");
    std::vector<T> out;
    out.reserve(h.rows.size());
    for (const auto& row : h.rows) {
        T acc = T(0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if constexpr (std::is_same_v<T, Rational>)
                acc += row[k] * p[k];
            else
                acc += row[k].get_d() * p[k];
        }
        out.push_back(acc);
    }
    return out;
}

/// Exact membership in the kernel of H.
bool satisfies(const ConstraintMatrix& h, const ExactPmf& p);
/// max |(H p)_r| <= tol.
bool satisfies(const ConstraintMatrix& h, const Pmf& p, double tol);
double max_abs_residual(const ConstraintMatrix& h, const Pmf& p);

}  // namespace bintab
