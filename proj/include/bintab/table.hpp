#pragma once

// d-way binary tables: cell labels, probability vectors and the elementary
// dependence statistics computed from them.
//
// Cells are stored in lexicographic order of their labels, axis 0 being the
// most significant bit: the cell at offset k carries the binary expansion of k.
// Axes are 0-based throughout the library.

#include "bintab/errors.hpp"
#include "bintab/rational.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace bintab {

inline constexpr int kMaxDimension = 16;

/// Bit of `axis` in the label of the cell at `offset`.
inline int axis_bit(std::size_t offset, int axis, int d) {
    return static_cast<int>((offset >> (d - 1 - axis)) & 1U);
}

inline std::size_t cell_count(int d) { return std::size_t{1} << d; }

void check_dimension(int d);

/// Cell label alpha in {0,1}^d.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<std::uint8_t> bits);
    /// Parses a bit string such as "011".
    static Configuration parse(const std::string& bits);
    /// Label of the cell at 0-based `offset` in a d-way table.
    static Configuration from_offset(std::size_t offset, int d);

    int dimension() const { return static_cast<int>(bits_.size()); }
    int operator[](int axis) const { return bits_.at(static_cast<std::size_t>(axis)); }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    int weight() const;

    std::size_t offset() const;
    Configuration complement() const;
    std::string to_string() const;

    auto operator<=>(const Configuration&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// 1-based position of `alpha` in lexicographic order: k - 1 = sum_j alpha_j 2^(d-1-j).
std::size_t cell_index(const Configuration& alpha);
/// Inverse of cell_index.
Configuration configuration(std::size_t k, int d);

/// Probability vector over the 2^d cells. T is Rational (exact mode) or
/// double (floating mode). Construction validates nonnegativity and unit
/// mass: exactly for rationals, within 1e-12 for doubles.
template <class T>
class BasicPmf {
public:
    using value_type = T;
    static constexpr double kSumTolerance = 1e-12;

    BasicPmf() = default;
    BasicPmf(int d, std::vector<T> cells) : d_(d), cells_(std::move(cells)) { validate(); }

    static BasicPmf uniform(int d) {
        check_dimension(d);
        T cell;
        if constexpr (std::is_same_v<T, Rational>)
            cell = Rational(1, static_cast<unsigned long>(cell_count(d)));
        else
            cell = 1.0 / static_cast<double>(cell_count(d));
        return BasicPmf(d, std::vector<T>(cell_count(d), cell));
    }

    int dimension() const { return d_; }
    std::size_t size() const { return cells_.size(); }
    std::span<const T> cells() const { return cells_; }
    const T& operator[](std::size_t offset) const { return cells_[offset]; }
    const T& at(const Configuration& alpha) const {
        if (alpha.dimension() != d_) throw DomainError("configuration length differs from table dimension");
        return cells_[alpha.offset()];
    }

    bool operator==(const BasicPmf& other) const = default;

private:
    void validate() const {
        check_dimension(d_);
        if (cells_.size() != cell_count(d_))
            throw DomainError("pmf of dimension " + std::to_string(d_) + " needs " +
                              std::to_string(cell_count(d_)) + " cells, got " + std::to_string(cells_.size()));
        T total = T(0);
        for (std::size_t k = 0; k < cells_.size(); ++k) {
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(cells_[k])) throw DomainError("non-finite cell " + std::to_string(k));
            }
            if (cells_[k] < 0) throw DomainError("negative cell " + std::to_string(k));
            total += cells_[k];
        }
        if constexpr (std::is_same_v<T, Rational>) {
            if (total != 1) throw DomainError("cells sum to " + bintab::to_string(total) + ", not 1");
        } else {
            if (std::abs(total - 1.0) > kSumTolerance)
                throw DomainError("cells sum to " + std::to_string(total) + ", not 1");
        }
    }

    int d_ = 0;
    std::vector<T> cells_;
};

using Pmf = BasicPmf<double>;
using ExactPmf = BasicPmf<Rational>;

Pmf to_floating(const ExactPmf& p);
/// Rationalizes each cell through its shortest round-trip decimal and then
/// divides by the exact total, so the result sums to exactly 1.
ExactPmf to_exact(const Pmf& p);
/// Floating pmf from arbitrary nonnegative weights (renormalized).
Pmf normalized(int d, std::vector<double> weights);

/// Integer table kept next to its normalized pmf.
struct CountTable {
    int d = 0;
    std::vector<Integer> counts;

    Integer total() const;
    ExactPmf pmf() const;
};

/// Ordered pairs (i, j), i < j, in pair-lexicographic order (0,1), (0,2), ...
std::vector<std::pair<int, int>> axis_pairs(int d);

template <class T>
struct BivariateMargin {
    /// entries[k1][k2] = P(X_i = k1, X_j = k2)
    std::array<std::array<T, 2>, 2> entries{};

    const T& operator()(int k1, int k2) const { return entries[static_cast<std::size_t>(k1)][static_cast<std::size_t>(k2)]; }
    bool operator==(const BivariateMargin&) const = default;
};

namespace detail {
inline void check_axis(int axis, int d) {
    if (axis < 0 || axis >= d)
        throw DomainError("axis " + std::to_string(axis) + " out of range for dimension " + std::to_string(d));
}
inline void check_pair(int i, int j, int d) {
    check_axis(i, d);
    check_axis(j, d);
    if (i == j) throw DomainError("pair needs two distinct axes");
}
}  // namespace detail

/// (m_i^0, m_i^1).
template <class T>
std::pair<T, T> univariate_margin(const BasicPmf<T>& p, int i) {
    const int d = p.dimension();
    detail::check_axis(i, d);
    T one = T(0);
    T total = T(0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        total += p[k];
        if (axis_bit(k, i, d)) one += p[k];
    }
    return {T(total - one), one};
}

template <class T>
BivariateMargin<T> bivariate_margin(const BasicPmf<T>& p, int i, int j) {
    const int d = p.dimension();
    detail::check_pair(i, j, d);
    BivariateMargin<T> m;
    for (auto& row : m.entries) row = {T(0), T(0)};
    for (std::size_t k = 0; k < p.size(); ++k)
        m.entries[static_cast<std::size_t>(axis_bit(k, i, d))][static_cast<std::size_t>(axis_bit(k, j, d))] += p[k];
    return m;
}

/// Second-order moment mu_ij = P(X_i = 1, X_j = 1).
template <class T>
T second_moment(const BasicPmf<T>& p, int i, int j) {
    return bivariate_margin(p, i, j)(1, 1);
}

/// Pearson correlation of X_i and X_j. Throws DegenerateMarginError when a
/// margin is 0 or 1.
template <class T>
double correlation(const BasicPmf<T>& p, int i, int j) {
    const auto [mi0, mi1] = univariate_margin(p, i);
    const auto [mj0, mj1] = univariate_margin(p, j);
    if (mi0 == 0 || mi1 == 0 || mj0 == 0 || mj1 == 0)
        throw DegenerateMarginError("correlation undefined: degenerate univariate margin");
    const T cov = bivariate_margin(p, i, j)(1, 1) - mi1 * mj1;
    const T var = mi1 * mi0 * mj1 * mj0;
    return to_double(cov) / std::sqrt(to_double(var));
}

/// Correlation as an exact rational when the variance product is a perfect
/// square (always the case for uniform margins); nullopt otherwise.
std::optional<Rational> exact_correlation(const ExactPmf& p, int i, int j);

enum class RatioKind { finite, infinite, undefined };

/// Odds ratio with explicit handling of zero cells: a zero denominator gives
/// `infinite` (positive numerator) or `undefined` (0/0).
template <class T>
struct OddsRatio {
    RatioKind kind = RatioKind::undefined;
    T value{};

    bool is_finite() const { return kind == RatioKind::finite; }
    /// +inf for infinite, NaN for undefined.
    double as_double() const {
        switch (kind) {
            case RatioKind::finite: return to_double(value);
            case RatioKind::infinite: return std::numeric_limits<double>::infinity();
            default: return std::numeric_limits<double>::quiet_NaN();
        }
    }
};

namespace detail {
/// prod(numerator) / prod(denominator), classified.
template <class T>
OddsRatio<T> classified_ratio(const std::vector<T>& numerator, const std::vector<T>& denominator) {
    bool num_zero = false;
    bool den_zero = false;
    for (const auto& v : numerator) num_zero = num_zero || v == 0;
    for (const auto& v : denominator) den_zero = den_zero || v == 0;
    if (den_zero) return {num_zero ? RatioKind::undefined : RatioKind::infinite, T(0)};
    if (num_zero) return {RatioKind::finite, T(0)};
    if constexpr (std::is_same_v<T, Rational>) {
        Rational n = 1, q = 1;
        for (const auto& v : numerator) n *= v;
        for (const auto& v : denominator) q *= v;
        return {RatioKind::finite, Rational(n / q)};
    } else {
        // log domain: products of many small cells underflow
        double s = 0.0;
        for (double v : numerator) s += std::log(v);
        for (double v : denominator) s -= std::log(v);
        return {RatioKind::finite, std::exp(s)};
    }
}
}  // namespace detail

/// Odds ratio of the collapsed 2x2 table of (X_i, X_j).
template <class T>
OddsRatio<T> marginal_odds_ratio(const BasicPmf<T>& p, int i, int j) {
    const auto m = bivariate_margin(p, i, j);
    return detail::classified_ratio<T>({m(1, 1), m(0, 0)}, {m(1, 0), m(0, 1)});
}

/// Odds ratio of (X_i, X_j) given the remaining axes fixed at `rest`, whose
/// entries are read in increasing axis order skipping i and j.
template <class T>
OddsRatio<T> conditional_odds_ratio(const BasicPmf<T>& p, int i, int j, const Configuration& rest) {
    const int d = p.dimension();
    detail::check_pair(i, j, d);
    if (rest.dimension() != d - 2) throw DomainError("conditioning configuration must have d - 2 entries");
    std::size_t base = 0;
    int r = 0;
    for (int axis = 0; axis < d; ++axis) {
        if (axis == i || axis == j) continue;
        if (rest[r++]) base |= std::size_t{1} << (d - 1 - axis);
    }
    const std::size_t bi = std::size_t{1} << (d - 1 - i);
    const std::size_t bj = std::size_t{1} << (d - 1 - j);
    return detail::classified_ratio<T>({p[base | bi | bj], p[base]}, {p[base | bi], p[base | bj]});
}

/// Highest-order interaction odds ratio: product of cells with an even
/// number of ones over product of cells with an odd number of ones. At d = 3
/// this is p000 p011 p101 p110 / (p111 p100 p010 p001); at d = 2 it is the
/// ordinary odds ratio.
template <class T>
OddsRatio<T> top_order_odds_ratio(const BasicPmf<T>& p) {
    std::vector<T> even, odd;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (std::popcount(k) % 2 == 0)
            even.push_back(p[k]);
        else
            odd.push_back(p[k]);
    }
    return detail::classified_ratio(even, odd);
}

/// Complement reflection: p'_alpha = p_(1 - alpha), i.e. the reversed cell vector.
template <class T>
BasicPmf<T> reflect(const BasicPmf<T>& p) {
    std::vector<T> cells(p.cells().rbegin(), p.cells().rend());
    return BasicPmf<T>(p.dimension(), std::move(cells));
}

/// True when every univariate margin equals 1/2 (exactly, or within `tol`).
bool has_uniform_margins(const ExactPmf& p);
bool has_uniform_margins(const Pmf& p, double tol);

/// Convex combination sum_i weights[i] * tables[i] without validation of
/// the weights; shared by mixture code paths.
template <class T>
std::vector<T> combine(std::span<const T> weights, std::span<const BasicPmf<T>> tables) {
    std::vector<T> out(tables.empty() ? 0 : tables.front().size(), T(0));
    for (std::size_t i = 0; i < tables.size(); ++i)
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += weights[i] * tables[i][k];
    return out;
}

}  // namespace bintab
