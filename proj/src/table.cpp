#include "bintab/table.hpp"

#include <numeric>

namespace bintab {

void check_dimension(int d) {
    if (d < 1 || d > kMaxDimension)
        throw DomainError("table dimension " + std::to_string(d) + " outside [1, " + std::to_string(kMaxDimension) + "]");
}

Configuration::Configuration(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw DomainError("configuration entries must be 0 or 1");
}

Configuration Configuration::parse(const std::string& bits) {
    std::vector<std::uint8_t> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("configuration '" + bits + "' is not a bit string");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Configuration(std::move(out));
}

Configuration Configuration::from_offset(std::size_t offset, int d) {
    check_dimension(d);
    if (offset >= cell_count(d)) throw DomainError("cell offset out of range");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(d));
    for (int axis = 0; axis < d; ++axis) bits[static_cast<std::size_t>(axis)] = static_cast<std::uint8_t>(axis_bit(offset, axis, d));
    return Configuration(std::move(bits));
}

int Configuration::weight() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

std::size_t Configuration::offset() const {
    std::size_t k = 0;
    for (auto b : bits_) k = (k << 1) | b;
    return k;
}

Configuration Configuration::complement() const {
    std::vector<std::uint8_t> bits(bits_);
    for (auto& b : bits) b = static_cast<std::uint8_t>(1 - b);
    return Configuration(std::move(bits));
}

std::string Configuration::to_string() const {
    std::string s;
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::size_t cell_index(const Configuration& alpha) { return alpha.offset() + 1; }

Configuration configuration(std::size_t k, int d) {
    if (k == 0) throw DomainError("cell index is 1-based");
    return Configuration::from_offset(k - 1, d);
}

Pmf to_floating(const ExactPmf& p) {
    std::vector<double> cells;
    cells.reserve(p.size());
    for (const auto& c : p.cells()) cells.push_back(c.get_d());
    return normalized(p.dimension(), std::move(cells));
}

ExactPmf to_exact(const Pmf& p) {
    std::vector<Rational> cells;
    cells.reserve(p.size());
    Rational total = 0;
    for (double c : p.cells()) {
        cells.push_back(rational_from_double(c));
        total += cells.back();
    }
    for (auto& c : cells) c /= total;
    return ExactPmf(p.dimension(), std::move(cells));
}

Pmf normalized(int d, std::vector<double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0) throw DomainError("negative weight in table");
        total += w;
    }
    if (total <= 0) throw DomainError("table has zero total mass");
    for (auto& w : weights) w /= total;
    return Pmf(d, std::move(weights));
}

Integer CountTable::total() const {
    Integer t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

ExactPmf CountTable::pmf() const {
    const Integer t = total();
    if (t <= 0) throw DomainError("count table has zero total");
    std::vector<Rational> cells;
    cells.reserve(counts.size());
    for (const auto& c : counts) {
        if (c < 0) throw DomainError("negative count");
        Rational r(c, t);
        r.canonicalize();
        cells.push_back(r);
    }
    return ExactPmf(d, std::move(cells));
}

std::vector<std::pair<int, int>> axis_pairs(int d) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
    return pairs;
}

std::optional<Rational> exact_correlation(const ExactPmf& p, int i, int j) {
    const auto [mi0, mi1] = univariate_margin(p, i);
    const auto [mj0, mj1] = univariate_margin(p, j);
    if (mi0 == 0 || mi1 == 0 || mj0 == 0 || mj1 == 0)
        throw DegenerateMarginError("correlation undefined: degenerate univariate margin");
    const Rational cov = second_moment(p, i, j) - mi1 * mj1;
    const Rational var = mi1 * mi0 * mj1 * mj0;
    Rational root;
    if (!exact_sqrt(var, root)) return std::nullopt;
    return Rational(cov / root);
}

bool has_uniform_margins(const ExactPmf& p) {
    const Rational half(1, 2);
    for (int i = 0; i < p.dimension(); ++i)
        if (univariate_margin(p, i).second != half) return false;
    return true;
}

bool has_uniform_margins(const Pmf& p, double tol) {
    for (int i = 0; i < p.dimension(); ++i)
        if (std::abs(univariate_margin(p, i).second - 0.5) > tol) return false;
    return true;
}

}  // namespace bintab
