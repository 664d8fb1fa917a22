#include "oracles.hpp"
#include "bintab/linalg.hpp"

#include <doctest.h>

using namespace bintab;
using linalg::Matrix;

namespace {

std::vector<Rational> times(const Matrix& m, const std::vector<Rational>& x) {
    std::vector<Rational> out;
    for (const auto& row : m) {
        Rational acc = 0;
        for (std::size_t k = 0; k < x.size(); ++k) acc += row[k] * x[k];
        out.push_back(acc);
    }
    return out;
}

}  // namespace

TEST_CASE("rank and kernel of small matrices") {
    const Matrix m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(linalg::rank(m, 3) == 2);
    const auto k = linalg::kernel_basis(m, 3);
    REQUIRE(k.size() == 1);
    CHECK(times(m, k[0]) == std::vector<Rational>(3, Rational(0)));
    CHECK(linalg::rank({}, 4) == 0);
    CHECK(linalg::kernel_basis({}, 2).size() == 2);
}

TEST_CASE("rref is reduced") {
    const Matrix m = {{oracle::ratio(1, 3), 1, 0, 2}, {0, 0, 1, oracle::ratio(-1, 2)}, {oracle::ratio(2, 3), 2, 1, oracle::ratio(7, 2)}};
    const auto e = linalg::rref(m, 4);
    CHECK(e.rows.size() == 2);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        CHECK(e.rows[r][e.pivots[r]] == 1);
        for (std::size_t q = 0; q < e.rows.size(); ++q)
            if (q != r) CHECK(e.rows[q][e.pivots[r]] == 0);
    }
}

TEST_CASE("kernel dimension is columns minus rank") {
    Matrix m;
    for (int r = 0; r < 5; ++r) {
        std::vector<Rational> row;
        for (int c = 0; c < 9; ++c) row.emplace_back((r * 7 + c * c * 3) % 5 - 2);
        m.push_back(row);
    }
    const auto k = linalg::kernel_basis(m, 9);
    CHECK(k.size() + linalg::rank(m, 9) == 9);
    for (const auto& v : k) CHECK(times(m, v) == std::vector<Rational>(5, Rational(0)));
    CHECK(linalg::rank(k, 9) == k.size());
}
