#include "bintab/linalg.hpp"

#include "bintab/errors.hpp"

namespace bintab::linalg {

Echelon rref(Matrix m, std::size_t columns) {
    for (const auto& row : m)
        if (row.size() != columns) throw DomainError("ragged matrix");
    Echelon out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < columns && lead < m.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[lead], m[pivot]);
        const Rational inv = 1 / m[lead][col];
        for (auto& v : m[lead]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == lead || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < columns; ++c) m[r][c] -= f * m[lead][c];
        }
        out.pivots.push_back(col);
        ++lead;
    }
    m.resize(lead);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m, std::size_t columns) { return rref(m, columns).pivots.size(); }

Matrix kernel_basis(const Matrix& m, std::size_t columns) {
    const Echelon e = rref(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Matrix basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace bintab::linalg
