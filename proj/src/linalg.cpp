#include "tropsl/linalg.hpp"

#include "tropsl/error.hpp"

namespace tropsl {

Rational determinant(RationalMatrix a) {
    if (!a.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0) continue;
            Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

std::vector<RationalVector> rref(std::vector<RationalVector> rows, std::size_t cols, std::vector<std::size_t>* pivots) {
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    rows.resize(r);
    if (pivots) *pivots = std::move(piv);
    return rows;
}

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t cols) { return rref(rows, cols).size(); }

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    auto r = rref(rows, cols, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalVector reduce_modulo(RationalVector v, const std::vector<RationalVector>& rref_rows,
                             const std::vector<std::size_t>& pivots) {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        Rational f = v[pivots[k]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rref_rows[k][j];
    }
    return v;
}

}  // namespace tropsl
