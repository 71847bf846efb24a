#include "relgb/linalg.hpp"

#include "relgb/error.hpp"

namespace relgb {

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<Scalar>(cols)); }

std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t matrix_rank(Matrix m, std::size_t cols) { return row_reduce(m, cols).size(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m, std::size_t cols) {
    Matrix r = m;
    std::vector<std::size_t> pivots = row_reduce(r, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols);
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, std::size_t cols, const std::vector<Scalar>& b) {
    if (b.size() != m.size()) throw DimensionError("right-hand side length differs from row count");
    Matrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    std::vector<std::size_t> pivots = row_reduce(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<Scalar> x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t inner, std::size_t cols) {
    Matrix c = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

} // namespace relgb
