#pragma once

// Exact dense linear algebra over a field type F (Rat, QRat, ...).
// F needs +, -, *, /, ==, default construction to zero, and construction
// from int.  Everything here is small and runs over exact scalars, so plain
// Gaussian elimination is adequate.

#include <vector>

namespace hallwright {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Row-reduce in place; returns pivot column indices.
template <class F>
std::vector<int> row_reduce(Matrix<F>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == F(0)) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        F inv = F(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == F(0)) continue;
            F f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return static_cast<int>(row_reduce(m).size());
}

// Basis of the right kernel {x : m x = 0}.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m, size_t cols) {
    std::vector<int> pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    Matrix<F> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(cols, F(0));
        v[fc] = F(1);
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            size_t pc = static_cast<size_t>(pivots[pi]);
            if (pi < m.size()) v[pc] = F(0) - m[pi][fc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Is b in the row span of m?
template <class F>
bool in_row_span(Matrix<F> m, const std::vector<F>& b) {
    int r0 = rank(m);
    m.push_back(b);
    return rank(std::move(m)) == r0;
}

} // namespace hallwright
