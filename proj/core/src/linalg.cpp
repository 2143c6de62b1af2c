#include "zmlp/linalg.hpp"

#include <stdexcept>

namespace zmlp {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (std::size_t j = c; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[row][j] != 0) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols) {
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("row length mismatch");
    std::vector<std::size_t> piv = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve_unique(RationalMatrix m, const RationalVector& rhs, std::size_t cols) {
    if (m.size() != rhs.size()) throw std::invalid_argument("right-hand side length mismatch");
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    std::vector<std::size_t> piv = rref(m, cols + 1);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;  // inconsistent
    if (piv.size() != cols) return std::nullopt;
    RationalVector x(cols);
    for (std::size_t r = 0; r < cols; ++r) x[piv[r]] = m[r][cols];
    return x;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}  // namespace zmlp
