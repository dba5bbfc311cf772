#include "jacklab/linalg.hpp"

#include <utility>

namespace jacklab {

std::vector<int> rref(RationalMatrix& m, int cols) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix m, int cols) {
    const auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    RationalMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug, 2 * n);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RationalMatrix c(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

}  // namespace jacklab
