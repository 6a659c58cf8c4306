#include "posy/linalg.hpp"

#include "posy/errors.hpp"

namespace posy::linalg {

std::size_t rank(const QMatrix& rows) {
    QMatrix m = rows;
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

bool independent(const std::vector<QVector>& vectors) { return rank(vectors) == vectors.size(); }

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DimensionMismatch("solve: rhs length mismatch");
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatch("solve: matrix is not square");
        m[i] = a[i];
        m[i].push_back(b[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[c], m[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    QVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

QMatrix transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix t(a.front().size(), QVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

}  // namespace posy::linalg
