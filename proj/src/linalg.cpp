#include "diffcech/linalg.hpp"

#include "diffcech/errors.hpp"

namespace diffcech {

RowEchelon rref(ScalarMatrix M) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
        std::size_t p = row;
        while (p < M.rows() && M(p, col).is_zero()) ++p;
        if (p == M.rows()) continue;
        M.swap_rows(row, p);
        const Scalar inv = M(row, col).inverse();
        for (std::size_t c = col; c < M.cols(); ++c)
            if (!M(row, c).is_zero()) M(row, c) *= inv;
        for (std::size_t r = 0; r < M.rows(); ++r) {
            if (r == row || M(r, col).is_zero()) continue;
            const Scalar f = M(r, col);
            for (std::size_t c = col; c < M.cols(); ++c)
                if (!M(row, c).is_zero()) M(r, c) -= f * M(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.R = std::move(M);
    return out;
}

std::size_t rank(const ScalarMatrix& M) { return rref(M).pivots.size(); }

ScalarMatrix kernel(const ScalarMatrix& M) {
    RowEchelon e = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    ScalarMatrix K(M.cols(), M.cols() - e.pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        K(free, k) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) K(e.pivots[r], k) = -e.R(r, free);
        ++k;
    }
    return K;
}

std::optional<ScalarVector> solve(const ScalarMatrix& M, const ScalarVector& b) {
    if (b.size() != M.rows()) throw Error("solve: right-hand side has the wrong length");
    ScalarMatrix aug(M.rows(), M.cols() + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
        aug(i, M.cols()) = b[i];
    }
    RowEchelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == M.cols()) return std::nullopt;
    ScalarVector x(M.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.R(r, M.cols());
    return x;
}

ScalarMatrix hconcat(const ScalarMatrix& X, const ScalarMatrix& Y) {
    if (X.rows() != Y.rows()) throw Error("hconcat: row counts differ");
    ScalarMatrix out(X.rows(), X.cols() + Y.cols());
    for (std::size_t i = 0; i < X.rows(); ++i) {
        for (std::size_t j = 0; j < X.cols(); ++j) out(i, j) = X(i, j);
        for (std::size_t j = 0; j < Y.cols(); ++j) out(i, X.cols() + j) = Y(i, j);
    }
    return out;
}

} // namespace diffcech
