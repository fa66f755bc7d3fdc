#pragma once

// Exact linear algebra over Q(a).

#include "diffcech/matrix.hpp"
#include "diffcech/rational_function.hpp"

#include <optional>
#include <vector>

namespace diffcech {

using ScalarMatrix = Matrix<Scalar>;
using ScalarVector = std::vector<Scalar>;

struct RowEchelon {
    ScalarMatrix R;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(ScalarMatrix M);
std::size_t rank(const ScalarMatrix& M);
/// Basis of the null space as columns, one per free column in increasing order.
ScalarMatrix kernel(const ScalarMatrix& M);
std::optional<ScalarVector> solve(const ScalarMatrix& M, const ScalarVector& b);

/// Column concatenation [X | Y]; both must have the same number of rows.
ScalarMatrix hconcat(const ScalarMatrix& X, const ScalarMatrix& Y);

} // namespace diffcech
