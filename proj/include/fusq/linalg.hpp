#pragma once

#include <optional>

#include "fusq/matrix.hpp"

namespace fusq {

struct Rref {
    Mat r;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Reduced row echelon form with the fixed pivot order: leftmost unresolved
/// column, topmost nonzero row. Exact, so the result is deterministic.
Rref rref(const Mat& a);

int rank(const Mat& a);

/// Kernel basis as n x 1 columns, one per free column in ascending order,
/// each normalized so its first nonzero entry is 1.
std::vector<Mat> kernel_basis(const Mat& a);

/// One exact solution of A x = b (b may have several columns); free
/// variables are set to zero. Empty if inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Coefficients c with sum_i c_i * basis_i = target, all matrices of equal
/// shape. Empty if target is outside the span.
std::optional<std::vector<Cyclotomic>> expand_in_basis(const std::vector<Mat>& basis,
                                                       const Mat& target);

}  // namespace fusq
