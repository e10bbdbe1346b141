#include "fusq/linalg.hpp"

#include <stdexcept>

namespace fusq {

Rref rref(const Mat& a) {
    Rref res;
    res.r = a;
    Mat& m = res.r;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Cyclotomic inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Cyclotomic factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

int rank(const Mat& a) { return rref(a).rank; }

std::vector<Mat> kernel_basis(const Mat& a) {
    Rref rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<Mat> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Mat v(a.cols(), 1);
        v.at(f, 0) = Cyclotomic(1);
        for (size_t p = 0; p < rr.pivot_cols.size(); ++p)
            v.at(rr.pivot_cols[p], 0) = -rr.r.at(static_cast<int>(p), f);
        // first nonzero entry -> 1
        for (int i = 0; i < v.rows(); ++i) {
            if (!v.at(i, 0).is_zero()) {
                Cyclotomic s = v.at(i, 0).inverse();
                for (int k = i; k < v.rows(); ++k) v.at(k, 0) *= s;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    Mat aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    Rref rr = rref(aug);
    // Inconsistent iff some pivot lies in the b-part.
    for (int c : rr.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (size_t p = 0; p < rr.pivot_cols.size(); ++p)
        for (int j = 0; j < b.cols(); ++j)
            x.at(rr.pivot_cols[p], j) = rr.r.at(static_cast<int>(p), a.cols() + j);
    return x;
}

std::optional<std::vector<Cyclotomic>> expand_in_basis(const std::vector<Mat>& basis,
                                                       const Mat& target) {
    long n = static_cast<long>(target.rows()) * target.cols();
    Mat a(static_cast<int>(n), static_cast<int>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].rows() != target.rows() || basis[k].cols() != target.cols())
            throw std::invalid_argument("expand_in_basis: shape mismatch");
        Mat v = vectorize(basis[k]);
        for (int i = 0; i < v.rows(); ++i) a.at(i, static_cast<int>(k)) = v.at(i, 0);
    }
    auto x = solve(a, vectorize(target));
    if (!x) return std::nullopt;
    std::vector<Cyclotomic> coeffs(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) coeffs[k] = x->at(static_cast<int>(k), 0);
    return coeffs;
}

}  // namespace fusq
