#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "fusq/cyclotomic.hpp"

namespace fusq {

/// Dense row-major matrix over Q(zeta_N).
///
/// Shapes follow the convention "columns = source, rows = target": a morphism
/// V -> W with dim V = c and dim W = r is an r x c matrix. Kronecker products
/// use row-major flattening: index (i,j) of A(x)B is i*cols(B)+j, so block
/// (i,j) of A(x)B is A[i][j]*B and flattened triple indices associate on the
/// nose.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols);  // zero-filled
    Mat(int rows, int cols, std::vector<Cyclotomic> entries);
    Mat(std::initializer_list<std::initializer_list<long>> rows);

    static Mat identity(int n);
    static Mat scalar(int n, const Cyclotomic& s);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Cyclotomic& at(int r, int c) const { return e_[idx(r, c)]; }
    Cyclotomic& at(int r, int c) { return e_[idx(r, c)]; }
    const std::vector<Cyclotomic>& entries() const { return e_; }

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    Mat transpose() const;
    Cyclotomic trace() const;

    /// Lifts every entry to the lcm of all entry conductors.
    void canonicalize_conductor();

    std::string to_string() const;

private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * cols_ + c; }
    int rows_, cols_;
    std::vector<Cyclotomic> e_;
};

Mat matmul(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);
Mat scalar_mul(const Cyclotomic& s, const Mat& a);

/// Reference kernels: always serial, kept as the oracle the parallel kernels
/// are tested against.
Mat matmul_serial(const Mat& a, const Mat& b);
Mat kron_serial(const Mat& a, const Mat& b);

/// Number of scalar multiplications below which the parallel kernels fall
/// back to the serial path.
void set_parallel_threshold(long ops);
long parallel_threshold();

/// Column vector with the rows of m stacked in row-major order.
Mat vectorize(const Mat& m);
Mat unvectorize(const Mat& v, int rows, int cols);

}  // namespace fusq
