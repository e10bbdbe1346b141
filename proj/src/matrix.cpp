#include "fusq/matrix.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef FUSQ_HAVE_OPENMP
#include <omp.h>
#endif

namespace fusq {

namespace {
std::atomic<long> g_par_threshold{4096};

[[noreturn]] void shape_error(const char* op, const Mat& a, const Mat& b) {
    std::ostringstream os;
    os << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
       << b.cols();
    throw std::invalid_argument(os.str());
}
}  // namespace

void set_parallel_threshold(long ops) { g_par_threshold = ops; }
long parallel_threshold() { return g_par_threshold; }

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Mat::Mat(int rows, int cols, std::vector<Cyclotomic> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match shape");
    canonicalize_conductor();
}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged initializer");
        for (long v : r) e_.emplace_back(v);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

Mat Mat::scalar(int n, const Cyclotomic& s) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) shape_error("add", *this, o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) shape_error("sub", *this, o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Cyclotomic Mat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Cyclotomic t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

void Mat::canonicalize_conductor() {
    long m = 1;
    for (const auto& x : e_) m = std::lcm(m, x.conductor());
    if (m == 1) return;
    for (auto& x : e_)
        if (x.conductor() != m) x = x.lifted(m);
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

Mat matmul_serial(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) shape_error("matmul", a, b);
    Mat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Cyclotomic& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

Mat kron_serial(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Cyclotomic& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) {
                    if (b.at(p, q).is_zero()) continue;
                    r.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
                }
        }
    return r;
}

Mat matmul(const Mat& a, const Mat& b) {
#ifdef FUSQ_HAVE_OPENMP
    long ops = static_cast<long>(a.rows()) * a.cols() * b.cols();
    if (ops >= g_par_threshold) {
        if (a.cols() != b.rows()) shape_error("matmul", a, b);
        Mat r(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
        for (int i = 0; i < a.rows(); ++i) {
            for (int k = 0; k < a.cols(); ++k) {
                const Cyclotomic& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols(); ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += aik * b.at(k, j);
                }
            }
        }
        return r;
    }
#endif
    return matmul_serial(a, b);
}

Mat kron(const Mat& a, const Mat& b) {
#ifdef FUSQ_HAVE_OPENMP
    long ops = static_cast<long>(a.rows()) * a.cols() * b.rows() * b.cols();
    if (ops >= g_par_threshold) {
        Mat r(a.rows() * b.rows(), a.cols() * b.cols());
#pragma omp parallel for collapse(2) schedule(static)
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) {
                const Cyclotomic& aij = a.at(i, j);
                if (aij.is_zero()) continue;
                for (int p = 0; p < b.rows(); ++p)
                    for (int q = 0; q < b.cols(); ++q) {
                        if (b.at(p, q).is_zero()) continue;
                        r.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
                    }
            }
        return r;
    }
#endif
    return kron_serial(a, b);
}

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat r(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

Mat scalar_mul(const Cyclotomic& s, const Mat& a) {
    Mat r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) *= s;
    return r;
}

Mat vectorize(const Mat& m) {
    Mat v(m.rows() * m.cols(), 1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
    return v;
}

Mat unvectorize(const Mat& v, int rows, int cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw std::invalid_argument("unvectorize shape");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v.at(i * cols + j, 0);
    return m;
}

}  // namespace fusq
