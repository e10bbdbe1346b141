#include "doctest.h"

#include "fusq/linalg.hpp"
#include "fusq/matrix.hpp"
#include "fusq/rng.hpp"

using namespace fusq;

TEST_CASE("matmul identity") {
    Mat i2 = Mat::identity(2);
    CHECK(matmul(i2, i2) == i2);
}

TEST_CASE("identity is neutral for random matrices") {
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        int r = 1 + static_cast<int>(rng.next_range(4));
        int c = 1 + static_cast<int>(rng.next_range(4));
        Mat a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = rng.small_scalar(5);
        CHECK(matmul(a, Mat::identity(c)) == a);
        CHECK(matmul(Mat::identity(r), a) == a);
    }
}

TEST_CASE("kron places blocks row-major") {
    Mat a{{0, 1}, {0, 0}};
    Mat k = kron(a, Mat::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 2) == Cyclotomic(1));
    CHECK(k.at(1, 3) == Cyclotomic(1));
    CHECK(k.at(0, 0).is_zero());
    // block (0,1) of a(x)I2 is a[0][1]*I2
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) CHECK(k.at(p, 2 + q) == (p == q ? Cyclotomic(1) : Cyclotomic(0)));
}

TEST_CASE("direct_sum is diagonal") {
    Mat a{{2}};
    Mat b{{3}};
    Mat d = direct_sum(a, b);
    CHECK(d == Mat{{2, 0}, {0, 3}});
}

namespace {
Mat random_mat(Rng& rng, int r, int c, long conductor) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rng.small_scalar(conductor);
    return m;
}
}  // namespace

TEST_CASE("parallel kernels agree with serial reference") {
    Rng rng(7);
    long saved = parallel_threshold();
    set_parallel_threshold(1);  // force the parallel path
    for (int t = 0; t < 10; ++t) {
        Mat a = random_mat(rng, 7, 5, 4);
        Mat b = random_mat(rng, 5, 6, 4);
        CHECK(matmul(a, b) == matmul_serial(a, b));
        CHECK(kron(a, b) == kron_serial(a, b));
    }
    set_parallel_threshold(saved);
}

TEST_CASE("kron is associative on flattened indices") {
    Rng rng(11);
    Mat a = random_mat(rng, 2, 3, 4);
    Mat b = random_mat(rng, 3, 2, 4);
    Mat c = random_mat(rng, 2, 2, 4);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
}

TEST_CASE("kron mixed-product identity") {
    Rng rng(13);
    Mat a = random_mat(rng, 2, 3, 3);
    Mat b = random_mat(rng, 3, 2, 3);
    Mat c = random_mat(rng, 2, 2, 3);
    Mat d = random_mat(rng, 2, 3, 3);
    CHECK(matmul(kron(a, c), kron(b, d)) == kron(matmul(a, b), matmul(c, d)));
}

TEST_CASE("rank and kernel") {
    CHECK(rank(Mat::identity(3)) == 3);

    Mat row{{1, 1}};
    auto kb = kernel_basis(row);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0].at(0, 0) == Cyclotomic(1));
    CHECK(kb[0].at(1, 0) == Cyclotomic(-1));

    Mat zero(2, 2);
    auto kz = kernel_basis(zero);
    REQUIRE(kz.size() == 2);
    CHECK(kz[0].at(0, 0) == Cyclotomic(1));
    CHECK(kz[0].at(1, 0).is_zero());
    CHECK(kz[1].at(1, 0) == Cyclotomic(1));
}

TEST_CASE("kernel vectors are killed and rank-nullity holds") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        int r = 1 + static_cast<int>(rng.next_range(5));
        int c = 1 + static_cast<int>(rng.next_range(5));
        Mat a = random_mat(rng, r, c, 6);
        auto kb = kernel_basis(a);
        CHECK(static_cast<int>(kb.size()) + rank(a) == c);
        for (const auto& v : kb) CHECK(matmul(a, v).is_zero());
    }
}

TEST_CASE("kernel basis is reproducible") {
    Rng rng(19);
    Mat a = random_mat(rng, 4, 6, 4);
    auto k1 = kernel_basis(a);
    auto k2 = kernel_basis(a);
    REQUIRE(k1.size() == k2.size());
    for (size_t i = 0; i < k1.size(); ++i) CHECK(k1[i] == k2[i]);
}

TEST_CASE("solve finds exact solutions") {
    Mat a{{1, 2}, {3, 4}};
    Mat b{{5}, {6}};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(matmul(a, *x) == b);

    Mat sing{{1, 1}, {1, 1}};
    Mat bad{{1}, {2}};
    CHECK(!solve(sing, bad).has_value());
}

TEST_CASE("expand_in_basis recovers coefficients") {
    Mat e1{{1, 0}};
    Mat e2{{0, 1}};
    Mat target{{3, -2}};
    auto c = expand_in_basis({e1, e2}, target);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Cyclotomic(3));
    CHECK((*c)[1] == Cyclotomic(-2));
}
