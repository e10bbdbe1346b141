// Compares the OpenMP kernels against the serial reference on exact
// cyclotomic matrices, plus one fusion-heavy workload. Results are checked
// for equality while timing, so the benchmark doubles as a consistency run.

#include <chrono>
#include <iostream>

#include "fusq/catmodule.hpp"
#include "fusq/suites.hpp"

using namespace fusq;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

Mat random_mat(Rng& rng, int r, int c, long conductor) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rng.small_scalar(conductor);
    return m;
}

void bench_matmul(int n, long conductor) {
    Rng rng(1234);
    Mat a = random_mat(rng, n, n, conductor);
    Mat b = random_mat(rng, n, n, conductor);

    auto t0 = clk::now();
    Mat serial = matmul_serial(a, b);
    double t_serial = ms_since(t0);

    long saved = parallel_threshold();
    set_parallel_threshold(1);
    t0 = clk::now();
    Mat parallel = matmul(a, b);
    double t_parallel = ms_since(t0);
    set_parallel_threshold(saved);

    bool same = serial == parallel;
    std::cout << "matmul  n=" << n << " conductor=" << conductor << "  serial " << t_serial
              << " ms, parallel " << t_parallel << " ms, speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0) << (same ? "" : "  MISMATCH")
              << "\n";
}

void bench_kron(int n, long conductor) {
    Rng rng(99);
    Mat a = random_mat(rng, n, n, conductor);
    Mat b = random_mat(rng, n, n, conductor);

    auto t0 = clk::now();
    Mat serial = kron_serial(a, b);
    double t_serial = ms_since(t0);

    long saved = parallel_threshold();
    set_parallel_threshold(1);
    t0 = clk::now();
    Mat parallel = kron(a, b);
    double t_parallel = ms_since(t0);
    set_parallel_threshold(saved);

    bool same = serial == parallel;
    std::cout << "kron    n=" << n << " conductor=" << conductor << "  serial " << t_serial
              << " ms, parallel " << t_parallel << " ms, speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0) << (same ? "" : "  MISMATCH")
              << "\n";
}

void bench_fusion_suite(int trials) {
    CenterObject z = setup_rep_q8_v();
    auto t0 = clk::now();
    Report r = monoidal_suite(z, 7, trials);
    double t = ms_since(t0);
    std::cout << "monoidal suite rep(Q8), " << trials << " trials: " << t << " ms, "
              << (r.all_pass() ? "pass" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    std::cout << "exact-kernel benchmark (scale " << scale << ")\n";
    for (int n : {24, 48}) bench_matmul(n * scale, 4);
    for (int n : {8, 12}) bench_kron(n * scale, 4);
    bench_fusion_suite(25 * scale);
    return 0;
}
