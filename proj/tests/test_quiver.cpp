#include "doctest.h"

#include <set>

#include "fusq/quiver.hpp"
#include "fusq/rng.hpp"

using namespace fusq;

namespace {

Quiver jordan() { return build_quiver({{1}}); }
Quiver two_cycle() { return build_quiver({{0, 1}, {1, 0}}); }
Quiver three_cycle() { return build_quiver({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }

QuiverModule random_module(const Quiver& q, Rng& rng, int maxdim) {
    QuiverModule m;
    m.dims.resize(q.n_vertices);
    for (int& d : m.dims) d = 1 + static_cast<int>(rng.next_range(maxdim));
    for (const auto& a : q.arrows) {
        Mat f(m.dims[a.dst], m.dims[a.src]);
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < f.cols(); ++j) f.at(i, j) = rng.small_scalar(4);
        m.maps.push_back(std::move(f));
    }
    return m;
}

std::vector<Mat> random_gauge(const Quiver& q, const QuiverModule& m, Rng& rng) {
    // upper triangular with unit diagonal plus a permutation stays invertible
    std::vector<Mat> g;
    for (int d : m.dims) {
        Mat u = Mat::identity(d);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) u.at(i, j) = rng.small_scalar(4);
        g.push_back(u);
    }
    return g;
}

}  // namespace

TEST_CASE("build and sum") {
    Quiver j = jordan();
    CHECK(j.arrows.size() == 1);
    Quiver j2 = sum_quivers(j, build_quiver({{1}}));
    CHECK(j2.adjacency()[0][0] == 2);
    CHECK_THROWS(sum_quivers(j, two_cycle()));
    CHECK(two_cycle().adjacency() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("basic path enumeration") {
    CHECK(enumerate_basic_paths(jordan(), 3, 0, 0).size() == 1);
    CHECK(enumerate_basic_paths(three_cycle(), 3, 0, 0).size() == 1);
    CHECK(enumerate_basic_paths(two_cycle(), 2, 0, 1).empty());
    CHECK(enumerate_basic_paths(two_cycle(), 0, 0, 0).size() == 1);
    CHECK(enumerate_basic_paths(two_cycle(), 0, 0, 1).empty());
}

TEST_CASE("path action") {
    Quiver j = jordan();
    QuiverModule m{{1}, {Mat{{3}}}};
    Path loop2{0, {0, 0}};
    CHECK(path_action(j, m, loop2) == Mat{{9}});
    Path lazy{0, {}};
    CHECK(path_action(j, m, lazy) == Mat::identity(1));

    Quiver c2 = two_cycle();
    QuiverModule mc{{1, 1}, {Mat{{1}}, Mat{{2}}}};
    Path ba{0, {0, 1}};  // alpha then beta
    CHECK(path_action(c2, mc, ba) == Mat{{2}});
}

TEST_CASE("path action is multiplicative on random composable paths") {
    Rng rng(101);
    Quiver q = three_cycle();
    for (int t = 0; t < 20; ++t) {
        QuiverModule m = random_module(q, rng, 3);
        int i = static_cast<int>(rng.next_range(3));
        for (int l1 = 1; l1 <= 2; ++l1)
            for (int l2 = 1; l2 <= 2; ++l2)
                for (int mid = 0; mid < 3; ++mid)
                    for (const Path& alpha : enumerate_basic_paths(q, l1, i, mid))
                        for (int j = 0; j < 3; ++j)
                            for (const Path& beta : enumerate_basic_paths(q, l2, mid, j)) {
                                Path comp = alpha;
                                comp.arrows.insert(comp.arrows.end(), beta.arrows.begin(),
                                                   beta.arrows.end());
                                CHECK(path_action(q, m, comp) ==
                                      matmul(path_action(q, m, beta), path_action(q, m, alpha)));
                            }
    }
}

TEST_CASE("coproduct") {
    Quiver c2 = two_cycle();
    Path lazy{0, {}};
    auto d0 = coproduct(c2, lazy);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].first == lazy);
    CHECK(d0[0].second == lazy);

    Path alpha{0, {0}};
    auto d1 = coproduct(c2, alpha);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0].first == alpha);          // (alpha, e_0)
    CHECK(d1[0].second == Path{0, {}});
    CHECK(d1[1].first == Path{1, {}});    // (e_1, alpha)
    CHECK(d1[1].second == alpha);

    Path ba{0, {0, 1}};
    CHECK(coproduct(c2, ba).size() == 3);
}

TEST_CASE("coproduct is coassociative up to length 5") {
    Quiver q = three_cycle();
    for (int len = 0; len <= 5; ++len) {
        for (int from = 0; from < 3; ++from)
            for (int to = 0; to < 3; ++to)
                for (const Path& p : enumerate_basic_paths(q, len, from, to)) {
                    std::multiset<std::vector<std::vector<int>>> lhs, rhs;
                    for (const auto& [b, a] : coproduct(q, p))
                        for (const auto& [c, b2] : coproduct(q, b))
                            lhs.insert({c.arrows, b2.arrows, a.arrows});
                    for (const auto& [b, a] : coproduct(q, p))
                        for (const auto& [b2, a2] : coproduct(q, a))
                            rhs.insert({b.arrows, b2.arrows, a2.arrows});
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("gauge action is a group action and preserves cycle traces") {
    Rng rng(202);
    Quiver q = two_cycle();
    for (int t = 0; t < 10; ++t) {
        QuiverModule m = random_module(q, rng, 3);
        auto g1 = random_gauge(q, m, rng);
        auto g2 = random_gauge(q, m, rng);
        QuiverModule lhs = gauge_act(q, g2, gauge_act(q, g1, m));
        std::vector<Mat> g21;
        for (size_t i = 0; i < g1.size(); ++i) g21.push_back(matmul(g2[i], g1[i]));
        CHECK(lhs == gauge_act(q, g21, m));
        // h = g is a morphism M -> g |> M
        CHECK(is_module_morphism(q, g1, m, gauge_act(q, g1, m)));
        // trace invariance on cycles
        for (const Path& w : enumerate_basic_paths(q, 2, 0, 0)) {
            CHECK(path_action(q, m, w).trace() ==
                  path_action(q, gauge_act(q, g1, m), w).trace());
        }
    }
}

TEST_CASE("1-dim gauge fixes the jordan module") {
    Quiver j = jordan();
    QuiverModule m{{1}, {Mat{{5}}}};
    CHECK(gauge_act(j, {Mat{{7}}}, m) == m);
}

TEST_CASE("zero and identity morphisms") {
    Rng rng(303);
    Quiver q = two_cycle();
    QuiverModule m = random_module(q, rng, 2);
    std::vector<Mat> id, zero;
    for (int d : m.dims) {
        id.push_back(Mat::identity(d));
        zero.push_back(Mat(d, d));
    }
    CHECK(is_module_morphism(q, id, m, m));
    CHECK(is_module_morphism(q, zero, m, m));
}

TEST_CASE("local nilpotence") {
    Quiver j = jordan();
    auto r0 = is_locally_nilpotent(j, {{1}, {Mat{{0}}}}, 10);
    CHECK(r0.verdict == NilpotenceResult::Verdict::yes);
    CHECK(r0.witness_degree == 1);

    auto r1 = is_locally_nilpotent(j, {{1}, {Mat{{1}}}}, 10);
    CHECK(r1.verdict == NilpotenceResult::Verdict::no);

    QuiverModule nil{{2}, {Mat{{0, 1}, {0, 0}}}};
    auto r2 = is_locally_nilpotent(j, nil, 10);
    CHECK(r2.verdict == NilpotenceResult::Verdict::yes);
    CHECK(r2.witness_degree == 2);
}

TEST_CASE("apply_quiver_morphism") {
    Quiver j = jordan();
    QuiverModule m{{1}, {Mat{{3}}}};

    std::vector<std::vector<Mat>> id_phi{{Mat{{1}}}};
    CHECK(apply_quiver_morphism(j, j, id_phi, m) == m);

    std::vector<std::vector<Mat>> zero_phi{{Mat{{0}}}};
    CHECK(apply_quiver_morphism(j, j, zero_phi, m).maps[0].is_zero());

    std::vector<std::vector<Mat>> twice{{Mat{{2}}}};
    CHECK(apply_quiver_morphism(j, j, twice, m).maps[0] == Mat{{6}});
}
