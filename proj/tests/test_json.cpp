#include "doctest.h"

#include <memory>

#include "fusq/suites.hpp"

using namespace fusq;

TEST_CASE("cyclotomic json round-trip is bit-exact") {
    Cyclotomic c = Cyclotomic(Rational(-3, 7)) * Cyclotomic::root_of_unity(12, 5) +
                   Cyclotomic(Rational(1, 2));
    json j = to_json(c);
    Cyclotomic back = cyclotomic_from_json(j);
    CHECK(back == c);
    CHECK(to_json(back) == j);
    CHECK(j.at("conductor") == 12);
}

TEST_CASE("matrix json round-trip") {
    Rng rng(1);
    Mat m(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = rng.small_scalar(6);
    json j = to_json(m);
    CHECK(mat_from_json(j) == m);
    CHECK(to_json(mat_from_json(j)) == j);
}

TEST_CASE("quiver and module json round-trip") {
    Quiver q = build_quiver({{1, 2}, {0, 1}});
    json j = to_json(q);
    Quiver back = quiver_from_json(j);
    CHECK(back.n_vertices == q.n_vertices);
    CHECK(back.arrows.size() == q.arrows.size());
    CHECK(to_json(back) == j);

    QuiverModule m;
    m.dims = {1, 2};
    Rng rng(2);
    for (const auto& a : q.arrows) {
        Mat f(m.dims[static_cast<size_t>(a.dst)], m.dims[static_cast<size_t>(a.src)]);
        for (int i = 0; i < f.rows(); ++i)
            for (int c = 0; c < f.cols(); ++c) f.at(i, c) = rng.small_scalar(4);
        m.maps.push_back(std::move(f));
    }
    json jm = to_json(q, m);
    CHECK(quiver_module_from_json(q, jm) == m);
    CHECK(to_json(q, quiver_module_from_json(q, jm)) == jm);
}

TEST_CASE("backend json round-trip") {
    for (Backend b : {Backend::pointed_cyclic(4), Backend::rep_q8()}) {
        json j = to_json(b);
        Backend back = backend_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(back.rank() == b.rank());
        CHECK(back.kind() == b.kind());
    }
}

TEST_CASE("center object and module json round-trip") {
    CenterObject z = setup_pointed_cycle(3);
    json j = to_json(z);
    CenterObject back = center_from_json(z.backend, j);
    CHECK(back.same_as(z));
    CHECK(to_json(back) == j);

    Rng rng(3);
    CatModule m = random_module(z, 2, rng);
    json jm = to_json(m);
    CatModule mback = cat_module_from_json(z.backend, jm);
    CHECK(mback.f == m.f);
    CHECK(to_json(mback) == jm);
}

TEST_CASE("shorthand center kinds parse") {
    auto b = std::make_shared<Backend>(Backend::rep_q8());
    json junit{{"kind", "unit"}};
    CHECK(center_from_json(b, junit).z.dim == 1);
    int v = -1;
    for (int i = 0; i < b->rank(); ++i)
        if (b->simple_dim(i) == 2) v = i;
    json jflip{{"kind", "flip"}, {"object", json{{"summands", json::array({v})}}}};
    CHECK(center_from_json(b, jflip).z.dim == 2);
    json jdouble{{"kind", "double"}, {"object", json{{"summands", json::array({v})}}}};
    CHECK(center_from_json(b, jdouble).z.dim == 4);
}

TEST_CASE("relation json round-trip") {
    Relation r = taft_relation(3, Cyclotomic::root_of_unity(3, 1));
    json j = to_json(r);
    Relation back = relation_from_json(r.z.backend, j);
    CHECK(back.length == r.length);
    CHECK(back.phi == r.phi);
    CHECK(validate_q_relation(back).ok);
    CHECK(to_json(back) == j);
}

TEST_CASE("report json shape") {
    Report rep = rank2_classification_suite();
    json j = rep.to_json();
    CHECK(j.at("pass") == true);
    CHECK(j.at("checks").size() == 3);
}
