#include "fusq/json_io.hpp"

#include <stdexcept>

namespace fusq {

json to_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
    return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    if (j.is_number_integer()) return Cyclotomic(j.get<long>());
    if (j.is_string()) return Cyclotomic(Rational(j.get<std::string>()));
    long conductor = j.at("conductor").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& e : j.at("coeffs")) {
        Rational r(e.get<std::string>());
        r.canonicalize();
        coeffs.push_back(std::move(r));
    }
    return Cyclotomic(conductor, std::move(coeffs));
}

json to_json(const Mat& m) {
    Mat c = m;
    c.canonicalize_conductor();
    json entries = json::array();
    for (const auto& e : c.entries()) entries.push_back(to_json(e));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat mat_from_json(const json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    std::vector<Cyclotomic> entries;
    for (const auto& e : j.at("entries")) entries.push_back(cyclotomic_from_json(e));
    return Mat(rows, cols, std::move(entries));
}

json to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows)
        arrows.push_back(json{{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
    return json{{"vertices", q.n_vertices}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
    Quiver q;
    q.n_vertices = j.at("vertices").get<int>();
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<int>(),
                            a.at("dst").get<int>()});
    q.validate();
    return q;
}

json to_json(const Quiver& q, const QuiverModule& m) {
    json maps = json::object();
    for (size_t k = 0; k < q.arrows.size(); ++k) maps[q.arrows[k].id] = to_json(m.maps[k]);
    return json{{"dims", m.dims}, {"maps", maps}};
}

QuiverModule quiver_module_from_json(const Quiver& q, const json& j) {
    QuiverModule m;
    m.dims = j.at("dims").get<std::vector<int>>();
    m.maps.resize(q.arrows.size());
    for (size_t k = 0; k < q.arrows.size(); ++k)
        m.maps[k] = mat_from_json(j.at("maps").at(q.arrows[k].id));
    m.validate(q);
    return m;
}

json to_json(const Backend& b) {
    json j;
    j["group_table"] = b.group().mul;
    if (b.kind() == Backend::Kind::pointed) {
        j["kind"] = "pointed";
        j["braiding_exponents"] = b.braiding_exponents();
    } else {
        j["kind"] = "rep";
        json irr = json::array();
        for (const auto& ir : b.irreps()) {
            json matrices = json::object();
            for (int e = 0; e < b.group().order(); ++e)
                matrices[std::to_string(e)] = to_json(ir.rho[static_cast<size_t>(e)]);
            irr.push_back(json{{"name", ir.name}, {"dim", ir.dim}, {"matrices", matrices}});
        }
        j["irreps"] = irr;
    }
    return j;
}

Backend backend_from_json(const json& j) {
    GroupTable g;
    g.mul = j.at("group_table").get<std::vector<std::vector<int>>>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "pointed") {
        return Backend::pointed(std::move(g),
                                j.at("braiding_exponents").get<std::vector<std::vector<long>>>());
    }
    if (kind != "rep") throw std::invalid_argument("unknown backend kind: " + kind);
    std::vector<Irrep> irreps;
    for (const auto& ij : j.at("irreps")) {
        Irrep ir;
        ir.name = ij.at("name").get<std::string>();
        ir.dim = ij.at("dim").get<int>();
        ir.rho.resize(static_cast<size_t>(g.order()));
        for (int e = 0; e < g.order(); ++e)
            ir.rho[static_cast<size_t>(e)] = mat_from_json(ij.at("matrices").at(std::to_string(e)));
        irreps.push_back(std::move(ir));
    }
    return Backend::rep(std::move(g), std::move(irreps));
}

json to_json(const Backend& b, const Obj& o) {
    json slots = json::array();
    for (const auto& s : o.slots)
        slots.push_back(json{{"word", s.word}, {"indices", s.indices}});
    json j{{"dim", o.dim}, {"slots", slots}, {"multiplicities", b.multiplicities(o)}};
    if (b.kind() == Backend::Kind::pointed) j["grades"] = o.grades;
    return j;
}

Obj obj_from_json(const Backend& b, const json& j) {
    if (j.contains("summands")) return b.obj_from_summands(j.at("summands").get<std::vector<int>>());
    Obj o;
    o.dim = j.at("dim").get<int>();
    for (const auto& s : j.at("slots")) {
        Slot slot;
        slot.word = s.at("word").get<std::vector<int>>();
        slot.indices = s.at("indices").get<std::vector<int>>();
        o.slots.push_back(std::move(slot));
    }
    if (b.kind() == Backend::Kind::pointed) o.grades = j.at("grades").get<std::vector<int>>();
    return o;
}

json to_json(const CenterObject& z) {
    const Backend& b = *z.backend;
    json j{{"carrier", to_json(b, z.z)}};
    json mats = json::array();
    for (const auto& c : z.c) mats.push_back(to_json(c));
    j["half_braiding"] = json{{"matrices", mats}};
    return j;
}

CenterObject center_from_json(BackendPtr b, const json& j) {
    if (j.contains("kind")) {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "unit") return center_unit(std::move(b));
        if (kind == "flip" || kind == "inverse-flip") {
            Obj x = obj_from_json(*b, j.at("object"));
            return center_from_backend_object(std::move(b), x, kind == "inverse-flip");
        }
        if (kind == "double") {
            Obj x = obj_from_json(*b, j.at("object"));
            return double_object(std::move(b), x);
        }
        if (kind == "pointed") {
            std::vector<Mat> c;
            for (const auto& m : j.at("matrices")) c.push_back(mat_from_json(m));
            return make_center_object_pointed(std::move(b), j.at("grades").get<std::vector<int>>(),
                                              c);
        }
        throw std::invalid_argument("unknown center object kind: " + kind);
    }
    Obj carrier = obj_from_json(*b, j.at("carrier"));
    std::vector<Mat> c;
    for (const auto& m : j.at("half_braiding").at("matrices")) c.push_back(mat_from_json(m));
    return make_center_object(std::move(b), std::move(carrier), std::move(c));
}

json to_json(const CatModule& m) {
    return json{{"z", to_json(m.z)},
                {"carrier", to_json(*m.z.backend, m.a)},
                {"f", to_json(m.f)}};
}

CatModule cat_module_from_json(BackendPtr b, const json& j) {
    CatModule m;
    m.z = center_from_json(b, j.at("z"));
    m.a = obj_from_json(*b, j.at("carrier"));
    m.f = mat_from_json(j.at("f"));
    m.validate();
    return m;
}

json to_json(const Relation& r) {
    json j{{"z", to_json(r.z)}, {"y", to_json(r.y)}, {"N", r.length}, {"phi", to_json(r.phi)}};
    if (r.q) j["q"] = to_json(*r.q);
    return j;
}

Relation relation_from_json(BackendPtr b, const json& j) {
    Relation r;
    r.z = center_from_json(b, j.at("z"));
    r.y = center_from_json(b, j.at("y"));
    r.length = j.at("N").get<int>();
    r.phi = mat_from_json(j.at("phi"));
    if (j.contains("q")) r.q = cyclotomic_from_json(j.at("q"));
    return r;
}

}  // namespace fusq
