#include "fusq/moduli.hpp"

#include <stdexcept>

namespace fusq {

int epsilon(const CatModule& m) {
    return static_cast<int>(cat_module_hom_basis(unit_module(m.z), m).size());
}

int kappa(const CatModule& m1, const CatModule& m2) { return epsilon(fuse(m1, m2)); }

CatModule duality_D(const CatModule& m) { return dual_modules(m).right; }

GradedClass graded_class(const CatModule& m) {
    return {m, m.z.backend->multiplicities(m.a)};
}

std::vector<int> gr_product(const Backend& b, const std::vector<int>& a,
                            const std::vector<int>& c) {
    std::vector<int> r(b.rank(), 0);
    for (int i = 0; i < b.rank(); ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < b.rank(); ++j) {
            if (c[static_cast<size_t>(j)] == 0) continue;
            auto n = b.tensor_decompose(i, j);
            for (int k = 0; k < b.rank(); ++k)
                r[static_cast<size_t>(k)] +=
                    a[static_cast<size_t>(i)] * c[static_cast<size_t>(j)] * n[static_cast<size_t>(k)];
        }
    }
    return r;
}

GradedClass graded_mul(const GradedClass& c1, const GradedClass& c2) {
    GradedClass r;
    r.rep = fuse(c1.rep, c2.rep);
    r.dim_vector = gr_product(*c1.rep.z.backend, c1.dim_vector, c2.dim_vector);
    return r;
}

GradedClass gr_act(const Obj& x, const GradedClass& c, Side side) {
    const Backend& b = *c.rep.z.backend;
    GradedClass r;
    r.rep = act(c.rep, x, side);
    auto xv = b.multiplicities(x);
    r.dim_vector = side == Side::left ? gr_product(b, xv, c.dim_vector)
                                      : gr_product(b, c.dim_vector, xv);
    return r;
}

Cyclotomic cycle_trace(const Quiver& q, const QuiverModule& m, const PathVector& w) {
    int src, dst, len;
    w.homogeneous_type(q, src, dst, len);
    if (src != dst) throw std::invalid_argument("cycle_trace needs a cycle");
    return path_action(q, m, w).trace();
}

}  // namespace fusq
