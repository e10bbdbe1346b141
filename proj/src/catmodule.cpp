#include "fusq/catmodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusq {

namespace {
int ipow(int base, int e) {
    int r = 1;
    while (e-- > 0) r *= base;
    return r;
}
}  // namespace

void CatModule::validate() const {
    const Backend& b = *z.backend;
    if (f.rows() != a.dim || f.cols() != z.z.dim * a.dim)
        throw std::invalid_argument("structure map has wrong shape");
    if (!b.is_morphism(f, b.tensor(z.z, a), a))
        throw std::invalid_argument("structure map is not a morphism of the backend");
}

CatModule unit_module(const CenterObject& z) {
    CatModule m;
    m.z = z;
    m.a = z.backend->unit_obj();
    m.f = Mat(1, z.z.dim);
    return m;
}

CatModule fuse(const CatModule& m1, const CatModule& m2) {
    if (!m1.z.same_as(m2.z)) throw std::invalid_argument("fuse: center objects differ");
    const Backend& b = *m1.z.backend;
    CatModule r;
    r.z = m1.z;
    r.a = b.tensor(m1.a, m2.a);
    Mat term1 = kron(m1.f, Mat::identity(m2.a.dim));
    Mat braid = kron(half_braiding_on(m1.z, m1.a), Mat::identity(m2.a.dim));
    Mat term2 = matmul(kron(Mat::identity(m1.a.dim), m2.f), braid);
    r.f = term1 + term2;
    return r;
}

namespace {

// ev_a o (f-dagger (x)~ f) = 0 and (f (x)~ f-dagger) o (id_z (x) coev_a) = 0;
// these are the module-morphism conditions for ev and coev.
bool duality_equations_hold(const CatModule& m, const CatModule& dual_right) {
    const Backend& b = *m.z.backend;
    const Mat ev = b.ev(m.a);
    const Mat coev = b.coev(m.a);
    CatModule prod = fuse(dual_right, m);
    if (!matmul(ev, prod.f).is_zero()) return false;
    CatModule prod2 = fuse(m, dual_right);
    if (!matmul(prod2.f, kron(Mat::identity(m.z.z.dim), coev)).is_zero()) return false;
    return true;
}

bool left_duality_equations_hold(const CatModule& m, const CatModule& dual_left) {
    const Backend& b = *m.z.backend;
    const Mat evl = b.ev_left(m.a);
    const Mat coevl = b.coev_left(m.a);
    CatModule prod = fuse(m, dual_left);
    if (!matmul(evl, prod.f).is_zero()) return false;
    CatModule prod2 = fuse(dual_left, m);
    if (!matmul(prod2.f, kron(Mat::identity(m.z.z.dim), coevl)).is_zero()) return false;
    return true;
}

}  // namespace

DualPair dual_modules(const CatModule& m) {
    const Backend& b = *m.z.backend;
    int da = m.a.dim;
    int dz = m.z.z.dim;
    Obj astar = b.dual(m.a);

    // f-dagger: z (x) a* -> a*, assembled as
    // -(ev_a (x) id) o (id (x) f (x) id) o (c_z(a*) (x) id (x) id) o (id (x) id (x) coev_a)
    Mat ins = kron(Mat::identity(dz * da), b.coev(m.a));          // z a* -> z a* a a*
    Mat br = kron(half_braiding_on(m.z, astar), Mat::identity(da * da));  // -> a* z a a*
    Mat app = kron(Mat::identity(da), kron(m.f, Mat::identity(da)));      // -> a* a a*
    Mat cap = kron(b.ev(m.a), Mat::identity(da));                          // -> a*
    Mat fd = -matmul(cap, matmul(app, matmul(br, ins)));

    CatModule right{m.z, astar, fd};
    if (!duality_equations_hold(m, right))
        throw std::logic_error("right dual does not satisfy the duality equations");

    // left dual on *a (same carrier under the trivial pivotal identification):
    // -(id (x) ev'_a) o (id (x) f (x) id) o (c_z(*a) (x) id (x) id) o (id_z (x) coev'_a (x) id)
    Mat insl = kron(Mat::identity(dz), kron(b.coev_left(m.a), Mat::identity(da)));  // z *a -> z *a a *a
    Mat brl = kron(half_braiding_on(m.z, astar), Mat::identity(da * da));           // -> *a z a *a
    Mat appl = kron(Mat::identity(da), kron(m.f, Mat::identity(da)));               // -> *a a *a
    Mat capl = kron(Mat::identity(da), b.ev_left(m.a));                             // -> *a
    Mat fl = -matmul(capl, matmul(appl, matmul(brl, insl)));

    CatModule left{m.z, astar, fl};
    if (!left_duality_equations_hold(m, left))
        throw std::logic_error("left dual does not satisfy the duality equations");

    return {std::move(right), std::move(left)};
}

CatModule act(const CatModule& m, const Obj& x, Side side) {
    const Backend& b = *m.z.backend;
    CatModule r;
    r.z = m.z;
    if (side == Side::right) {
        r.a = b.tensor(m.a, x);
        r.f = kron(m.f, Mat::identity(x.dim));
    } else {
        r.a = b.tensor(x, m.a);
        Mat braid = kron(half_braiding_on(m.z, x), Mat::identity(m.a.dim));
        r.f = matmul(kron(Mat::identity(x.dim), m.f), braid);
    }
    return r;
}

CatModule pushforward(const CenterObject& w, const Mat& g, const CatModule& m) {
    if (!is_center_morphism(w, m.z, g))
        throw std::invalid_argument("pushforward: g is not a morphism of center objects");
    CatModule r;
    r.z = w;
    r.a = m.a;
    r.f = matmul(m.f, kron(g, Mat::identity(m.a.dim)));
    return r;
}

bool is_cat_module_morphism(const Mat& h, const CatModule& m1, const CatModule& m2) {
    const Backend& b = *m1.z.backend;
    if (!b.is_morphism(h, m1.a, m2.a)) return false;
    return matmul(m2.f, kron(Mat::identity(m1.z.z.dim), h)) == matmul(h, m1.f);
}

std::vector<Mat> cat_module_hom_basis(const CatModule& m1, const CatModule& m2) {
    const Backend& b = *m1.z.backend;
    int dz = m1.z.z.dim;
    std::vector<Mat> ambient = b.hom_basis(m1.a, m2.a);
    if (ambient.empty()) return {};
    // solve for combinations commuting with the structure maps
    std::vector<Mat> constraint;
    constraint.reserve(ambient.size());
    for (const auto& h : ambient)
        constraint.push_back(matmul(m2.f, kron(Mat::identity(dz), h)) - matmul(h, m1.f));
    long ncoords = static_cast<long>(constraint[0].rows()) * constraint[0].cols();
    Mat sys(static_cast<int>(ncoords), static_cast<int>(ambient.size()));
    for (size_t k = 0; k < constraint.size(); ++k) {
        Mat v = vectorize(constraint[k]);
        for (int i = 0; i < v.rows(); ++i) sys.at(i, static_cast<int>(k)) = v.at(i, 0);
    }
    std::vector<Mat> basis;
    for (const auto& coef : kernel_basis(sys)) {
        Mat h(m2.a.dim, m1.a.dim);
        for (size_t k = 0; k < ambient.size(); ++k) {
            const Cyclotomic& ck = coef.at(static_cast<int>(k), 0);
            if (!ck.is_zero()) h += scalar_mul(ck, ambient[k]);
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

Mat iterated_structure_map(const CatModule& m, int n) {
    int dz = m.z.z.dim;
    Mat r = Mat::identity(m.a.dim);
    // f^{*n} = f o (id_z (x) f) o ... o (id_{z^{n-1}} (x) f)
    for (int k = 0; k < n; ++k) r = matmul(r, kron(Mat::identity(ipow(dz, k)), m.f));
    return r;
}

QuiverModule to_quiver_module(const DrinfeldQuiver& dq, const CatModule& m) {
    const Backend& b = *m.z.backend;
    if (!dq.z.same_as(m.z)) throw std::invalid_argument("module is over a different center object");
    QuiverModule qm;
    int nv = dq.quiver.n_vertices;
    std::vector<std::vector<Mat>> vertex_basis(nv);
    qm.dims.resize(nv);
    for (int i = 0; i < nv; ++i) {
        vertex_basis[i] = b.hom_basis(b.simple_obj(i), m.a);
        qm.dims[i] = static_cast<int>(vertex_basis[i].size());
    }
    qm.maps.resize(dq.arrows.size());
    for (size_t k = 0; k < dq.arrows.size(); ++k) {
        int i = dq.arrows[k].src, j = dq.arrows[k].dst;
        Mat mk(qm.dims[j], qm.dims[i]);
        for (int p = 0; p < qm.dims[i]; ++p) {
            // f(lambda)(v) = f o (id_z (x) v) o lambda : x_j -> a
            Mat w = matmul(m.f, matmul(kron(Mat::identity(m.z.z.dim), vertex_basis[i][p]),
                                       dq.arrows[k].lambda));
            auto coeffs = expand_in_basis(vertex_basis[j], w);
            if (!coeffs) throw std::logic_error("arrow action leaves the vertex space");
            for (int q = 0; q < qm.dims[j]; ++q) mk.at(q, p) = (*coeffs)[q];
        }
        qm.maps[k] = std::move(mk);
    }
    return qm;
}

CatModule from_quiver_module(const DrinfeldQuiver& dq, const QuiverModule& qm) {
    const Backend& b = *dq.z.backend;
    qm.validate(dq.quiver);
    // canonical carrier: dims[i] copies of x_i, vertex order
    std::vector<int> summands;
    for (int i = 0; i < dq.quiver.n_vertices; ++i)
        for (int k = 0; k < qm.dims[i]; ++k) summands.push_back(i);
    if (summands.empty()) throw std::invalid_argument("empty quiver module");
    Obj a = b.obj_from_summands(summands);

    // the structure map is the unique morphism whose quiver transport is qm
    std::vector<Mat> fbasis = b.hom_basis(b.tensor(dq.z.z, a), a);
    std::vector<QuiverModule> images;
    images.reserve(fbasis.size());
    for (const auto& fb : fbasis) {
        CatModule probe{dq.z, a, fb};
        images.push_back(to_quiver_module(dq, probe));
    }
    // flatten target and solve
    auto flatten = [&](const QuiverModule& q) {
        std::vector<Cyclotomic> v;
        for (const auto& mp : q.maps)
            for (const auto& x : mp.entries()) v.push_back(x);
        return v;
    };
    std::vector<Cyclotomic> target = flatten(qm);
    Mat sys(static_cast<int>(target.size()), static_cast<int>(fbasis.size()));
    for (size_t k = 0; k < images.size(); ++k) {
        auto col = flatten(images[k]);
        if (col.size() != target.size()) throw std::logic_error("quiver transport shape mismatch");
        for (size_t r = 0; r < col.size(); ++r) sys.at(static_cast<int>(r), static_cast<int>(k)) = col[r];
    }
    Mat rhs(static_cast<int>(target.size()), 1);
    for (size_t r = 0; r < target.size(); ++r) rhs.at(static_cast<int>(r), 0) = target[r];
    auto sol = solve(sys, rhs);
    if (!sol) throw std::logic_error("quiver module is not in the image of the dictionary");
    Mat f(a.dim, dq.z.z.dim * a.dim);
    for (size_t k = 0; k < fbasis.size(); ++k) {
        const Cyclotomic& ck = sol->at(static_cast<int>(k), 0);
        if (!ck.is_zero()) f += scalar_mul(ck, fbasis[k]);
    }
    return {dq.z, a, f};
}

namespace {

// strictly level-decreasing block filter used for guaranteed-nilpotent draws
std::vector<int> random_levels(int n, Rng& rng) {
    std::vector<int> lv(n);
    for (int& x : lv) x = static_cast<int>(rng.next_range(3));
    return lv;
}

}  // namespace

CatModule random_module_on(const CenterObject& z, const Obj& a, Rng& rng, bool nilpotent) {
    const Backend& b = *z.backend;
    long cond = b.conductor();
    Obj za = b.tensor(z.z, a);
    Mat f(a.dim, za.dim);
    std::vector<int> levels = nilpotent ? random_levels(static_cast<int>(a.slots.size()), rng)
                                        : std::vector<int>();
    // z (x) a slots are (z-slot, a-slot) pairs in z-major order
    for (size_t t = 0; t < a.slots.size(); ++t) {
        for (size_t s = 0; s < za.slots.size(); ++s) {
            size_t a_src = s % a.slots.size();
            if (nilpotent && levels[t] >= levels[a_src]) continue;
            // basis of Hom(za-slot, a-slot), scattered into full shape
            Obj src;
            src.dim = static_cast<int>(za.slots[s].indices.size());
            Slot ssrc;
            ssrc.word = za.slots[s].word;
            ssrc.indices.resize(src.dim);
            for (int k = 0; k < src.dim; ++k) ssrc.indices[k] = k;
            src.slots.push_back(ssrc);
            if (b.kind() == Backend::Kind::pointed) {
                src.grades.resize(src.dim);
                for (int k = 0; k < src.dim; ++k) src.grades[k] = za.grades[za.slots[s].indices[k]];
            }
            Obj dst;
            dst.dim = static_cast<int>(a.slots[t].indices.size());
            Slot sdst;
            sdst.word = a.slots[t].word;
            sdst.indices.resize(dst.dim);
            for (int k = 0; k < dst.dim; ++k) sdst.indices[k] = k;
            dst.slots.push_back(sdst);
            if (b.kind() == Backend::Kind::pointed) {
                dst.grades.resize(dst.dim);
                for (int k = 0; k < dst.dim; ++k) dst.grades[k] = a.grades[a.slots[t].indices[k]];
            }
            for (const Mat& h : b.hom_basis(src, dst)) {
                Cyclotomic coef = rng.small_scalar(cond);
                if (coef.is_zero()) continue;
                for (int p = 0; p < dst.dim; ++p)
                    for (int q = 0; q < src.dim; ++q) {
                        const Cyclotomic& v = h.at(p, q);
                        if (!v.is_zero())
                            f.at(a.slots[t].indices[p], za.slots[s].indices[q]) += coef * v;
                    }
            }
        }
    }
    CatModule m{z, a, f};
    m.validate();
    return m;
}

CatModule random_module(const CenterObject& z, int n_slots, Rng& rng, bool nilpotent) {
    const Backend& b = *z.backend;
    std::vector<int> summands;
    for (int k = 0; k < n_slots; ++k)
        summands.push_back(static_cast<int>(rng.next_range(static_cast<uint64_t>(b.rank()))));
    // canonical carrier order, so the quiver dictionary round-trips on the nose
    std::sort(summands.begin(), summands.end());
    return random_module_on(z, b.obj_from_summands(summands), rng, nilpotent);
}

}  // namespace fusq
