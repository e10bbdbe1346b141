#include "fusq/center.hpp"

#include <stdexcept>

namespace fusq {

namespace {

// c_z on one letter; dual letters use the rotation
// c_z(x*) = (id (x) ev') o (id (x) c_z(x)^{-1} (x) id) o (coev' (x) id).
Mat letter_half_braiding(const Backend& b, const CenterObject& z, int letter) {
    int s = letter_simple(letter);
    if (!letter_is_dual(letter)) return z.c[s];
    int d = b.simple_dim(s);
    int dz = z.z.dim;
    Obj xs = b.simple_obj(s);
    auto cinv = solve(z.c[s], Mat::identity(d * dz));
    if (!cinv) throw std::logic_error("half-braiding not invertible");
    Mat step1 = kron(b.coev_left(xs), Mat::identity(dz * d));   // z x* -> x* x z x*
    Mat step2 = kron(Mat::identity(d), kron(*cinv, Mat::identity(d)));  // -> x* z x x*
    Mat step3 = kron(Mat::identity(d * dz), b.ev_left(xs));     // -> x* z
    return matmul(step3, matmul(step2, step1));
}

// c_z on a single tensor word, local indices: z(x)W -> W(x)z.
Mat word_half_braiding(const Backend& b, const CenterObject& z, const std::vector<int>& word) {
    if (word.empty()) return Mat::identity(z.z.dim);
    Mat c = letter_half_braiding(b, z, word[0]);
    int done = b.word_dim({word[0]});
    for (size_t k = 1; k < word.size(); ++k) {
        int dk = b.word_dim({word[k]});
        // z(x)done(x)k --(c_prev (x) id)--> done(x)z(x)k --(id (x) c_k)--> done(x)k(x)z
        Mat step1 = kron(c, Mat::identity(dk));
        Mat step2 = kron(Mat::identity(done), letter_half_braiding(b, z, word[k]));
        c = matmul(step2, step1);
        done *= dk;
    }
    return c;
}

}  // namespace

bool CenterObject::same_as(const CenterObject& o) const {
    if (backend != o.backend || !z.same_carrier(o.z) || c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != o.c[i]) return false;
    return true;
}

Mat half_braiding_on(const CenterObject& z, const Obj& x) {
    const Backend& b = *z.backend;
    int dz = z.z.dim;
    Mat m(x.dim * dz, dz * x.dim);
    for (const auto& slot : x.slots) {
        Mat blk = word_half_braiding(b, z, slot.word);
        int dw = b.word_dim(slot.word);
        for (int p = 0; p < dw; ++p)
            for (int u = 0; u < dz; ++u)
                for (int up = 0; up < dz; ++up)
                    for (int q = 0; q < dw; ++q) {
                        const Cyclotomic& v = blk.at(p * dz + u, up * dw + q);
                        if (!v.is_zero())
                            m.at(slot.indices[p] * dz + u, up * x.dim + slot.indices[q]) = v;
                    }
    }
    return m;
}

Mat half_braiding_inverse_on(const CenterObject& z, const Obj& x) {
    Mat c = half_braiding_on(z, x);
    auto inv = solve(c, Mat::identity(c.rows()));
    if (!inv) throw std::logic_error("half-braiding is not invertible");
    return *inv;
}

CenterObject make_center_object(BackendPtr b, Obj z, std::vector<Mat> half_braidings) {
    CenterObject co{std::move(b), std::move(z), std::move(half_braidings)};
    validate_center(co);
    return co;
}

CenterObject center_unit(BackendPtr b) {
    Obj u = b->unit_obj();
    std::vector<Mat> c(b->rank());
    for (int i = 0; i < b->rank(); ++i) c[i] = Mat::identity(b->simple_dim(i));
    return {std::move(b), std::move(u), std::move(c)};
}

CenterObject make_center_object_pointed(BackendPtr b, const std::vector<int>& grades,
                                        const std::vector<Mat>& c_of_g) {
    if (b->kind() != Backend::Kind::pointed)
        throw std::invalid_argument("pointed center data on a non-pointed backend");
    if (grades.empty()) throw std::invalid_argument("empty carrier");
    Obj z;
    z.dim = static_cast<int>(grades.size());
    z.grades = grades;
    for (int k = 0; k < z.dim; ++k) z.slots.push_back({{grades[k]}, {k}});
    if (static_cast<int>(c_of_g.size()) != b->group().order())
        throw std::invalid_argument("need one braiding matrix per group element");
    return make_center_object(std::move(b), std::move(z), c_of_g);
}

CenterObject center_from_backend_object(BackendPtr b, const Obj& x, bool inverse) {
    std::vector<Mat> c(b->rank());
    for (int i = 0; i < b->rank(); ++i) {
        Obj xi = b->simple_obj(i);
        if (!inverse) {
            c[i] = b->braiding(x, xi);
        } else {
            Mat fwd = b->braiding(xi, x);  // x_i (x) x -> x (x) x_i
            auto inv_m = solve(fwd, Mat::identity(fwd.rows()));
            if (!inv_m) throw std::logic_error("backend braiding not invertible");
            c[i] = *inv_m;
        }
    }
    return make_center_object(std::move(b), x, std::move(c));
}

CenterObject direct_sum_center(const CenterObject& a, const CenterObject& b) {
    if (a.backend != b.backend) throw std::invalid_argument("direct_sum_center: backend mismatch");
    const Backend& bk = *a.backend;
    CenterObject r;
    r.backend = a.backend;
    r.z = bk.dsum(a.z, b.z);
    int da = a.z.dim, db = b.z.dim, dz = da + db;
    r.c.resize(bk.rank());
    for (int i = 0; i < bk.rank(); ++i) {
        int di = bk.simple_dim(i);
        Mat m(di * dz, dz * di);
        for (int p = 0; p < di; ++p)
            for (int q = 0; q < di; ++q) {
                for (int u = 0; u < da; ++u)
                    for (int v = 0; v < da; ++v) {
                        const Cyclotomic& x = a.c[i].at(p * da + u, v * di + q);
                        if (!x.is_zero()) m.at(p * dz + u, v * di + q) = x;
                    }
                for (int u = 0; u < db; ++u)
                    for (int v = 0; v < db; ++v) {
                        const Cyclotomic& x = b.c[i].at(p * db + u, v * di + q);
                        if (!x.is_zero()) m.at(p * dz + da + u, (da + v) * di + q) = x;
                    }
            }
        r.c[i] = std::move(m);
    }
    return r;
}

CenterObject tensor_center(const CenterObject& a, const CenterObject& b) {
    if (a.backend != b.backend) throw std::invalid_argument("tensor_center: backend mismatch");
    const Backend& bk = *a.backend;
    CenterObject r;
    r.backend = a.backend;
    r.z = bk.tensor(a.z, b.z);
    int da = a.z.dim, db = b.z.dim;
    r.c.resize(bk.rank());
    for (int i = 0; i < bk.rank(); ++i) {
        // a(x)b(x)x_i --(id_a (x) c_b)--> a(x)x_i(x)b --(c_a (x) id_b)--> x_i(x)a(x)b
        Mat step1 = kron(Mat::identity(da), b.c[i]);
        Mat step2 = kron(a.c[i], Mat::identity(db));
        r.c[i] = matmul(step2, step1);
    }
    return r;
}

CenterObject tensor_power_center(const CenterObject& a, int n) {
    if (n < 1) throw std::invalid_argument("tensor power needs n >= 1");
    CenterObject r = a;
    for (int k = 1; k < n; ++k) r = tensor_center(r, a);
    return r;
}

bool is_center_morphism(const CenterObject& z, const CenterObject& w, const Mat& g) {
    const Backend& b = *z.backend;
    if (z.backend != w.backend) return false;
    if (!b.is_morphism(g, z.z, w.z)) return false;
    for (int i = 0; i < b.rank(); ++i) {
        int di = b.simple_dim(i);
        Mat lhs = matmul(kron(Mat::identity(di), g), z.c[i]);
        Mat rhs = matmul(w.c[i], kron(g, Mat::identity(di)));
        if (lhs != rhs) return false;
    }
    return true;
}

void validate_center(const CenterObject& z) {
    const Backend& b = *z.backend;
    if (static_cast<int>(z.c.size()) != b.rank())
        throw std::invalid_argument("need one half-braiding per simple");
    int dz = z.z.dim;
    for (int i = 0; i < b.rank(); ++i) {
        int di = b.simple_dim(i);
        if (z.c[i].rows() != di * dz || z.c[i].cols() != dz * di)
            throw std::invalid_argument("half-braiding " + std::to_string(i) + " has wrong shape");
        if (!b.is_morphism(z.c[i], b.tensor(z.z, b.simple_obj(i)), b.tensor(b.simple_obj(i), z.z)))
            throw std::invalid_argument("half-braiding " + std::to_string(i) +
                                        " is not a morphism of the backend");
        if (rank(z.c[i]) != z.c[i].rows())
            throw std::invalid_argument("half-braiding " + std::to_string(i) + " not invertible");
    }
    if (z.c[b.unit_simple()] != Mat::identity(dz))
        throw std::invalid_argument("half-braiding at the unit is not the identity");
    // hexagon: the value on x_i (x) x_j assembled from the pieces must be
    // natural with respect to every morphism from a simple
    for (int i = 0; i < b.rank(); ++i) {
        for (int j = 0; j < b.rank(); ++j) {
            Obj t = b.tensor(b.simple_obj(i), b.simple_obj(j));
            Mat chex = half_braiding_on(z, t);
            for (int k = 0; k < b.rank(); ++k) {
                for (const Mat& u : b.hom_basis(b.simple_obj(k), t)) {
                    Mat lhs = matmul(chex, kron(Mat::identity(dz), u));
                    Mat rhs = matmul(kron(u, Mat::identity(dz)), z.c[k]);
                    if (lhs != rhs)
                        throw std::invalid_argument("hexagon fails at simple pair (" +
                                                    std::to_string(i) + ", " + std::to_string(j) +
                                                    ")");
                }
            }
        }
    }
}

DrinfeldQuiver drinfeld_quiver(const CenterObject& z) {
    const Backend& b = *z.backend;
    DrinfeldQuiver dq;
    dq.z = z;
    dq.quiver.n_vertices = b.rank();
    for (int i = 0; i < b.rank(); ++i) {
        for (int j = 0; j < b.rank(); ++j) {
            Obj target = b.tensor(z.z, b.simple_obj(i));
            auto basis = b.hom_basis(b.simple_obj(j), target);
            for (size_t k = 0; k < basis.size(); ++k) {
                dq.quiver.arrows.push_back({"a" + std::to_string(i) + "_" + std::to_string(j) +
                                                "_" + std::to_string(k),
                                            i, j});
                dq.arrows.push_back({i, j, basis[k]});
            }
        }
    }
    dq.quiver.validate();
    return dq;
}

DrinfeldQuiver restrict_drinfeld_quiver(const DrinfeldQuiver& q, const std::vector<int>& vertices) {
    std::vector<int> pos(q.quiver.n_vertices, -1);
    for (size_t k = 0; k < vertices.size(); ++k) pos[vertices[k]] = static_cast<int>(k);
    DrinfeldQuiver r;
    r.z = q.z;
    r.quiver.n_vertices = static_cast<int>(vertices.size());
    for (size_t a = 0; a < q.quiver.arrows.size(); ++a) {
        const Arrow& ar = q.quiver.arrows[a];
        if (pos[ar.src] < 0 || pos[ar.dst] < 0) continue;
        r.quiver.arrows.push_back({ar.id, pos[ar.src], pos[ar.dst]});
        r.arrows.push_back(q.arrows[a]);
    }
    r.quiver.validate();
    return r;
}

}  // namespace fusq
