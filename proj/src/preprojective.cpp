#include "fusq/preprojective.hpp"

#include <stdexcept>

namespace fusq {

DoubleQuiver double_quiver(const Quiver& q) {
    q.validate();
    DoubleQuiver d;
    d.base = q;
    d.dq = q;
    int m = static_cast<int>(q.arrows.size());
    for (const auto& a : q.arrows) d.dq.arrows.push_back({a.id + "_bar", a.dst, a.src});
    d.dq.validate();
    d.bar.resize(2 * static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        d.bar[static_cast<size_t>(k)] = m + k;
        d.bar[static_cast<size_t>(m + k)] = k;
    }
    return d;
}

std::vector<PathVector> preprojective_generators(const DoubleQuiver& d, const Cyclotomic& theta) {
    if (theta.is_zero()) throw std::invalid_argument("theta must be nonzero");
    int m = static_cast<int>(d.base.arrows.size());
    std::vector<PathVector> out;
    for (int i = 0; i < d.base.n_vertices; ++i) {
        PathVector w;
        for (int a = 0; a < m; ++a) {
            if (d.base.arrows[static_cast<size_t>(a)].src == i)
                w.add(Path{i, {a, d.bar[static_cast<size_t>(a)]}}, Cyclotomic(1));
            if (d.base.arrows[static_cast<size_t>(a)].dst == i)
                w.add(Path{i, {d.bar[static_cast<size_t>(a)], a}}, -theta);
        }
        out.push_back(std::move(w));
    }
    return out;
}

bool is_pi_module(const DoubleQuiver& d, const QuiverModule& m, const Cyclotomic& theta) {
    m.validate(d.dq);
    int nb = static_cast<int>(d.base.arrows.size());
    for (int i = 0; i < d.base.n_vertices; ++i) {
        Mat acc(m.dims[i], m.dims[i]);
        for (int a = 0; a < nb; ++a) {
            const Arrow& ar = d.base.arrows[static_cast<size_t>(a)];
            int abar = d.bar[static_cast<size_t>(a)];
            if (ar.src == i)
                acc += matmul(m.maps[static_cast<size_t>(abar)], m.maps[static_cast<size_t>(a)]);
            if (ar.dst == i)
                acc -= scalar_mul(theta, matmul(m.maps[static_cast<size_t>(a)],
                                                m.maps[static_cast<size_t>(abar)]));
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

Relation self_dual_relation(const CenterObject& z, const Mat& phi0) {
    const Backend& b = *z.backend;
    Obj zstar = b.dual(z.z);
    if (!b.is_morphism(phi0, zstar, z.z))
        throw std::invalid_argument("phi0 is not a morphism z* -> z");
    Relation r;
    r.z = z;
    r.y = center_unit(z.backend);
    r.length = 2;
    r.phi = matmul(kron(Mat::identity(z.z.dim), phi0), b.coev(z.z));
    r.q = Cyclotomic(-1);
    return r;
}

Cyclotomic symplectic_pairing(const CenterObject& z, const Mat& phi0, int i, int j,
                              const Mat& lambda, const Mat& mu) {
    const Backend& b = *z.backend;
    int dz = z.z.dim;
    int di = b.simple_dim(i);
    auto phi_inv = solve(phi0, Mat::identity(dz));
    if (!phi_inv) throw std::invalid_argument("phi0 is not invertible");
    // x_i --mu--> z x_j --(id (x) lambda)--> z z x_i --(cap (x) id)--> x_i
    Mat cap = matmul(b.ev_left(z.z), kron(Mat::identity(dz), *phi_inv));  // z z -> z z* -> 1
    Mat comp = matmul(kron(cap, Mat::identity(di)),
                      matmul(kron(Mat::identity(dz), lambda), mu));
    Rational pre(1);
    pre /= Rational(b.simple_dim(i)) * Rational(b.simple_dim(j));
    return Cyclotomic(pre) * comp.trace();
}

SymplecticArrowSpace darboux_basis(const DrinfeldQuiver& dq, const Mat& phi0) {
    const Quiver& q = dq.quiver;
    int m = static_cast<int>(q.arrows.size());
    // current basis vectors, kept per arrow slot
    std::vector<Mat> vec(dq.arrows.size());
    for (int a = 0; a < m; ++a) vec[static_cast<size_t>(a)] = dq.arrows[static_cast<size_t>(a)].lambda;

    auto pair_of = [&](int a, int bslot) -> Cyclotomic {
        const auto& A = q.arrows[static_cast<size_t>(a)];
        const auto& B = q.arrows[static_cast<size_t>(bslot)];
        if (A.src != B.dst || A.dst != B.src) return Cyclotomic(0);
        return symplectic_pairing(dq.z, phi0, A.src, A.dst, vec[static_cast<size_t>(a)],
                                  vec[static_cast<size_t>(bslot)]);
    };

    SymplecticArrowSpace out;
    out.basis.resize(static_cast<size_t>(m));
    out.partner.assign(static_cast<size_t>(m), -1);
    out.positive.assign(static_cast<size_t>(m), false);

    std::vector<bool> done(static_cast<size_t>(m), false);
    for (int e = 0; e < m; ++e) {
        if (done[static_cast<size_t>(e)]) continue;
        int f = -1;
        for (int cand = 0; cand < m; ++cand) {
            if (done[static_cast<size_t>(cand)] || cand == e) continue;
            if (!pair_of(e, cand).is_zero()) {
                f = cand;
                break;
            }
        }
        if (f < 0) throw std::logic_error("symplectic pairing is degenerate at arrow " +
                                          q.arrows[static_cast<size_t>(e)].id);
        Cyclotomic s = pair_of(e, f);
        vec[static_cast<size_t>(f)] = scalar_mul(s.inverse(), vec[static_cast<size_t>(f)]);
        // reduce the rest: v -> v - <v,f> e + <v,e> f
        for (int v = 0; v < m; ++v) {
            if (done[static_cast<size_t>(v)] || v == e || v == f) continue;
            Cyclotomic vf = pair_of(v, f);
            Cyclotomic ve = pair_of(v, e);
            if (!vf.is_zero())
                vec[static_cast<size_t>(v)] -= scalar_mul(vf, vec[static_cast<size_t>(e)]);
            if (!ve.is_zero())
                vec[static_cast<size_t>(v)] += scalar_mul(ve, vec[static_cast<size_t>(f)]);
        }
        done[static_cast<size_t>(e)] = done[static_cast<size_t>(f)] = true;
        out.partner[static_cast<size_t>(e)] = f;
        out.partner[static_cast<size_t>(f)] = e;
        out.positive[static_cast<size_t>(e)] = true;
    }
    out.basis = std::move(vec);
    return out;
}

CenterObject double_object(BackendPtr b, const Obj& x) {
    CenterObject plain = center_from_backend_object(b, x, false);
    CenterObject mirrored = center_from_backend_object(b, b->dual(x), true);
    return direct_sum_center(plain, mirrored);
}

Mat canonical_phi(BackendPtr b, const Obj& x) {
    int dx = x.dim;
    int dd = 2 * dx;
    Mat coev = b->coev(x);                                  // 1 -> x (x) x*
    Mat braided = matmul(b->braiding(x, b->dual(x)), coev);  // 1 -> x* (x) x
    Mat phi(dd * dd, 1);
    for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dx; ++j) {
            const Cyclotomic& c1 = coev.at(i * dx + j, 0);
            if (!c1.is_zero()) phi.at(i * dd + (dx + j), 0) += c1;
            const Cyclotomic& c2 = braided.at(i * dx + j, 0);
            if (!c2.is_zero()) phi.at((dx + i) * dd + j, 0) -= c2;
        }
    return phi;
}

ProjectiveCentralizer projective_centralizer(const Backend& b, const Obj& x) {
    ProjectiveCentralizer out;
    for (int y = 0; y < b.rank(); ++y) {
        Obj oy = b.simple_obj(y);
        Mat dbl = matmul(b.braiding(oy, x), b.braiding(x, oy));
        // scalar iff dbl = c * id
        Cyclotomic c = dbl.at(0, 0);
        if (c.is_zero() || dbl != Mat::scalar(dbl.rows(), c)) continue;
        out.simples.push_back(y);
        out.lambdas.push_back(c);
    }
    return out;
}

DrinfeldQuiver centralizer_quiver(BackendPtr b, const Obj& x) {
    CenterObject dx = double_object(b, x);
    DrinfeldQuiver full = drinfeld_quiver(dx);
    auto pc = projective_centralizer(*b, x);
    return restrict_drinfeld_quiver(full, pc.simples);
}

namespace {

// trace pairing of Hom(x_j, x (x) x_i) against Hom(x_i, x* (x) x_j)
Cyclotomic bar_pairing(const Backend& b, const Obj& x, int i, int j, const Mat& lambda,
                       const Mat& mu) {
    int dx = x.dim;
    int di = b.simple_dim(i);
    // x_i --mu--> x* x_j --(id (x) lambda)--> x* x x_i --(ev (x) id)--> x_i
    Mat comp = matmul(kron(b.ev(x), Mat::identity(di)),
                      matmul(kron(Mat::identity(dx), lambda), mu));
    Rational pre(1);
    pre /= Rational(b.simple_dim(i)) * Rational(b.simple_dim(j));
    return Cyclotomic(pre) * comp.trace();
}

// rows of a Q_{Dx} arrow datum restricted to one Dx summand
Mat slot_rows(const Mat& lambda, int di, int dx, int slot) {
    Mat r(dx * di, lambda.cols());
    for (int u = 0; u < dx; ++u)
        for (int p = 0; p < di; ++p)
            for (int c = 0; c < lambda.cols(); ++c)
                r.at(u * di + p, c) = lambda.at((slot * dx + u) * di + p, c);
    return r;
}

}  // namespace

PairedArrowBasis paired_arrow_basis(const DrinfeldQuiver& dq, const Obj& x) {
    const Backend& b = *dq.z.backend;
    int dx = x.dim;
    if (dq.z.z.dim != 2 * dx) throw std::invalid_argument("quiver is not over the double of x");
    int m = static_cast<int>(dq.arrows.size());

    PairedArrowBasis out;
    out.basis.resize(static_cast<size_t>(m));
    out.bar.assign(static_cast<size_t>(m), -1);
    out.plain.assign(static_cast<size_t>(m), false);

    // classify arrows by the Dx summand their datum is supported on
    std::vector<int> slot(static_cast<size_t>(m), -1);
    for (int a = 0; a < m; ++a) {
        const Mat& lam = dq.arrows[static_cast<size_t>(a)].lambda;
        int di = b.simple_dim(dq.arrows[static_cast<size_t>(a)].src);
        bool s0 = !slot_rows(lam, di, dx, 0).is_zero();
        bool s1 = !slot_rows(lam, di, dx, 1).is_zero();
        if (s0 == s1) throw std::logic_error("arrow datum not supported on a single summand");
        slot[static_cast<size_t>(a)] = s0 ? 0 : 1;
        out.plain[static_cast<size_t>(a)] = s0;
        out.basis[static_cast<size_t>(a)] = lam;
    }

    int nv = dq.quiver.n_vertices;
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < nv; ++j) {
            std::vector<int> plains, bars;
            for (int a = 0; a < m; ++a) {
                const Arrow& ar = dq.quiver.arrows[static_cast<size_t>(a)];
                if (slot[static_cast<size_t>(a)] == 0 && ar.src == i && ar.dst == j)
                    plains.push_back(a);
                if (slot[static_cast<size_t>(a)] == 1 && ar.src == j && ar.dst == i)
                    bars.push_back(a);
            }
            if (plains.size() != bars.size())
                throw std::logic_error("summand blocks of the double are not paired");
            if (plains.empty()) continue;
            int n = static_cast<int>(plains.size());
            int di = b.simple_dim(i), dj = b.simple_dim(j);
            // gram matrix of the trace pairing
            Mat gram(n, n);
            for (int p = 0; p < n; ++p)
                for (int r = 0; r < n; ++r) {
                    Mat lam = slot_rows(dq.arrows[static_cast<size_t>(plains[p])].lambda, di, dx, 0);
                    Mat mu = slot_rows(dq.arrows[static_cast<size_t>(bars[r])].lambda, dj, dx, 1);
                    gram.at(p, r) = bar_pairing(b, x, i, j, lam, mu);
                }
            auto inv = solve(gram, Mat::identity(n));
            if (!inv) throw std::logic_error("trace pairing of the double degenerates");
            // new bar basis: mu^p = sum_r inv[r][p] * mu_r
            for (int p = 0; p < n; ++p) {
                Mat acc(2 * dx * dj, b.simple_dim(i));
                for (int r = 0; r < n; ++r) {
                    const Cyclotomic& c = inv->at(r, p);
                    if (!c.is_zero())
                        acc += scalar_mul(c, dq.arrows[static_cast<size_t>(bars[r])].lambda);
                }
                out.basis[static_cast<size_t>(bars[p])] = std::move(acc);
                out.bar[static_cast<size_t>(plains[p])] = bars[p];
                out.bar[static_cast<size_t>(bars[p])] = plains[p];
            }
        }
    }
    return out;
}

std::vector<PathVector> twisted_prepro_from_phi(BackendPtr b, const Obj& x,
                                                DrinfeldQuiver* out_quiver,
                                                PairedArrowBasis* out_basis) {
    auto mult = b->multiplicities(x);
    int simple = -1;
    for (int i = 0; i < b->rank(); ++i) {
        if (mult[i] == 0) continue;
        if (simple >= 0 || mult[i] > 1) throw std::invalid_argument("x must be simple");
        simple = i;
    }
    if (simple < 0) throw std::invalid_argument("x must be simple");
    Cyclotomic theta = b->pivotal_data(simple).twist;

    DrinfeldQuiver dq = centralizer_quiver(b, x);
    PairedArrowBasis basis = paired_arrow_basis(dq, x);
    Relation r;
    r.z = dq.z;
    r.y = center_unit(b);
    r.length = 2;
    // scaled by -theta so the relators in the paired basis come out as the
    // twisted generators with leading coefficient 1
    r.phi = scalar_mul(-theta, canonical_phi(b, x));
    auto gens = ideal_generators(r, dq, &basis.basis);
    if (out_quiver) *out_quiver = std::move(dq);
    if (out_basis) *out_basis = std::move(basis);
    return gens;
}

std::vector<PathVector> twisted_generators_on(const DrinfeldQuiver& dq,
                                              const PairedArrowBasis& basis,
                                              const Cyclotomic& theta) {
    std::vector<PathVector> out;
    int m = static_cast<int>(dq.quiver.arrows.size());
    for (int i = 0; i < dq.quiver.n_vertices; ++i) {
        PathVector w;
        for (int a = 0; a < m; ++a) {
            if (!basis.plain[static_cast<size_t>(a)]) continue;
            const Arrow& ar = dq.quiver.arrows[static_cast<size_t>(a)];
            int abar = basis.bar[static_cast<size_t>(a)];
            if (ar.src == i) w.add(Path{i, {a, abar}}, Cyclotomic(1));
            if (ar.dst == i) w.add(Path{i, {abar, a}}, -theta);
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace fusq
