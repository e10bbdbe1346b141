#include "fusq/relations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fusq {

// ---------------------------------------------------------------------------
// q-combinatorics

QPoly QPoly::monomial(int k) {
    QPoly p;
    p.c.assign(static_cast<size_t>(k) + 1, 0);
    p.c.back() = 1;
    return p;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (c.empty() || o.c.empty()) return {};
    QPoly r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
}

bool QPoly::operator==(const QPoly& o) const {
    size_t n = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i) {
        mpz_class a = i < c.size() ? c[i] : mpz_class(0);
        mpz_class b = i < o.c.size() ? o.c[i] : mpz_class(0);
        if (a != b) return false;
    }
    return true;
}

Cyclotomic QPoly::eval(const Cyclotomic& q) const {
    Cyclotomic r;
    Cyclotomic pw(1);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) r += Cyclotomic(Rational(c[i])) * pw;
        pw *= q;
    }
    return r;
}

std::string QPoly::to_string() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        os << c[i].get_str() << (i ? "*q^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

QPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return QPoly::one();
    // (n k)_q = (n-1 k-1)_q + q^k (n-1 k)_q
    return q_binomial(n - 1, k - 1) + QPoly::monomial(k) * q_binomial(n - 1, k);
}

std::vector<QPoly> fuse_expansion_coefficients(int n) {
    std::vector<QPoly> out(static_cast<size_t>(n) + 1);
    for (uint32_t word = 0; word < (1u << n); ++word) {
        int fcount = 0, inv = 0;
        // scan left to right; an f after a g contributes one crossing per g seen
        int gseen = 0;
        for (int pos = 0; pos < n; ++pos) {
            bool is_f = (word >> pos) & 1u;
            if (is_f) {
                ++fcount;
                inv += gseen;
            } else {
                ++gseen;
            }
        }
        out[static_cast<size_t>(fcount)] = out[static_cast<size_t>(fcount)] + QPoly::monomial(inv);
    }
    return out;
}

bool is_primitive_root(const Cyclotomic& q, int n) {
    Cyclotomic p(1);
    for (int k = 1; k < n; ++k) {
        p *= q;
        if (p == Cyclotomic(1)) return false;
    }
    p *= q;
    return p == Cyclotomic(1);
}

// ---------------------------------------------------------------------------
// q-relations

QValidation validate_q_relation(const Relation& r) {
    if (!r.q) return {false, -1, "no root of unity attached"};
    if (r.length < 1) return {false, -1, "relation length must be positive"};
    if (r.length == 1) {
        if (*r.q != Cyclotomic(1)) return {false, -1, "length-1 relations force q = 1"};
    } else if (!is_primitive_root(*r.q, r.length)) {
        return {false, -1, "q is not a primitive root of order " + std::to_string(r.length)};
    }
    CenterObject zn = tensor_power_center(r.z, r.length);
    if (!is_center_morphism(r.y, zn, r.phi))
        return {false, -1, "phi is not a morphism of center objects"};
    int dz = r.z.z.dim;
    Mat czz = half_braiding_on(r.z, r.z.z);
    for (int slot = 0; slot + 2 <= r.length; ++slot) {
        int left = 1;
        for (int k = 0; k < slot; ++k) left *= dz;
        int right = 1;
        for (int k = slot + 2; k < r.length; ++k) right *= dz;
        Mat op = kron(Mat::identity(left), kron(czz, Mat::identity(right)));
        if (matmul(op, r.phi) != scalar_mul(*r.q, r.phi))
            return {false, slot, "braiding slot " + std::to_string(slot) + " does not scale by q"};
    }
    return {true, -1, ""};
}

bool satisfies_relation(const Relation& r, const CatModule& m) {
    if (!r.z.same_as(m.z)) throw std::invalid_argument("module is over a different center object");
    Mat fn = iterated_structure_map(m, r.length);
    Mat lhs = matmul(fn, kron(r.phi, Mat::identity(m.a.dim)));
    return lhs.is_zero();
}

// ---------------------------------------------------------------------------
// Path-algebra ideals

std::vector<Mat> default_arrow_basis(const DrinfeldQuiver& dq) {
    std::vector<Mat> basis;
    basis.reserve(dq.arrows.size());
    for (const auto& a : dq.arrows) basis.push_back(a.lambda);
    return basis;
}

Mat path_morphism(const DrinfeldQuiver& dq, const std::vector<Mat>& basis, const Path& p) {
    const Backend& b = *dq.z.backend;
    int dz = dq.z.z.dim;
    if (p.arrows.empty()) return Mat::identity(b.simple_dim(p.start));
    // omega = (id_{z^{N-1}} (x) lam_{a_1}) o ... o (id_z (x) lam_{a_{N-1}}) o lam_{a_N}
    Mat omega = basis[p.arrows.back()];
    int done = 1;
    for (int k = static_cast<int>(p.arrows.size()) - 2; k >= 0; --k) {
        ++done;
        int power = 1;
        for (int t = 1; t < done; ++t) power *= dz;
        omega = matmul(kron(Mat::identity(power), basis[p.arrows[static_cast<size_t>(k)]]), omega);
    }
    return omega;
}

std::vector<PathVector> ideal_generators(const Relation& r, const DrinfeldQuiver& dq,
                                         const std::vector<Mat>* arrow_basis) {
    const Backend& b = *dq.z.backend;
    std::vector<Mat> basis = arrow_basis ? *arrow_basis : default_arrow_basis(dq);
    std::vector<PathVector> out;
    int nv = dq.quiver.n_vertices;
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < nv; ++j) {
            auto mus = b.hom_basis(b.simple_obj(j), b.tensor(r.y.z, b.simple_obj(i)));
            if (mus.empty()) continue;
            auto paths = enumerate_basic_paths(dq.quiver, r.length, i, j);
            std::vector<Mat> path_mats;
            path_mats.reserve(paths.size());
            for (const Path& p : paths) path_mats.push_back(path_morphism(dq, basis, p));
            for (const Mat& mu : mus) {
                Mat psi = matmul(kron(r.phi, Mat::identity(b.simple_dim(i))), mu);
                auto coeffs = expand_in_basis(path_mats, psi);
                if (!coeffs)
                    throw std::logic_error("relation image is outside the basic-path span");
                PathVector pv;
                for (size_t k = 0; k < paths.size(); ++k) pv.add(paths[k], (*coeffs)[k]);
                out.push_back(std::move(pv));
            }
        }
    }
    return out;
}

QuotientDim quotient_dim_up_to(const Relation& r, const DrinfeldQuiver& dq, int max_len) {
    auto gens = ideal_generators(r, dq);
    const Quiver& q = dq.quiver;
    QuotientDim res;
    res.dim = 0;
    int last_nonzero = -1;
    for (int d = 0; d <= max_len; ++d) {
        long degree_dim = 0;
        for (int i = 0; i < q.n_vertices; ++i) {
            for (int j = 0; j < q.n_vertices; ++j) {
                auto paths = enumerate_basic_paths(q, d, i, j);
                if (paths.empty()) continue;
                std::map<Path, int> index;
                for (size_t k = 0; k < paths.size(); ++k) index[paths[k]] = static_cast<int>(k);
                // ideal piece: p2 o g o p1 for all generators and composable pads
                std::vector<std::vector<Cyclotomic>> rows;
                for (const auto& g : gens) {
                    int gs, gt, gl;
                    g.homogeneous_type(q, gs, gt, gl);
                    if (gl > d) continue;
                    for (int k = 0; k + gl <= d; ++k) {
                        int l = d - gl - k;
                        for (const Path& p1 : enumerate_basic_paths(q, k, i, gs)) {
                            for (const Path& p2 : enumerate_basic_paths(q, l, gt, j)) {
                                std::vector<Cyclotomic> row(paths.size());
                                for (const auto& [gp, gc] : g.terms()) {
                                    Path full{i, p1.arrows};
                                    full.arrows.insert(full.arrows.end(), gp.arrows.begin(),
                                                       gp.arrows.end());
                                    full.arrows.insert(full.arrows.end(), p2.arrows.begin(),
                                                       p2.arrows.end());
                                    row[static_cast<size_t>(index.at(full))] += gc;
                                }
                                rows.push_back(std::move(row));
                            }
                        }
                    }
                }
                long ideal_rank = 0;
                if (!rows.empty()) {
                    Mat msys(static_cast<int>(rows.size()), static_cast<int>(paths.size()));
                    for (size_t rr = 0; rr < rows.size(); ++rr)
                        for (size_t cc = 0; cc < rows[rr].size(); ++cc)
                            msys.at(static_cast<int>(rr), static_cast<int>(cc)) = rows[rr][cc];
                    ideal_rank = rank(msys);
                }
                degree_dim += static_cast<long>(paths.size()) - ideal_rank;
            }
        }
        if (degree_dim > 0) {
            last_nonzero = d;
            res.dim += degree_dim;
        } else {
            // a vanishing graded piece kills all higher degrees
            res.finite = true;
            res.last_nonzero_degree = last_nonzero;
            return res;
        }
    }
    res.finite = false;
    res.last_nonzero_degree = last_nonzero;
    return res;
}

// ---------------------------------------------------------------------------
// Constructors

Relation taft_relation(int n, const Cyclotomic& q) {
    if (!is_primitive_root(q, n))
        throw std::invalid_argument("taft_relation needs a primitive n-th root of unity");
    auto b = std::make_shared<Backend>(Backend::pointed_cyclic(n));
    std::vector<Mat> c(n);
    Cyclotomic pw(1);
    for (int g = 0; g < n; ++g) {
        c[g] = Mat(1, 1, {pw});
        pw *= q;
    }
    CenterObject z = make_center_object_pointed(b, {1}, c);
    Relation r;
    r.z = std::move(z);
    r.y = center_unit(b);
    r.length = n;
    r.phi = Mat::identity(1);
    r.q = q;
    return r;
}

namespace {

Mat kron_power(const Mat& m, int n) {
    Mat r = Mat::identity(1);
    for (int k = 0; k < n; ++k) r = kron(r, m);
    return r;
}

}  // namespace

Relation relation_sum(const Relation& r1, const Relation& r2) {
    if (r1.length != r2.length) throw std::invalid_argument("relation_sum: lengths differ");
    if (!r1.q || !r2.q || *r1.q != *r2.q)
        throw std::invalid_argument("relation_sum: roots of unity differ");
    Relation r;
    r.z = direct_sum_center(r1.z, r2.z);
    r.y = direct_sum_center(r1.y, r2.y);
    r.length = r1.length;
    r.q = r1.q;
    int dz1 = r1.z.z.dim, dz2 = r2.z.z.dim, dz = dz1 + dz2;
    Mat inc1(dz, dz1), inc2(dz, dz2);
    for (int u = 0; u < dz1; ++u) inc1.at(u, u) = Cyclotomic(1);
    for (int u = 0; u < dz2; ++u) inc2.at(dz1 + u, u) = Cyclotomic(1);
    Mat lift1 = matmul(kron_power(inc1, r.length), r1.phi);
    Mat lift2 = matmul(kron_power(inc2, r.length), r2.phi);
    int dy1 = r1.y.z.dim, dy2 = r2.y.z.dim;
    Mat phi(lift1.rows(), dy1 + dy2);
    for (int i = 0; i < lift1.rows(); ++i) {
        for (int j = 0; j < dy1; ++j) phi.at(i, j) = lift1.at(i, j);
        for (int j = 0; j < dy2; ++j) phi.at(i, dy1 + j) = lift2.at(i, j);
    }
    r.phi = std::move(phi);
    return r;
}

// ---------------------------------------------------------------------------
// Constrained random modules and the closure suite

namespace {

struct LinearSystem {
    // unknown layout: concatenated row-major entries of the solve arrows
    std::vector<int> solve_arrows;
    std::vector<int> offsets;  // per solve arrow, start of its entries
    int total_unknowns = 0;
};

LinearSystem layout_unknowns(const Quiver& q, const std::vector<int>& dims,
                             const std::vector<int>& solve_arrows) {
    LinearSystem ls;
    ls.solve_arrows = solve_arrows;
    ls.offsets.resize(solve_arrows.size());
    for (size_t k = 0; k < solve_arrows.size(); ++k) {
        ls.offsets[k] = ls.total_unknowns;
        const Arrow& a = q.arrows[static_cast<size_t>(solve_arrows[k])];
        ls.total_unknowns += dims[a.dst] * dims[a.src];
    }
    return ls;
}

int solve_pos(const LinearSystem& ls, int arrow) {
    for (size_t k = 0; k < ls.solve_arrows.size(); ++k)
        if (ls.solve_arrows[k] == arrow) return static_cast<int>(k);
    return -1;
}

}  // namespace

std::vector<int> find_solve_arrows(const Relation& r, const DrinfeldQuiver& dq) {
    auto gens = ideal_generators(r, dq);
    auto works = [&](const std::vector<int>& cand) {
        std::vector<bool> in(dq.quiver.arrows.size(), false);
        for (int a : cand) in[static_cast<size_t>(a)] = true;
        if (cand.empty()) return false;
        for (const auto& g : gens)
            for (const auto& [p, c] : g.terms()) {
                (void)c;
                int hits = 0;
                for (int a : p.arrows) hits += in[static_cast<size_t>(a)] ? 1 : 0;
                if (hits != 1) return false;
            }
        return true;
    };
    // candidate: arrows out of a greedily grown vertex set, adding a vertex
    // only when no generator term ends up touched more than once
    {
        std::vector<bool> chosen(dq.quiver.arrows.size(), false);
        for (int v = 0; v < dq.quiver.n_vertices; ++v) {
            std::vector<bool> next = chosen;
            for (size_t a = 0; a < dq.quiver.arrows.size(); ++a)
                if (dq.quiver.arrows[a].src == v) next[a] = true;
            bool overflow = false;
            for (const auto& g : gens)
                for (const auto& [p, c] : g.terms()) {
                    (void)c;
                    int hits = 0;
                    for (int a : p.arrows) hits += next[static_cast<size_t>(a)] ? 1 : 0;
                    if (hits > 1) overflow = true;
                }
            if (!overflow) chosen = std::move(next);
        }
        std::vector<int> cand;
        for (size_t a = 0; a < chosen.size(); ++a)
            if (chosen[a]) cand.push_back(static_cast<int>(a));
        if (works(cand)) return cand;
    }
    // candidates: arrows supported on one z-slot
    for (size_t s = 0; s < dq.z.z.slots.size(); ++s) {
        std::vector<int> cand;
        for (size_t a = 0; a < dq.arrows.size(); ++a) {
            // an arrow belongs to slot s when its lambda is supported on the
            // slot's z-indices
            const Mat& lam = dq.arrows[a].lambda;
            const Backend& b = *dq.z.backend;
            int di = b.simple_dim(dq.arrows[a].src);
            bool in_slot = false, off_slot = false;
            std::vector<bool> slot_idx(static_cast<size_t>(dq.z.z.dim), false);
            for (int idx : dq.z.z.slots[s].indices) slot_idx[static_cast<size_t>(idx)] = true;
            for (int row = 0; row < lam.rows(); ++row)
                for (int col = 0; col < lam.cols(); ++col) {
                    if (lam.at(row, col).is_zero()) continue;
                    int zi = row / di;
                    (slot_idx[static_cast<size_t>(zi)] ? in_slot : off_slot) = true;
                }
            if (in_slot && !off_slot) cand.push_back(static_cast<int>(a));
        }
        if (works(cand)) return cand;
    }
    return {};
}

CatModule random_constrained_module(const Relation& r, const DrinfeldQuiver& dq,
                                    const std::vector<int>& solve_arrows,
                                    const std::vector<int>& dims, Rng& rng) {
    const Quiver& q = dq.quiver;
    auto gens = ideal_generators(r, dq);
    long cond = dq.z.backend->conductor();

    for (int attempt = 0; attempt < 16; ++attempt) {
        // fixed random blocks for everything outside the solve set
        QuiverModule qm;
        qm.dims = dims;
        qm.maps.resize(q.arrows.size());
        LinearSystem ls = layout_unknowns(q, dims, solve_arrows);
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            Mat m(dims[q.arrows[a].dst], dims[q.arrows[a].src]);
            if (solve_pos(ls, static_cast<int>(a)) < 0)
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rng.small_scalar(cond);
            qm.maps[a] = std::move(m);
        }
        // assemble the linear system over the solve-arrow entries
        std::vector<std::vector<Cyclotomic>> rows;
        std::vector<Cyclotomic> rhs;
        for (const auto& g : gens) {
            int gs, gt, gl;
            g.homogeneous_type(q, gs, gt, gl);
            int nr = dims[gt], nc = dims[gs];
            if (nr == 0 || nc == 0) continue;
            std::vector<std::vector<Cyclotomic>> block(
                static_cast<size_t>(nr * nc), std::vector<Cyclotomic>(ls.total_unknowns));
            std::vector<Cyclotomic> cblock(static_cast<size_t>(nr * nc));
            for (const auto& [p, coef] : g.terms()) {
                int upos = -1;
                for (size_t t = 0; t < p.arrows.size(); ++t)
                    if (solve_pos(ls, p.arrows[t]) >= 0) {
                        if (upos >= 0) throw std::invalid_argument(
                            "generator term touches two solve arrows");
                        upos = static_cast<int>(t);
                    }
                if (upos < 0) {
                    // constant term
                    Mat val = scalar_mul(coef, path_action(q, qm, p));
                    for (int i = 0; i < nr; ++i)
                        for (int j = 0; j < nc; ++j)
                            cblock[static_cast<size_t>(i * nc + j)] += val.at(i, j);
                    continue;
                }
                // L * X * R with X unknown
                const int ua = p.arrows[static_cast<size_t>(upos)];
                Path right{p.start, {p.arrows.begin(), p.arrows.begin() + upos}};
                const Arrow& uar = q.arrows[static_cast<size_t>(ua)];
                Path left{uar.dst, {p.arrows.begin() + upos + 1, p.arrows.end()}};
                Mat rmat = path_action(q, qm, right);
                Mat lmat = path_action(q, qm, left);
                int off = ls.offsets[static_cast<size_t>(solve_pos(ls, ua))];
                int xr = dims[uar.dst], xc = dims[uar.src];
                for (int i = 0; i < nr; ++i)
                    for (int j = 0; j < nc; ++j)
                        for (int p1 = 0; p1 < xr; ++p1)
                            for (int p2 = 0; p2 < xc; ++p2)
                                block[static_cast<size_t>(i * nc + j)]
                                     [static_cast<size_t>(off + p1 * xc + p2)] +=
                                    coef * lmat.at(i, p1) * rmat.at(p2, j);
            }
            for (size_t br = 0; br < block.size(); ++br) {
                rows.push_back(std::move(block[br]));
                rhs.push_back(-cblock[br]);
            }
        }
        Mat sys(static_cast<int>(rows.size()), ls.total_unknowns);
        Mat b(static_cast<int>(rows.size()), 1);
        for (size_t i = 0; i < rows.size(); ++i) {
            for (int j = 0; j < ls.total_unknowns; ++j)
                sys.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
            b.at(static_cast<int>(i), 0) = rhs[i];
        }
        auto particular = solve(sys, b);
        if (!particular) continue;  // unlucky fixed part; re-draw
        Mat x = *particular;
        for (const auto& kv : kernel_basis(sys)) {
            Cyclotomic c = rng.small_scalar(cond);
            if (!c.is_zero()) x += scalar_mul(c, kv);
        }
        for (size_t k = 0; k < ls.solve_arrows.size(); ++k) {
            const Arrow& a = q.arrows[static_cast<size_t>(ls.solve_arrows[k])];
            Mat m(dims[a.dst], dims[a.src]);
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    m.at(i, j) = x.at(ls.offsets[k] + i * m.cols() + j, 0);
            qm.maps[static_cast<size_t>(ls.solve_arrows[k])] = std::move(m);
        }
        CatModule m = from_quiver_module(dq, qm);
        if (!satisfies_relation(r, m))
            throw std::logic_error("constrained sampler produced a non-solution");
        return m;
    }
    throw std::runtime_error("constrained sampler found no solution after 16 attempts");
}

ClosureReport closure_suite(const Relation& r, uint64_t seed, int trials) {
    auto validation = validate_q_relation(r);
    if (!validation.ok) throw std::invalid_argument("closure_suite: " + validation.message);
    DrinfeldQuiver dq = drinfeld_quiver(r.z);
    std::vector<int> solve_set = find_solve_arrows(r, dq);
    if (solve_set.empty())
        throw std::invalid_argument("closure_suite: no linear parametrization found");

    ClosureReport rep;
    rep.trials = trials;
    std::vector<std::string> fails(static_cast<size_t>(trials));
#ifdef FUSQ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(t));
        std::vector<int> dims(dq.quiver.n_vertices);
        for (int& d : dims) d = 1 + static_cast<int>(rng.next_range(2));
        try {
            CatModule m1 = random_constrained_module(r, dq, solve_set, dims, rng);
            CatModule m2 = random_constrained_module(r, dq, solve_set, dims, rng);
            std::string why;
            if (!satisfies_relation(r, fuse(m1, m2))) why += "fusion violates the relation; ";
            DualPair d1 = dual_modules(m1);
            if (!satisfies_relation(r, d1.right)) why += "right dual violates the relation; ";
            if (!satisfies_relation(r, d1.left)) why += "left dual violates the relation; ";
            fails[static_cast<size_t>(t)] = why;
        } catch (const std::exception& e) {
            fails[static_cast<size_t>(t)] = std::string("trial error: ") + e.what();
        }
    }
    for (int t = 0; t < trials; ++t) {
        if (!fails[static_cast<size_t>(t)].empty()) {
            ++rep.failures;
            rep.failing_trials.push_back(t);
            rep.counterexamples.push_back("trial " + std::to_string(t) + ": " +
                                          fails[static_cast<size_t>(t)]);
        }
    }
    return rep;
}

}  // namespace fusq
