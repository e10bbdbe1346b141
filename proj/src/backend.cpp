#include "fusq/backend.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fusq {

// ---------------------------------------------------------------------------
// GroupTable

int GroupTable::inverse(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mul[a][b] == 0) return b;
    throw std::logic_error("group element has no inverse");
}

int GroupTable::element_order(int a) const {
    int x = a, n = 1;
    while (x != 0) {
        x = mul[x][a];
        ++n;
    }
    return n;
}

long GroupTable::exponent() const {
    long e = 1;
    for (int a = 0; a < order(); ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
    return e;
}

bool GroupTable::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mul[a][b] != mul[b][a]) return false;
    return true;
}

void GroupTable::validate() const {
    int n = order();
    if (n == 0) throw std::invalid_argument("empty group table");
    for (const auto& row : mul)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table not square");
    for (int a = 0; a < n; ++a) {
        if (mul[0][a] != a || mul[a][0] != a)
            throw std::invalid_argument("element 0 is not a two-sided unit");
        for (int b = 0; b < n; ++b) {
            if (mul[a][b] < 0 || mul[a][b] >= n) throw std::invalid_argument("table entry out of range");
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::invalid_argument("group table not associative");
        }
    }
    for (int a = 0; a < n; ++a) inverse(a);  // throws if missing
}

GroupTable GroupTable::cyclic(int n) {
    GroupTable g;
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    return g;
}

GroupTable GroupTable::klein_four() {
    // elements encoded as bit pairs, multiplication is xor
    GroupTable g;
    g.mul.assign(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) g.mul[a][b] = a ^ b;
    return g;
}

GroupTable GroupTable::binary_dihedral(int n) {
    // <a, b | a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1}>, order 4n.
    // Elements: a^k (k < 2n) as index k, and a^k b as index 2n + k.
    if (n < 1) throw std::invalid_argument("binary_dihedral needs n >= 1");
    int m = 2 * n;
    GroupTable g;
    g.mul.assign(4 * n, std::vector<int>(4 * n));
    auto idx = [m](int k, bool hasb) { return (hasb ? m : 0) + ((k % m) + m) % m; };
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            g.mul[idx(k, false)][idx(l, false)] = idx(k + l, false);
            g.mul[idx(k, false)][idx(l, true)] = idx(k + l, true);
            // (a^k b)(a^l) = a^{k-l} b
            g.mul[idx(k, true)][idx(l, false)] = idx(k - l, true);
            // (a^k b)(a^l b) = a^{k-l} b^2 = a^{k-l+n}
            g.mul[idx(k, true)][idx(l, true)] = idx(k - l + n, false);
        }
    }
    return g;
}

GroupTable GroupTable::quaternion8() { return binary_dihedral(2); }

// ---------------------------------------------------------------------------
// Obj helpers

bool Obj::same_carrier(const Obj& o) const {
    if (dim != o.dim || slots.size() != o.slots.size() || grades != o.grades) return false;
    for (size_t s = 0; s < slots.size(); ++s)
        if (slots[s].word != o.slots[s].word || slots[s].indices != o.slots[s].indices) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Backend construction

Backend Backend::pointed(GroupTable g, std::vector<std::vector<long>> braiding_exponents) {
    Backend b;
    b.kind_ = Kind::pointed;
    b.group_ = std::move(g);
    b.braid_exp_ = std::move(braiding_exponents);
    b.exponent_ = b.group_.exponent();
    b.conductor_ = b.exponent_;
    b.validate();
    return b;
}

Backend Backend::rep(GroupTable g, std::vector<Irrep> irreps) {
    Backend b;
    b.kind_ = Kind::rep;
    b.group_ = std::move(g);
    b.irreps_ = std::move(irreps);
    long cond = 1;
    for (const auto& ir : b.irreps_)
        for (const auto& m : ir.rho)
            for (const auto& x : m.entries()) cond = std::lcm(cond, x.conductor());
    b.conductor_ = cond;
    b.char_table_.assign(b.irreps_.size(), std::vector<Cyclotomic>(b.group_.order()));
    for (size_t i = 0; i < b.irreps_.size(); ++i)
        for (int e = 0; e < b.group_.order(); ++e) b.char_table_[i][e] = b.irreps_[i].rho[e].trace();
    b.validate();
    return b;
}

Backend Backend::pointed_cyclic(int n, long bichar_coeff) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m[a][b] = (bichar_coeff * a * b) % n;
    return pointed(GroupTable::cyclic(n), std::move(m));
}

Backend Backend::rep_cyclic(int n) {
    std::vector<Irrep> irr(n);
    for (int k = 0; k < n; ++k) {
        irr[k].name = "chi" + std::to_string(k);
        irr[k].dim = 1;
        irr[k].rho.resize(n);
        for (int a = 0; a < n; ++a)
            irr[k].rho[a] = Mat(1, 1, {Cyclotomic::root_of_unity(n, static_cast<long>(k) * a)});
    }
    return rep(GroupTable::cyclic(n), std::move(irr));
}

Backend Backend::rep_z2_sl2() { return rep_cyclic(2); }
Backend Backend::rep_z3_sl2() { return rep_cyclic(3); }

Backend Backend::rep_binary_dihedral(int n) {
    GroupTable g = GroupTable::binary_dihedral(n);
    int m = 2 * n;
    auto apow = [&](int k) { return ((k % m) + m) % m; };
    std::vector<Irrep> irr;

    // Four 1-dimensional irreps, factoring through the abelianization.
    // a -> s, b -> t with s^2 = 1 when n even (s = t^... handled below):
    // chi(a^k) = s^k, chi(a^k b) = s^k t; constraints: s^{2n} = 1, t^2 = s^n,
    // s = s^{-1}. So s = +-1 and t^2 = s^n.
    for (int si = 0; si < 2; ++si) {
        for (int ti = 0; ti < 2; ++ti) {
            long s = si ? -1 : 1;
            // t^2 = s^n: for s = 1 or n even, t = +-1; for s = -1 and n odd, t = +-i.
            bool t_imaginary = (s == -1) && (n % 2 == 1);
            Irrep ir;
            ir.name = std::string("chi_") + (si ? "s" : "1") + (ti ? "m" : "p");
            ir.dim = 1;
            ir.rho.resize(4 * n);
            for (int k = 0; k < m; ++k) {
                long sk = (s == -1 && k % 2 == 1) ? -1 : 1;
                ir.rho[apow(k)] = Mat(1, 1, {Cyclotomic(sk)});
                Cyclotomic t = t_imaginary ? Cyclotomic::root_of_unity(4, ti ? 3 : 1)
                                           : Cyclotomic(ti ? -1 : 1);
                ir.rho[m + apow(k)] = Mat(1, 1, {Cyclotomic(sk) * t});
            }
            irr.push_back(std::move(ir));
        }
    }

    // Two-dimensional irreps V_j, j = 1..n-1:
    // a -> diag(z^j, z^-j) with z = zeta_{2n}; b -> [[0, 1], [(-1)^j, 0]].
    for (int j = 1; j < n; ++j) {
        Irrep ir;
        ir.name = "V" + std::to_string(j);
        ir.dim = 2;
        ir.rho.resize(4 * n);
        Cyclotomic sign = (j % 2 == 0) ? Cyclotomic(1) : Cyclotomic(-1);
        for (int k = 0; k < m; ++k) {
            Cyclotomic zk = Cyclotomic::root_of_unity(m, static_cast<long>(j) * k);
            Cyclotomic zmk = Cyclotomic::root_of_unity(m, -static_cast<long>(j) * k);
            ir.rho[apow(k)] = Mat(2, 2, {zk, Cyclotomic(0), Cyclotomic(0), zmk});
            // a^k b -> rho(a)^k rho(b)
            ir.rho[m + apow(k)] = Mat(2, 2, {Cyclotomic(0), zk, sign * zmk, Cyclotomic(0)});
        }
        irr.push_back(std::move(ir));
    }
    return rep(std::move(g), std::move(irr));
}

Backend Backend::rep_q8() { return rep_binary_dihedral(2); }

// ---------------------------------------------------------------------------
// Simples and carriers

int Backend::rank() const {
    return kind_ == Kind::pointed ? group_.order() : static_cast<int>(irreps_.size());
}

int Backend::unit_simple() const {
    if (kind_ == Kind::pointed) return 0;
    for (int i = 0; i < rank(); ++i) {
        bool trivial = irreps_[i].dim == 1;
        for (int e = 0; trivial && e < group_.order(); ++e)
            if (irreps_[i].rho[e].at(0, 0) != Cyclotomic(1)) trivial = false;
        if (trivial) return i;
    }
    throw std::logic_error("rep backend has no trivial irrep");
}

int Backend::simple_dim(int i) const {
    return kind_ == Kind::pointed ? 1 : irreps_[i].dim;
}

const Cyclotomic& Backend::character(int irrep, int element) const {
    return char_table_[irrep][element];
}

int Backend::dual_simple(int i) const {
    if (kind_ == Kind::pointed) return group_.inverse(i);
    for (int k = 0; k < rank(); ++k) {
        bool match = true;
        for (int e = 0; match && e < group_.order(); ++e)
            if (char_table_[k][e] != char_table_[i][group_.inverse(e)]) match = false;
        if (match) return k;
    }
    throw std::logic_error("no dual simple found (irrep list not closed under duals)");
}

Obj Backend::simple_obj(int i) const {
    Obj a;
    a.dim = simple_dim(i);
    Slot s;
    s.word = {i};
    s.indices.resize(a.dim);
    std::iota(s.indices.begin(), s.indices.end(), 0);
    a.slots.push_back(std::move(s));
    if (kind_ == Kind::pointed) a.grades.assign(1, i);
    return a;
}

Obj Backend::unit_obj() const { return simple_obj(unit_simple()); }

int Backend::word_dim(const std::vector<int>& word) const {
    int d = 1;
    for (int w : word) d *= simple_dim(letter_simple(w));
    return d;
}

int Backend::word_grade(const std::vector<int>& word) const {
    int g = 0;
    for (int w : word) {
        int s = letter_simple(w);
        g = group_.times(g, letter_is_dual(w) ? group_.inverse(s) : s);
    }
    return g;
}

Obj Backend::tensor(const Obj& a, const Obj& b) const {
    Obj r;
    r.dim = a.dim * b.dim;
    for (const auto& sa : a.slots) {
        for (const auto& sb : b.slots) {
            Slot s;
            s.word = sa.word;
            s.word.insert(s.word.end(), sb.word.begin(), sb.word.end());
            s.indices.reserve(sa.indices.size() * sb.indices.size());
            for (int ia : sa.indices)
                for (int ib : sb.indices) s.indices.push_back(ia * b.dim + ib);
            r.slots.push_back(std::move(s));
        }
    }
    if (kind_ == Kind::pointed) {
        r.grades.resize(r.dim);
        for (int ia = 0; ia < a.dim; ++ia)
            for (int ib = 0; ib < b.dim; ++ib)
                r.grades[ia * b.dim + ib] = group_.times(a.grades[ia], b.grades[ib]);
    }
    return r;
}

Obj Backend::dsum(const Obj& a, const Obj& b) const {
    Obj r;
    r.dim = a.dim + b.dim;
    r.slots = a.slots;
    for (const auto& sb : b.slots) {
        Slot s = sb;
        for (int& i : s.indices) i += a.dim;
        r.slots.push_back(std::move(s));
    }
    if (kind_ == Kind::pointed) {
        r.grades = a.grades;
        r.grades.insert(r.grades.end(), b.grades.begin(), b.grades.end());
    }
    return r;
}

Obj Backend::dual(const Obj& a) const {
    // Dual basis keeps the index layout; each word letter dualizes in place
    // (kron commutes with entrywise transpose, so no order reversal).
    Obj r = a;
    for (auto& s : r.slots)
        for (int& w : s.word) w = dual_letter(w);
    if (kind_ == Kind::pointed)
        for (auto& g : r.grades) g = group_.inverse(g);
    return r;
}

Obj Backend::obj_from_summands(const std::vector<int>& simples) const {
    if (simples.empty()) throw std::invalid_argument("empty carrier");
    Obj r = simple_obj(simples[0]);
    for (size_t k = 1; k < simples.size(); ++k) r = dsum(r, simple_obj(simples[k]));
    return r;
}

Mat Backend::word_action(const std::vector<int>& word, int g) const {
    if (kind_ == Kind::pointed) {
        return Mat(1, 1, {Cyclotomic(1)});  // never used for pointed; grades carry everything
    }
    Mat m = Mat::identity(1);
    for (int w : word) {
        const Irrep& ir = irreps_[letter_simple(w)];
        m = kron(m, letter_is_dual(w) ? ir.rho[group_.inverse(g)].transpose() : ir.rho[g]);
    }
    return m;
}

Mat Backend::action(const Obj& a, int g) const {
    if (kind_ == Kind::pointed) throw std::logic_error("pointed objects have no group action");
    Mat m(a.dim, a.dim);
    for (const auto& s : a.slots) {
        Mat blk = word_action(s.word, g);
        for (size_t p = 0; p < s.indices.size(); ++p)
            for (size_t q = 0; q < s.indices.size(); ++q)
                m.at(s.indices[p], s.indices[q]) = blk.at(static_cast<int>(p), static_cast<int>(q));
    }
    return m;
}

bool Backend::is_morphism(const Mat& t, const Obj& from, const Obj& to) const {
    if (t.rows() != to.dim || t.cols() != from.dim) return false;
    if (kind_ == Kind::pointed) {
        for (int r = 0; r < t.rows(); ++r)
            for (int c = 0; c < t.cols(); ++c)
                if (!t.at(r, c).is_zero() && to.grades[r] != from.grades[c]) return false;
        return true;
    }
    for (int g = 0; g < group_.order(); ++g)
        if (matmul(t, action(from, g)) != matmul(action(to, g), t)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Hom spaces

std::vector<Mat> Backend::hom_block(const std::vector<int>& from_word,
                                    const std::vector<int>& to_word) const {
    int dc = word_dim(from_word);
    int dr = word_dim(to_word);
    if (kind_ == Kind::pointed) {
        // matrix units on grade-matching entries, (row, col) lex order
        std::vector<Mat> basis;
        int gf = word_grade(from_word);
        int gt = word_grade(to_word);
        if (gf == gt) {
            Mat e(1, 1, {Cyclotomic(1)});
            basis.push_back(e);
        }
        return basis;
    }
    // unknowns: t (dr x dc) row-major; equations: t rho_from(g) = rho_to(g) t
    int ng = group_.order();
    Mat sys(ng * dr * dc, dr * dc);
    for (int g = 0; g < ng; ++g) {
        Mat rf = word_action(from_word, g);
        Mat rt = word_action(to_word, g);
        for (int r = 0; r < dr; ++r)
            for (int c = 0; c < dc; ++c) {
                int row = (g * dr + r) * dc + c;
                // sum_k t[r,k] rf[k,c] - rt[r,k] t[k,c] = 0
                for (int k = 0; k < dc; ++k) sys.at(row, r * dc + k) += rf.at(k, c);
                for (int k = 0; k < dr; ++k) sys.at(row, k * dc + c) -= rt.at(r, k);
            }
    }
    std::vector<Mat> basis;
    for (const auto& v : kernel_basis(sys)) basis.push_back(unvectorize(v, dr, dc));
    return basis;
}

std::vector<Mat> Backend::hom_basis(const Obj& a, const Obj& b) const {
    std::vector<Mat> out;
    for (size_t st = 0; st < b.slots.size(); ++st) {
        for (size_t ss = 0; ss < a.slots.size(); ++ss) {
            const Slot& from = a.slots[ss];
            const Slot& to = b.slots[st];
            if (kind_ == Kind::pointed) {
                // per-entry matrix units on matching grades
                for (size_t p = 0; p < to.indices.size(); ++p)
                    for (size_t q = 0; q < from.indices.size(); ++q)
                        if (b.grades[to.indices[p]] == a.grades[from.indices[q]]) {
                            Mat t(b.dim, a.dim);
                            t.at(to.indices[p], from.indices[q]) = Cyclotomic(1);
                            out.push_back(std::move(t));
                        }
                continue;
            }
            for (const auto& blk : hom_block(from.word, to.word)) {
                Mat t(b.dim, a.dim);
                for (size_t p = 0; p < to.indices.size(); ++p)
                    for (size_t q = 0; q < from.indices.size(); ++q)
                        t.at(to.indices[p], from.indices[q]) =
                            blk.at(static_cast<int>(p), static_cast<int>(q));
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

int Backend::hom_dim(const Obj& a, const Obj& b) const {
    return static_cast<int>(hom_basis(a, b).size());
}

std::vector<int> Backend::tensor_decompose(int i, int j) const {
    std::vector<int> n(rank(), 0);
    if (kind_ == Kind::pointed) {
        n[group_.times(i, j)] = 1;
        return n;
    }
    // <chi_i chi_j, chi_k> = (1/|G|) sum_g chi_i(g) chi_j(g) chi_k(g^{-1})
    Rational order(group_.order());
    for (int k = 0; k < rank(); ++k) {
        Cyclotomic s;
        for (int g = 0; g < group_.order(); ++g)
            s += char_table_[i][g] * char_table_[j][g] * char_table_[k][group_.inverse(g)];
        Rational v = (s * Cyclotomic(Rational(1) / order)).rational_value();
        if (v.get_den() != 1 || v < 0) throw std::logic_error("non-integral tensor multiplicity");
        n[k] = static_cast<int>(v.get_num().get_si());
    }
    return n;
}

std::vector<int> Backend::multiplicities(const Obj& a) const {
    std::vector<int> m(rank(), 0);
    for (int i = 0; i < rank(); ++i) m[i] = hom_dim(simple_obj(i), a);
    return m;
}

// ---------------------------------------------------------------------------
// Braiding and duality structure

Mat Backend::braiding(const Obj& a, const Obj& b) const {
    Mat c(b.dim * a.dim, a.dim * b.dim);
    for (int ia = 0; ia < a.dim; ++ia)
        for (int ib = 0; ib < b.dim; ++ib) {
            Cyclotomic coef(1);
            if (kind_ == Kind::pointed)
                coef = Cyclotomic::root_of_unity(exponent_,
                                                 braid_exp_[a.grades[ia]][b.grades[ib]]);
            c.at(ib * a.dim + ia, ia * b.dim + ib) = coef;
        }
    return c;
}

Mat Backend::ev(const Obj& a) const {
    Mat e(1, a.dim * a.dim);
    for (int i = 0; i < a.dim; ++i) e.at(0, i * a.dim + i) = Cyclotomic(1);
    return e;
}

Mat Backend::coev(const Obj& a) const {
    Mat c(a.dim * a.dim, 1);
    for (int i = 0; i < a.dim; ++i) c.at(i * a.dim + i, 0) = Cyclotomic(1);
    return c;
}

Mat Backend::ev_left(const Obj& a) const { return ev(a); }
Mat Backend::coev_left(const Obj& a) const { return coev(a); }

PivotalData Backend::pivotal_data(int i) const {
    PivotalData p;
    p.dim = Cyclotomic(simple_dim(i));
    p.dual = dual_simple(i);
    Obj x = simple_obj(i);
    if (kind_ == Kind::pointed) {
        p.twist = Cyclotomic::root_of_unity(exponent_, braid_exp_[i][i]);
    } else {
        p.twist = Cyclotomic(1);
    }
    if (p.dual != i) {
        p.fs = 0;
        return p;
    }
    // FS(x): (id (x) phi) coev_x = FS(x) * (phi (x) id) coev_left_x
    Obj xd = dual(x);
    auto phis = hom_basis(xd, x);
    if (phis.size() != 1) throw std::logic_error("self-dual simple without 1-dim iso space");
    const Mat& phi = phis[0];
    Mat lhs = matmul(kron(Mat::identity(x.dim), phi), coev(x));
    Mat rhs = matmul(kron(phi, Mat::identity(x.dim)), coev_left(x));
    auto c = expand_in_basis({rhs}, lhs);
    if (!c || (*c)[0].is_zero()) throw std::logic_error("FS comparison failed");
    Cyclotomic fs = (*c)[0];
    if (fs == Cyclotomic(1)) p.fs = 1;
    else if (fs == Cyclotomic(-1)) p.fs = -1;
    else throw std::logic_error("FS indicator is not a sign: " + fs.to_string());
    return p;
}

int Backend::fs_by_characters(int i) const {
    if (kind_ != Kind::rep) throw std::logic_error("character FS only for rep backends");
    Cyclotomic s;
    for (int g = 0; g < group_.order(); ++g) s += char_table_[i][group_.times(g, g)];
    Rational v = (s * Cyclotomic(Rational(1, group_.order()))).rational_value();
    if (v == 1) return 1;
    if (v == -1) return -1;
    if (v == 0) return 0;
    throw std::logic_error("character indicator out of range");
}

// ---------------------------------------------------------------------------
// Validation

void Backend::validate() const {
    group_.validate();
    if (kind_ == Kind::pointed) {
        if (!group_.is_abelian()) throw std::invalid_argument("pointed backend needs an abelian group");
        int n = group_.order();
        if (static_cast<int>(braid_exp_.size()) != n)
            throw std::invalid_argument("braiding exponent matrix has wrong size");
        for (const auto& row : braid_exp_)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("braiding exponent matrix has wrong size");
        long e = exponent_;
        auto m = [&](int a, int b) { return ((braid_exp_[a][b] % e) + e) % e; };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (m(group_.times(a, b), c) != (m(a, c) + m(b, c)) % e)
                        throw std::invalid_argument("braiding exponents not a bicharacter (left)");
                    if (m(a, group_.times(b, c)) != (m(a, b) + m(a, c)) % e)
                        throw std::invalid_argument("braiding exponents not a bicharacter (right)");
                }
        return;
    }
    // rep backend
    if (irreps_.empty()) throw std::invalid_argument("rep backend needs at least one irrep");
    long sumsq = 0;
    for (const auto& ir : irreps_) {
        if (static_cast<int>(ir.rho.size()) != group_.order())
            throw std::invalid_argument("irrep " + ir.name + " misses group elements");
        for (const auto& m : ir.rho)
            if (m.rows() != ir.dim || m.cols() != ir.dim)
                throw std::invalid_argument("irrep " + ir.name + " has wrong matrix shape");
        for (int a = 0; a < group_.order(); ++a)
            for (int b = 0; b < group_.order(); ++b)
                if (matmul(ir.rho[a], ir.rho[b]) != ir.rho[group_.times(a, b)])
                    throw std::invalid_argument("irrep " + ir.name + " is not a homomorphism");
        sumsq += static_cast<long>(ir.dim) * ir.dim;
    }
    if (sumsq != group_.order())
        throw std::invalid_argument("irrep dimension squares do not sum to |G|");
    // absolute irreducibility and pairwise non-isomorphy over the chosen field
    for (size_t i = 0; i < irreps_.size(); ++i) {
        for (size_t j = 0; j < irreps_.size(); ++j) {
            int d = static_cast<int>(hom_block({static_cast<int>(i)}, {static_cast<int>(j)}).size());
            if (i == j && d != 1)
                throw std::invalid_argument("irrep " + irreps_[i].name +
                                            " not absolutely irreducible over the field");
            if (i != j && d != 0)
                throw std::invalid_argument("irreps " + irreps_[i].name + " and " + irreps_[j].name +
                                            " are isomorphic");
        }
    }
    unit_simple();  // throws if there is no trivial irrep
}

}  // namespace fusq
