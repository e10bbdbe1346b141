#include "fusq/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fusq {

std::vector<std::vector<int>> Quiver::adjacency() const {
    std::vector<std::vector<int>> adj(n_vertices, std::vector<int>(n_vertices, 0));
    for (const auto& a : arrows) adj[a.src][a.dst]++;
    return adj;
}

std::vector<int> Quiver::arrows_from_to(int i, int j) const {
    std::vector<int> r;
    for (size_t k = 0; k < arrows.size(); ++k)
        if (arrows[k].src == i && arrows[k].dst == j) r.push_back(static_cast<int>(k));
    return r;
}

int Quiver::arrow_index(const std::string& id) const {
    for (size_t k = 0; k < arrows.size(); ++k)
        if (arrows[k].id == id) return static_cast<int>(k);
    return -1;
}

void Quiver::validate() const {
    if (n_vertices <= 0) throw std::invalid_argument("quiver needs at least one vertex");
    std::set<std::string> ids;
    for (const auto& a : arrows) {
        if (a.src < 0 || a.src >= n_vertices || a.dst < 0 || a.dst >= n_vertices)
            throw std::invalid_argument("arrow endpoint out of range: " + a.id);
        if (!ids.insert(a.id).second) throw std::invalid_argument("duplicate arrow id: " + a.id);
    }
}

Quiver build_quiver(const std::vector<std::vector<int>>& adjacency) {
    Quiver q;
    q.n_vertices = static_cast<int>(adjacency.size());
    for (int i = 0; i < q.n_vertices; ++i) {
        if (static_cast<int>(adjacency[i].size()) != q.n_vertices)
            throw std::invalid_argument("adjacency matrix must be square");
        for (int j = 0; j < q.n_vertices; ++j) {
            if (adjacency[i][j] < 0) throw std::invalid_argument("negative arrow multiplicity");
            for (int k = 0; k < adjacency[i][j]; ++k) {
                q.arrows.push_back({"a" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                        std::to_string(k),
                                    i, j});
            }
        }
    }
    return q;
}

Quiver sum_quivers(const Quiver& q1, const Quiver& q2) {
    if (q1.n_vertices != q2.n_vertices)
        throw std::invalid_argument("sum_quivers: vertex counts differ");
    Quiver q = q1;
    std::set<std::string> used;
    for (const auto& a : q1.arrows) used.insert(a.id);
    for (auto a : q2.arrows) {
        while (used.count(a.id)) a.id += "'";
        used.insert(a.id);
        q.arrows.push_back(std::move(a));
    }
    q.validate();
    return q;
}

int Path::end(const Quiver& q) const {
    int v = start;
    for (int a : arrows) {
        if (q.arrows[a].src != v) throw std::invalid_argument("non-composable path");
        v = q.arrows[a].dst;
    }
    return v;
}

bool Path::operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (start != o.start) return start < o.start;
    return arrows < o.arrows;
}

std::string Path::to_string(const Quiver& q) const {
    if (arrows.empty()) return "e" + std::to_string(start);
    std::string s;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].id;
    }
    return s;
}

std::vector<Path> enumerate_basic_paths(const Quiver& q, int length, int from, int to) {
    if (length < 0) throw std::invalid_argument("negative path length");
    std::vector<Path> out;
    if (length == 0) {
        if (from == to) out.push_back({from, {}});
        return out;
    }
    Path cur{from, {}};
    // depth-first in arrow-index order gives the lexicographic order
    std::function<void(int, int)> go = [&](int v, int remaining) {
        if (remaining == 0) {
            if (v == to) out.push_back(cur);
            return;
        }
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].src != v) continue;
            cur.arrows.push_back(static_cast<int>(a));
            go(q.arrows[a].dst, remaining - 1);
            cur.arrows.pop_back();
        }
    };
    go(from, length);
    return out;
}

void PathVector::add(const Path& p, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PathVector::homogeneous_type(const Quiver& q, int& src, int& dst, int& len) const {
    if (terms_.empty()) throw std::invalid_argument("zero path vector has no type");
    bool first = true;
    for (const auto& [p, c] : terms_) {
        (void)c;
        if (first) {
            src = p.start;
            dst = p.end(q);
            len = p.length();
            first = false;
        } else if (p.start != src || p.end(q) != dst || p.length() != len) {
            throw std::invalid_argument("path vector is not homogeneous");
        }
    }
}

PathVector PathVector::operator-() const {
    PathVector r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

PathVector& PathVector::operator+=(const PathVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

PathVector& PathVector::operator*=(const Cyclotomic& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
}

std::string PathVector::to_string(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")" + p.to_string(q);
    }
    return s;
}

void QuiverModule::validate(const Quiver& q) const {
    if (static_cast<int>(dims.size()) != q.n_vertices)
        throw std::invalid_argument("dimension vector length mismatch");
    if (maps.size() != q.arrows.size()) throw std::invalid_argument("arrow map count mismatch");
    for (size_t k = 0; k < maps.size(); ++k) {
        if (maps[k].rows() != dims[q.arrows[k].dst] || maps[k].cols() != dims[q.arrows[k].src])
            throw std::invalid_argument("arrow matrix shape mismatch at " + q.arrows[k].id);
    }
}

Mat path_action(const Quiver& q, const QuiverModule& m, const Path& p) {
    p.end(q);  // throws on a non-composable arrow sequence
    Mat r = Mat::identity(m.dims[p.start]);
    for (int a : p.arrows) r = matmul(m.maps[a], r);
    return r;
}

Mat path_action(const Quiver& q, const QuiverModule& m, const PathVector& w) {
    int src, dst, len;
    w.homogeneous_type(q, src, dst, len);
    Mat r(m.dims[dst], m.dims[src]);
    for (const auto& [p, c] : w.terms()) r += scalar_mul(c, path_action(q, m, p));
    return r;
}

std::vector<std::pair<Path, Path>> coproduct(const Quiver& q, const Path& p) {
    std::vector<std::pair<Path, Path>> out;
    int n = p.length();
    for (int k = 0; k <= n; ++k) {
        Path alpha{p.start, {p.arrows.begin(), p.arrows.begin() + k}};
        Path beta{alpha.end(q), {p.arrows.begin() + k, p.arrows.end()}};
        out.push_back({beta, alpha});
    }
    return out;
}

bool is_module_morphism(const Quiver& q, const std::vector<Mat>& h, const QuiverModule& m1,
                        const QuiverModule& m2) {
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int i = q.arrows[a].src, j = q.arrows[a].dst;
        if (matmul(h[j], m1.maps[a]) != matmul(m2.maps[a], h[i])) return false;
    }
    return true;
}

QuiverModule gauge_act(const Quiver& q, const std::vector<Mat>& g, const QuiverModule& m) {
    std::vector<Mat> ginv(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        auto inv = solve(g[i], Mat::identity(g[i].rows()));
        if (!inv || g[i].rows() != g[i].cols()) throw std::invalid_argument("gauge matrix not invertible");
        ginv[i] = *inv;
    }
    QuiverModule r = m;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        int i = q.arrows[a].src, j = q.arrows[a].dst;
        r.maps[a] = matmul(g[j], matmul(m.maps[a], ginv[i]));
    }
    return r;
}

NilpotenceResult is_locally_nilpotent(const Quiver& q, const QuiverModule& m, int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    (void)max_degree;  // the dimension bound below always decides
    // span[i] = basis (columns) of the span of images of all length-n paths into vertex i
    std::vector<Mat> span(q.n_vertices);
    for (int i = 0; i < q.n_vertices; ++i) span[i] = Mat::identity(m.dims[i]);

    auto total_dim = [&](const std::vector<Mat>& s) {
        int d = 0;
        for (const auto& b : s) d += b.cols();
        return d;
    };

    int prev = total_dim(span);
    for (int n = 1;; ++n) {
        // next[j] = span of f_alpha(span[i]) over arrows alpha: i -> j,
        // reduced to an independent column basis
        std::vector<Mat> next(q.n_vertices);
        int dim = 0;
        for (int j = 0; j < q.n_vertices; ++j) {
            std::vector<Mat> imgs;
            int total_cols = 0;
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].dst != j) continue;
                Mat img = matmul(m.maps[a], span[q.arrows[a].src]);
                total_cols += img.cols();
                imgs.push_back(std::move(img));
            }
            Mat cat(m.dims[j], total_cols);
            int off = 0;
            for (const auto& img : imgs) {
                for (int r = 0; r < img.rows(); ++r)
                    for (int c = 0; c < img.cols(); ++c) cat.at(r, off + c) = img.at(r, c);
                off += img.cols();
            }
            Rref rr = rref(cat.transpose());
            Mat basis(m.dims[j], rr.rank);
            for (int r = 0; r < rr.rank; ++r)
                for (int c = 0; c < m.dims[j]; ++c) basis.at(c, r) = rr.r.at(r, c);
            next[j] = std::move(basis);
            dim += next[j].cols();
        }
        if (dim == 0) return {NilpotenceResult::Verdict::yes, n};
        if (dim == prev) return {NilpotenceResult::Verdict::no, -1};
        prev = dim;
        span = std::move(next);
    }
}

QuiverModule apply_quiver_morphism(const Quiver& q_src, const Quiver& p_dst,
                                   const std::vector<std::vector<Mat>>& phi,
                                   const QuiverModule& m) {
    if (q_src.n_vertices != p_dst.n_vertices)
        throw std::invalid_argument("quiver morphism over the identity needs equal vertex sets");
    m.validate(q_src);
    QuiverModule r;
    r.dims = m.dims;
    r.maps.resize(p_dst.arrows.size());
    for (int i = 0; i < q_src.n_vertices; ++i) {
        for (int j = 0; j < q_src.n_vertices; ++j) {
            auto qa = q_src.arrows_from_to(i, j);
            auto pa = p_dst.arrows_from_to(i, j);
            const Mat& blk = phi[i][j];
            if (blk.rows() != static_cast<int>(qa.size()) || blk.cols() != static_cast<int>(pa.size()))
                throw std::invalid_argument("quiver morphism block shape mismatch");
            for (size_t bcol = 0; bcol < pa.size(); ++bcol) {
                Mat acc(m.dims[j], m.dims[i]);
                for (size_t brow = 0; brow < qa.size(); ++brow) {
                    const Cyclotomic& c = blk.at(static_cast<int>(brow), static_cast<int>(bcol));
                    if (!c.is_zero()) acc += scalar_mul(c, m.maps[qa[brow]]);
                }
                r.maps[pa[bcol]] = std::move(acc);
            }
        }
    }
    return r;
}

}  // namespace fusq
