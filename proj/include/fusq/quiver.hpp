#pragma once

#include <map>
#include <string>
#include <vector>

#include "fusq/linalg.hpp"
#include "fusq/matrix.hpp"

namespace fusq {

struct Arrow {
    std::string id;
    int src = 0;
    int dst = 0;
};

/// Combinatorial quiver. The arrow list order is part of the data: it fixes
/// the basis of every arrow space and the canonical order on paths.
struct Quiver {
    int n_vertices = 0;
    std::vector<Arrow> arrows;

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> arrows_from_to(int i, int j) const;  // arrow indices, in list order
    int arrow_index(const std::string& id) const;          // -1 if absent
    void validate() const;
};

/// Arrows named "a{src}_{dst}_{k}" with k counting parallel arrows.
Quiver build_quiver(const std::vector<std::vector<int>>& adjacency);

/// Same vertices, concatenated arrow lists, added adjacency. Ids must stay
/// unique across the sum.
Quiver sum_quivers(const Quiver& q1, const Quiver& q2);

/// A path is a composable arrow sequence read right to left:
/// arrows[0] leaves `start` first. Empty sequence = lazy path e_start.
struct Path {
    int start = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    int end(const Quiver& q) const;
    bool operator==(const Path& o) const { return start == o.start && arrows == o.arrows; }
    bool operator<(const Path& o) const;
    std::string to_string(const Quiver& q) const;
};

/// All basic paths of the given length from `from` to `to`, ordered
/// lexicographically in the fixed arrow order.
std::vector<Path> enumerate_basic_paths(const Quiver& q, int length, int from, int to);

/// Formal Q(zeta)-linear combination of paths; zero terms pruned, terms in
/// canonical order.
class PathVector {
public:
    PathVector() = default;
    explicit PathVector(const Path& p) { add(p, Cyclotomic(1)); }

    void add(const Path& p, const Cyclotomic& c);
    const std::map<Path, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Common (source, target, length); throws unless homogeneous.
    void homogeneous_type(const Quiver& q, int& src, int& dst, int& len) const;

    PathVector operator-() const;
    PathVector& operator+=(const PathVector& o);
    PathVector& operator*=(const Cyclotomic& s);
    friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
    bool operator==(const PathVector& o) const { return terms_ == o.terms_; }

    std::string to_string(const Quiver& q) const;

private:
    std::map<Path, Cyclotomic> terms_;
};

struct QuiverModule {
    std::vector<int> dims;  // per vertex
    std::vector<Mat> maps;  // per arrow index, shape dims[dst] x dims[src]

    void validate(const Quiver& q) const;
    bool operator==(const QuiverModule& o) const { return dims == o.dims && maps == o.maps; }
};

/// Composite of arrow matrices along the path; identity for lazy paths.
Mat path_action(const Quiver& q, const QuiverModule& m, const Path& p);

/// Linear extension; w must be homogeneous.
Mat path_action(const Quiver& q, const QuiverModule& m, const PathVector& w);

/// All splittings (beta, alpha) with p = beta o alpha, trivial ones included.
std::vector<std::pair<Path, Path>> coproduct(const Quiver& q, const Path& p);

bool is_module_morphism(const Quiver& q, const std::vector<Mat>& h, const QuiverModule& m1,
                        const QuiverModule& m2);

QuiverModule gauge_act(const Quiver& q, const std::vector<Mat>& g, const QuiverModule& m);

struct NilpotenceResult {
    enum class Verdict { yes, no, unknown } verdict;
    int witness_degree = -1;  // least n with all length-n basic paths acting as 0
};

/// Decides local nilpotence by tracking the span of length-n path images;
/// the chain strictly decreases until it hits 0 or stabilizes, so the search
/// terminates within total dimension + 1 steps.
NilpotenceResult is_locally_nilpotent(const Quiver& q, const QuiverModule& m, int max_degree);

/// Module transport along a quiver morphism over the identity. phi[i][j]
/// maps the arrow space P(i,j) into Q(i,j) (rows = Q-arrows i->j, cols =
/// P-arrows i->j, both in list order); m is a Q-module, the result a
/// P-module with matrices the phi-weighted combinations of m's.
QuiverModule apply_quiver_morphism(const Quiver& q_src, const Quiver& p_dst,
                                   const std::vector<std::vector<Mat>>& phi,
                                   const QuiverModule& m);

}  // namespace fusq
