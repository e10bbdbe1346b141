#pragma once

#include <optional>

#include "fusq/catmodule.hpp"

namespace fusq {

/// Polynomials in Z[q], ascending coefficients.
struct QPoly {
    std::vector<mpz_class> c;

    static QPoly one() { return {{mpz_class(1)}}; }
    static QPoly monomial(int k);
    QPoly operator+(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly& o) const;
    Cyclotomic eval(const Cyclotomic& q) const;
    std::string to_string() const;
};

/// Gaussian binomial (n choose k)_q via the Pascal recursion.
QPoly q_binomial(int n, int k);

/// Coefficients of the 2^N-term fusion expansion collected into the normal
/// forms f^{*i} * g^{*(N-i)}: each binary word contributes q^(inversions).
/// Index i of the result is the coefficient of the class with i f-letters;
/// it equals (N choose i)_q.
std::vector<QPoly> fuse_expansion_coefficients(int n);

bool is_primitive_root(const Cyclotomic& q, int n);

/// A homogeneous relation datum phi: y -> z^(x)N between center objects,
/// with an optional claimed root of unity q.
struct Relation {
    CenterObject z;
    CenterObject y;
    int length = 0;
    Mat phi;  // (dz^N) x (dim y)
    std::optional<Cyclotomic> q;
};

struct QValidation {
    bool ok = false;
    int failing_slot = -1;  // -1: not a slot failure
    std::string message;
};

/// Checks that phi is a center morphism, q is a primitive root of the right
/// order, and every adjacent braiding slot multiplies phi by exactly q.
QValidation validate_q_relation(const Relation& r);

/// Whether f^{*N} o (phi (x) id_a) vanishes.
bool satisfies_relation(const Relation& r, const CatModule& m);

/// An arrow basis for a Drinfeld quiver: one Hom-space matrix per arrow,
/// by default the hom_basis vectors the quiver was built with.
std::vector<Mat> default_arrow_basis(const DrinfeldQuiver& dq);

/// Path morphism x_j -> z^(x)len (x) x_i of a basic path in the given basis.
Mat path_morphism(const DrinfeldQuiver& dq, const std::vector<Mat>& basis, const Path& p);

/// The homogeneous length-N generators phi_lambda of the ideal, expanded in
/// the basic-path basis, ordered by (i, j, lambda index).
std::vector<PathVector> ideal_generators(const Relation& r, const DrinfeldQuiver& dq,
                                         const std::vector<Mat>* arrow_basis = nullptr);

struct QuotientDim {
    bool finite = false;
    long dim = 0;
    int last_nonzero_degree = -1;
};

/// Dimension of the path algebra modulo the two-sided ideal of the
/// generators, computed degree by degree up to max_len; finite only when
/// some graded piece vanishes within the cap.
QuotientDim quotient_dim_up_to(const Relation& r, const DrinfeldQuiver& dq, int max_len);

/// The length-n relation 1 -> z^(x)n over vect_{Z/n} with z = e_1 braided by
/// the primitive root q.
Relation taft_relation(int n, const Cyclotomic& q);

/// Block sum of two relations of equal length and equal q over z1 + z2.
Relation relation_sum(const Relation& r1, const Relation& r2);

/// Random module over r.z satisfying the relation, produced by fixing all
/// arrow blocks outside `solve_arrows` and solving the then-linear system.
/// Requires every generator term to contain exactly one solve arrow.
CatModule random_constrained_module(const Relation& r, const DrinfeldQuiver& dq,
                                    const std::vector<int>& solve_arrows,
                                    const std::vector<int>& dims, Rng& rng);

/// Picks a solve-arrow set automatically (arrows out of one vertex, or the
/// arrows of one z-slot); empty if no candidate has the linearity property.
std::vector<int> find_solve_arrows(const Relation& r, const DrinfeldQuiver& dq);

struct ClosureReport {
    int trials = 0;
    int failures = 0;
    std::vector<int> failing_trials;
    std::vector<std::string> counterexamples;
    bool ok() const { return failures == 0; }
};

/// Theorem-level closure check: random constrained pairs, then fusion and
/// both duals must satisfy the relation again. Exact.
ClosureReport closure_suite(const Relation& r, uint64_t seed, int trials);

}  // namespace fusq
