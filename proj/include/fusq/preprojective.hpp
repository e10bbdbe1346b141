#pragma once

#include "fusq/relations.hpp"

namespace fusq {

struct DoubleQuiver {
    Quiver base;
    Quiver dq;               // base arrows first, then the reversed arrows
    std::vector<int> bar;    // involution on dq arrow indices
};

DoubleQuiver double_quiver(const Quiver& q);

/// omega_i^theta = sum_{alpha out of i} bar(alpha) o alpha
///               - theta * sum_{beta into i} beta o bar(beta), one per vertex.
std::vector<PathVector> preprojective_generators(const DoubleQuiver& d, const Cyclotomic& theta);

/// Whether the module satisfies all omega_i^theta.
bool is_pi_module(const DoubleQuiver& d, const QuiverModule& m, const Cyclotomic& theta);

/// The length-2 relation (id (x) phi0) o coev_z of a self-dual center object;
/// phi0: z* -> z. Valid q-relation (q = -1) when twist(z) * FS(z) = -1.
Relation self_dual_relation(const CenterObject& z, const Mat& phi0);

/// Symplectic pairing on the arrow space of Q_z for self-dual z:
/// lambda in Hom(x_j, z (x) x_i), mu in Hom(x_i, z (x) x_j),
/// <lambda, mu> = 1/(d_i d_j) tr( (ev_z o (id (x) phi0^{-1}) (x) id) o (id (x) lambda) o mu ).
Cyclotomic symplectic_pairing(const CenterObject& z, const Mat& phi0, int i, int j,
                              const Mat& lambda, const Mat& mu);

struct SymplecticArrowSpace {
    std::vector<Mat> basis;        // per dq arrow slot, the Darboux vectors
    std::vector<int> partner;      // slot of the symplectic partner
    std::vector<bool> positive;    // true on the chosen half-quiver
};

/// Darboux basis by symplectic Gram-Schmidt in the fixed arrow order (first
/// unpaired arrow, then its first non-orthogonal partner). Throws if the
/// pairing degenerates.
SymplecticArrowSpace darboux_basis(const DrinfeldQuiver& dq, const Mat& phi0);

/// Dx = x + dual(x) with the inverse braiding on the dual summand.
CenterObject double_object(BackendPtr b, const Obj& x);

/// phi = coev_x - (c_{x,x*} o coev_x) in Hom(1, Dx (x) Dx).
Mat canonical_phi(BackendPtr b, const Obj& x);

struct ProjectiveCentralizer {
    std::vector<int> simples;
    std::vector<Cyclotomic> lambdas;  // double-braiding scalar per listed simple
};

ProjectiveCentralizer projective_centralizer(const Backend& b, const Obj& x);

/// The Drinfeld quiver of Dx restricted to the projective centralizer of x.
DrinfeldQuiver centralizer_quiver(BackendPtr b, const Obj& x);

/// Arrow data of a Q_{Dx} quiver split into the x-part and the dual part,
/// with the dual part re-based so that the two parts pair to delta under the
/// trace pairing; bar maps arrow slots across the two parts.
struct PairedArrowBasis {
    std::vector<Mat> basis;    // per dq arrow slot
    std::vector<int> bar;      // partner slot
    std::vector<bool> plain;   // true on the x-part
};

PairedArrowBasis paired_arrow_basis(const DrinfeldQuiver& dq_of_double, const Obj& x);

/// Ideal generators of the canonical phi on the centralizer quiver of x, in
/// the paired basis. For simple x these equal 1/d_i times the
/// theta-twisted generators with theta the twist of x.
std::vector<PathVector> twisted_prepro_from_phi(BackendPtr b, const Obj& x,
                                                DrinfeldQuiver* out_quiver = nullptr,
                                                PairedArrowBasis* out_basis = nullptr);

/// The reference generators on the same quiver via the paired bar structure.
std::vector<PathVector> twisted_generators_on(const DrinfeldQuiver& dq,
                                              const PairedArrowBasis& basis,
                                              const Cyclotomic& theta);

}  // namespace fusq
