#pragma once

#include "fusq/center.hpp"
#include "fusq/rng.hpp"

namespace fusq {

/// A module over the quiver z (x) -: a carrier a together with a structure
/// map f: z (x) a -> a that is a morphism of the backend.
struct CatModule {
    CenterObject z;
    Obj a;
    Mat f;  // (dim a) x (dim z * dim a)

    void validate() const;
};

CatModule unit_module(const CenterObject& z);

/// Fusion: carrier a (x) b with structure map
/// (f (x) id_b) + (id_a (x) g) o (c_z(a) (x) id_b). Kronecker flattening is
/// strictly associative, so no rebracketing is needed anywhere.
CatModule fuse(const CatModule& m1, const CatModule& m2);

struct DualPair {
    CatModule right;  // on a*
    CatModule left;   // on *a
};

/// Right/left duals; the defining property (evaluation and coevaluation are
/// module morphisms) is asserted on construction.
DualPair dual_modules(const CatModule& m);

enum class Side { left, right };

/// Bimodule action: right is f (x) id_x, left is (id_x (x) f)(c_z(x) (x) id_a).
CatModule act(const CatModule& m, const Obj& x, Side side);

/// Transport along a center morphism g: w -> z, yielding a module over w
/// with structure map f o (g (x) id_a). Strict monoidal in g.
CatModule pushforward(const CenterObject& w, const Mat& g, const CatModule& m);

/// Module morphisms h: a -> b with g o (id_z (x) h) = h o f.
bool is_cat_module_morphism(const Mat& h, const CatModule& m1, const CatModule& m2);
std::vector<Mat> cat_module_hom_basis(const CatModule& m1, const CatModule& m2);

Mat iterated_structure_map(const CatModule& m, int n);  // f^{*n}: z^n (x) a -> a

QuiverModule to_quiver_module(const DrinfeldQuiver& dq, const CatModule& m);
CatModule from_quiver_module(const DrinfeldQuiver& dq, const QuiverModule& qm);

/// Random module over z on a carrier of `n_slots` random simple summands;
/// coefficients over the small exact scalar set. With nilpotent = true the
/// structure map is supported on strictly level-decreasing blocks, which
/// forces local nilpotence.
CatModule random_module(const CenterObject& z, int n_slots, Rng& rng, bool nilpotent = false);

/// Random module on a prescribed carrier.
CatModule random_module_on(const CenterObject& z, const Obj& a, Rng& rng, bool nilpotent = false);

}  // namespace fusq
