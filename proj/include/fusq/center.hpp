#pragma once

#include "fusq/backend.hpp"
#include "fusq/quiver.hpp"

namespace fusq {

/// An object of the Drinfeld center: a carrier together with half-braiding
/// matrices c_i: z(x)x_i -> x_i(x)z on every simple. The value on an
/// arbitrary carrier is assembled slot-by-slot from these.
struct CenterObject {
    BackendPtr backend;
    Obj z;
    std::vector<Mat> c;  // per simple i, shape (d_i * dz) x (dz * d_i)

    bool same_as(const CenterObject& o) const;
};

/// Builds and validates a center object from raw half-braiding data.
CenterObject make_center_object(BackendPtr b, Obj z, std::vector<Mat> half_braidings);

/// The unit (1, trivial half-braiding).
CenterObject center_unit(BackendPtr b);

/// Pointed backends: carrier listed as grades with multiplicity, braiding
/// given per group element g by an invertible grade-preserving matrix c(g)
/// on the carrier, multiplicative in g.
CenterObject make_center_object_pointed(BackendPtr b, const std::vector<int>& grades,
                                        const std::vector<Mat>& c_of_g);

/// A backend object with its canonical half-braiding (bicharacter for
/// pointed, flip for rep); inverse = true installs the reversed braiding
/// c^{-1}_{x, -} instead.
CenterObject center_from_backend_object(BackendPtr b, const Obj& x, bool inverse = false);

CenterObject direct_sum_center(const CenterObject& a, const CenterObject& b);
CenterObject tensor_center(const CenterObject& a, const CenterObject& b);
CenterObject tensor_power_center(const CenterObject& a, int n);

/// c_z(x): z(x)x -> x(x)z for an arbitrary carrier, via naturality and the
/// hexagon.
Mat half_braiding_on(const CenterObject& z, const Obj& x);
Mat half_braiding_inverse_on(const CenterObject& z, const Obj& x);

/// Checks that g: z -> w commutes with the half-braidings (and is a morphism
/// of the backend).
bool is_center_morphism(const CenterObject& z, const CenterObject& w, const Mat& g);

/// Throws with the failing simple pair on a hexagon/naturality violation.
void validate_center(const CenterObject& z);

/// The quiver of z (x) -: vertices are the simples, the arrow space from i
/// to j is Hom(x_j, z (x) x_i) with its deterministic basis.
struct DrinfeldQuiver {
    Quiver quiver;
    CenterObject z;
    struct ArrowDatum {
        int src, dst;
        Mat lambda;  // x_dst -> z (x) x_src
    };
    std::vector<ArrowDatum> arrows;  // parallel to quiver.arrows
};

DrinfeldQuiver drinfeld_quiver(const CenterObject& z);

/// Restriction to a vertex subset (full subquiver); `vertices` lists backend
/// simple indices in increasing order.
DrinfeldQuiver restrict_drinfeld_quiver(const DrinfeldQuiver& q, const std::vector<int>& vertices);

}  // namespace fusq
