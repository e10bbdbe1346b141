#pragma once

#include "fusq/catmodule.hpp"

namespace fusq {

/// dim Hom(unit, m) in the module category; the trace on the semisimple
/// moduli space, computed on an explicit representative.
int epsilon(const CatModule& m);

/// epsilon of the fusion: the pairing on classes.
int kappa(const CatModule& m1, const CatModule& m2);

/// Right duality, descending to the anti-automorphism of the graded ring.
CatModule duality_D(const CatModule& m);

/// A module together with its dimension vector in the Grothendieck ring.
struct GradedClass {
    CatModule rep;
    std::vector<int> dim_vector;
};

GradedClass graded_class(const CatModule& m);

/// Fusion of representatives; the grading multiplies in the Grothendieck
/// ring: (ab)_k = sum_{ij} a_i b_j N_{ij}^k.
GradedClass graded_mul(const GradedClass& c1, const GradedClass& c2);

std::vector<int> gr_product(const Backend& b, const std::vector<int>& a,
                            const std::vector<int>& c);

/// Grothendieck-ring action on modules: delegates to the bimodule action and
/// shifts the dimension vector multiplicatively.
GradedClass gr_act(const Obj& x, const GradedClass& c, Side side);

/// Trace of the action of a cycle path vector; gauge invariant.
Cyclotomic cycle_trace(const Quiver& q, const QuiverModule& m, const PathVector& w);

}  // namespace fusq
