#pragma once

#include "fusq/json_io.hpp"
#include "fusq/moduli.hpp"

namespace fusq {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CheckItem> items;

    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
    json to_json() const;
};

/// Named center objects used by the fixture suites.
CenterObject setup_pointed_cycle(int n, long power = 1);  // e_1 over vect_{Z/n}, c = zeta_n^power
CenterObject setup_rep_z2_v();
CenterObject setup_rep_z3_v();
CenterObject setup_rep_q8_v();

/// Drinfeld quiver fixtures: unit gives loops everywhere, pointed cycles,
/// and the three symmetric adjacency fixtures.
Report drinfeld_fixture_suite();

/// All four center simples of vect_{Z/2}: exactly two loops-quivers and two
/// 2-cycles.
Report rank2_classification_suite();

/// Monoidal structure on random modules: associativity, units, bimodule
/// balance, duality equations, locally nilpotent closure.
Report monoidal_suite(const CenterObject& z, uint64_t seed, int trials);

/// Gaussian binomial vanishing and the fusion expansion coefficients.
Report qbinomial_suite(int max_n);

/// Closure of a q-relation under fusion and duals, plus a pinned quotient
/// dimension when expected_quotient >= 0.
Report relation_suite(const Relation& r, uint64_t seed, int trials, long expected_quotient = -1,
                      int quotient_cap = 12);

/// Preprojective identifications: Darboux match over rep(Q8), twisted match
/// over pointed Z/n, the sign lemma, and closure of canonical-phi modules.
Report prepro_suite(uint64_t seed, int trials);

/// Moduli-space identities on random modules.
Report moduli_suite(const CenterObject& z, uint64_t seed, int trials);

/// Dictionary consistency: round-trips, path multiplicativity, pi-module
/// equivalence, relation/generator equivalence.
Report dictionary_suite(uint64_t seed, int trials);

}  // namespace fusq
