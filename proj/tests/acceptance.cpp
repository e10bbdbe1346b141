// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every tolerance here is exact equality; there are no float comparisons
// anywhere in the library.

#include <iostream>
#include <vector>

#include "fusq/suites.hpp"

using namespace fusq;

namespace {

struct Criterion {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;

    void absorb(const Report& r) {
        for (const auto& it : r.items) {
            if (!it.pass) {
                pass = false;
                failures.push_back(r.suite + ": " + it.name +
                                   (it.detail.empty() ? "" : " (" + it.detail + ")"));
            }
        }
    }
};

}  // namespace

int main() {
    std::vector<Criterion> cs;

    {
        Criterion c{"1. Drinfeld quiver fixtures (loops, cycles, SL2 doubles, affine D4)"};
        c.absorb(drinfeld_fixture_suite());
        cs.push_back(std::move(c));
    }
    {
        Criterion c{"2. rank-2 pointed classification slice (2 + 2 of 4 center simples)"};
        c.absorb(rank2_classification_suite());
        cs.push_back(std::move(c));
    }
    {
        Criterion c{"3. monoidal structure suite, 100 seeded trials per backend"};
        c.absorb(monoidal_suite(setup_pointed_cycle(2), 7, 100));
        c.absorb(monoidal_suite(setup_pointed_cycle(3), 7, 100));
        c.absorb(monoidal_suite(setup_rep_z2_v(), 7, 100));
        c.absorb(monoidal_suite(setup_rep_q8_v(), 7, 100));
        cs.push_back(std::move(c));
    }
    {
        Criterion c{"4. q-binomial vanishing (N = 2..12) and expansion coefficients"};
        c.absorb(qbinomial_suite(12));
        cs.push_back(std::move(c));
    }
    {
        Criterion c{"5. Taft relation closure (n = 2, 3, 4) and quotient dimensions 4, 9"};
        c.absorb(relation_suite(taft_relation(2, Cyclotomic(-1)), 11, 100, 4));
        c.absorb(relation_suite(taft_relation(3, Cyclotomic::root_of_unity(3, 1)), 11, 100, 9));
        c.absorb(relation_suite(taft_relation(4, Cyclotomic::root_of_unity(4, 1)), 11, 100));
        cs.push_back(std::move(c));
    }
    {
        Criterion c{"6. preprojective identifications and canonical-phi closure"};
        c.absorb(prepro_suite(13, 100));
        cs.push_back(std::move(c));
    }
    {
        Criterion c{"7. moduli identities, 100 seeded trials per backend"};
        c.absorb(moduli_suite(setup_pointed_cycle(2), 19, 100));
        c.absorb(moduli_suite(setup_pointed_cycle(3), 19, 100));
        c.absorb(moduli_suite(setup_rep_z2_v(), 19, 100));
        c.absorb(moduli_suite(setup_rep_q8_v(), 19, 100));
        cs.push_back(std::move(c));
    }
    {
        Criterion c{"8. dictionary consistency, 100 seeded trials"};
        c.absorb(dictionary_suite(17, 100));
        cs.push_back(std::move(c));
    }

    bool all = true;
    for (const auto& c : cs) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        for (const auto& f : c.failures) std::cout << "       - " << f << "\n";
        all = all && c.pass;
    }
    std::cout << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
    return all ? 0 : 1;
}
