#include "doctest.h"

#include "fusq/cyclotomic.hpp"
#include "fusq/rng.hpp"

using namespace fusq;

TEST_CASE("fourth root of unity squares to -1") {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == Cyclotomic(-1));
}

TEST_CASE("1 + zeta3 + zeta3^2 = 0") {
    Cyclotomic z = Cyclotomic::root_of_unity(3, 1);
    CHECK((Cyclotomic(1) + z + z * z).is_zero());
}

TEST_CASE("inverse of zeta5 is zeta5^4") {
    Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
    CHECK(z.inverse() == Cyclotomic::root_of_unity(5, 4));
}

TEST_CASE("mixed-conductor arithmetic lands in the lcm field") {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    Cyclotomic p = i * w;
    CHECK(p.conductor() == 12);
    CHECK(p == Cyclotomic::root_of_unity(12, 3) * Cyclotomic::root_of_unity(12, 4));
    CHECK(p == Cyclotomic::root_of_unity(12, 7));
}

TEST_CASE("root_of_unity has exact order") {
    for (long n : {2L, 3L, 4L, 5L, 6L, 8L, 12L}) {
        Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
        Cyclotomic p(1);
        for (long k = 1; k < n; ++k) {
            p *= z;
            CHECK(p != Cyclotomic(1));
        }
        p *= z;
        CHECK(p == Cyclotomic(1));
    }
}

TEST_CASE("conductor bound is enforced") {
    CHECK_THROWS(Cyclotomic::root_of_unity(241, 1));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS(Cyclotomic().inverse());
}

namespace {
Cyclotomic random_cyc(Rng& rng, long n) {
    Cyclotomic r;
    for (long k = 0; k < Cyclotomic::euler_phi(n); ++k) {
        long num = static_cast<long>(rng.next_range(11)) - 5;
        long den = 1 + static_cast<long>(rng.next_range(4));
        r += Cyclotomic(Rational(num, den)) * Cyclotomic::root_of_unity(n, k);
    }
    return r;
}
}  // namespace

TEST_CASE("field axioms on random triples") {
    Rng rng(20240801);
    for (int trial = 0; trial < 50; ++trial) {
        long n = 1 + static_cast<long>(rng.next_range(12));
        Cyclotomic a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, 6);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Cyclotomic());
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    }
}

TEST_CASE("lift preserves values") {
    Cyclotomic z = Cyclotomic::root_of_unity(6, 1);
    CHECK(z.lifted(12) == z);
    CHECK(z.lifted(12).conductor() == 12);
}
