#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusq {

using Rational = mpq_class;

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Values are stored as coefficient vectors over the power basis
/// 1, z, ..., z^(phi(N)-1) of Q[x]/Phi_N(x), fully reduced. Two elements of
/// the same conductor are equal iff their coefficient vectors are equal;
/// elements of different conductors are compared after embedding both into
/// Q(zeta_lcm). No rounding occurs anywhere.
class Cyclotomic {
public:
    Cyclotomic();                                // zero in Q (conductor 1)
    explicit Cyclotomic(long v);
    explicit Cyclotomic(const Rational& v);
    Cyclotomic(long conductor, std::vector<Rational> coeffs);  // reduced form expected

    /// zeta_N^k.
    static Cyclotomic root_of_unity(long conductor, long k);

    /// Largest admissible conductor. Operations that would exceed it throw.
    static long conductor_bound();
    static void set_conductor_bound(long bound);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; throws if the element is irrational.
    Rational rational_value() const;

    /// Same value expressed in Q(zeta_M); requires conductor() | M.
    Cyclotomic lifted(long m) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    /// Multiplicative inverse; throws on zero.
    Cyclotomic inverse() const;
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string to_string() const;

    /// Euler phi and the integer coefficients of Phi_N (cached, monic).
    static long euler_phi(long n);
    static const std::vector<mpz_class>& cyclotomic_polynomial(long n);

private:
    long conductor_;
    std::vector<Rational> c_;  // length euler_phi(conductor_)

    void reduce_from(std::vector<Rational> poly);  // poly of any degree -> canonical
    static void check_conductor(long n);
};

Cyclotomic operator*(const Rational& r, const Cyclotomic& a);

}  // namespace fusq
