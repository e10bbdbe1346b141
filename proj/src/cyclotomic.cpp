#include "fusq/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fusq {

namespace {

long g_conductor_bound = 240;
std::mutex g_phi_mutex;

long mobius(long n) {
    long mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// x^d - 1 as an integer polynomial, ascending coefficients.
std::vector<mpz_class> x_pow_minus_one(long d) {
    std::vector<mpz_class> p(static_cast<size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<size_t>(d)] = 1;
    return p;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division of integer polynomials, divisor monic up to sign of leading term.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    std::vector<mpz_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class lead = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace

long Cyclotomic::euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

const std::vector<mpz_class>& Cyclotomic::cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<mpz_class>> cache;
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = prod_{d | n} (x^{n/d} - 1)^{mu(d)}
    std::vector<mpz_class> num{1};
    std::vector<mpz_class> den{1};
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long mu = mobius(d);
        if (mu == 1) num = poly_mul(num, x_pow_minus_one(n / d));
        else if (mu == -1) den = poly_mul(den, x_pow_minus_one(n / d));
    }
    auto phi = poly_div_exact(std::move(num), den);
    return cache.emplace(n, std::move(phi)).first->second;
}

void Cyclotomic::check_conductor(long n) {
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    if (n > g_conductor_bound)
        throw std::overflow_error("conductor " + std::to_string(n) + " exceeds bound " +
                                  std::to_string(g_conductor_bound));
}

long Cyclotomic::conductor_bound() { return g_conductor_bound; }
void Cyclotomic::set_conductor_bound(long bound) {
    if (bound < 1) throw std::invalid_argument("conductor bound must be positive");
    g_conductor_bound = bound;
}

Cyclotomic::Cyclotomic() : conductor_(1), c_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(long v) : conductor_(1), c_(1, Rational(v)) {}

Cyclotomic::Cyclotomic(const Rational& v) : conductor_(1), c_(1, v) { c_[0].canonicalize(); }

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
    check_conductor(conductor);
    size_t deg = static_cast<size_t>(euler_phi(conductor));
    if (coeffs.size() > deg) {
        reduce_from(std::move(coeffs));
    } else {
        coeffs.resize(deg, Rational(0));
        for (auto& q : coeffs) q.canonicalize();
        c_ = std::move(coeffs);
    }
}

void Cyclotomic::reduce_from(std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(conductor_);
    size_t deg = phi.size() - 1;  // = euler_phi(conductor_)
    // Remainder mod the monic Phi_N.
    while (poly.size() > deg) {
        Rational lead = poly.back();
        size_t shift = poly.size() - phi.size();
        if (lead != 0) {
            for (size_t i = 0; i + 1 < phi.size(); ++i) {
                poly[shift + i] -= lead * Rational(phi[i]);
            }
        }
        poly.pop_back();
    }
    poly.resize(deg, Rational(0));
    for (auto& q : poly) q.canonicalize();
    c_ = std::move(poly);
}

Cyclotomic Cyclotomic::root_of_unity(long conductor, long k) {
    check_conductor(conductor);
    k %= conductor;
    if (k < 0) k += conductor;
    std::vector<Rational> poly(static_cast<size_t>(k) + 1, Rational(0));
    poly[static_cast<size_t>(k)] = 1;
    Cyclotomic r;
    r.conductor_ = conductor;
    r.reduce_from(std::move(poly));
    return r;
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational: " + to_string());
    return c_[0];
}

Cyclotomic Cyclotomic::lifted(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
    check_conductor(m);
    long step = m / conductor_;
    std::vector<Rational> poly(static_cast<size_t>((c_.size() - 1) * step + 1), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) poly[k * static_cast<size_t>(step)] = c_[k];
    Cyclotomic r;
    r.conductor_ = m;
    r.reduce_from(std::move(poly));
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (conductor_ == o.conductor_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    long m = std::lcm(conductor_, o.conductor_);
    *this = lifted(m);
    Cyclotomic ob = o.lifted(m);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += ob.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (is_zero() || o.is_zero()) {
        *this = Cyclotomic();
        return *this;
    }
    long m = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = lifted(m);
    Cyclotomic b = o.lifted(m);
    std::vector<Rational> poly(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            poly[i + j] += a.c_[i] * b.c_[j];
        }
    }
    conductor_ = m;
    reduce_from(std::move(poly));
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
    // Extended Euclid in Q[x] against the irreducible Phi_N: u*a + v*Phi = 1.
    const auto& phi_int = cyclotomic_polynomial(conductor_);
    std::vector<Rational> r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    std::vector<Rational> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};  // coefficients of a

    auto degree = [](const std::vector<Rational>& p) { return static_cast<long>(p.size()) - 1; };
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };

    while (degree(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<Rational> q(static_cast<size_t>(degree(r0) - degree(r1)) + 1, Rational(0));
        std::vector<Rational> rem = r0;
        while (degree(rem) >= degree(r1) && !rem.empty()) {
            Rational lead = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = lead;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= lead * r1[i];
            trim(rem);
        }
        std::vector<Rational> u2 = u0;
        u2.resize(std::max(u2.size(), q.size() + u1.size() - 1), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) throw std::logic_error("inverse: gcd degenerated (Phi not coprime?)");
    Rational scale = Rational(1) / r1[0];
    for (auto& q : u1) q *= scale;
    Cyclotomic r;
    r.conductor_ = conductor_;
    r.reduce_from(std::move(u1));
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (conductor_ == o.conductor_) return c_ == o.c_;
    long m = std::lcm(conductor_, o.conductor_);
    return lifted(m).c_ == o.lifted(m).c_;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].get_str() << ")";
        if (k > 0) os << "*z" << conductor_ << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic operator*(const Rational& r, const Cyclotomic& a) { return Cyclotomic(r) * a; }

}  // namespace fusq
