#pragma once

// Exact integer/rational scalar layer. Everything downstream works over
// mpz_class / mpq_class; this header adds the handful of number-theoretic
// helpers the library needs (perfect powers, multiplicative orders, small
// factorizations).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galcov {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact division; throws if the quotient is not integral.
inline Int divexact(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("divexact: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("divexact: inexact integer division");
    return q;
}

inline Rat divexact(const Rat& a, const Rat& b) {
    if (b == 0) throw std::domain_error("divexact: division by zero");
    return a / b;
}

// Canonicalized rational from a (non-canonical) integer pair.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int powmod(const Int& base, const Int& e, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// Least non-negative residue.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// v == s*w^n with s in {+1,-1} and w >= 0?  For even n only s = +1 counts:
// the valuation condition constrains |v| and the sign is a unit.
struct NthPowerResult {
    bool is_power = false;
    int sign = 1;
    Int root;
};

inline NthPowerResult nth_power_test(const Int& v, unsigned long n) {
    NthPowerResult res;
    if (n == 0) throw std::invalid_argument("nth_power_test: n must be >= 1");
    if (v == 0) {
        res.is_power = true;
        res.root = 0;
        return res;
    }
    res.sign = sgn(v);
    if (res.sign < 0 && n % 2 == 0) {
        // |v| may still be a perfect power, but -w^n with even n carries
        // sign -1, which we accept per the valuation-only convention.
    }
    Int a = abs_int(v);
    Int r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
    res.is_power = exact != 0;
    res.root = r;
    return res;
}

inline bool is_perfect_square(const Int& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& v) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

// Multiplicative order of t modulo m (t coprime to m). Linear scan is fine
// for the catalog moduli (<= 388800).
inline Int multiplicative_order(const Int& t, const Int& m) {
    if (gcd_int(t, m) != 1)
        throw std::invalid_argument("multiplicative_order: gcd(t,m) != 1");
    Int acc = mod_floor(t, m);
    Int k = 1;
    while (acc != 1) {
        acc = mod_floor(acc * t, m);
        k += 1;
        if (k > m) throw std::logic_error("multiplicative_order: no order found");
    }
    return k;
}

inline std::optional<Int> invert_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        return std::nullopt;
    return r;
}

inline bool probably_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

inline std::vector<std::uint32_t> primes_below(std::uint32_t bound) {
    std::vector<bool> sieve(bound, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p < bound; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (std::uint64_t q = std::uint64_t(p) * p; q < bound; q += p)
            sieve[q] = false;
    }
    return out;
}

// Full factorization by trial division, falling back to a primality test on
// the cofactor. Sufficient for the catalog quantities; throws if a composite
// cofactor survives the trial bound.
inline std::vector<std::pair<Int, unsigned>> factorize(Int n,
                                                       std::uint32_t trial_bound = 1000000) {
    std::vector<std::pair<Int, unsigned>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n && p < trial_bound; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n = divexact(n, p);
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (!probably_prime(n))
            throw std::runtime_error("factorize: composite cofactor beyond trial bound: " +
                                     n.get_str());
        out.emplace_back(n, 1);
    }
    return out;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace galcov
