#pragma once

// Univariate polynomial arithmetic over GF(p) for word-sized p, just enough
// for distinct-degree factorization patterns: the multiset of irreducible
// factor degrees of a squarefree reduction, used as an irreducibility
// certificate source.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace galcov {

class FpPoly {
   public:
    FpPoly(std::uint64_t p) : p_(p) {}
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c)) { trim(); }

    static FpPoly from_int_poly(const IntPolynomial& f, std::uint64_t p) {
        std::vector<std::uint64_t> c;
        c.reserve(std::size_t(f.degree() + 1));
        for (long i = 0; i <= f.degree(); ++i)
            c.push_back(mpz_fdiv_ui(f.coeff(std::size_t(i)).get_mpz_t(), p));
        return FpPoly(p, std::move(c));
    }

    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

    std::uint64_t p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return long(c_.size()) - 1; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    bool operator==(const FpPoly& o) const { return c_ == o.c_; }

    FpPoly operator+(const FpPoly& o) const {
        std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
        return FpPoly(p_, std::move(r));
    }
    FpPoly operator-(const FpPoly& o) const {
        std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
        return FpPoly(p_, std::move(r));
    }
    FpPoly operator*(const FpPoly& o) const {
        if (is_zero() || o.is_zero()) return FpPoly(p_);
        std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = add(r[i + j], mul(c_[i], o.c_[j]));
        }
        return FpPoly(p_, std::move(r));
    }

    FpPoly mod(const FpPoly& m) const {
        FpPoly r = *this;
        std::uint64_t inv_lead = inv(m.c_.back());
        while (!r.is_zero() && r.degree() >= m.degree()) {
            std::uint64_t c = mul(r.c_.back(), inv_lead);
            std::size_t shift = std::size_t(r.degree() - m.degree());
            for (std::size_t i = 0; i < m.c_.size(); ++i)
                r.c_[i + shift] = sub(r.c_[i + shift], mul(c, m.c_[i]));
            r.trim();
        }
        return r;
    }

    FpPoly divide(const FpPoly& m) const {  // quotient; remainder discarded
        FpPoly r = *this;
        FpPoly q(p_);
        q.c_.assign(std::size_t(std::max(long(0), degree() - m.degree() + 1)), 0);
        std::uint64_t inv_lead = inv(m.c_.back());
        while (!r.is_zero() && r.degree() >= m.degree()) {
            std::uint64_t c = mul(r.c_.back(), inv_lead);
            std::size_t shift = std::size_t(r.degree() - m.degree());
            q.c_[shift] = c;
            for (std::size_t i = 0; i < m.c_.size(); ++i)
                r.c_[i + shift] = sub(r.c_[i + shift], mul(c, m.c_[i]));
            r.trim();
        }
        q.trim();
        return q;
    }

    FpPoly monic() const {
        if (is_zero()) return *this;
        std::uint64_t iv = inv(c_.back());
        std::vector<std::uint64_t> r(c_);
        for (auto& x : r) x = mul(x, iv);
        return FpPoly(p_, std::move(r));
    }

    static FpPoly gcd(FpPoly a, FpPoly b) {
        while (!b.is_zero()) {
            FpPoly r = a.mod(b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // x^(p^k-fold Frobenius step): base^p mod m
    static FpPoly powmod_p(const FpPoly& base, const FpPoly& m) {
        FpPoly acc(m.p_, {1});
        FpPoly sq = base;
        std::uint64_t e = m.p_;
        while (e) {
            if (e & 1) acc = (acc * sq).mod(m);
            sq = (sq * sq).mod(m);
            e >>= 1;
        }
        return acc;
    }

   private:
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b % p_) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return std::uint64_t((unsigned __int128)a * b % p_);
    }
    std::uint64_t inv(std::uint64_t a) const {
        // Fermat
        std::uint64_t acc = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

// Multiset (ascending) of irreducible-factor degrees of f mod p. Requires
// deg(f mod p) = deg f and f mod p squarefree; returns empty when not.
inline std::vector<int> factor_degree_pattern(const IntPolynomial& f, std::uint64_t p) {
    FpPoly fp = FpPoly::from_int_poly(f, p);
    if (fp.degree() != f.degree()) return {};
    FpPoly fmonic = fp.monic();
    // squarefree check mod p
    std::vector<std::uint64_t> dc;
    for (long i = 1; i <= fmonic.degree(); ++i)
        dc.push_back(std::uint64_t(i % p) * fmonic.coeff(std::size_t(i)) % p);
    FpPoly deriv(p, std::move(dc));
    if (deriv.is_zero() || FpPoly::gcd(fmonic, deriv).degree() != 0) return {};

    std::vector<int> pattern;
    FpPoly rest = fmonic;
    FpPoly w = FpPoly::x(p).mod(rest);
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            pattern.push_back(int(rest.degree()));
            break;
        }
        w = FpPoly::powmod_p(w, rest);
        FpPoly g = FpPoly::gcd(w - FpPoly::x(p), rest);
        if (g.degree() > 0) {
            for (long k = 0; k < g.degree() / d; ++k) pattern.push_back(d);
            rest = rest.divide(g);
            if (rest.degree() == 0) break;
            w = w.mod(rest);
        }
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

}  // namespace galcov
