#pragma once

// Dense univariate polynomials over an exact ring R (Int, Rat, or
// Polynomial<Int> for bivariate work). Coefficients are stored constant
// term first; the zero polynomial has an empty coefficient vector and
// degree -1.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace galcov {

template <class R>
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(int c) { coeffs_.assign(1, R(c)); trim(); }
    Polynomial(const R& c) { coeffs_.assign(1, c); trim(); }
    Polynomial(std::initializer_list<R> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<R> cs) : coeffs_(std::move(cs)) { trim(); }

    static Polynomial monomial(const R& c, std::size_t degree) {
        Polynomial p;
        if (!(c == R(0))) {
            p.coeffs_.assign(degree + 1, R(0));
            p.coeffs_[degree] = c;
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const R& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }
    const std::vector<R>& coefficients() const { return coeffs_; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == R(0)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial operator*(const R& s) const {
        Polynomial r(*this);
        for (auto& c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }

    template <class S>
    S evaluate(const S& x) const {
        S acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + S(coeffs_[i]);
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<R> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * R(int(i));
        return Polynomial(std::move(out));
    }

    // x^deg * P(1/x)
    Polynomial reversed() const {
        std::vector<R> out(coeffs_.rbegin(), coeffs_.rend());
        return Polynomial(std::move(out));
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == R(0)) coeffs_.pop_back();
    }
    std::vector<R> coeffs_;
};

using IntPolynomial = Polynomial<Int>;
using RatPolynomial = Polynomial<Rat>;

// ---- field-style division (R = Rat, or whenever lc divides exactly) ----

template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& a, const Polynomial<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial<R> q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        R c = divexact(r.leading(), b.leading());
        std::size_t shift = std::size_t(r.degree() - b.degree());
        Polynomial<R> t = Polynomial<R>::monomial(c, shift);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

// Exact quotient; throws if the division leaves a remainder.
template <class R>
Polynomial<R> divexact(const Polynomial<R>& a, const Polynomial<R>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("divexact: inexact polynomial division");
    return q;
}

// ---- integer-polynomial specifics ----

inline Int content(const IntPolynomial& p) {
    Int g = 0;
    for (const auto& c : p.coefficients()) g = gcd_int(g, c);
    return g;
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (sgn(p.leading()) < 0) g = -g;
    std::vector<Int> out;
    out.reserve(std::size_t(p.degree()) + 1);
    for (const auto& c : p.coefficients()) out.push_back(divexact(c, g));
    return IntPolynomial(std::move(out));
}

// Pseudo-remainder of a by b scaled with |lc(b)|^(deg a - deg b + 1), so the
// multiplier is positive and sign sequences survive (needed for Sturm).
inline IntPolynomial pseudo_rem_signsafe(IntPolynomial a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem: division by zero");
    Int lb = abs_int(b.leading());
    int lbsign = sgn(b.leading());
    while (!a.is_zero() && a.degree() >= b.degree()) {
        std::size_t shift = std::size_t(a.degree() - b.degree());
        Int c = a.leading();
        a = a * lb - IntPolynomial::monomial(lbsign > 0 ? c : Int(-c), shift) * b;
    }
    return a;
}

// gcd over Z via the primitive PRS; result is primitive with positive lc
// (content handled separately by callers that care).
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) {
        IntPolynomial r = b;
        if (!r.is_zero() && sgn(r.leading()) < 0) r = -r;
        return r;
    }
    if (b.is_zero()) {
        IntPolynomial r = a;
        if (sgn(r.leading()) < 0) r = -r;
        return r;
    }
    Int cont = gcd_int(content(a), content(b));
    IntPolynomial f = primitive_part(a), g = primitive_part(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = pseudo_rem_signsafe(f, g);
        f = g;
        g = r.is_zero() ? r : primitive_part(r);
    }
    return f * cont;
}

inline bool is_squarefree(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

// Common-denominator clearing: returns (primitive integer polynomial, scale)
// with q = scale * result and scale > 0 rational.
inline std::pair<IntPolynomial, Rat> clear_denominators(const RatPolynomial& q) {
    if (q.is_zero()) return {IntPolynomial{}, Rat(1)};
    Int den = 1;
    for (const auto& c : q.coefficients()) den = lcm_int(den, c.get_den());
    std::vector<Int> cs;
    cs.reserve(std::size_t(q.degree()) + 1);
    for (const auto& c : q.coefficients()) {
        Rat scaled = c * Rat(den);
        cs.push_back(scaled.get_num());
    }
    IntPolynomial ip(std::move(cs));
    Int cont = content(ip);
    if (sgn(ip.leading()) < 0) cont = -cont;
    std::vector<Int> out;
    for (const auto& c : ip.coefficients()) out.push_back(divexact(c, cont));
    return {IntPolynomial(std::move(out)), make_rat(cont, den)};
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rat> cs;
    cs.reserve(std::size_t(p.degree()) + 1);
    for (const auto& c : p.coefficients()) cs.emplace_back(c);
    return RatPolynomial(std::move(cs));
}

// Evaluate an integer polynomial at num/den without leaving Z:
// returns P(num/den) * den^deg.
inline Int eval_homogeneous(const IntPolynomial& p, const Int& num, const Int& den) {
    if (p.is_zero()) return 0;
    Int acc = 0;
    Int dpow = 1;
    // Horner from the top: acc = acc*num + c_i*den^(d-i)
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * num + p.coeff(std::size_t(i)) * dpow;
        if (i > 0) dpow *= den;
    }
    return acc;
}

// ---- resultants via fraction-free (Bareiss) elimination ----

// Determinant of a square matrix over an integral domain. Row swaps flip the
// sign; divisions are exact by the Sylvester identity.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    R prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == R(0)) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == R(0)) ++swap_row;
            if (swap_row == n) return R(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divexact(num, prev);
            }
            m[i][k] = R(0);
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return sign < 0 ? R(-det) : det;
}

// Standard resultant: det of the Sylvester matrix, so that for monic P,
// Res(P, Q) = prod Q(x_k) over the roots of P.
template <class R>
R resultant(const Polynomial<R>& a, const Polynomial<R>& b) {
    if (a.is_zero() || b.is_zero()) return R(0);
    const std::size_t m = std::size_t(a.degree());
    const std::size_t n = std::size_t(b.degree());
    if (m == 0 && n == 0) return R(1);
    if (m == 0) {
        R r(1);
        for (std::size_t i = 0; i < n; ++i) r = r * a.coeff(0);
        return r;
    }
    if (n == 0) {
        R r(1);
        for (std::size_t i = 0; i < m; ++i) r = r * b.coeff(0);
        return r;
    }
    const std::size_t size = m + n;
    std::vector<std::vector<R>> syl(size, std::vector<R>(size, R(0)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t j = 0; j <= m; ++j)
            syl[row][row + j] = a.coeff(m - j);
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t j = 0; j <= n; ++j)
            syl[n + row][row + j] = b.coeff(n - j);
    return bareiss_determinant(std::move(syl));
}

// ---- printing ----

template <class R>
std::string poly_to_string(const Polynomial<R>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        R c = p.coeff(std::size_t(i));
        if (c == R(0)) continue;
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool unit = cs == "1";
        if (i == 0) {
            os << cs;
        } else {
            if (!unit) os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Polynomial<R>& p) {
    return os << poly_to_string(p);
}

}  // namespace galcov
