#pragma once

// Rational functions over Q, stored as a quotient of integer polynomials in
// canonical form: numerator and denominator are coprime in Q[x], their
// integer contents are coprime, and the denominator has positive leading
// coefficient. The canonical form is unique, so equality is coefficient-wise.

#include <optional>
#include <stdexcept>
#include <string>

#include "moebius.hpp"
#include "polynomial.hpp"

namespace galcov {

class RatFunction {
   public:
    RatFunction() : num_{}, den_{1} {}
    RatFunction(int c) : num_{Int(c)}, den_{1} {}
    RatFunction(const Rat& c) : num_{c.get_num()}, den_{c.get_den()} {}
    RatFunction(IntPolynomial num, IntPolynomial den) { canonicalize(std::move(num), std::move(den)); }
    RatFunction(const RatPolynomial& num, const RatPolynomial& den) {
        auto [ni, ns] = clear_denominators(num);
        auto [di, ds] = clear_denominators(den);
        Rat scale = ns / ds;
        canonicalize(ni * scale.get_num(), di * scale.get_den());
    }
    explicit RatFunction(const IntPolynomial& num) : num_(num), den_{1} {
        canonicalize(num_, den_);
    }

    // z |-> (pz+q)/(rz+s)
    static RatFunction from_homography(const Homography& h) {
        return RatFunction(IntPolynomial{h.q(), h.p()}, IntPolynomial{h.s(), h.r()});
    }

    const IntPolynomial& numerator() const { return num_; }
    const IntPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    std::optional<Rat> constant_value() const {
        if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
        if (num_.is_zero()) return Rat(0);
        return make_rat(num_.coeff(0), den_.coeff(0));
    }

    // degree as a self-map of P^1
    long map_degree() const { return std::max(num_.degree(), den_.degree()); }

    bool operator==(const RatFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunction& o) const { return !(*this == o); }

    RatFunction operator*(const RatFunction& o) const {
        return RatFunction(num_ * o.num_, den_ * o.den_);
    }
    RatFunction operator+(const RatFunction& o) const {
        return RatFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunction operator-(const RatFunction& o) const {
        return RatFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunction operator/(const RatFunction& o) const {
        if (o.is_zero()) throw std::domain_error("RatFunction: division by zero");
        return RatFunction(num_ * o.den_, den_ * o.num_);
    }

    ProjPoint evaluate(const ProjPoint& p) const {
        long d = map_degree();
        if (p.is_infinity()) {
            // leading homogeneous coefficients at weight d
            return ProjPoint(num_.degree() == d ? num_.leading() : Int(0),
                             den_.degree() == d ? den_.leading() : Int(0));
        }
        Int n = eval_homogeneous(num_, p.num, p.den) * pow_int(p.den, std::size_t(d - num_.degree()));
        Int dd = eval_homogeneous(den_, p.num, p.den) * pow_int(p.den, std::size_t(d - den_.degree()));
        if (n == 0 && dd == 0)
            throw std::domain_error("RatFunction: evaluation at a common root of num and den");
        return ProjPoint(n, dd);
    }

    // F(tau(z)) for a homography tau, reduced
    RatFunction substitute(const Homography& tau) const {
        long d = map_degree();
        IntPolynomial zn{tau.q(), tau.p()};
        IntPolynomial zd{tau.s(), tau.r()};
        return RatFunction(homogeneous_eval(num_, zn, zd, d), homogeneous_eval(den_, zn, zd, d));
    }

    std::string str(const std::string& var = "x") const {
        if (den_ == IntPolynomial{1}) return poly_to_string(num_, var);
        return "(" + poly_to_string(num_, var) + ") / (" + poly_to_string(den_, var) + ")";
    }

   private:
    // sum_i c_i * zn^i * zd^(weight - i)
    static IntPolynomial homogeneous_eval(const IntPolynomial& p, const IntPolynomial& zn,
                                          const IntPolynomial& zd, long weight) {
        IntPolynomial acc;
        IntPolynomial zdpow{1};
        std::vector<IntPolynomial> zdpows;
        for (long i = 0; i <= weight; ++i) {
            zdpows.push_back(zdpow);
            zdpow = zdpow * zd;
        }
        IntPolynomial znpow{1};
        for (long i = 0; i <= p.degree(); ++i) {
            if (!(p.coeff(std::size_t(i)) == 0))
                acc += znpow * zdpows[std::size_t(weight - i)] * p.coeff(std::size_t(i));
            znpow = znpow * zn;
        }
        return acc;
    }

    void canonicalize(IntPolynomial num, IntPolynomial den) {
        if (den.is_zero()) throw std::domain_error("RatFunction: zero denominator");
        if (num.is_zero()) {
            num_ = IntPolynomial{};
            den_ = IntPolynomial{1};
            return;
        }
        IntPolynomial g = gcd(num, den);  // primitive, positive lc
        num = divexact(num, g);
        den = divexact(den, g);
        Int c = gcd_int(content(num), content(den));
        num = divexact_scalar(num, c);
        den = divexact_scalar(den, c);
        if (sgn(den.leading()) < 0) {
            num = -num;
            den = -den;
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    static IntPolynomial divexact_scalar(const IntPolynomial& p, const Int& c) {
        std::vector<Int> out;
        out.reserve(std::size_t(p.degree()) + 1);
        for (const auto& e : p.coefficients()) out.push_back(divexact(e, c));
        return IntPolynomial(std::move(out));
    }

    IntPolynomial num_, den_;
};

}  // namespace galcov
