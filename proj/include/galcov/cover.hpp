#pragma once

// Construction of the degree-#G cover h of P^1 attached to a finite subgroup
// of PGL_2(Q) and a pair of orbits, its generic-fiber polynomial, and the
// integral curve family A(x) + y^n B(x) together with its normalization
// constant. Also the exact identity checks backing the construction.

#include <optional>
#include <stdexcept>
#include <vector>

#include "cases.hpp"
#include "moebius.hpp"
#include "polynomial.hpp"
#include "ratfunction.hpp"

namespace galcov {

struct SameOrbitError : std::invalid_argument {
    explicit SameOrbitError(const std::string& w) : std::invalid_argument(w) {}
};

namespace detail {

inline void require_disjoint_orbits(const FiniteSubgroup& g, const ProjPoint& a,
                                    const ProjPoint& b) {
    for (const auto& pt : orbit(g, a))
        if (pt == b) throw SameOrbitError("points lie in the same orbit");
    // b in orb(a) iff a in orb(b); one direction suffices
    (void)b;
}

// prod over sigma in G of (x - sigma(p)), with the x - oo = 1 convention
inline RatPolynomial full_orbit_product(const FiniteSubgroup& g, const ProjPoint& p) {
    RatPolynomial prod{Rat(1)};
    for (const auto& h : g.elements) {
        ProjPoint q = h.apply(p);
        if (q.is_infinity()) continue;
        prod = prod * RatPolynomial{-q.value(), Rat(1)};
    }
    return prod;
}

}  // namespace detail

// x -> prod (x - sigma(a)) / prod (x - sigma(b)), reduced
inline RatFunction build_h(const FiniteSubgroup& g, const ProjPoint& a, const ProjPoint& b) {
    detail::require_disjoint_orbits(g, a, b);
    return RatFunction(detail::full_orbit_product(g, a), detail::full_orbit_product(g, b));
}

// R_t = a_part + t * b_part with a_part = prod (x - sigma(a)) and
// b_part = -prod (x - sigma(b)), both over Q.
struct RtPolynomial {
    RatPolynomial a_part;
    RatPolynomial b_part;

    RatPolynomial specialize(const Rat& t) const { return a_part + b_part * t; }
};

inline RtPolynomial build_rt(const FiniteSubgroup& g, const ProjPoint& a, const ProjPoint& b) {
    detail::require_disjoint_orbits(g, a, b);
    return {detail::full_orbit_product(g, a), -detail::full_orbit_product(g, b)};
}

// lambda = -(prod gamma_j)^omega / prod alpha_i, the scale that turns the
// monic model into the content-1 integral family. Requires b = 0 with
// infinity in its orbit and a finite free orbit for a.
inline Rat compute_lambda(const FiniteSubgroup& g, const ProjPoint& a) {
    auto orb0 = orbit(g, ProjPoint(0));
    bool has_inf = false;
    for (const auto& p : orb0) has_inf = has_inf || p.is_infinity();
    if (!has_inf) throw std::invalid_argument("compute_lambda: orbit of 0 does not contain oo");
    auto orba = orbit(g, a);
    Int prod_alpha = 1;
    for (const auto& p : orba) {
        if (p.is_infinity())
            throw std::invalid_argument("compute_lambda: orbit of a contains oo");
        prod_alpha *= p.den;
    }
    Int prod_gamma = 1;
    for (const auto& p : orb0)
        if (!p.is_infinity()) prod_gamma *= p.den;
    int omega = stabilizer_order(g, ProjPoint(0));
    return make_rat(-pow_int(prod_gamma, static_cast<unsigned long>(omega)), prod_alpha);
}

// The family A(x) + Y B(x) with Y standing for y^n.
struct CurveFamily {
    CaseId id;
    IntPolynomial A;  // prod (alpha_i x - beta_i) over orb(a)
    IntPolynomial B;  // prod (gamma_j x - delta_j)^omega over orb(0) \ {oo}
    int omega = 1;
    Rat lambda;

    // prod alpha_i; the prefactor clearing the monic model
    Int prefactor() const { return A.leading(); }

    // coefficients of A + vB, constant first, as (a, b) meaning a + b*v
    std::vector<std::pair<Int, Int>> bivariate_coefficients() const {
        std::size_t deg = std::size_t(A.degree());
        std::vector<std::pair<Int, Int>> out(deg + 1);
        for (std::size_t i = 0; i <= deg; ++i) out[i] = {A.coeff(i), B.coeff(i)};
        return out;
    }

    // (A + vB) / prefactor over Q
    RatPolynomial monic_specialization_q(const Int& v) const {
        RatPolynomial num = to_rational(A) + to_rational(B) * Rat(v);
        return num * make_rat(1, prefactor());
    }

    bool integral_at(const Int& v) const {
        Int m = prefactor();
        for (const auto& [a, b] : bivariate_coefficients())
            if (mod_floor(a + v * b, m) != 0) return false;
        return true;
    }
};

struct NotIntegralError : std::domain_error {
    explicit NotIntegralError(const std::string& w) : std::domain_error(w) {}
};

// (A + vB)/prod(alpha), monic with integer coefficients; throws when the
// specialization is not integral.
inline IntPolynomial specialize_monic(const CurveFamily& fam, const Int& v) {
    Int m = fam.prefactor();
    auto co = fam.bivariate_coefficients();
    std::vector<Int> out;
    out.reserve(co.size());
    for (const auto& [a, b] : co) {
        Int num = a + v * b;
        if (mod_floor(num, m) != 0)
            throw NotIntegralError("specialization is not integral at v = " + v.get_str());
        out.push_back(divexact(num, m));
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial linear_factor(const ProjPoint& p) {
    // alpha x - beta for the reduced fraction beta/alpha
    return IntPolynomial{-p.num, p.den};
}

inline CurveFamily build_curve(CaseId id) {
    const GroupCase& c = get_case(id);
    FiniteSubgroup g = generate_group(c.generators);
    auto orba = orbit(g, c.a);
    auto orb0 = orbit(g, ProjPoint(0));
    if (orba.size() != g.size())
        throw std::logic_error("catalog point a must have a free orbit");
    CurveFamily fam;
    fam.id = id;
    fam.omega = stabilizer_order(g, ProjPoint(0));
    fam.lambda = compute_lambda(g, c.a);
    IntPolynomial A{1};
    for (const auto& p : orba) A = A * linear_factor(p);
    IntPolynomial B{1};
    for (const auto& p : orb0) {
        if (p.is_infinity()) continue;
        for (int k = 0; k < fam.omega; ++k) B = B * linear_factor(p);
    }
    fam.A = std::move(A);
    fam.B = std::move(B);
    if (gcd(fam.A, fam.B).degree() != 0)
        throw std::logic_error("curve family parts share a factor");
    return fam;
}

struct OrbitIdentityReport {
    bool product_is_one = false;
    bool plus_one_is_constant = false;
    Rat constant;  // prod (sigma(z) + 1)
    bool ok() const { return product_is_one && plus_one_is_constant; }
};

// Exact rational-function identities prod sigma(z) = 1 and
// prod (sigma(z) + 1) = const for the order >= 3 catalog groups.
inline OrbitIdentityReport verify_orbit_identities(CaseId id) {
    const GroupCase& c = get_case(id);
    if (!c.trace.has_value())
        throw std::invalid_argument("orbit identities require the order >= 3 generator form");
    FiniteSubgroup g = generate_group(c.generators);
    RatFunction prod1(1), prod2(1);
    for (const auto& h : g.elements) {
        RatFunction hz = RatFunction::from_homography(h);
        prod1 = prod1 * hz;
        prod2 = prod2 * (hz + RatFunction(1));
    }
    OrbitIdentityReport rep;
    auto c1 = prod1.constant_value();
    rep.product_is_one = c1.has_value() && *c1 == Rat(1);
    auto c2 = prod2.constant_value();
    rep.plus_one_is_constant = c2.has_value();
    if (c2) rep.constant = *c2;
    return rep;
}

// h(tau(x)) == h(x) as reduced rational functions, for every tau in G.
inline bool verify_cover_invariance(const FiniteSubgroup& g, const ProjPoint& a,
                                    const ProjPoint& b) {
    RatFunction h = build_h(g, a, b);
    for (const auto& tau : g.elements)
        if (h.substitute(tau) != h) return false;
    return true;
}

// #orb(a) + #orb(b) - 2, the generic n-torsion rank of the family
inline int rank_count(const FiniteSubgroup& g, const ProjPoint& a, const ProjPoint& b) {
    return int(orbit(g, a).size() + orbit(g, b).size()) - 2;
}

}  // namespace galcov
