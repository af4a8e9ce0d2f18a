#pragma once

// Arithmetic side conditions for the families: the operational base
// congruence, the per-case condition tables, the coprimality bound from
// pairwise orbit differences, the function lists and their multiplicative
// relation, field norms via resultants, and minimal polynomials by
// resultant elimination.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cases.hpp"
#include "cover.hpp"
#include "polynomial.hpp"
#include "ratfunction.hpp"

namespace galcov {

// All residues t mod prod(alpha_i) with A + tB == 0 (mod prod(alpha_i))
// coefficient-wise; exactly the t for which the monic model is integral.
inline std::vector<Int> base_congruence(const CurveFamily& fam) {
    Int m = fam.prefactor();
    auto co = fam.bivariate_coefficients();
    std::vector<Int> out;
    for (Int t = 0; t < m; ++t) {
        bool ok = true;
        for (const auto& [a, b] : co)
            if (mod_floor(a + t * b, m) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(t);
    }
    if (out.empty()) throw std::logic_error("base_congruence: no admissible residue");
    return out;
}

inline std::vector<Int> base_congruence(CaseId id) { return base_congruence(build_curve(id)); }

// The authoritative hard-coded table.
inline const CongruenceCondition& case_conditions(CaseId id) { return get_case(id).cond; }

struct PairwiseBound {
    Int product = 1;          // prod over unordered pairs
    std::vector<Int> primes;  // prime support of the product
};

// |alpha_i beta_j - beta_i alpha_j| / gcd(alpha_i, alpha_j) over unordered
// pairs of distinct finite points; a common divisor bound for the ideals
// generated by pairs of specialized linear factors.
inline PairwiseBound pairwise_gcd_bound(const std::vector<ProjPoint>& pts) {
    std::set<Int> support;
    PairwiseBound out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].is_infinity())
            throw std::invalid_argument("pairwise_gcd_bound: points must be finite");
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j])
                throw std::invalid_argument("pairwise_gcd_bound: duplicate points");
            Int val = abs_int(pts[i].den * pts[j].num - pts[i].num * pts[j].den);
            val = divexact(val, gcd_int(pts[i].den, pts[j].den));
            out.product *= val;
            for (const auto& [p, e] : factorize(val)) support.insert(p);
        }
    }
    out.primes.assign(support.begin(), support.end());
    return out;
}

// The paper's per-case list, verbatim.
inline const std::vector<SelmerFunction>& selmer_functions(CaseId id) {
    return get_case(id).selmer_list;
}

inline std::string selmer_function_str(const SelmerFunction& f, const GroupCase& c) {
    auto linstr = [](const Int& a, const Int& b) {
        IntPolynomial p{-b, a};
        return poly_to_string(p);
    };
    if (f.special) {
        const ProjPoint& u = *c.unit_pole;
        return "(" + linstr(u.den, u.num) + ")^2/" + c.special_const.get_str();
    }
    std::string num = linstr(f.alpha, f.beta);
    if (f.eps == 0) return num;
    const ProjPoint& u = *c.unit_pole;
    return "(" + num + ")/(" + linstr(u.den, u.num) + ")";
}

namespace detail {

// eps rule: the factor may be divided by the pole factor iff special_const
// divides its value at the pole.
inline int eps_for(const Int& alpha, const Int& beta, const GroupCase& c) {
    if (!c.unit_pole || c.special_const == 0) return 0;
    Int val = alpha * c.unit_pole->num - beta * c.unit_pole->den;
    return mod_floor(val, c.special_const) == 0 ? 1 : 0;
}

struct Lin {
    Int alpha, beta;
    int eps;
    bool operator<(const Lin& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        if (beta != o.beta) return beta < o.beta;
        return eps < o.eps;
    }
    bool operator==(const Lin& o) const = default;
};

}  // namespace detail

struct FunctionRelationReport {
    bool ok = false;
    int sum_eps = 0;                 // over the full numerator-factor list
    std::optional<SelmerFunction> removed;  // the dependent function dropped by the table
    std::vector<std::string> issues;

    void fail(std::string msg) {
        ok = false;
        issues.push_back(std::move(msg));
    }
};

// Verifies that the case's function list is exactly the orbit-derived list
// with one multiplicatively dependent member removed, and that the product
// relation prod psi_i = -y^n prod phi_j^omega collapses to the curve
// equation with consistent pole-factor bookkeeping.
inline FunctionRelationReport verify_function_relation(CaseId id) {
    const GroupCase& c = get_case(id);
    CurveFamily fam = build_curve(id);
    FiniteSubgroup g = generate_group(c.generators);
    FunctionRelationReport rep;
    rep.ok = true;

    std::vector<detail::Lin> psis, phis;
    for (const auto& p : orbit(g, c.a))
        psis.push_back({p.den, p.num, detail::eps_for(p.den, p.num, c)});
    for (const auto& p : orbit(g, ProjPoint(0))) {
        if (p.is_infinity()) continue;
        if (c.unit_pole && p == *c.unit_pole) continue;
        phis.push_back({p.den, p.num, detail::eps_for(p.den, p.num, c)});
    }

    IntPolynomial prod_psi{1};
    int sum_eps_psi = 0;
    for (const auto& f : psis) {
        prod_psi = prod_psi * IntPolynomial{-f.beta, f.alpha};
        sum_eps_psi += f.eps;
    }
    rep.sum_eps = sum_eps_psi;
    if (prod_psi != fam.A) rep.fail("numerator factors do not rebuild A");

    IntPolynomial prod_phi{1};
    int sum_eps_phi = 0;
    for (const auto& f : phis) {
        prod_phi = prod_phi * IntPolynomial{-f.beta, f.alpha};
        sum_eps_phi += f.eps;
    }
    if (c.unit_pole) prod_phi = prod_phi * linear_factor(*c.unit_pole);
    IntPolynomial phi_pow{1};
    for (int k = 0; k < fam.omega; ++k) phi_pow = phi_pow * prod_phi;
    if (phi_pow != fam.B) rep.fail("orbit-of-0 factors do not rebuild B");

    int removed_pole_weight = c.unit_pole ? fam.omega * (1 + sum_eps_phi) : 0;
    if (c.unit_pole && sum_eps_psi != removed_pole_weight)
        rep.fail("pole-factor bookkeeping mismatch");
    if (!c.unit_pole && sum_eps_psi != 0) rep.fail("unexpected eps without a pole");

    // table = full list minus exactly one non-special function
    std::multiset<detail::Lin> full;
    for (const auto& f : psis) full.insert(f);
    for (const auto& f : phis) full.insert(f);
    std::multiset<detail::Lin> table;
    bool saw_special = false;
    for (const auto& f : c.selmer_list) {
        if (f.special) {
            saw_special = true;
            continue;
        }
        table.insert({f.alpha, f.beta, f.eps});
    }
    if (saw_special != (c.special_const != 0)) rep.fail("special-function presence mismatch");
    for (const auto& f : table) {
        auto it = full.find(f);
        if (it == full.end()) {
            rep.fail("table function not derived from the orbits");
        } else {
            full.erase(it);
        }
    }
    if (full.size() != 1) {
        rep.fail("table must omit exactly one derived function");
    } else {
        const auto& r = *full.begin();
        SelmerFunction sf;
        sf.alpha = r.alpha;
        sf.beta = r.beta;
        sf.eps = r.eps;
        rep.removed = sf;
    }
    return rep;
}

// Res(P, Q) = prod Q(x_k) over the roots of monic P; for linear Q this is
// (-1)^deg * alpha^deg * P(beta/alpha).
inline Int resultant_with_linear(const IntPolynomial& p, const Int& alpha, const Int& beta) {
    Int val = eval_homogeneous(p, beta, alpha);
    return p.degree() % 2 == 0 ? val : Int(-val);
}

inline RatFunction selmer_to_ratfunction(const SelmerFunction& f, const GroupCase& c) {
    if (f.special) {
        IntPolynomial pole = linear_factor(*c.unit_pole);
        return RatFunction(pole * pole, IntPolynomial{c.special_const});
    }
    IntPolynomial num{-f.beta, f.alpha};
    IntPolynomial den{1};
    if (f.eps) den = linear_factor(*c.unit_pole);
    return RatFunction(num, den);
}

// Field norm of g at a root of monic P, as Res(P, num)/Res(P, pole)^eps; the
// special function uses Res(P, pole)^2 / special_const^deg.
inline Rat norm_of_function(const IntPolynomial& p, const SelmerFunction& f, const GroupCase& c) {
    if (p.is_zero() || !(p.leading() == 1))
        throw std::invalid_argument("norm_of_function: P must be monic");
    unsigned long deg = static_cast<unsigned long>(p.degree());
    if (f.special) {
        if (c.special_const == 0)
            throw std::invalid_argument("norm_of_function: case has no special function");
        Int rp = resultant_with_linear(p, c.unit_pole->den, c.unit_pole->num);
        if (rp == 0) throw std::domain_error("norm_of_function: pole is a root of P");
        return make_rat(rp * rp, pow_int(c.special_const, deg));
    }
    Int rnum = resultant_with_linear(p, f.alpha, f.beta);
    if (f.eps == 0) return Rat(rnum);
    Int rden = resultant_with_linear(p, c.unit_pole->den, c.unit_pole->num);
    if (rden == 0) throw std::domain_error("norm_of_function: pole is a root of P");
    return make_rat(rnum, rden);
}

struct MinPolyResult {
    IntPolynomial poly;  // primitive, positive leading coefficient
    int power = 1;       // char poly = poly^power (up to the primitive scale)

    // the characteristic polynomial was monic integral with unit constant
    bool monic_with_unit_constant() const {
        return !poly.is_zero() && poly.leading() == 1 && abs_int(poly.coeff(0)) == 1;
    }
};

// Characteristic polynomial of g modulo P by resultant elimination
// Res_x(P(x), den(g)(x) T - num(g)(x)), reduced to its squarefree part with
// the multiplicity reported.
inline MinPolyResult minimal_polynomial(const IntPolynomial& p, const RatFunction& g) {
    if (p.is_zero() || !(p.leading() == 1))
        throw std::invalid_argument("minimal_polynomial: P must be monic");
    const IntPolynomial& num = g.numerator();
    const IntPolynomial& den = g.denominator();
    // g defined at every root of P?
    if (den.degree() >= 1) {
        IntPolynomial common = gcd(p, den);
        if (common.degree() > 0)
            throw std::domain_error("minimal_polynomial: g undefined at a root of P");
    }
    using TPoly = Polynomial<Int>;
    using XPoly = Polynomial<TPoly>;
    long dx = std::max(num.degree(), den.degree());
    std::vector<TPoly> px, qx;
    for (long i = 0; i <= p.degree(); ++i) px.push_back(TPoly{p.coeff(std::size_t(i))});
    for (long i = 0; i <= dx; ++i) {
        // coefficient of x^i in den*T - num
        TPoly co{-num.coeff(std::size_t(i)), den.coeff(std::size_t(i))};
        qx.push_back(co);
    }
    TPoly res = resultant(XPoly(px), XPoly(qx));
    IntPolynomial charpoly(res.coefficients());
    if (charpoly.is_zero()) throw std::logic_error("minimal_polynomial: zero resultant");
    charpoly = primitive_part(charpoly);
    MinPolyResult out;
    if (is_squarefree(charpoly)) {
        out.poly = charpoly;
        out.power = 1;
        return out;
    }
    IntPolynomial sf = primitive_part(divexact(charpoly, gcd(charpoly, charpoly.derivative())));
    if (sf.degree() == 0 || charpoly.degree() % sf.degree() != 0)
        throw std::logic_error("minimal_polynomial: characteristic polynomial is not a power");
    int k = int(charpoly.degree() / sf.degree());
    IntPolynomial pw{1};
    for (int i = 0; i < k; ++i) pw = pw * sf;
    if (pw != charpoly)
        throw std::logic_error("minimal_polynomial: characteristic polynomial is not a power");
    out.poly = sf;
    out.power = k;
    return out;
}

inline MinPolyResult minimal_polynomial(const IntPolynomial& p, const SelmerFunction& f,
                                        const GroupCase& c) {
    return minimal_polynomial(p, selmer_to_ratfunction(f, c));
}

struct FunctionNorm {
    std::string function;
    Rat norm;
    bool is_nth_power = false;
    bool special_unit = true;  // for the special function: minpoly monic, constant +-1
};

struct SelmerReport {
    bool pass = false;
    std::vector<FunctionNorm> entries;
};

// Necessary Selmer condition at a specialization: every function norm is a
// signed perfect n-th power, and the special function is a unit (norm +-1
// with monic integral minimal polynomial). Requires admissible (y, n).
inline SelmerReport check_selmer_necessary(const GroupCase& c, const IntPolynomial& p,
                                           const Int& y, long n) {
    if (auto fail = check_conditions(c, y, n))
        throw std::invalid_argument("check_selmer_necessary: condition " + fail->label +
                                    " fails: " + fail->detail);
    SelmerReport rep;
    rep.pass = true;
    for (const auto& f : c.selmer_list) {
        FunctionNorm fn;
        fn.function = selmer_function_str(f, c);
        fn.norm = norm_of_function(p, f, c);
        if (f.special) {
            fn.is_nth_power = abs_int(fn.norm.get_num()) == 1 && fn.norm.get_den() == 1;
            fn.special_unit =
                fn.is_nth_power && minimal_polynomial(p, f, c).monic_with_unit_constant();
            if (!fn.special_unit) rep.pass = false;
        } else {
            if (fn.norm.get_den() != 1) {
                fn.is_nth_power = false;
            } else {
                auto r = nth_power_test(fn.norm.get_num(), static_cast<unsigned long>(n));
                // even n: a negative value is not an n-th power up to sign +1
                fn.is_nth_power = r.is_power && (n % 2 == 1 || r.sign >= 0);
            }
        }
        if (!fn.is_nth_power) rep.pass = false;
        rep.entries.push_back(std::move(fn));
    }
    return rep;
}

inline SelmerReport check_selmer_necessary(CaseId id, const Int& y, long n) {
    const GroupCase& c = get_case(id);
    CurveFamily fam = build_curve(id);
    IntPolynomial p = specialize_monic(fam, pow_int(y, static_cast<unsigned long>(n)));
    return check_selmer_necessary(c, p, y, n);
}

}  // namespace galcov
