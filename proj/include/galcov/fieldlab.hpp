#pragma once

// Family engine: specialize the catalog curves at admissible y, certify
// irreducibility through finite-field degree patterns, verify the displayed
// subfield identities, and serialize candidates as JSON lines / CSV.

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cases.hpp"
#include "cover.hpp"
#include "modpoly.hpp"
#include "realroots.hpp"
#include "selmer.hpp"

namespace galcov {

struct ConditionError : std::invalid_argument {
    std::string label;
    ConditionError(std::string lbl, const std::string& detail)
        : std::invalid_argument("condition " + lbl + " fails: " + detail), label(std::move(lbl)) {}
};

enum class Irreducibility { Yes, No, Inconclusive };

inline std::string to_string(Irreducibility s) {
    switch (s) {
        case Irreducibility::Yes: return "yes";
        case Irreducibility::No: return "no";
        case Irreducibility::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct IrreducibilityResult {
    Irreducibility status = Irreducibility::Inconclusive;
    std::optional<IntPolynomial> factor;  // witness when status == No
    std::string method;
};

namespace detail {

inline std::vector<Int> divisors_bounded(const Int& n, std::size_t cap) {
    std::vector<Int> divs{1};
    auto fac = factorize(abs_int(n));
    for (const auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > cap) return divs;  // truncated; callers treat as partial
            }
        }
    }
    return divs;
}

}  // namespace detail

// Degree-pattern certificate: "yes" when the intersection of subset-sums of
// factor-degree patterns modulo several good primes admits only {0, deg};
// "no" with a witness from the rational-root scan or a square discriminant;
// honest "inconclusive" otherwise.
inline IrreducibilityResult irreducible(const IntPolynomial& p_in, int prime_budget = 25) {
    IrreducibilityResult out;
    if (p_in.is_zero() || p_in.degree() < 1)
        throw std::invalid_argument("irreducible: need degree >= 1");
    IntPolynomial p = primitive_part(p_in);
    const long deg = p.degree();
    if (deg == 1) {
        out.status = Irreducibility::Yes;
        out.method = "linear";
        return out;
    }

    // rational roots p/q with p | constant term, q | leading coefficient
    {
        bool complete = true;
        std::vector<Int> nums, dens;
        if (p.coeff(0) == 0) {
            out.status = Irreducibility::No;
            out.factor = IntPolynomial{0, 1};
            out.method = "rational-root";
            return out;
        }
        try {
            nums = detail::divisors_bounded(p.coeff(0), 4096);
            dens = detail::divisors_bounded(p.leading(), 4096);
        } catch (const std::runtime_error&) {
            complete = false;
            nums = {1, abs_int(p.coeff(0))};
            dens = {1, abs_int(p.leading())};
        }
        if (nums.size() > 4096 || dens.size() > 4096) complete = false;
        for (const auto& num : nums) {
            for (const auto& den : dens) {
                if (gcd_int(num, den) != 1) continue;
                for (int sign : {1, -1}) {
                    Int nn = sign > 0 ? num : Int(-num);
                    if (eval_homogeneous(p, nn, den) == 0) {
                        out.status = Irreducibility::No;
                        out.factor = IntPolynomial{-nn, den};
                        out.method = "rational-root";
                        return out;
                    }
                }
            }
        }
        (void)complete;  // an incomplete scan can still only miss "no" witnesses
    }

    Int disc = discriminant(p);
    if (disc == 0) {
        out.status = Irreducibility::No;
        out.factor = gcd(p, p.derivative());
        out.method = "repeated-factor";
        return out;
    }
    if (deg == 2) {
        // reducible over Q iff the discriminant is a perfect square
        if (is_perfect_square(disc)) {
            Int r = isqrt(disc);
            // root (-b + r) / 2a
            out.status = Irreducibility::No;
            out.factor = primitive_part(IntPolynomial{-(r - p.coeff(1)), 2 * p.leading()});
            out.method = "square-discriminant";
        } else {
            out.status = Irreducibility::Yes;
            out.method = "nonsquare-discriminant";
        }
        return out;
    }

    Int bad = abs_int(p.leading() * disc);
    std::uint32_t mask_all = (1u << (deg + 1)) - 1;
    std::uint32_t inter = mask_all;
    int used = 0;
    for (std::uint64_t q = 2; used < prime_budget && q < 100000; ++q) {
        bool isprime = q >= 2;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                isprime = false;
                break;
            }
        if (!isprime) continue;
        if (mpz_fdiv_ui(bad.get_mpz_t(), q) == 0) continue;
        auto pattern = factor_degree_pattern(p, q);
        if (pattern.empty()) continue;  // defensive; good primes give clean patterns
        ++used;
        std::uint32_t sums = 1;  // bit i: some subset of factors has total degree i
        for (int d : pattern) sums |= sums << d;
        inter &= sums;
        if (inter == ((1u << deg) | 1u)) {
            out.status = Irreducibility::Yes;
            out.method = "degree-patterns";
            return out;
        }
    }
    out.status = Irreducibility::Inconclusive;
    out.method = "degree-patterns";
    return out;
}

struct FieldCandidate {
    CaseId id;
    Int y;
    long n = 0;
    IntPolynomial poly;
    Signature signature;
    long disc_bits = 0;
    std::map<std::string, bool> checks;
    Irreducibility irreducibility = Irreducibility::Inconclusive;

    // conjunction of the recorded checks; an inconclusive certificate does
    // not block, a disproved one does
    bool all_checks_pass() const {
        for (const auto& [k, v] : checks)
            if (!v) return false;
        return irreducibility != Irreducibility::No;
    }
};

// Specialize a catalog family at an admissible (y, n): the monic integral
// polynomial plus every per-candidate verification the library can decide.
inline FieldCandidate specialize(CaseId id, const Int& y, long n) {
    const GroupCase& c = get_case(id);
    if (auto fail = check_conditions(c, y, n)) throw ConditionError(fail->label, fail->detail);
    CurveFamily fam = build_curve(id);
    Int v = pow_int(y, static_cast<unsigned long>(n));

    FieldCandidate cand;
    cand.id = id;
    cand.y = y;
    cand.n = n;
    bool a1 = fam.integral_at(v);
    cand.checks["a1_integral"] = a1;
    if (!a1)
        throw std::logic_error("specialize: admissible y failed integrality; catalog bug");
    cand.poly = specialize_monic(fam, v);

    SelmerReport sel = check_selmer_necessary(c, cand.poly, y, n);
    bool norms_ok = true, special_ok = true;
    for (const auto& e : sel.entries) {
        norms_ok = norms_ok && e.is_nth_power;
        special_ok = special_ok && e.special_unit;
    }
    cand.checks["selmer_norms"] = norms_ok;
    if (c.special_const != 0) cand.checks["special_unit"] = special_ok;

    Int disc = discriminant(cand.poly);
    cand.disc_bits = disc == 0 ? 0 : long(mpz_sizeinbase(disc.get_mpz_t(), 2));
    bool squarefree = disc != 0;
    cand.checks["squarefree"] = squarefree;
    if (squarefree) {
        cand.signature = signature_of(cand.poly);
        if (v > c.positivity_threshold) {
            Signature claim = c.totally_real ? Signature{int(cand.poly.degree()), 0}
                                             : Signature{0, int(cand.poly.degree() / 2)};
            cand.checks["signature_claim"] = cand.signature == claim;
        }
        auto irr = irreducible(cand.poly);
        cand.irreducibility = irr.status;
        if (irr.status != Irreducibility::Inconclusive)
            cand.checks["irreducible"] = irr.status == Irreducibility::Yes;
    } else {
        cand.irreducibility = Irreducibility::No;
        cand.checks["irreducible"] = false;
    }
    return cand;
}

// ---- subfield polynomials (D2, D3) ----

namespace detail {

// coefficient c0 + c1 * v of the displayed monic form
struct AffineCoeff {
    Rat c0, c1;
};

struct SubfieldIdentity {
    IntPolynomial afactor;            // the product of linear factors
    IntPolynomial bfactor;            // the y^n multiplier
    Int prefactor;                    // clears the monic displayed form
    std::vector<AffineCoeff> monic;   // displayed coefficients, constant first
};

inline std::vector<SubfieldIdentity> subfield_identities(CaseId id) {
    auto L = [](std::initializer_list<long> cs) {
        std::vector<Int> v;
        for (long c : cs) v.emplace_back(c);
        return IntPolynomial(std::move(v));
    };
    auto A = [](long c0n, long c0d, long c1n, long c1d) {
        return AffineCoeff{make_rat(c0n, c0d), make_rat(c1n, c1d)};
    };
    if (id == CaseId::D2) {
        // x^2 + (v-25)/6 x + {4, (v-25)/6, -(v-25)/6}
        return {
            {L({-3, 2}) * L({-8, 3}), L({0, 1}), 6,
             {A(4, 1, 0, 1), A(-25, 6, 1, 6), A(1, 1, 0, 1)}},
            {L({-5, 1}) * L({5, 6}), L({1, 1}), 6,
             {A(-25, 6, 1, 6), A(-25, 6, 1, 6), A(1, 1, 0, 1)}},
            {L({-5, 2}) * L({-5, 3}), L({-1, 1}), 6,
             {A(25, 6, -1, 6), A(-25, 6, 1, 6), A(1, 1, 0, 1)}},
        };
    }
    if (id == CaseId::D3) {
        // x^2 + 3x + (v-19)/36 and x^3 + 3x^2 + (v-235)/36 x + (v-325)/18
        return {
            {L({-1, 6}) * L({19, 6}), L({1}), 36,
             {A(-19, 36, 1, 36), A(3, 1, 0, 1), A(1, 1, 0, 1)}},
            {L({-5, 2}) * L({10, 3}) * L({13, 6}), L({2, 1}), 36,
             {A(-325, 18, 1, 18), A(-235, 36, 1, 36), A(3, 1, 0, 1), A(1, 1, 0, 1)}},
        };
    }
    throw std::invalid_argument("subfield polynomials are tabulated for D2 and D3 only");
}

}  // namespace detail

// The displayed subfield factorizations as exact identities in v:
// afactor + v * bfactor == prefactor * (displayed monic form),
// checked coefficient-by-coefficient on both affine components.
inline bool subfield_identities_hold(CaseId id) {
    for (const auto& s : detail::subfield_identities(id)) {
        for (std::size_t i = 0; i < s.monic.size(); ++i) {
            Rat want0 = s.monic[i].c0 * Rat(s.prefactor);
            Rat want1 = s.monic[i].c1 * Rat(s.prefactor);
            if (Rat(s.afactor.coeff(i)) != want0) return false;
            if (Rat(s.bfactor.coeff(i)) != want1) return false;
        }
        if (s.afactor.degree() + 1 != long(s.monic.size())) return false;
    }
    return true;
}

// The displayed subfield polynomials specialized at (y, n).
inline std::vector<IntPolynomial> subfield_polynomials(CaseId id, const Int& y, long n) {
    const GroupCase& c = get_case(id);
    if (auto fail = check_conditions(c, y, n)) throw ConditionError(fail->label, fail->detail);
    Int v = pow_int(y, static_cast<unsigned long>(n));
    std::vector<IntPolynomial> out;
    for (const auto& s : detail::subfield_identities(id)) {
        IntPolynomial num = s.afactor + s.bfactor * v;
        std::vector<Int> cs;
        for (long i = 0; i <= num.degree(); ++i) {
            if (mod_floor(num.coeff(std::size_t(i)), s.prefactor) != 0)
                throw NotIntegralError("subfield polynomial is not integral at this y");
            cs.push_back(divexact(num.coeff(std::size_t(i)), s.prefactor));
        }
        out.emplace_back(std::move(cs));
    }
    return out;
}

// ---- serialization ----

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

inline std::string to_jsonl(const FieldCandidate& c) {
    std::ostringstream os;
    os << "{\"case\":\"" << case_name(c.id) << "\",\"y\":" << c.y.get_str()
       << ",\"n\":" << c.n << ",\"poly\":[";
    for (long i = 0; i <= c.poly.degree(); ++i) {
        if (i) os << ",";
        os << "\"" << c.poly.coeff(std::size_t(i)).get_str() << "\"";
    }
    os << "],\"signature\":{\"r1\":" << c.signature.r1 << ",\"r2\":" << c.signature.r2
       << "},\"disc_bits\":" << c.disc_bits << ",\"checks\":{";
    bool first = true;
    for (const auto& [k, v] : c.checks) {
        if (!first) os << ",";
        first = false;
        os << "\"" << json_escape(k) << "\":" << (v ? "true" : "false");
    }
    os << "},\"irreducibility\":\"" << to_string(c.irreducibility) << "\"}";
    return os.str();
}

inline std::string csv_header() { return "case,y,n,degree,r1,r2,disc_bits,all_checks_pass"; }

inline std::string to_csv(const FieldCandidate& c) {
    std::ostringstream os;
    os << case_name(c.id) << "," << c.y.get_str() << "," << c.n << "," << c.poly.degree() << ","
       << c.signature.r1 << "," << c.signature.r2 << "," << c.disc_bits << ","
       << (c.all_checks_pass() ? "true" : "false");
    return os.str();
}

// ---- family enumeration ----

struct FamilyConfig {
    CaseId id = CaseId::C2;
    long n = 5;
    Int y_start = 1;
    std::optional<Int> y_end;      // inclusive
    std::optional<long> count;     // stop after this many candidates
};

// Deterministic ascending-y stream of fully checked candidates.
inline void run_family(const FamilyConfig& cfg,
                       const std::function<void(const FieldCandidate&)>& sink) {
    const GroupCase& c = get_case(cfg.id);
    if (c.cond.n_coprime_to > 1 && gcd_int(Int(cfg.n), c.cond.n_coprime_to) != 1)
        throw ConditionError(c.n_label, "n must be coprime to " +
                                            std::to_string(c.cond.n_coprime_to));
    if (cfg.count && *cfg.count <= 0) return;
    long emitted = 0;
    AdmissibleYRange range(c, cfg.n, cfg.y_start);
    while (true) {
        Int y = range.next();
        if (cfg.y_end && y > *cfg.y_end) break;
        sink(specialize(cfg.id, y, cfg.n));
        ++emitted;
        if (cfg.count && emitted >= *cfg.count) break;
    }
}

}  // namespace galcov
