#pragma once

// Static catalog of the eight families: generators, base points, congruence
// tables, and the lists of functions whose specializations define Selmer
// classes. The tables are authoritative, hard-coded data; derived checks
// elsewhere cross-validate them but never redefine them.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moebius.hpp"
#include "numeric.hpp"

namespace galcov {

enum class CaseId { C2, C3, C4, C6, D2, D3, D4, D6 };

inline const std::vector<CaseId>& all_cases() {
    static const std::vector<CaseId> ids = {CaseId::C2, CaseId::C3, CaseId::C4, CaseId::C6,
                                            CaseId::D2, CaseId::D3, CaseId::D4, CaseId::D6};
    return ids;
}

inline std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::C2: return "C2";
        case CaseId::C3: return "C3";
        case CaseId::C4: return "C4";
        case CaseId::C6: return "C6";
        case CaseId::D2: return "D2";
        case CaseId::D3: return "D3";
        case CaseId::D4: return "D4";
        case CaseId::D6: return "D6";
    }
    throw std::logic_error("unknown case id");
}

inline std::optional<CaseId> parse_case(const std::string& s) {
    for (CaseId id : all_cases())
        if (case_name(id) == s) return id;
    return std::nullopt;
}

// (alpha x - beta) / (pole factor)^eps, or the distinguished square-over-
// constant function when special is set (its alpha/beta/eps are unused).
struct SelmerFunction {
    Int alpha = 1;
    Int beta = 0;
    int eps = 0;
    bool special = false;

    static SelmerFunction linear(long a, long b, int e = 0) {
        SelmerFunction f;
        f.alpha = a;
        f.beta = b;
        f.eps = e;
        return f;
    }
    static SelmerFunction make_special() {
        SelmerFunction f;
        f.special = true;
        return f;
    }
};

// The per-case arithmetic conditions: a coprimality requirement on n, the
// congruence y^n = t0 (mod modulus) -- given either as an explicit table of
// y-residues keyed by the class of n, or left in power-residue form -- and
// the primes y must avoid.
struct CongruenceCondition {
    int n_coprime_to = 1;  // 1: no constraint
    Int modulus = 1;
    Int t0 = 1;
    int table_modulus = 1;              // key space of y_residues
    std::map<int, Int> y_residues;      // n mod table_modulus -> y0; empty: test y^n directly
    std::vector<Int> coprime_set;
};

struct GroupCase {
    CaseId id;
    std::string name;
    std::string group_name;
    std::vector<Homography> generators;
    ProjPoint a;
    std::optional<int> trace;           // zeta + conj(zeta) where applicable
    std::optional<ProjPoint> unit_pole; // the orbit point whose linear factor may divide
    Int special_const = 0;              // c in (x-pole)^2/c; 0: no such function
    CongruenceCondition cond;
    std::vector<SelmerFunction> selmer_list;
    int s = 0;                          // #orb(a) + #orb(0) - 2
    int rank_bound = 0;
    bool totally_real = true;
    Int positivity_threshold = 0;       // signature claim holds for y^n beyond this
    // labels used when reporting which condition a (y, n) pair fails
    std::string n_label, residue_label, coprime_label;
};

namespace detail {

inline GroupCase make_case(
    CaseId id, std::string group_name, std::vector<Homography> gens, long a_num, long a_den,
    std::optional<int> trace, std::optional<long> pole, long special_const, int n_coprime_to,
    long modulus, long t0, int table_modulus, std::map<int, Int> y_residues,
    std::vector<Int> coprime_set, std::vector<SelmerFunction> funcs, int s, int rank_bound,
    bool totally_real, long threshold, std::string n_label, std::string residue_label,
    std::string coprime_label) {
    GroupCase c;
    c.id = id;
    c.name = case_name(id);
    c.group_name = std::move(group_name);
    c.generators = std::move(gens);
    c.a = ProjPoint(Int(a_num), Int(a_den));
    c.trace = trace;
    if (pole) c.unit_pole = ProjPoint(Int(*pole), Int(1));
    c.special_const = special_const;
    c.cond.n_coprime_to = n_coprime_to;
    c.cond.modulus = modulus;
    c.cond.t0 = t0;
    c.cond.table_modulus = table_modulus;
    c.cond.y_residues = std::move(y_residues);
    c.cond.coprime_set = std::move(coprime_set);
    c.selmer_list = std::move(funcs);
    c.s = s;
    c.rank_bound = rank_bound;
    c.totally_real = totally_real;
    c.positivity_threshold = threshold;
    c.n_label = std::move(n_label);
    c.residue_label = std::move(residue_label);
    c.coprime_label = std::move(coprime_label);
    return c;
}

}  // namespace detail

inline const GroupCase& get_case(CaseId id) {
    using SF = SelmerFunction;
    static const std::vector<GroupCase> catalog = [] {
        std::vector<GroupCase> v;
        // z -> 1/z
        v.push_back(detail::make_case(
            CaseId::C2, "Z/2Z", {Homography(0, 1, 1, 0)}, 2, 1, std::nullopt, std::nullopt, 0,
            1, 2, 1, 1, {{0, Int(1)}}, {Int(3)},
            {SF::linear(1, 0), SF::linear(1, 2)}, 2, 1, true, 9, "", "(i)", "(i)"));
        // z -> -1/(z+1)
        v.push_back(detail::make_case(
            CaseId::C3, "Z/3Z", {Homography(0, -1, 1, 1)}, 1, 1, -1, std::nullopt, 0,
            1, 2, 1, 1, {{0, Int(1)}}, {Int(3)},
            {SF::linear(1, 0), SF::linear(1, -1), SF::linear(1, 1), SF::linear(1, -2)},
            4, 2, true, 0, "", "(i)", "(i)"));
        // z -> (z-1)/(z+1)
        v.push_back(detail::make_case(
            CaseId::C4, "Z/4Z", {Homography(1, -1, 1, 1)}, 2, 1, 0, -1, 2,
            2, 12, 5, 1, {{0, Int(5)}}, {Int(5)},
            {SF::linear(1, 0), SF::linear(1, 1, 1), SF::linear(1, -3, 1), SF::linear(1, 2),
             SF::linear(2, -1), SF::make_special()},
            6, 3, true, 0, "(i)", "(ii)", "(iii)"));
        // z -> (2z-1)/(z+1)
        v.push_back(detail::make_case(
            CaseId::C6, "Z/6Z", {Homography(2, -1, 1, 1)}, 3, 1, 1, -1, 3,
            6, 1080, 397, 12,
            {{1, Int(397)}, {5, Int(37)}, {7, Int(613)}, {11, Int(253)}}, {Int(7)},
            {SF::linear(1, 0), SF::linear(1, 1), SF::linear(2, 1, 1), SF::linear(1, 2, 1),
             SF::linear(1, 3), SF::linear(1, -4, 1), SF::linear(2, -1), SF::linear(3, 2),
             SF::linear(4, 5, 1), SF::make_special()},
            10, 5, true, 0, "(i)", "(ii)", "(iii)"));
        // z -> (z+1)/(z-1), z -> -1/z
        v.push_back(detail::make_case(
            CaseId::D2, "(Z/2Z)^2", {Homography(1, 1, 1, -1), Homography(0, -1, 1, 0)}, 2, 1,
            std::nullopt, 1, 2,
            1, 12, 1, 1, {{0, Int(1)}}, {Int(5), Int(7)},
            {SF::linear(1, 0), SF::linear(1, -1, 1), SF::linear(1, 2), SF::linear(2, -1),
             SF::linear(1, 3, 1), SF::make_special()},
            6, 3, true, 50, "", "(i)", "(ii)"));
        // z -> -1/(z+1), z -> 1/z
        v.push_back(detail::make_case(
            CaseId::D3, "S3", {Homography(0, -1, 1, 1), Homography(0, 1, 1, 0)}, 2, 1, -1,
            std::nullopt, 0,
            2, 36, 19, 1, {{0, Int(19)}}, {Int(5), Int(7)},
            {SF::linear(1, 0), SF::linear(1, -1), SF::linear(1, 2), SF::linear(1, -3),
             SF::linear(2, 1), SF::linear(2, -3), SF::linear(3, -1)},
            7, 5, false, 100, "(i)", "(ii)", "(iii)"));
        // z -> (z-1)/(z+1), z -> 1/z
        v.push_back(detail::make_case(
            CaseId::D4, "D4", {Homography(1, -1, 1, 1), Homography(0, 1, 1, 0)}, 2, 1, 0, -1, 2,
            6, 144, 49, 3, {{1, Int(49)}, {2, Int(97)}}, {Int(5), Int(7)},
            {SF::linear(1, 0), SF::linear(1, 1, 1), SF::linear(1, 2), SF::linear(1, -2),
             SF::linear(1, 3, 1), SF::linear(1, -3, 1), SF::linear(2, 1), SF::linear(2, -1),
             SF::linear(3, 1, 1), SF::make_special()},
            10, 7, false, 49, "(i)", "(ii)", "(iii)"));
        // z -> (2z-1)/(z+1), z -> 1/z
        v.push_back(detail::make_case(
            CaseId::D6, "D6", {Homography(2, -1, 1, 1), Homography(0, 1, 1, 0)}, -2, 1, 1, -1, 3,
            6, 388800, 117649, 1, {}, {Int(7), Int(11), Int(13)},
            {SF::linear(1, 0), SF::linear(1, 1), SF::linear(2, 1, 1), SF::linear(1, 2, 1),
             SF::linear(1, -2), SF::linear(1, 5, 1), SF::linear(2, 3), SF::linear(5, 4, 1),
             SF::linear(3, 1), SF::linear(4, -1, 1), SF::linear(2, -1), SF::linear(5, 1, 1),
             SF::linear(3, 2), SF::linear(4, 5, 1), SF::linear(1, 3), SF::make_special()},
            16, 11, false, 20449, "(i)", "(ii)", "(iii)"));
        return v;
    }();
    for (const auto& c : catalog)
        if (c.id == id) return c;
    throw std::logic_error("unknown case id");
}

// ---- condition checking ----

struct ConditionFailure {
    std::string label;   // the paper's item label, e.g. "(ii)"
    std::string detail;
};

// Checks (y, n) against the case's conditions; nullopt means admissible.
inline std::optional<ConditionFailure> check_conditions(const GroupCase& c, const Int& y, long n) {
    if (n < 1) return ConditionFailure{c.n_label.empty() ? "(i)" : c.n_label, "n must be >= 1"};
    if (c.cond.n_coprime_to > 1 && gcd_int(Int(n), c.cond.n_coprime_to) != 1)
        return ConditionFailure{c.n_label,
                                "n must be coprime to " + std::to_string(c.cond.n_coprime_to)};
    if (!c.cond.y_residues.empty()) {
        int key = c.cond.table_modulus == 1 ? 0 : int(n % c.cond.table_modulus);
        auto it = c.cond.y_residues.find(key);
        if (it == c.cond.y_residues.end())
            return ConditionFailure{c.n_label, "n class " + std::to_string(key) +
                                                   " has no admissible residue"};
        if (mod_floor(y, c.cond.modulus) != it->second)
            return ConditionFailure{c.residue_label,
                                    "y must be " + it->second.get_str() + " (mod " +
                                        c.cond.modulus.get_str() + ")"};
    } else {
        if (y < 0 || powmod(mod_floor(y, c.cond.modulus), Int(n), c.cond.modulus) != c.cond.t0)
            return ConditionFailure{c.residue_label,
                                    "y^n must be " + c.cond.t0.get_str() + " (mod " +
                                        c.cond.modulus.get_str() + ")"};
    }
    for (const auto& p : c.cond.coprime_set)
        if (mod_floor(y, p) == 0)
            return ConditionFailure{c.coprime_label, "y must be coprime to " + p.get_str()};
    return std::nullopt;
}

inline bool admissible(const GroupCase& c, const Int& y, long n) {
    return !check_conditions(c, y, n).has_value();
}

// Explicit y-residue solving y^n = t0 (mod m), as a power of t0. Returns
// nullopt when n is not invertible modulo the order of t0.
inline std::optional<Int> resolve_y_residue(const GroupCase& c, long n) {
    Int d = multiplicative_order(c.cond.t0, c.cond.modulus);
    Int nr = mod_floor(Int(n), d);
    if (nr == 0) nr = d;
    auto inv = invert_mod(nr, d);
    if (d > 1 && !inv) return std::nullopt;
    Int k = d == 1 ? Int(1) : *inv;
    return powmod(c.cond.t0, k, c.cond.modulus);
}

// Ascending admissible-y stream.
class AdmissibleYRange {
   public:
    AdmissibleYRange(const GroupCase& c, long n, Int start = 1) : c_(c), n_(n), y_(start) {
        if (y_ < 1) y_ = 1;
    }
    Int next() {
        while (true) {
            if (admissible(c_, y_, n_)) return y_++;
            ++y_;
        }
    }

   private:
    const GroupCase& c_;
    long n_;
    Int y_;
};

}  // namespace galcov
