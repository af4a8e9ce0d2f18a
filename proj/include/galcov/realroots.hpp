#pragma once

// Exact real-root counting via Sturm sequences with sign-safe integer
// pseudo-remainders, signatures of squarefree integer polynomials, exact
// polynomial discriminants, and the unit-rank class-group bound.

#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace galcov {

struct Signature {
    int r1 = 0;  // real embeddings
    int r2 = 0;  // complex-conjugate pairs
    bool operator==(const Signature&) const = default;
    int unit_rank() const { return r1 + r2 - 1; }
};

// Interval endpoint: a rational or +-infinity.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;

    static Bound neg_inf() { return {NegInf, Rat(0)}; }
    static Bound pos_inf() { return {PosInf, Rat(0)}; }
    static Bound at(const Rat& v) { return {Finite, v}; }
};

namespace detail {

inline std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
    std::vector<IntPolynomial> seq;
    seq.push_back(primitive_part(p));
    IntPolynomial d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(primitive_part(d));
    while (true) {
        const IntPolynomial& a = seq[seq.size() - 2];
        const IntPolynomial& b = seq.back();
        IntPolynomial r = pseudo_rem_signsafe(a, b);
        if (r.is_zero()) break;
        seq.push_back(primitive_part(-r));
        if (seq.back().degree() == 0) break;
    }
    return seq;
}

inline int sign_at(const IntPolynomial& p, const Bound& b) {
    if (p.is_zero()) return 0;
    switch (b.kind) {
        case Bound::PosInf:
            return sgn(p.leading());
        case Bound::NegInf:
            return p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading());
        case Bound::Finite:
            return sgn(eval_homogeneous(p, b.value.get_num(), b.value.get_den()));
    }
    return 0;
}

// Sign variations of the sequence just to the right of b. A zero of the
// first entry takes the sign of the second (the derivative direction); zeros
// of inner entries are skipped, which is exact because their neighbours have
// opposite signs in a Sturm chain.
inline int variations_right(const std::vector<IntPolynomial>& seq, const Bound& b) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& s : seq) signs.push_back(sign_at(s, b));
    if (signs[0] == 0) {
        if (seq.size() < 2) return 0;
        signs[0] = signs[1];
    }
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace detail

struct NotSquarefreeError : std::invalid_argument {
    explicit NotSquarefreeError(const std::string& w) : std::invalid_argument(w) {}
};

// Number of distinct real roots of squarefree p in (lo, hi].
inline int sturm_count(const IntPolynomial& p, const Bound& lo = Bound::neg_inf(),
                       const Bound& hi = Bound::pos_inf()) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (p.degree() == 0) return 0;
    if (!is_squarefree(p)) throw NotSquarefreeError("sturm_count: polynomial is not squarefree");
    auto seq = detail::sturm_sequence(p);
    auto count_upto = [&](const Bound& b) {
        if (b.kind == Bound::NegInf) return 0;
        return detail::variations_right(seq, Bound::neg_inf()) -
               detail::variations_right(seq, b);
    };
    return count_upto(hi) - count_upto(lo);
}

inline int sturm_count(const IntPolynomial& p, const Rat& lo, const Rat& hi) {
    return sturm_count(p, Bound::at(lo), Bound::at(hi));
}

// Signature (r1, r2) of the field defined by squarefree p (irreducibility is
// the caller's responsibility).
inline Signature signature_of(const IntPolynomial& p) {
    int r1 = sturm_count(p);
    long deg = p.degree();
    if ((deg - r1) % 2 != 0) throw std::logic_error("signature_of: parity violation");
    return Signature{r1, int((deg - r1) / 2)};
}

// (-1)^(d(d-1)/2) Res(p, p') / lc(p)
template <class R>
R discriminant(const Polynomial<R>& p) {
    if (p.degree() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    R res = resultant(p, p.derivative());
    R d = divexact(res, p.leading());
    long deg = p.degree();
    return (deg * (deg - 1) / 2) % 2 == 0 ? d : R(-d);
}

// s - (r1 + r2 - 1), floored at zero
inline int rank_bound(int s, const Signature& sig) {
    if (s < 0) throw std::invalid_argument("rank_bound: s must be >= 0");
    int b = s - sig.unit_rank();
    return b < 0 ? 0 : b;
}

}  // namespace galcov
