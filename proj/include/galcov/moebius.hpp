#pragma once

// Exact arithmetic on P^1(Q) and in PGL_2(Q): points as reduced integer
// pairs (infinity = (1,0)), homographies as canonical primitive integer
// 2x2 matrices. All values are immutable; all operations are pure.

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace galcov {

struct ProjPoint {
    Int num = 0;
    Int den = 1;  // (1,0) is the point at infinity; den > 0 otherwise

    ProjPoint() = default;
    ProjPoint(Int n, Int d) {
        if (d == 0) {
            if (n == 0) throw std::invalid_argument("ProjPoint: (0,0) is not a point");
            num = 1;
            den = 0;
            return;
        }
        Int g = gcd_int(n, d);
        if (sgn(d) < 0) g = -g;
        num = divexact(n, g);
        den = divexact(d, g);
    }
    ProjPoint(long n) : num(n), den(1) {}
    explicit ProjPoint(const Rat& q) : num(q.get_num()), den(q.get_den()) {}

    static ProjPoint infinity() { return ProjPoint(Int(1), Int(0)); }

    bool is_infinity() const { return den == 0; }

    Rat value() const {
        if (is_infinity()) throw std::domain_error("value() of the point at infinity");
        return make_rat(num, den);
    }

    bool operator==(const ProjPoint& o) const { return num == o.num && den == o.den; }

    // finite points by value, infinity last
    bool operator<(const ProjPoint& o) const {
        if (is_infinity()) return false;
        if (o.is_infinity()) return true;
        return num * o.den < o.num * den;
    }

    std::string str() const {
        if (is_infinity()) return "oo";
        if (den == 1) return num.get_str();
        return num.get_str() + "/" + den.get_str();
    }
};

class Homography {
   public:
    // canonical representative: entries coprime, first nonzero entry
    // (row-major) positive, determinant nonzero
    Homography() : e_{1, 0, 0, 1} {}
    Homography(Int p, Int q, Int r, Int s) : e_{std::move(p), std::move(q), std::move(r), std::move(s)} {
        normalize_in_place();
    }

    const Int& p() const { return e_[0]; }
    const Int& q() const { return e_[1]; }
    const Int& r() const { return e_[2]; }
    const Int& s() const { return e_[3]; }

    Int det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    bool is_identity() const { return e_[0] == 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == 1; }

    bool operator==(const Homography& o) const { return e_ == o.e_; }
    bool operator<(const Homography& o) const { return e_ < o.e_; }

    ProjPoint apply(const ProjPoint& pt) const {
        Int n = e_[0] * pt.num + e_[1] * pt.den;
        Int d = e_[2] * pt.num + e_[3] * pt.den;
        if (n == 0 && d == 0)
            throw std::logic_error("Homography::apply produced (0,0)");  // impossible: det != 0
        return ProjPoint(n, d);
    }

    Homography compose(const Homography& o) const {  // (*this) after o
        return Homography(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                          e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
    }

    Homography inverse() const { return Homography(e_[3], -e_[1], -e_[2], e_[0]); }

    Homography power(long k) const {
        Homography base = k >= 0 ? *this : inverse();
        unsigned long n = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
        Homography acc;
        while (n) {
            if (n & 1) acc = acc.compose(base);
            base = base.compose(base);
            n >>= 1;
        }
        return acc;
    }

    std::string str() const {
        return "[" + e_[0].get_str() + ", " + e_[1].get_str() + "; " + e_[2].get_str() + ", " +
               e_[3].get_str() + "]";
    }

   private:
    void normalize_in_place() {
        if (e_[0] * e_[3] == e_[1] * e_[2])
            throw std::invalid_argument("Homography: singular matrix");
        Int g = 0;
        for (const auto& x : e_) g = gcd_int(g, x);
        for (auto& x : e_) x = divexact(x, g);
        for (const auto& x : e_) {
            if (x != 0) {
                if (sgn(x) < 0)
                    for (auto& y : e_) y = -y;
                break;
            }
        }
    }
    std::array<Int, 4> e_;
};

inline Homography normalize(const Int& p, const Int& q, const Int& r, const Int& s) {
    return Homography(p, q, r, s);
}

inline ProjPoint apply(const Homography& h, const ProjPoint& pt) { return h.apply(pt); }

inline Homography compose(const Homography& a, const Homography& b) { return a.compose(b); }

inline Homography inverse(const Homography& h) { return h.inverse(); }

struct OrderExceedsCap : std::runtime_error {
    explicit OrderExceedsCap(const std::string& what) : std::runtime_error(what) {}
};

// least k <= cap with h^k = identity
inline int element_order(const Homography& h, int cap = 24) {
    if (cap < 1) throw std::invalid_argument("element_order: cap must be >= 1");
    Homography acc = h;
    for (int k = 1; k <= cap; ++k) {
        if (acc.is_identity()) return k;
        acc = acc.compose(h);
    }
    throw OrderExceedsCap("element order exceeds cap " + std::to_string(cap));
}

struct FiniteSubgroup {
    std::vector<Homography> elements;  // canonically sorted, identity included
    std::vector<Homography> generators;

    std::size_t size() const { return elements.size(); }
};

inline FiniteSubgroup generate_group(const std::vector<Homography>& gens, int cap = 24) {
    std::set<Homography> elems;
    elems.insert(Homography());
    std::vector<Homography> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<Homography> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                for (const Homography& h : {e.compose(g), g.compose(e)}) {
                    if (elems.insert(h).second) {
                        next.push_back(h);
                        if (elems.size() > static_cast<std::size_t>(cap))
                            throw OrderExceedsCap("group closure exceeds cap " +
                                                  std::to_string(cap));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    FiniteSubgroup g;
    g.elements.assign(elems.begin(), elems.end());
    g.generators = gens;
    return g;
}

// distinct orbit points, finite ones ascending, infinity last
inline std::vector<ProjPoint> orbit(const FiniteSubgroup& g, const ProjPoint& p) {
    std::vector<ProjPoint> pts;
    for (const auto& h : g.elements) {
        ProjPoint q = h.apply(p);
        bool seen = false;
        for (const auto& r : pts)
            if (r == q) {
                seen = true;
                break;
            }
        if (!seen) pts.push_back(q);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

inline int stabilizer_order(const FiniteSubgroup& g, const ProjPoint& p) {
    std::size_t orb = orbit(g, p).size();
    if (g.size() % orb != 0) throw std::logic_error("orbit size does not divide group order");
    return static_cast<int>(g.size() / orb);
}

}  // namespace galcov
