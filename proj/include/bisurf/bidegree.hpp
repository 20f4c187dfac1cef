#ifndef BISURF_BIDEGREE_HPP
#define BISURF_BIDEGREE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisurf {

// Bidegree (m, n) in the ring k[s,t;u,v] with deg s = deg t = (1,0) and
// deg u = deg v = (0,1).
struct BiDegree {
    int m = 0;
    int n = 0;

    friend bool operator==(const BiDegree&, const BiDegree&) = default;
    // Total order used for map keys and deterministic iteration; the
    // componentwise partial order is leq() below.
    friend auto operator<=>(const BiDegree&, const BiDegree&) = default;

    bool leq(const BiDegree& o) const { return m <= o.m && n <= o.n; }

    BiDegree operator+(const BiDegree& o) const { return {m + o.m, n + o.n}; }
    BiDegree operator-(const BiDegree& o) const { return {m - o.m, n - o.n}; }

    std::string str() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
};

// dim R_{m,n} = (m+1)(n+1); zero when either component is negative.
inline int space_dim(BiDegree d) {
    if (d.m < 0 || d.n < 0) return 0;
    return (d.m + 1) * (d.n + 1);
}

// Monomial s^es t^et u^eu v^ev.
struct BiMonomial {
    int es = 0, et = 0, eu = 0, ev = 0;

    BiDegree degree() const { return {es + et, eu + ev}; }

    friend bool operator==(const BiMonomial&, const BiMonomial&) = default;

    BiMonomial operator*(const BiMonomial& o) const {
        return {es + o.es, et + o.et, eu + o.eu, ev + o.ev};
    }
};

// Canonical monomial order: lexicographic on exponent tuples with
// s > t > u > v.  Larger tuples come first, so this comparator is the
// map/sort predicate whose increasing order is the canonical listing.
struct CanonicalMonomialOrder {
    bool operator()(const BiMonomial& a, const BiMonomial& b) const {
        if (a.es != b.es) return a.es > b.es;
        if (a.et != b.et) return a.et > b.et;
        if (a.eu != b.eu) return a.eu > b.eu;
        return a.ev > b.ev;
    }
};

// Canonical ordered basis of R_d; length (m+1)(n+1).
inline std::vector<BiMonomial> monomial_basis(BiDegree d) {
    if (d.m < 0 || d.n < 0) return {};
    std::vector<BiMonomial> out;
    out.reserve(size_t(space_dim(d)));
    for (int es = d.m; es >= 0; --es)
        for (int eu = d.n; eu >= 0; --eu)
            out.push_back(BiMonomial{es, d.m - es, eu, d.n - eu});
    return out;
}

// Position of a monomial in monomial_basis(d).
inline int monomial_index(const BiMonomial& mono, BiDegree d) {
    if (mono.degree() != d) throw std::invalid_argument("monomial_index: wrong bidegree");
    return (d.m - mono.es) * (d.n + 1) + (d.n - mono.eu);
}

} // namespace bisurf

#endif
