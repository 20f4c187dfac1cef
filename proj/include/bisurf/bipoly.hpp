#ifndef BISURF_BIPOLY_HPP
#define BISURF_BIPOLY_HPP

#include <bisurf/bidegree.hpp>
#include <bisurf/matrix.hpp>
#include <bisurf/rational.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisurf {

struct not_divisible : std::runtime_error {
    not_divisible() : std::runtime_error("not divisible") {}
};

// Bihomogeneous polynomial in k[s,t;u,v].  All stored monomials share the
// bidegree; zero coefficients are never stored.  The zero polynomial keeps
// whatever bidegree it was created with.
class BiPoly {
public:
    using CoeffMap = std::map<BiMonomial, Rat, CanonicalMonomialOrder>;

    BiPoly() = default;
    explicit BiPoly(BiDegree d) : deg_(d) {}

    static BiPoly monomial(const BiMonomial& mono, const Rat& c = Rat(1)) {
        BiPoly p(mono.degree());
        if (!is_zero(c)) p.coeffs_[mono] = c;
        return p;
    }

    static BiPoly variable_s() { return monomial({1, 0, 0, 0}); }
    static BiPoly variable_t() { return monomial({0, 1, 0, 0}); }
    static BiPoly variable_u() { return monomial({0, 0, 1, 0}); }
    static BiPoly variable_v() { return monomial({0, 0, 0, 1}); }

    BiDegree degree() const { return deg_; }
    bool is_zero_poly() const { return coeffs_.empty(); }
    const CoeffMap& coeffs() const { return coeffs_; }
    size_t term_count() const { return coeffs_.size(); }

    Rat coeff(const BiMonomial& mono) const {
        auto it = coeffs_.find(mono);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void add_term(const BiMonomial& mono, const Rat& c) {
        if (is_zero(c)) return;
        if (coeffs_.empty()) {
            deg_ = mono.degree();
        } else if (mono.degree() != deg_) {
            throw std::invalid_argument("BiPoly: mixed bidegrees");
        }
        Rat& slot = coeffs_[mono];
        slot += c;
        if (is_zero(slot)) coeffs_.erase(mono);
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [mono, c] : o.coeffs_) add_term(mono, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [mono, c] : o.coeffs_) add_term(mono, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }

    BiPoly operator*(const Rat& c) const {
        BiPoly out(deg_);
        if (is_zero(c)) return out;
        for (const auto& [mono, x] : coeffs_) out.coeffs_[mono] = x * c;
        return out;
    }
    BiPoly operator-() const { return *this * Rat(-1); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Coefficient of the canonically-first monomial.
    Rat leading_coeff() const {
        return coeffs_.empty() ? Rat(0) : coeffs_.begin()->second;
    }

    BiPoly monic() const {
        if (coeffs_.empty()) return *this;
        return *this * (1 / Rat(leading_coeff()));
    }

    std::vector<Rat> coeff_vector(BiDegree d) const {
        if (!coeffs_.empty() && d != deg_)
            throw std::invalid_argument("coeff_vector: bidegree mismatch");
        std::vector<Rat> v(size_t(space_dim(d)));
        for (const auto& [mono, c] : coeffs_) v[size_t(monomial_index(mono, d))] = c;
        return v;
    }

    static BiPoly from_coeff_vector(const std::vector<Rat>& v, BiDegree d) {
        BiPoly p(d);
        auto basis = monomial_basis(d);
        for (size_t i = 0; i < basis.size(); ++i)
            if (!is_zero(v[i])) p.coeffs_[basis[i]] = v[i];
        return p;
    }

private:
    BiDegree deg_;
    CoeffMap coeffs_;
};

inline BiPoly mul(const BiPoly& f, const BiPoly& g) {
    BiPoly out(f.degree() + g.degree());
    for (const auto& [mf, cf] : f.coeffs())
        for (const auto& [mg, cg] : g.coeffs())
            out.add_term(mf * mg, cf * cg);
    return out;
}

inline BiPoly operator*(const BiPoly& f, const BiPoly& g) { return mul(f, g); }

// Matrix of the linear map h -> f*h from R_from to R_{from + deg f},
// with rows and columns indexed by the canonical monomial bases.
inline QMatrix multiplication_matrix(const BiPoly& f, BiDegree from) {
    const BiDegree to = from + f.degree();
    QMatrix m(space_dim(to), space_dim(from));
    for (const auto& src : monomial_basis(from)) {
        const int j = monomial_index(src, from);
        for (const auto& [mono, c] : f.coeffs())
            m.at(monomial_index(mono * src, to), j) += c;
    }
    return m;
}

// Exact division: the unique h with f = g*h, found by solving the linear
// system multiplication_matrix(g) * h = f.  Throws not_divisible when the
// system is inconsistent.
inline BiPoly divide_exact(const BiPoly& f, const BiPoly& g) {
    if (g.is_zero_poly()) throw std::invalid_argument("divide_exact: zero divisor");
    if (f.is_zero_poly()) return BiPoly(BiDegree{0, 0});
    const BiDegree r = f.degree() - g.degree();
    if (r.m < 0 || r.n < 0) throw not_divisible();

    QMatrix m = multiplication_matrix(g, r);
    const int rows = m.rows(), cols = m.cols();
    QMatrix aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
    auto fv = f.coeff_vector(f.degree());
    for (int i = 0; i < rows; ++i) aug.at(i, cols) = fv[size_t(i)];

    RrefResult rr = rref(std::move(aug));
    std::vector<Rat> h(static_cast<size_t>(cols));
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == cols) throw not_divisible();
        h[size_t(rr.pivots[i])] = rr.m.at(int(i), cols);
    }
    BiPoly q = BiPoly::from_coeff_vector(h, r);
    if (!(mul(g, q) == f)) throw not_divisible();
    return q;
}

namespace detail {

// Univariate gcd over Q by the Euclidean algorithm, monic result.
// Coefficient vectors are low-to-high in x.
inline std::vector<Rat> univariate_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && is_zero(p.back())) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rat q = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

} // namespace detail

// Gcd of two binary forms in the same variable pair, either both in (s,t)
// (bidegree (*,0)) or both in (u,v) (bidegree (0,*)).  Powers of the two
// variables are split off first; the rest reduces to a univariate Euclid on
// the dehomogenizations.  Result is monic in the canonical order.
inline BiPoly binary_form_gcd(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero_poly() && g.is_zero_poly())
        throw std::invalid_argument("binary_form_gcd: both inputs zero");
    if (f.is_zero_poly()) return g.monic();
    if (g.is_zero_poly()) return f.monic();

    const bool st_side = f.degree().n == 0;
    if ((st_side && (f.degree().n != 0 || g.degree().n != 0)) ||
        (!st_side && (f.degree().m != 0 || g.degree().m != 0)))
        throw std::invalid_argument("binary_form_gcd: not forms in one variable pair");

    // Exponent accessors for the pair (x, y) = (s, t) or (u, v).
    auto xexp = [&](const BiMonomial& m) { return st_side ? m.es : m.eu; };
    auto yexp = [&](const BiMonomial& m) { return st_side ? m.et : m.ev; };
    auto make = [&](int ex, int ey) {
        return st_side ? BiMonomial{ex, ey, 0, 0} : BiMonomial{0, 0, ex, ey};
    };

    auto split = [&](const BiPoly& p, int& xpow, int& ypow, std::vector<Rat>& coeffs) {
        const int d = st_side ? p.degree().m : p.degree().n;
        xpow = d;
        ypow = d;
        for (const auto& [mono, c] : p.coeffs()) {
            (void)c;
            if (xexp(mono) < xpow) xpow = xexp(mono);
            if (yexp(mono) < ypow) ypow = yexp(mono);
        }
        const int core = d - xpow - ypow;
        coeffs.assign(size_t(core) + 1, Rat(0));
        for (const auto& [mono, c] : p.coeffs()) coeffs[size_t(xexp(mono) - xpow)] = c;
    };

    int fx, fy, gx, gy;
    std::vector<Rat> fc, gc;
    split(f, fx, fy, fc);
    split(g, gx, gy, gc);

    std::vector<Rat> core = detail::univariate_gcd(fc, gc);
    const int xcommon = std::min(fx, gx), ycommon = std::min(fy, gy);
    const int cdeg = int(core.size()) - 1;

    BiPoly out;
    for (int i = 0; i <= cdeg; ++i)
        if (!is_zero(core[size_t(i)]))
            out.add_term(make(i + xcommon, cdeg - i + ycommon), core[size_t(i)]);
    return out.monic();
}

enum class QuadraticKind { SplitRational, DoubleRoot, IrrationalConjugatePair };

struct QuadraticFactorization {
    QuadraticKind kind;
    Rat discriminant;
    std::optional<BiPoly> l1;   // monic linear factors when rational
    std::optional<BiPoly> l2;
};

// Factor a nonzero binary quadratic (in u,v or in s,t) over Q.  Irrational
// conjugate pairs are never split; they are reported by their discriminant.
inline QuadraticFactorization factor_binary_quadratic(const BiPoly& q) {
    if (q.is_zero_poly()) throw std::invalid_argument("factor_binary_quadratic: zero input");
    const bool st_side = q.degree() == BiDegree{2, 0};
    if (!st_side && !(q.degree() == BiDegree{0, 2}))
        throw std::invalid_argument("factor_binary_quadratic: not a binary quadratic");

    auto make = [&](int ex, int ey) {
        return st_side ? BiMonomial{ex, ey, 0, 0} : BiMonomial{0, 0, ex, ey};
    };
    const Rat A = q.coeff(make(2, 0)), B = q.coeff(make(1, 1)), C = q.coeff(make(0, 2));
    const Rat disc = B * B - 4 * A * C;

    auto linear = [&](const Rat& cx, const Rat& cy) {
        BiPoly l;
        l.add_term(make(1, 0), cx);
        l.add_term(make(0, 1), cy);
        return l.monic();
    };

    QuadraticFactorization out{QuadraticKind::IrrationalConjugatePair, disc, std::nullopt, std::nullopt};
    if (is_zero(disc)) {
        out.kind = QuadraticKind::DoubleRoot;
        // q = A (x + B/(2A) y)^2, or C y^2 when A = 0 (then B = 0 too).
        out.l1 = is_zero(A) ? linear(0, 1) : linear(1, B / (2 * A));
        return out;
    }
    Rat root;
    if (rat_sqrt(disc, root)) {
        out.kind = QuadraticKind::SplitRational;
        if (is_zero(A)) {
            out.l1 = linear(0, 1);            // root at (1:0)
            out.l2 = linear(B, C);            // B x + C y
        } else {
            out.l1 = linear(1, (B + root) / (2 * A));
            out.l2 = linear(1, (B - root) / (2 * A));
        }
    }
    return out;
}

// Substitution s -> a s + b t, t -> c s + d t.
inline BiPoly substitute_st(const BiPoly& f, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    const int m = f.degree().m;
    BiPoly ls, lt;
    ls.add_term({1, 0, 0, 0}, a);
    ls.add_term({0, 1, 0, 0}, b);
    lt.add_term({1, 0, 0, 0}, c);
    lt.add_term({0, 1, 0, 0}, d);
    std::vector<BiPoly> pow_s(size_t(m) + 1), pow_t(size_t(m) + 1);
    pow_s[0] = pow_t[0] = BiPoly::monomial({0, 0, 0, 0});
    for (int i = 1; i <= m; ++i) {
        pow_s[size_t(i)] = mul(pow_s[size_t(i) - 1], ls);
        pow_t[size_t(i)] = mul(pow_t[size_t(i) - 1], lt);
    }
    BiPoly out(f.degree());
    for (const auto& [mono, coef] : f.coeffs()) {
        BiPoly term = mul(pow_s[size_t(mono.es)], pow_t[size_t(mono.et)]) * coef;
        out += mul(term, BiPoly::monomial({0, 0, mono.eu, mono.ev}));
    }
    return out;
}

// Substitution u -> a u + b v, v -> c u + d v.
inline BiPoly substitute_uv(const BiPoly& f, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    const int n = f.degree().n;
    BiPoly lu, lv;
    lu.add_term({0, 0, 1, 0}, a);
    lu.add_term({0, 0, 0, 1}, b);
    lv.add_term({0, 0, 1, 0}, c);
    lv.add_term({0, 0, 0, 1}, d);
    std::vector<BiPoly> pow_u(size_t(n) + 1), pow_v(size_t(n) + 1);
    pow_u[0] = pow_v[0] = BiPoly::monomial({0, 0, 0, 0});
    for (int i = 1; i <= n; ++i) {
        pow_u[size_t(i)] = mul(pow_u[size_t(i) - 1], lu);
        pow_v[size_t(i)] = mul(pow_v[size_t(i) - 1], lv);
    }
    BiPoly out(f.degree());
    for (const auto& [mono, coef] : f.coeffs()) {
        BiPoly term = mul(pow_u[size_t(mono.eu)], pow_v[size_t(mono.ev)]) * coef;
        out += mul(term, BiPoly::monomial({mono.es, mono.et, 0, 0}));
    }
    return out;
}

} // namespace bisurf

#endif
