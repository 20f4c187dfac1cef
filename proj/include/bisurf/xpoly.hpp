#ifndef BISURF_XPOLY_HPP
#define BISURF_XPOLY_HPP

#include <bisurf/bipoly.hpp>
#include <bisurf/rational.hpp>

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace bisurf {

// Exponent tuple for x0..x3, ordered lexicographically with x0 > x1 > x2 > x3.
using XMonomial = std::array<int, 4>;

struct XMonomialOrder {
    bool operator()(const XMonomial& a, const XMonomial& b) const { return a > b; }
};

// Homogeneous polynomial in the implicit-space variables x0..x3.
class XPoly {
public:
    using CoeffMap = std::map<XMonomial, Rat, XMonomialOrder>;

    XPoly() = default;

    static XPoly monomial(const XMonomial& mono, const Rat& c = Rat(1)) {
        XPoly p;
        p.add_term(mono, c);
        return p;
    }
    static XPoly variable(int i, const Rat& c = Rat(1)) {
        XMonomial m{0, 0, 0, 0};
        m[size_t(i)] = 1;
        return monomial(m, c);
    }

    bool is_zero_poly() const { return coeffs_.empty(); }
    int degree() const { return deg_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    Rat coeff(const XMonomial& mono) const {
        auto it = coeffs_.find(mono);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void add_term(const XMonomial& mono, const Rat& c) {
        if (is_zero(c)) return;
        const int d = mono[0] + mono[1] + mono[2] + mono[3];
        if (coeffs_.empty())
            deg_ = d;
        else if (d != deg_)
            throw std::invalid_argument("XPoly: mixed degrees");
        Rat& slot = coeffs_[mono];
        slot += c;
        if (is_zero(slot)) coeffs_.erase(mono);
    }

    XPoly& operator+=(const XPoly& o) {
        for (const auto& [mono, c] : o.coeffs_) add_term(mono, c);
        return *this;
    }
    XPoly& operator-=(const XPoly& o) {
        for (const auto& [mono, c] : o.coeffs_) add_term(mono, -c);
        return *this;
    }
    friend XPoly operator+(XPoly a, const XPoly& b) { a += b; return a; }
    friend XPoly operator-(XPoly a, const XPoly& b) { a -= b; return a; }

    XPoly operator*(const Rat& c) const {
        XPoly out;
        if (is_zero(c)) return out;
        out.deg_ = deg_;
        for (const auto& [mono, x] : coeffs_) out.coeffs_[mono] = x * c;
        return out;
    }
    XPoly operator-() const { return *this * Rat(-1); }

    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        XPoly out;
        for (const auto& [ma, ca] : a.coeffs_)
            for (const auto& [mb, cb] : b.coeffs_)
                out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]}, ca * cb);
        return out;
    }

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }

    Rat leading_coeff() const { return coeffs_.empty() ? Rat(0) : coeffs_.begin()->second; }

    // Scale so the canonically-first coefficient is +1.
    XPoly normalized() const {
        if (coeffs_.empty()) return *this;
        return *this * (1 / Rat(leading_coeff()));
    }

    // a == c*b for some nonzero rational c.
    static bool proportional(const XPoly& a, const XPoly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return a.is_zero_poly() && b.is_zero_poly();
        return a.normalized() == b.normalized();
    }

private:
    int deg_ = 0;
    CoeffMap coeffs_;
};

struct XPolyMatrix {
    int rows = 0, cols = 0;
    std::vector<XPoly> entries;   // row major

    XPolyMatrix() = default;
    XPolyMatrix(int r, int c) : rows(r), cols(c), entries(size_t(r) * c) {}

    XPoly& at(int i, int j) { return entries[size_t(i) * cols + j]; }
    const XPoly& at(int i, int j) const { return entries[size_t(i) * cols + j]; }
};

// Determinant by cofactor expansion along the first column; intended for the
// 4x4 matrices of linear forms this artifact produces.
inline XPoly xdet(const XPolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("xdet: matrix is not square");
    const int n = m.rows;
    if (n == 0) return XPoly::monomial({0, 0, 0, 0});
    if (n == 1) return m.at(0, 0);

    XPoly out;
    for (int i = 0; i < n; ++i) {
        if (m.at(i, 0).is_zero_poly()) continue;
        XPolyMatrix minor(n - 1, n - 1);
        for (int r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) minor.at(mr, c - 1) = m.at(r, c);
            ++mr;
        }
        XPoly cof = m.at(i, 0) * xdet(minor);
        if (i % 2 == 0)
            out += cof;
        else
            out -= cof;
    }
    return out;
}

// F(p0,...,p3): substitute generators for the x variables.  Result is
// bihomogeneous of bidegree (2d, d) or zero.
inline BiPoly pullback(const XPoly& F, const std::vector<BiPoly>& gens) {
    if (gens.size() != 4) throw std::invalid_argument("pullback: need 4 generators");
    const int d = F.degree();
    std::array<std::vector<BiPoly>, 4> pows;
    for (int i = 0; i < 4; ++i) {
        pows[size_t(i)].resize(size_t(d) + 1);
        pows[size_t(i)][0] = BiPoly::monomial({0, 0, 0, 0});
        for (int e = 1; e <= d; ++e)
            pows[size_t(i)][size_t(e)] = mul(pows[size_t(i)][size_t(e) - 1], gens[size_t(i)]);
    }
    BiPoly out(BiDegree{2 * d, d});
    for (const auto& [mono, c] : F.coeffs()) {
        BiPoly term = pows[0][size_t(mono[0])] * c;
        for (int i = 1; i < 4; ++i)
            if (mono[size_t(i)] > 0) term = mul(term, pows[size_t(i)][size_t(mono[size_t(i)])]);
        out += term;
    }
    return out;
}

// Formal partial derivatives dF/dx_i.
inline std::array<XPoly, 4> partials(const XPoly& F) {
    std::array<XPoly, 4> out;
    for (const auto& [mono, c] : F.coeffs()) {
        for (int i = 0; i < 4; ++i) {
            if (mono[size_t(i)] == 0) continue;
            XMonomial d = mono;
            d[size_t(i)] -= 1;
            out[size_t(i)].add_term(d, c * mono[size_t(i)]);
        }
    }
    return out;
}

} // namespace bisurf

#endif
