#ifndef BISURF_IDEAL_HPP
#define BISURF_IDEAL_HPP

#include <bisurf/bipoly.hpp>
#include <bisurf/matrix.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace bisurf {

struct invalid_ideal : std::runtime_error {
    explicit invalid_ideal(const std::string& what) : std::runtime_error(what) {}
};

// Dimension of the bidegree-d piece of the ideal generated by gens: rank of
// the concatenated multiplication maps R_{d - deg g_k} -> R_d.
inline int ideal_dim_at(const std::vector<BiPoly>& gens, BiDegree d) {
    const int rows = space_dim(d);
    int cols = 0;
    for (const auto& g : gens)
        if (g.degree().leq(d)) cols += space_dim(d - g.degree());
    if (cols == 0) return 0;
    QMatrix m(rows, cols);
    int off = 0;
    for (const auto& g : gens) {
        if (!g.degree().leq(d)) continue;
        const BiDegree from = d - g.degree();
        QMatrix blk = multiplication_matrix(g, from);
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j)
                if (!is_zero(blk.at(i, j))) m.at(i, off + j) = blk.at(i, j);
        off += blk.cols();
    }
    return rank(m);
}

// An ordered 4-tuple of independent bidegree-(2,1) forms.
class SurfaceIdeal {
public:
    static SurfaceIdeal validate(std::vector<BiPoly> gens) {
        if (gens.size() != 4) throw invalid_ideal("expected exactly 4 generators");
        const BiDegree want{2, 1};
        for (const auto& g : gens)
            if (g.is_zero_poly() || g.degree() != want)
                throw invalid_ideal("wrong bidegree: generators must be nonzero of bidegree (2,1)");
        SurfaceIdeal ideal;
        ideal.gens_ = std::move(gens);
        if (rank(ideal.coefficient_matrix()) != 4)
            throw invalid_ideal("dependent generators");
        return ideal;
    }

    const std::vector<BiPoly>& generators() const { return gens_; }
    const BiPoly& generator(int i) const { return gens_[size_t(i)]; }

    // 4x6 matrix of generator coefficients, columns in the canonical order
    // of monomial_basis((2,1)).
    QMatrix coefficient_matrix() const {
        QMatrix a(4, 6);
        for (int i = 0; i < 4; ++i) {
            auto v = gens_[size_t(i)].coeff_vector({2, 1});
            for (int j = 0; j < 6; ++j) a.at(i, j) = v[size_t(j)];
        }
        return a;
    }

private:
    std::vector<BiPoly> gens_;
};

struct BasepointReport {
    bool free = false;
    // Non-constant gcd of the six 2x2 minors; its roots are the (s:t)
    // coordinates of basepoints.  Absent when the rank-<=1 locus is all of P^1.
    std::optional<BiPoly> witness;
    bool rank_le1_everywhere = false;
};

// Write each p_i = q_i(s,t) u + r_i(s,t) v.  A common zero over the closure
// exists iff all six minors q_i r_j - q_j r_i vanish somewhere, i.e. iff
// their gcd is non-constant (or all vanish identically).
inline BasepointReport is_basepoint_free(const SurfaceIdeal& ideal) {
    std::vector<BiPoly> q(4), r(4);
    for (int i = 0; i < 4; ++i) {
        for (const auto& [mono, c] : ideal.generator(i).coeffs()) {
            BiMonomial st{mono.es, mono.et, 0, 0};
            if (mono.eu == 1)
                q[size_t(i)].add_term(st, c);
            else
                r[size_t(i)].add_term(st, c);
        }
    }

    std::optional<BiPoly> g;
    bool any_nonzero = false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            BiPoly minor = mul(q[size_t(i)], r[size_t(j)]) - mul(q[size_t(j)], r[size_t(i)]);
            if (minor.is_zero_poly()) continue;
            any_nonzero = true;
            g = g ? binary_form_gcd(*g, minor) : minor.monic();
        }

    BasepointReport rep;
    if (!any_nonzero) {
        rep.free = false;
        rep.rank_le1_everywhere = true;
        return rep;
    }
    if (g->degree() == BiDegree{0, 0}) {
        rep.free = true;
    } else {
        rep.free = false;
        rep.witness = *g;
    }
    return rep;
}

// h_{i,j} = HF((i,j), R/I_U), computed as codimension of the generator image.
inline int hilbert_function(const SurfaceIdeal& ideal, BiDegree d) {
    return space_dim(d) - ideal_dim_at(ideal.generators(), d);
}

struct HilbertTable {
    int imax = 0, jmax = 0;
    std::vector<int> values;   // (imax+1) x (jmax+1), row major

    int at(int i, int j) const { return values[size_t(i) * (jmax + 1) + j]; }
};

inline HilbertTable hilbert_table(const SurfaceIdeal& ideal, int imax, int jmax) {
    HilbertTable t;
    t.imax = imax;
    t.jmax = jmax;
    t.values.resize(size_t(imax + 1) * (jmax + 1));
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; j <= jmax; ++j)
            t.values[size_t(i) * (jmax + 1) + j] = hilbert_function(ideal, {i, j});
    return t;
}

} // namespace bisurf

#endif
