#ifndef BISURF_IMPLICITIZE_HPP
#define BISURF_IMPLICITIZE_HPP

#include <bisurf/ideal.hpp>
#include <bisurf/resolution.hpp>
#include <bisurf/xpoly.hpp>

#include <stdexcept>
#include <vector>

namespace bisurf {

// Deterministic basis of the syzygies whose four coordinates all lie in
// R_{1,1}; for a basepoint-free ideal this space is exactly 4-dimensional.
inline std::vector<SyzygyVector> z1_basis_11(const SurfaceIdeal& ideal) {
    auto basis = syzygies_in_bidegree(with_shifts(ideal.generators()), BiDegree{3, 2});
    if (basis.size() != 4)
        throw std::logic_error("unexpected Z1 dimension " + std::to_string(basis.size()) +
                               " (input not basepoint free?)");
    return basis;
}

// The bidegree-(1,1) strand of the first approximation-complex map: rows
// indexed by the monomial basis {su, sv, tu, tv}, columns by the syzygy
// basis; entry (r,c) = sum_i x_i * (coefficient of row monomial r in the
// i-th coordinate of syzygy c).
struct D1Matrix {
    XPolyMatrix matrix;
    std::vector<SyzygyVector> basis;
};

inline D1Matrix assemble_d1(const SurfaceIdeal& ideal) {
    D1Matrix d1;
    d1.basis = z1_basis_11(ideal);
    const auto rows = monomial_basis(BiDegree{1, 1});
    d1.matrix = XPolyMatrix(4, 4);
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i) {
            const BiPoly& coord = d1.basis[size_t(c)].coords[size_t(i)];
            if (coord.is_zero_poly()) continue;
            for (int r = 0; r < 4; ++r) {
                const Rat x = coord.coeff(rows[size_t(r)]);
                if (!is_zero(x)) d1.matrix.at(r, c) += XPoly::variable(i, x);
            }
        }
    return d1;
}

// Brute-force oracle: basis of the degree-d forms in x0..x3 vanishing on the
// image, via the kernel of the evaluation map k[x]_d -> R_{2d,d}.
inline std::vector<XPoly> kernel_oracle(const SurfaceIdeal& ideal, int d) {
    if (d < 1) throw std::invalid_argument("kernel_oracle: degree must be positive");

    std::vector<XMonomial> monos;
    for (int e0 = d; e0 >= 0; --e0)
        for (int e1 = d - e0; e1 >= 0; --e1)
            for (int e2 = d - e0 - e1; e2 >= 0; --e2)
                monos.push_back({e0, e1, e2, d - e0 - e1 - e2});

    std::array<std::vector<BiPoly>, 4> pows;
    for (int i = 0; i < 4; ++i) {
        pows[size_t(i)].resize(size_t(d) + 1);
        pows[size_t(i)][0] = BiPoly::monomial({0, 0, 0, 0});
        for (int e = 1; e <= d; ++e)
            pows[size_t(i)][size_t(e)] = mul(pows[size_t(i)][size_t(e) - 1], ideal.generator(i));
    }

    const BiDegree target{2 * d, d};
    QMatrix m(space_dim(target), int(monos.size()));
    for (size_t j = 0; j < monos.size(); ++j) {
        BiPoly prod = pows[0][size_t(monos[j][0])];
        for (int i = 1; i < 4; ++i)
            if (monos[j][size_t(i)] > 0) prod = mul(prod, pows[size_t(i)][size_t(monos[j][size_t(i)])]);
        auto v = prod.coeff_vector(target);
        for (size_t i = 0; i < v.size(); ++i)
            if (!is_zero(v[i])) m.at(int(i), int(j)) = v[i];
    }

    std::vector<XPoly> out;
    for (const auto& v : kernel_basis(m)) {
        XPoly F;
        for (size_t j = 0; j < monos.size(); ++j)
            if (!is_zero(v[j])) F.add_term(monos[j], v[j]);
        out.push_back(F.normalized());
    }
    return out;
}

struct ImplicitResult {
    XPoly det;          // xdet of the (1,1) strand, degree 4
    XPoly reduced;      // the implicit equation, normalized
    int multiplicity;   // det = c * reduced^multiplicity
    bool birational;
};

// Determinantal implicitization from the square bidegree-(1,1) strand.  When
// two (0,1) linear syzygies exist the map is 2:1 onto a quadric; the quadric
// is sourced from the degree-2 kernel oracle and det = c*Q^2 is verified by
// exact subtraction rather than assumed.
inline ImplicitResult implicit_equation(const SurfaceIdeal& ideal) {
    ImplicitResult out{xdet(assemble_d1(ideal).matrix), XPoly{}, 1, true};
    if (out.det.is_zero_poly()) throw std::logic_error("implicit_equation: vanishing determinant");

    const size_t n01 = syzygies_in_bidegree(with_shifts(ideal.generators()), BiDegree{2, 2}).size();
    if (n01 < 2) {
        out.reduced = out.det.normalized();
        out.multiplicity = 1;
        out.birational = true;
        return out;
    }

    auto quadrics = kernel_oracle(ideal, 2);
    if (quadrics.size() != 1)
        throw std::logic_error("implicit_equation: expected a unique quadric relation");
    const XPoly& q = quadrics.front();
    XPoly q2 = q * q;
    const Rat c = out.det.leading_coeff() / q2.leading_coeff();
    if (!(q2 * c == out.det))
        throw std::logic_error("implicit_equation: determinant is not a quadric square");
    out.reduced = q;
    out.multiplicity = 2;
    out.birational = false;
    return out;
}

// Symmetric Gram matrix of a quadratic form in x0..x3.
inline QMatrix quadric_symmetric_matrix(const XPoly& q) {
    if (q.degree() != 2 && !q.is_zero_poly())
        throw std::invalid_argument("quadric_symmetric_matrix: not a quadric");
    QMatrix s(4, 4);
    for (const auto& [mono, c] : q.coeffs()) {
        int vars[2], k = 0;
        for (int i = 0; i < 4; ++i)
            for (int rep = 0; rep < mono[size_t(i)]; ++rep) vars[k++] = i;
        if (vars[0] == vars[1]) {
            s.at(vars[0], vars[0]) = c;
        } else {
            s.at(vars[0], vars[1]) = c / 2;
            s.at(vars[1], vars[0]) = c / 2;
        }
    }
    return s;
}

} // namespace bisurf

#endif
