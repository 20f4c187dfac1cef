#ifndef BISURF_DUALSCROLL_HPP
#define BISURF_DUALSCROLL_HPP

#include <bisurf/classify.hpp>
#include <bisurf/ideal.hpp>

#include <array>
#include <optional>
#include <vector>

namespace bisurf {

// Linear forms on P(V) are carried as coordinate vectors over the canonical
// monomial basis of R_{2,1}; dual-space polynomials reuse BiPoly with the
// variables read as S,T,U,V.

// Deterministic kernel basis of the 4x6 coefficient matrix: the two linear
// forms cutting out P(U).
inline std::array<std::vector<Rat>, 2> u_perp(const SurfaceIdeal& ideal) {
    auto kb = kernel_basis(ideal.coefficient_matrix());
    if (kb.size() != 2) throw std::logic_error("u_perp: kernel is not 2-dimensional");
    return {kb[0], kb[1]};
}

// Pull a linear form back to the dual P^1 x P^1.  The dual basis pairing
// carries the multinomial 1/2 on the s^2 and t^2 monomials:
//   s^2*u -> 1/2 S^2 U,  s*t*u -> S T U,  t^2*u -> 1/2 T^2 U,  and the same
// with V.  Coordinates are over the canonical (2,1) basis.
inline BiPoly pullback_dual(const std::vector<Rat>& coords) {
    if (coords.size() != 6) throw std::invalid_argument("pullback_dual: need 6 coordinates");
    const auto basis = monomial_basis(BiDegree{2, 1});
    BiPoly out(BiDegree{2, 1});
    for (size_t a = 0; a < 6; ++a) {
        if (is_zero(coords[a])) continue;
        const Rat scale = (basis[a].es == 1) ? Rat(1) : rat(1, 2);
        out.add_term(basis[a], coords[a] * scale);
    }
    return out;
}

struct CommonFactorResult {
    BiPoly g;          // monic common factor
    BiDegree degree;
    BiPoly h1, h2;     // residuals: f_i = g * h_i
};

// Maximal common factor of two bidegree-(2,1) forms, found by testing the
// four candidate divisor bidegrees (0,1), (1,0), (1,1), (2,0): a factor of
// bidegree (a,b) exists iff some nonzero (h1,h2) with f1 h2 - f2 h1 = 0 has
// coordinates of bidegree (2,1)-(a,b).
inline std::optional<CommonFactorResult> common_factor(const BiPoly& f1, const BiPoly& f2) {
    if (f1.is_zero_poly() || f2.is_zero_poly())
        throw std::invalid_argument("common_factor: zero input");

    static const BiDegree candidates[4] = {{0, 1}, {1, 0}, {1, 1}, {2, 0}};
    std::vector<BiDegree> hits;
    for (const auto& cand : candidates) {
        const BiDegree r = BiDegree{2, 1} - cand;
        const BiDegree target = BiDegree{2, 1} + r;
        const int piece = space_dim(r);
        QMatrix m(space_dim(target), 2 * piece);
        QMatrix b1 = multiplication_matrix(f2, r);   // h1-block, with minus sign
        QMatrix b2 = multiplication_matrix(f1, r);   // h2-block
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < piece; ++j) {
                if (!is_zero(b1.at(i, j))) m.at(i, j) = -b1.at(i, j);
                if (!is_zero(b2.at(i, j))) m.at(i, piece + j) = b2.at(i, j);
            }
        if (!kernel_basis(m).empty()) hits.push_back(cand);
    }
    if (hits.empty()) return std::nullopt;

    BiDegree best{0, 0};
    for (const auto& h : hits) best = {std::max(best.m, h.m), std::max(best.n, h.n)};
    bool best_hit = false;
    for (const auto& h : hits) best_hit = best_hit || h == best;
    if (!best_hit) throw std::logic_error("common_factor: candidate lattice is not directed");

    // Recover g from a kernel vector at the maximal candidate.
    const BiDegree r = BiDegree{2, 1} - best;
    const int piece = space_dim(r);
    QMatrix m(space_dim(BiDegree{2, 1} + r), 2 * piece);
    QMatrix b1 = multiplication_matrix(f2, r);
    QMatrix b2 = multiplication_matrix(f1, r);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < piece; ++j) {
            if (!is_zero(b1.at(i, j))) m.at(i, j) = -b1.at(i, j);
            if (!is_zero(b2.at(i, j))) m.at(i, piece + j) = b2.at(i, j);
        }
    auto kb = kernel_basis(m);
    std::vector<Rat> h1v(kb[0].begin(), kb[0].begin() + piece);
    BiPoly h1 = BiPoly::from_coeff_vector(h1v, r);

    CommonFactorResult out;
    out.g = divide_exact(f1, h1).monic();
    out.degree = best;
    out.h1 = divide_exact(f1, out.g);
    out.h2 = divide_exact(f2, out.g);
    return out;
}

enum class ResidualKind { DistinctRoots, DoubleRoot, Infinite };

// Scale to coprime integer coordinates with the first nonzero entry positive.
inline std::array<Rat, 2> normalize_projective(std::array<Rat, 2> p) {
    if (is_zero(p[0]) && is_zero(p[1])) return p;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), p[0].get_den().get_mpz_t(), p[1].get_den().get_mpz_t());
    mpz_class n0 = p[0].get_num() * (l / p[0].get_den());
    mpz_class n1 = p[1].get_num() * (l / p[1].get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n0.get_mpz_t(), n1.get_mpz_t());
    n0 /= g;
    n1 /= g;
    if (n0 < 0 || (n0 == 0 && n1 < 0)) {
        n0 = -n0;
        n1 = -n1;
    }
    return {Rat(n0), Rat(n1)};
}

struct ProjectivePoint {
    std::array<Rat, 2> st;   // (S : T)
    std::array<Rat, 2> uv;   // (U : V)
};

struct ResidualStructure {
    ResidualKind kind;
    BiPoly resultant;                     // binary quadratic in (S,T)
    Rat discriminant;
    std::vector<ProjectivePoint> rational_roots;
};

namespace detail {

// Evaluate a binary (d,0) form at a rational point (S,T).
inline Rat eval_st(const BiPoly& f, const Rat& S, const Rat& T) {
    Rat out = 0;
    for (const auto& [mono, c] : f.coeffs()) {
        Rat term = c;
        for (int k = 0; k < mono.es; ++k) term *= S;
        for (int k = 0; k < mono.et; ++k) term *= T;
        out += term;
    }
    return out;
}

// (S:T) root of a monic linear (1,0) form.
inline std::array<Rat, 2> root_of_linear_st(const BiPoly& l) {
    const Rat a = l.coeff({1, 0, 0, 0});
    const Rat b = l.coeff({0, 1, 0, 0});
    if (is_zero(a)) return {Rat(1), Rat(0)};
    return {-b / a, Rat(1)};
}

} // namespace detail

// Eliminate (U,V) from a pair of bilinear dual forms h_i = a_i(S,T) U +
// b_i(S,T) V via the 2x2 determinant and classify the resulting binary
// quadratic in (S,T).
inline ResidualStructure residual_root_structure(const BiPoly& h1, const BiPoly& h2) {
    auto parts = [](const BiPoly& h) {
        BiPoly a, b;
        for (const auto& [mono, c] : h.coeffs()) {
            BiMonomial st{mono.es, mono.et, 0, 0};
            if (mono.eu == 1)
                a.add_term(st, c);
            else
                b.add_term(st, c);
        }
        return std::pair{a, b};
    };
    auto [a1, b1] = parts(h1);
    auto [a2, b2] = parts(h2);

    ResidualStructure out;
    out.resultant = mul(a1, b2) - mul(a2, b1);
    if (out.resultant.is_zero_poly()) {
        out.kind = ResidualKind::Infinite;
        out.discriminant = 0;
        return out;
    }
    auto fact = factor_binary_quadratic(out.resultant);
    out.discriminant = fact.discriminant;
    out.kind = fact.kind == QuadraticKind::DoubleRoot ? ResidualKind::DoubleRoot
                                                      : ResidualKind::DistinctRoots;

    std::vector<BiPoly> linears;
    if (fact.l1) linears.push_back(*fact.l1);
    if (fact.l2) linears.push_back(*fact.l2);
    for (const auto& l : linears) {
        auto st = detail::root_of_linear_st(l);
        const Rat va1 = detail::eval_st(a1, st[0], st[1]), vb1 = detail::eval_st(b1, st[0], st[1]);
        const Rat va2 = detail::eval_st(a2, st[0], st[1]), vb2 = detail::eval_st(b2, st[0], st[1]);
        ProjectivePoint pt;
        pt.st = normalize_projective(st);
        if (!is_zero(va1) || !is_zero(vb1))
            pt.uv = normalize_projective({-vb1, va1});
        else if (!is_zero(va2) || !is_zero(vb2))
            pt.uv = normalize_projective({-vb2, va2});
        else
            continue;   // whole fiber vanishes; no isolated point to report
        out.rational_roots.push_back(pt);
    }
    return out;
}

struct DualReport {
    std::array<std::vector<Rat>, 2> uperp;
    std::array<BiPoly, 2> pullbacks;
    std::optional<CommonFactorResult> factor;
    std::optional<ResidualStructure> residual;   // for a degree-(1,0) factor
    bool predicts_not_basepoint_free = false;
    std::vector<NumericalType> predicted_types;  // empty iff not-basepoint-free predicted
};

// The common-factor dictionary.  The positive cases follow the dual-scroll
// classification: a (2,0) factor forces two square fibers (Type 6), an exact
// (1,0) factor forces one (Type 5, split by the residual roots), a reducible
// (1,1) factor or a (0,1) factor forces basepoints.  An irreducible (1,1)
// factor rules out Types 4-6.  No factor at all only rules out Type 6: with
// the multinomial pairing the intersection is finite for every Type 1-4
// example and also for Type 5 ideals whose common (2,0) form is not a
// square, so no sharper prediction is sound.
inline DualReport dual_report(const SurfaceIdeal& ideal) {
    DualReport out;
    out.uperp = u_perp(ideal);
    out.pullbacks = {pullback_dual(out.uperp[0]), pullback_dual(out.uperp[1])};
    out.factor = common_factor(out.pullbacks[0], out.pullbacks[1]);

    using T = NumericalType;
    if (!out.factor) {
        out.predicted_types = {T::T1, T::T2, T::T3, T::T4, T::T5a, T::T5b};
        return out;
    }
    const BiDegree d = out.factor->degree;
    if (d == BiDegree{0, 1}) {
        out.predicts_not_basepoint_free = true;
    } else if (d == BiDegree{1, 1}) {
        const BiPoly& g = out.factor->g;
        const Rat det = g.coeff({1, 0, 1, 0}) * g.coeff({0, 1, 0, 1}) -
                        g.coeff({1, 0, 0, 1}) * g.coeff({0, 1, 1, 0});
        if (is_zero(det))
            out.predicts_not_basepoint_free = true;
        else
            out.predicted_types = {T::T1, T::T2, T::T3};
    } else if (d == BiDegree{1, 0}) {
        out.residual = residual_root_structure(out.factor->h1, out.factor->h2);
        switch (out.residual->kind) {
            case ResidualKind::DistinctRoots: out.predicted_types = {T::T5a}; break;
            case ResidualKind::DoubleRoot: out.predicted_types = {T::T5b}; break;
            case ResidualKind::Infinite: break;   // impossible for coprime residuals
        }
    } else if (d == BiDegree{2, 0}) {
        out.predicted_types = {T::T6};
    }
    return out;
}

inline bool cross_check(const DualReport& dual, NumericalType actual) {
    if (dual.predicts_not_basepoint_free) return false;
    for (auto t : dual.predicted_types)
        if (t == actual) return true;
    return false;
}

} // namespace bisurf

#endif
