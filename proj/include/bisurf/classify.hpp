#ifndef BISURF_CLASSIFY_HPP
#define BISURF_CLASSIFY_HPP

#include <bisurf/ideal.hpp>
#include <bisurf/implicitize.hpp>
#include <bisurf/resolution.hpp>
#include <bisurf/xpoly.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisurf {

struct not_basepoint_free : std::runtime_error {
    explicit not_basepoint_free(const std::string& what) : std::runtime_error(what) {}
};

enum class NumericalType { T1, T2, T3, T4, T5a, T5b, T6 };

inline const char* type_name(NumericalType t) {
    switch (t) {
        case NumericalType::T1: return "1";
        case NumericalType::T2: return "2";
        case NumericalType::T3: return "3";
        case NumericalType::T4: return "4";
        case NumericalType::T5a: return "5a";
        case NumericalType::T5b: return "5b";
        case NumericalType::T6: return "6";
    }
    return "?";
}

struct PrimeDescriptor {
    enum class Kind { MaximalM, StPlusLinear, StPlusLinearConjugatePair, ExistenceOnly };
    Kind kind;
    std::optional<BiPoly> linear_form;      // monic (0,1) form when rational
    std::optional<Rat> pair_discriminant;   // for the conjugate-pair case
};

struct TypeReport {
    NumericalType type;
    int n01 = 0;
    int n10 = 0;
    bool has02 = false;
    std::optional<BiPoly> p;    // common factor: bidegree (2,0) for types 5/6, (1,1) for 3/4
    std::optional<BiPoly> q;    // the intrinsic binary quadratic q(u,v), monic
    std::optional<Rat> q_discriminant;
    std::vector<PrimeDescriptor> embedded_primes;
    std::vector<SyzygyVector> syzygies01;   // basis at absolute bidegree (2,2)
    std::vector<SyzygyVector> syzygies10;   // basis at absolute bidegree (3,1)
};

namespace detail {

// Split a (2,1) form as Q1(s,t) u + Q2(s,t) v.
inline std::pair<BiPoly, BiPoly> uv_parts(const BiPoly& f) {
    BiPoly q1, q2;
    for (const auto& [mono, c] : f.coeffs()) {
        BiMonomial st{mono.es, mono.et, 0, 0};
        if (mono.eu == 1)
            q1.add_term(st, c);
        else
            q2.add_term(st, c);
    }
    return {q1, q2};
}

// Common factor p from a linear syzygy, via the Koszul argument: a
// bidegree-(0,1) syzygy sum (a_i u + b_i v) p_i = 0 forces
// (sum a_i p_i, sum b_i p_i) = p (-v, u), and symmetrically for (1,0).
inline BiPoly extract_p_from_01(const SurfaceIdeal& ideal, const SyzygyVector& syz) {
    BiPoly g1;
    for (int i = 0; i < 4; ++i) {
        const Rat b = syz.coords[size_t(i)].coeff({0, 0, 0, 1});
        if (!is_zero(b)) g1 += ideal.generator(i) * b;
    }
    if (g1.is_zero_poly()) throw std::logic_error("degenerate (0,1) syzygy");
    return divide_exact(g1, BiPoly::variable_u()).monic();
}

inline BiPoly extract_p_from_10(const SurfaceIdeal& ideal, const SyzygyVector& syz) {
    BiPoly g1;
    for (int i = 0; i < 4; ++i) {
        const Rat b = syz.coords[size_t(i)].coeff({0, 1, 0, 0});
        if (!is_zero(b)) g1 += ideal.generator(i) * b;
    }
    if (g1.is_zero_poly()) throw std::logic_error("degenerate (1,0) syzygy");
    return divide_exact(g1, BiPoly::variable_s()).monic();
}

// Coordinates of the class of w in R_{2,0} / <p>, with respect to the basis
// of non-pivot monomials of the reduced form of p.
struct QuotientBy20 {
    explicit QuotientBy20(const BiPoly& p) : pvec(p.coeff_vector({2, 0})) {
        for (pivot = 0; pivot < 3 && is_zero(pvec[size_t(pivot)]); ++pivot) {}
        if (pivot == 3) throw std::invalid_argument("quotient by zero form");
    }

    std::array<Rat, 2> reduce(const BiPoly& w) const {
        auto wv = w.is_zero_poly() ? std::vector<Rat>(3) : w.coeff_vector({2, 0});
        const Rat f = wv[size_t(pivot)] / pvec[size_t(pivot)];
        std::array<Rat, 2> out;
        int k = 0;
        for (int j = 0; j < 3; ++j) {
            if (j == pivot) continue;
            out[size_t(k++)] = wv[size_t(j)] - f * pvec[size_t(j)];
        }
        return out;
    }

    std::vector<Rat> pvec;
    int pivot = 0;
};

} // namespace detail

// The intrinsic binary quadratic of a Type 5 ideal, built from an explicit
// 2-dimensional complement of span{pu, pv}: map each complement element into
// (R_{2,0}/<p>) (x) R_{0,1} and take the determinant of the resulting 2x2
// matrix of (0,1)-forms.  Well defined up to a nonzero scalar.
inline BiPoly q_from_complement(const BiPoly& p, const BiPoly& c1, const BiPoly& c2) {
    detail::QuotientBy20 quo(p);
    BiPoly a[2][2];
    const BiPoly* cs[2] = {&c1, &c2};
    for (int k = 0; k < 2; ++k) {
        auto [q1, q2] = detail::uv_parts(*cs[k]);
        auto r1 = quo.reduce(q1), r2 = quo.reduce(q2);
        for (int j = 0; j < 2; ++j) {
            a[k][j].add_term({0, 0, 1, 0}, r1[size_t(j)]);
            a[k][j].add_term({0, 0, 0, 1}, r2[size_t(j)]);
        }
    }
    BiPoly q = mul(a[0][0], a[1][1]) - mul(a[0][1], a[1][0]);
    if (q.is_zero_poly()) throw std::logic_error("q vanishes");
    return q.monic();
}

// Deterministic complement of span{pu, pv} inside the generator span.
inline std::pair<BiPoly, BiPoly> complement_of_p(const SurfaceIdeal& ideal, const BiPoly& p) {
    const BiPoly pu = mul(p, BiPoly::variable_u());
    const BiPoly pv = mul(p, BiPoly::variable_v());
    bisurf::detail::SpanBuilder span;
    span.add(pu.coeff_vector({2, 1}));
    span.add(pv.coeff_vector({2, 1}));
    std::vector<BiPoly> comp;
    for (int i = 0; i < 4 && comp.size() < 2; ++i)
        if (span.add(ideal.generator(i).coeff_vector({2, 1}))) comp.push_back(ideal.generator(i));
    if (comp.size() != 2) throw std::logic_error("complement extraction failed");
    return {comp[0], comp[1]};
}

inline BiPoly q_invariant(const SurfaceIdeal& ideal, const BiPoly& p) {
    auto [c1, c2] = complement_of_p(ideal, p);
    return q_from_complement(p, c1, c2);
}

inline std::vector<PrimeDescriptor> embedded_primes_for(NumericalType type,
                                                        const std::optional<BiPoly>& q) {
    using K = PrimeDescriptor::Kind;
    std::vector<PrimeDescriptor> out;
    switch (type) {
        case NumericalType::T1:
        case NumericalType::T3:
            out.push_back({K::MaximalM, std::nullopt, std::nullopt});
            break;
        case NumericalType::T2:
        case NumericalType::T4:
            out.push_back({K::MaximalM, std::nullopt, std::nullopt});
            out.push_back({K::ExistenceOnly, std::nullopt, std::nullopt});
            break;
        case NumericalType::T5a:
        case NumericalType::T5b: {
            auto fact = factor_binary_quadratic(*q);
            if (fact.kind == QuadraticKind::SplitRational) {
                out.push_back({K::StPlusLinear, fact.l1, std::nullopt});
                out.push_back({K::StPlusLinear, fact.l2, std::nullopt});
            } else if (fact.kind == QuadraticKind::DoubleRoot) {
                out.push_back({K::StPlusLinear, fact.l1, std::nullopt});
            } else {
                out.push_back({K::StPlusLinearConjugatePair, std::nullopt, fact.discriminant});
            }
            break;
        }
        case NumericalType::T6:
            break;
    }
    return out;
}

// The six-type decision tree, driven by the dimensions of the
// linear syzygy spaces.
inline TypeReport classify(const SurfaceIdeal& ideal) {
    auto bp = is_basepoint_free(ideal);
    if (!bp.free) throw not_basepoint_free("not basepoint free");

    TypeReport rep;
    auto gens = with_shifts(ideal.generators());
    rep.syzygies01 = syzygies_in_bidegree(gens, {2, 2});
    rep.syzygies10 = syzygies_in_bidegree(gens, {3, 1});
    rep.n01 = int(rep.syzygies01.size());
    rep.n10 = int(rep.syzygies10.size());

    const bool pattern_ok = (rep.n01 == 0 || rep.n10 == 0) && rep.n01 <= 2 && rep.n10 <= 1;
    if (!pattern_ok)
        throw std::logic_error("impossible syzygy pattern (n01,n10)=(" + std::to_string(rep.n01) +
                               "," + std::to_string(rep.n10) + ")");

    // Minimal (0,2) syzygies: the kernel at (2,3) modulo R_{0,1}-multiples
    // of the (0,1) syzygies.
    {
        auto k23 = syzygies_in_bidegree(gens, {2, 3});
        bisurf::detail::SpanBuilder span;
        std::vector<BiDegree> shifts(4, BiDegree{2, 1});
        for (const auto& s : rep.syzygies01)
            for (const auto& mono : monomial_basis(BiDegree{0, 1}))
                span.add(bisurf::detail::vectorize(bisurf::detail::monomial_multiple(mono, s), shifts, {2, 3}));
        int minimal02 = 0;
        for (const auto& s : k23)
            if (span.add(bisurf::detail::vectorize(s, shifts, {2, 3}))) ++minimal02;
        rep.has02 = minimal02 > 0;
    }

    if (rep.n01 == 2) {
        rep.type = NumericalType::T6;
        rep.p = detail::extract_p_from_01(ideal, rep.syzygies01.front());
    } else if (rep.n01 == 1) {
        rep.p = detail::extract_p_from_01(ideal, rep.syzygies01.front());
        rep.q = q_invariant(ideal, *rep.p);
        const Rat a = rep.q->coeff({0, 0, 2, 0});
        const Rat b = rep.q->coeff({0, 0, 1, 1});
        const Rat c = rep.q->coeff({0, 0, 0, 2});
        rep.q_discriminant = b * b - 4 * a * c;
        rep.type = is_zero(*rep.q_discriminant) ? NumericalType::T5b : NumericalType::T5a;
    } else if (rep.n10 == 1) {
        rep.p = detail::extract_p_from_10(ideal, rep.syzygies10.front());
        const Rat a0 = rep.p->coeff({1, 0, 1, 0});
        const Rat a1 = rep.p->coeff({1, 0, 0, 1});
        const Rat a2 = rep.p->coeff({0, 1, 1, 0});
        const Rat a3 = rep.p->coeff({0, 1, 0, 1});
        const bool decomposable = is_zero(a0 * a3 - a1 * a2);
        rep.type = decomposable ? NumericalType::T4 : NumericalType::T3;
        if (decomposable && !rep.has02)
            throw std::logic_error("Type 4 input without minimal (0,2) syzygy");
        if (!decomposable && rep.has02)
            throw std::logic_error("Type 3 input with minimal (0,2) syzygy");
    } else {
        rep.type = rep.has02 ? NumericalType::T2 : NumericalType::T1;
    }

    rep.embedded_primes = embedded_primes_for(rep.type, rep.q);
    return rep;
}

// True iff all four partials of F vanish identically along the curve
// (a:b) -> (c0(a,b) : ... : c3(a,b)) given by binary forms in (s,t).
inline bool verify_singular_component(const XPoly& F, const std::array<BiPoly, 4>& curve) {
    bool any = false;
    for (const auto& c : curve) any = any || !c.is_zero_poly();
    if (!any) throw std::invalid_argument("verify_singular_component: zero parameterization");
    std::vector<BiPoly> coords(curve.begin(), curve.end());
    for (const auto& dF : partials(F)) {
        if (dF.is_zero_poly()) continue;
        if (!pullback(dF, coords).is_zero_poly()) return false;
    }
    return true;
}

// Syzygy-adapted generator basis: when a linear syzygy exists the pair
// (pu, pv) or (ps, pt) occupies positions 0 and 1, completed greedily from
// the original generators; otherwise the original order.
struct AdaptedBasis {
    SurfaceIdeal ideal;
    QMatrix change;    // new_i = sum_j change(i,j) * old_j
    bool trivial;      // adapted equals the original basis
};

inline AdaptedBasis adapted_basis(const SurfaceIdeal& ideal, const TypeReport& rep) {
    std::vector<BiPoly> newgens;
    if (rep.n01 >= 1) {
        newgens = {mul(*rep.p, BiPoly::variable_u()), mul(*rep.p, BiPoly::variable_v())};
    } else if (rep.n10 == 1) {
        newgens = {mul(*rep.p, BiPoly::variable_s()), mul(*rep.p, BiPoly::variable_t())};
    } else {
        QMatrix id = QMatrix::identity(4);
        return AdaptedBasis{ideal, id, true};
    }
    bisurf::detail::SpanBuilder span;
    for (const auto& g : newgens) span.add(g.coeff_vector({2, 1}));
    for (int i = 0; i < 4 && newgens.size() < 4; ++i)
        if (span.add(ideal.generator(i).coeff_vector({2, 1}))) newgens.push_back(ideal.generator(i));
    if (newgens.size() != 4) throw std::logic_error("adapted basis construction failed");

    // Solve for the change of basis: coefficients of new generators in terms
    // of the old ones.
    QMatrix change(4, 4);
    QMatrix a = ideal.coefficient_matrix();
    for (int i = 0; i < 4; ++i) {
        QMatrix aug(6, 5);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 4; ++c) aug.at(r, c) = a.at(c, r);
        auto v = newgens[size_t(i)].coeff_vector({2, 1});
        for (int r = 0; r < 6; ++r) aug.at(r, 4) = v[size_t(r)];
        auto rr = rref(std::move(aug));
        for (size_t k = 0; k < rr.pivots.size(); ++k) {
            if (rr.pivots[k] == 4) throw std::logic_error("adapted generator outside span");
            change.at(i, rr.pivots[k]) = rr.m.at(int(k), 4);
        }
    }

    bool trivial = change == QMatrix::identity(4);
    AdaptedBasis out{SurfaceIdeal::validate(newgens), std::move(change), trivial};
    return out;
}

struct SingularLine {
    int i, j;                    // vanishing coordinate pair, adapted basis
    std::array<XPoly, 2> forms;  // the same pair written in the original coordinates
};

// Candidate singular lines: the six coordinate lines V(x_i, x_j) in the
// syzygy-adapted basis, filtered through verify_singular_component against
// the reduced implicit equation.  Discovery of non-linear components (Types
// 1 and 2) is out of reach of this candidate set by design.
inline std::vector<SingularLine> singular_line_candidates(const SurfaceIdeal& ideal,
                                                          const TypeReport& rep) {
    AdaptedBasis ab = adapted_basis(ideal, rep);
    const XPoly F = implicit_equation(ab.ideal).reduced;

    std::vector<SingularLine> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            // V(x_i, x_j) parameterized by the two remaining coordinates.
            std::array<BiPoly, 4> curve;
            bool first = true;
            for (int k = 0; k < 4; ++k) {
                if (k == i || k == j) continue;
                curve[size_t(k)] = first ? BiPoly::variable_s() : BiPoly::variable_t();
                first = false;
            }
            if (!verify_singular_component(F, curve)) continue;
            SingularLine line;
            line.i = i;
            line.j = j;
            for (int which = 0; which < 2; ++which) {
                const int idx = which == 0 ? i : j;
                XPoly form;
                for (int k = 0; k < 4; ++k) {
                    const Rat c = ab.change.at(idx, k);
                    if (!is_zero(c)) form += XPoly::variable(k, c);
                }
                line.forms[size_t(which)] = form.normalized();
            }
            out.push_back(std::move(line));
        }
    return out;
}

} // namespace bisurf

#endif
