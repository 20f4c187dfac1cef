#ifndef BISURF_TESTS_HELPERS_HPP
#define BISURF_TESTS_HELPERS_HPP

#include <bisurf/bisurf.hpp>

#include <array>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using namespace bisurf;

inline BiPoly P(const std::string& s) { return parse_poly(s); }

inline std::vector<BiPoly> gens(const std::vector<std::string>& lines) {
    return parse_generators(lines);
}

inline SurfaceIdeal ideal(const std::vector<std::string>& lines) {
    return SurfaceIdeal::validate(parse_generators(lines));
}

// The seven reference example ideals, one per numerical type, in order 1,2,3,4,5a,5b,6.
inline const std::vector<std::vector<std::string>>& reference_examples() {
    static const std::vector<std::vector<std::string>> ex = {
        {"s^2*u+s*t*v", "t^2*u", "s^2*v+s*t*u", "t^2*v+s*t*v"},
        {"s^2*u", "t^2*u", "s^2*v+s*t*u", "t^2*v+s*t*v"},
        {"s^2*u+s*t*v", "t^2*u", "s^2*v", "t^2*v+s*t*u"},
        {"s*t*v", "t^2*v", "s^2*v-t^2*u", "s^2*u"},
        {"s^2*u", "s^2*v", "t^2*u", "t^2*v+s*t*v"},
        {"s^2*u", "s^2*v", "t^2*u", "t^2*v+s*t*u"},
        {"s^2*u", "s^2*v", "t^2*u", "t^2*v"},
    };
    return ex;
}

inline const char* reference_type_names[7] = {"1", "2", "3", "4", "5a", "5b", "6"};

// Independent rank oracle: fraction-free Bareiss elimination on a
// denominator-cleared integer copy.
inline int bareiss_rank(const QMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> z(size_t(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j)
            z[size_t(i) * cols + j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
    }
    auto at = [&](int i, int j) -> mpz_class& { return z[size_t(i) * cols + j]; };
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = at(i, j) * at(r, c) - at(i, c) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

// Independent determinant oracle: cofactor expansion.
inline Rat cofactor_det(const QMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rat out = 0;
    for (int i = 0; i < n; ++i) {
        if (is_zero(m.at(i, 0))) continue;
        QMatrix minor(n - 1, n - 1);
        for (int r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) minor.at(mr, c - 1) = m.at(r, c);
            ++mr;
        }
        Rat term = m.at(i, 0) * cofactor_det(minor);
        out += (i % 2 == 0) ? term : -term;
    }
    return out;
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(uint64_t seed) : engine(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine);
    }
    Rat rational(long lo = -4, long hi = 4) {
        long num = integer(lo, hi);
        long den = integer(1, 3);
        return rat(num, den);
    }
    QMatrix matrix(int rows, int cols, long lo = -5, long hi = 5) {
        QMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rat(integer(lo, hi));
        return m;
    }
    BiPoly bipoly(BiDegree d, long lo = -3, long hi = 3) {
        BiPoly p(d);
        for (const auto& mono : monomial_basis(d)) p.add_term(mono, rat(integer(lo, hi)));
        return p;
    }
    BiPoly nonzero_bipoly(BiDegree d) {
        while (true) {
            BiPoly p = bipoly(d);
            if (!p.is_zero_poly()) return p;
        }
    }
    XPoly xpoly(int degree, long lo = -3, long hi = 3) {
        XPoly p;
        for (int e0 = degree; e0 >= 0; --e0)
            for (int e1 = degree - e0; e1 >= 0; --e1)
                for (int e2 = degree - e0 - e1; e2 >= 0; --e2)
                    p.add_term({e0, e1, e2, degree - e0 - e1 - e2}, rat(integer(lo, hi)));
        return p;
    }

    // Random element of GL2(Z) with determinant +-1, entries built from
    // a few elementary shears and swaps.
    std::array<Rat, 4> unimodular2() {
        std::array<long, 4> m{1, 0, 0, 1};
        for (int step = 0; step < 4; ++step) {
            long k = integer(-2, 2);
            if (integer(0, 1)) {
                m[0] += k * m[2];
                m[1] += k * m[3];
            } else {
                m[2] += k * m[0];
                m[3] += k * m[1];
            }
            if (integer(0, 3) == 0) {
                std::swap(m[0], m[2]);
                std::swap(m[1], m[3]);
            }
        }
        return {rat(m[0]), rat(m[1]), rat(m[2]), rat(m[3])};
    }

    // Random element of GL4(Z), determinant +-1.
    QMatrix unimodular4() {
        std::array<std::array<long, 4>, 4> m{};
        for (int i = 0; i < 4; ++i) m[size_t(i)][size_t(i)] = 1;
        for (int step = 0; step < 12; ++step) {
            int i = int(integer(0, 3)), j = int(integer(0, 3));
            if (i == j) continue;
            long k = integer(-2, 2);
            for (int c = 0; c < 4; ++c) m[size_t(i)][size_t(c)] += k * m[size_t(j)][size_t(c)];
        }
        QMatrix out(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out.at(i, j) = rat(m[size_t(i)][size_t(j)]);
        return out;
    }
};

// Apply a GL2 x GL2 x GL4 transform to a generator list.
inline std::vector<BiPoly> transform(const std::vector<BiPoly>& gens,
                                     const std::array<Rat, 4>& st,
                                     const std::array<Rat, 4>& uv, const QMatrix& gl4) {
    std::vector<BiPoly> subst;
    subst.reserve(gens.size());
    for (const auto& g : gens)
        subst.push_back(substitute_uv(substitute_st(g, st[0], st[1], st[2], st[3]),
                                      uv[0], uv[1], uv[2], uv[3]));
    std::vector<BiPoly> out;
    out.reserve(gens.size());
    for (int i = 0; i < gl4.rows(); ++i) {
        BiPoly acc;
        for (int j = 0; j < 4; ++j) {
            const Rat& c = gl4.at(i, j);
            if (!is_zero(c)) acc += subst[size_t(j)] * c;
        }
        out.push_back(acc);
    }
    return out;
}

inline bool betti_equal(const BettiTable& a, const BettiTable& b) { return a == b; }

} // namespace testutil

#endif
