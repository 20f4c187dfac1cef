#ifndef BISURF_RESOLUTION_HPP
#define BISURF_RESOLUTION_HPP

#include <bisurf/bipoly.hpp>
#include <bisurf/ideal.hpp>
#include <bisurf/matrix.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace bisurf {

struct window_exhausted : std::runtime_error {
    explicit window_exhausted(BiDegree d)
        : std::runtime_error("window exhausted: minimal syzygy at boundary bidegree " + d.str()) {}
};

// Search window: bidegrees (a,b) with a <= m, b <= n are scanned.  The
// largest shift across the six resolution types is (5,4) and the bistable
// fixtures stay within (4,4); the
// default keeps one extra row and column of slack.
struct Window {
    int a = 6;
    int b = 5;
};

// Element of a free module with the given row shifts: coordinate k is a
// bihomogeneous form of bidegree degree - shift_k (or zero).
struct SyzygyVector {
    BiDegree degree;
    std::vector<BiPoly> coords;
};

struct FreeModule {
    std::vector<BiDegree> shifts;

    int dim_at(BiDegree d) const {
        int out = 0;
        for (const auto& s : shifts)
            if (s.leq(d)) out += space_dim(d - s);
        return out;
    }
};

// modules[0] holds the generator shifts; diffs[h] maps modules[h] into
// modules[h-1] (for h = 0, into R itself).  Columns of diffs[h] are the
// chosen minimal representatives at level h.
struct Resolution {
    std::vector<FreeModule> modules;
    std::vector<std::vector<SyzygyVector>> diffs;

    int length() const { return int(modules.size()); }
};

// map homological index -> (shift -> rank)
using BettiTable = std::map<int, std::map<BiDegree, int>>;

inline BettiTable betti_table(const Resolution& r) {
    BettiTable t;
    for (int h = 0; h < r.length(); ++h)
        for (const auto& s : r.modules[size_t(h)].shifts) t[h][s] += 1;
    return t;
}

namespace detail {

// Concatenated coefficient vector of a module element at bidegree d with
// respect to row shifts.
inline std::vector<Rat> vectorize(const SyzygyVector& e, const std::vector<BiDegree>& shifts, BiDegree d) {
    std::vector<Rat> out;
    out.reserve(64);
    for (size_t k = 0; k < shifts.size(); ++k) {
        const BiDegree piece = d - shifts[k];
        if (piece.m < 0 || piece.n < 0) continue;
        auto v = e.coords[k].is_zero_poly() ? std::vector<Rat>(size_t(space_dim(piece)))
                                            : e.coords[k].coeff_vector(piece);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

inline SyzygyVector unvectorize(const std::vector<Rat>& v, const std::vector<BiDegree>& shifts, BiDegree d) {
    SyzygyVector e;
    e.degree = d;
    e.coords.resize(shifts.size());
    size_t off = 0;
    for (size_t k = 0; k < shifts.size(); ++k) {
        const BiDegree piece = d - shifts[k];
        if (piece.m < 0 || piece.n < 0) {
            e.coords[k] = BiPoly{};
            continue;
        }
        const size_t len = size_t(space_dim(piece));
        std::vector<Rat> chunk(v.begin() + long(off), v.begin() + long(off + len));
        e.coords[k] = BiPoly::from_coeff_vector(chunk, piece);
        off += len;
    }
    return e;
}

inline SyzygyVector monomial_multiple(const BiMonomial& mono, const SyzygyVector& e) {
    SyzygyVector out;
    out.degree = e.degree + mono.degree();
    out.coords.reserve(e.coords.size());
    const BiPoly m = BiPoly::monomial(mono);
    for (const auto& c : e.coords) out.coords.push_back(c.is_zero_poly() ? c : mul(m, c));
    return out;
}

// Incremental row-reduced span for rank growth tests.
class SpanBuilder {
public:
    // Reduce v by the current rows; if a nonzero remainder survives, absorb
    // it and report growth.
    bool add(std::vector<Rat> v) {
        reduce(v);
        int lead = leading(v);
        if (lead < 0) return false;
        Rat inv = 1 / v[size_t(lead)];
        for (size_t i = size_t(lead); i < v.size(); ++i)
            if (!is_zero(v[i])) v[i] *= inv;
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    bool contains(std::vector<Rat> v) const {
        reduce(v);
        return leading(v) < 0;
    }

    int rank() const { return int(rows_.size()); }

private:
    static int leading(const std::vector<Rat>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!is_zero(v[i])) return int(i);
        return -1;
    }

    void reduce(std::vector<Rat>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = v[size_t(leads_[r])];
            if (is_zero(c)) continue;
            const Rat f = c;
            const auto& row = rows_[r];
            for (size_t i = size_t(leads_[r]); i < v.size(); ++i)
                if (!is_zero(row[i])) v[i] -= f * row[i];
        }
    }

    std::vector<std::vector<Rat>> rows_;
    std::vector<int> leads_;
};

// Bidegrees of the window, graded by total degree, ties broken by larger
// first component.  Any refinement of the componentwise order would do; this
// one is fixed for reproducibility.
inline std::vector<BiDegree> window_order(const Window& w) {
    std::vector<BiDegree> out;
    for (int m = 0; m <= w.a; ++m)
        for (int n = 0; n <= w.b; ++n) out.push_back({m, n});
    std::sort(out.begin(), out.end(), [](BiDegree x, BiDegree y) {
        if (x.m + x.n != y.m + y.n) return x.m + x.n < y.m + y.n;
        return x.m > y.m;
    });
    return out;
}

struct LevelData {
    FreeModule module;                    // shifts of the new representatives
    std::vector<SyzygyVector> columns;    // the representatives themselves
    std::map<BiDegree, int> kernel_dim;   // dim ker of the incoming map per bidegree
    std::map<BiDegree, int> counts;       // new minimal generators per bidegree
};

// One homological step: minimal generators of the kernel of the map
// (columns over rowshifts) -> free module on rowshifts.  image_dim must give
// the rank of that map per bidegree; by exactness of the steps already
// taken this is the kernel dimension of the previous level.
inline LevelData next_level(const std::vector<BiDegree>& rowshifts,
                            const std::vector<BiDegree>& colshifts,
                            const std::vector<SyzygyVector>& columns,
                            const std::map<BiDegree, int>& image_dim,
                            const Window& window) {
    LevelData out;
    FreeModule domain{colshifts};

    std::vector<SyzygyVector> reps;
    for (const BiDegree& d : window_order(window)) {
        const int dom = domain.dim_at(d);
        if (dom == 0) continue;
        auto it = image_dim.find(d);
        const int ker = dom - (it == image_dim.end() ? 0 : it->second);
        out.kernel_dim[d] = ker;
        if (ker == 0) continue;

        // Span of all multiples of representatives found at smaller bidegrees.
        SpanBuilder span;
        for (const auto& rep : reps) {
            const BiDegree shift = d - rep.degree;
            if (shift.m < 0 || shift.n < 0 || (shift.m == 0 && shift.n == 0)) continue;
            for (const auto& mono : monomial_basis(shift))
                span.add(vectorize(monomial_multiple(mono, rep), colshifts, d));
        }
        if (span.rank() > ker) throw std::logic_error("resolution: multiples exceed kernel");
        if (span.rank() == ker) continue;

        // New minimal generators exist at d: compute the kernel explicitly.
        QMatrix map(FreeModule{rowshifts}.dim_at(d), dom);
        {
            int off = 0;
            for (size_t c = 0; c < columns.size(); ++c) {
                const BiDegree piece = d - colshifts[c];
                if (piece.m < 0 || piece.n < 0) continue;
                for (const auto& mono : monomial_basis(piece)) {
                    auto col = vectorize(monomial_multiple(mono, columns[c]), rowshifts, d);
                    for (size_t i = 0; i < col.size(); ++i)
                        if (!is_zero(col[i])) map.at(int(i), off) = col[i];
                    ++off;
                }
            }
        }
        auto kb = kernel_basis(map);
        if (int(kb.size()) != ker) throw std::logic_error("resolution: kernel dimension bookkeeping failed");

        int added = 0;
        for (auto& v : kb) {
            if (!span.add(v)) continue;
            reps.push_back(unvectorize(v, colshifts, d));
            ++added;
        }
        if (added > 0) {
            if (d.m == window.a || d.n == window.b) throw window_exhausted(d);
            out.counts[d] = added;
        }
    }

    for (const auto& rep : reps) out.module.shifts.push_back(rep.degree);
    out.columns = std::move(reps);
    return out;
}

} // namespace detail

// Basis of the syzygies of (poly, shift) pairs in one bidegree d: kernel of
// the map (+)_k R_{d - shift_k} -> R_d, (h_k) -> sum h_k g_k.
inline std::vector<SyzygyVector> syzygies_in_bidegree(
    const std::vector<std::pair<BiPoly, BiDegree>>& gens, BiDegree d) {
    std::vector<BiDegree> shifts;
    shifts.reserve(gens.size());
    for (const auto& [g, s] : gens) shifts.push_back(s);

    int dom = 0;
    for (const auto& s : shifts)
        if (s.leq(d)) dom += space_dim(d - s);
    if (dom == 0) return {};

    QMatrix map(space_dim(d), dom);
    int off = 0;
    for (const auto& [g, s] : gens) {
        if (!s.leq(d)) continue;
        QMatrix blk = multiplication_matrix(g, d - s);
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j)
                if (!is_zero(blk.at(i, j))) map.at(i, off + j) = blk.at(i, j);
        off += blk.cols();
    }

    std::vector<SyzygyVector> out;
    for (const auto& v : kernel_basis(map)) out.push_back(detail::unvectorize(v, shifts, d));
    return out;
}

inline std::vector<std::pair<BiPoly, BiDegree>> with_shifts(const std::vector<BiPoly>& gens) {
    std::vector<std::pair<BiPoly, BiDegree>> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.emplace_back(g, g.degree());
    return out;
}

struct MinimalSyzygies {
    std::map<BiDegree, int> counts;       // absolute bidegree -> count
    std::vector<SyzygyVector> representatives;
};

// Minimal first syzygies of a generator list over the window, with the
// deterministic kernel-completion representatives.
inline MinimalSyzygies minimal_first_syzygies(const std::vector<BiPoly>& gens, Window window = {}) {
    std::vector<BiDegree> colshifts;
    std::vector<SyzygyVector> columns;
    for (const auto& g : gens) {
        colshifts.push_back(g.degree());
        columns.push_back(SyzygyVector{g.degree(), {g}});
    }
    std::map<BiDegree, int> image_dim;
    for (const BiDegree& d : detail::window_order(window)) {
        if (FreeModule{colshifts}.dim_at(d) == 0) continue;
        image_dim[d] = ideal_dim_at(gens, d);
    }
    auto level = detail::next_level({BiDegree{0, 0}}, colshifts, columns, image_dim, window);
    return MinimalSyzygies{level.counts, level.columns};
}

// Minimal bigraded free resolution of the module generated by gens,
// computed bidegree by bidegree.  Levels proceed until the kernel vanishes
// on the window; a minimal syzygy on the window boundary aborts with
// window_exhausted since completeness can no longer be certified.
inline Resolution minimal_free_resolution(const std::vector<BiPoly>& gens, Window window = {}) {
    Resolution res;

    FreeModule f0;
    std::vector<SyzygyVector> cols0;
    for (const auto& g : gens) {
        if (g.is_zero_poly()) throw std::invalid_argument("resolution: zero generator");
        f0.shifts.push_back(g.degree());
        cols0.push_back(SyzygyVector{g.degree(), {g}});
    }
    res.modules.push_back(f0);
    res.diffs.push_back(cols0);

    std::map<BiDegree, int> image_dim;
    for (const BiDegree& d : detail::window_order(window)) {
        if (f0.dim_at(d) == 0) continue;
        image_dim[d] = ideal_dim_at(gens, d);
    }

    std::vector<BiDegree> rowshifts{BiDegree{0, 0}};
    std::vector<BiDegree> colshifts = f0.shifts;
    std::vector<SyzygyVector> columns = cols0;

    for (int h = 1; h <= 5; ++h) {
        auto level = detail::next_level(rowshifts, colshifts, columns, image_dim, window);
        if (level.columns.empty()) break;
        if (h == 5) throw std::logic_error("resolution: length exceeds 4");
        res.modules.push_back(level.module);
        res.diffs.push_back(level.columns);
        rowshifts = colshifts;
        colshifts = level.module.shifts;
        columns = level.columns;
        image_dim = level.kernel_dim;
    }
    return res;
}

inline Resolution minimal_free_resolution(const SurfaceIdeal& ideal, Window window = {}) {
    return minimal_free_resolution(ideal.generators(), window);
}

// Exact composition check: consecutive differentials multiply to zero.
inline bool differentials_compose_to_zero(const Resolution& r) {
    for (size_t h = 1; h < r.diffs.size(); ++h) {
        const auto& prev = r.diffs[h - 1];
        for (const auto& col : r.diffs[h]) {
            const size_t nrows = prev.empty() ? 0 : prev.front().coords.size();
            std::vector<BiPoly> acc(nrows);
            for (size_t c = 0; c < prev.size(); ++c) {
                if (col.coords[c].is_zero_poly()) continue;
                for (size_t rrow = 0; rrow < nrows; ++rrow)
                    if (!prev[c].coords[rrow].is_zero_poly())
                        acc[rrow] += mul(col.coords[c], prev[c].coords[rrow]);
            }
            for (const auto& entry : acc)
                if (!entry.is_zero_poly()) return false;
        }
    }
    return true;
}

// Euler characteristic consistency on every window bidegree:
// dim R_d - sum_h (-1)^h dim (F_h)_d = HF(d, R/I).
inline bool euler_characteristic_ok(const Resolution& r, const std::vector<BiPoly>& gens,
                                    Window window = {}) {
    for (const BiDegree& d : detail::window_order(window)) {
        long alt = 0;
        int sign = 1;
        for (const auto& mod : r.modules) {
            alt += sign * mod.dim_at(d);
            sign = -sign;
        }
        const long hf = space_dim(d) - ideal_dim_at(gens, d);
        if (space_dim(d) - alt != hf) return false;
    }
    return true;
}

} // namespace bisurf

#endif
