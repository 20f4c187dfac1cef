#ifndef BISURF_REPORT_HPP
#define BISURF_REPORT_HPP

#include <bisurf/classify.hpp>
#include <bisurf/dualscroll.hpp>
#include <bisurf/ideal.hpp>
#include <bisurf/implicitize.hpp>
#include <bisurf/parse.hpp>
#include <bisurf/resolution.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace bisurf {

inline std::string shift_key(BiDegree d) {
    return "(" + std::to_string(-d.m) + "," + std::to_string(-d.n) + ")";
}

inline std::string point_str(const std::array<Rat, 2>& p) {
    return "(" + p[0].get_str() + ":" + p[1].get_str() + ")";
}

// Linear form over the dual coordinates X0..X5 (canonical monomial order).
inline std::string to_string_x6(const std::vector<Rat>& coords) {
    std::string out;
    bool first = true;
    for (size_t k = 0; k < coords.size(); ++k) {
        if (is_zero(coords[k])) continue;
        const bool neg = sgn(coords[k]) < 0;
        Rat mag = neg ? Rat(-coords[k]) : coords[k];
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "X" + std::to_string(k);
        first = false;
    }
    return first ? "0" : out;
}

inline nlohmann::json hilbert_json(const HilbertTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i <= t.imax; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j <= t.jmax; ++j) row.push_back(t.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json betti_json(const BettiTable& t) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [h, row] : t) {
        nlohmann::json level = nlohmann::json::object();
        for (const auto& [d, r] : row) level[shift_key(d)] = r;
        out[std::to_string(h)] = level;
    }
    return out;
}

inline nlohmann::json primes_json(const std::vector<PrimeDescriptor>& primes) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : primes) {
        nlohmann::json e = nlohmann::json::object();
        switch (p.kind) {
            case PrimeDescriptor::Kind::MaximalM: e["kind"] = "maximal-m"; break;
            case PrimeDescriptor::Kind::StPlusLinear: e["kind"] = "st-plus-linear"; break;
            case PrimeDescriptor::Kind::StPlusLinearConjugatePair:
                e["kind"] = "st-plus-linear-conjugate-pair";
                break;
            case PrimeDescriptor::Kind::ExistenceOnly: e["kind"] = "existence-only"; break;
        }
        if (p.linear_form) e["linear_form"] = to_string(*p.linear_form);
        if (p.pair_discriminant) e["discriminant"] = p.pair_discriminant->get_str();
        out.push_back(e);
    }
    return out;
}

inline nlohmann::json dual_json(const DualReport& dual, const NumericalType* actual) {
    nlohmann::json out = nlohmann::json::object();
    out["basis_order"] = {"s^2*u", "s^2*v", "s*t*u", "s*t*v", "t^2*u", "t^2*v"};
    out["uperp"] = {to_string_x6(dual.uperp[0]), to_string_x6(dual.uperp[1])};
    out["pullbacks"] = {to_string(dual.pullbacks[0], true), to_string(dual.pullbacks[1], true)};
    if (dual.factor) {
        out["g"] = to_string(dual.factor->g, true);
        out["g_degree"] = dual.factor->degree.str();
        out["residuals"] = {to_string(dual.factor->h1, true), to_string(dual.factor->h2, true)};
    } else {
        out["g"] = nullptr;
        out["g_degree"] = nullptr;
    }
    if (dual.residual) {
        switch (dual.residual->kind) {
            case ResidualKind::DistinctRoots: out["residual"] = "distinct-roots"; break;
            case ResidualKind::DoubleRoot: out["residual"] = "double-root"; break;
            case ResidualKind::Infinite: out["residual"] = "infinite"; break;
        }
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& pt : dual.residual->rational_roots)
            roots.push_back(point_str(pt.st) + "x" + point_str(pt.uv));
        out["residual_roots"] = roots;
    } else {
        out["residual"] = nullptr;
    }
    if (dual.predicts_not_basepoint_free) {
        out["predicted_type"] = "not basepoint free";
    } else {
        nlohmann::json types = nlohmann::json::array();
        for (auto t : dual.predicted_types) types.push_back(type_name(t));
        out["predicted_type"] = types;
    }
    if (actual) out["consistent"] = cross_check(dual, *actual);
    return out;
}

struct ReportOptions {
    Window window{};
    bool force_oracle = false;
    int imax = 5;
    int jmax = 4;
};

// The full analysis pipeline as one JSON document with stable sorted keys.
// When basepoints are present only validity, the witness, the Hilbert table
// and the Betti data appear; callers map that to exit code 4.
inline nlohmann::json full_report(const SurfaceIdeal& ideal, const ReportOptions& opt = {}) {
    nlohmann::json out;
    out["valid"] = true;

    auto bp = is_basepoint_free(ideal);
    out["basepoint_free"] = bp.free;
    if (!bp.free) {
        out["witness"] = bp.rank_le1_everywhere ? std::string("rank <= 1 everywhere")
                                                : to_string(*bp.witness);
    }

    out["hilbert"] = hilbert_json(hilbert_table(ideal, opt.imax, opt.jmax));
    try {
        out["betti"] = betti_json(betti_table(minimal_free_resolution(ideal, opt.window)));
    } catch (const window_exhausted& e) {
        out["betti"] = nlohmann::json{{"error", e.what()}};
    }
    if (!bp.free) return out;

    TypeReport rep = classify(ideal);
    out["type"] = type_name(rep.type);
    out["n01"] = rep.n01;
    out["n10"] = rep.n10;
    out["has02"] = rep.has02;
    if (rep.p) out["p"] = to_string(*rep.p);
    if (rep.q) {
        out["q"] = to_string(*rep.q);
        out["q_discriminant"] = rep.q_discriminant->get_str();
    }
    out["embedded_primes"] = primes_json(rep.embedded_primes);

    ImplicitResult impl = implicit_equation(ideal);
    nlohmann::json ij;
    ij["det"] = to_string(impl.det);
    ij["reduced"] = to_string(impl.reduced);
    ij["multiplicity"] = impl.multiplicity;
    ij["birational"] = impl.birational;
    if (opt.force_oracle) {
        const int d = impl.birational ? 4 : 2;
        auto oracle = kernel_oracle(ideal, d);
        ij["oracle"] = {{"degree", d},
                        {"dimension", oracle.size()},
                        {"agrees", oracle.size() == 1 &&
                                       XPoly::proportional(oracle.front(), impl.reduced)}};
    }
    out["implicit"] = ij;

    nlohmann::json lines = nlohmann::json::array();
    for (const auto& line : singular_line_candidates(ideal, rep))
        lines.push_back({to_string(line.forms[0]), to_string(line.forms[1])});
    out["singular_lines"] = lines;

    out["dual"] = dual_json(dual_report(ideal), &rep.type);
    return out;
}

} // namespace bisurf

#endif
