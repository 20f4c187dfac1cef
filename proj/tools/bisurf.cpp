// bisurf: analyze a 4-dimensional space of bidegree-(2,1) forms on P^1 x P^1.
//
// Exit codes: 0 success, 2 parse error, 3 invalid ideal, 4 basepoints present
// when a basepoint-free-only command was requested.

#include <bisurf/bisurf.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bisurf;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// JSON {"generators": [...]} or plain text, one polynomial per line;
// auto-detected by a leading '{'.
std::vector<BiPoly> load_generators(const std::string& path) {
    const std::string text = read_input(path);
    std::vector<std::string> lines;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto doc = nlohmann::json::parse(text);
        if (!doc.contains("generators") || !doc["generators"].is_array())
            throw parse_error("JSON input must contain a \"generators\" array", 0);
        for (const auto& g : doc["generators"]) lines.push_back(g.get<std::string>());
    } else {
        std::istringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            const size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            if (line[a] == '#') continue;
            lines.push_back(line);
        }
    }
    return parse_generators(lines);
}

Window window_from_flags(const std::string& flag) {
    Window w;
    std::string value = flag;
    if (value.empty()) {
        if (const char* env = std::getenv("BISURF_WINDOW")) value = env;
    }
    if (value.empty()) return w;
    const size_t comma = value.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error("window must be given as a,b");
    w.a = std::stoi(value.substr(0, comma));
    w.b = std::stoi(value.substr(comma + 1));
    return w;
}

void print_betti(const BettiTable& t, std::ostream& os) {
    for (const auto& [h, row] : t) {
        os << "F" << h << ":";
        for (const auto& [d, r] : row) {
            os << " " << shift_key(d);
            if (r > 1) os << "^" << r;
        }
        os << "\n";
    }
}

void print_resolution(const Resolution& res, std::ostream& os) {
    print_betti(betti_table(res), os);
    for (size_t h = 1; h < res.diffs.size(); ++h) {
        const auto& cols = res.diffs[h];
        const auto& rowshifts = res.modules[h - 1].shifts;
        os << "d" << h << " (" << rowshifts.size() << " x " << cols.size() << "):\n";
        for (size_t r = 0; r < rowshifts.size(); ++r) {
            os << "  [";
            for (size_t c = 0; c < cols.size(); ++c) {
                if (c) os << " | ";
                os << to_string(cols[c].coords[r]);
            }
            os << "]\n";
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact analysis of bidegree-(2,1) tensor product surfaces"};
    app.require_subcommand(1);

    std::string input;
    std::string window_flag;
    bool json_out = false;
    bool oracle = false;
    int imax = 5, jmax = 4;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input)
            cmd->add_option("input", input, "input file, or - for stdin")->required();
        cmd->add_option("--window", window_flag, "resolution window a,b (default 6,5)");
        cmd->add_flag("--json", json_out, "emit JSON");
        return cmd;
    };

    auto* cmd_check = add_common(app.add_subcommand("check", "validate and test basepoint freeness"));
    auto* cmd_classify = add_common(app.add_subcommand("classify", "numerical type per the six-type classification"));
    auto* cmd_hilbert = add_common(app.add_subcommand("hilbert", "bigraded Hilbert function table"));
    cmd_hilbert->add_option("--imax", imax, "max s,t-degree (default 5)");
    cmd_hilbert->add_option("--jmax", jmax, "max u,v-degree (default 4)");
    auto* cmd_betti = add_common(app.add_subcommand("betti", "Betti table of the minimal free resolution"));
    auto* cmd_resolve = add_common(app.add_subcommand("resolve", "minimal free resolution with differentials"));
    auto* cmd_impl = add_common(app.add_subcommand("implicitize", "implicit equation of the image surface"));
    cmd_impl->add_flag("--oracle", oracle, "cross-check against the evaluation-kernel oracle");
    auto* cmd_sing = add_common(app.add_subcommand("singular", "verified singular lines of the image"));
    auto* cmd_dual = add_common(app.add_subcommand("dual", "dual-scroll common-factor analysis"));
    auto* cmd_report = add_common(app.add_subcommand("report", "full JSON report"));
    cmd_report->add_flag("--oracle", oracle, "include the kernel-oracle cross-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const Window window = window_from_flags(window_flag);
        auto gens = load_generators(input);

        // resolve/betti/hilbert accept arbitrary bihomogeneous generator
        // lists (fixtures); everything else runs the 4x(2,1) pipeline.
        if (cmd_resolve->parsed() || cmd_betti->parsed()) {
            auto res = minimal_free_resolution(gens, window);
            if (json_out) {
                nlohmann::json out;
                out["betti"] = betti_json(betti_table(res));
                std::cout << out.dump(2) << "\n";
            } else if (cmd_betti->parsed()) {
                print_betti(betti_table(res), std::cout);
            } else {
                print_resolution(res, std::cout);
            }
            return 0;
        }
        bool standard_shape = gens.size() == 4;
        for (const auto& g : gens)
            standard_shape = standard_shape && !g.is_zero_poly() && g.degree() == BiDegree{2, 1};
        if (cmd_hilbert->parsed() && !standard_shape) {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i <= imax; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int j = 0; j <= jmax; ++j)
                    row.push_back(space_dim({i, j}) - ideal_dim_at(gens, {i, j}));
                rows.push_back(row);
            }
            std::cout << rows.dump() << "\n";
            return 0;
        }

        SurfaceIdeal ideal = SurfaceIdeal::validate(gens);
        auto bp = is_basepoint_free(ideal);

        if (cmd_check->parsed()) {
            nlohmann::json out;
            out["valid"] = true;
            out["basepoint_free"] = bp.free;
            if (!bp.free)
                out["witness"] = bp.rank_le1_everywhere ? std::string("rank <= 1 everywhere")
                                                        : to_string(*bp.witness);
            if (json_out) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "valid ideal; basepoint free: " << (bp.free ? "yes" : "no") << "\n";
                if (!bp.free) std::cout << "witness: " << out["witness"].get<std::string>() << "\n";
            }
            return 0;
        }
        if (cmd_hilbert->parsed()) {
            auto t = hilbert_table(ideal, imax, jmax);
            if (json_out) {
                std::cout << hilbert_json(t).dump() << "\n";
            } else {
                for (int i = 0; i <= imax; ++i) {
                    for (int j = 0; j <= jmax; ++j) std::cout << (j ? " " : "") << t.at(i, j);
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (cmd_report->parsed()) {
            ReportOptions opt;
            opt.window = window;
            opt.force_oracle = oracle;
            std::cout << full_report(ideal, opt).dump(2) << "\n";
            return bp.free ? 0 : 4;
        }

        // Everything below needs a basepoint-free input.
        if (!bp.free) {
            std::cerr << "error: basepoints present; run `bisurf check` for the witness\n";
            return 4;
        }

        TypeReport rep = classify(ideal);
        if (cmd_classify->parsed()) {
            if (json_out) {
                nlohmann::json out;
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
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "numerical type " << type_name(rep.type) << " (n01=" << rep.n01
                          << ", n10=" << rep.n10 << ", has02=" << (rep.has02 ? "yes" : "no") << ")\n";
            }
            return 0;
        }
        if (cmd_impl->parsed()) {
            auto impl = implicit_equation(ideal);
            nlohmann::json out;
            out["det"] = to_string(impl.det);
            out["reduced"] = to_string(impl.reduced);
            out["multiplicity"] = impl.multiplicity;
            out["birational"] = impl.birational;
            if (oracle) {
                const int d = impl.birational ? 4 : 2;
                auto ko = kernel_oracle(ideal, d);
                out["oracle"] = {{"degree", d},
                                 {"dimension", ko.size()},
                                 {"agrees", ko.size() == 1 &&
                                                XPoly::proportional(ko.front(), impl.reduced)}};
            }
            if (json_out) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "implicit equation: " << out["reduced"].get<std::string>() << "\n";
                std::cout << "multiplicity " << impl.multiplicity << ", "
                          << (impl.birational ? "birational" : "not birational") << "\n";
                if (oracle)
                    std::cout << "oracle agrees: " << (out["oracle"]["agrees"].get<bool>() ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (cmd_sing->parsed()) {
            auto lines = singular_line_candidates(ideal, rep);
            if (json_out) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& l : lines) out.push_back({to_string(l.forms[0]), to_string(l.forms[1])});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& l : lines)
                    std::cout << "V(" << to_string(l.forms[0]) << ", " << to_string(l.forms[1]) << ")\n";
                if (lines.empty()) std::cout << "no singular lines\n";
            }
            return 0;
        }
        if (cmd_dual->parsed()) {
            auto dual = dual_report(ideal);
            std::cout << dual_json(dual, &rep.type).dump(2) << "\n";
            return 0;
        }
        return 0;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_ideal& e) {
        std::cerr << "invalid ideal: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
