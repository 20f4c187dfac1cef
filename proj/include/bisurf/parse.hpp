#ifndef BISURF_PARSE_HPP
#define BISURF_PARSE_HPP

#include <bisurf/bipoly.hpp>
#include <bisurf/xpoly.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisurf {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [coeff] factor*        (at least one of coeff, factor)
//   factor := var ['^' exp]          var in {s,t,u,v}
//   coeff  := integer ['/' integer]
// '*' between factors is optional, whitespace insignificant.
class PolyParser {
public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    BiPoly parse() {
        BiPoly out;
        std::vector<std::pair<BiMonomial, Rat>> terms;
        skip_ws();
        bool first = true;
        while (true) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = (peek() == '-') ? -1 : 1;
                ++pos_;
            } else if (!first) {
                if (pos_ >= text_.size()) break;
                fail("expected '+' or '-'");
            }
            skip_ws();
            if (pos_ >= text_.size()) fail("expected term");
            terms.push_back(parse_term(sign));
            first = false;
            skip_ws();
            if (pos_ >= text_.size()) break;
        }
        if (terms.empty()) fail("empty polynomial");

        const BiDegree d = terms.front().first.degree();
        for (const auto& [mono, c] : terms) {
            if (mono.degree() != d)
                throw parse_error("not bihomogeneous: monomial of bidegree " +
                                      mono.degree().str() + " next to bidegree " + d.str(),
                                  pos_);
            out.add_term(mono, c);
        }
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    std::pair<BiMonomial, Rat> parse_term(int sign) {
        Rat coeff = rat(sign);
        skip_ws();
        bool has_any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = parse_integer();
            mpz_class den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                den = parse_integer();
                if (den == 0) fail("zero denominator");
            }
            coeff *= rat(num, den);
            has_any = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        BiMonomial mono{0, 0, 0, 0};
        while (true) {
            skip_ws();
            const char c = peek();
            int* slot = nullptr;
            switch (c) {
                case 's': slot = &mono.es; break;
                case 't': slot = &mono.et; break;
                case 'u': slot = &mono.eu; break;
                case 'v': slot = &mono.ev; break;
                default: slot = nullptr;
            }
            if (!slot) break;
            ++pos_;
            int exp = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                mpz_class e = parse_integer();
                if (e < 0 || e > 64) fail("exponent out of range");
                exp = int(e.get_si());
            }
            *slot += exp;
            has_any = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size()) fail("dangling '*'");
            }
        }
        if (!has_any) fail("expected coefficient or variable");
        return {mono, coeff};
    }

    const std::string& text_;
    size_t pos_ = 0;
};

inline void append_power(std::string& out, bool& first, const char* var, int exp) {
    if (exp == 0) return;
    if (!first) out += "*";
    out += var;
    if (exp >= 2) out += "^" + std::to_string(exp);
    first = false;
}

} // namespace detail

inline BiPoly parse_poly(const std::string& text) { return detail::PolyParser(text).parse(); }

// Canonical serialization: monomials in canonical order, explicit '*' and
// '^', rational coefficients as a/b.  parse_poly inverts this exactly.
inline std::string to_string(const BiPoly& p, bool dual_variables = false) {
    if (p.is_zero_poly()) return "0";
    std::string out;
    bool first_term = true;
    for (const auto& [mono, c] : p.coeffs()) {
        const bool neg = sgn(c) < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first_term) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool has_vars = mono.es + mono.et + mono.eu + mono.ev > 0;
        std::string term;
        bool first_factor = true;
        if (mag != 1 || !has_vars) {
            term += mag.get_str();
            first_factor = false;
        }
        detail::append_power(term, first_factor, dual_variables ? "S" : "s", mono.es);
        detail::append_power(term, first_factor, dual_variables ? "T" : "t", mono.et);
        detail::append_power(term, first_factor, dual_variables ? "U" : "u", mono.eu);
        detail::append_power(term, first_factor, dual_variables ? "V" : "v", mono.ev);
        out += term;
        first_term = false;
    }
    return out;
}

inline std::string to_string(const XPoly& p) {
    if (p.is_zero_poly()) return "0";
    static const char* names[4] = {"x0", "x1", "x2", "x3"};
    std::string out;
    bool first_term = true;
    for (const auto& [mono, c] : p.coeffs()) {
        const bool neg = sgn(c) < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first_term) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool has_vars = mono[0] + mono[1] + mono[2] + mono[3] > 0;
        std::string term;
        bool first_factor = true;
        if (mag != 1 || !has_vars) {
            term += mag.get_str();
            first_factor = false;
        }
        for (int i = 0; i < 4; ++i) detail::append_power(term, first_factor, names[i], mono[size_t(i)]);
        out += term;
        first_term = false;
    }
    return out;
}

inline std::vector<BiPoly> parse_generators(const std::vector<std::string>& lines) {
    std::vector<BiPoly> out;
    out.reserve(lines.size());
    for (const auto& line : lines) out.push_back(parse_poly(line));
    return out;
}

} // namespace bisurf

#endif
