#ifndef BISURF_RATIONAL_HPP
#define BISURF_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace bisurf {

// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
// with positive denominator; construction from raw numerator/denominator
// does not, so all such construction goes through rat().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const mpz_class& num, const mpz_class& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline std::string to_string(const Rat& x) { return x.get_str(); }

// Exact square root of a non-negative rational, if it is a perfect square.
inline bool rat_sqrt(const Rat& x, Rat& root) {
    if (sgn(x) < 0) return false;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = rat(rn, rd);
    return true;
}

} // namespace bisurf

#endif
