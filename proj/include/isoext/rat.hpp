#pragma once

// Exact rational scalars. Backed by GMP's mpq_class, which keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1, den > 0,
// zero is 0/1. Arithmetic on canonical operands stays canonical.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoext {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p". Rejects zero denominators and malformed input.
inline Rat rat_parse(std::string_view s) {
    Rat q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + std::string(s) + "'");
    if (q.get_den() == 0)
        throw std::domain_error("rat_parse: zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int sign(const Rat& q) { return sgn(q); }

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace isoext
