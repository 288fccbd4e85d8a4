#ifndef ADEG_RATIONAL_HPP
#define ADEG_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace adeg {

// All arithmetic in the workbench is exact. Rat is a GMP rational kept in
// canonical form (reduced, positive denominator); Int is an arbitrary
// precision integer.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p" or "p/q". Rejects q = 0 and garbage.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical "p/q" form, denominator always present ("3" prints as "3/1").
inline std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// mpq_class(num, den) does not canonicalize; use this for non-literal pairs.
inline Rat rat_frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline int rat_sgn(const Rat& r) { return sgn(r); }

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out = 1;
    Rat b = base;
    unsigned long k = e;
    while (k > 0) {
        if (k & 1) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace adeg

#endif
