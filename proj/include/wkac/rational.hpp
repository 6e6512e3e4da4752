#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wkac {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "3", "-1/8", "k"-free exact rational strings.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not an exact rational: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Floor of an exact rational.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

/// Reduction into the window [0, 1).
inline Rat mod1(const Rat& r) {
    Rat f = r - Rat(rat_floor(r));
    f.canonicalize();
    return f;
}

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return v.get_si();
}

/// Exact quotient num/den as a long, only when r is an integer that fits.
inline std::optional<long> as_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p()) return std::nullopt;
    return r.get_num().get_si();
}

}  // namespace wkac
