#pragma once

#include <gmpxx.h>
#include <string>

namespace eulink {

// All Euler-characteristic and weight arithmetic is exact.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Mathematical residue in [0, m).
inline Integer mod_residue(const Integer& v, const Integer& m) {
    Integer r = v % m;
    if (r < 0) r += m;
    return r;
}

inline bool divides(const Integer& d, const Integer& v) {
    if (d == 0) return v == 0;
    return v % d == 0;
}

}  // namespace eulink
