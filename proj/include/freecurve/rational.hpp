#ifndef FREECURVE_RATIONAL_HPP
#define FREECURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace freecurve {

// All arithmetic in the project is exact. mpq_class keeps values in lowest
// terms with positive denominator after canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q". Whitespace is not accepted here; callers strip it.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace freecurve

#endif
