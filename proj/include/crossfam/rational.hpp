#ifndef CROSSFAM_RATIONAL_HPP
#define CROSSFAM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crossfam {

// Exact rational arithmetic for all coordinates and predicates. Backed by
// GMP's mpq_class, which keeps values canonical (reduced, denominator > 0).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// Canonical "p/q" form; integers print without the "/1".
std::string rat_to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

double rat_to_double(const Rat& r);

}  // namespace crossfam

#endif
