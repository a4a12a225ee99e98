#ifndef FRPOISSON_RATIONAL_HPP
#define FRPOISSON_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace frpoisson {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// No floating point appears anywhere in the engine.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& text);

// Canonical form "p" or "p/q" with q > 0.
std::string rat_to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace frpoisson

#endif
