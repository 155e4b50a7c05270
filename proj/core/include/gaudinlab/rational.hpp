#ifndef GAUDINLAB_RATIONAL_HPP
#define GAUDINLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gaudinlab {

// The only scalar on the certification path: an arbitrary-precision rational
// kept in lowest terms with positive denominator (GMP canonical form).
using Rat = mpq_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p" (lowest terms enforced on the way in).
Rat parse_rat(const std::string& s);

/// Canonical serialization: "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace gaudinlab

#endif
