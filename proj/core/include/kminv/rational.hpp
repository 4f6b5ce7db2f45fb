#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kminv {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize two-argument construction; every explicit
// numerator/denominator pair must pass through here.
inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "p" or "p/q"
inline std::string to_string(const Rat& r) { return r.get_str(); }

// Checked narrowing for serialization.
inline int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer too large for 64-bit serialization");
  return static_cast<int64_t>(z.get_si());
}

}  // namespace kminv
