#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace twy {

// mpq_class keeps itself canonical as long as every constructor from a raw
// numerator/denominator pair goes through canonicalize(); rat() does that.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q" and plain decimals such as "-0.25".
Rat parse_rat(std::string_view s);
std::string to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twy
