#pragma once

#include <string>

#include "twy/poly.hpp"

namespace twy {

// Reduced fraction num/den with monic den.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rat(c)) {}          // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc u() { return RatFunc(Poly::u()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.deg() == 0; }
  bool is_const() const { return num_.deg() <= 0 && den_.deg() == 0; }
  Rat const_value() const;  // throws unless is_const()

  // deg(num) - deg(den); very negative for zero
  int degree() const;
  // limit u -> infinity; throws if deg(num) > deg(den)
  Rat at_infinity() const;
  Rat eval(const Rat& x) const;  // throws at poles

  // f(a*u + b); a = 0 is rejected
  RatFunc substitute(const Rat& a, const Rat& b) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Raw{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  std::string str(const std::string& var = "u") const;

 private:
  struct Raw {};
  RatFunc(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_, den_;
};

RatFunc pow(const RatFunc& f, int k);

}  // namespace twy
