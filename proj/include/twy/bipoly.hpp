#pragma once

#include <string>
#include <vector>

#include "twy/poly.hpp"

namespace twy {

// Polynomial in (u, v), dense on the grid deg_u x deg_v.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rat& c);  // NOLINT
  BiPoly(long c) : BiPoly(Rat(c)) {}  // NOLINT

  // p(alpha*u + beta*v + gamma)
  static BiPoly from_poly(const Poly& p, const Rat& alpha, const Rat& beta, const Rat& gamma = 0);
  static BiPoly in_u(const Poly& p) { return from_poly(p, 1, 0); }
  static BiPoly in_v(const Poly& p) { return from_poly(p, 0, 1); }

  bool is_zero() const { return c_.empty(); }
  int deg_u() const { return nu_ - 1; }
  int deg_v() const { return nv_ - 1; }
  Rat coeff(int i, int j) const;
  Poly eval_u(const Rat& x) const;  // result in v
  Rat eval(const Rat& x, const Rat& y) const;
  // rational content normalization helper: gcd of numerators / lcm of dens
  Rat content() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.nu_ == b.nu_ && a.nv_ == b.nv_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  std::string str() const;

 private:
  BiPoly(int nu, int nv) : nu_(nu), nv_(nv), c_(static_cast<size_t>(nu) * nv) {}
  Rat& at(int i, int j) { return c_[static_cast<size_t>(i) * nv_ + j]; }
  const Rat& at(int i, int j) const { return c_[static_cast<size_t>(i) * nv_ + j]; }
  void trim();
  void grow(int nu, int nv);
  int nu_ = 0, nv_ = 0;
  std::vector<Rat> c_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

// num/den over (u, v), with the rational content moved into num.
class BiRatFunc {
 public:
  BiRatFunc() : den_(1) {}
  BiRatFunc(const BiPoly& num, const BiPoly& den = BiPoly(1));  // NOLINT
  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  BiRatFunc& operator+=(const BiRatFunc& o);
  BiRatFunc& operator-=(const BiRatFunc& o);
  BiRatFunc& operator*=(const BiRatFunc& o);
  friend BiRatFunc operator+(BiRatFunc a, const BiRatFunc& b) { return a += b; }
  friend BiRatFunc operator-(BiRatFunc a, const BiRatFunc& b) { return a -= b; }
  friend BiRatFunc operator*(BiRatFunc a, const BiRatFunc& b) { return a *= b; }
  std::string str() const;

 private:
  void normalize();
  BiPoly num_, den_;
};

}  // namespace twy
