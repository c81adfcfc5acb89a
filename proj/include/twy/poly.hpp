#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "twy/rat.hpp"

namespace twy {

// Dense univariate polynomial in u, coefficients in ascending degree.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  static Poly u() { return Poly({Rat(0), Rat(1)}); }
  // a*u + b
  static Poly linear(const Rat& a, const Rat& b) { return Poly({b, a}); }
  static Poly monomial(int k, const Rat& c = 1);

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_const() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  Rat lead() const;

  Rat eval(const Rat& x) const;
  Poly monic() const;
  // p(a*u + b)
  Poly compose_affine(const Rat& a, const Rat& b) const;
  Poly compose(const Poly& q) const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division; throws on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0

  // Rational roots with multiplicity (rational root test on the primitive
  // integer polynomial), plus the cofactor without rational roots.
  std::vector<Rat> rational_roots(Poly* rest = nullptr) const;

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

Poly pow(const Poly& p, int k);
inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace twy
