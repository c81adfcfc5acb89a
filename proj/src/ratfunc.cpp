#include "twy/ratfunc.hpp"

#include <climits>

namespace twy {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.deg() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  Rat l = den_.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
}

Rat RatFunc::const_value() const {
  if (!is_const()) throw MathError("rational function is not constant: " + str());
  return num_.coeff(0);
}

int RatFunc::degree() const {
  if (num_.is_zero()) return INT_MIN / 2;
  return num_.deg() - den_.deg();
}

Rat RatFunc::at_infinity() const {
  if (num_.is_zero()) return 0;
  int d = degree();
  if (d > 0) throw MathError("rational function has a pole at infinity: " + str());
  if (d < 0) return 0;
  return num_.lead() / den_.lead();
}

Rat RatFunc::eval(const Rat& x) const {
  Rat dv = den_.eval(x);
  if (sgn(dv) == 0) throw MathError("evaluation at a pole: " + x.get_str());
  return num_.eval(x) / dv;
}

RatFunc RatFunc::substitute(const Rat& a, const Rat& b) const {
  if (sgn(a) == 0) throw MathError("degenerate substitution u -> 0*u + b");
  // Composition with an invertible affine map keeps num and den coprime.
  RatFunc r(num_.compose_affine(a, b), den_.compose_affine(a, b), Raw{});
  Rat l = r.den_.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = RatFunc();
  if (den_.deg() == 0 && o.den_.deg() == 0) {
    num_ *= o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw MathError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::str(const std::string& var) const {
  if (den_.deg() == 0) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFunc pow(const RatFunc& f, int k) {
  if (k < 0) return pow(f.inverse(), -k);
  RatFunc r(1), b = f;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

}  // namespace twy
