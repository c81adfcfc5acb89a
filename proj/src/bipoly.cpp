#include "twy/bipoly.hpp"

#include <sstream>

namespace twy {

BiPoly::BiPoly(const Rat& c) {
  if (sgn(c) != 0) {
    nu_ = nv_ = 1;
    c_.push_back(c);
  }
}

void BiPoly::grow(int nu, int nv) {
  if (nu <= nu_ && nv <= nv_) return;
  nu = std::max(nu, nu_);
  nv = std::max(nv, nv_);
  std::vector<Rat> d(static_cast<size_t>(nu) * nv);
  for (int i = 0; i < nu_; ++i)
    for (int j = 0; j < nv_; ++j) d[static_cast<size_t>(i) * nv + j] = at(i, j);
  nu_ = nu;
  nv_ = nv;
  c_ = std::move(d);
}

void BiPoly::trim() {
  int mu = 0, mv = 0;
  for (int i = 0; i < nu_; ++i)
    for (int j = 0; j < nv_; ++j)
      if (sgn(at(i, j)) != 0) {
        mu = std::max(mu, i + 1);
        mv = std::max(mv, j + 1);
      }
  if (mu == nu_ && mv == nv_) return;
  std::vector<Rat> d(static_cast<size_t>(mu) * mv);
  for (int i = 0; i < mu; ++i)
    for (int j = 0; j < mv; ++j) d[static_cast<size_t>(i) * mv + j] = at(i, j);
  nu_ = mu;
  nv_ = mv;
  c_ = std::move(d);
}

Rat BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= nu_ || j >= nv_) return 0;
  return at(i, j);
}

BiPoly BiPoly::from_poly(const Poly& p, const Rat& alpha, const Rat& beta, const Rat& gamma) {
  BiPoly lin;
  if (sgn(gamma) != 0 || (sgn(alpha) == 0 && sgn(beta) == 0)) lin = BiPoly(gamma);
  if (sgn(alpha) != 0) {
    BiPoly t(2, 1);
    t.at(1, 0) = alpha;
    lin += t;
  }
  if (sgn(beta) != 0) {
    BiPoly t(1, 2);
    t.at(0, 1) = beta;
    lin += t;
  }
  BiPoly r;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r = r * lin;
    r += BiPoly(*it);
  }
  return r;
}

Poly BiPoly::eval_u(const Rat& x) const {
  std::vector<Rat> v(nv_);
  Rat xp = 1;
  for (int i = 0; i < nu_; ++i) {
    for (int j = 0; j < nv_; ++j) v[j] += at(i, j) * xp;
    xp *= x;
  }
  return Poly(std::move(v));
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const { return eval_u(x).eval(y); }

Rat BiPoly::content() const {
  Int g = 0, l = 1;
  for (const auto& x : c_) {
    if (sgn(x) == 0) continue;
    g = gcd(g, Int(x.get_num()));
    l = lcm(l, Int(x.get_den()));
  }
  if (g == 0) return 0;
  Rat r(g, l);
  r.canonicalize();
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.is_zero()) return *this;
  grow(o.nu_, o.nv_);
  for (int i = 0; i < o.nu_; ++i)
    for (int j = 0; j < o.nv_; ++j) at(i, j) += o.at(i, j);
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.is_zero()) return *this;
  grow(o.nu_, o.nv_);
  for (int i = 0; i < o.nu_; ++i)
    for (int j = 0; j < o.nv_; ++j) at(i, j) -= o.at(i, j);
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) return *this = BiPoly();
  for (auto& x : c_) x *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BiPoly r(a.nu_ + b.nu_ - 1, a.nv_ + b.nv_ - 1);
  for (int i = 0; i < a.nu_; ++i)
    for (int j = 0; j < a.nv_; ++j) {
      const Rat& x = a.at(i, j);
      if (sgn(x) == 0) continue;
      for (int k = 0; k < b.nu_; ++k)
        for (int l = 0; l < b.nv_; ++l) {
          const Rat& y = b.at(k, l);
          if (sgn(y) != 0) r.at(i + k, j + l) += x * y;
        }
    }
  r.trim();
  return r;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = nu_ - 1; i >= 0; --i)
    for (int j = nv_ - 1; j >= 0; --j) {
      const Rat& c = at(i, j);
      if (sgn(c) == 0) continue;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      Rat a = abs(c);
      bool mono = i > 0 || j > 0;
      if (a != 1 || !mono) os << a.get_str() << (mono ? "*" : "");
      if (i > 0) os << "u" << (i > 1 ? "^" + std::to_string(i) : "");
      if (i > 0 && j > 0) os << "*";
      if (j > 0) os << "v" << (j > 1 ? "^" + std::to_string(j) : "");
    }
  return os.str();
}

BiRatFunc::BiRatFunc(const BiPoly& num, const BiPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw MathError("bivariate fraction with zero denominator");
  normalize();
}

void BiRatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = BiPoly(1);
    return;
  }
  Rat c = den_.content();
  if (c != 1) {
    Rat inv = 1 / c;
    den_ *= inv;
    num_ *= inv;
  }
}

BiRatFunc& BiRatFunc::operator+=(const BiRatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

BiRatFunc& BiRatFunc::operator-=(const BiRatFunc& o) {
  BiRatFunc neg(-o.num_, o.den_);
  return *this += neg;
}

BiRatFunc& BiRatFunc::operator*=(const BiRatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

std::string BiRatFunc::str() const {
  if (den_ == BiPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace twy
