#include "twy/poly.hpp"

#include <algorithm>
#include <sstream>

namespace twy {

Rat parse_rat(std::string_view s) {
  std::string str(s);
  str.erase(std::remove_if(str.begin(), str.end(), [](char ch) { return ch == ' ' || ch == '+'; }),
            str.end());
  if (str.empty()) throw MathError("empty rational literal");
  auto dot = str.find('.');
  if (dot != std::string::npos) {
    if (str.find('/') != std::string::npos) throw MathError("bad rational literal: " + str);
    bool neg = str[0] == '-';
    std::string digits = str.substr(neg ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot), frac = digits.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if ((whole + frac).find_first_not_of("0123456789") != std::string::npos)
      throw MathError("bad rational literal: " + str);
    Int num(whole + frac, 10), den(1);
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }
  Rat r;
  if (r.set_str(str, 10) != 0) throw MathError("bad rational literal: " + str);
  if (r.get_den() == 0) throw MathError("zero denominator: " + str);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Poly::Poly(const Rat& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int k, const Rat& c) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Rat Poly::lead() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Rat inv = 1 / c_.back();
  return *this * inv;
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
  Poly lin = linear(a, b), r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * lin;
    r += Poly(*it);
  }
  return r;
}

Poly Poly::compose(const Poly& q) const {
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * q;
    r += Poly(*it);
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> v(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.deg() < b.deg()) return {Poly(), a};
  std::vector<Rat> r = a.c_, q(a.c_.size() - b.c_.size() + 1);
  Rat inv = 1 / b.c_.back();
  for (int k = a.deg(); k >= b.deg(); --k) {
    if (sgn(r[k]) == 0) continue;
    Rat f = r[k] * inv;
    q[k - b.deg()] = f;
    for (int j = 0; j <= b.deg(); ++j) r[k - b.deg() + j] -= f * b.c_[j];
  }
  r.resize(b.c_.size() - 1);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

namespace {

std::vector<Int> divisors(Int x) {
  if (x < 0) x = -x;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      small.push_back(d);
      if (d * d != x) large.push_back(x / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> Poly::rational_roots(Poly* rest) const {
  if (is_zero()) throw MathError("rational_roots of the zero polynomial");
  std::vector<Rat> roots;
  Poly p = *this;
  while (p.deg() > 0 && sgn(p.c_[0]) == 0) {
    roots.push_back(0);
    p = divmod(p, u()).first;
  }
  bool progress = true;
  while (p.deg() > 0 && progress) {
    progress = false;
    Int l = 1;
    for (const auto& x : p.c_) l = lcm(l, Int(x.get_den()));
    Int a0 = Int(p.c_.front() * l), an = Int(p.c_.back() * l);
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int s : {1, -1}) {
          Rat cand(num * s, den);
          cand.canonicalize();
          if (sgn(p.eval(cand)) == 0) {
            roots.push_back(cand);
            p = divmod(p, linear(1, -cand)).first;
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  if (rest) *rest = p.monic();
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = deg(); k >= 0; --k) {
    const Rat& c = c_[k];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = (a == 1);
    if (!unit || k == 0) os << a.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly pow(const Poly& p, int k) {
  Poly r(1), b = p;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

}  // namespace twy
