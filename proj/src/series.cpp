#include "twy/series.hpp"

#include <cstdlib>
#include <string>

namespace twy {

int default_trunc_order() {
  if (const char* env = std::getenv("TWYANG_TRUNC_ORDER")) {
    try {
      int d = std::stoi(env);
      if (d >= 0) return d;
    } catch (const std::exception&) {
    }
  }
  return kDefaultTruncOrder;
}

TruncSeries::TruncSeries(int order) : c_(order + 1) {
  if (order < 0) throw MathError("negative truncation order");
}

TruncSeries::TruncSeries(int order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  if (order < 0) throw MathError("negative truncation order");
  c_.resize(order + 1);
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s.c_[0] = 1;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order() != order()) throw MathError("series order mismatch");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order() != order()) throw MathError("series order mismatch");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw MathError("series order mismatch");
  int d = a.order();
  TruncSeries r(d);
  for (int i = 0; i <= d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; i + j <= d; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (sgn(c_[0]) == 0) throw MathError("series with zero constant term is not invertible");
  int d = order();
  TruncSeries r(d);
  Rat inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int k = 1; k <= d; ++k) {
    Rat acc = 0;
    for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc * inv0;
  }
  return r;
}

TruncSeries TruncSeries::shift(const Rat& a) const {
  int d = order();
  TruncSeries r(d);
  r.c_[0] = c_[0];
  for (int m = 1; m <= d; ++m) {
    if (sgn(c_[m]) == 0) continue;
    // (u+a)^{-m} = sum_j (-1)^j C(m+j-1, j) a^j u^{-m-j}
    Int binom = 1;
    Rat apow = 1;
    for (int j = 0; m + j <= d; ++j) {
      Rat term = c_[m] * apow * Rat(binom);
      if (j % 2) term = -term;
      r.c_[m + j] += term;
      binom = binom * (m + j) / (j + 1);
      apow *= a;
    }
  }
  return r;
}

TruncSeries TruncSeries::scale(const Rat& lambda) const {
  if (sgn(lambda) == 0) throw MathError("series rescaling by zero");
  TruncSeries r = *this;
  Rat f = 1, inv = 1 / lambda;
  for (auto& x : r.c_) {
    x *= f;
    f *= inv;
  }
  return r;
}

TruncSeries series_expand(const RatFunc& f, int order) {
  const Poly& num = f.num();
  const Poly& den = f.den();
  if (!num.is_zero() && num.deg() > den.deg())
    throw MathError("not a power series in u^-1: " + f.str());
  int m = den.deg();
  // in t = 1/u: num(u)/den(u) = (sum n_k t^{m-k}) / (sum d_k t^{m-k})
  std::vector<Rat> nt(order + 1), dt(m + 1);
  for (int k = 0; k <= num.deg(); ++k)
    if (m - k <= order) nt[m - k] = num.coeff(k);
  for (int k = 0; k <= m; ++k) dt[m - k] = den.coeff(k);
  TruncSeries r(order);
  Rat inv0 = 1 / dt[0];
  for (int k = 0; k <= order; ++k) {
    Rat acc = nt[k];
    for (int j = 1; j <= std::min(k, m); ++j) acc -= dt[j] * r[k - j];
    r[k] = acc * inv0;
  }
  return r;
}

TruncSeries factor_shifted_square(const TruncSeries& h, const Rat& a) {
  if (h[0] != 1) throw MathError("factor_shifted_square: constant term must be 1");
  int d = h.order();
  TruncSeries k = TruncSeries::one(d);
  // The u^-r coefficient of k(u)k(u+a) is 2k_r plus terms in k_1..k_{r-1}.
  for (int r = 1; r <= d; ++r) {
    k[r] = 0;
    TruncSeries prod = k * k.shift(a);
    k[r] = (h[r] - prod[r]) / 2;
  }
  return k;
}

}  // namespace twy
