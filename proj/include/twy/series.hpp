#pragma once

#include <vector>

#include "twy/ratfunc.hpp"

namespace twy {

constexpr int kDefaultTruncOrder = 12;

// Reads TWYANG_TRUNC_ORDER, falling back to kDefaultTruncOrder.
int default_trunc_order();

// c_0 + c_1 u^-1 + ... + c_D u^-D, known exactly through order D.
class TruncSeries {
 public:
  explicit TruncSeries(int order = kDefaultTruncOrder);
  TruncSeries(int order, std::vector<Rat> coeffs);

  static TruncSeries one(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int k) const { return c_[k]; }
  Rat& operator[](int k) { return c_[k]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  TruncSeries inverse() const;  // needs c_0 != 0
  // s(u + a), re-expanded in u^-1 through the same order
  TruncSeries shift(const Rat& a) const;
  // s(lambda * u)
  TruncSeries scale(const Rat& lambda) const;

 private:
  std::vector<Rat> c_;
};

// Expansion at u = infinity.
TruncSeries series_expand(const RatFunc& f, int order);

// Unique k with k_0 = 1 and h(u) = k(u) k(u+a) through the order of h.
TruncSeries factor_shifted_square(const TruncSeries& h, const Rat& a);

}  // namespace twy
