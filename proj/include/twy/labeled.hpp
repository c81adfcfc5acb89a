#pragma once

#include <map>
#include <string>
#include <vector>

#include "twy/index.hpp"
#include "twy/matrix.hpp"

namespace twy {

// Square matrix on a tensor power of index sets. Composite labels are
// flattened lexicographically, first leg slowest. Storage is row-sparse.
template <class R>
class LabeledMatrix {
 public:
  using Row = std::map<size_t, R>;

  LabeledMatrix() = default;
  explicit LabeledMatrix(std::vector<IndexSet> legs) : legs_(std::move(legs)) {
    dim_ = 1;
    for (const auto& l : legs_) dim_ *= l.N();
    rows_.resize(dim_);
  }
  explicit LabeledMatrix(const IndexSet& leg) : LabeledMatrix(std::vector<IndexSet>{leg}) {}

  static LabeledMatrix identity(std::vector<IndexSet> legs, const R& one = R(1)) {
    LabeledMatrix m(std::move(legs));
    for (size_t i = 0; i < m.dim_; ++i) m.rows_[i][i] = one;
    return m;
  }
  static LabeledMatrix identity(const IndexSet& leg, const R& one = R(1)) {
    return identity(std::vector<IndexSet>{leg}, one);
  }

  const std::vector<IndexSet>& legs() const { return legs_; }
  size_t dim() const { return dim_; }
  const Row& row(size_t i) const { return rows_[i]; }

  size_t flat(const std::vector<int>& labels) const {
    if (labels.size() != legs_.size()) throw MathError("label tuple has the wrong length");
    size_t p = 0;
    for (size_t k = 0; k < legs_.size(); ++k) p = p * legs_[k].N() + legs_[k].pos(labels[k]);
    return p;
  }
  std::vector<int> unflat(size_t p) const {
    std::vector<int> labels(legs_.size());
    for (size_t k = legs_.size(); k-- > 0;) {
      int Nk = legs_[k].N();
      labels[k] = legs_[k].label(static_cast<int>(p % Nk));
      p /= Nk;
    }
    return labels;
  }

  R at(size_t i, size_t j) const {
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? R() : it->second;
  }
  R at(const std::vector<int>& r, const std::vector<int>& c) const { return at(flat(r), flat(c)); }
  R at(int i, int j) const { return at(std::vector<int>{i}, std::vector<int>{j}); }

  void set(size_t i, size_t j, const R& x) {
    if (ring_is_zero(x)) rows_[i].erase(j);
    else rows_[i][j] = x;
  }
  void add(size_t i, size_t j, const R& x) {
    if (ring_is_zero(x)) return;
    auto [it, fresh] = rows_[i].try_emplace(j, x);
    if (!fresh) {
      it->second += x;
      if (ring_is_zero(it->second)) rows_[i].erase(it);
    }
  }
  void set(const std::vector<int>& r, const std::vector<int>& c, const R& x) {
    set(flat(r), flat(c), x);
  }
  void set(int i, int j, const R& x) { set(std::vector<int>{i}, std::vector<int>{j}, x); }
  void add(const std::vector<int>& r, const std::vector<int>& c, const R& x) {
    add(flat(r), flat(c), x);
  }

  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }
  size_t nnz() const {
    size_t k = 0;
    for (const auto& r : rows_) k += r.size();
    return k;
  }

  template <class F>
  auto map(F f) const -> LabeledMatrix<decltype(f(std::declval<R>()))> {
    LabeledMatrix<decltype(f(std::declval<R>()))> m(legs_);
    for (size_t i = 0; i < dim_; ++i)
      for (const auto& [j, x] : rows_[i]) m.set(i, j, f(x));
    return m;
  }

  LabeledMatrix& operator+=(const LabeledMatrix& o) {
    check_same(o);
    for (size_t i = 0; i < dim_; ++i)
      for (const auto& [j, x] : o.rows_[i]) add(i, j, x);
    return *this;
  }
  LabeledMatrix& operator-=(const LabeledMatrix& o) {
    check_same(o);
    for (size_t i = 0; i < dim_; ++i)
      for (const auto& [j, x] : o.rows_[i]) add(i, j, -x);
    return *this;
  }
  LabeledMatrix& operator*=(const R& s) {
    for (size_t i = 0; i < dim_; ++i) {
      Row r;
      for (const auto& [j, x] : rows_[i]) {
        R y = x * s;
        if (!ring_is_zero(y)) r.emplace(j, std::move(y));
      }
      rows_[i] = std::move(r);
    }
    return *this;
  }
  friend LabeledMatrix operator+(LabeledMatrix a, const LabeledMatrix& b) { return a += b; }
  friend LabeledMatrix operator-(LabeledMatrix a, const LabeledMatrix& b) { return a -= b; }
  friend LabeledMatrix operator*(LabeledMatrix a, const R& s) { return a *= s; }
  friend LabeledMatrix operator*(const R& s, LabeledMatrix a) { return a *= s; }
  friend LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b) {
    a.check_same(b);
    LabeledMatrix m(a.legs_);
    for (size_t i = 0; i < a.dim_; ++i)
      for (const auto& [k, x] : a.rows_[i])
        for (const auto& [j, y] : b.rows_[k]) m.add(i, j, x * y);
    return m;
  }
  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (a.legs_ != b.legs_) return false;
    for (size_t i = 0; i < a.dim_; ++i) {
      if (a.rows_[i].size() != b.rows_[i].size()) return false;
      for (const auto& [j, x] : a.rows_[i]) {
        auto it = b.rows_[i].find(j);
        if (it == b.rows_[i].end() || !(it->second == x)) return false;
      }
    }
    return true;
  }
  friend bool operator!=(const LabeledMatrix& a, const LabeledMatrix& b) { return !(a == b); }

  Mat<R> dense() const {
    Mat<R> m(dim_, dim_);
    for (size_t i = 0; i < dim_; ++i)
      for (const auto& [j, x] : rows_[i]) m(i, j) = x;
    return m;
  }

  void check_same(const LabeledMatrix& o) const {
    if (legs_ != o.legs_) throw MathError("labeled matrices live on different spaces");
  }

 private:
  std::vector<IndexSet> legs_;
  size_t dim_ = 0;
  std::vector<Row> rows_;
};

template <class R>
LabeledMatrix<R> kron(const LabeledMatrix<R>& a, const LabeledMatrix<R>& b) {
  std::vector<IndexSet> legs = a.legs();
  legs.insert(legs.end(), b.legs().begin(), b.legs().end());
  LabeledMatrix<R> m(legs);
  size_t db = b.dim();
  for (size_t i = 0; i < a.dim(); ++i)
    for (const auto& [j, x] : a.row(i))
      for (size_t k = 0; k < db; ++k)
        for (const auto& [l, y] : b.row(k)) m.set(i * db + k, j * db + l, x * y);
  return m;
}

// E_ij on a single leg
template <class R>
LabeledMatrix<R> unit_matrix(const IndexSet& s, int i, int j, const R& c = R(1)) {
  LabeledMatrix<R> m(s);
  m.set(i, j, c);
  return m;
}

// P = sum E_ij (x) E_ji
template <class R>
LabeledMatrix<R> op_P(const IndexSet& s) {
  LabeledMatrix<R> m({s, s});
  for (int i : s.labels())
    for (int j : s.labels()) m.set({i, j}, {j, i}, R(1));
  return m;
}

// Q = sum theta_ij E_ij (x) E_{-i,-j}; symplectic needs even N.
template <class R>
LabeledMatrix<R> op_Q(const IndexSet& s, Family f) {
  if (s.is_plain()) throw MathError("Q needs a signed index set");
  if (f == Family::Symplectic && s.has_zero())
    throw MathError("symplectic Q needs even N");
  LabeledMatrix<R> m({s, s});
  for (int i : s.labels())
    for (int j : s.labels()) m.set({i, -i}, {j, -j}, R(theta(f, i, j)));
  return m;
}

// (A^t)_{ij} = theta_ji A_{-j,-i} on a single leg.
template <class R>
LabeledMatrix<R> transpose_t(const LabeledMatrix<R>& a, Family f) {
  if (a.legs().size() != 1) throw MathError("transpose_t expects a single-leg matrix");
  const IndexSet& s = a.legs()[0];
  LabeledMatrix<R> m(s);
  for (size_t r = 0; r < a.dim(); ++r)
    for (const auto& [c, x] : a.row(r)) {
      int i = s.label(static_cast<int>(r)), j = s.label(static_cast<int>(c));
      // entry (i,j) of A lands at (-j,-i) with weight theta_{i,j}
      m.set({-j}, {-i}, theta(f, i, j) == 1 ? x : R(-x));
    }
  return m;
}

// Place an operator acting on legs `where` (0-based, in order of A's legs)
// into the space with the given legs.
template <class R>
LabeledMatrix<R> leg_embed(const LabeledMatrix<R>& a, const std::vector<int>& where,
                           const std::vector<IndexSet>& legs) {
  if (where.size() != a.legs().size()) throw MathError("leg_embed: leg list does not match operator");
  for (size_t k = 0; k < where.size(); ++k) {
    if (where[k] < 0 || where[k] >= static_cast<int>(legs.size()))
      throw MathError("leg_embed: leg out of range");
    if (legs[where[k]] != a.legs()[k]) throw MathError("leg_embed: index set mismatch");
  }
  LabeledMatrix<R> m(legs);
  for (size_t p = 0; p < m.dim(); ++p) {
    std::vector<int> lab = m.unflat(p);
    std::vector<int> sub(where.size());
    for (size_t k = 0; k < where.size(); ++k) sub[k] = lab[where[k]];
    for (const auto& [c, x] : a.row(a.flat(sub))) {
      std::vector<int> out = lab;
      std::vector<int> csub = a.unflat(c);
      for (size_t k = 0; k < where.size(); ++k) out[where[k]] = csub[k];
      m.set(p, m.flat(out), x);
    }
  }
  return m;
}

// Same, into `total` copies of A's (single) index set.
template <class R>
LabeledMatrix<R> leg_embed(const LabeledMatrix<R>& a, const std::vector<int>& where, int total) {
  const IndexSet& s = a.legs()[0];
  for (const auto& l : a.legs())
    if (l != s) throw MathError("leg_embed: mixed index sets");
  for (int w : where)
    if (w < 0 || w >= total) throw MathError("leg_embed: leg out of range");
  return leg_embed(a, where, std::vector<IndexSet>(total, s));
}

// Single-leg convenience with a 1-based leg number.
template <class R>
LabeledMatrix<R> leg_embed(const LabeledMatrix<R>& a, int leg, int total) {
  if (leg < 1 || leg > total) throw MathError("leg_embed: leg out of range");
  if (a.legs().size() != 1) throw MathError("leg_embed: expected a single-leg operator");
  return leg_embed(a, std::vector<int>{leg - 1}, total);
}

// Transpose t on leg 1 or 2 of a two-leg operator.
template <class R>
LabeledMatrix<R> partial_transpose(const LabeledMatrix<R>& a, int leg, Family f) {
  if (a.legs().size() != 2) throw MathError("partial_transpose expects a two-leg operator");
  if (leg != 1 && leg != 2) throw MathError("partial_transpose: leg must be 1 or 2");
  LabeledMatrix<R> m(a.legs());
  for (size_t r = 0; r < a.dim(); ++r)
    for (const auto& [c, x] : a.row(r)) {
      auto rl = a.unflat(r), cl = a.unflat(c);
      int k = leg - 1;
      int i = rl[k], j = cl[k];
      rl[k] = -j;
      cl[k] = -i;
      m.add(rl, cl, theta(f, i, j) == 1 ? x : R(-x));
    }
  return m;
}

// Reinterpret the legs without moving entries; legs must have the same total
// dimension. Merging adjacent legs into one plain leg is the main use.
template <class R>
LabeledMatrix<R> reshape(const LabeledMatrix<R>& a, std::vector<IndexSet> legs) {
  LabeledMatrix<R> m(std::move(legs));
  if (m.dim() != a.dim()) throw MathError("reshape: dimension mismatch");
  for (size_t i = 0; i < a.dim(); ++i)
    for (const auto& [j, x] : a.row(i)) m.set(i, j, x);
  return m;
}

// Block (i,j) of a two-leg operator, as an operator on the second leg.
template <class R>
LabeledMatrix<R> block(const LabeledMatrix<R>& a, int i, int j) {
  if (a.legs().size() != 2) throw MathError("block expects a two-leg operator");
  const IndexSet& v = a.legs()[1];
  size_t d = v.N(), pi = a.legs()[0].pos(i), pj = a.legs()[0].pos(j);
  LabeledMatrix<R> m(v);
  for (size_t al = 0; al < d; ++al)
    for (const auto& [c, x] : a.row(pi * d + al))
      if (c / d == pj) m.set(al, c % d, x);
  return m;
}

// Partial trace over the first leg of a two-leg operator.
template <class R>
LabeledMatrix<R> trace_first(const LabeledMatrix<R>& a) {
  if (a.legs().size() != 2) throw MathError("trace_first expects a two-leg operator");
  LabeledMatrix<R> m(a.legs()[1]);
  for (int i : a.legs()[0].labels()) m += block(a, i, i);
  return m;
}

}  // namespace twy
