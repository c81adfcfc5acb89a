#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twy/ratfunc.hpp"

namespace twy {

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

// Unqualified call so that ring types in other headers are found by ADL.
template <class R>
bool ring_is_zero(const R& x) {
  return is_zero(x);
}

// Dense rows x cols matrix over a commutative ring R.
template <class R>
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Mat identity(size_t n, const R& one = R(1)) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  R& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const R& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  const std::vector<R>& data() const { return a_; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!ring_is_zero(x)) return false;
    return true;
  }

  template <class F>
  auto map(F f) const -> Mat<decltype(f(std::declval<R>()))> {
    Mat<decltype(f(std::declval<R>()))> m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  Mat& operator+=(const Mat& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat& operator*=(const R& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const R& s) { return a *= s; }
  friend Mat operator*(const R& s, Mat a) { return a *= s; }
  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw MathError("matrix product shape mismatch");
    Mat m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const R& x = a(i, k);
        if (ring_is_zero(x)) continue;
        for (size_t j = 0; j < b.c_; ++j)
          if (!ring_is_zero(b(k, j))) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  void check_same(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw MathError("matrix shape mismatch");
  }
  size_t r_ = 0, c_ = 0;
  std::vector<R> a_;
};

using QMat = Mat<Rat>;
using RFMat = Mat<RatFunc>;

template <class R>
Mat<R> kron(const Mat<R>& a, const Mat<R>& b) {
  Mat<R> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (ring_is_zero(a(i, j))) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

template <class R>
Mat<R> commutator(const Mat<R>& a, const Mat<R>& b) {
  return a * b - b * a;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(QMat& a);
// Basis of {x : A x = 0}.
std::vector<std::vector<Rat>> kernel(const QMat& a);
// Basis of the joint kernel of several matrices with equal column count.
std::vector<std::vector<Rat>> joint_kernel(const std::vector<QMat>& mats, size_t cols);

struct LinSolveResult {
  bool consistent = false;
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> kernel;
};
LinSolveResult poly_linear_solve(const QMat& a, const std::vector<Rat>& b);

// Inverse of a square matrix; nullopt if singular.
std::optional<QMat> inverse(const QMat& a);
QMat transpose(const QMat& a);

}  // namespace twy
