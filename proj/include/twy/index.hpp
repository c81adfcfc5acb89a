#pragma once

#include <string>
#include <vector>

#include "twy/rat.hpp"

namespace twy {

enum class Family { Orthogonal, Symplectic };

// Labels -n..-1, (0), 1..n; the "plain" variant is 1..N (type A bookkeeping).
class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet of_size(int N);  // signed labels
  static IndexSet plain(int N);    // labels 1..N

  int N() const { return plain_ ? n_ : 2 * n_ + (zero_ ? 1 : 0); }
  int n() const { return n_; }
  bool has_zero() const { return zero_; }
  bool is_plain() const { return plain_; }

  int label(int pos) const;
  int pos(int label) const;  // throws on a foreign label
  bool contains(int label) const;
  std::vector<int> labels() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.plain_ == b.plain_;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

 private:
  int n_ = 0;
  bool zero_ = false;
  bool plain_ = false;
};

inline int sign_of(int i) { return i > 0 ? 1 : (i < 0 ? -1 : 1); }

// theta_ij: 1 for the orthogonal family, sign(i)sign(j) for the symplectic one.
inline int theta(Family f, int i, int j) {
  return f == Family::Orthogonal ? 1 : sign_of(i) * sign_of(j);
}

std::string family_name(Family f);

}  // namespace twy
