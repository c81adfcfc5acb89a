#include "twy/index.hpp"

namespace twy {

IndexSet IndexSet::of_size(int N) {
  if (N < 1) throw MathError("index set needs N >= 1");
  IndexSet s;
  s.n_ = N / 2;
  s.zero_ = N % 2 == 1;
  return s;
}

IndexSet IndexSet::plain(int N) {
  if (N < 1) throw MathError("index set needs N >= 1");
  IndexSet s;
  s.n_ = N;
  s.plain_ = true;
  return s;
}

int IndexSet::label(int pos) const {
  if (pos < 0 || pos >= N()) throw MathError("index position out of range");
  if (plain_) return pos + 1;
  if (pos < n_) return pos - n_;
  if (zero_) return pos - n_;
  return pos - n_ + 1;
}

bool IndexSet::contains(int label) const {
  if (plain_) return label >= 1 && label <= n_;
  if (label == 0) return zero_;
  return label >= -n_ && label <= n_;
}

int IndexSet::pos(int label) const {
  if (!contains(label)) throw MathError("label " + std::to_string(label) + " not in index set");
  if (plain_) return label - 1;
  if (label < 0) return label + n_;
  if (zero_) return label + n_;
  return label + n_ - 1;
}

std::vector<int> IndexSet::labels() const {
  std::vector<int> v;
  for (int p = 0; p < N(); ++p) v.push_back(label(p));
  return v;
}

std::string family_name(Family f) { return f == Family::Orthogonal ? "orthogonal" : "symplectic"; }

}  // namespace twy
