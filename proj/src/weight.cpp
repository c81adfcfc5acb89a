#include "twy/weight.hpp"

namespace twy {

std::vector<int> WeightTuple::labels() const {
  if (!pair.is_typeA()) return pair.weight_labels();
  std::vector<int> l;
  for (int i = 1; i <= pair.N(); ++i) l.push_back(i);
  return l;
}

const RatFunc& WeightTuple::at(int i) const {
  auto l = labels();
  for (size_t k = 0; k < l.size() && k < mu.size(); ++k)
    if (l[k] == i) return mu[k];
  throw MathError("weight tuple has no component " + std::to_string(i));
}

}  // namespace twy
