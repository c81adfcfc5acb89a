#pragma once

#include <vector>

#include "twy/pair.hpp"

namespace twy {

// Highest weight (mu_i(u)) for i in I_N, stored in the order of
// pair.weight_labels(). AIII tuples use labels 1..N instead.
struct WeightTuple {
  PairType pair;
  std::vector<RatFunc> mu;

  const RatFunc& at(int i) const;
  std::vector<int> labels() const;
};

}  // namespace twy
