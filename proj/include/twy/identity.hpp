#pragma once

#include <string>
#include <vector>

#include "twy/rk.hpp"

namespace twy {

// One factor hat(a*u + b*v + c) of a product identity, acting on the legs
// `where` of the ambient space.
struct Factor {
  const ClearedMatrix* m;
  Rat a, b, c;
  std::vector<int> where;
};

// Checks prod(lhs) == prod(rhs) for the cleared numerators. Both sides must
// use the same factors (with the same arguments) so that the cleared
// denominators agree. The products are polynomial in (u, v); they are
// compared on a grid larger than their bidegree, which decides the identity.
IdentityReport check_product_identity(std::string name, const std::vector<IndexSet>& legs,
                                      const std::vector<Factor>& lhs, const std::vector<Factor>& rhs);

int max_degree(const LabeledMatrix<Poly>& m);

}  // namespace twy
