#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twy/labeled.hpp"
#include "twy/report.hpp"

namespace twy {

// Low-rank Lie algebras realised inside g_N (so2 and gl1 are one-dimensional,
// gl2 sits inside so4 as the F_ij with i, j of equal sign).
enum class LieAlgebra { sp2, so2, gl1, so3, gl2, so4 };

std::string lie_name(LieAlgebra a);
LieAlgebra parse_lie(const std::string& s);

struct LieModule {
  LieAlgebra algebra = LieAlgebra::sp2;
  IndexSet index;
  Family family = Family::Symplectic;
  int d = 0;
  std::vector<Rat> weight;
  // action of F_ij for every generator of the algebra; absent pairs act as 0
  std::map<std::pair<int, int>, QMat> F;
  // Casimirs: Omega for so3/so4, Omega_rho and z for gl2 (empty otherwise)
  QMat omega, z;

  QMat get(int i, int j) const;
  bool has(int i, int j) const { return F.count({i, j}) > 0; }
};

// Finite-dimensional irreducible module with the given highest weight: the
// vector killed by every F_ij with i < j, with F_11 (and F_22) eigenvalues
// from `hw`. Throws ConfigError outside the admissible lattice.
LieModule lie_module(LieAlgebra a, const std::vector<Rat>& hw);

// [F,F] relations for all stored generators and F_ij + theta_ij F_{-j,-i} = 0.
IdentityReport check_lie_relations(const LieModule& m);

// sum E_ij (x) (g_ii + g_jj) F_ij on {index, plain(d)}.
LabeledMatrix<Rat> f_prime(const LieModule& m, const std::vector<int>& g_diag);

}  // namespace twy
