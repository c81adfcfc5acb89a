#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twy/lie.hpp"
#include "twy/rk.hpp"
#include "twy/weight.hpp"

namespace twy {

// S(u) of a representation V of the extended twisted Yangian, stored as one
// operator on C^N (x) V (legs {pair.index(), plain(d)}); block (i,j) is s_ij(u).
struct TwistedModule {
  PairType pair;
  int d = 0;
  RFLabeled S;
  std::string note;
  // a vector known to be the highest weight vector, if the construction knows one
  std::optional<std::vector<Rat>> hw_hint;

  LabeledMatrix<RatFunc> s(int i, int j) const { return block(S, i, j); }
  IndexSet space() const { return IndexSet::plain(d); }
};

// Representation of X(g_N) through T(u) on C^N (x) W.
struct XModule {
  int N = 0;
  Family family = Family::Orthogonal;
  int d = 0;
  RFLabeled T;
  std::optional<std::vector<Rat>> hw_hint;
};

// Representation of the Olshanskii twisted Yangian Y^+(2) (sign +1, orthogonal
// transpose) or Y^-(2) (sign -1, symplectic transpose).
struct OlshanskiiModule {
  int sign = -1;
  int d = 0;
  RFLabeled S;  // legs {of_size(2), plain(d)}
  Family family() const { return sign > 0 ? Family::Orthogonal : Family::Symplectic; }
};

// ---- evaluation and one-dimensional modules
TwistedModule eval_sp2(PairTag variant, const Rat& mu);
TwistedModule eval_so3(const Rat& mu);
TwistedModule eval_so4(PairTag variant, const Rat& mu1, const Rat& mu2);
// S(u) from the explicit evaluation formula for a given Lie module
TwistedModule eval_from_lie(PairTag variant, const LieModule& lie);
TwistedModule onedim_module(const PairType& pair, std::optional<Rat> a = std::nullopt);

// ---- Olshanskii modules and bridges
OlshanskiiModule olshanskii_eval(int sign, const LieModule& lie);
Report verify_olshanskii(const OlshanskiiModule& m);
struct SdetResult {
  LabeledMatrix<RatFunc> first, second;  // the two expressions, operators on V
  IdentityReport agree, scalar;
};
SdetResult olshanskii_sdet(const OlshanskiiModule& m);

TwistedModule bridge_sp2(PairTag variant, const OlshanskiiModule& m);
TwistedModule bridge_so3(const OlshanskiiModule& m);
TwistedModule bridge_so4(PairTag variant, const OlshanskiiModule& circ, const OlshanskiiModule& bullet);

// ---- X(g_N) modules and tensor products
XModule vector_eval_X(int N, Family f, const Rat& a);
IdentityReport check_RTT(const XModule& x);
// lambda_i(u) for every label, read off at the highest weight vector
std::optional<std::vector<RatFunc>> x_highest_weight(const XModule& x);
TwistedModule tensor_twisted(const XModule& x, const TwistedModule& v);

// ---- verification
Report verify_twisted(const TwistedModule& m);
// w(u) if S(u)S(-u) is scalar
std::optional<RatFunc> central_w(const TwistedModule& m);

// ---- highest weights and restrictions
struct HighestWeight {
  bool found = false;
  size_t v0_dim = 0;
  std::vector<Rat> vector;
  WeightTuple weight;
  std::vector<RatFunc> negative;  // mu_{-i}(u), i = 1..n
  std::string note;
};
HighestWeight highest_weight_extract(const TwistedModule& m);
// negative-index eigenvalues against the closed formula in terms of mu_i
IdentityReport check_negative_weights(const TwistedModule& m, const HighestWeight& hw);

struct Restriction {
  std::optional<TwistedModule> module;
  Report report;
};
RatFunc vplus_h(const PairType& pair);
Restriction restrict_Vplus(const TwistedModule& m);

struct VJRestriction {
  int n = 0, dJ = 0;
  RFLabeled B;  // legs {plain(n), plain(dJ)}
  Report report;
};
VJRestriction restrict_VJ(const TwistedModule& m);

// ---- helpers shared with classification
// coefficient matrices of the cleared numerators of the given operators
std::vector<QMat> coefficient_matrices(const std::vector<LabeledMatrix<RatFunc>>& ops);
// restrict ops to the span of `basis` (columns); nullopt if not invariant
std::optional<LabeledMatrix<RatFunc>> restrict_to(const LabeledMatrix<RatFunc>& op,
                                                   const std::vector<std::vector<Rat>>& basis);

}  // namespace twy
