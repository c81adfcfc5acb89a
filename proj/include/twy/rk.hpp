#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twy/bipoly.hpp"
#include "twy/labeled.hpp"
#include "twy/pair.hpp"
#include "twy/report.hpp"

namespace twy {

using RFLabeled = LabeledMatrix<RatFunc>;
using BiLabeled = LabeledMatrix<BiPoly>;

enum class RFamily { glN, gN };

// R(u) = I - P/u (glN) or I - P/u + Q/(u - kappa) (gN). A custom kappa is
// accepted for negative controls.
RFLabeled build_R(int N, RFamily fam, Family theta_family = Family::Orthogonal,
                  std::optional<Rat> kappa_override = std::nullopt);
RFLabeled build_R(const PairType& pair);

// Constant G of the pair; AIII uses plain labels 1..N.
LabeledMatrix<Rat> build_G(const PairType& pair);
// K(u) = G (first kind) or (I - c u G)/(1 - c u) (second kind).
RFLabeled build_K(const PairType& pair);
// G + a/u for CI and DIII.
RFLabeled build_K_oneparam(const PairType& pair, const Rat& a);

RFLabeled to_ratfunc(const LabeledMatrix<Rat>& m);
RatFunc trace(const RFLabeled& m);
RFLabeled substitute(const RFLabeled& m, const Rat& a, const Rat& b);

// Clear denominators: m = hat / den with den monic, hat polynomial.
struct ClearedMatrix {
  Poly den;
  LabeledMatrix<Poly> hat;
};
ClearedMatrix clear_denominators(const RFLabeled& m);
// Entrywise p(alpha u + beta v + gamma) of a polynomial matrix.
BiLabeled lift(const LabeledMatrix<Poly>& m, const Rat& alpha, const Rat& beta, const Rat& gamma = 0);

IdentityReport check_YBE(const RFLabeled& R);
IdentityReport check_RE(const RFLabeled& R, const RFLabeled& K);
IdentityReport check_twisted_RE(const RFLabeled& R, const RFLabeled& K, Family f);
IdentityReport check_unitarity_R(const RFLabeled& R);
IdentityReport check_unitarity_K(const RFLabeled& K);

// p(u) = (+-)1 -+ 1/(2u - kappa) + Tr K(u)/(2u - 2 kappa)
RatFunc compute_p(const RFLabeled& K, const PairType& pair);
// Symmetry relation for K in the module form: theta_ij K_{-j,-i}(u) equals
// (+-)K(kappa-u) +- (K(u)-K(kappa-u))/(2u-kappa)
//   + (Tr G(u) K(kappa-u) - Tr K(u) I)/(2u-2kappa).
// For K = G this is the K-matrix symmetry; for K = G + a/u it is the
// one-parameter symmetry.
IdentityReport check_symmetry(const RFLabeled& K, const PairType& pair);
IdentityReport check_p_identity(const RFLabeled& K, const PairType& pair);

}  // namespace twy
