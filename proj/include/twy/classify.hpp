#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twy/report.hpp"
#include "twy/series.hpp"
#include "twy/weight.hpp"

namespace twy {

constexpr int kDefaultDegMax = 16;

// tilde mu_i(u) = (2u - n + i) mu_i(u) + sum_{l > i} mu_l(u), stored in the
// label order of the weight tuple (n is replaced by N for AIII tuples).
struct TildeTuple {
  PairType pair;
  std::vector<RatFunc> mu;
  const RatFunc& at(int i) const;
};

TildeTuple tilde(const WeightTuple& w);
WeightTuple untilde(const TildeTuple& t);

// Nontriviality of the Verma module; for type B the mu_0 relation is checked
// as well. Witnesses start with "i=<k>" for the first violated index.
IdentityReport check_nontrivial(const WeightTuple& w);
// g(u) of the type B mu_0 relation
RatFunc mu0_g(const PairType& pair);

enum class SolveStatus { Found, None, Inconclusive };
std::string status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::None;
  Poly P;
  std::optional<Rat> gamma;
  std::string note;
  bool found() const { return status == SolveStatus::Found; }
};

// Monic P with P(u + shift)/P(u) = ratio and, if given, P(u) = P(-u + center).
SolveResult solve_P(const RatFunc& ratio, const Rat& shift, std::optional<Rat> center,
                    int deg_max = kDefaultDegMax);
// Monic P of exactly degree d, or nullopt.
std::optional<Poly> solve_P_at_degree(const RatFunc& ratio, const Rat& shift, std::optional<Rat> center,
                                      int d);
// (P, gamma) with ratio = P(u+shift)/P(u) * (gamma-u)/(gamma+u-kappa) and P(gamma) != 0.
SolveResult solve_P_gamma(const RatFunc& ratio, const Rat& shift, const Rat& kappa,
                          std::optional<Rat> center, int deg_max = kDefaultDegMax);

struct Certificate {
  PairType pair;
  std::vector<Poly> P;  // P_1 .. P_n
  std::optional<Rat> gamma;
  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.pair == b.pair && a.P == b.P && a.gamma == b.gamma;
  }
};

// Symmetry centre c_i of P_i(u) = P_i(-u + c_i).
Rat drinfeld_center(const PairType& pair, int i);
IdentityReport check_certificate(const Certificate& c);

enum class FiniteDim { Yes, No, NecessaryPass, NecessaryFail, Inconclusive };
std::string finite_dim_name(FiniteDim f);

struct Verdict {
  bool nontrivial = false;
  FiniteDim finite_dim = FiniteDim::No;
  std::optional<Certificate> certificate;
  std::vector<std::string> diagnostics;
};

Verdict classify(const WeightTuple& w, int deg_max = kDefaultDegMax);

// Molev-Ragoucy conditions for a tuple mu_1..mu_N with parameter q.
struct MRResult {
  bool nontrivial = false;
  SolveStatus finite_dim = SolveStatus::None;
  std::vector<Poly> P;  // P_2 .. P_N when found
  std::optional<Rat> gamma;
  std::vector<std::string> diagnostics;
};
MRResult check_MR(const std::vector<RatFunc>& mu, int q, int deg_max = kDefaultDegMax);
// finite-dimensionality part only, on an already formed tilde tuple
MRResult mr_finite_dim(const std::vector<RatFunc>& tilde_mu, int q, int deg_max = kDefaultDegMax);

// mu0 with tilde mu_1(u) = 2u m(2u) m(2u-1), tilde mu_0(u) = 2u m(2u) m(1-2u) (so3 weights).
TruncSeries mu_factorize_B0(const RatFunc& mu0, const RatFunc& mu1, int order);

// Highest weights lambda_i(u), -n <= i <= n, of X(g_N).
using LambdaTuple = std::map<int, RatFunc>;
// Odd N: partial holds lambda_0..lambda_n. Even N: partial holds lambda_1..lambda_n
// and lambda_{-k} = nu.
LambdaTuple extend_lambda(const LambdaTuple& partial, int N, Family f, std::optional<RatFunc> nu = std::nullopt,
                          std::optional<int> k = std::nullopt);
IdentityReport check_lambda_nontrivial(const LambdaTuple& lambda, int N, Family f);

struct XgnResult {
  SolveStatus status = SolveStatus::None;
  std::vector<Poly> P;  // P_1 .. P_n
  std::vector<std::string> diagnostics;
};
XgnResult xgn_fd_check(const LambdaTuple& lambda, int N, Family f, int deg_max = kDefaultDegMax);

// Weight whose classification is `cert`, built from factorizations
// P_i(u) = (-1)^deg Q_i(u) Q_i(-u + c_i).
WeightTuple construct_from_cert(const Certificate& cert, const std::vector<Poly>& Q);
Poly reflect_product(const Poly& Q, const Rat& center);

}  // namespace twy
