#pragma once

#include <string>
#include <vector>

#include "twy/index.hpp"
#include "twy/ratfunc.hpp"

namespace twy {

enum class PairTag { B0, C0, D0, CI, DIII, BIa, BIb, CII, DIa, AIII };

std::string tag_name(PairTag t);
PairTag parse_tag(const std::string& s);  // throws ConfigError

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symmetric pair (g_N, g_N^rho) with the sign conventions attached to it.
class PairType {
 public:
  PairType() = default;
  // p, q are required for BIa/BIb/CII/DIa/AIII and ignored otherwise.
  static PairType make(PairTag tag, int N, int p = 0, int q = 0);
  static PairType parse(const std::string& tag, int N, int p = 0, int q = 0) {
    return make(parse_tag(tag), N, p, q);
  }

  PairTag tag() const { return tag_; }
  int N() const { return N_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return N_ / 2; }
  std::string name() const;

  bool is_typeA() const { return tag_ == PairTag::AIII; }
  bool is_typeB() const { return N_ % 2 == 1 && !is_typeA(); }
  bool is_BCD0() const { return tag_ == PairTag::B0 || tag_ == PairTag::C0 || tag_ == PairTag::D0; }
  bool is_CI_DIII() const { return tag_ == PairTag::CI || tag_ == PairTag::DIII; }
  bool is_BDI_CII() const {
    return tag_ == PairTag::BIa || tag_ == PairTag::BIb || tag_ == PairTag::CII || tag_ == PairTag::DIa;
  }
  Family family() const;
  IndexSet index() const;

  // kappa = N/2 - 1 (orthogonal), N/2 + 1 (symplectic)
  Rat kappa() const;
  // "+-": +1 orthogonal, -1 symplectic
  int pm() const { return family() == Family::Orthogonal ? 1 : -1; }
  // "(+-)": -1 for CI and DIII
  int paren_pm() const { return is_CI_DIII() ? -1 : 1; }
  // "[+-]": -1 for BI(b)
  int bracket_pm() const { return tag_ == PairTag::BIb ? -1 : 1; }

  bool second_kind() const;
  Rat c() const;  // 4/(p-q), second kind only

  // diagonal of the constant matrix G, in index order
  std::vector<int> g_diag() const;
  int g(int label) const;
  // I_N: 0..n for type B, 1..n otherwise
  std::vector<int> weight_labels() const;
  // bold k and l = n - k from the g_ii sequence over I_N
  int bold_k() const;
  int ell() const { return n() - bold_k(); }

  friend bool operator==(const PairType& a, const PairType& b) {
    return a.tag_ == b.tag_ && a.N_ == b.N_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  PairTag tag_ = PairTag::B0;
  int N_ = 0, p_ = 0, q_ = 0;
};

// Every supported pair with 2 <= N <= maxN (AIII included).
std::vector<PairType> all_pairs(int maxN);

}  // namespace twy
