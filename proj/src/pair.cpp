#include "twy/pair.hpp"

#include <cstdlib>

namespace twy {

std::string tag_name(PairTag t) {
  switch (t) {
    case PairTag::B0: return "B0";
    case PairTag::C0: return "C0";
    case PairTag::D0: return "D0";
    case PairTag::CI: return "CI";
    case PairTag::DIII: return "DIII";
    case PairTag::BIa: return "BIa";
    case PairTag::BIb: return "BIb";
    case PairTag::CII: return "CII";
    case PairTag::DIa: return "DIa";
    case PairTag::AIII: return "AIII";
  }
  return "?";
}

PairTag parse_tag(const std::string& s) {
  for (auto t : {PairTag::B0, PairTag::C0, PairTag::D0, PairTag::CI, PairTag::DIII, PairTag::BIa,
                 PairTag::BIb, PairTag::CII, PairTag::DIa, PairTag::AIII})
    if (tag_name(t) == s) return t;
  if (s == "DIb") throw ConfigError("pair DI(b) is not supported (excluded from the theory)");
  throw ConfigError("unknown pair type '" + s + "'");
}

PairType PairType::make(PairTag tag, int N, int p, int q) {
  auto fail = [&](const std::string& why) {
    throw ConfigError("invalid " + tag_name(tag) + " with N=" + std::to_string(N) + ": " + why);
  };
  PairType t;
  t.tag_ = tag;
  t.N_ = N;
  switch (tag) {
    case PairTag::B0:
      if (N < 3 || N % 2 == 0) fail("needs odd N >= 3");
      break;
    case PairTag::C0:
    case PairTag::CI:
      if (N < 2 || N % 2) fail("needs even N >= 2");
      break;
    case PairTag::D0:
    case PairTag::DIII:
      if (N < 2 || N % 2) fail("needs even N >= 2");
      break;
    case PairTag::BIa:
    case PairTag::BIb:
    case PairTag::CII:
    case PairTag::DIa:
      if (p + q != N || q <= 0 || p < q) fail("needs p >= q > 0 with p + q = N");
      if (tag == PairTag::BIa && !(p % 2 == 1 && q % 2 == 0)) fail("BI(a) needs p odd, q even");
      if (tag == PairTag::BIb && !(p % 2 == 0 && q % 2 == 1)) fail("BI(b) needs p even, q odd");
      if ((tag == PairTag::CII || tag == PairTag::DIa) && (p % 2 || q % 2)) {
        if (tag == PairTag::DIa) throw ConfigError("pair DI(b) is not supported (excluded from the theory)");
        fail("CII needs p, q even");
      }
      t.p_ = p;
      t.q_ = q;
      break;
    case PairTag::AIII:
      if (N < 1 || p + q != N || q < 0 || p < q) fail("needs p >= q >= 0 with p + q = N");
      t.p_ = p;
      t.q_ = q;
      break;
  }
  return t;
}

std::string PairType::name() const {
  std::string s = tag_name(tag_) + "(N=" + std::to_string(N_);
  if (is_BDI_CII() || is_typeA()) s += ",p=" + std::to_string(p_) + ",q=" + std::to_string(q_);
  return s + ")";
}

Family PairType::family() const {
  switch (tag_) {
    case PairTag::C0:
    case PairTag::CI:
    case PairTag::CII: return Family::Symplectic;
    default: return Family::Orthogonal;
  }
}

IndexSet PairType::index() const {
  return is_typeA() ? IndexSet::plain(N_) : IndexSet::of_size(N_);
}

Rat PairType::kappa() const {
  Rat half(N_, 2);
  half.canonicalize();
  return family() == Family::Orthogonal ? Rat(half - 1) : Rat(half + 1);
}

bool PairType::second_kind() const {
  switch (tag_) {
    case PairTag::BIa:
    case PairTag::BIb:
    case PairTag::DIa:
    case PairTag::CII: return p_ != q_;
    case PairTag::AIII: return p_ != q_ && q_ > 0;
    default: return false;
  }
}

Rat PairType::c() const {
  if (p_ == q_) throw MathError("c = 4/(p-q) undefined for p = q");
  Rat r(4, p_ - q_);
  r.canonicalize();
  return r;
}

int PairType::g(int label) const {
  int a = std::abs(label);
  switch (tag_) {
    case PairTag::B0:
    case PairTag::C0:
    case PairTag::D0: return 1;
    case PairTag::CI:
    case PairTag::DIII: return label > 0 ? 1 : -1;
    case PairTag::BIa: return a <= (p_ - 1) / 2 ? 1 : -1;
    case PairTag::BIb: return a <= (q_ - 1) / 2 ? -1 : 1;
    case PairTag::CII:
    case PairTag::DIa: return a <= p_ / 2 ? 1 : -1;
    case PairTag::AIII: return label <= p_ ? 1 : -1;
  }
  return 1;
}

std::vector<int> PairType::g_diag() const {
  std::vector<int> d;
  for (int l : index().labels()) d.push_back(g(l));
  return d;
}

std::vector<int> PairType::weight_labels() const {
  std::vector<int> v;
  for (int i = is_typeB() ? 0 : 1; i <= n(); ++i) v.push_back(i);
  return v;
}

int PairType::bold_k() const {
  auto I = weight_labels();
  bool all_one = true;
  for (int i : I) all_one = all_one && g(i) == 1;
  if (all_one) return n();
  for (size_t k = 0; k + 1 < I.size(); ++k)
    if (g(I[k]) != g(I[k + 1])) return I[k];
  return n();
}


std::vector<PairType> all_pairs(int maxN) {
  std::vector<PairType> v;
  for (int N = 2; N <= maxN; ++N) {
    if (N % 2) {
      v.push_back(PairType::make(PairTag::B0, N));
      for (int q = 1; q < N; ++q) {
        int p = N - q;
        if (p < q) continue;
        v.push_back(PairType::make(p % 2 ? PairTag::BIa : PairTag::BIb, N, p, q));
      }
    } else {
      v.push_back(PairType::make(PairTag::C0, N));
      v.push_back(PairType::make(PairTag::CI, N));
      if (N >= 4) {
        v.push_back(PairType::make(PairTag::D0, N));
        v.push_back(PairType::make(PairTag::DIII, N));
      }
      for (int q = 2; q <= N / 2; q += 2) {
        v.push_back(PairType::make(PairTag::CII, N, N - q, q));
        if (N >= 4) v.push_back(PairType::make(PairTag::DIa, N, N - q, q));
      }
    }
    for (int q = 1; q <= N / 2; ++q) v.push_back(PairType::make(PairTag::AIII, N, N - q, q));
  }
  return v;
}

}  // namespace twy
