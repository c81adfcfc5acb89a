#include "doctest.h"
#include "twy/rk.hpp"

using namespace twy;

namespace {

RatFunc lin(long a, long b) { return RatFunc(Poly::linear(a, b)); }

}  // namespace

TEST_CASE("pair validation") {
  CHECK_THROWS_AS(PairType::parse("DIb", 6, 3, 3), ConfigError);
  CHECK_THROWS_AS(PairType::make(PairTag::DIa, 6, 3, 3), ConfigError);
  CHECK_THROWS_AS(PairType::make(PairTag::CI, 3), ConfigError);
  CHECK_THROWS_AS(PairType::make(PairTag::BIa, 5, 2, 3), ConfigError);
  auto b = PairType::make(PairTag::BIa, 5, 3, 2);
  CHECK(b.kappa() == rat(3, 2));
  CHECK(b.second_kind());
  CHECK(b.c() == 4);
  CHECK(b.g_diag() == std::vector<int>{-1, 1, 1, 1, -1});
  CHECK(b.ell() == 1);
  auto ci = PairType::make(PairTag::CI, 4);
  CHECK(ci.g_diag() == std::vector<int>{-1, -1, 1, 1});
  CHECK(ci.kappa() == 3);
  CHECK_FALSE(PairType::make(PairTag::DIa, 4, 2, 2).second_kind());
}

TEST_CASE("R-matrix examples") {
  auto R = build_R(2, RFamily::glN);
  IndexSet s = IndexSet::of_size(2);
  RatFunc inv = RatFunc(1) / RatFunc::u();
  CHECK(R.at({1, 1}, {1, 1}) == RatFunc(1) - inv);
  CHECK(R.at({1, -1}, {1, -1}) == RatFunc(1));
  CHECK(R.at({1, -1}, {-1, 1}) == -inv);
  auto Rb = build_R(3, RFamily::gN);
  // Q/(u - 1/2) on the (1,-1),(1,-1) entry
  CHECK(Rb.at({1, -1}, {1, -1}) == RatFunc(1) + RatFunc(Poly(1), Poly::linear(1, rat(-1, 2))));
  CHECK(check_unitarity_R(build_R(4, RFamily::gN, Family::Symplectic)).pass);
  CHECK_THROWS_AS(build_R(3, RFamily::gN, Family::Symplectic), ConfigError);
  CHECK_THROWS_AS(build_R(1, RFamily::glN), ConfigError);
}

TEST_CASE("YBE for both families") {
  for (int N = 2; N <= 6; ++N) {
    CAPTURE(N);
    CHECK(check_YBE(build_R(N, RFamily::glN)).pass);
    CHECK(check_YBE(build_R(N, RFamily::gN, Family::Orthogonal)).pass);
    if (N % 2 == 0) CHECK(check_YBE(build_R(N, RFamily::gN, Family::Symplectic)).pass);
  }
}

TEST_CASE("YBE fails for a perturbed kappa") {
  auto r = check_YBE(build_R(3, RFamily::gN, Family::Orthogonal, rat(3, 2)));
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("G and K examples") {
  auto b = PairType::make(PairTag::B0, 5);
  CHECK(build_G(b) == LabeledMatrix<Rat>::identity(IndexSet::of_size(5)));
  auto ci2 = PairType::make(PairTag::CI, 2);
  auto K = build_K_oneparam(ci2, 1);
  RatFunc inv = RatFunc(1) / RatFunc::u();
  CHECK(K.at(-1, -1) == RatFunc(-1) + inv);
  CHECK(K.at(1, 1) == RatFunc(1) + inv);
  CHECK(build_K_oneparam(ci2, 0) == to_ratfunc(build_G(ci2)));
  CHECK_THROWS_AS(build_K_oneparam(b, 1), ConfigError);
  // second kind BIa N=5: K_22 = (1 + 4u)/(1 - 4u)
  auto bia = PairType::make(PairTag::BIa, 5, 3, 2);
  CHECK(build_K(bia).at(2, 2) == lin(4, 1) / lin(-4, 1));
  CHECK(build_K(bia).at(0, 0) == RatFunc(1));
}

TEST_CASE("reflection equation for every pair") {
  for (const auto& pair : all_pairs(6)) {
    CAPTURE(pair.name());
    auto K = build_K(pair);
    CHECK(check_RE(build_R(pair), K).pass);
    CHECK(check_unitarity_K(K).pass);
  }
}

TEST_CASE("reflection equation examples") {
  auto R4 = build_R(4, RFamily::gN);
  CHECK(check_RE(R4, RFLabeled::identity(IndexSet::of_size(4))).pass);
  auto ci = PairType::make(PairTag::CI, 4);
  CHECK(check_RE(build_R(ci), build_K(ci)).pass);
  auto dIII = PairType::make(PairTag::DIII, 4);
  CHECK(check_RE(build_R(dIII), build_K_oneparam(dIII, rat(3, 7))).pass);
  CHECK(check_RE(build_R(ci), build_K_oneparam(ci, rat(-5, 2))).pass);
  RFLabeled bad(IndexSet::of_size(2));
  bad.set(-1, -1, RatFunc(1));
  bad.set(1, 1, RatFunc(2));
  auto r = check_RE(build_R(2, RFamily::glN), bad);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());
  CHECK(check_twisted_RE(build_R(3, RFamily::glN), RFLabeled::identity(IndexSet::of_size(3)),
                         Family::Orthogonal)
            .pass);
  CHECK(check_twisted_RE(build_R(4, RFamily::glN), RFLabeled::identity(IndexSet::of_size(4)),
                         Family::Symplectic)
            .pass);
}

TEST_CASE("p(u) examples") {
  auto ci = PairType::make(PairTag::CI, 4);
  CHECK(trace(build_K(ci)).is_zero());
  CHECK(compute_p(build_K(ci), ci) == RatFunc(-1) + RatFunc(1) / lin(2, -3));
  auto b0 = PairType::make(PairTag::B0, 5);
  // 1 - 1/(2u-3/2) + 5/(2u-3)
  RatFunc p0 = RatFunc(1) - RatFunc(1) / RatFunc(Poly::linear(2, rat(-3, 2))) + RatFunc(5) / lin(2, -3);
  CHECK(compute_p(build_K(b0), b0) == p0);
  auto a = PairType::make(PairTag::AIII, 4, 2, 2);
  CHECK_THROWS_AS(compute_p(build_K(a), a), ConfigError);
}

TEST_CASE("property: p identity and symmetry for every pair") {
  for (const auto& pair : all_pairs(6)) {
    if (pair.is_typeA()) continue;
    CAPTURE(pair.name());
    auto K = build_K(pair);
    CHECK(check_p_identity(K, pair).pass);
    CHECK(check_symmetry(K, pair).pass);
  }
}

TEST_CASE("property: one-parameter symmetry") {
  for (auto tag : {PairTag::CI, PairTag::DIII})
    for (int N : {2, 4, 6}) {
      if (tag == PairTag::DIII && N == 2) continue;
      auto pair = PairType::make(tag, N);
      for (Rat a : {rat(1, 1), rat(-3, 2), rat(2, 7)}) {
        CAPTURE(pair.name());
        auto K = build_K_oneparam(pair, a);
        CHECK(check_symmetry(K, pair).pass);
        CHECK(check_RE(build_R(pair), K).pass);
      }
    }
}
