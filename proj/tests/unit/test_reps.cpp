#include "doctest.h"
#include "twy/reps.hpp"

using namespace twy;

namespace {

RatFunc lin(const Rat& a, const Rat& b) { return RatFunc(Poly::linear(a, b)); }
const RatFunc U = RatFunc::u();

RatFunc tilde(const WeightTuple& w, int i) {
  int n = w.pair.n();
  RatFunc t = lin(2, -n + i) * w.at(i);
  for (int l = i + 1; l <= n; ++l) t += w.at(l);
  return t;
}

void require_verified(const TwistedModule& m) {
  Report r = verify_twisted(m);
  INFO(m.note << "\n" << r.text());
  CHECK(r.pass());
}

WeightTuple weight_of(const TwistedModule& m) {
  auto hw = highest_weight_extract(m);
  REQUIRE(hw.found);
  return hw.weight;
}

OlshanskiiModule ols_minus(int m) { return olshanskii_eval(-1, lie_module(LieAlgebra::sp2, {Rat(-m)})); }
OlshanskiiModule ols_plus(const Rat& c) { return olshanskii_eval(1, lie_module(LieAlgebra::so2, {c})); }

std::vector<PairType> tensor_pairs() {
  return {PairType::make(PairTag::CI, 4),         PairType::make(PairTag::DIII, 4),
          PairType::make(PairTag::C0, 4),         PairType::make(PairTag::D0, 4),
          PairType::make(PairTag::B0, 3),         PairType::make(PairTag::B0, 5),
          PairType::make(PairTag::BIa, 5, 3, 2),  PairType::make(PairTag::BIb, 5, 4, 1),
          PairType::make(PairTag::CII, 4, 2, 2),  PairType::make(PairTag::DIa, 6, 4, 2),
          PairType::make(PairTag::CI, 6),         PairType::make(PairTag::DIII, 6),
          PairType::make(PairTag::C0, 6),         PairType::make(PairTag::D0, 6)};
}

}  // namespace

TEST_CASE("Lie modules satisfy the bracket relations") {
  std::vector<std::pair<LieAlgebra, std::vector<Rat>>> cases{
      {LieAlgebra::sp2, {0}},          {LieAlgebra::sp2, {-1}},        {LieAlgebra::sp2, {-4}},
      {LieAlgebra::so2, {rat(3, 2)}},  {LieAlgebra::gl1, {-2}},        {LieAlgebra::so3, {0}},
      {LieAlgebra::so3, {rat(-1, 2)}}, {LieAlgebra::so3, {-2}},        {LieAlgebra::gl2, {rat(1, 3), rat(-5, 3)}},
      {LieAlgebra::gl2, {2, 2}},       {LieAlgebra::so4, {-1, -2}},    {LieAlgebra::so4, {rat(-1, 2), rat(-3, 2)}}};
  for (const auto& [a, w] : cases) {
    LieModule m = lie_module(a, w);
    auto r = check_lie_relations(m);
    INFO(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("Lie module examples") {
  LieModule triv = lie_module(LieAlgebra::sp2, {0});
  CHECK(triv.d == 1);
  for (const auto& [ij, A] : triv.F) CHECK(A.is_zero());

  // the two-dimensional sp2 module has F_11-weight -1 in our convention
  LieModule two = lie_module(LieAlgebra::sp2, {-1});
  CHECK(two.d == 2);
  CHECK(commutator(two.get(1, -1), two.get(-1, 1)) == two.get(1, 1) * Rat(4));

  for (auto w : std::vector<std::pair<int, int>>{{0, -1}, {-1, -2}, {-1, -1}, {-2, -3}}) {
    LieModule m = lie_module(LieAlgebra::so4, {w.first, w.second});
    Rat s = w.first * w.first + w.second * w.second - 2 * w.second;
    CHECK(m.omega == QMat::identity(m.d) * s);
  }
  LieModule g = lie_module(LieAlgebra::gl2, {rat(1, 2), rat(-3, 2)});
  Rat mu1 = rat(1, 2), mu2 = rat(-3, 2);
  CHECK(g.z == QMat::identity(g.d) * Rat(mu1 * mu1 + mu2 * mu2 + mu1 - mu2));
  LieModule so3 = lie_module(LieAlgebra::so3, {rat(-3, 2)});
  CHECK(so3.d == 4);
  CHECK(so3.omega == QMat::identity(4) * Rat(rat(9, 4) + rat(3, 2)));

  CHECK_THROWS_AS(lie_module(LieAlgebra::sp2, {1}), ConfigError);
  CHECK_THROWS_AS(lie_module(LieAlgebra::sp2, {rat(-1, 2)}), ConfigError);
  CHECK_THROWS_AS(lie_module(LieAlgebra::so4, {1, 0}), ConfigError);
  CHECK_THROWS_AS(lie_module(LieAlgebra::gl2, {0, 1}), ConfigError);
}

TEST_CASE("evaluation modules: trivial cases") {
  auto ci = eval_sp2(PairTag::CI, 0);
  CHECK(ci.S == onedim_module(PairType::make(PairTag::CI, 2)).S);
  auto b0 = eval_so3(0);
  CHECK(b0.S == RFLabeled::identity(b0.S.legs()));
  auto d3 = eval_so4(PairTag::DIII, 0, 0);
  CHECK(d3.S == onedim_module(PairType::make(PairTag::DIII, 4)).S);
  CHECK_THROWS_AS(eval_so4(PairTag::C0, 0, 0), ConfigError);
}

TEST_CASE("evaluation modules: weights match the closed formulas") {
  for (int m = 0; m <= 3; ++m) {
    Rat mu(-m);
    auto c0 = eval_sp2(PairTag::C0, mu);
    require_verified(c0);
    CHECK(weight_of(c0).at(1) == RatFunc(1) + RatFunc(2 * mu) / lin(1, -2));
  }
  for (Rat mu : {Rat(0), rat(3, 2), Rat(-5)}) {
    auto ci = eval_sp2(PairTag::CI, mu);
    require_verified(ci);
    CHECK(weight_of(ci).at(1) == RatFunc(1) + RatFunc(2 * mu) / U);
  }
  for (Rat mu : {Rat(0), rat(-1, 2), Rat(-1), rat(-3, 2), Rat(-2)}) {
    auto b0 = eval_so3(mu);
    require_verified(b0);
    auto w = weight_of(b0);
    RatFunc a = lin(1, rat(-3, 4)), b = lin(1, rat(-1, 4));
    RatFunc mu1 = RatFunc(1) + (RatFunc(mu * mu) + lin(2, -1) * RatFunc(mu)) / (a * b);
    RatFunc mu0 = RatFunc(1) + (RatFunc(mu * mu) * lin(-1, rat(-1, 4)) - RatFunc(mu) * b) / (a * b * b);
    CHECK(w.at(1) == mu1);
    CHECK(w.at(0) == mu0);
  }
  std::vector<std::pair<Rat, Rat>> gl2{{0, 0}, {rat(1, 3), rat(-5, 3)}, {2, 1}, {rat(-1, 2), rat(-1, 2)}};
  for (auto [m1, m2] : gl2) {
    auto d3 = eval_so4(PairTag::DIII, m1, m2);
    require_verified(d3);
    auto w = weight_of(d3);
    RatFunc q = U * lin(1, -1);
    CHECK(w.at(1) == RatFunc(1) + RatFunc(2 * m1) / U + RatFunc(m1 * m1 - m2 * m2 + m1 - m2) / q);
    CHECK(w.at(2) == RatFunc(1) + RatFunc(2 * m2) / U + RatFunc(m2 * m2 - m1 * m1 + m2 - m1) / q);
  }
  std::vector<std::pair<Rat, Rat>> so4{{0, 0}, {0, -1}, {-1, -2}, {rat(-1, 2), rat(-3, 2)}, {-1, -1}};
  for (auto [m1, m2] : so4) {
    auto d0 = eval_so4(PairTag::D0, m1, m2);
    require_verified(d0);
    auto w = weight_of(d0);
    RatFunc a = lin(1, -1);
    CHECK(w.at(1) == RatFunc(1) + RatFunc(2 * m1) / a + RatFunc(m1 * m1 - m2 * m2) / (a * a));
    CHECK(w.at(2) == RatFunc(1) + RatFunc(2 * m2) / a + RatFunc(m2 * m2 - m1 * m1) / (a * a));
  }
}

TEST_CASE("one-dimensional modules") {
  for (const auto& P : all_pairs(6)) {
    auto m = onedim_module(P);
    require_verified(m);
    auto hw = highest_weight_extract(m);
    REQUIRE(hw.found);
    RFLabeled K = build_K(P);
    for (int i : hw.weight.labels()) CHECK(hw.weight.at(i) == K.at(i, i));
  }
  auto b = onedim_module(PairType::make(PairTag::B0, 5));
  CHECK(b.S == RFLabeled::identity(b.S.legs()));
  CHECK(central_w(b) == RatFunc(1));
  for (Rat a : {rat(1, 2), Rat(-3)}) {
    for (auto tag : {PairTag::CI, PairTag::DIII}) {
      auto m = onedim_module(PairType::make(tag, 4), a);
      require_verified(m);
      auto w = weight_of(m);
      for (int i : {1, 2}) CHECK(w.at(i) == RatFunc(1) + RatFunc(a) / U);
    }
  }
  CHECK_THROWS_AS(onedim_module(PairType::make(PairTag::C0, 4), Rat(1)), ConfigError);
}

TEST_CASE("w(u) is mu_n(-u) mu_n(u)") {
  std::vector<TwistedModule> ms{eval_sp2(PairTag::C0, -2), eval_sp2(PairTag::CI, rat(1, 3)), eval_so3(-1),
                                eval_so3(rat(-3, 2)),       eval_so4(PairTag::D0, -1, -2), eval_so4(PairTag::DIII, 1, -1),
                                onedim_module(PairType::make(PairTag::BIa, 5, 3, 2))};
  for (const auto& m : ms) {
    auto w = central_w(m);
    REQUIRE(w);
    auto mu = weight_of(m).at(m.pair.n());
    CHECK(*w == mu.substitute(-1, 0) * mu);
  }
}

TEST_CASE("corrupted module fails with a located witness") {
  auto m = eval_so3(-1);
  auto bad = m;
  size_t r = bad.S.flat({1, 1}), c = 0;
  while (c < bad.S.dim() && bad.S.at(r, c).is_const()) ++c;
  REQUIRE(c < bad.S.dim());
  bad.S.set(r, c, bad.S.at(r, c) * RatFunc(2));
  Report rep = verify_twisted(bad);
  CHECK_FALSE(rep.pass());
  bool located = false;
  for (const auto& it : rep.items)
    if (!it.pass && !it.witnesses.empty()) located = true;
  CHECK(located);
}

TEST_CASE("Olshanskii modules and the Sklyanin determinant") {
  auto triv = ols_minus(0);
  CHECK(triv.S == RFLabeled::identity(triv.S.legs()));
  for (int sign : {1, -1}) {
    auto t = sign > 0 ? ols_plus(0) : ols_minus(0);
    auto sd = olshanskii_sdet(t);
    CHECK(sd.first == RFLabeled::identity(sd.first.legs(), lin(2, 1) / lin(2, sign)));
  }
  for (int m = 0; m <= 4; ++m) {
    auto o = ols_minus(m);
    CHECK(verify_olshanskii(o).pass());
    auto sd = olshanskii_sdet(o);
    CHECK(sd.agree.pass);
    CHECK(sd.scalar.pass);
  }
  for (Rat c : {Rat(0), rat(1, 2), Rat(-3)}) {
    auto o = ols_plus(c);
    CHECK(verify_olshanskii(o).pass());
    auto sd = olshanskii_sdet(o);
    CHECK(sd.agree.pass);
    CHECK(sd.scalar.pass);
  }
  CHECK_THROWS_AS(olshanskii_eval(1, lie_module(LieAlgebra::sp2, {-1})), ConfigError);
}

TEST_CASE("bridges reproduce the evaluation modules") {
  for (int m = 0; m <= 4; ++m) {
    auto b = bridge_so3(ols_minus(m));
    require_verified(b);
    CHECK(b.S == eval_so3(Rat(-m, 2)).S);
    auto c0 = bridge_sp2(PairTag::C0, ols_minus(m));
    require_verified(c0);
    CHECK(c0.S == eval_sp2(PairTag::C0, Rat(-m)).S);
  }
  CHECK(bridge_sp2(PairTag::C0, ols_minus(0)).S == RFLabeled::identity({IndexSet::of_size(2), IndexSet::plain(1)}));
  for (Rat c : {Rat(0), rat(1, 2), Rat(-3)}) {
    auto ci = bridge_sp2(PairTag::CI, ols_plus(c));
    require_verified(ci);
    CHECK(ci.S == eval_sp2(PairTag::CI, c).S);
    for (int m = 0; m <= 2; ++m) {
      auto d3 = bridge_so4(PairTag::DIII, ols_plus(c), ols_minus(m));
      require_verified(d3);
      auto w = weight_of(d3);
      auto e = weight_of(eval_so4(PairTag::DIII, (c + m) / 2, (c - m) / 2));
      CHECK(w.mu == e.mu);
    }
  }
  for (int k = 0; k <= 2; ++k)
    for (int m = 0; m <= 2; ++m) {
      auto d0 = bridge_so4(PairTag::D0, ols_minus(k), ols_minus(m));
      require_verified(d0);
      auto w = weight_of(d0);
      auto e = weight_of(eval_so4(PairTag::D0, Rat(m - k, 2), Rat(-m - k, 2)));
      CHECK(w.mu == e.mu);
    }
  CHECK_THROWS_AS(bridge_so3(ols_plus(0)), ConfigError);
}

TEST_CASE("vector evaluation modules of X(g_N)") {
  for (int N : {3, 4, 5, 6})
    for (Family f : {Family::Orthogonal, Family::Symplectic}) {
      if (f == Family::Symplectic && N % 2) continue;
      auto x = vector_eval_X(N, f, rat(1, 3));
      CHECK(check_RTT(x).pass);
      for (size_t i = 0; i < x.T.dim(); ++i)
        for (const auto& [j, t] : x.T.row(i)) CHECK(t.at_infinity() == (i == j ? 1 : 0));
      CHECK(x_highest_weight(x));
    }
}

TEST_CASE("tensor products: highest weights") {
  for (const auto& P : tensor_pairs()) {
    INFO(P.name());
    auto x = vector_eval_X(P.N(), P.family(), rat(1, 3));
    auto lam = x_highest_weight(x);
    REQUIRE(lam);
    auto lambda = [&](int i) { return (*lam)[P.index().pos(i)]; };
    auto v = onedim_module(P);
    auto m = tensor_twisted(x, v);
    require_verified(m);
    auto hw = highest_weight_extract(m);
    REQUIRE(hw.found);
    CHECK(check_negative_weights(m, hw).pass);
    Rat h = P.kappa() / 2;
    auto vw = weight_of(v);
    int k = P.bold_k(), ell = P.ell();
    for (int i : P.weight_labels()) {
      RatFunc ll = lambda(i).substitute(1, -h) * lambda(-i).substitute(-1, h);
      CHECK(tilde(hw.weight, i) == tilde(vw, i) * ll);
      RatFunc rest;
      if (!P.second_kind()) {
        rest = RatFunc(-P.bracket_pm()) * (i > k ? lin(2, 0) : lin(-2, 2 * ell));
      } else {
        Rat c = P.c();
        RatFunc num = i > k ? lin(P.bracket_pm() * c, 1) : RatFunc(1) + RatFunc(P.bracket_pm() * c) * lin(-1, ell);
        rest = num / lin(-c, 1) * lin(2, 0);
      }
      CHECK(tilde(hw.weight, i) == rest * ll);
    }
  }
}

TEST_CASE("tensor product with an evaluation module") {
  auto v = eval_sp2(PairTag::C0, -1);
  auto x = vector_eval_X(2, Family::Symplectic, rat(1, 2));
  auto m = tensor_twisted(x, v);
  require_verified(m);
  auto hw = highest_weight_extract(m);
  REQUIRE(hw.found);
  CHECK(check_negative_weights(m, hw).pass);
  auto wx = central_w(tensor_twisted(x, onedim_module(v.pair)));
  REQUIRE(wx);
  CHECK(central_w(m) == *wx * *central_w(v));
  CHECK(tilde(hw.weight, 1) == tilde(weight_of(v), 1) * (*x_highest_weight(x))[1].substitute(1, -1) *
                                   (*x_highest_weight(x))[0].substitute(-1, 1));
}

TEST_CASE("negative weights on evaluation modules") {
  std::vector<TwistedModule> ms{eval_sp2(PairTag::C0, -2), eval_so3(-1), eval_so4(PairTag::D0, -1, -2),
                                eval_so4(PairTag::DIII, rat(1, 3), rat(-5, 3))};
  for (const auto& m : ms) {
    auto hw = highest_weight_extract(m);
    REQUIRE(hw.found);
    CHECK(check_negative_weights(m, hw).pass);
    auto bad = hw;
    bad.negative[0] += RatFunc(1) / U;
    CHECK_FALSE(check_negative_weights(m, bad).pass);
  }
}

TEST_CASE("V+ restriction lowers the rank") {
  for (auto tag : {PairTag::CI, PairTag::DIII, PairTag::C0, PairTag::D0, PairTag::B0}) {
    PairType P = PairType::make(tag, tag == PairTag::B0 ? 5 : 4);
    INFO(P.name());
    auto x = vector_eval_X(P.N(), P.family(), rat(1, 3));
    for (const auto& v : {onedim_module(P), tensor_twisted(x, onedim_module(P))}) {
      auto hw = highest_weight_extract(v);
      REQUIRE(hw.found);
      auto res = restrict_Vplus(v);
      INFO(res.report.text());
      CHECK(res.report.pass());
      REQUIRE(res.module);
      CHECK(res.module->pair.N() == P.N() - 2);
      auto w2 = weight_of(*res.module);
      RatFunc h = vplus_h(P);
      int n = P.n();
      RatFunc mun = hw.weight.at(n).substitute(1, rat(1, 2));
      for (int i : res.module->pair.weight_labels())
        CHECK(w2.at(i) == h * (hw.weight.at(i).substitute(1, rat(1, 2)) + mun / lin(2, 0)));
    }
  }
  // one-dimensional input: the result is the lower one-dimensional module up to h(u)
  PairType P = PairType::make(PairTag::C0, 6);
  auto res = restrict_Vplus(onedim_module(P));
  REQUIRE(res.module);
  CHECK(res.module->d == 1);
  CHECK(vplus_h(PairType::make(PairTag::CI, 4)) == RatFunc(1));
  CHECK_THROWS_AS(vplus_h(PairType::make(PairTag::CII, 4, 2, 2)), ConfigError);
}

TEST_CASE("V^J restriction") {
  for (const auto& m : {eval_so4(PairTag::DIII, 1, -1), eval_so4(PairTag::D0, -1, -2), eval_so3(-1),
                        onedim_module(PairType::make(PairTag::BIb, 5, 4, 1))}) {
    auto hw = highest_weight_extract(m);
    REQUIRE(hw.found);
    auto vj = restrict_VJ(m);
    INFO(vj.report.text());
    CHECK(vj.report.pass());
    // the highest weight vector lies in V^J
    std::vector<QMat> ops;
    for (int i = 1; i <= m.pair.n(); ++i)
      for (int j = 1; j <= m.pair.n(); ++j) {
        auto c = coefficient_matrices({m.s(-i, j)});
        ops.insert(ops.end(), c.begin(), c.end());
      }
    for (const auto& A : ops) {
      std::vector<Rat> y(A.rows());
      for (size_t r = 0; r < A.rows(); ++r)
        for (size_t c = 0; c < A.cols(); ++c) y[r] += A(r, c) * hw.vector[c];
      for (const auto& e : y) CHECK(sgn(e) == 0);
    }
  }
  auto one = onedim_module(PairType::make(PairTag::BIb, 5, 4, 1));
  auto vj = restrict_VJ(one);
  RFLabeled K = build_K(one.pair);
  for (int i = 1; i <= 2; ++i) CHECK(vj.B.at({i, 1}, {i, 1}) == K.at(i, i) * RatFunc(-1));
}

TEST_CASE("coefficient matrices and restriction helper") {
  RFLabeled op(IndexSet::plain(2));
  op.set(size_t{0}, size_t{1}, RatFunc(1) / U);
  op.set(size_t{1}, size_t{1}, lin(1, 2) / lin(1, -1));
  auto cs = coefficient_matrices({op});
  auto ker = joint_kernel(cs, 2);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<Rat>{1, 0});
  auto r = restrict_to(op, ker);
  REQUIRE(r);
  CHECK(r->at(size_t{0}, size_t{0}).is_zero());
  CHECK_FALSE(restrict_to(op, {{0, 1}}));
}
