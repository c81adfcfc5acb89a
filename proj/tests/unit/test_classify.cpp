#include <random>

#include "doctest.h"
#include "twy/classify.hpp"
#include "twy/reps.hpp"

using namespace twy;

namespace {

RatFunc lin(const Rat& a, const Rat& b) { return RatFunc(Poly::linear(a, b)); }
const RatFunc U = RatFunc::u();

WeightTuple weight_of(const TwistedModule& m) {
  auto hw = highest_weight_extract(m);
  REQUIRE(hw.found);
  return hw.weight;
}

WeightTuple make_weight(PairType p, std::vector<RatFunc> mu) { return WeightTuple{std::move(p), std::move(mu)}; }

RatFunc eigenvalue(const LabeledMatrix<RatFunc>& op, const std::vector<Rat>& v) {
  std::vector<RatFunc> w(op.dim());
  for (size_t i = 0; i < op.dim(); ++i)
    for (const auto& [j, x] : op.row(i)) w[i] += x * RatFunc(v[j]);
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return w[i] / RatFunc(v[i]);
  throw MathError("zero vector");
}

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}
  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  Rat rat_in(long lo, long hi, long den) { return rat(small(lo * den, hi * den), den); }
  // monic, rational roots in [-3, 3], degree <= maxdeg
  Poly rooted(int maxdeg) {
    Poly q(1);
    int d = static_cast<int>(small(0, maxdeg));
    for (int k = 0; k < d; ++k) q *= Poly::linear(1, -rat_in(-3, 3, 2));
    return q;
  }
};

// Random certificate together with the factors used to build it.
std::pair<Certificate, std::vector<Poly>> random_cert(Gen& g, const PairType& pair) {
  Certificate c{pair, {}, std::nullopt};
  std::vector<Poly> Q;
  for (int i = 1; i <= pair.n(); ++i) {
    Q.push_back(g.rooted(2));
    c.P.push_back(reflect_product(Q.back(), drinfeld_center(pair, i)));
  }
  if (pair.is_CI_DIII()) {
    Rat gam;
    do gam = g.rat_in(-4, 4, 3);
    while (is_zero(c.P[0].eval(gam)));
    c.gamma = gam;
  }
  return {c, Q};
}

std::vector<PairType> full_pairs() {
  return {PairType::make(PairTag::CI, 2),  PairType::make(PairTag::C0, 2),  PairType::make(PairTag::B0, 3),
          PairType::make(PairTag::CI, 4),  PairType::make(PairTag::C0, 4),  PairType::make(PairTag::DIII, 4),
          PairType::make(PairTag::D0, 4),  PairType::make(PairTag::B0, 5),  PairType::make(PairTag::CI, 6),
          PairType::make(PairTag::C0, 6),  PairType::make(PairTag::DIII, 6), PairType::make(PairTag::D0, 6),
          PairType::make(PairTag::B0, 7)};
}

}  // namespace

TEST_CASE("tilde examples and bijection") {
  auto ci = PairType::make(PairTag::CI, 2);
  RatFunc m = RatFunc(1) + RatFunc(3) / U;
  CHECK(tilde(make_weight(ci, {m})).mu[0] == lin(2, 0) * m);
  for (auto tag : {PairTag::B0, PairTag::C0, PairTag::D0}) {
    auto p = PairType::make(tag, 6 + (tag == PairTag::B0));
    auto t = tilde(make_weight(p, std::vector<RatFunc>(p.weight_labels().size(), RatFunc(1))));
    for (const auto& x : t.mu) CHECK(x == lin(2, 0));
  }
  Gen g(21);
  for (int k = 0; k < 20; ++k) {
    auto p = full_pairs()[g.small(0, 12)];
    WeightTuple w{p, {}};
    for (size_t i = 0; i < p.weight_labels().size(); ++i)
      w.mu.push_back(RatFunc(1) + RatFunc(g.rat_in(-3, 3, 2)) / lin(1, g.rat_in(-3, 3, 3)));
    CHECK(untilde(tilde(w)).mu == w.mu);
  }
}

TEST_CASE("check_nontrivial examples") {
  auto d0 = PairType::make(PairTag::D0, 4);
  auto bad = check_nontrivial(make_weight(d0, {RatFunc(1) + RatFunc(1) / U, RatFunc(1)}));
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.witnesses.empty());
  CHECK(bad.witnesses[0].rfind("i=1", 0) == 0);

  auto d3 = PairType::make(PairTag::DIII, 4);
  RatFunc q = U * lin(1, -1);
  WeightTuple ev{d3, {RatFunc(1) + RatFunc(2) / U + RatFunc(2) / q, RatFunc(1) - RatFunc(2) / q}};
  CHECK(check_nontrivial(ev).pass);
  CHECK(ev.mu == weight_of(eval_so4(PairTag::DIII, 1, 0)).mu);

  // mu(inf) must be g_ii
  CHECK_FALSE(check_nontrivial(make_weight(d0, {RatFunc(2), RatFunc(1)})).pass);
  // type B: mu_0 relation
  auto b0 = PairType::make(PairTag::B0, 3);
  auto r = check_nontrivial(make_weight(b0, {RatFunc(1) + RatFunc(1) / U, RatFunc(1)}));
  CHECK_FALSE(r.pass);
}

TEST_CASE("type B: p0(u)/p(u) = g(kappa-u)/g(u)") {
  for (const auto& P : all_pairs(7)) {
    if (!P.is_typeB()) continue;
    INFO(P.name());
    Rat kappa = P.kappa();
    RatFunc p = compute_p(build_K(P), P);
    RatFunc p0 = RatFunc(1) - RatFunc(1) / lin(2, -kappa) + RatFunc(P.N()) / lin(2, -2 * kappa);
    RatFunc g = mu0_g(P);
    CHECK(p0 / p == g.substitute(-1, kappa) / g);
  }
}

TEST_CASE("solve_P examples") {
  auto r = solve_P(RatFunc(1), 1, Rat(3));
  CHECK(r.found());
  CHECK(r.P == Poly(1));
  Rat a = rat(2, 3);
  r = solve_P(lin(1, 1 - a) / lin(1, -a), 1, std::nullopt);
  CHECK(r.P == Poly::linear(1, -a));
  // a monic degree-one polynomial is never symmetric
  CHECK(solve_P(lin(1, 1 - a) / lin(1, -a), 1, Rat(0)).status == SolveStatus::None);
  RatFunc ratio = lin(1, 1 - a) / lin(1, -a - 1);
  Poly expect = Poly::linear(1, -a) * Poly::linear(1, -a - 1);
  r = solve_P(ratio, 1, 2 * a + 1);
  CHECK(r.found());
  CHECK(r.P == expect);
  CHECK(RatFunc(expect.compose_affine(1, 1), expect) == ratio);
  CHECK(solve_P(ratio, 1, 2 * a).status == SolveStatus::None);
  // degree beyond deg_max is inconclusive, not "none"
  Poly big(1);
  for (int k = 0; k < 5; ++k) big *= Poly::linear(1, k);
  CHECK(solve_P(RatFunc(big.compose_affine(1, 1), big), 1, std::nullopt, 3).status == SolveStatus::Inconclusive);
  CHECK(solve_P(RatFunc(big.compose_affine(1, 1), big), 1, std::nullopt, 5).P == big);
  // wrong limit at infinity
  CHECK(solve_P(RatFunc(2), 1, std::nullopt).status == SolveStatus::None);
}

TEST_CASE("property: solve_P uniqueness across degrees") {
  Gen g(5);
  for (int t = 0; t < 40; ++t) {
    Poly P(1);
    int d = static_cast<int>(g.small(0, 4));
    for (int k = 0; k < d; ++k) P *= Poly::linear(1, -g.rat_in(-3, 3, 2));
    Rat s = g.small(0, 1) ? Rat(1) : rat(1, 2);
    RatFunc ratio(P.compose_affine(1, s), P);
    auto r = solve_P(ratio, s, std::nullopt);
    REQUIRE(r.found());
    CHECK(r.P == P);
    for (int e = 0; e <= 8; ++e) {
      auto other = solve_P_at_degree(ratio, s, std::nullopt, e);
      if (e == d)
        CHECK(other == P);
      else
        CHECK_FALSE(other.has_value());
    }
  }
}

TEST_CASE("solve_P_gamma examples") {
  Rat kappa(2), gam = rat(7, 3);
  RatFunc f(Poly::linear(-1, gam), Poly::linear(1, gam - kappa));
  auto r = solve_P_gamma(f, 2, kappa, Rat(4));
  REQUIRE(r.found());
  CHECK(r.P == Poly(1));
  CHECK(r.gamma == gam);
  // CI evaluation weight 1 + 2 mu / u: gamma = 2 + 2 mu
  for (Rat mu : {Rat(0), rat(3, 2), Rat(-5)}) {
    auto w = weight_of(eval_sp2(PairTag::CI, mu));
    RatFunc t = tilde(w).mu[0];
    CHECK(t == lin(2, 4 * mu));
    auto s = solve_P_gamma(t.substitute(-1, kappa) / t, 2, kappa, Rat(4));
    REQUIRE(s.found());
    CHECK(s.gamma == 2 + 2 * mu);
    CHECK(s.P == Poly(1));
  }
  // pole structure that matches no candidate
  auto none = solve_P_gamma(lin(1, 5) / lin(1, -3), 2, kappa, Rat(4));
  CHECK(none.status == SolveStatus::None);
  CHECK_FALSE(none.note.empty());
  // irreducible quadratic in the numerator: never a definite answer
  RatFunc irr = -RatFunc(Poly({Rat(-2), Rat(0), Rat(1)})) / RatFunc(Poly({Rat(1), Rat(0), Rat(1)}));
  CHECK(solve_P_gamma(irr, 2, kappa, Rat(4)).status == SolveStatus::Inconclusive);
}

TEST_CASE("classify: evaluation and one-dimensional modules") {
  for (Rat mu : {Rat(0), rat(-1, 2), Rat(-1), rat(-3, 2), Rat(-2)}) {
    auto v = classify(weight_of(eval_so3(mu)));
    CHECK(v.finite_dim == FiniteDim::Yes);
    REQUIRE(v.certificate);
    const Poly& P1 = v.certificate->P[0];
    CHECK(P1 == P1.compose_affine(-1, rat(3, 2)));
    CHECK(P1.deg() == -4 * mu);
  }
  for (int m = 0; m <= 3; ++m) {
    auto v = classify(weight_of(eval_sp2(PairTag::C0, Rat(-m))));
    REQUIRE(v.certificate);
    CHECK(check_certificate(*v.certificate).pass);
    CHECK(v.certificate->P[0].deg() == 2 * m);
  }
  std::vector<std::pair<Rat, Rat>> gl2{{0, 0}, {rat(1, 3), rat(-5, 3)}, {2, 1}, {rat(-1, 2), rat(-1, 2)}};
  for (auto [m1, m2] : gl2) {
    auto w = weight_of(eval_so4(PairTag::DIII, m1, m2));
    auto v = classify(w);
    REQUIRE(v.certificate);
    const auto& c = *v.certificate;
    CHECK(check_certificate(c).pass);
    // residuals of the defining relations vanish
    auto t = tilde(w);
    RatFunc P1(c.P[0]), P2(c.P[1]);
    CHECK(t.at(1) / t.at(2) == P2.substitute(1, 1) / P2);
    RatFunc fg(Poly::linear(-1, *c.gamma), Poly::linear(1, *c.gamma - 1));
    CHECK(t.at(1).substitute(-1, 1) / t.at(2) == P1.substitute(1, 1) / P1 * fg);
  }
  std::vector<std::pair<Rat, Rat>> so4{{0, 0}, {0, -1}, {-1, -2}, {rat(-1, 2), rat(-3, 2)}, {-1, -1}};
  for (auto [m1, m2] : so4) {
    auto v = classify(weight_of(eval_so4(PairTag::D0, m1, m2)));
    REQUIRE(v.certificate);
    CHECK(check_certificate(*v.certificate).pass);
  }
  for (const auto& P : all_pairs(6)) {
    if (P.is_typeA()) continue;
    INFO(P.name());
    auto v = classify(weight_of(onedim_module(P)));
    CHECK(v.nontrivial);
    if (P.is_BDI_CII()) {
      CHECK(v.finite_dim == FiniteDim::NecessaryPass);
      CHECK_FALSE(v.certificate);
    } else {
      REQUIRE(v.certificate);
      for (const auto& p : v.certificate->P) CHECK(p == Poly(1));
    }
  }
  auto ci = classify(weight_of(onedim_module(PairType::make(PairTag::CI, 4), rat(2, 5))));
  REQUIRE(ci.certificate);
  CHECK(ci.certificate->gamma == PairType::make(PairTag::CI, 4).kappa() + rat(2, 5));
}

TEST_CASE("classify: tensor product modules") {
  std::vector<PairType> pairs{PairType::make(PairTag::CI, 4),  PairType::make(PairTag::DIII, 4),
                              PairType::make(PairTag::C0, 4),  PairType::make(PairTag::D0, 4),
                              PairType::make(PairTag::B0, 3),  PairType::make(PairTag::B0, 5),
                              PairType::make(PairTag::BIa, 5, 3, 2), PairType::make(PairTag::CII, 4, 2, 2)};
  for (const auto& P : pairs) {
    INFO(P.name());
    auto m = tensor_twisted(vector_eval_X(P.N(), P.family(), rat(1, 3)), onedim_module(P));
    auto v = classify(weight_of(m));
    CHECK(v.nontrivial);
    if (P.is_BDI_CII()) {
      CHECK(v.finite_dim == FiniteDim::NecessaryPass);
    } else {
      REQUIRE(v.certificate);
      CHECK(check_certificate(*v.certificate).pass);
    }
  }
}

TEST_CASE("classify: negative controls") {
  auto d0 = PairType::make(PairTag::D0, 4);
  auto v = classify(make_weight(d0, {RatFunc(1) + RatFunc(1) / U, RatFunc(1)}));
  CHECK_FALSE(v.nontrivial);
  CHECK_FALSE(v.certificate);
  // CI, n = 1: tilde mu = 2(u^2 - 2)/u has irrational pole structure
  auto ci = PairType::make(PairTag::CI, 2);
  RatFunc mu = RatFunc(Poly({Rat(-2), Rat(0), Rat(1)})) / RatFunc(Poly::monomial(2));
  v = classify(make_weight(ci, {mu}));
  CHECK(v.nontrivial);
  CHECK(v.finite_dim == FiniteDim::Inconclusive);
  CHECK_FALSE(v.certificate);
  // CI, n = 1, a rational weight with no certificate
  v = classify(make_weight(ci, {RatFunc(1) + RatFunc(1) / lin(1, 3)}));
  CHECK(v.finite_dim == FiniteDim::No);
  CHECK_FALSE(v.diagnostics.empty());
  // B0 eval at a positive weight: still rational, infinite-dimensional
  auto b0 = PairType::make(PairTag::B0, 3);
  RatFunc a = lin(1, rat(-3, 4)), b = lin(1, rat(-1, 4));
  Rat m(1);
  RatFunc mu1 = RatFunc(1) + (RatFunc(m * m) + lin(2, -1) * RatFunc(m)) / (a * b);
  RatFunc mu0 = RatFunc(1) + (RatFunc(m * m) * lin(-1, rat(-1, 4)) - RatFunc(m) * b) / (a * b * b);
  v = classify(make_weight(b0, {mu0, mu1}));
  CHECK(v.nontrivial);
  CHECK(v.finite_dim == FiniteDim::No);
  CHECK_THROWS_AS(classify(make_weight(PairType::make(PairTag::AIII, 3, 2, 1), {1, 1, 1})), ConfigError);
}

TEST_CASE("check_MR examples") {
  auto r = check_MR({RatFunc(1), RatFunc(1), RatFunc(1)}, 0);
  CHECK(r.nontrivial);
  CHECK(r.finite_dim == SolveStatus::Found);
  for (const auto& p : r.P) CHECK(p == Poly(1));
  // N = 2, q = 0, P_2 = -Q(u)Q(2-u), Q = u - a
  Rat a = rat(1, 3);
  Poly P2 = reflect_product(Poly::linear(1, -a), Rat(2));
  RatFunc t1 = lin(2, 0) * RatFunc(P2.compose_affine(1, 1), P2);
  RatFunc mu1 = (t1 - RatFunc(1)) / lin(2, -1);
  r = check_MR({mu1, RatFunc(1)}, 0);
  CHECK(r.nontrivial);
  REQUIRE(r.finite_dim == SolveStatus::Found);
  CHECK(r.P[0] == P2);
  // N = 2, q = 1: gamma with P_2(gamma) != 0
  Rat gam = rat(5, 2);
  RatFunc t1g = lin(2, 0) * RatFunc(Poly::linear(-1, gam), Poly::linear(1, gam - 1));
  r = check_MR({(t1g - RatFunc(1)) / lin(2, -1), RatFunc(1)}, 1);
  CHECK(r.nontrivial);
  REQUIRE(r.finite_dim == SolveStatus::Found);
  CHECK(r.gamma == gam);
  // mu_N(u) mu_N(-u) != 1
  CHECK_FALSE(check_MR({RatFunc(1), RatFunc(1) + RatFunc(1) / U}, 0).nontrivial);
}

TEST_CASE("mu_factorize_B0") {
  TruncSeries one = mu_factorize_B0(1, 1, 12);
  CHECK(one == TruncSeries::one(12));
  for (int m = 0; m <= 4; ++m) {
    auto ols = olshanskii_eval(-1, lie_module(LieAlgebra::sp2, {Rat(-m)}));
    auto br = bridge_so3(ols);
    auto hw = highest_weight_extract(br);
    REQUIRE(hw.found);
    TruncSeries mc = mu_factorize_B0(hw.weight.at(0), hw.weight.at(1), 12);
    RatFunc oracle = eigenvalue(block(ols.S, 1, 1), hw.vector);
    CHECK(mc == series_expand(oracle, 12));
  }
  CHECK_THROWS_AS(mu_factorize_B0(RatFunc(1) + RatFunc(1) / U, 1, 8), MathError);
}

TEST_CASE("extend_lambda and xgn_fd_check") {
  LambdaTuple ones{{0, 1}, {1, 1}, {2, 1}};
  auto full = extend_lambda(ones, 5, Family::Orthogonal);
  for (int i = -2; i <= 2; ++i) CHECK(full.at(i) == RatFunc(1));
  auto x = xgn_fd_check(full, 5, Family::Orthogonal);
  REQUIRE(x.status == SolveStatus::Found);
  for (const auto& p : x.P) CHECK(p == Poly(1));

  // N = 3, kappa = 1/2, n = 1
  RatFunc l0 = lin(1, 2) / lin(1, 1), l1 = lin(1, 3) / lin(1, 1);
  auto e3 = extend_lambda({{0, l0}, {1, l1}}, 3, Family::Orthogonal);
  Rat b = Rat(1) - rat(1, 2);
  CHECK(e3.at(-1) == l0.substitute(1, b) / l1.substitute(1, b) * l0);

  CHECK_THROWS_AS(extend_lambda({{1, 1}, {2, 1}}, 4, Family::Symplectic), ConfigError);

  // xgn: lambda_1/lambda_2 = (u+1-a)/(u-a) gives P_2 = u - a
  Rat a = rat(1, 2);
  LambdaTuple part{{1, lin(1, 1 - a) / lin(1, -a)}, {2, 1}};
  auto lc = extend_lambda(part, 4, Family::Symplectic, part.at(1), 1);
  auto xc = xgn_fd_check(lc, 4, Family::Symplectic);
  REQUIRE(xc.status == SolveStatus::Found);
  CHECK(xc.P[1] == Poly::linear(1, -a));
  CHECK(xc.P[0] == Poly(1));
  // type C, P_1 from lambda_{-1}/lambda_1 with shift 2
  Poly P1 = Poly::linear(1, -1) * Poly::linear(1, 3);
  LambdaTuple pc{{1, 1}, {2, 1}};
  auto lc2 = extend_lambda(pc, 4, Family::Symplectic, RatFunc(P1.compose_affine(1, 2), P1), 1);
  auto xc2 = xgn_fd_check(lc2, 4, Family::Symplectic);
  REQUIRE(xc2.status == SolveStatus::Found);
  CHECK(xc2.P[0] == P1);

  // the highest weight of the vector representation extends to itself
  for (auto [N, f] : {std::pair{4, Family::Symplectic}, std::pair{4, Family::Orthogonal},
                      std::pair{5, Family::Orthogonal}, std::pair{6, Family::Symplectic}}) {
    auto xm = vector_eval_X(N, f, rat(1, 3));
    auto lam = x_highest_weight(xm);
    REQUIRE(lam);
    auto labels = IndexSet::of_size(N).labels();
    LambdaTuple all;
    for (size_t k = 0; k < labels.size(); ++k) all[labels[k]] = (*lam)[k];
    CHECK(check_lambda_nontrivial(all, N, f).pass);
    LambdaTuple part2;
    for (int i = N % 2 ? 0 : 1; i <= N / 2; ++i) part2[i] = all.at(i);
    auto ext = N % 2 ? extend_lambda(part2, N, f) : extend_lambda(part2, N, f, all.at(-1), 1);
    CHECK(ext == all);
    CHECK(xgn_fd_check(all, N, f).status == SolveStatus::Found);
  }
}

TEST_CASE("construct_from_cert examples") {
  for (const auto& P : full_pairs()) {
    INFO(P.name());
    Certificate c{P, std::vector<Poly>(P.n(), Poly(1)), std::nullopt};
    if (P.is_CI_DIII()) c.gamma = P.kappa();
    auto w = construct_from_cert(c, std::vector<Poly>(P.n(), Poly(1)));
    CHECK(w.mu == weight_of(onedim_module(P)).mu);
    auto v = classify(w);
    REQUIRE(v.certificate);
    CHECK(*v.certificate == c);
  }
  auto ci = PairType::make(PairTag::CI, 2);
  Poly Q1 = Poly::linear(1, -1);
  Certificate c{ci, {reflect_product(Q1, 4)}, rat(1, 2)};
  auto v = classify(construct_from_cert(c, {Q1}));
  REQUIRE(v.certificate);
  CHECK(*v.certificate == c);

  auto d0 = PairType::make(PairTag::D0, 4);
  Poly Q2 = Poly::linear(1, rat(-3, 2));
  Certificate cd{d0, {Poly(1), reflect_product(Q2, 2)}, std::nullopt};
  v = classify(construct_from_cert(cd, {Poly(1), Q2}));
  REQUIRE(v.certificate);
  CHECK(*v.certificate == cd);

  CHECK_THROWS_AS(construct_from_cert(cd, {Poly(1), Poly::linear(1, 0)}), MathError);
  CHECK_THROWS_AS(construct_from_cert(Certificate{d0, {Poly(1), Poly(1)}, Rat(1)}, {Poly(1), Poly(1)}),
                  ConfigError);
}

TEST_CASE("property: classification round trip on random certificates") {
  Gen g(2024);
  auto pairs = full_pairs();
  for (int t = 0; t < 50; ++t) {
    const auto& P = pairs[g.small(0, static_cast<long>(pairs.size()) - 1)];
    auto [c, Q] = random_cert(g, P);
    INFO(P.name() << " t=" << t);
    auto w = construct_from_cert(c, Q);
    CHECK(check_nontrivial(w).pass);
    auto v = classify(w);
    REQUIRE(v.certificate);
    CHECK(*v.certificate == c);
  }
}
