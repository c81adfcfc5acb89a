#include "twy/rk.hpp"

#include <sstream>

namespace twy {

namespace {

std::string label_str(const std::vector<int>& l) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < l.size(); ++k) os << (k ? "," : "") << l[k];
  os << ")";
  return os.str();
}

template <class R, class F>
void collect_witnesses(const LabeledMatrix<R>& diff, IdentityReport& rep, F fmt) {
  for (size_t i = 0; i < diff.dim(); ++i)
    for (const auto& [j, x] : diff.row(i))
      rep.fail(label_str(diff.unflat(i)) + "," + label_str(diff.unflat(j)) + ": " + fmt(x));
}

RatFunc lin(const Rat& a, const Rat& b) { return RatFunc(Poly::linear(a, b)); }

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "PASS " : "FAIL ") << it.name;
    if (!it.detail.empty()) os << "  [" << it.detail << "]";
    os << "\n";
    for (const auto& w : it.witnesses) os << "    witness " << w << "\n";
  }
  return os.str();
}

RFLabeled build_R(int N, RFamily fam, Family theta_family, std::optional<Rat> kappa_override) {
  if (N < 2) throw ConfigError("R-matrix needs N >= 2");
  IndexSet s = IndexSet::of_size(N);
  RFLabeled R = RFLabeled::identity({s, s});
  RatFunc inv_u = RatFunc(1) / RatFunc::u();
  R -= op_P<RatFunc>(s) * inv_u;
  if (fam == RFamily::gN) {
    if (theta_family == Family::Symplectic && N % 2)
      throw ConfigError("symplectic R-matrix needs even N");
    Rat kappa = Rat(N, 2);
    kappa.canonicalize();
    kappa += theta_family == Family::Orthogonal ? -1 : 1;
    if (kappa_override) kappa = *kappa_override;
    R += op_Q<RatFunc>(s, theta_family) * (RatFunc(1) / lin(1, -kappa));
  }
  return R;
}

RFLabeled build_R(const PairType& pair) {
  if (pair.is_typeA()) {
    IndexSet s = IndexSet::plain(pair.N());
    return RFLabeled::identity({s, s}) - op_P<RatFunc>(s) * (RatFunc(1) / RatFunc::u());
  }
  return build_R(pair.N(), RFamily::gN, pair.family());
}

LabeledMatrix<Rat> build_G(const PairType& pair) {
  IndexSet s = pair.index();
  LabeledMatrix<Rat> G(s);
  for (int l : s.labels()) G.set(l, l, Rat(pair.g(l)));
  return G;
}

RFLabeled to_ratfunc(const LabeledMatrix<Rat>& m) {
  return m.map([](const Rat& x) { return RatFunc(x); });
}

RFLabeled build_K(const PairType& pair) {
  RFLabeled G = to_ratfunc(build_G(pair));
  if (!pair.second_kind()) return G;
  Rat c = pair.c();
  RFLabeled I = RFLabeled::identity(G.legs());
  RatFunc cu = lin(c, 0);
  RFLabeled K = I - G * cu;
  return K * (RatFunc(1) / lin(-c, 1));
}

RFLabeled build_K_oneparam(const PairType& pair, const Rat& a) {
  if (!pair.is_CI_DIII()) throw ConfigError("one-parameter K exists only for CI and DIII");
  RFLabeled G = to_ratfunc(build_G(pair));
  return G + RFLabeled::identity(G.legs()) * RatFunc(Poly(a), Poly::u());
}

RatFunc trace(const RFLabeled& m) {
  RatFunc t;
  for (size_t i = 0; i < m.dim(); ++i) t += m.at(i, i);
  return t;
}

RFLabeled substitute(const RFLabeled& m, const Rat& a, const Rat& b) {
  return m.map([&](const RatFunc& f) { return f.substitute(a, b); });
}

ClearedMatrix clear_denominators(const RFLabeled& m) {
  Poly den(1);
  for (size_t i = 0; i < m.dim(); ++i)
    for (const auto& [j, x] : m.row(i)) {
      if (x.den().deg() == 0) continue;
      Poly g = Poly::gcd(den, x.den());
      den = Poly::divmod(den * x.den(), g).first.monic();
    }
  LabeledMatrix<Poly> hat(m.legs());
  for (size_t i = 0; i < m.dim(); ++i)
    for (const auto& [j, x] : m.row(i)) hat.set(i, j, x.num() * Poly::divmod(den, x.den()).first);
  return {den, hat};
}

BiLabeled lift(const LabeledMatrix<Poly>& m, const Rat& alpha, const Rat& beta, const Rat& gamma) {
  return m.map([&](const Poly& p) { return BiPoly::from_poly(p, alpha, beta, gamma); });
}

IdentityReport check_YBE(const RFLabeled& R) {
  IdentityReport rep{"YBE"};
  if (R.legs().size() != 2) throw MathError("check_YBE expects a two-leg operator");
  auto c = clear_denominators(R);
  BiLabeled R12 = leg_embed(lift(c.hat, 1, 0), {0, 1}, 3);
  BiLabeled R13 = leg_embed(lift(c.hat, 1, 1), {0, 2}, 3);
  BiLabeled R23 = leg_embed(lift(c.hat, 0, 1), {1, 2}, 3);
  BiLabeled diff = R12 * R13 * R23 - R23 * R13 * R12;
  BiPoly scale = BiPoly::from_poly(c.den, 1, 0) * BiPoly::from_poly(c.den, 1, 1) *
                 BiPoly::from_poly(c.den, 0, 1);
  collect_witnesses(diff, rep, [&](const BiPoly& x) { return BiRatFunc(x, scale).str(); });
  rep.detail = "N=" + std::to_string(R.legs()[0].N()) + ", cleared by " + c.den.str();
  return rep;
}

IdentityReport check_RE(const RFLabeled& R, const RFLabeled& K) {
  IdentityReport rep{"RE"};
  auto cr = clear_denominators(R);
  auto ck = clear_denominators(K);
  BiLabeled Rm = lift(cr.hat, 1, -1), Rp = lift(cr.hat, 1, 1);
  BiLabeled K1 = leg_embed(lift(ck.hat, 1, 0), 1, 2);
  BiLabeled K2 = leg_embed(lift(ck.hat, 0, 1), 2, 2);
  BiLabeled diff = Rm * K1 * Rp * K2 - K2 * Rp * K1 * Rm;
  collect_witnesses(diff, rep, [](const BiPoly& x) { return x.str(); });
  return rep;
}

IdentityReport check_twisted_RE(const RFLabeled& R, const RFLabeled& K, Family f) {
  IdentityReport rep{"twisted RE"};
  auto cr = clear_denominators(R);
  auto crt = clear_denominators(partial_transpose(R, 1, f));
  auto ck = clear_denominators(K);
  BiLabeled Rm = lift(cr.hat, 1, -1), Rt = lift(crt.hat, -1, -1);
  BiLabeled K1 = leg_embed(lift(ck.hat, 1, 0), 1, 2);
  BiLabeled K2 = leg_embed(lift(ck.hat, 0, 1), 2, 2);
  BiLabeled diff = Rm * K1 * Rt * K2 - K2 * Rt * K1 * Rm;
  collect_witnesses(diff, rep, [](const BiPoly& x) { return x.str(); });
  return rep;
}

IdentityReport check_unitarity_R(const RFLabeled& R) {
  IdentityReport rep{"R(u)R(-u) = (1-u^-2) I"};
  RatFunc f = RatFunc(1) - RatFunc(1) / RatFunc(Poly::monomial(2));
  RFLabeled diff = R * substitute(R, -1, 0) - RFLabeled::identity(R.legs(), f);
  collect_witnesses(diff, rep, [](const RatFunc& x) { return x.str(); });
  return rep;
}

IdentityReport check_unitarity_K(const RFLabeled& K) {
  IdentityReport rep{"K(u)K(-u) = I"};
  RFLabeled diff = K * substitute(K, -1, 0) - RFLabeled::identity(K.legs());
  collect_witnesses(diff, rep, [](const RatFunc& x) { return x.str(); });
  return rep;
}

RatFunc compute_p(const RFLabeled& K, const PairType& pair) {
  if (pair.is_typeA()) throw ConfigError("p(u) is not defined for type A");
  Rat kappa = pair.kappa();
  return RatFunc(pair.paren_pm()) - RatFunc(pair.pm()) / lin(2, -kappa) +
         trace(K) / lin(2, -2 * kappa);
}

IdentityReport check_symmetry(const RFLabeled& K, const PairType& pair) {
  if (pair.is_typeA()) throw ConfigError("symmetry relation is not defined for type A");
  IdentityReport rep{"symmetry"};
  Rat kappa = pair.kappa();
  Family f = pair.family();
  RatFunc trG = trace(build_K(pair));
  RatFunc trK = trace(K);
  RFLabeled Kr = substitute(K, -1, kappa);
  RatFunc a = RatFunc(1) / lin(2, -kappa), b = RatFunc(1) / lin(2, -2 * kappa);
  RFLabeled rhs = Kr * RatFunc(pair.paren_pm()) + (K - Kr) * (a * RatFunc(pair.pm())) +
                  (Kr * trG - RFLabeled::identity(K.legs(), trK)) * b;
  RFLabeled diff = transpose_t(K, f) - rhs;
  collect_witnesses(diff, rep, [](const RatFunc& x) { return x.str(); });
  return rep;
}

IdentityReport check_p_identity(const RFLabeled& K, const PairType& pair) {
  IdentityReport rep{"p(u)p(kappa-u) = 1 - (2u-kappa)^-2"};
  Rat kappa = pair.kappa();
  RatFunc p = compute_p(K, pair);
  RatFunc d = p * p.substitute(-1, kappa) - RatFunc(1) + pow(lin(2, -kappa), -2);
  if (!d.is_zero()) rep.fail("residual " + d.str());
  rep.detail = "p(u) = " + p.str();
  return rep;
}

}  // namespace twy
