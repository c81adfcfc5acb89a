#include <map>

#include "twy/reps.hpp"

namespace twy {

namespace {

RatFunc lin(const Rat& a, const Rat& b) { return RatFunc(Poly::linear(a, b)); }
RatFunc inv(const RatFunc& f) { return RatFunc(1) / f; }

LabeledMatrix<Rat> labeled(const QMat& x) {
  LabeledMatrix<Rat> m(IndexSet::plain(static_cast<int>(x.rows())));
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j) m.set(i, j, x(i, j));
  return m;
}

// 1 (x) x on {idx, V}
RFLabeled on_space(const IndexSet& idx, const QMat& x) {
  return to_ratfunc(kron(LabeledMatrix<Rat>::identity(idx), labeled(x)));
}

// sum E_ij (x) F_ij
RFLabeled lie_operator(const LieModule& m) {
  LabeledMatrix<Rat> out({m.index, IndexSet::plain(m.d)});
  for (const auto& [ij, A] : m.F)
    for (int a = 0; a < m.d; ++a)
      for (int b = 0; b < m.d; ++b)
        if (sgn(A(a, b)) != 0) out.set({ij.first, a + 1}, {ij.second, b + 1}, A(a, b));
  return to_ratfunc(out);
}

std::vector<Rat> unit_vector(int d, int pos) {
  std::vector<Rat> v(d);
  v[pos] = 1;
  return v;
}

PairType variant_pair(PairTag t) {
  switch (t) {
    case PairTag::C0:
    case PairTag::CI: return PairType::make(t, 2);
    case PairTag::B0: return PairType::make(t, 3);
    case PairTag::D0:
    case PairTag::DIII: return PairType::make(t, 4);
    default: throw ConfigError("no low-rank evaluation map for " + tag_name(t));
  }
}

LieAlgebra variant_algebra(PairTag t) {
  switch (t) {
    case PairTag::C0: return LieAlgebra::sp2;
    case PairTag::CI: return LieAlgebra::gl1;
    case PairTag::B0: return LieAlgebra::so3;
    case PairTag::D0: return LieAlgebra::so4;
    case PairTag::DIII: return LieAlgebra::gl2;
    default: throw ConfigError("no low-rank evaluation map for " + tag_name(t));
  }
}

void put_block(RFLabeled& S, int i, int j, const RFLabeled& op) {
  size_t d = op.dim();
  size_t pi = S.legs()[0].pos(i), pj = S.legs()[0].pos(j);
  for (size_t a = 0; a < d; ++a)
    for (const auto& [b, x] : op.row(a)) S.set(pi * d + a, pj * d + b, x);
}

}  // namespace

TwistedModule eval_from_lie(PairTag variant, const LieModule& lie) {
  PairType P = variant_pair(variant);
  if (lie.algebra != variant_algebra(variant))
    throw ConfigError(tag_name(variant) + " evaluation needs a " + lie_name(variant_algebra(variant)) +
                      " module, got " + lie_name(lie.algebra));
  IndexSet idx = P.index(), V = IndexSet::plain(lie.d);
  RFLabeled Fp = to_ratfunc(f_prime(lie, P.g_diag()));
  RFLabeled I = RFLabeled::identity({idx, V});
  RFLabeled G = kron(to_ratfunc(build_G(P)), RFLabeled::identity(V));
  RatFunc u = RatFunc::u();
  RFLabeled F2 = Fp * Fp;
  RFLabeled S;
  switch (variant) {
    case PairTag::C0: S = I + Fp * inv(lin(1, -2)); break;
    case PairTag::CI: S = G + Fp * inv(u); break;
    case PairTag::B0: {
      RatFunc a = lin(1, rat(-1, 4));
      RFLabeled Om = on_space(idx, lie.omega) * (lin(4, 1) / lin(4, 0));
      RFLabeled inner = Fp * inv(a) + (F2 - Fp * RatFunc(2) - Om * RatFunc(2)) * inv(RatFunc(2) * a * a);
      S = I + inner * (u / lin(1, rat(-3, 4)));
      break;
    }
    case PairTag::D0: {
      RatFunc a = lin(1, -1);
      RFLabeled Om = on_space(idx, lie.omega);
      S = I + Fp * inv(a) + (F2 - Fp * RatFunc(2) - Om * RatFunc(2)) * inv(RatFunc(2) * a * a);
      break;
    }
    case PairTag::DIII: {
      RFLabeled Z = on_space(idx, lie.z);
      S = G + Fp * inv(u) + G * (F2 - Z * RatFunc(2)) * inv(RatFunc(2) * u * lin(1, -1));
      break;
    }
    default: throw ConfigError("no low-rank evaluation map for " + tag_name(variant));
  }
  TwistedModule m{P, lie.d, S, "evaluation module " + tag_name(variant) + " from " + lie_name(lie.algebra), {}};
  m.note += " weight (";
  for (size_t k = 0; k < lie.weight.size(); ++k) m.note += (k ? "," : "") + to_string(lie.weight[k]);
  m.note += ")";
  m.hw_hint = unit_vector(lie.d, 0);
  return m;
}

TwistedModule eval_sp2(PairTag variant, const Rat& mu) {
  if (variant != PairTag::C0 && variant != PairTag::CI) throw ConfigError("eval_sp2 takes C0 or CI");
  return eval_from_lie(variant, lie_module(variant_algebra(variant), {mu}));
}

TwistedModule eval_so3(const Rat& mu) { return eval_from_lie(PairTag::B0, lie_module(LieAlgebra::so3, {mu})); }

TwistedModule eval_so4(PairTag variant, const Rat& mu1, const Rat& mu2) {
  if (variant != PairTag::D0 && variant != PairTag::DIII) throw ConfigError("eval_so4 takes D0 or DIII");
  return eval_from_lie(variant, lie_module(variant_algebra(variant), {mu1, mu2}));
}

TwistedModule onedim_module(const PairType& pair, std::optional<Rat> a) {
  if (a && !pair.is_CI_DIII()) throw ConfigError("the parameter a exists only for CI and DIII");
  RFLabeled K = a ? build_K_oneparam(pair, *a) : build_K(pair);
  TwistedModule m{pair, 1, kron(K, RFLabeled::identity(IndexSet::plain(1))), "", std::vector<Rat>{1}};
  m.note = "one-dimensional module S(u) = " + std::string(a ? "G + a/u, a = " + to_string(*a) : "G(u)");
  return m;
}

OlshanskiiModule olshanskii_eval(int sign, const LieModule& lie) {
  if (sign != 1 && sign != -1) throw ConfigError("Olshanskii sign must be +1 or -1");
  LieAlgebra want = sign > 0 ? LieAlgebra::so2 : LieAlgebra::sp2;
  if (lie.algebra != want)
    throw ConfigError(std::string("Y") + (sign > 0 ? "+" : "-") + "(2) evaluates through " + lie_name(want));
  RFLabeled F = lie_operator(lie);
  RFLabeled S = RFLabeled::identity(F.legs()) + F * inv(lin(1, rat(sign, 2)));
  return {sign, lie.d, S};
}

TwistedModule bridge_sp2(PairTag variant, const OlshanskiiModule& m) {
  int want = variant == PairTag::CI ? 1 : -1;
  if (variant != PairTag::C0 && variant != PairTag::CI) throw ConfigError("bridge_sp2 takes C0 or CI");
  if (m.sign != want) throw ConfigError(tag_name(variant) + " bridge needs the other Olshanskii sign");
  PairType P = variant_pair(variant);
  RFLabeled S = substitute(m.S, rat(1, 2), rat(-1, 2));
  if (variant == PairTag::CI) {
    RFLabeled K(P.index());
    K.set(-1, -1, RatFunc(-1));
    K.set(1, 1, RatFunc(1));
    S = S * kron(K, RFLabeled::identity(IndexSet::plain(m.d)));
  }
  return {P, m.d, S, "bridged from Y" + std::string(m.sign > 0 ? "+" : "-") + "(2)", {}};
}

TwistedModule bridge_so3(const OlshanskiiModule& m) {
  if (m.sign != -1) throw ConfigError("the so3 bridge needs a Y-(2) module");
  IndexSet i2 = IndexSet::of_size(2), V = IndexSet::plain(m.d);
  std::vector<IndexSet> legs{i2, i2, V};
  RFLabeled I2 = RFLabeled::identity({i2, i2});
  RFLabeled sym = (I2 + op_P<RatFunc>(i2)) * RatFunc(rat(1, 2));
  RFLabeled mid = I2 + op_Q<RatFunc>(i2, Family::Symplectic) * inv(lin(4, -1));
  RFLabeled M = leg_embed(sym, {0, 1}, legs) * leg_embed(substitute(m.S, 2, -1), {0, 2}, legs) *
                leg_embed(mid, {0, 1}, legs) * leg_embed(substitute(m.S, 2, 0), {1, 2}, legs);

  // images of e_k in the symmetric square, and the rows read off per label
  using Comp = std::vector<std::pair<std::pair<int, int>, Rat>>;
  std::map<int, Comp> w{{-1, {{{-1, -1}, 1}}}, {0, {{{-1, 1}, 1}, {{1, -1}, 1}}}, {1, {{{1, 1}, -2}}}};
  std::map<int, std::pair<std::pair<int, int>, Rat>> read{
      {-1, {{-1, -1}, 1}}, {0, {{-1, 1}, 1}}, {1, {{1, 1}, rat(-1, 2)}}};

  PairType P = variant_pair(PairTag::B0);
  RFLabeled S({P.index(), V});
  for (int i : {-1, 0, 1})
    for (int k : {-1, 0, 1}) {
      auto [r, scale] = read[i];
      for (int al = 1; al <= m.d; ++al)
        for (int be = 1; be <= m.d; ++be) {
          RatFunc x;
          for (const auto& [ab, c] : w[k]) x += M.at({r.first, r.second, al}, {ab.first, ab.second, be}) * RatFunc(c);
          S.set({i, al}, {k, be}, x * RatFunc(scale));
        }
    }
  return {P, m.d, S, "bridged from Y-(2)", {}};
}

TwistedModule bridge_so4(PairTag variant, const OlshanskiiModule& circ, const OlshanskiiModule& bullet) {
  if (variant != PairTag::D0 && variant != PairTag::DIII) throw ConfigError("bridge_so4 takes D0 or DIII");
  int want = variant == PairTag::DIII ? 1 : -1;
  if (circ.sign != want) throw ConfigError(tag_name(variant) + " bridge: first factor has the wrong sign");
  if (bullet.sign != -1) throw ConfigError("bridge_so4: second factor must be a Y-(2) module");
  PairType P = variant_pair(variant);
  IndexSet V = IndexSet::plain(circ.d * bullet.d);
  RFLabeled Sc = substitute(circ.S, 1, rat(-1, 2)), Sb = substitute(bullet.S, 1, rat(-1, 2));
  struct Split {
    int c, b, eps;
  };
  std::map<int, Split> split{{-2, {-1, -1, 1}}, {-1, {-1, 1, 1}}, {1, {1, -1, 1}}, {2, {1, 1, -1}}};
  RFLabeled S({P.index(), V});
  for (int a : P.index().labels())
    for (int b : P.index().labels()) {
      const Split &x = split[a], &y = split[b];
      int coef = x.eps * y.eps;
      if (variant == PairTag::DIII && y.c < 0) coef = -coef;
      RFLabeled blk = reshape(kron(block(Sc, x.c, y.c), block(Sb, x.b, y.b)), {V});
      put_block(S, a, b, blk * RatFunc(coef));
    }
  return {P, V.N(), S, "bridged from Y(2) x Y-(2)", {}};
}

XModule vector_eval_X(int N, Family f, const Rat& a) {
  IndexSet s = IndexSet::of_size(N);
  RFLabeled T = reshape(substitute(build_R(N, RFamily::gN, f), 1, -a), {s, IndexSet::plain(N)});
  return {N, f, N, T, unit_vector(N, N - 1)};
}

TwistedModule tensor_twisted(const XModule& x, const TwistedModule& v) {
  const PairType& P = v.pair;
  if (P.is_typeA()) throw ConfigError("tensor products need a pair of type B, C or D");
  if (x.N != P.N() || x.family != P.family()) throw ConfigError("tensor_twisted: X module does not match the pair");
  Rat half = P.kappa() / 2;
  IndexSet idx = P.index(), W = IndexSet::plain(x.d), V = IndexSet::plain(v.d);
  std::vector<IndexSet> legs{idx, W, V};
  RFLabeled T1 = substitute(x.T, 1, -half);
  RFLabeled Tt = substitute(partial_transpose(x.T, 1, x.family), -1, half);
  RFLabeled D = leg_embed(T1, {0, 1}, legs) * leg_embed(v.S, {0, 2}, legs) * leg_embed(Tt, {0, 1}, legs);
  TwistedModule m{P, x.d * v.d, reshape(D, {idx, IndexSet::plain(x.d * v.d)}), "tensor product with " + v.note, {}};
  if (x.hw_hint && v.hw_hint) {
    std::vector<Rat> h;
    for (const auto& p : *x.hw_hint)
      for (const auto& q : *v.hw_hint) h.push_back(p * q);
    m.hw_hint = h;
  }
  return m;
}

}  // namespace twy
