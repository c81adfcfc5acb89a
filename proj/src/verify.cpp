#include <sstream>

#include "twy/identity.hpp"
#include "twy/reps.hpp"

namespace twy {

namespace {

RatFunc lin(const Rat& a, const Rat& b) { return RatFunc(Poly::linear(a, b)); }
RatFunc inv(const RatFunc& f) { return RatFunc(1) / f; }

std::vector<RatFunc> apply(const RFLabeled& op, const std::vector<Rat>& v) {
  std::vector<RatFunc> out(op.dim());
  for (size_t i = 0; i < op.dim(); ++i)
    for (const auto& [j, x] : op.row(i))
      if (sgn(v[j]) != 0) out[i] += x * RatFunc(v[j]);
  return out;
}

bool kills(const RFLabeled& op, const std::vector<Rat>& v) {
  for (const auto& x : apply(op, v))
    if (!x.is_zero()) return false;
  return true;
}

// eigenvalue of op at v, if v is an eigenvector
std::optional<RatFunc> eigenvalue(const RFLabeled& op, const std::vector<Rat>& v) {
  auto w = apply(op, v);
  size_t p = 0;
  while (p < v.size() && sgn(v[p]) == 0) ++p;
  if (p == v.size()) return std::nullopt;
  RatFunc mu = w[p] / RatFunc(v[p]);
  for (size_t k = 0; k < v.size(); ++k)
    if (w[k] != mu * RatFunc(v[k])) return std::nullopt;
  return mu;
}

std::string pair_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

struct CommonEigen {
  bool found = false;
  size_t v0_dim = 0;
  std::vector<Rat> vec;
  std::vector<RatFunc> values;  // in label order of the auxiliary leg
  std::string note;
};

// Vectors killed by every block (i,j), i < j, that are eigenvectors of every
// diagonal block.
CommonEigen common_eigen(const RFLabeled& S, const std::optional<std::vector<Rat>>& hint) {
  CommonEigen r;
  auto labels = S.legs()[0].labels();
  std::vector<RFLabeled> upper, diag;
  for (int i : labels) {
    diag.push_back(block(S, i, i));
    for (int j : labels)
      if (i < j) upper.push_back(block(S, i, j));
  }
  size_t d = S.legs()[1].N();
  auto V0 = joint_kernel(coefficient_matrices(upper), d);
  r.v0_dim = V0.size();
  if (V0.empty()) {
    r.note = "no nonzero vector is killed by all s_ij(u), i < j";
    return r;
  }
  std::vector<std::vector<Rat>> cands;
  if (hint && hint->size() == d) {
    bool ok = true;
    for (const auto& op : upper) ok = ok && kills(op, *hint);
    if (ok) cands.push_back(*hint);
  }
  for (const auto& b : V0) cands.push_back(b);
  for (const auto& v : cands) {
    std::vector<RatFunc> vals;
    for (const auto& op : diag) {
      auto mu = eigenvalue(op, v);
      if (!mu) break;
      vals.push_back(*mu);
    }
    if (vals.size() == diag.size()) {
      r.found = true;
      r.vec = v;
      r.values = vals;
      if (V0.size() > 1) r.note = "V0 has dimension " + std::to_string(V0.size()) + "; first eigenvector taken";
      return r;
    }
  }
  r.note = "no candidate in V0 is a common eigenvector of the diagonal generators";
  return r;
}

Rat coeff_inv_u(const RatFunc& f) {
  Rat at_inf = f.at_infinity();
  return ((f - RatFunc(at_inf)) * RatFunc::u()).at_infinity();
}

// R(u-v) S1(u) R(u+v) S2(v) = S2(v) R(u+v) S1(u) R(u-v) on {idx, idx, V}
IdentityReport reflection_identity(const std::string& name, const RFLabeled& R, const RFLabeled& S) {
  ClearedMatrix cR = clear_denominators(R), cS = clear_denominators(S);
  std::vector<IndexSet> legs{S.legs()[0], S.legs()[0], S.legs()[1]};
  Factor Rm{&cR, 1, -1, 0, {0, 1}}, Rp{&cR, 1, 1, 0, {0, 1}};
  Factor S1{&cS, 1, 0, 0, {0, 2}}, S2{&cS, 0, 1, 0, {1, 2}};
  return check_product_identity(name, legs, {Rm, S1, Rp, S2}, {S2, Rp, S1, Rm});
}

IdentityReport scalar_check(const std::string& name, const RFLabeled& m, RatFunc* value = nullptr) {
  IdentityReport rep{name};
  RatFunc w = m.at(size_t{0}, size_t{0});
  RFLabeled diff = m - RFLabeled::identity(m.legs(), w);
  for (size_t i = 0; i < diff.dim(); ++i)
    for (const auto& [j, x] : diff.row(i))
      rep.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + x.str());
  if (rep.pass) {
    rep.detail = "value " + w.str();
    if (value) *value = w;
  }
  return rep;
}

}  // namespace

std::vector<QMat> coefficient_matrices(const std::vector<LabeledMatrix<RatFunc>>& ops) {
  std::vector<QMat> out;
  for (const auto& op : ops) {
    ClearedMatrix c = clear_denominators(op);
    int deg = max_degree(c.hat);
    for (int k = 0; k <= deg; ++k) {
      QMat m(op.dim(), op.dim());
      bool any = false;
      for (size_t i = 0; i < op.dim(); ++i)
        for (const auto& [j, p] : c.hat.row(i)) {
          m(i, j) = p.coeff(k);
          any = any || sgn(m(i, j)) != 0;
        }
      if (any) out.push_back(std::move(m));
    }
  }
  return out;
}

std::optional<LabeledMatrix<RatFunc>> restrict_to(const LabeledMatrix<RatFunc>& op,
                                                   const std::vector<std::vector<Rat>>& basis) {
  size_t d = op.dim(), r = basis.size();
  QMat B(d, r);
  for (size_t c = 0; c < r; ++c)
    for (size_t i = 0; i < d; ++i) B(i, c) = basis[c][i];
  QMat Bt = transpose(B);
  auto gram_inv = inverse(Bt * B);
  if (!gram_inv) throw MathError("restrict_to: basis is linearly dependent");
  QMat L = *gram_inv * Bt;
  RFMat opB(d, r);
  for (size_t c = 0; c < r; ++c) {
    auto col = apply(op, basis[c]);
    for (size_t i = 0; i < d; ++i) opB(i, c) = col[i];
  }
  LabeledMatrix<RatFunc> Y(IndexSet::plain(static_cast<int>(r)));
  RFMat Yd(r, r);
  for (size_t a = 0; a < r; ++a)
    for (size_t c = 0; c < r; ++c) {
      RatFunc x;
      for (size_t i = 0; i < d; ++i)
        if (sgn(L(a, i)) != 0) x += RatFunc(L(a, i)) * opB(i, c);
      Yd(a, c) = x;
      Y.set(a, c, x);
    }
  for (size_t i = 0; i < d; ++i)
    for (size_t c = 0; c < r; ++c) {
      RatFunc x;
      for (size_t a = 0; a < r; ++a)
        if (sgn(B(i, a)) != 0) x += RatFunc(B(i, a)) * Yd(a, c);
      if (x != opB(i, c)) return std::nullopt;
    }
  return Y;
}

Report verify_olshanskii(const OlshanskiiModule& m) {
  Report rep;
  Family f = m.family();
  RFLabeled R = build_R(2, RFamily::glN);
  ClearedMatrix cR = clear_denominators(R), cRt = clear_denominators(partial_transpose(R, 1, f));
  ClearedMatrix cS = clear_denominators(m.S);
  IndexSet i2 = IndexSet::of_size(2);
  std::vector<IndexSet> legs{i2, i2, IndexSet::plain(m.d)};
  Factor Rm{&cR, 1, -1, 0, {0, 1}}, Rt{&cRt, -1, -1, 0, {0, 1}};
  Factor S1{&cS, 1, 0, 0, {0, 2}}, S2{&cS, 0, 1, 0, {1, 2}};
  rep.add(check_product_identity("twisted reflection relation", legs, {Rm, S1, Rt, S2}, {S2, Rt, S1, Rm}));

  IdentityReport sym{"symmetry relation"};
  RFLabeled Sm = substitute(m.S, -1, 0);
  RFLabeled rhs = Sm + (m.S - Sm) * (RatFunc(m.sign) / lin(2, 0));
  RFLabeled diff = partial_transpose(m.S, 1, f) - rhs;
  for (size_t i = 0; i < diff.dim(); ++i)
    for (const auto& [j, x] : diff.row(i))
      sym.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + x.str());
  rep.add(sym);
  return rep;
}

SdetResult olshanskii_sdet(const OlshanskiiModule& m) {
  auto s = [&](int i, int j, const Rat& a, const Rat& b) { return substitute(block(m.S, i, j), a, b); };
  RatFunc c = lin(2, 1) / lin(2, m.sign), sg(m.sign);
  SdetResult r;
  r.first = (s(-1, -1, 1, -1) * s(-1, -1, -1, 0) - s(-1, 1, 1, -1) * s(1, -1, -1, 0) * sg) * c;
  r.second = (s(1, 1, -1, 0) * s(1, 1, 1, -1) - s(1, -1, -1, 0) * s(-1, 1, 1, -1) * sg) * c;
  r.agree = IdentityReport{"sdet: both expressions agree"};
  if (r.first != r.second) r.agree.fail("difference " + (r.first - r.second).at(size_t{0}, size_t{0}).str());
  r.scalar = scalar_check("sdet is scalar", r.first);
  return r;
}

IdentityReport check_RTT(const XModule& x) {
  RFLabeled R = build_R(x.N, RFamily::gN, x.family);
  ClearedMatrix cR = clear_denominators(R), cT = clear_denominators(x.T);
  IndexSet s = IndexSet::of_size(x.N);
  std::vector<IndexSet> legs{s, s, IndexSet::plain(x.d)};
  Factor Rm{&cR, 1, -1, 0, {0, 1}}, T1{&cT, 1, 0, 0, {0, 2}}, T2{&cT, 0, 1, 0, {1, 2}};
  return check_product_identity("RTT relation", legs, {Rm, T1, T2}, {T2, T1, Rm});
}

std::optional<std::vector<RatFunc>> x_highest_weight(const XModule& x) {
  auto e = common_eigen(x.T, x.hw_hint);
  if (!e.found) return std::nullopt;
  return e.values;
}

Report verify_twisted(const TwistedModule& m) {
  Report rep;
  const PairType& P = m.pair;
  const RFLabeled& S = m.S;
  IndexSet idx = S.legs()[0], V = S.legs()[1];
  rep.add(reflection_identity("reflection relation", build_R(P), S));

  IdentityReport lim{"s_ij(u) -> g_ij at infinity"};
  for (int i : idx.labels())
    for (int j : idx.labels()) {
      RFLabeled b = block(S, i, j);
      for (size_t a = 0; a < b.dim(); ++a)
        for (size_t c = 0; c < b.dim(); ++c) {
          RatFunc x = b.at(a, c);
          Rat want = (i == j && a == c) ? Rat(P.g(i)) : Rat(0);
          if (x.degree() > 0 || (x.is_zero() ? Rat(0) : x.at_infinity()) != want)
            lim.fail("s" + pair_str(i, j) + " entry " + pair_str(a, c) + ": " + x.str());
        }
    }
  rep.add(lim);

  if (!P.is_typeA()) {
    IdentityReport sym{"symmetry relation"};
    Rat kappa = P.kappa();
    RFLabeled Sr = substitute(S, -1, kappa);
    RatFunc trG = trace(build_K(P));
    RFLabeled trS = kron(RFLabeled::identity(idx), trace_first(S));
    RFLabeled rhs = Sr * RatFunc(P.paren_pm()) + (S - Sr) * (RatFunc(P.pm()) / lin(2, -kappa)) +
                    (Sr * trG - trS) * inv(lin(2, -2 * kappa));
    RFLabeled diff = partial_transpose(S, 1, P.family()) - rhs;
    for (size_t i = 0; i < diff.dim(); ++i)
      for (const auto& [j, x] : diff.row(i)) {
        auto r = diff.unflat(i), c = diff.unflat(j);
        sym.fail("s" + pair_str(r[0], c[0]) + " entry " + pair_str(r[1], c[1]) + ": " + x.str());
      }
    rep.add(sym);
  }

  rep.add(scalar_check("S(u)S(-u) is scalar", S * substitute(S, -1, 0)));

  if (!P.is_typeA()) {
    // degree-one coefficients against the bracket relations of the embedded
    // fixed-point subalgebra
    IdentityReport emb{"embedding bracket"};
    Family f = P.family();
    RFLabeled K = build_K(P);
    auto A = [&](int i, int j) {
      RFLabeled b = block(S, i, j);
      RFLabeled a(V);
      for (size_t r = 0; r < b.dim(); ++r)
        for (const auto& [c, x] : b.row(r)) a.set(r, c, RatFunc(coeff_inv_u(x)));
      Rat gbar = coeff_inv_u(K.at(i, j));
      return a - RFLabeled::identity(V, RatFunc(gbar));
    };
    auto s = [&](int i, int j) -> RFLabeled {
      if (!idx.contains(i) || !idx.contains(j)) return RFLabeled(V);
      return block(S, i, j);
    };
    for (int i : idx.labels())
      for (int j : idx.labels()) {
        int gg = P.g(i) + P.g(j);
        RFLabeled Aij = A(i, j);
        for (int k : idx.labels())
          for (int l : idx.labels()) {
            RFLabeled skl = s(k, l);
            RFLabeled rhs(V);
            RatFunc th(theta(f, i, j));
            if (gg != 0) {
              if (k == j) rhs += s(i, l);
              if (i == l) rhs -= s(k, j);
              if (k == -i) rhs -= s(-j, l) * th;
              if (l == -j) rhs += s(k, -i) * th;
              rhs *= RatFunc(gg);
            }
            if (Aij * skl - skl * Aij != rhs)
              emb.fail("[A" + pair_str(i, j) + ", s" + pair_str(k, l) + "]");
          }
      }
    rep.add(emb);
  }
  return rep;
}

std::optional<RatFunc> central_w(const TwistedModule& m) {
  RatFunc w;
  if (!scalar_check("w", m.S * substitute(m.S, -1, 0), &w).pass) return std::nullopt;
  return w;
}

HighestWeight highest_weight_extract(const TwistedModule& m) {
  HighestWeight hw;
  auto e = common_eigen(m.S, m.hw_hint);
  hw.v0_dim = e.v0_dim;
  hw.note = e.note;
  hw.weight.pair = m.pair;
  if (!e.found) return hw;
  hw.found = true;
  hw.vector = e.vec;
  IndexSet idx = m.S.legs()[0];
  for (int i : hw.weight.labels()) hw.weight.mu.push_back(e.values[idx.pos(i)]);
  if (!m.pair.is_typeA())
    for (int i = 1; i <= m.pair.n(); ++i) hw.negative.push_back(e.values[idx.pos(-i)]);
  return hw;
}

IdentityReport check_negative_weights(const TwistedModule& m, const HighestWeight& hw) {
  IdentityReport rep{"negative-index eigenvalues"};
  const PairType& P = m.pair;
  if (P.is_typeA()) throw ConfigError("negative weights are defined for types B, C, D");
  if (!hw.found) {
    rep.fail("no highest weight vector");
    return rep;
  }
  Rat kappa = P.kappa();
  int n = P.n();
  RatFunc p = compute_p(build_K(P), P), u = RatFunc::u();
  RatFunc total;
  for (const auto& x : hw.weight.mu) total += x;
  for (int i = 1; i <= n; ++i) {
    RatFunc rhs = total;
    for (int l = 1; l <= n; ++l) {
      const RatFunc& mu = hw.weight.at(l);
      RatFunc term = p * mu.substitute(-1, kappa) + RatFunc(P.pm()) * mu / lin(2, -kappa);
      RatFunc beta = l == i ? lin(-2, 2 * kappa - n + 1) : RatFunc(1);
      rhs += beta * term;
    }
    RatFunc lhs = lin(-2, 2 * kappa - n) * hw.negative[i - 1];
    if (lhs != rhs) rep.fail("i=" + std::to_string(i) + ": residual " + (lhs - rhs).str());
  }
  return rep;
}

RatFunc vplus_h(const PairType& pair) {
  if (pair.is_CI_DIII()) return RatFunc(1);
  if (!pair.is_BCD0()) throw ConfigError("rank reduction is implemented for CI, DIII, B0, C0, D0");
  Rat kp = pair.kappa() - 1;
  return lin(2, -2 * kp - 1) / lin(2, -2 * kp);
}

Restriction restrict_Vplus(const TwistedModule& m) {
  const PairType& P = m.pair;
  RatFunc h = vplus_h(P);
  PairType P2 = PairType::make(P.tag(), P.N() - 2);
  Restriction res;
  int n = P.n();
  IndexSet idx = P.index();
  std::vector<RFLabeled> ops;
  for (int k : idx.labels())
    if (k < n) ops.push_back(m.s(k, n));
  auto basis = joint_kernel(coefficient_matrices(ops), m.d);
  IdentityReport nz{"V+ is nonzero"};
  if (basis.empty()) {
    nz.fail("joint kernel of s_kn(u), k < n, is zero");
    res.report.add(nz);
    return res;
  }
  nz.detail = "dim V+ = " + std::to_string(basis.size());
  res.report.add(nz);
  IdentityReport stable{"V+ is stable"};
  int r = static_cast<int>(basis.size());
  IndexSet idx2 = P2.index(), W = IndexSet::plain(r);
  RFLabeled S({idx2, W});
  RFLabeled snn = substitute(m.s(n, n), 1, rat(1, 2));
  for (int i : idx2.labels())
    for (int j : idx2.labels()) {
      RFLabeled op = substitute(m.s(i, j), 1, rat(1, 2));
      if (i == j) op += snn * inv(lin(2, 0));
      auto y = restrict_to(op * h, basis);
      if (!y) {
        stable.fail("s" + pair_str(i, j) + " leaves V+");
        continue;
      }
      for (size_t a = 0; a < y->dim(); ++a)
        for (const auto& [b, x] : y->row(a)) S.set({i, static_cast<int>(a) + 1}, {j, static_cast<int>(b) + 1}, x);
    }
  res.report.add(stable);
  if (!stable.pass) return res;
  TwistedModule out{P2, r, S, "V+ restriction of " + m.note, {}};
  res.report.merge(verify_twisted(out));
  res.module = out;
  return res;
}

VJRestriction restrict_VJ(const TwistedModule& m) {
  const PairType& P = m.pair;
  if (P.is_typeA()) throw ConfigError("V^J restriction is defined for types B, C, D");
  VJRestriction res;
  int n = P.n();
  res.n = n;
  IndexSet idx = P.index();
  std::vector<RFLabeled> ops;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) ops.push_back(m.s(-i, j));
    if (idx.has_zero()) ops.push_back(m.s(0, j));
  }
  auto basis = joint_kernel(coefficient_matrices(ops), m.d);
  IdentityReport nz{"V^J is nonzero"};
  res.dJ = static_cast<int>(basis.size());
  if (basis.empty()) {
    nz.fail("joint kernel is zero");
    res.report.add(nz);
    return res;
  }
  nz.detail = "dim V^J = " + std::to_string(basis.size());
  res.report.add(nz);
  IdentityReport stable{"V^J is stable"};
  IndexSet pn = IndexSet::plain(n), W = IndexSet::plain(res.dJ);
  res.B = RFLabeled({pn, W});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto y = restrict_to(m.s(i, j) * RatFunc(P.bracket_pm()), basis);
      if (!y) {
        stable.fail("s" + pair_str(i, j) + " leaves V^J");
        continue;
      }
      for (size_t a = 0; a < y->dim(); ++a)
        for (const auto& [b, x] : y->row(a)) res.B.set({i, static_cast<int>(a) + 1}, {j, static_cast<int>(b) + 1}, x);
    }
  res.report.add(stable);
  if (!stable.pass) return res;
  RFLabeled R = RFLabeled::identity({pn, pn}) - op_P<RatFunc>(pn) * inv(RatFunc::u());
  res.report.add(reflection_identity("reflection relation for B(u)", R, res.B));
  res.report.add(scalar_check("B(u)B(-u) is scalar", res.B * substitute(res.B, -1, 0)));
  return res;
}

}  // namespace twy
