#include "twy/classify.hpp"

#include <algorithm>

#include "twy/matrix.hpp"

namespace twy {

namespace {

RatFunc lin(const Rat& a, const Rat& b) { return RatFunc(Poly::linear(a, b)); }
Rat half(long a) { return rat(a, 2); }

// Largest label of the tuple, playing the role of n in the tilde transform.
int tilde_top(const std::vector<int>& labels) { return labels.empty() ? 0 : labels.back(); }

std::vector<RatFunc> tilde_seq(const std::vector<RatFunc>& mu, const std::vector<int>& labels) {
  int top = tilde_top(labels);
  std::vector<RatFunc> t(mu.size());
  RatFunc tail;
  for (size_t k = mu.size(); k-- > 0;) {
    t[k] = lin(2, labels[k] - top) * mu[k] + tail;
    tail += mu[k];
  }
  return t;
}

std::vector<RatFunc> untilde_seq(const std::vector<RatFunc>& t, const std::vector<int>& labels) {
  int top = tilde_top(labels);
  std::vector<RatFunc> mu(t.size());
  RatFunc tail;
  for (size_t k = t.size(); k-- > 0;) {
    mu[k] = (t[k] - tail) / lin(2, labels[k] - top);
    tail += mu[k];
  }
  return mu;
}

std::vector<int> one_to(int n) {
  std::vector<int> l;
  for (int i = 1; i <= n; ++i) l.push_back(i);
  return l;
}

bool is_nonneg_integer(const Rat& r) { return r.get_den() == 1 && sgn(r) >= 0; }

// Coefficient rows of the polynomials in `cols`, one column per polynomial.
void append_rows(std::vector<std::vector<Rat>>& rows, std::vector<Rat>& rhs, const std::vector<Poly>& cols,
                 const Poly& target) {
  int top = target.deg();
  for (const auto& c : cols) top = std::max(top, c.deg());
  for (int e = 0; e <= top; ++e) {
    std::vector<Rat> row;
    for (const auto& c : cols) row.push_back(c.coeff(e));
    rows.push_back(std::move(row));
    rhs.push_back(-target.coeff(e));
  }
}

std::string join_polys(const std::vector<Poly>& P, int first) {
  std::string s;
  for (size_t k = 0; k < P.size(); ++k)
    s += (k ? ", " : "") + std::string("P") + std::to_string(first + static_cast<int>(k)) + " = " + P[k].str();
  return s;
}

}  // namespace

const RatFunc& TildeTuple::at(int i) const {
  auto labels = WeightTuple{pair, {}}.labels();
  for (size_t k = 0; k < labels.size() && k < mu.size(); ++k)
    if (labels[k] == i) return mu[k];
  throw MathError("tilde tuple has no component " + std::to_string(i));
}

TildeTuple tilde(const WeightTuple& w) {
  if (w.mu.size() != w.labels().size()) throw ConfigError("weight tuple has the wrong number of components");
  return {w.pair, tilde_seq(w.mu, w.labels())};
}

WeightTuple untilde(const TildeTuple& t) {
  WeightTuple w{t.pair, {}};
  if (t.mu.size() != w.labels().size()) throw ConfigError("tilde tuple has the wrong number of components");
  w.mu = untilde_seq(t.mu, w.labels());
  return w;
}

RatFunc mu0_g(const PairType& pair) {
  if (!pair.is_typeB()) throw ConfigError("g(u) is defined for type B only");
  if (pair.tag() == PairTag::B0) return RatFunc(1);
  Rat c = pair.c();
  return (RatFunc(1) + RatFunc(pair.bracket_pm() * c) * lin(-1, pair.ell())) / lin(-c, 1);
}

IdentityReport check_nontrivial(const WeightTuple& w) {
  IdentityReport rep{"nontrivial"};
  auto labels = w.labels();
  if (w.mu.size() != labels.size()) throw ConfigError("weight tuple has the wrong number of components");
  for (size_t k = 0; k < labels.size(); ++k) {
    const RatFunc& m = w.mu[k];
    if (m.degree() > 0 || m.is_zero() || m.at_infinity() != w.pair.g(labels[k]))
      rep.fail("i=" + std::to_string(labels[k]) + ": mu_i(u) must tend to g_ii = " +
               std::to_string(w.pair.g(labels[k])) + ", got " + m.str());
  }
  if (!rep.pass) return rep;
  auto t = tilde_seq(w.mu, labels);
  int top = tilde_top(labels);
  if (w.pair.is_typeA()) {
    const RatFunc& mN = w.mu.back();
    if (mN * mN.substitute(-1, 0) != RatFunc(1))
      rep.fail("i=" + std::to_string(top) + ": mu_N(u) mu_N(-u) = " + (mN * mN.substitute(-1, 0)).str());
  }
  for (size_t k = 0; k + 1 < labels.size(); ++k) {
    int i = labels[k];
    Rat b(top - i);
    RatFunc lhs = t[k] * t[k].substitute(-1, b);
    RatFunc rhs = t[k + 1] * t[k + 1].substitute(-1, b);
    if (lhs != rhs) rep.fail("i=" + std::to_string(i) + ": " + lhs.str() + " != " + rhs.str());
  }
  if (w.pair.is_typeB()) {
    Rat kappa = w.pair.kappa();
    RatFunc g = mu0_g(w.pair);
    RatFunc lhs = RatFunc::u() * g * t[0].substitute(-1, kappa);
    RatFunc rhs = lin(-1, kappa) * g.substitute(-1, kappa) * t[0];
    if (lhs != rhs) rep.fail("i=0: mu_0 relation u g(u) mu0~(kappa-u) = (kappa-u) g(kappa-u) mu0~(u) fails");
  }
  return rep;
}

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::None: return "none";
    case SolveStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::optional<Poly> solve_P_at_degree(const RatFunc& ratio, const Rat& shift, std::optional<Rat> center, int d) {
  const Poly& num = ratio.num();
  const Poly& den = ratio.den();
  std::vector<Poly> eq, sym;
  for (int j = 0; j <= d; ++j) {
    Poly m = Poly::monomial(j);
    eq.push_back(m.compose_affine(1, shift) * den - m * num);
    if (center) sym.push_back(m - m.compose_affine(-1, *center));
  }
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  append_rows(rows, rhs, {eq.begin(), eq.begin() + d}, eq[d]);
  if (center) append_rows(rows, rhs, {sym.begin(), sym.begin() + d}, sym[d]);
  if (d == 0) {
    for (const Rat& r : rhs)
      if (!is_zero(r)) return std::nullopt;
    return Poly(1);
  }
  QMat A(rows.size(), d);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < d; ++c) A(r, c) = rows[r][c];
  auto sol = poly_linear_solve(A, rhs);
  if (!sol.consistent) return std::nullopt;
  std::vector<Rat> c = sol.particular;
  c.push_back(1);
  return Poly(c);
}

SolveResult solve_P(const RatFunc& ratio, const Rat& shift, std::optional<Rat> center, int deg_max) {
  SolveResult res;
  if (is_zero(shift)) throw ConfigError("solve_P needs a nonzero shift");
  if (ratio.is_zero() || ratio.degree() != 0 || ratio.at_infinity() != 1) {
    res.note = "ratio does not tend to 1: " + ratio.str();
    return res;
  }
  // P(u+s)/P(u) = 1 + s deg(P) u^-1 + ..., so the degree is forced.
  Rat d = series_expand(ratio, 1)[1] / shift;
  if (!is_nonneg_integer(d)) {
    res.note = "u^-1 coefficient of the ratio gives degree " + to_string(d);
    return res;
  }
  if (d > deg_max) {
    res.status = SolveStatus::Inconclusive;
    res.note = "forced degree " + to_string(d) + " exceeds deg_max " + std::to_string(deg_max);
    return res;
  }
  auto P = solve_P_at_degree(ratio, shift, center, static_cast<int>(d.get_num().get_si()));
  if (!P) {
    res.note = "no monic polynomial of degree " + to_string(d) + " solves P(u+" + to_string(shift) +
               ")/P(u) = " + ratio.str() + (center ? " with P(u) = P(" + to_string(*center) + "-u)" : "");
    return res;
  }
  res.status = SolveStatus::Found;
  res.P = *P;
  return res;
}

SolveResult solve_P_gamma(const RatFunc& ratio, const Rat& shift, const Rat& kappa, std::optional<Rat> center,
                          int deg_max) {
  SolveResult res;
  Poly rest;
  std::vector<Rat> cands = ratio.num().rational_roots(&rest);
  cands.push_back(kappa / 2);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  bool inconclusive = false;
  std::string notes;
  for (const Rat& g : cands) {
    RatFunc f(Poly::linear(-1, g), Poly::linear(1, g - kappa));
    SolveResult r = solve_P(ratio / f, shift, center, deg_max);
    if (r.found()) {
      if (is_zero(r.P.eval(g))) {
        notes += "gamma = " + to_string(g) + " gives P(gamma) = 0; ";
        continue;
      }
      r.gamma = g;
      return r;
    }
    if (r.status == SolveStatus::Inconclusive) {
      inconclusive = true;
      notes += "gamma = " + to_string(g) + ": " + r.note + "; ";
    }
  }
  if (!inconclusive && rest.deg() > 0) {
    inconclusive = true;
    notes += "numerator factor " + rest.str() + " has no rational roots, irrational gamma not examined; ";
  }
  res.status = inconclusive ? SolveStatus::Inconclusive : SolveStatus::None;
  if (notes.size() >= 2) notes.resize(notes.size() - 2);
  res.note = notes.empty() ? "no rational gamma candidate works" : notes;
  return res;
}

Rat drinfeld_center(const PairType& pair, int i) {
  int n = pair.n();
  if (i > 1) return Rat(n - i + 2);
  if (pair.is_typeB()) return Rat(n) + half(1);
  return pair.family() == Family::Symplectic ? Rat(n + 3) : Rat(n);
}

Poly reflect_product(const Poly& Q, const Rat& center) {
  Poly r = Q * Q.compose_affine(-1, center);
  return Q.deg() % 2 ? -r : r;
}

IdentityReport check_certificate(const Certificate& c) {
  IdentityReport rep{"certificate"};
  const PairType& pair = c.pair;
  if (static_cast<int>(c.P.size()) != pair.n()) {
    rep.fail("expected " + std::to_string(pair.n()) + " polynomials");
    return rep;
  }
  for (int i = 1; i <= pair.n(); ++i) {
    const Poly& P = c.P[i - 1];
    if (P.is_zero() || P.lead() != 1) rep.fail("P" + std::to_string(i) + " is not monic");
    Rat ctr = drinfeld_center(pair, i);
    if (P != P.compose_affine(-1, ctr)) rep.fail("P" + std::to_string(i) + "(u) != P(" + to_string(ctr) + "-u)");
  }
  if (c.gamma.has_value() != pair.is_CI_DIII()) rep.fail("gamma must be present exactly for CI and DIII");
  if (c.gamma && !c.P.empty() && is_zero(c.P[0].eval(*c.gamma))) rep.fail("P1(gamma) = 0");
  return rep;
}

std::string finite_dim_name(FiniteDim f) {
  switch (f) {
    case FiniteDim::Yes: return "yes";
    case FiniteDim::No: return "no";
    case FiniteDim::NecessaryPass: return "necessary-conditions-only: pass";
    case FiniteDim::NecessaryFail: return "necessary-conditions-only: fail";
    case FiniteDim::Inconclusive: return "inconclusive";
  }
  return "?";
}

MRResult mr_finite_dim(const std::vector<RatFunc>& t, int q, int deg_max) {
  MRResult res;
  res.nontrivial = true;
  int N = static_cast<int>(t.size());
  int p = N - q;
  bool none = false, inconclusive = false;
  for (int i = 2; i <= N; ++i) {
    RatFunc ratio = t[i - 2] / t[i - 1];
    Rat ctr(N - i + 2);
    SolveResult r = (q == 0 || q == N || i != p + 1) ? solve_P(ratio, 1, ctr, deg_max)
                                                    : solve_P_gamma(ratio, 1, Rat(q), ctr, deg_max);
    if (r.found()) {
      res.P.push_back(r.P);
      if (r.gamma) res.gamma = r.gamma;
      continue;
    }
    (r.status == SolveStatus::None ? none : inconclusive) = true;
    res.diagnostics.push_back("P" + std::to_string(i) + ": " + status_name(r.status) + " (" + r.note + ")");
  }
  res.finite_dim = none ? SolveStatus::None : inconclusive ? SolveStatus::Inconclusive : SolveStatus::Found;
  if (res.finite_dim != SolveStatus::Found) res.P.clear();
  return res;
}

MRResult check_MR(const std::vector<RatFunc>& mu, int q, int deg_max) {
  int N = static_cast<int>(mu.size());
  if (N < 1 || q < 0 || q > N) throw ConfigError("check_MR needs 0 <= q <= N and N >= 1");
  auto labels = one_to(N);
  auto t = tilde_seq(mu, labels);
  MRResult res;
  const RatFunc& mN = mu.back();
  if (mN * mN.substitute(-1, 0) != RatFunc(1))
    res.diagnostics.push_back("i=" + std::to_string(N) + ": mu_N(u) mu_N(-u) != 1");
  for (int i = 1; i < N; ++i) {
    Rat b(N - i);
    if (t[i - 1] * t[i - 1].substitute(-1, b) != t[i] * t[i].substitute(-1, b))
      res.diagnostics.push_back("i=" + std::to_string(i) + ": tilde relation fails");
  }
  if (!res.diagnostics.empty()) return res;
  return mr_finite_dim(t, q, deg_max);
}

Verdict classify(const WeightTuple& w, int deg_max) {
  const PairType& pair = w.pair;
  if (pair.is_typeA()) throw ConfigError("AIII tuples are classified by the reflection algebra conditions (check_MR)");
  Verdict v;
  IdentityReport nt = check_nontrivial(w);
  if (!nt.pass) {
    v.finite_dim = FiniteDim::No;
    v.diagnostics = nt.witnesses;
    v.diagnostics.insert(v.diagnostics.begin(), "Verma module is trivial: no irreducible module with this weight");
    return v;
  }
  v.nontrivial = true;
  TildeTuple t = tilde(w);
  int n = pair.n();
  Rat kappa = pair.kappa();

  if (pair.is_BDI_CII()) {
    std::vector<RatFunc> pos;
    for (int i = 1; i <= n; ++i) pos.push_back(t.at(i));
    MRResult r = mr_finite_dim(pos, pair.ell(), deg_max);
    v.diagnostics = r.diagnostics;
    v.diagnostics.push_back("only necessary conditions are known for " + tag_name(pair.tag()));
    if (r.finite_dim == SolveStatus::Found) {
      v.finite_dim = FiniteDim::NecessaryPass;
      if (!r.P.empty()) v.diagnostics.push_back(join_polys(r.P, 2));
      if (r.gamma) v.diagnostics.push_back("gamma = " + to_string(*r.gamma));
    } else if (r.finite_dim == SolveStatus::None) {
      v.finite_dim = FiniteDim::NecessaryFail;
      v.diagnostics.push_back("a necessary condition fails, so the module is infinite-dimensional");
    } else {
      v.finite_dim = FiniteDim::Inconclusive;
    }
    return v;
  }

  Certificate cert{pair, std::vector<Poly>(n), std::nullopt};
  bool none = false, inconclusive = false;
  auto record = [&](int i, const SolveResult& r) {
    if (r.found()) {
      cert.P[i - 1] = r.P;
      if (r.gamma) cert.gamma = r.gamma;
      return;
    }
    (r.status == SolveStatus::None ? none : inconclusive) = true;
    v.diagnostics.push_back("P" + std::to_string(i) + ": " + status_name(r.status) + " (" + r.note + ")");
  };
  for (int i = 2; i <= n; ++i) record(i, solve_P(t.at(i - 1) / t.at(i), 1, drinfeld_center(pair, i), deg_max));

  Rat c1 = drinfeld_center(pair, 1);
  RatFunc refl = lin(-1, kappa) / RatFunc::u();  // (kappa-u)/u
  switch (pair.tag()) {
    case PairTag::B0: record(1, solve_P(t.at(0) / t.at(1), half(1), c1, deg_max)); break;
    case PairTag::C0:
      record(1, solve_P(t.at(1).substitute(-1, kappa) / t.at(1) / refl, 2, c1, deg_max));
      break;
    case PairTag::D0:
      record(1, solve_P(t.at(1).substitute(-1, kappa) / t.at(2) / refl, 1, c1, deg_max));
      break;
    case PairTag::CI:
      record(1, solve_P_gamma(t.at(1).substitute(-1, kappa) / t.at(1), 2, kappa, c1, deg_max));
      break;
    case PairTag::DIII:
      record(1, solve_P_gamma(t.at(1).substitute(-1, kappa) / t.at(2), 1, kappa, c1, deg_max));
      break;
    default: throw ConfigError("classify does not handle " + pair.name());
  }
  if (none) {
    v.finite_dim = FiniteDim::No;
  } else if (inconclusive) {
    v.finite_dim = FiniteDim::Inconclusive;
  } else {
    v.finite_dim = FiniteDim::Yes;
    v.certificate = cert;
  }
  return v;
}

TruncSeries mu_factorize_B0(const RatFunc& mu0, const RatFunc& mu1, int order) {
  PairType so3 = PairType::make(PairTag::B0, 3);
  auto t = tilde_seq({mu0, mu1}, so3.weight_labels());
  Rat h = half(1);
  if (RatFunc::u() * t[0].substitute(-1, h) != lin(-1, h) * t[0])
    throw MathError("mu_factorize_B0: u mu0~(1/2-u) = (1/2-u) mu0~(u) fails");
  if (t[0] * t[0].substitute(-1, 1) != t[1] * t[1].substitute(-1, 1))
    throw MathError("mu_factorize_B0: mu0~(u) mu0~(1-u) = mu1~(u) mu1~(1-u) fails");
  // mu1(u) = k(u) k(u - 1/2) with k(u) = m(2u)
  TruncSeries k = factor_shifted_square(series_expand(mu1, order), -h);
  TruncSeries m = k.scale(h);
  TruncSeries m2 = m.scale(2);
  RatFunc twou = lin(2, 0);
  if (m2 * m2.shift(-h) != series_expand(t[1] / twou, order) ||
      m2 * m.scale(-2).shift(-h) != series_expand(t[0] / twou, order))
    throw MathError("mu_factorize_B0: re-multiplication residual is nonzero");
  return m;
}

namespace {

Rat x_kappa(int N, Family f) { return rat(N, 2) + (f == Family::Orthogonal ? -1 : 1); }

void check_x_family(int N, Family f) {
  if (N < 2) throw ConfigError("X(g_N) needs N >= 2");
  if (N % 2 && f == Family::Symplectic) throw ConfigError("symplectic X(g_N) needs even N");
}

}  // namespace

IdentityReport check_lambda_nontrivial(const LambdaTuple& lam, int N, Family f) {
  check_x_family(N, f);
  IdentityReport rep{"X(g_N) nontrivial"};
  int n = N / 2;
  Rat kappa = x_kappa(N, f);
  for (int i = N % 2 ? 0 : 1; i < n; ++i) {
    if (!lam.count(i) || !lam.count(i + 1) || !lam.count(-i) || !lam.count(-i - 1)) {
      rep.fail("missing components around i=" + std::to_string(i));
      continue;
    }
    Rat b = Rat(n - i) - kappa;
    RatFunc lhs = lam.at(-i) / lam.at(-i - 1);
    RatFunc rhs = lam.at(i + 1).substitute(1, b) / lam.at(i).substitute(1, b);
    if (lhs != rhs) rep.fail("i=" + std::to_string(i));
  }
  return rep;
}

LambdaTuple extend_lambda(const LambdaTuple& partial, int N, Family f, std::optional<RatFunc> nu,
                          std::optional<int> k) {
  check_x_family(N, f);
  int n = N / 2;
  Rat kappa = x_kappa(N, f);
  LambdaTuple lam;
  for (int i = N % 2 ? 0 : 1; i <= n; ++i) {
    auto it = partial.find(i);
    if (it == partial.end()) throw ConfigError("extend_lambda: lambda_" + std::to_string(i) + " missing");
    lam[i] = it->second;
  }
  auto step = [&](int i) {
    Rat b = Rat(n - i) - kappa;
    return lam.at(i).substitute(1, b) / lam.at(i + 1).substitute(1, b);
  };
  int start = 0;
  if (N % 2 == 0) {
    if (!nu || !k || *k < 1 || *k > n) throw ConfigError("extend_lambda: even N needs nu and 1 <= k <= n");
    start = *k;
    lam[-start] = *nu;
    for (int i = start - 1; i >= 1; --i) lam[-i] = lam.at(-i - 1) / step(i);
  }
  for (int i = start; i < n; ++i) lam[-i - 1] = lam.at(-i) * step(i);
  IdentityReport chk = check_lambda_nontrivial(lam, N, f);
  if (!chk.pass) throw MathError("extend_lambda: extension fails the nontriviality relation");
  return lam;
}

XgnResult xgn_fd_check(const LambdaTuple& lam, int N, Family f, int deg_max) {
  check_x_family(N, f);
  int n = N / 2;
  if (N % 2 == 0 && f == Family::Orthogonal && n < 2) throw ConfigError("xgn_fd_check needs n >= 2 for so_2n");
  XgnResult res;
  res.P.resize(n);
  bool none = false, inconclusive = false;
  auto record = [&](int i, const SolveResult& r) {
    if (r.found()) {
      res.P[i - 1] = r.P;
      return;
    }
    (r.status == SolveStatus::None ? none : inconclusive) = true;
    res.diagnostics.push_back("P" + std::to_string(i) + ": " + status_name(r.status) + " (" + r.note + ")");
  };
  for (int i = 2; i <= n; ++i) record(i, solve_P(lam.at(i - 1) / lam.at(i), 1, std::nullopt, deg_max));
  if (N % 2)
    record(1, solve_P(lam.at(0) / lam.at(1), half(1), std::nullopt, deg_max));
  else if (f == Family::Symplectic)
    record(1, solve_P(lam.at(-1) / lam.at(1), 2, std::nullopt, deg_max));
  else
    record(1, solve_P(lam.at(-1) / lam.at(2), 1, std::nullopt, deg_max));
  res.status = none ? SolveStatus::None : inconclusive ? SolveStatus::Inconclusive : SolveStatus::Found;
  if (res.status != SolveStatus::Found) res.P.clear();
  return res;
}

WeightTuple construct_from_cert(const Certificate& cert, const std::vector<Poly>& Q) {
  const PairType& pair = cert.pair;
  if (!pair.is_BCD0() && !pair.is_CI_DIII())
    throw ConfigError("construct_from_cert supports BCD0, CI and DIII only");
  IdentityReport chk = check_certificate(cert);
  if (!chk.pass) throw ConfigError("invalid certificate: " + chk.witnesses.front());
  int n = pair.n();
  if (static_cast<int>(Q.size()) != n) throw ConfigError("need one Q_i per P_i");
  for (int i = 1; i <= n; ++i) {
    const Poly& q = Q[i - 1];
    if (q.is_zero() || q.lead() != 1) throw ConfigError("Q" + std::to_string(i) + " is not monic");
    if (reflect_product(q, drinfeld_center(pair, i)) != cert.P[i - 1])
      throw MathError("Q" + std::to_string(i) + " does not reproduce P" + std::to_string(i));
  }
  Rat kappa = pair.kappa();
  Family f = pair.family();
  std::vector<Poly> Qh;
  for (const auto& q : Q) Qh.push_back(q.compose_affine(1, kappa / 2));
  int a = 0;
  for (int i = 2; i <= n; ++i) a += Qh[i - 1].deg();
  RatFunc ua = RatFunc(1) / RatFunc(Poly::monomial(a));
  LambdaTuple lam;
  for (int i = 1; i <= n; ++i) {
    Poly p(1);
    for (int j = 2; j <= n; ++j) p *= j <= i ? Qh[j - 1] : Qh[j - 1].compose_affine(1, 1);
    lam[i] = RatFunc(p) * ua;
  }
  const Poly& q1 = Qh[0];
  auto q1_ratio = [&](const Rat& s) { return RatFunc(q1.compose_affine(1, s), q1); };
  if (pair.is_typeB()) {
    lam[0] = q1_ratio(half(1)) * lam.at(1);
    lam = extend_lambda(lam, pair.N(), f);
  } else if (f == Family::Symplectic) {
    RatFunc nu = q1_ratio(2) * lam.at(1);
    lam = extend_lambda(lam, pair.N(), f, nu, 1);
  } else {
    RatFunc nu = q1_ratio(1) * lam.at(2);
    lam = extend_lambda(lam, pair.N(), f, nu, 1);
  }
  TildeTuple t{pair, {}};
  RatFunc shift = cert.gamma ? RatFunc(1) + RatFunc(*cert.gamma - kappa) / RatFunc::u() : RatFunc(1);
  for (int i : pair.weight_labels())
    t.mu.push_back(lin(2, 0) * shift * lam.at(i).substitute(1, -kappa / 2) * lam.at(-i).substitute(-1, kappa / 2));
  return untilde(t);
}

}  // namespace twy
