#include "twy/lie.hpp"

#include "twy/pair.hpp"

namespace twy {

namespace {

bool is_integer(const Rat& x) { return x.get_den() == 1; }

long to_long(const Rat& x) { return x.get_num().get_si(); }

// sp2 module of F_11-weight -m on v_0..v_m (v_0 highest).
struct Sl2Data {
  QMat H, X, Y;  // F_11, F_{-1,1}, F_{1,-1}
  int d;
};

Sl2Data sl2_data(long m) {
  int d = static_cast<int>(m) + 1;
  Sl2Data s{QMat(d, d), QMat(d, d), QMat(d, d), d};
  for (int k = 0; k < d; ++k) {
    s.H(k, k) = Rat(-m + 2 * k);
    if (k + 1 < d) s.Y(k + 1, k) = 1;
    if (k > 0) s.X(k - 1, k) = Rat(4 * k * (m - k + 1));
  }
  return s;
}

long sp2_m(const Rat& mu, const char* what) {
  if (!is_integer(mu) || sgn(mu) > 0)
    throw ConfigError(std::string(what) + " weight must be a non-positive integer, got " + to_string(mu));
  long m = -to_long(mu);
  if (m > 40) throw ConfigError("weight too large for an explicit module");
  return m;
}

QMat eye(int d) { return QMat::identity(d); }

}  // namespace

std::string lie_name(LieAlgebra a) {
  switch (a) {
    case LieAlgebra::sp2: return "sp2";
    case LieAlgebra::so2: return "so2";
    case LieAlgebra::gl1: return "gl1";
    case LieAlgebra::so3: return "so3";
    case LieAlgebra::gl2: return "gl2";
    case LieAlgebra::so4: return "so4";
  }
  return "?";
}

LieAlgebra parse_lie(const std::string& s) {
  for (auto a : {LieAlgebra::sp2, LieAlgebra::so2, LieAlgebra::gl1, LieAlgebra::so3, LieAlgebra::gl2,
                 LieAlgebra::so4})
    if (lie_name(a) == s) return a;
  throw ConfigError("unknown Lie algebra: " + s);
}

QMat LieModule::get(int i, int j) const {
  auto it = F.find({i, j});
  return it == F.end() ? QMat(d, d) : it->second;
}

LieModule lie_module(LieAlgebra a, const std::vector<Rat>& hw) {
  LieModule m;
  m.algebra = a;
  m.weight = hw;
  size_t want = (a == LieAlgebra::gl2 || a == LieAlgebra::so4) ? 2 : 1;
  if (hw.size() != want) throw ConfigError(lie_name(a) + " needs " + std::to_string(want) + " weight(s)");
  auto put = [&](int i, int j, const QMat& x) { m.F[{i, j}] = x; };
  switch (a) {
    case LieAlgebra::sp2: {
      auto s = sl2_data(sp2_m(hw[0], "sp2"));
      m.index = IndexSet::of_size(2);
      m.family = Family::Symplectic;
      m.d = s.d;
      put(1, 1, s.H);
      put(-1, -1, -s.H);
      put(-1, 1, s.X);
      put(1, -1, s.Y);
      break;
    }
    case LieAlgebra::so2:
    case LieAlgebra::gl1: {
      m.index = IndexSet::of_size(2);
      m.family = a == LieAlgebra::so2 ? Family::Orthogonal : Family::Symplectic;
      m.d = 1;
      put(1, 1, eye(1) * hw[0]);
      put(-1, -1, eye(1) * Rat(-hw[0]));
      break;
    }
    case LieAlgebra::so3: {
      // rational generators relative to the basis (e_-1, e_0, e_1) scaled by (1, sqrt2, 2)
      Rat twice = 2 * hw[0];
      if (!is_integer(twice) || sgn(twice) > 0)
        throw ConfigError("so3 weight must lie in {0, -1/2, -1, ...}, got " + to_string(hw[0]));
      auto s = sl2_data(-to_long(twice));
      m.index = IndexSet::of_size(3);
      m.family = Family::Orthogonal;
      m.d = s.d;
      put(1, 1, s.H * rat(1, 2));
      put(-1, -1, s.H * rat(-1, 2));
      put(0, 0, QMat(s.d, s.d));
      put(-1, 0, s.X * rat(1, 2));
      put(0, 1, s.X * rat(-1, 2));
      put(0, -1, s.Y * rat(1, 4));
      put(1, 0, s.Y * rat(-1, 4));
      put(-1, 1, QMat(s.d, s.d));
      put(1, -1, QMat(s.d, s.d));
      QMat F11 = m.get(1, 1);
      m.omega = F11 * F11 - F11 + Rat(2) * m.get(1, 0) * m.get(0, 1);
      break;
    }
    case LieAlgebra::gl2:
    case LieAlgebra::so4: {
      const Rat &mu1 = hw[0], &mu2 = hw[1];
      if (!is_integer(mu1 - mu2) || sgn(mu1 - mu2) < 0)
        throw ConfigError("need mu1 - mu2 in Z>=0, got (" + to_string(mu1) + ", " + to_string(mu2) + ")");
      auto b = sl2_data(sp2_m(mu2 - mu1, "sl2 factor"));
      Sl2Data c;
      Rat center = mu1 + mu2;
      if (a == LieAlgebra::so4) {
        c = sl2_data(sp2_m(center, "so4 factor (mu1 + mu2)"));
      } else {
        c = Sl2Data{eye(1) * center, QMat(1, 1), QMat(1, 1), 1};
      }
      m.index = IndexSet::of_size(4);
      m.family = Family::Orthogonal;
      m.d = c.d * b.d;
      QMat Ic = eye(c.d), Ib = eye(b.d);
      QMat Hc = kron(c.H, Ib), Hb = kron(Ic, b.H);
      QMat F11 = (Hc - Hb) * rat(1, 2), F22 = (Hc + Hb) * rat(1, 2);
      QMat F12 = kron(Ic, b.X) * rat(-1, 2), F21 = kron(Ic, b.Y) * rat(-1, 2);
      put(1, 1, F11);
      put(2, 2, F22);
      put(-1, -1, -F11);
      put(-2, -2, -F22);
      put(1, 2, F12);
      put(2, 1, F21);
      put(-2, -1, -F12);
      put(-1, -2, -F21);
      if (a == LieAlgebra::so4) {
        QMat Fm21 = kron(c.X, Ib) * rat(1, 2), F1m2 = kron(c.Y, Ib) * rat(1, 2);
        put(-2, 1, Fm21);
        put(-1, 2, -Fm21);
        put(1, -2, F1m2);
        put(2, -1, -F1m2);
        for (int i : {1, 2}) {
          put(-i, i, QMat(m.d, m.d));
          put(i, -i, QMat(m.d, m.d));
        }
        m.omega = F11 * F11 + F22 * F22 - Rat(2) * F22 + Rat(2) * F21 * F12 +
                  Rat(2) * m.get(2, -1) * m.get(-1, 2);
      } else {
        QMat diff = F22 - F11;
        m.omega = diff * diff * rat(1, 2) + F12 * F21 + F21 * F12;
        m.z = F11 * F11 + F22 * F22 + F12 * F21 + F21 * F12;
      }
      break;
    }
  }
  return m;
}

IdentityReport check_lie_relations(const LieModule& m) {
  IdentityReport rep{"[F,F] relations (" + lie_name(m.algebra) + ")"};
  Family f = m.family;
  auto lookup = [&](int i, int j, bool& ok) -> QMat {
    if (!m.index.contains(i) || !m.index.contains(j)) return QMat(m.d, m.d);
    if (!m.has(i, j)) ok = false;
    return m.get(i, j);
  };
  for (const auto& [ij, A] : m.F) {
    auto [i, j] = ij;
    if (m.has(-j, -i)) {
      QMat s = A + m.get(-j, -i) * Rat(theta(f, i, j));
      if (!s.is_zero()) rep.fail("F_" + std::to_string(i) + std::to_string(j) + " + theta F_{-j,-i} != 0");
    }
    for (const auto& [kl, B] : m.F) {
      auto [k, l] = kl;
      bool ok = true;
      QMat rhs(m.d, m.d);
      Rat th(theta(f, i, j));
      if (j == k) rhs += lookup(i, l, ok);
      if (i == l) rhs -= lookup(k, j, ok);
      if (j == -l) rhs += lookup(k, -i, ok) * th;
      if (i == -k) rhs -= lookup(-j, l, ok) * th;
      QMat diff = commutator(A, B) - rhs;
      if (!diff.is_zero() || !ok)
        rep.fail("[F_(" + std::to_string(i) + "," + std::to_string(j) + "), F_(" + std::to_string(k) + "," +
                 std::to_string(l) + ")]" + (ok ? "" : " leaves the subalgebra"));
    }
  }
  rep.detail = lie_name(m.algebra) + ", dim " + std::to_string(m.d);
  return rep;
}

LabeledMatrix<Rat> f_prime(const LieModule& m, const std::vector<int>& g_diag) {
  IndexSet v = IndexSet::plain(m.d);
  LabeledMatrix<Rat> out({m.index, v});
  auto labels = m.index.labels();
  if (g_diag.size() != labels.size()) throw MathError("f_prime: G diagonal has the wrong size");
  for (const auto& [ij, A] : m.F) {
    auto [i, j] = ij;
    Rat c(g_diag[m.index.pos(i)] + g_diag[m.index.pos(j)]);
    if (sgn(c) == 0) continue;
    for (int a = 0; a < m.d; ++a)
      for (int b = 0; b < m.d; ++b)
        if (sgn(A(a, b)) != 0) out.set({i, a + 1}, {j, b + 1}, A(a, b) * c);
  }
  return out;
}

}  // namespace twy
