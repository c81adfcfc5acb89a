#include "twy/identity.hpp"

#include <sstream>

namespace twy {

int max_degree(const LabeledMatrix<Poly>& m) {
  int d = 0;
  for (size_t i = 0; i < m.dim(); ++i)
    for (const auto& [j, p] : m.row(i)) d = std::max(d, p.deg());
  return d;
}

namespace {

std::pair<int, int> bidegree(const std::vector<Factor>& fs) {
  int du = 0, dv = 0;
  for (const auto& f : fs) {
    int d = max_degree(f.m->hat);
    if (sgn(f.a) != 0) du += d;
    if (sgn(f.b) != 0) dv += d;
  }
  return {du, dv};
}

LabeledMatrix<Rat> evaluate(const std::vector<Factor>& fs, const std::vector<IndexSet>& legs,
                            const Rat& u, const Rat& v) {
  LabeledMatrix<Rat> acc = LabeledMatrix<Rat>::identity(legs);
  for (const auto& f : fs) {
    Rat x = f.a * u + f.b * v + f.c;
    auto m = f.m->hat.map([&](const Poly& p) { return p.eval(x); });
    acc = acc * leg_embed(m, f.where, legs);
  }
  return acc;
}

std::string labels(const std::vector<int>& l) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < l.size(); ++k) os << (k ? "," : "") << l[k];
  os << ")";
  return os.str();
}

}  // namespace

IdentityReport check_product_identity(std::string name, const std::vector<IndexSet>& legs,
                                      const std::vector<Factor>& lhs, const std::vector<Factor>& rhs) {
  IdentityReport rep{std::move(name)};
  auto [lu, lv] = bidegree(lhs);
  auto [ru, rv] = bidegree(rhs);
  int du = std::max(lu, ru), dv = std::max(lv, rv);
  for (int s = 0; s <= du; ++s)
    for (int t = 0; t <= dv; ++t) {
      // offsets keep the grid away from small integers where nothing special
      // happens anyway; any distinct points would do
      Rat u = Rat(s) + rat(1, 3), v = Rat(t) - rat(2, 7);
      auto diff = evaluate(lhs, legs, u, v) - evaluate(rhs, legs, u, v);
      for (size_t i = 0; i < diff.dim() && rep.witnesses.size() < IdentityReport::kMaxWitnesses; ++i)
        for (const auto& [j, x] : diff.row(i)) {
          rep.fail(labels(diff.unflat(i)) + "," + labels(diff.unflat(j)) + " at (u,v)=(" + to_string(u) +
                   "," + to_string(v) + "): " + to_string(x));
          break;
        }
      if (!rep.pass) {
        rep.detail = "grid " + std::to_string(du + 1) + "x" + std::to_string(dv + 1);
        return rep;
      }
    }
  rep.detail = "grid " + std::to_string(du + 1) + "x" + std::to_string(dv + 1);
  return rep;
}

}  // namespace twy
