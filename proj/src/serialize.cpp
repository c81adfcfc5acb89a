#include "twy/serialize.hpp"

#include <fstream>

namespace twy {

namespace {

template <class F>
auto guarded(const std::string& what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("cannot read " + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Family parse_family(const std::string& s) {
  if (s == "orthogonal") return Family::Orthogonal;
  if (s == "symplectic") return Family::Symplectic;
  throw ParseError("unknown family \"" + s + "\"");
}

Json entries_to_json(const RFLabeled& S) {
  Json out = Json::array();
  for (size_t i = 0; i < S.dim(); ++i)
    for (const auto& [j, x] : S.row(i))
      out.push_back({{"row", S.unflat(i)}, {"col", S.unflat(j)}, {"value", to_json(x)}});
  return out;
}

void entries_from_json(RFLabeled& S, const Json& arr) {
  if (!arr.is_array()) throw ParseError("matrix entries must be an array");
  for (const auto& e : arr)
    S.set(field(e, "row").get<std::vector<int>>(), field(e, "col").get<std::vector<int>>(),
          ratfunc_from_json(field(e, "value")));
}

Json vec_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::vector<Rat> vec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

void check_kind(const Json& j, const std::string& kind) {
  if (j.contains("kind") && j.at("kind") != kind)
    throw ParseError("expected a \"" + kind + "\" file, got \"" + j.at("kind").dump() + "\"");
}

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const PairType& p) {
  Json j = {{"tag", tag_name(p.tag())}, {"N", p.N()}};
  if (p.is_BDI_CII() || p.is_typeA()) {
    j["p"] = p.p();
    j["q"] = p.q();
  }
  return j;
}

Json to_json(const WeightTuple& w) {
  Json mu = Json::object();
  auto labels = w.labels();
  for (size_t k = 0; k < labels.size() && k < w.mu.size(); ++k) mu[std::to_string(labels[k])] = to_json(w.mu[k]);
  return {{"kind", "weight"}, {"pair", to_json(w.pair)}, {"mu", mu}};
}

Json to_json(const Certificate& c) {
  Json P = Json::array();
  for (const auto& p : c.P) P.push_back(to_json(p));
  Json j = {{"kind", "certificate"}, {"pair", to_json(c.pair)}, {"P", P}};
  j["gamma"] = c.gamma ? to_json(*c.gamma) : Json(nullptr);
  return j;
}

Json to_json(const Verdict& v) {
  Json j = {{"kind", "verdict"},
            {"nontrivial", v.nontrivial},
            {"finite_dim", finite_dim_name(v.finite_dim)},
            {"diagnostics", v.diagnostics}};
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  return j;
}

Json to_json(const IdentityReport& r) {
  return {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"witnesses", r.witnesses}};
}

Json to_json(const Report& r) {
  Json items = Json::array();
  for (const auto& it : r.items) items.push_back(to_json(it));
  return {{"kind", "report"}, {"pass", r.pass()}, {"items", items}};
}

Json to_json(const TwistedModule& m) {
  Json j = {{"kind", "twisted_module"}, {"pair", to_json(m.pair)}, {"dim", m.d}, {"note", m.note}};
  j["hw_hint"] = m.hw_hint ? vec_to_json(*m.hw_hint) : Json(nullptr);
  j["S"] = entries_to_json(m.S);
  return j;
}

Json to_json(const XModule& x) {
  Json j = {{"kind", "x_module"}, {"N", x.N}, {"family", family_name(x.family)}, {"dim", x.d}};
  j["hw_hint"] = x.hw_hint ? vec_to_json(*x.hw_hint) : Json(nullptr);
  j["T"] = entries_to_json(x.T);
  return j;
}

Json to_json(const MRResult& r) {
  Json P = Json::array();
  for (const auto& p : r.P) P.push_back(to_json(p));
  Json j = {{"kind", "mr_result"},
            {"nontrivial", r.nontrivial},
            {"finite_dim", status_name(r.finite_dim)},
            {"P_from_2", P},
            {"diagnostics", r.diagnostics}};
  j["gamma"] = r.gamma ? to_json(*r.gamma) : Json(nullptr);
  return j;
}

Rat rat_from_json(const Json& j) {
  return guarded("rational", [&] {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw ParseError("rationals must be strings or integers, got " + j.dump());
  });
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomials are coefficient arrays, got " + j.dump());
  return Poly(vec_from_json(j));
}

RatFunc ratfunc_from_json(const Json& j) {
  return guarded("rational function", [&] {
    if (j.is_string() || j.is_number()) return RatFunc(rat_from_json(j));
    Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(1);
    return RatFunc(poly_from_json(field(j, "num")), den);
  });
}

PairType pair_from_json(const Json& j) {
  return guarded("pair", [&] {
    int p = j.value("p", 0), q = j.value("q", 0);
    return PairType::parse(field(j, "tag").get<std::string>(), field(j, "N").get<int>(), p, q);
  });
}

WeightTuple weight_from_json(const Json& j) {
  check_kind(j, "weight");
  WeightTuple w{pair_from_json(field(j, "pair")), {}};
  const Json& mu = field(j, "mu");
  for (int l : w.labels()) {
    std::string key = std::to_string(l);
    if (!mu.contains(key)) throw ParseError("weight is missing mu_" + key);
    w.mu.push_back(ratfunc_from_json(mu.at(key)));
  }
  if (mu.size() != w.mu.size()) throw ParseError("weight has components outside the index set");
  return w;
}

Certificate certificate_from_json(const Json& j) {
  check_kind(j, "certificate");
  Certificate c{pair_from_json(field(j, "pair")), {}, std::nullopt};
  for (const auto& p : field(j, "P")) c.P.push_back(poly_from_json(p));
  if (j.contains("gamma") && !j.at("gamma").is_null()) c.gamma = rat_from_json(j.at("gamma"));
  return c;
}

TwistedModule module_from_json(const Json& j) {
  check_kind(j, "twisted_module");
  return guarded("module", [&] {
    TwistedModule m;
    m.pair = pair_from_json(field(j, "pair"));
    m.d = field(j, "dim").get<int>();
    if (m.d < 1) throw ParseError("module dimension must be positive");
    m.note = j.value("note", "");
    if (j.contains("hw_hint") && !j.at("hw_hint").is_null()) m.hw_hint = vec_from_json(j.at("hw_hint"));
    m.S = RFLabeled({m.pair.index(), IndexSet::plain(m.d)});
    entries_from_json(m.S, field(j, "S"));
    return m;
  });
}

XModule xmodule_from_json(const Json& j) {
  check_kind(j, "x_module");
  return guarded("X-module", [&] {
    XModule x;
    x.N = field(j, "N").get<int>();
    x.family = parse_family(field(j, "family").get<std::string>());
    x.d = field(j, "dim").get<int>();
    if (x.N < 2 || x.d < 1) throw ParseError("bad X-module dimensions");
    if (j.contains("hw_hint") && !j.at("hw_hint").is_null()) x.hw_hint = vec_from_json(j.at("hw_hint"));
    x.T = RFLabeled({IndexSet::of_size(x.N), IndexSet::plain(x.d)});
    entries_from_json(x.T, field(j, "T"));
    return x;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace twy
