// Command-line front end: identity verification, classification of highest
// weights and construction of modules.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twy/classify.hpp"
#include "twy/reps.hpp"
#include "twy/serialize.hpp"

using namespace twy;

namespace {

enum Exit { kPass = 0, kIdentityFailure = 1, kConfigError = 2, kInconclusive = 3, kIOError = 4 };

struct Options {
  bool json = false;
  std::string out;
};

struct PairOpts {
  std::string tag;
  int N = 0, p = 0, q = 0;
  PairType make() const { return PairType::parse(tag, N, p, q); }
};

void add_pair_opts(CLI::App* c, PairOpts& o, bool need_N = true) {
  c->add_option("--pair", o.tag, "pair type (B0 C0 D0 CI DIII BIa BIb CII DIa AIII)")->required();
  auto* n = c->add_option("--N", o.N, "matrix size N");
  if (need_N) n->required();
  c->add_option("--p", o.p, "p for BIa/BIb/CII/DIa/AIII");
  c->add_option("--q", o.q, "q for BIa/BIb/CII/DIa/AIII");
}

Rat arg_rat(const std::string& s) { return parse_rat(s); }

void emit(const Options& opt, const Json& j, const std::string& text) {
  if (!opt.out.empty()) write_json_file(opt.out, j);
  if (opt.json)
    std::cout << j.dump(1) << "\n";
  else
    std::cout << text;
}

int report_exit(const Report& r) { return r.pass() ? kPass : kIdentityFailure; }

// ---- verify

int verify_rmatrix(const Options& opt, const std::string& family, const std::string& form, int N) {
  Family f = form == "symplectic" ? Family::Symplectic : Family::Orthogonal;
  if (form != "symplectic" && form != "orthogonal") throw ConfigError("--form must be orthogonal or symplectic");
  RFamily fam;
  if (family == "glN")
    fam = RFamily::glN;
  else if (family == "gN")
    fam = RFamily::gN;
  else
    throw ConfigError("--family must be glN or gN");
  auto R = build_R(N, fam, f);
  Report rep;
  rep.add(check_YBE(R));
  rep.add(check_unitarity_R(R));
  emit(opt, to_json(rep), rep.text());
  return report_exit(rep);
}

int verify_kmatrix(const Options& opt, const PairOpts& po, const std::optional<std::string>& a) {
  PairType pair = po.make();
  RFLabeled K = a ? build_K_oneparam(pair, arg_rat(*a)) : build_K(pair);
  Report rep;
  rep.add(check_RE(build_R(pair), K));
  if (!a) rep.add(check_unitarity_K(K));
  if (!pair.is_typeA()) {
    rep.add(check_symmetry(K, pair));
    if (!a) rep.add(check_p_identity(K, pair));
  }
  emit(opt, to_json(rep), rep.text());
  return report_exit(rep);
}

int verify_module(const Options& opt, const std::string& in) {
  TwistedModule m = module_from_json(read_json_file(in));
  Report rep = verify_twisted(m);
  auto w = central_w(m);
  Json j = to_json(rep);
  j["w"] = w ? to_json(*w) : Json(nullptr);
  std::string text = rep.text() + (w ? "w(u) = " + w->str() + "\n" : "w(u) is not scalar\n");
  emit(opt, j, text);
  return report_exit(rep);
}

// ---- classify

WeightTuple weight_from_file(const Json& j) {
  if (j.value("kind", "") == "twisted_module") {
    auto hw = highest_weight_extract(module_from_json(j));
    if (!hw.found) throw MathError("module has no highest weight vector: " + hw.note);
    return hw.weight;
  }
  return weight_from_json(j);
}

int cmd_classify(const Options& opt, const std::string& in, int deg_max) {
  WeightTuple w = weight_from_file(read_json_file(in));
  if (w.pair.is_typeA()) {
    MRResult r = check_MR(w.mu, w.pair.q(), deg_max);
    std::string text = std::string("nontrivial: ") + (r.nontrivial ? "yes" : "no") +
                       "\nfinite-dimensional (MR conditions): " + status_name(r.finite_dim) + "\n";
    for (size_t k = 0; k < r.P.size(); ++k) text += "P" + std::to_string(k + 2) + " = " + r.P[k].str() + "\n";
    if (r.gamma) text += "gamma = " + to_string(*r.gamma) + "\n";
    for (const auto& d : r.diagnostics) text += "  " + d + "\n";
    emit(opt, to_json(r), text);
    return r.finite_dim == SolveStatus::Inconclusive ? kInconclusive : kPass;
  }
  Verdict v = classify(w, deg_max);
  std::string text = std::string("nontrivial: ") + (v.nontrivial ? "yes" : "no") +
                     "\nfinite-dimensional: " + finite_dim_name(v.finite_dim) + "\n";
  if (v.certificate) {
    for (size_t k = 0; k < v.certificate->P.size(); ++k)
      text += "P" + std::to_string(k + 1) + " = " + v.certificate->P[k].str() + "\n";
    if (v.certificate->gamma) text += "gamma = " + to_string(*v.certificate->gamma) + "\n";
  }
  for (const auto& d : v.diagnostics) text += "  " + d + "\n";
  emit(opt, to_json(v), text);
  return v.finite_dim == FiniteDim::Inconclusive ? kInconclusive : kPass;
}

int cmd_mufactor(const Options& opt, const std::string& in, int order) {
  WeightTuple w = weight_from_file(read_json_file(in));
  if (w.pair.tag() != PairTag::B0 || w.pair.N() != 3) throw ConfigError("mufactor needs an so3 (B0, N = 3) weight");
  TruncSeries m = mu_factorize_B0(w.at(0), w.at(1), order);
  Json coeffs = Json::array();
  std::string text = "mu°(u) through order " + std::to_string(order) + ":\n";
  for (int k = 0; k <= m.order(); ++k) {
    coeffs.push_back(to_json(m[k]));
    text += "  u^-" + std::to_string(k) + ": " + to_string(m[k]) + "\n";
  }
  emit(opt, {{"kind", "series"}, {"order", order}, {"coeffs", coeffs}}, text);
  return kPass;
}

// ---- build

int finish_module(const Options& opt, const TwistedModule& m) {
  Report rep = verify_twisted(m);
  if (!rep.pass()) {
    std::cerr << "constructed module fails verification:\n" << rep.text();
    return kIdentityFailure;
  }
  Json j = to_json(m);
  if (!opt.out.empty()) {
    write_json_file(opt.out, j);
    if (opt.json)
      std::cout << to_json(rep).dump(1) << "\n";
    else
      std::cout << rep.text() << "wrote " << opt.out << " (dim " << m.d << ")\n";
  } else {
    std::cout << j.dump(1) << "\n";
  }
  return kPass;
}

int build_eval(const Options& opt, const std::string& tag, const std::string& mu, const std::string& mu2) {
  PairTag t = parse_tag(tag);
  switch (t) {
    case PairTag::C0:
    case PairTag::CI: return finish_module(opt, eval_sp2(t, arg_rat(mu)));
    case PairTag::B0: return finish_module(opt, eval_so3(arg_rat(mu)));
    case PairTag::D0:
    case PairTag::DIII: return finish_module(opt, eval_so4(t, arg_rat(mu), arg_rat(mu2)));
    default: throw ConfigError("evaluation modules exist for C0, CI, B0, D0 and DIII");
  }
}

int build_bridge(const Options& opt, const std::string& tag, const std::vector<std::string>& w) {
  PairTag t = parse_tag(tag);
  auto need = [&](size_t k) {
    if (w.size() != k) throw ConfigError(tag + " bridge needs " + std::to_string(k) + " --ols weight(s)");
  };
  auto minus = [&](size_t k) { return olshanskii_eval(-1, lie_module(LieAlgebra::sp2, {arg_rat(w[k])})); };
  auto plus = [&](size_t k) { return olshanskii_eval(1, lie_module(LieAlgebra::so2, {arg_rat(w[k])})); };
  switch (t) {
    case PairTag::B0: need(1); return finish_module(opt, bridge_so3(minus(0)));
    case PairTag::C0: need(1); return finish_module(opt, bridge_sp2(t, minus(0)));
    case PairTag::CI: need(1); return finish_module(opt, bridge_sp2(t, plus(0)));
    case PairTag::D0: need(2); return finish_module(opt, bridge_so4(t, minus(0), minus(1)));
    case PairTag::DIII: need(2); return finish_module(opt, bridge_so4(t, plus(0), minus(1)));
    default: throw ConfigError("bridges exist for B0, C0, CI, D0 and DIII");
  }
}

int build_xvector(const Options& opt, int N, const std::string& form, const std::string& a) {
  if (form != "symplectic" && form != "orthogonal") throw ConfigError("--form must be orthogonal or symplectic");
  XModule x = vector_eval_X(N, form == "symplectic" ? Family::Symplectic : Family::Orthogonal, arg_rat(a));
  IdentityReport rtt = check_RTT(x);
  if (!rtt.pass) {
    std::cerr << "X-module fails the RTT relation\n";
    return kIdentityFailure;
  }
  Json j = to_json(x);
  if (!opt.out.empty()) {
    write_json_file(opt.out, j);
    std::cout << "PASS RTT\nwrote " << opt.out << "\n";
  } else {
    std::cout << j.dump(1) << "\n";
  }
  return kPass;
}

int build_restrict(const Options& opt, const std::string& op, const std::string& in) {
  TwistedModule m = module_from_json(read_json_file(in));
  if (op == "vplus") {
    Restriction r = restrict_Vplus(m);
    if (!r.module) {
      std::cerr << r.report.text();
      return kIdentityFailure;
    }
    std::cerr << r.report.text();
    return finish_module(opt, *r.module);
  }
  if (op == "vj") {
    VJRestriction r = restrict_VJ(m);
    Json B = Json::array();
    for (size_t i = 0; i < r.B.dim(); ++i)
      for (const auto& [j, x] : r.B.row(i))
        B.push_back({{"row", r.B.unflat(i)}, {"col", r.B.unflat(j)}, {"value", to_json(x)}});
    Json j = {{"kind", "vj_module"}, {"n", r.n}, {"dim", r.dJ}, {"B", B}, {"report", to_json(r.report)}};
    if (!opt.out.empty()) write_json_file(opt.out, j);
    if (opt.json || opt.out.empty())
      std::cout << j.dump(1) << "\n";
    else
      std::cout << r.report.text() << "wrote " << opt.out << "\n";
    return report_exit(r.report);
  }
  throw ConfigError("--op must be vplus or vj");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twyang: twisted Yangian identities, highest weights and classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  int deg_max = kDefaultDegMax;
  int order = default_trunc_order();

  auto* verify = app.add_subcommand("verify", "verify defining identities");
  verify->require_subcommand(1);
  std::string family = "gN", form = "orthogonal", in;
  int N = 0;
  auto* vr = verify->add_subcommand("rmatrix", "YBE and unitarity of R(u)");
  vr->add_option("--family", family, "glN or gN")->required();
  vr->add_option("--form", form, "orthogonal or symplectic (gN only)");
  vr->add_option("--N", N, "matrix size")->required();
  PairOpts kpo;
  std::optional<std::string> ka;
  auto* vk = verify->add_subcommand("kmatrix", "reflection equation, unitarity and symmetry of K(u)");
  add_pair_opts(vk, kpo);
  vk->add_option("--a", ka, "use the one-parameter solution G + a/u (CI, DIII)");
  auto* vm = verify->add_subcommand("module", "verify a serialized module");
  vm->add_option("--in", in, "module file")->required()->check(CLI::ExistingFile);

  auto* cls = app.add_subcommand("classify", "classify a highest weight (weight or module file)");
  cls->add_option("--in", in, "weight or module file")->required()->check(CLI::ExistingFile);
  cls->add_option("--deg-max", deg_max, "largest Drinfeld polynomial degree tried");

  auto* muf = app.add_subcommand("mufactor", "series factorization of an so3 weight");
  muf->add_option("--in", in, "weight or module file")->required()->check(CLI::ExistingFile);
  muf->add_option("--order", order, "truncation order D (default from TWYANG_TRUNC_ORDER)");

  auto* build = app.add_subcommand("build", "construct a module");
  build->require_subcommand(1);
  build->add_option("--out", opt.out, "output file");
  std::string tag, mu = "0", mu2 = "0", a = "0", op, xfile, vfile;
  std::vector<std::string> ols;
  auto* be = build->add_subcommand("eval", "evaluation module");
  be->add_option("--pair", tag, "C0, CI, B0, D0 or DIII")->required();
  be->add_option("--mu", mu, "weight (first component)");
  be->add_option("--mu2", mu2, "second weight component (D0, DIII)");
  PairOpts opo;
  std::optional<std::string> oa;
  auto* bo = build->add_subcommand("onedim", "one-dimensional module");
  add_pair_opts(bo, opo);
  bo->add_option("--a", oa, "parameter of G + a/u (CI, DIII)");
  auto* bx = build->add_subcommand("xvector", "vector evaluation module of X(g_N)");
  bx->add_option("--N", N, "matrix size")->required();
  bx->add_option("--form", form, "orthogonal or symplectic");
  bx->add_option("--a", a, "evaluation shift");
  auto* bt = build->add_subcommand("tensor", "X(g_N)-module tensor twisted module");
  bt->add_option("--x", xfile, "X-module file")->required()->check(CLI::ExistingFile);
  bt->add_option("--v", vfile, "twisted module file")->required()->check(CLI::ExistingFile);
  auto* bb = build->add_subcommand("bridge", "module obtained from Olshanskii evaluation modules");
  bb->add_option("--pair", tag, "B0, C0, CI, D0 or DIII")->required();
  bb->add_option("--ols", ols, "Lie weight(s) of the Olshanskii modules")->required();
  auto* brs = build->add_subcommand("restrict", "restriction to V+ or V^J");
  brs->add_option("--op", op, "vplus or vj")->required();
  brs->add_option("--in", in, "module file")->required()->check(CLI::ExistingFile);
  for (auto* c : {be, bo, bx, bt, bb, brs}) c->add_option("--out", opt.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kConfigError;
  }

  try {
    if (*vr) return verify_rmatrix(opt, family, form, N);
    if (*vk) return verify_kmatrix(opt, kpo, ka);
    if (*vm) return verify_module(opt, in);
    if (*cls) return cmd_classify(opt, in, deg_max);
    if (*muf) return cmd_mufactor(opt, in, order);
    if (*be) return build_eval(opt, tag, mu, mu2);
    if (*bo) {
      PairType p = opo.make();
      return finish_module(opt, onedim_module(p, oa ? std::optional<Rat>(arg_rat(*oa)) : std::nullopt));
    }
    if (*bx) return build_xvector(opt, N, form, a);
    if (*bt) {
      XModule x = xmodule_from_json(read_json_file(xfile));
      TwistedModule v = module_from_json(read_json_file(vfile));
      return finish_module(opt, tensor_twisted(x, v));
    }
    if (*bb) return build_bridge(opt, tag, ols);
    if (*brs) return build_restrict(opt, op, in);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIOError;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIdentityFailure;
  }
  return kConfigError;
}
