#include "syv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "syv/composite.hpp"

namespace syv {

using nlohmann::json;

namespace {

const std::vector<std::string> kChecks = {"jacobi", "presentation", "ev",      "coproduct",       "coassoc",
                                          "psi1",   "psi2",         "psi3",    "psi4",            "concl1",
                                          "concl2", "d0-closed",    "miura",   "wgen-crosscheck", "main-theorem"};

const std::vector<std::string> kVariants = {"boundary-printed",   "ev-printed-sign",    "psi1-printed-index",
                                            "psi2-printed-sign",  "psi4-printed-index", "eps-body",
                                            "phi-printed-sign"};

bool has_variant(const VerifyConfig& c, const std::string& v) {
  return std::find(c.variants.begin(), c.variants.end(), v) != c.variants.end();
}

bool yangian_check(const std::string& c) {
  return c == "presentation" || c == "ev" || c == "coproduct" || c == "coassoc" || c.rfind("psi", 0) == 0 ||
         c.rfind("concl", 0) == 0;
}

std::pair<int, int> resolve_mn(const std::string& name, const VerifyConfig& c) {
  int dm = 2, dn = 3;
  if (name == "concl1" || name == "concl2") dm = 3, dn = 2;
  return {c.m.value_or(dm), c.n.value_or(dn)};
}

PartitionData resolve_partition(const std::string& name, const VerifyConfig& c) {
  bool big = name == "wgen-crosscheck" || name == "main-theorem";
  std::vector<int> du = big ? std::vector<int>{5, 2} : std::vector<int>{3, 1};
  std::vector<int> dq = big ? std::vector<int>{4, 2} : std::vector<int>{2, 1};
  return PartitionData(c.u.value_or(du), c.q.value_or(dq));
}

std::vector<int> resolve_s(const std::string& name, const VerifyConfig& c, const PartitionData& P) {
  if (c.s) return {*c.s};
  if (name == "main-theorem") return {std::min(P.l(), 2)};
  std::vector<int> all;
  for (int s = 1; s <= P.l(); ++s) all.push_back(s);
  return all;
}

MapVariants map_variants(const VerifyConfig& c) {
  MapVariants v;
  v.ev_printed_sign = has_variant(c, "ev-printed-sign");
  v.psi1_printed_index = has_variant(c, "psi1-printed-index");
  v.psi2_printed_sign = has_variant(c, "psi2-printed-sign");
  v.psi4_printed_index = has_variant(c, "psi4-printed-index");
  return v;
}

json variants_json(const VerifyConfig& c, const std::vector<std::string>& relevant) {
  json a = json::array();
  for (const auto& v : c.variants)
    if (std::find(relevant.begin(), relevant.end(), v) != relevant.end()) a.push_back(v);
  return a;
}

json counterexample_json(const std::string& label, const Counterexample& ce, const PbwEngine& eng) {
  return json{{"label", label}, {"vector", eng.str(ce.vector)}, {"lhs", eng.str(ce.lhs)}, {"rhs", eng.str(ce.rhs)}};
}

void absorb_suite(CheckRecord& r, const SuiteReport& rep, const PbwEngine& eng, const std::string& prefix = "") {
  for (const auto& x : rep.results) {
    if (x.pass) continue;
    std::string label = prefix + x.family + " " + x.label;
    r.failures.push_back(label);
    if (!r.counterexample) {
      if (x.counterexample)
        r.counterexample = counterexample_json(label, *x.counterexample, eng);
      else
        r.counterexample = json{{"label", label}, {"note", x.note}};
    }
  }
}

std::shared_ptr<AffineGl> affine(int m, int n) {
  return std::make_shared<AffineGl>(m, n, PolyScalar::c(), PolyScalar(1));
}

std::vector<Mode> modes_between(const ModeAlgebra& g, int lo, int hi) {
  std::vector<Mode> out;
  for (int s = lo; s <= hi; ++s)
    for (Mode x : g.modes_at(s, 0)) out.push_back(x);
  return out;
}

void run_jacobi(CheckRecord& r, const VerifyConfig& c) {
  const int fm = c.m.value_or(2), fn = c.n.value_or(2);
  auto [am, an] = resolve_mn("jacobi", c);
  PartitionData P = resolve_partition("jacobi", c);
  r.parameters = {{"finite", {fm, fn}}, {"affine", {am, an}}, {"affine_modes", "|s| <= 2"},
                  {"u", P.u_vec()}, {"q", P.q_vec()}, {"a_modes", "|s| <= 2"}};
  auto one = [&](const std::string& label, const ModeAlgebra& g, const std::vector<Mode>& ms) {
    for (auto [kind, res] : {std::pair{"skew", check_super_skew(g, ms)}, std::pair{"jacobi", check_super_jacobi(g, ms)}})
      if (res) {
        r.failures.push_back(label + " " + kind);
        if (!r.counterexample) r.counterexample = json{{"label", label + " " + kind}, {"note", *res}};
      }
  };
  AffineGl fin(fm, fn, PolyScalar::c(), PolyScalar(1));
  one("gl finite", fin, fin.modes_at(0, 0));
  AffineGl aff(am, an, PolyScalar::c(), PolyScalar(1));
  one("gl affine", aff, modes_between(aff, -2, 2));
  AlgebraA A(P, PolyScalar::k());
  one("a", A, modes_between(A, -2, 2));
}

void run_yangian(CheckRecord& r, const std::string& name, const VerifyConfig& c) {
  auto [m, n] = resolve_mn(name, c);
  const int D = c.degree;
  r.parameters = {{"m", m}, {"n", n}, {"degree", D}};
  const MapVariants var = map_variants(c);
  SuiteOptions opt;
  opt.printed_boundary = has_variant(c, "boundary-printed");
  const PolyScalar a = PolyScalar::a();

  if (name == "presentation") {
    Context ctx;
    auto g = affine(m, n);
    ctx.add(g);
    VacuumModule V(ctx);
    Evaluator ev(V);
    absorb_suite(r, check_relations(presentation_relations(*g), ev, V.basis_upto(D)), V.engine());
    return;
  }
  if (name == "concl1" || name == "concl2") {
    int kind = name == "concl1" ? 1 : 2;
    Context ctx;
    auto g = affine(m, n);
    ctx.add(g);
    VacuumModule V(ctx);
    Evaluator ev(V);
    auto basis = V.basis_upto(D);
    for (int b = 1; b <= m + n; ++b)
      absorb_suite(r, check_relations(concl_relations(*g, kind, b), ev, basis), V.engine());
    r.parameters["b"] = "1.." + std::to_string(m + n);
    return;
  }
  if (name == "ev") {
    r.parameters["variants"] = variants_json(c, {"boundary-printed", "ev-printed-sign"});
    Context ctx;
    ctx.add(affine(m, n));
    VacuumModule V(ctx);
    Evaluator ev(V);
    absorb_suite(r, check_assignment(ev_assignment(ctx, 0, a, var), ev, V.basis_upto(D), opt), V.engine());
    return;
  }
  if (name == "coproduct") {
    r.parameters["variants"] = variants_json(c, {"boundary-printed", "ev-printed-sign"});
    const int per = std::max(1, (D + 1) / 2);
    r.parameters["per_factor_degree"] = per;
    Context ctx;
    auto g = affine(m, n);
    ctx.add(g);
    ctx.add(g);
    VacuumModule V(ctx);
    Evaluator ev(V);
    absorb_suite(r, check_assignment(coproduct_assignment(ctx, {a, a}, var), ev, V.basis_upto(D, {per, per}), opt),
                 V.engine());
    return;
  }
  if (name == "coassoc") {
    r.parameters["variants"] = variants_json(c, {"ev-printed-sign"});
    Context ctx;
    auto g = affine(m, n);
    for (int i = 0; i < 3; ++i) ctx.add(g);
    VacuumModule V(ctx);
    Evaluator ev(V);
    absorb_suite(r, check_relations(coassoc_relations(ctx, {a, a, a}, var), ev, V.basis_upto(D)), V.engine());
    return;
  }
  // psi1..psi4: (m|n) is the source
  const int k = name[3] - '0';
  r.parameters["variants"] =
      variants_json(c, {"boundary-printed", "ev-printed-sign", "psi1-printed-index", "psi2-printed-sign",
                        "psi4-printed-index"});
  const int tm = (k == 1 || k == 3) ? m + 1 : m, tn = (k == 2 || k == 4) ? n + 1 : n;
  r.parameters["target"] = {tm, tn};
  Context ctx;
  ctx.add(affine(tm, tn));
  MapSpec spec = psi_map(k, ctx, 0, a, var);
  r.parameters["source_eps"] = spec.assignment.eps().str();
  VacuumModule V(ctx);
  Evaluator ev(V);
  auto basis = V.basis_upto(D);
  absorb_suite(r, check_relations(spec.consistency, ev, basis), V.engine(), "table ");
  absorb_suite(r, check_assignment(spec.assignment, ev, basis, opt), V.engine());
}

void run_walg(CheckRecord& r, const std::string& name, const VerifyConfig& c) {
  PartitionData P = resolve_partition(name, c);
  std::vector<int> ss = resolve_s(name, c, P);
  r.parameters = {{"u", P.u_vec()}, {"q", P.q_vec()}, {"s", ss}};
  WAlgebra w(P);
  auto rc = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };
  auto fail_note = [&](const std::string& label, const std::string& note) {
    r.failures.push_back(label);
    if (!r.counterexample) r.counterexample = json{{"label", label}, {"note", note}};
  };
  if (name == "d0-closed") {
    r.parameters["forms"] = {"leibniz", "field"};
    int pairs = 0;
    for (int s : ss) pairs += static_cast<int>(P.new_rows(s).size() * P.new_rows(s).size());
    r.parameters["pairs"] = pairs;
    for (int s : ss)
      for (int a : P.new_rows(s))
        for (int b : P.new_rows(s))
          for (int deg : {1, 2}) {
            VertexState W = deg == 1 ? build_W1(w, s, a, b) : build_W2(w, s, a, b);
            std::string label = "W" + std::to_string(deg) + "_{" + rc(a, b) + "} s=" + std::to_string(s);
            VertexState d = w.d0(W);
            if (!d.is_zero()) fail_note(label + " leibniz", "d0 = " + w.str(d));
            VertexState f = w.d0_field(W);
            if (!f.is_zero()) fail_note(label + " field", "d0 = " + w.str(f));
          }
    return;
  }
  if (name == "miura") {
    int pairs = 0;
    for (int s : ss) pairs += static_cast<int>(P.new_rows(s).size() * P.new_rows(s).size());
    r.parameters["pairs"] = pairs;
    for (int s : ss) {
      BlockSide side(P, s);
      for (int a : P.new_rows(s))
        for (int b : P.new_rows(s)) {
          std::string tail = "_{" + rc(a, b) + "} s=" + std::to_string(s);
          auto m1 = miura(build_W1(w, s, a, b), side), d1 = mu_W1_display(side, s, a, b);
          if (!(m1 == d1)) fail_note("W1" + tail, "projection " + side.engine().str(m1) + " vs " + side.engine().str(d1));
          auto m2 = miura(build_W2(w, s, a, b), side), d2 = mu_W2_display(side, s, a, b);
          if (!(m2 == d2)) fail_note("W2" + tail, "projection " + side.engine().str(m2) + " vs " + side.engine().str(d2));
        }
    }
    return;
  }
  // wgen-crosscheck
  r.parameters["degree"] = c.degree;
  json sizes = json::array();
  for (int s : ss) {
    BlockSide side(P, s);
    const int A = P.u(1) - P.u(s) + 1;
    ExprPtr rhs = mode_of(miura(build_W2(w, s, A, A + 1), side), 1);
    VacuumModule mod(side.context());
    Evaluator ev(mod);
    auto basis = mod.basis_upto(c.degree);
    sizes.push_back(basis.size());
    if (auto ce = op_equal(ev, w_gen_expansion(side, s), rhs, basis)) {
      std::string label = "s=" + std::to_string(s);
      r.failures.push_back(label);
      if (!r.counterexample) r.counterexample = counterexample_json(label, *ce, mod.engine());
    }
  }
  r.parameters["basis_sizes"] = sizes;
}

void run_main(CheckRecord& r, const VerifyConfig& c) {
  PartitionData P = resolve_partition("main-theorem", c);
  const int s = resolve_s("main-theorem", c, P).front();
  MainTheoremOptions opt;
  opt.degree = c.degree;
  opt.relation_degree = c.degree;
  opt.eps_body_variant = has_variant(c, "eps-body");
  opt.phi.printed_sign = has_variant(c, "phi-printed-sign");
  opt.sample = c.sample;
  r.parameters = {{"u", P.u_vec()},
                  {"q", P.q_vec()},
                  {"s", s},
                  {"degree", c.degree},
                  {"sample", c.sample},
                  {"variants", variants_json(c, {"eps-body", "phi-printed-sign"})}};
  MainTheoremReport rep = check_main_theorem(P, s, opt);
  r.parameters["basis_size"] = rep.basis_size;
  r.notes = rep.notes;
  // the engine only renders monomials; rebuild it on the same block side
  std::vector<PolyScalar> cl, zl(static_cast<size_t>(s), PolyScalar(1));
  for (int t = 1; t <= s; ++t) cl.push_back(alpha_const(P, t));
  BlockSide side(P, s, cl, zl);
  VacuumModule V(side.context());
  for (const auto& ch : rep.checks) {
    if (ch.pass) continue;
    r.failures.push_back(ch.label);
    if (!r.counterexample) {
      if (ch.counterexample)
        r.counterexample = counterexample_json(ch.label, *ch.counterexample, V.engine());
      else
        r.counterexample = json{{"label", ch.label}};
    }
  }
}

}  // namespace

const std::vector<std::string>& check_names() { return kChecks; }
const std::vector<std::string>& variant_names() { return kVariants; }

VerifyConfig VerifyConfig::from_json(const json& j) {
  VerifyConfig c;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      if (k == "checks") c.checks = it->get<std::vector<std::string>>();
      else if (k == "m") c.m = it->get<int>();
      else if (k == "n") c.n = it->get<int>();
      else if (k == "u") c.u = it->get<std::vector<int>>();
      else if (k == "q") c.q = it->get<std::vector<int>>();
      else if (k == "s") c.s = it->get<int>();
      else if (k == "degree") c.degree = it->get<int>();
      else if (k == "variants") c.variants = it->get<std::vector<std::string>>();
      else if (k == "jobs") c.jobs = it->get<int>();
      else if (k == "sample") c.sample = it->get<size_t>();
      else if (k == "timings") c.timings = it->get<bool>();
      else throw ConfigError("config: unknown field '" + k + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

json VerifyConfig::to_json() const {
  json j{{"checks", checks}, {"degree", degree}, {"variants", variants}, {"jobs", jobs}, {"sample", sample}};
  if (m) j["m"] = *m;
  if (n) j["n"] = *n;
  if (u) j["u"] = *u;
  if (q) j["q"] = *q;
  if (s) j["s"] = *s;
  return j;
}

VerifyConfig validate(VerifyConfig cfg) {
  if (cfg.checks.empty()) throw ConfigError("no check selected");
  std::vector<std::string> expanded;
  for (const auto& c : cfg.checks) {
    if (c == "all") {
      for (const auto& x : kChecks)
        if (std::find(expanded.begin(), expanded.end(), x) == expanded.end()) expanded.push_back(x);
      continue;
    }
    if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end()) throw ConfigError("unknown check '" + c + "'");
    if (std::find(expanded.begin(), expanded.end(), c) == expanded.end()) expanded.push_back(c);
  }
  cfg.checks = expanded;
  for (const auto& v : cfg.variants)
    if (std::find(kVariants.begin(), kVariants.end(), v) == kVariants.end())
      throw ConfigError("unknown variant '" + v + "'");
  if (cfg.degree < 0 || cfg.degree > 4) throw ConfigError("--degree must be in 0..4");
  if (cfg.jobs < 1) throw ConfigError("--jobs must be positive");

  for (const auto& name : cfg.checks) {
    if (yangian_check(name) || name == "jacobi") {
      auto [m, n] = resolve_mn(name, cfg);
      if (m < 1 || n < 1) throw ConfigError(name + ": needs m, n >= 1");
      if (yangian_check(name) && m + n < 3) throw ConfigError(name + ": needs m + n >= 3");
    }
    if (yangian_check(name)) continue;
    std::optional<PartitionData> part;
    try {
      part = resolve_partition(name, cfg);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(name + ": invalid partition: " + e.what());
    }
    if (name == "jacobi") continue;
    const PartitionData& P = *part;
    for (int s : resolve_s(name, cfg, P)) {
      if (s < 1 || s > P.l()) throw ConfigError(name + ": s must be in 1..l");
      const int ms = P.u(s) - P.u(s + 1);
      if (name == "wgen-crosscheck" && ms < 2)
        throw ConfigError(name + ": needs u_s - u_{s+1} >= 2 so that A, A+1 are rows of block s");
      if (name == "main-theorem") {
        for (int a = 1; a <= s; ++a)
          if (P.u(a) - P.u(a + 1) < 2 || P.q(a) - P.q(a + 1) < 2)
            throw ConfigError(name + ": needs u_a - u_{a+1} >= 2 and q_a - q_{a+1} >= 2 for a <= s");
        if (s > 2)
          throw ConfigError(name + ": s <= 2 only; the level-1 image under the second generalized contraction "
                                   "is displayed for node 1 alone");
      }
    }
  }
  return cfg;
}

json CheckRecord::to_json(bool timings) const {
  json j{{"name", name}, {"parameters", parameters}, {"status", status}, {"failures", failures}, {"notes", notes}};
  j["counterexample"] = counterexample ? *counterexample : json(nullptr);
  if (timings) j["wall_time_s"] = wall_s;
  return j;
}

CheckRecord run_check(const std::string& name, const VerifyConfig& cfg) {
  CheckRecord r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  if (name == "jacobi")
    run_jacobi(r, cfg);
  else if (yangian_check(name))
    run_yangian(r, name, cfg);
  else if (name == "main-theorem")
    run_main(r, cfg);
  else
    run_walg(r, name, cfg);
  r.status = r.failures.empty() ? "pass" : "fail";
  r.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

RunResult run(const VerifyConfig& cfg0) {
  VerifyConfig cfg = validate(cfg0);
  RunResult out;
  json checks = json::array();
  for (const auto& name : cfg.checks) {
    CheckRecord r = run_check(name, cfg);
    out.pass = out.pass && r.pass();
    checks.push_back(r.to_json(cfg.timings));
  }
  out.report = json{{"config", cfg.to_json()}, {"checks", checks}, {"status", out.pass ? "pass" : "fail"}};
  return out;
}

}  // namespace syv
