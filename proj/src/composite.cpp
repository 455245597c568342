#include "syv/composite.hpp"

#include <map>
#include <stdexcept>

namespace syv {

namespace {

int sgn(int p) { return (p & 1) ? -1 : 1; }

ExprPtr ser(const AffineGl& g, int tag, int x1, int y1, int s1, int x2, int y2, int s2, const PolyScalar& c) {
  return Expr::series({{g.E(x1, y1, s1, tag), -1}, {g.E(x2, y2, s2, tag), 1}}, c);
}

}  // namespace

int PsiGen::map_label(int i) const {
  if (kind == 1) return i;
  return i > 0 ? m1 + i : -n1 + i;
}

ExprPtr PsiGen::x0(bool plus, int node, const AffineGl& tgt, int tag) const {
  SuperIndexSet S(src_m, src_n);
  const int L = S.size();
  if (node < 0 || node >= L) throw IndexError("psi-gen: node out of range");
  auto E = [&](int pi, int pj, int s, int c) {
    return Expr::mode(tgt.E(map_label(S.label_at(pi)), map_label(S.label_at(pj)), s, tag), PolyScalar(c));
  };
  // The displayed tables are the source evaluation images of the level-0
  // generators with labels pushed through map_label.
  if (node == 0) return plus ? E(L, 1, 1, 1) : E(1, L, -1, -1);
  if (plus) return E(node, node + 1, 0, 1);
  return E(node + 1, node, 0, sgn(S.parity_at_pos(node)));
}

int PsiGen::x11_node() const { return kind == 1 ? 1 : 1 + m1; }

ExprPtr PsiGen::x11_series(const AffineGl& g, int tag) const {
  const PolyScalar h = PolyScalar::h();
  std::vector<ExprPtr> t;
  if (kind == 1) {
    for (int z = m1 + 1; z <= m1 + m2; ++z) t.push_back(ser(g, tag, 1, z, -1, z, 2, 1, -h));
    for (int z = -n1 - n2; z <= -n1 - 1; ++z) t.push_back(ser(g, tag, 1, z, -1, z, 2, 1, h));
  } else {
    for (int z = -n1; z <= -1; ++z) t.push_back(ser(g, tag, z, 2 + m1, 0, 1 + m1, z, 0, h));
    for (int z = 1; z <= m1; ++z) t.push_back(ser(g, tag, z, 2 + m1, -1, 1 + m1, z, 1, h));
  }
  return Expr::sum(std::move(t));
}

PsiGen psi1_gen(int m1, int n1, int m2, int n2) {
  if (m1 < 2 || n1 < 2 || m2 < 0 || n2 < 0) throw IndexError("psi1-gen: needs m1, n1 >= 2 and m2, n2 >= 0");
  PsiGen p;
  p.kind = 1;
  p.m1 = m1, p.n1 = n1, p.m2 = m2, p.n2 = n2;
  p.src_m = m1, p.src_n = n1, p.tgt_m = m1 + m2, p.tgt_n = n1 + n2;
  p.rank_bound_met = m1 + n1 >= 5;
  return p;
}

PsiGen psi2_gen(int m1, int n1, int m2, int n2) {
  if (m2 < 2 || n2 < 2 || m1 < 0 || n1 < 0) throw IndexError("psi2-gen: needs m2, n2 >= 2 and m1, n1 >= 0");
  PsiGen p;
  p.kind = 2;
  p.m1 = m1, p.n1 = n1, p.m2 = m2, p.n2 = n2;
  p.src_m = m2, p.src_n = n2, p.tgt_m = m1 + m2, p.tgt_n = n1 + n2;
  p.eps_shift = m1 - n1;
  p.rank_bound_met = m2 + n2 >= 5;
  return p;
}

Context TensorElement::context() const {
  Context ctx;
  for (auto [m, n] : dims) ctx.add(std::make_shared<AffineGl>(m, n, PolyScalar(0), PolyScalar(0)));
  return ctx;
}

TensorElement psi_image(const PsiGen& psi, Gen g, int node) {
  AffineGl tgt(psi.tgt_m, psi.tgt_n, PolyScalar(0), PolyScalar(0));
  TensorElement x;
  x.dims = {{psi.tgt_m, psi.tgt_n}};
  if (g == Gen::H) throw std::invalid_argument("psi-gen: H images are not displayed");
  x.currents = psi.x0(g == Gen::Xp, node, tgt, 0);
  return x;
}

TensorElement apply_psi(const TensorElement& x, int factor, const PsiGen& psi) {
  if (x.dims.at(static_cast<size_t>(factor)) != std::make_pair(psi.src_m, psi.src_n))
    throw std::invalid_argument("psi-gen: factor does not match the source algebra");
  SuperIndexSet S(psi.src_m, psi.src_n);
  AffineGl tgt(psi.tgt_m, psi.tgt_n, PolyScalar(0), PolyScalar(0));
  TensorElement r;
  r.dims = x.dims;
  r.dims[static_cast<size_t>(factor)] = {psi.tgt_m, psi.tgt_n};
  std::vector<ExprPtr> extra;
  for (const auto& l : x.level1) {
    if (l.factor != factor) {
      r.level1.push_back(l);
      continue;
    }
    if (l.node != 1) throw std::invalid_argument("psi-gen: only X+_{1,1} has a displayed image");
    r.level1.push_back({factor, psi.x11_node(), l.coef});
    extra.push_back(Expr::scale(l.coef, psi.x11_series(tgt, factor)));
  }
  ExprPtr cur = map_modes(x.currents, [&](Mode m) -> std::vector<Mode> {
    if (m.tag() != factor) return {m};
    return {tgt.E(psi.map_label(S.label_at(m.i())), psi.map_label(S.label_at(m.j())), m.s(), factor)};
  });
  extra.insert(extra.begin(), cur);
  r.currents = Expr::sum(std::move(extra));
  return r;
}

TensorElement apply_delta(const TensorElement& x, int factor) {
  TensorElement r;
  r.dims = x.dims;
  r.dims.insert(r.dims.begin() + factor + 1, x.dims.at(static_cast<size_t>(factor)));
  auto shift = [&](int t) { return t > factor ? t + 1 : t; };
  std::vector<ExprPtr> extra;
  Context ctx = r.context();
  for (const auto& l : x.level1) {
    if (l.factor != factor) {
      r.level1.push_back({shift(l.factor), l.node, l.coef});
      continue;
    }
    r.level1.push_back({factor, l.node, l.coef});
    r.level1.push_back({factor + 1, l.node, l.coef});
    extra.push_back(Expr::scale(l.coef, build_B(ctx, l.node, factor, factor + 1)));
  }
  ExprPtr cur = map_modes(x.currents, [&](Mode m) -> std::vector<Mode> {
    if (m.tag() == factor) return {m, m.with_tag(factor + 1)};
    return {m.with_tag(shift(m.tag()))};
  });
  extra.insert(extra.begin(), cur);
  r.currents = Expr::sum(std::move(extra));
  return r;
}

CompositeTrace delta_s(const PartitionData& P, int s, Gen g, int node, int r, bool printed_transposed) {
  if (s < 1 || s > P.l()) throw IndexError("delta_s: s out of range");
  const int ms = P.u(s) - P.u(s + 1), ns = P.q(s) - P.q(s + 1);
  CompositeTrace tr;
  PsiGen p1 = psi1_gen(ms, ns, P.u(s + 1), P.q(s + 1));
  tr.rank_bounds_met = p1.rank_bound_met;
  if (r == 0) {
    tr.value = psi_image(p1, g, node);
  } else {
    if (g != Gen::Xp || node != 1 || r != 1) throw std::invalid_argument("delta_s: only X+-_{i,0} and X+_{1,1}");
    TensorElement src;
    src.dims = {{ms, ns}};
    src.level1.push_back({0, 1, PolyScalar(1)});
    tr.value = apply_psi(src, 0, p1);
  }
  tr.stages.push_back("psi1-gen " + std::to_string(ms) + "|" + std::to_string(ns) + " -> " +
                      std::to_string(P.u(s)) + "|" + std::to_string(P.q(s)) + " at eps = " +
                      eps_const(P, s).str());
  PolyScalar eps = eps_const(P, s);
  for (int a = s - 1; a >= 1; --a) {
    tr.value = apply_delta(tr.value, 0);
    PsiGen p2 = printed_transposed ? psi2_gen(P.q(a) - P.q(a + 1), P.u(a) - P.u(a + 1), P.q(a + 1), P.u(a + 1))
                                   : psi2_gen(P.u(a) - P.u(a + 1), P.q(a) - P.q(a + 1), P.u(a + 1), P.q(a + 1));
    tr.rank_bounds_met = tr.rank_bounds_met && p2.rank_bound_met;
    tr.value = apply_psi(tr.value, 0, p2);
    // the source of psi2-gen sits at target eps + shift * hbar
    PolyScalar target_eps = eps - PolyScalar(p2.eps_shift) * PolyScalar::h();
    bool ok = target_eps == eps_const(P, a);
    tr.eps_consistent = tr.eps_consistent && ok;
    tr.stages.push_back("delta, then psi2-gen " + std::to_string(P.u(a + 1)) + "|" + std::to_string(P.q(a + 1)) +
                        " -> " + std::to_string(P.u(a)) + "|" + std::to_string(P.q(a)) + " at eps = " +
                        target_eps.str() + (ok ? "" : " (mismatch)"));
    eps = target_eps;
  }
  return tr;
}

ExprPtr evaluate(const TensorElement& x, const BlockSide& side, const std::vector<PolyScalar>& a) {
  if (static_cast<int>(x.dims.size()) != side.factors()) throw std::invalid_argument("evaluate: factor count");
  for (int t = 1; t <= side.factors(); ++t) {
    const auto& I = side.block(t).indices();
    if (x.dims[static_cast<size_t>(t - 1)] != std::make_pair(I.m(), I.n()))
      throw std::invalid_argument("evaluate: factor does not match its block");
  }
  std::vector<ExprPtr> t{x.currents};
  std::map<int, GeneratorAssignment> evs;
  for (const auto& l : x.level1) {
    auto it = evs.find(l.factor);
    if (it == evs.end())
      it = evs.emplace(l.factor, ev_assignment(side.context(), l.factor, a.at(static_cast<size_t>(l.factor)))).first;
    t.push_back(Expr::scale(l.coef, it->second.xp(l.node, 1)));
  }
  return Expr::sum(std::move(t));
}

GeneratorAssignment phi_assignment(WAlgebra& w, BlockSide& side, int s, const PhiVariants& var, bool eps_body_variant) {
  const PartitionData& P = side.partition();
  const int m = P.u(s) - P.u(s + 1), n = P.q(s) - P.q(s + 1);
  if (m < 2 || n < 2) throw IndexError("phi: needs u_s - u_{s+1}, q_s - q_{s+1} >= 2");
  SuperIndexSet S(m, n);
  const int L = S.size();
  auto rho = [&](int i) { return i > 0 ? P.u(1) - P.u(s) + i : -P.q(1) + P.q(s) + i; };
  auto W1 = [&](int x, int y, int k) { return mu_W1_mode(side, s, rho(x), rho(y), k); };
  GeneratorAssignment G(m, n, eps_const(P, s, eps_body_variant));
  for (int c = 0; c < L; ++c) {
    if (c == 0) {
      G.set(Gen::Xp, 0, 0, W1(-n, 1, 1));
      G.set(Gen::Xm, 0, 0, PolyScalar(var.printed_sign ? 1 : -1) * W1(1, -n, -1));
      continue;
    }
    int x = S.label_at(c), y = S.label_at(c + 1);
    G.set(Gen::Xp, c, 0, W1(x, y, 0));
    G.set(Gen::Xm, c, 0, PolyScalar(var.printed_sign ? 1 : sgn(S.parity(x))) * W1(y, x, 0));
  }
  const PolyScalar h = PolyScalar::h();
  const int A = rho(1), B = rho(2);
  std::vector<ExprPtr> t;
  t.push_back(Expr::scale(-h, mode_of(miura(build_W2(w, s, A, B), side), 1)));
  t.push_back(Expr::scale(-h * PolyScalar::rational(1, 2), mu_W1_mode(side, s, A, B, 0)));
  auto bilinear = [&](int x1, int y1, int s1, int x2, int y2, int s2, const PolyScalar& c) {
    for (int t1 = 1; t1 <= s; ++t1)
      for (int t2 = 1; t2 <= s; ++t2)
        t.push_back(Expr::series({{side.E(t1, x1, y1, s1), -1}, {side.E(t2, x2, y2, s2), 1}}, c));
  };
  bilinear(A, A, 0, A, B, 0, h);
  for (int z = 2; z <= m; ++z) bilinear(A, rho(z), -1, rho(z), B, 1, h);
  for (int z = -n; z <= -1; ++z) bilinear(A, rho(z), -1, rho(z), B, 1, -h);
  G.set(Gen::Xp, 1, 1, Expr::sum(std::move(t)));
  return G;
}

void complete_from_x11(GeneratorAssignment& a) {
  a.derive_h();
  for (int j = 2; j < a.size(); ++j) {
    PolyScalar c = PolyScalar::rational(1, cartan(a.m(), a.n(), j - 1, j));
    a.set(Gen::Xp, j, 1, c * Expr::bracket(a.htilde(j - 1), a.xp(j, 0)));
    a.derive_h();
  }
  complete_by_relation(a);
}

ExprPtr expanded_lhs(const BlockSide& side, int s, const std::vector<PolyScalar>& a) {
  const PartitionData& P = side.partition();
  const int u1 = P.u(1), q1 = P.q(1);
  const int A = 1 + u1 - P.u(s), B = A + 1;
  const PolyScalar h = PolyScalar::h();
  std::vector<ExprPtr> t;
  auto S = [&](int r1, int x1, int y1, int s1, int r2, int x2, int y2, int s2, const PolyScalar& c) {
    t.push_back(Expr::series({{side.E(r1, x1, y1, s1), -1}, {side.E(r2, x2, y2, s2), 1}}, c));
  };
  // evaluation parts
  for (int r = 1; r <= s; ++r) {
    int ir = 1 + P.u(r) - P.u(s);
    t.push_back(Expr::mode(side.E(r, A, B, 0), a.at(static_cast<size_t>(r - 1)) - PolyScalar::rational(ir, 2) * h));
    for (int g = 1 + u1 - P.u(r); g <= A; ++g) S(r, A, g, 0, r, g, B, 0, h);
    for (int g = B; g <= u1; ++g) S(r, A, g, -1, r, g, B, 1, h);
    for (int x = -q1; x <= -1 - q1 + P.q(r); ++x) S(r, A, x, -1, r, x, B, 1, -h);
  }
  for (int r1 = 1; r1 <= s; ++r1)
    for (int r2 = r1 + 1; r2 <= s; ++r2) {
      // coproduct
      for (int z = 1 + u1 - P.u(r2); z <= A; ++z) {
        S(r1, A, z, 0, r2, z, B, 0, h);
        S(r1, z, B, -1, r2, A, z, 1, -h);
      }
      for (int z = B; z <= u1; ++z) {
        S(r1, A, z, -1, r2, z, B, 1, h);
        S(r1, z, B, 0, r2, A, z, 0, -h);
      }
      for (int z = -q1; z <= -1 - q1 + P.q(r2); ++z) {
        S(r1, A, z, -1, r2, z, B, 1, -h);
        S(r1, z, B, 0, r2, A, z, 0, -h);
      }
    }
  // first contraction, spread over the blocks
  for (int r1 = 1; r1 <= s; ++r1)
    for (int r2 = 1; r2 <= s; ++r2) {
      for (int x = u1 - P.u(s + 1) + 1; x <= u1; ++x) S(r1, A, x, -1, r2, x, B, 1, -h);
      for (int x = -q1; x <= -q1 + P.q(s + 1) - 1; ++x) S(r1, A, x, -1, r2, x, B, 1, h);
    }
  // second contractions
  for (int r = 1; r <= s; ++r) {
    for (int x = -q1 + P.q(s); x <= -1 - q1 + P.q(r); ++x) S(r, x, B, 0, r, A, x, 0, h);
    for (int x = u1 - P.u(r) + 1; x <= u1 - P.u(s); ++x) S(r, x, B, -1, r, A, x, 1, h);
  }
  for (int r1 = 1; r1 <= s; ++r1)
    for (int r2 = r1 + 1; r2 <= s; ++r2) {
      for (int x = -q1 + P.q(s); x <= -1 - q1 + P.q(r2); ++x) {
        S(r2, x, B, 0, r1, A, x, 0, h);
        S(r1, x, B, 0, r2, A, x, 0, h);
      }
      for (int x = u1 - P.u(r2) + 1; x <= u1 - P.u(s); ++x) {
        S(r1, x, B, -1, r2, A, x, 1, h);
        S(r2, x, B, -1, r1, A, x, 1, h);
      }
    }
  return Expr::sum(std::move(t));
}

bool MainTheoremReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const MainTheoremCheck* MainTheoremReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

MainTheoremReport check_main_theorem(const PartitionData& P, int s, const MainTheoremOptions& opt) {
  if (s < 1 || s > P.l()) throw IndexError("main theorem: s out of range");
  const int m = P.u(s) - P.u(s + 1), n = P.q(s) - P.q(s + 1);
  if (m < 2 || n < 2) throw IndexError("main theorem: needs u_s - u_{s+1}, q_s - q_{s+1} >= 2");
  MainTheoremReport rep;
  std::vector<PolyScalar> c, z, a;
  for (int t = 1; t <= s; ++t) {
    c.push_back(alpha_const(P, t));
    a.push_back(-x_const(P, s, t) * PolyScalar::h());
  }
  if (opt.c_levels) c = *opt.c_levels;
  z = opt.z_levels ? *opt.z_levels : std::vector<PolyScalar>(static_cast<size_t>(s), PolyScalar(1));
  BlockSide side(P, s, c, z);
  WAlgebra w(P);
  GeneratorAssignment phi = phi_assignment(w, side, s, opt.phi, opt.eps_body_variant);

  VacuumModule mod(side.context());
  Evaluator ev(mod);
  std::vector<Monomial> basis = mod.basis_upto(opt.degree);
  if (opt.sample > 0 && basis.size() > opt.sample) {
    std::vector<Monomial> pick;
    size_t step = basis.size() / opt.sample;
    for (size_t i = 0; i < basis.size() && pick.size() < opt.sample; i += step) pick.push_back(basis[i]);
    basis = std::move(pick);
    rep.notes.push_back("sampled " + std::to_string(basis.size()) + " basis vectors");
  }
  rep.basis_size = basis.size();
  for (int t = 1; t <= s; ++t)
    rep.notes.push_back("block " + std::to_string(t) + ": gl(" + std::to_string(P.u(t)) + "|" + std::to_string(P.q(t)) +
                        "), level c = " + c[static_cast<size_t>(t - 1)].str() + ", z = " +
                        z[static_cast<size_t>(t - 1)].str() + ", ev parameter " + a[static_cast<size_t>(t - 1)].str());

  bool notes_done = false;
  auto record = [&](const std::string& label, const ExprPtr& lhs, const ExprPtr& rhs) {
    MainTheoremCheck ch{label, true, std::nullopt};
    ch.counterexample = op_equal(ev, lhs, rhs, basis);
    ch.pass = !ch.counterexample;
    rep.checks.push_back(std::move(ch));
  };
  auto trace_notes = [&](const CompositeTrace& tr) {
    if (notes_done) return;
    notes_done = true;
    for (const auto& st : tr.stages) rep.notes.push_back(st);
    if (!tr.eps_consistent) rep.notes.push_back("eps bookkeeping mismatch");
    if (!tr.rank_bounds_met) rep.notes.push_back("rank bound m+n >= 5 not met by a contraction; formulas applied as displayed");
  };
  const int L = m + n;
  for (int node = 0; node < L; ++node)
    for (Gen g : {Gen::Xp, Gen::Xm}) {
      CompositeTrace tr = delta_s(P, s, g, node, 0);
      trace_notes(tr);
      record(GenLabel{g, node, 0}.str(), evaluate(tr.value, side, a), phi.get(g, node, 0));
    }
  CompositeTrace tr = delta_s(P, s, Gen::Xp, 1, 1);
  ExprPtr lhs = Expr::memoize(evaluate(tr.value, side, a));
  record("X+_{1,1}", lhs, phi.xp(1, 1));
  record("X+_{1,1} expanded form", lhs, expanded_lhs(side, s, a));
  if (opt.relation_degree >= 0) {
    complete_from_x11(phi);
    std::vector<Monomial> rb = mod.basis_upto(opt.relation_degree);
    SuiteReport sr = check_assignment(phi, ev, rb);
    MainTheoremCheck ch{"relations at eps = " + phi.eps().str(), sr.pass(), std::nullopt};
    if (const RelationResult* f = sr.first_failure()) {
      ch.label += ", " + f->family + " " + f->label;
      ch.counterexample = f->counterexample;
      rep.notes.push_back(std::to_string(sr.failures()) + " relation failures, first " + f->family + " " + f->label);
    }
    rep.checks.push_back(std::move(ch));
  }
  return rep;
}

}  // namespace syv
