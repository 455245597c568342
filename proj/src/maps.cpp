#include "syv/maps.hpp"

#include <cstdlib>
#include <stdexcept>

namespace syv {

namespace {

int sgn(int p) { return (p & 1) ? -1 : 1; }

const AffineGl& gl_at(const Context& ctx, int tag) {
  auto* g = dynamic_cast<const AffineGl*>(&ctx.algebra(tag));
  if (!g) throw std::invalid_argument("tag does not carry an affine gl");
  return *g;
}

}  // namespace

ExprPtr lincomb_expr(const LinComb& lc) {
  std::vector<ExprPtr> t;
  for (const auto& [m, c] : lc.terms) t.push_back(Expr::mode(m, c));
  if (!lc.scalar.is_zero()) t.push_back(Expr::scalar(lc.scalar));
  return Expr::sum(std::move(t));
}

std::vector<RelationSchema> presentation_relations(const AffineGl& g, int tag) {
  const auto& I = g.indices();
  const int m = I.m(), n = I.n(), L = I.size();
  auto img = presentation_images(g, tag);
  std::vector<ExprPtr> h, xp, xm;
  for (int i = 0; i < L; ++i) {
    h.push_back(lincomb_expr(img.h[i]));
    xp.push_back(lincomb_expr(img.xp[i]));
    xm.push_back(lincomb_expr(img.xm[i]));
  }
  auto odd = [&](int i) { return I.parity_cyclic(i) != I.parity_cyclic((i + 1) % L); };
  auto at = [&](const std::vector<ExprPtr>& v, int i) { return v[static_cast<size_t>(((i % L) + L) % L)]; };
  std::vector<RelationSchema> out;
  auto add = [&](std::string label, ExprPtr e) { out.push_back({"presentation", std::move(label), std::move(e)}); };
  auto ij = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      add("[h,h] " + ij(i, j), Expr::bracket(h[i], h[j]));
      ExprPtr d = Expr::bracket(xp[i], xm[j]);
      if (i == j) d = d - h[i];
      add("[x+,x-] " + ij(i, j), d);
      PolyScalar a(cartan(m, n, i, j));
      add("[h,x+] " + ij(i, j), Expr::bracket(h[i], xp[j]) - a * xp[j]);
      add("[h,x-] " + ij(i, j), Expr::bracket(h[i], xm[j]) + a * xm[j]);
      if (i == j) continue;
      int reps = 1 + std::abs(cartan(m, n, i, j));
      for (int sgn = 0; sgn < 2; ++sgn) {
        const auto& x = sgn == 0 ? xp : xm;
        ExprPtr e = x[j];
        for (int r = 0; r < reps; ++r) e = Expr::bracket(x[i], e);
        add(std::string(sgn == 0 ? "serre+ " : "serre- ") + ij(i, j), e);
      }
    }
  for (int i = 0; i < L; ++i) {
    if (!odd(i)) continue;
    for (int sgn = 0; sgn < 2; ++sgn) {
      const auto& x = sgn == 0 ? xp : xm;
      std::string pm = sgn == 0 ? "+ " : "- ";
      add("odd square" + pm + std::to_string(i), Expr::bracket(x[i], x[i]));
      add("odd quartic" + pm + std::to_string(i),
          Expr::bracket(Expr::bracket(at(x, i - 1), x[i]), Expr::bracket(x[i], at(x, i + 1))));
    }
  }
  return out;
}

int omega_sigma(const SuperIndexSet& src, int i) {
  int L = src.size();
  int k = ((i % L) + L) % L;
  return sgn(src.parity_cyclic(k) + (k == 0 ? 1 : 0));
}

void complete_by_omega(GeneratorAssignment& A, const Context& ctx) {
  for (int i = 0; i < A.size(); ++i)
    if (!A.has(Gen::Xm, i, 1) && A.has(Gen::Xp, i, 1))
      A.set(Gen::Xm, i, 1, PolyScalar(omega_sigma(A.indices(), i)) * omega_tilde(A.xp(i, 1), ctx));
  A.derive_h();
}

GeneratorAssignment ev_assignment(const Context& ctx, int tag, const PolyScalar& a, const MapVariants& var) {
  const AffineGl& g = gl_at(ctx, tag);
  const auto& I = g.indices();
  const int L = I.size();
  if (L < 3) throw std::invalid_argument("ev: m + n must be at least 3");
  GeneratorAssignment A(I.m(), I.n(), g.level_c() * PolyScalar::h());
  auto img = presentation_images(g, tag);
  for (int i = 0; i < L; ++i) {
    A.set(Gen::Xp, i, 0, lincomb_expr(img.xp[i]));
    A.set(Gen::Xm, i, 0, lincomb_expr(img.xm[i]));
    A.set(Gen::H, i, 0, lincomb_expr(img.h[i]));
  }
  const PolyScalar h = PolyScalar::h();
  for (int i = 1; i < L; ++i) {
    std::vector<ExprPtr> t;
    PolyScalar lin = a - PolyScalar::rational(I.alt_hat(i), 2) * h;
    t.push_back(Expr::mode(g.E_pos(i, i + 1, 0, tag), lin));
    for (int k = 1; k <= L; ++k) {
      int e = I.parity_at_pos(k) + (var.ev_printed_sign ? I.parity_at_pos(i) : 0);
      PolyScalar c = PolyScalar(sgn(e)) * h;
      int sh = k <= i ? 0 : 1;
      t.push_back(Expr::series({{g.E_pos(i, k, -sh, tag), -1}, {g.E_pos(k, i + 1, sh, tag), 1}}, c));
    }
    A.set(Gen::Xp, i, 1, Expr::sum(std::move(t)));
  }
  // H_{1,1} first, then X+_{0,1} = -[H~_{1,1}, X+_{0,0}] since a_{1,0} = -1.
  A.set(Gen::H, 1, 1, Expr::bracket(A.xp(1, 1), A.xm(1, 0)));
  A.set(Gen::Xp, 0, 1, PolyScalar(-1) * Expr::bracket(A.htilde(1), A.xp(0, 0)));
  complete_by_omega(A, ctx);
  return A;
}


ExprPtr build_B(const Context& ctx, int i, int tl, int tr) {
  const AffineGl& g = gl_at(ctx, tl);
  const auto& I = g.indices();
  const int L = I.size();
  if (i < 1 || i >= L) throw std::invalid_argument("B_i: i out of range");
  auto p = [&](int x) { return I.parity_at_pos(x); };
  const PolyScalar h = PolyScalar::h();
  std::vector<ExprPtr> t;
  auto ser = [&](int a1, int b1, int s1, int a2, int b2, int s2, int sign) {
    t.push_back(Expr::series({{g.E_pos(a1, b1, s1, tl), -1}, {g.E_pos(a2, b2, s2, tr), 1}}, PolyScalar(sign) * h));
  };
  for (int u = 1; u <= L; ++u) {
    int s1 = sgn(p(u));
    int s2 = -sgn(p(u) + (p(i) + p(u)) * (p(i + 1) + p(u)));
    if (u <= i) {
      ser(i, u, 0, u, i + 1, 0, s1);
      ser(u, i + 1, -1, i, u, 1, s2);
    } else {
      ser(i, u, -1, u, i + 1, 1, s1);
      ser(u, i + 1, 0, i, u, 0, s2);
    }
  }
  return Expr::sum(std::move(t));
}

namespace {

// Chooses i with a_{i,j} != 0 outside the excluded boundary pairs, preferring
// i = j, then j + 1, then j - 1.
int pivot_node(int m, int n, int j) {
  int L = m + n;
  for (int d : {0, 1, -1}) {
    int i = ((j + d) % L + L) % L;
    bool excluded = (i == 0 && j == L - 1) || (i == L - 1 && j == 0);
    if (!excluded && cartan(m, n, i, j) != 0) return i;
  }
  throw std::logic_error("no pivot node");
}

}  // namespace

void complete_by_relation(GeneratorAssignment& A) {
  const int m = A.m(), n = A.n();
  A.derive_h();
  A.set(Gen::Xp, 0, 1, PolyScalar(-1) * Expr::bracket(A.htilde(1), A.xp(0, 0)));
  A.derive_h();
  for (int j = 0; j < A.size(); ++j) {
    int i = pivot_node(m, n, j);
    PolyScalar c = PolyScalar::rational(-1, cartan(m, n, i, j));
    A.set(Gen::Xm, j, 1, c * Expr::bracket(A.htilde(i), A.xm(j, 0)));
  }
}

GeneratorAssignment coproduct_assignment(const Context& ctx, const std::vector<PolyScalar>& a, const MapVariants& var) {
  auto e0 = ev_assignment(ctx, 0, a.at(0), var);
  auto e1 = ev_assignment(ctx, 1, a.at(1), var);
  GeneratorAssignment A(e0.m(), e0.n(), e0.eps());
  for (int j = 0; j < A.size(); ++j) {
    A.set(Gen::Xp, j, 0, e0.xp(j, 0) + e1.xp(j, 0));
    A.set(Gen::Xm, j, 0, e0.xm(j, 0) + e1.xm(j, 0));
  }
  for (int i = 1; i < A.size(); ++i) A.set(Gen::Xp, i, 1, e0.xp(i, 1) + e1.xp(i, 1) + build_B(ctx, i, 0, 1));
  complete_by_relation(A);
  return A;
}

std::vector<RelationSchema> coassoc_relations(const Context& ctx, const std::vector<PolyScalar>& a,
                                              const MapVariants& var) {
  std::vector<GeneratorAssignment> ev;
  for (int t = 0; t < 3; ++t) ev.push_back(ev_assignment(ctx, t, a.at(static_cast<size_t>(t)), var));
  const int L = ev[0].size();
  std::vector<RelationSchema> out;
  for (int j = 0; j < L; ++j)
    for (Gen g : {Gen::Xp, Gen::Xm}) {
      // both sides are the primitive sum over three factors
      auto lhs = (ev[0].get(g, j, 0) + ev[1].get(g, j, 0)) + ev[2].get(g, j, 0);
      auto rhs = ev[0].get(g, j, 0) + (ev[1].get(g, j, 0) + ev[2].get(g, j, 0));
      out.push_back({"coassoc", GenLabel{g, j, 0}.str(), lhs - rhs});
    }
  for (int i = 1; i < L; ++i) {
    auto B01 = build_B(ctx, i, 0, 1);
    auto B12 = build_B(ctx, i, 1, 2);
    auto lhs = Expr::sum({ev[0].xp(i, 1), ev[1].xp(i, 1), B01, ev[2].xp(i, 1), map_tags(B01, {{0, 1}, {2}, {2}})});
    auto rhs = Expr::sum({ev[0].xp(i, 1), ev[1].xp(i, 1), ev[2].xp(i, 1), B12, map_tags(B01, {{0}, {1, 2}, {2}})});
    out.push_back({"coassoc", GenLabel{Gen::Xp, i, 1}.str(), lhs - rhs});
  }
  return out;
}

namespace {

// Target-side helpers for the edge contractions.
struct Tgt {
  const AffineGl& g;
  int tag;
  GeneratorAssignment T;
  const SuperIndexSet& I() const { return g.indices(); }
  int L() const { return I().size(); }
  int node(int label) const { return I().position(label) % L(); }
  // Signed labels.
  ExprPtr E(int i, int j, int s = 0, const PolyScalar& c = PolyScalar(1)) const {
    return Expr::mode(g.E(i, j, s, tag), c);
  }
  ExprPtr Ep(int i, int j, int s = 0, const PolyScalar& c = PolyScalar(1)) const {
    return Expr::mode(g.E_pos(i, j, s, tag), c);
  }
  // c * sum_s x t^{-s+sx} y t^{s+sy}, signed labels / positions.
  ExprPtr S(int xi, int xj, int sx, int yi, int yj, int sy, const PolyScalar& c) const {
    return Expr::series({{g.E(xi, xj, sx, tag), -1}, {g.E(yi, yj, sy, tag), 1}}, c);
  }
  ExprPtr Sp(int xi, int xj, int sx, int yi, int yj, int sy, const PolyScalar& c) const {
    return Expr::series({{g.E_pos(xi, xj, sx, tag), -1}, {g.E_pos(yi, yj, sy, tag), 1}}, c);
  }
  ExprPtr xp(int node, int r) const { return T.xp(node, r); }
  ExprPtr xm(int node, int r) const { return T.xm(node, r); }
  ExprPtr h(int node, int r) const { return T.h(node, r); }
};

PolyScalar H() { return PolyScalar::h(); }
PolyScalar H2() { return PolyScalar::h() * PolyScalar::rational(1, 2); }
PolyScalar N(int k) { return PolyScalar(k); }

}  // namespace

MapSpec psi_map(int k, const Context& ctx, int tag, const PolyScalar& a, const MapVariants& var) {
  if (k < 1 || k > 4) throw std::invalid_argument("psi: k must be 1..4");
  const AffineGl& g = gl_at(ctx, tag);
  Tgt t{g, tag, ev_assignment(ctx, tag, a, var)};
  const int tm = g.indices().m(), tn = g.indices().n();
  const int m = (k == 1 || k == 3) ? tm - 1 : tm;
  const int n = (k == 2 || k == 4) ? tn - 1 : tn;
  if (m < 1 || n < 1 || m + n < 3) throw std::invalid_argument("psi: source too small");
  const PolyScalar c = g.level_c();
  PolyScalar eps = c * H();
  if (k == 2) eps = (c - PolyScalar(1)) * H();
  if (k == 3) eps = (c + PolyScalar(1)) * H();
  SuperIndexSet src(m, n);
  const int L = m + n;
  GeneratorAssignment S(m, n, eps);
  std::map<int, ExprPtr> htab;  // displayed H_{i,1} by source node
  const PolyScalar h = H(), h2 = H2();

  if (k == 1 || k == 2) {
    // signed labels; source label i sits at source node pos(i) mod L
    auto snode = [&](int i) { return src.position(i) % L; };
    for (int i : [&] {
           std::vector<int> v;
           for (int p = 1; p <= L; ++p) v.push_back(src.label_at(p));
           return v;
         }()) {
      int sn = snode(i);
      if (k == 1) {
        // target label m+1 is new; other labels are unchanged
        auto tnd = [&](int l) { return t.node(l); };
        if (i == m) {
          S.set(Gen::H, sn, 0, t.h(tnd(m), 0) + t.h(tnd(m + 1), 0));
          S.set(Gen::Xp, sn, 0, Expr::bracket(t.xp(tnd(m), 0), t.xp(tnd(m + 1), 0)));
          S.set(Gen::Xm, sn, 0, Expr::bracket(t.xm(tnd(m + 1), 0), t.xm(tnd(m), 0)));
        } else {
          S.set(Gen::H, sn, 0, t.h(tnd(i), 0));
          S.set(Gen::Xp, sn, 0, t.xp(tnd(i), 0));
          S.set(Gen::Xm, sn, 0, t.xm(tnd(i), 0));
        }
        const int M1 = m + 1;
        if (i >= 1 && i <= m - 1) {
          S.set(Gen::Xp, sn, 1, t.xp(tnd(i), 1) - t.S(i, M1, -1, M1, i + 1, 1, h));
          htab[sn] = Expr::sum({t.h(tnd(i), 1), t.S(i, M1, -1, M1, i, 1, N(-1) * h), t.S(i + 1, M1, -1, M1, i + 1, 1, h)});
        } else if (i == m) {
          S.set(Gen::Xp, sn, 1, Expr::bracket(t.xp(tnd(m), 1), t.xp(tnd(M1), 0)) - t.S(m, M1, -1, M1, -1, 1, h));
          htab[sn] = Expr::sum({t.h(tnd(m), 1), t.h(tnd(M1), 1), h * (t.h(tnd(m), 0) * t.h(tnd(M1), 0)),
                                h2 * t.h(tnd(M1), 0), t.S(m, M1, -1, M1, m, 1, N(-1) * h),
                                t.S(-1, M1, 0, M1, -1, 0, N(-1) * h)});
        } else if (i <= -1 && i >= -n + 1) {
          S.set(Gen::Xp, sn, 1, Expr::sum({t.xp(tnd(i), 1), h2 * t.xp(tnd(i), 0), t.S(i, M1, 0, M1, i - 1, 0, N(-1) * h)}));
          int col = var.psi1_printed_index ? m : M1;
          htab[sn] = Expr::sum({t.h(tnd(i), 1), h2 * t.h(tnd(i), 0), t.S(i, M1, 0, M1, i, 0, h),
                                t.S(i - 1, col, 0, M1, i - 1, 0, N(-1) * h)});
        } else {  // i = -n
          S.set(Gen::Xp, sn, 1, t.xp(tnd(-n), 1) - t.S(-n, M1, 0, M1, 1, 1, h));
          htab[sn] = Expr::sum({t.h(tnd(-n), 1), t.S(-n, M1, 0, M1, -n, 0, h), t.S(1, M1, -1, M1, 1, 1, h)});
        }
      } else {
        // k == 2: target label -1 is new, source -j becomes -(j+1)
        auto tnd = [&](int l) { return t.node(l); };
        if (i >= 1 && i <= m - 1) {
          S.set(Gen::H, sn, 0, t.h(tnd(i), 0));
          S.set(Gen::Xp, sn, 0, t.E(i, i + 1));
          S.set(Gen::Xm, sn, 0, t.E(i + 1, i));
          S.set(Gen::Xp, sn, 1, t.xp(tnd(i), 1) + t.S(-1, i + 1, 0, i, -1, 0, h));
          htab[sn] = Expr::sum({t.h(tnd(i), 1), t.S(-1, i, 0, i, -1, 0, h), t.S(-1, i + 1, 0, i + 1, -1, 0, N(-1) * h)});
        } else if (i == m) {
          S.set(Gen::H, sn, 0, t.h(tnd(m), 0) + t.h(tnd(-1), 0));
          S.set(Gen::Xp, sn, 0, t.E(m, -2));
          S.set(Gen::Xm, sn, 0, t.E(-2, m));
          S.set(Gen::Xp, sn, 1, Expr::bracket(t.xp(tnd(m), 1), t.xp(tnd(-1), 0)) - t.S(-1, -2, 0, m, -1, 0, h));
          htab[sn] = Expr::sum({t.h(tnd(m), 1), t.h(tnd(-1), 1), h2 * t.h(tnd(-1), 0),
                                h * (t.h(tnd(-1), 0) * t.h(tnd(m), 0)), t.S(-1, -2, -1, -2, -1, 1, N(-1) * h),
                                t.S(-1, m, 0, m, -1, 0, h)});
        } else if (i <= -1 && i >= -n + 1) {
          S.set(Gen::H, sn, 0, t.h(tnd(i - 1), 0));
          S.set(Gen::Xp, sn, 0, t.E(i - 1, i - 2));
          S.set(Gen::Xm, sn, 0, t.E(i - 2, i - 1, 0, N(-1)));
          S.set(Gen::Xp, sn, 1,
                Expr::sum({t.xp(tnd(i - 1), 1), h2 * t.xp(tnd(i - 1), 0), t.S(-1, i - 2, -1, i - 1, -1, 1, N(-1) * h)}));
          htab[sn] = Expr::sum({t.h(tnd(i - 1), 1), h2 * t.h(tnd(i - 1), 0), t.S(-1, i - 1, -1, i - 1, -1, 1, h),
                                t.S(-1, i - 2, -1, i - 2, -1, 1, N(-1) * h)});
        } else {  // i = -n
          int z = -n - 1;
          S.set(Gen::H, sn, 0, t.h(tnd(z), 0));
          S.set(Gen::Xp, sn, 0, t.E(z, 1, 1));
          S.set(Gen::Xm, sn, 0, t.E(1, z, -1, N(-1)));
          PolyScalar sg = var.psi2_printed_sign ? h : N(-1) * h;
          S.set(Gen::Xp, sn, 1, t.xp(tnd(z), 1) + t.S(-1, 1, 0, z, -1, 1, sg));
          htab[sn] = Expr::sum({t.h(tnd(z), 1), t.S(-1, z, -1, z, -1, 1, h), t.S(-1, 1, 0, 1, -1, 0, N(-1) * h)});
        }
      }
    }
  } else if (k == 3) {
    // positions; source position q becomes target position q + 1
    const int Lt = L + 1;
    auto p = [&](int q) { return g.indices().parity_at_pos(q); };
    for (int i = 0; i < L; ++i) {
      if (i == 0) {
        S.set(Gen::H, 0, 0, t.h(0, 0) + t.h(1, 0));
        S.set(Gen::Xp, 0, 0, t.Ep(Lt, 2, 1));
        S.set(Gen::Xm, 0, 0, t.Ep(2, Lt, -1, N(-1)));
        S.set(Gen::Xp, 0, 1, Expr::bracket(t.xp(0, 0), t.xp(1, 1)) + t.Sp(1, 2, -1, Lt, 1, 2, h));
        htab[0] = Expr::sum({t.h(0, 1), t.h(1, 1), h * (t.h(0, 0) * t.h(1, 0)), h2 * t.h(0, 0),
                             t.Sp(1, 2, -1, 2, 1, 1, N(-1) * h), t.Sp(1, Lt, -1, Lt, 1, 1, h)});
      } else {
        S.set(Gen::H, i, 0, t.h(i + 1, 0));
        S.set(Gen::Xp, i, 0, t.Ep(i + 1, i + 2));
        S.set(Gen::Xm, i, 0, t.Ep(i + 2, i + 1, 0, N(sgn(p(i + 1)))));
        int e = p(i + 1) + (p(i + 1) + p(1)) * (p(i + 1) + p(i + 2));
        S.set(Gen::Xp, i, 1, t.xp(i + 1, 1) + t.Sp(1, i + 2, -1, i + 1, 1, 1, N(sgn(e)) * h));
        htab[i] = Expr::sum(
            {t.h(i + 1, 1), t.Sp(1, i + 1, -1, i + 1, 1, 1, h), t.Sp(1, i + 2, -1, i + 2, 1, 1, N(-1) * h)});
      }
    }
  } else {
    // k == 4: positions unchanged, new target position m+n+1
    const int Lt = L + 1;
    auto p = [&](int q) { return g.indices().parity_at_pos(q); };
    for (int i = 0; i < L; ++i) {
      if (i == 0) {
        S.set(Gen::H, 0, 0, t.h(0, 0) + t.h(L, 0));
        S.set(Gen::Xp, 0, 0, t.Ep(L, 1, 1));
        S.set(Gen::Xm, 0, 0, t.Ep(1, L, -1, N(-1)));
        S.set(Gen::Xp, 0, 1, Expr::bracket(t.xp(L, 0), t.xp(0, 1)) + t.Sp(L, Lt, 0, Lt, 1, 1, h));
        int col = var.psi4_printed_index ? n : L;
        PolyScalar K = eps + PolyScalar::rational(m - n, 2) * h;
        htab[0] = Expr::sum({t.h(0, 1), t.h(L, 1), K * t.h(L, 0), h * (t.h(L, 0) * t.h(0, 0)),
                             t.Sp(L, Lt, -1, Lt, col, 1, N(-1) * h), t.Sp(1, Lt, -1, Lt, 1, 1, N(-1) * h)});
      } else {
        S.set(Gen::H, i, 0, t.h(i, 0));
        S.set(Gen::Xp, i, 0, t.Ep(i, i + 1));
        S.set(Gen::Xm, i, 0, t.Ep(i + 1, i, 0, N(sgn(p(i)))));
        S.set(Gen::Xp, i, 1, t.xp(i, 1) + t.Sp(i, Lt, -1, Lt, i + 1, 1, h));
        htab[i] = Expr::sum({t.h(i, 1), t.Sp(i, Lt, -1, Lt, i, 1, N(sgn(p(i))) * h),
                             t.Sp(i + 1, Lt, -1, Lt, i + 1, 1, N(-sgn(p(i + 1))) * h)});
      }
    }
  }
  complete_by_omega(S, ctx);

  MapSpec spec{"psi" + std::to_string(k), m, n, tm, tn, S, {}};
  for (int i = 0; i < L; ++i) {
    spec.consistency.push_back({"omega", "sigma omega~(X+_{" + std::to_string(i) + ",0}) = X-_{" + std::to_string(i) + ",0}",
                                PolyScalar(omega_sigma(src, i)) * omega_tilde(S.xp(i, 0), ctx) - S.xm(i, 0)});
    spec.consistency.push_back({"Htable", "H_{" + std::to_string(i) + ",1}", S.h(i, 1) - htab.at(i)});
  }
  return spec;
}

}  // namespace syv
