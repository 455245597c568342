#include "syv/yangian.hpp"

#include <stdexcept>

namespace syv {

namespace {

int sgn(int p) { return (p & 1) ? -1 : 1; }

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::Xp:
      return "X+";
    case Gen::Xm:
      return "X-";
    default:
      return "H";
  }
}

std::string lab(Gen g, int i, int r) { return GenLabel{g, i, r}.str(); }

PolyScalar half_h() { return PolyScalar::h() * PolyScalar::rational(1, 2); }

}  // namespace

int cartan(int m, int n, int i, int j) {
  SuperIndexSet idx(m, n);
  int L = m + n;
  i = ((i % L) + L) % L;
  j = ((j % L) + L) % L;
  int pi = idx.parity_cyclic(i), pi1 = idx.parity_cyclic(i + 1);
  if (i == j) return sgn(pi) + sgn(pi1);
  if (j == (i + 1) % L) return -sgn(pi1);
  if (i == (j + 1) % L) return -sgn(pi);
  return 0;
}

std::string GenLabel::str() const { return gen_name(g) + "_{" + std::to_string(i) + "," + std::to_string(r) + "}"; }

GeneratorAssignment::GeneratorAssignment(int m, int n, PolyScalar eps)
    : m_(m), n_(n), eps_(std::move(eps)), idx_(m, n) {}

bool GeneratorAssignment::odd(int i) const { return p(i) != p(i + 1); }

void GeneratorAssignment::set(Gen g, int i, int r, const ExprPtr& e) {
  images_[GenLabel{g, node(i), r}] = Expr::memoize(e);
  if (g != Gen::Xp && g != Gen::Xm) htilde_.erase(node(i));
}

bool GeneratorAssignment::has(Gen g, int i, int r) const { return images_.count(GenLabel{g, node(i), r}) > 0; }

ExprPtr GeneratorAssignment::get(Gen g, int i, int r) const {
  auto it = images_.find(GenLabel{g, node(i), r});
  if (it == images_.end()) throw std::out_of_range("assignment: missing image of " + lab(g, node(i), r));
  return it->second;
}

ExprPtr GeneratorAssignment::htilde(int i) const {
  int k = node(i);
  auto it = htilde_.find(k);
  if (it != htilde_.end()) return it->second;
  auto h0 = h(k, 0);
  auto e = Expr::memoize(h(k, 1) - half_h() * (h0 * h0));
  htilde_[k] = e;
  return e;
}

void GeneratorAssignment::derive_h() {
  for (int i = 0; i < size(); ++i)
    for (int r = 0; r <= 1; ++r)
      if (!has(Gen::H, i, r) && has(Gen::Xp, i, r) && has(Gen::Xm, i, 0))
        set(Gen::H, i, r, Expr::bracket(xp(i, r), xm(i, 0)));
}

bool GeneratorAssignment::complete() const {
  for (Gen g : {Gen::Xp, Gen::Xm, Gen::H})
    for (int i = 0; i < size(); ++i)
      for (int r = 0; r <= 1; ++r)
        if (!has(g, i, r)) return false;
  return true;
}

std::optional<std::string> GeneratorAssignment::check_parities() const {
  for (const auto& [l, e] : images_) {
    if (e->is_zero()) continue;
    int want = l.g == Gen::H ? 0 : (odd(l.i) ? 1 : 0);
    if (e->parity() != want) return l.str() + ": image parity does not match";
  }
  return std::nullopt;
}

PolyScalar boundary_coefficient(int m, int n, const PolyScalar& eps, bool printed) {
  PolyScalar k = PolyScalar::rational(m - n, 2) * PolyScalar::h();
  if (printed) k *= PolyScalar::h();
  return eps + k;
}

std::vector<RelationSchema> relation_suite(const GeneratorAssignment& A, const SuiteOptions& opt) {
  const int L = A.size();
  const int m = A.m(), n = A.n();
  const PolyScalar K = boundary_coefficient(m, n, A.eps(), opt.printed_boundary);
  const PolyScalar hh = half_h();
  auto want = [&](const std::string& f) {
    if (opt.families.empty()) return true;
    for (const auto& x : opt.families)
      if (x == f) return true;
    return false;
  };
  auto X = [&](int sign, int i, int r) { return sign > 0 ? A.xp(i, r) : A.xm(i, r); };
  auto Xl = [&](int sign, int i, int r) { return lab(sign > 0 ? Gen::Xp : Gen::Xm, A.node(i), r); };
  auto br = [](const ExprPtr& a, const ExprPtr& b) { return Expr::bracket(a, b); };
  auto excluded = [&](int i, int j) { return (i == 0 && j == L - 1) || (i == L - 1 && j == 0); };
  auto a = [&](int i, int j) { return cartan(m, n, i, j); };
  const int signs[2] = {+1, -1};
  auto pm = [](int s) { return std::string(s > 0 ? "+" : "-"); };

  std::vector<RelationSchema> out;
  auto add = [&](const char* fam, std::string label, ExprPtr e) { out.push_back({fam, std::move(label), std::move(e)}); };

  if (want("2.1"))
    for (int i = 0; i < L; ++i)
      for (int r = 0; r <= 1; ++r)
        for (int j = i; j < L; ++j)
          for (int s = 0; s <= 1; ++s) {
            if (j == i && s <= r) continue;
            add("2.1", "[" + lab(Gen::H, i, r) + "," + lab(Gen::H, j, s) + "]", br(A.h(i, r), A.h(j, s)));
          }
  if (want("2.2"))
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j) {
        auto e = br(A.xp(i, 0), A.xm(j, 0));
        if (i == j) e = e - A.h(i, 0);
        add("2.2", "[" + lab(Gen::Xp, i, 0) + "," + lab(Gen::Xm, j, 0) + "]", e);
      }
  if (want("2.3"))
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j) {
        auto e1 = br(A.xp(i, 1), A.xm(j, 0));
        auto e2 = br(A.xp(i, 0), A.xm(j, 1));
        if (i == j) {
          e1 = e1 - A.h(i, 1);
          e2 = e2 - A.h(i, 1);
        }
        add("2.3", "[" + lab(Gen::Xp, i, 1) + "," + lab(Gen::Xm, j, 0) + "]", e1);
        add("2.3", "[" + lab(Gen::Xp, i, 0) + "," + lab(Gen::Xm, j, 1) + "]", e2);
      }
  if (want("2.4"))
    for (int sg : signs)
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
          for (int r = 0; r <= 1; ++r)
            add("2.4", "[" + lab(Gen::H, i, 0) + "," + Xl(sg, j, r) + "]",
                br(A.h(i, 0), X(sg, j, r)) - PolyScalar(sg * a(i, j)) * X(sg, j, r));
  if (want("2.5"))
    for (int sg : signs)
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
          if (excluded(i, j)) continue;
          add("2.5", "[H~_{" + std::to_string(i) + ",1}," + Xl(sg, j, 0) + "]",
              br(A.htilde(i), X(sg, j, 0)) - PolyScalar(sg * a(i, j)) * X(sg, j, 1));
        }
  if (want("2.6"))
    for (int sg : signs)
      add("2.6", "[H~_{0,1}," + Xl(sg, L - 1, 0) + "]",
          br(A.htilde(0), X(sg, L - 1, 0)) - PolyScalar(sg) * (X(sg, L - 1, 1) + K * X(sg, L - 1, 0)));
  if (want("2.7"))
    for (int sg : signs)
      add("2.7", "[H~_{" + std::to_string(L - 1) + ",1}," + Xl(sg, 0, 0) + "]",
          br(A.htilde(L - 1), X(sg, 0, 0)) - PolyScalar(sg) * (X(sg, 0, 1) - K * X(sg, 0, 0)));
  if (want("2.8"))
    for (int sg : signs)
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
          if (excluded(i, j)) continue;
          auto e = br(X(sg, i, 1), X(sg, j, 0)) - br(X(sg, i, 0), X(sg, j, 1)) -
                   (PolyScalar(sg * a(i, j)) * hh) * Expr::anti(X(sg, i, 0), X(sg, j, 0));
          add("2.8", "[" + Xl(sg, i, 1) + "," + Xl(sg, j, 0) + "]-[" + Xl(sg, i, 0) + "," + Xl(sg, j, 1) + "]", e);
        }
  if (want("2.9"))
    for (int sg : signs) {
      auto x00 = X(sg, 0, 0), x01 = X(sg, 0, 1), y0 = X(sg, L - 1, 0), y1 = X(sg, L - 1, 1);
      auto e = br(x01, y0) - br(x00, y1) - (PolyScalar(sg) * hh) * Expr::anti(x00, y0) - K * br(x00, y0);
      add("2.9", "[" + Xl(sg, 0, 1) + "," + Xl(sg, L - 1, 0) + "]-[" + Xl(sg, 0, 0) + "," + Xl(sg, L - 1, 1) + "]",
          e);
    }
  if (want("2.10"))
    for (int sg : signs)
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
          if (i == j) continue;
          int reps = 1 + std::abs(a(i, j));
          ExprPtr e = X(sg, j, 0);
          for (int k = 0; k < reps; ++k) e = br(X(sg, i, 0), e);
          add("2.10", "(ad " + Xl(sg, i, 0) + ")^" + std::to_string(reps) + " " + Xl(sg, j, 0), e);
        }
  if (want("2.11"))
    for (int sg : signs)
      for (int i = 0; i < L; ++i)
        if (A.odd(i)) add("2.11", "[" + Xl(sg, i, 0) + "," + Xl(sg, i, 0) + "]", br(X(sg, i, 0), X(sg, i, 0)));
  if (want("2.12"))
    for (int sg : signs)
      for (int i = 0; i < L; ++i)
        if (A.odd(i))
          add("2.12", "[[X" + pm(sg) + "_{" + std::to_string(A.node(i - 1)) + "},X" + pm(sg) + "_{" +
                          std::to_string(i) + "}],[X" + pm(sg) + "_{" + std::to_string(i) + "},X" + pm(sg) + "_{" +
                          std::to_string(A.node(i + 1)) + "}]] at r=0",
              br(br(X(sg, i - 1, 0), X(sg, i, 0)), br(X(sg, i, 0), X(sg, i + 1, 0))));
  if (opt.include_gather1 && want("gather1"))
    for (int sg : signs)
      for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) {
          int d = std::min(j - i, L - (j - i));
          if (d <= 1) continue;
          for (int r = 0; r <= 1; ++r)
            for (int s = 0; s <= 1; ++s)
              add("gather1", "[" + Xl(sg, i, r) + "," + Xl(sg, j, s) + "]", br(X(sg, i, r), X(sg, j, s)));
        }
  return out;
}

bool SuiteReport::pass() const { return failures() == 0; }

size_t SuiteReport::failures() const {
  size_t k = 0;
  for (const auto& r : results)
    if (!r.pass) ++k;
  return k;
}

const RelationResult* SuiteReport::first_failure() const {
  for (const auto& r : results)
    if (!r.pass) return &r;
  return nullptr;
}

SuiteReport check_relations(const std::vector<RelationSchema>& rels, Evaluator& ev,
                            const std::vector<Monomial>& basis) {
  SuiteReport rep;
  rep.basis_size = basis.size();
  auto zero = Expr::zero();
  for (const auto& r : rels) {
    RelationResult res;
    res.family = r.family;
    res.label = r.label;
    if (r.expr->parity() == kMixed || r.expr->degree() == kMixed) {
      res.pass = false;
      res.note = "inhomogeneous relation";
    } else if (auto ce = op_equal(ev, r.expr, zero, basis)) {
      res.pass = false;
      res.counterexample = std::move(ce);
    }
    rep.results.push_back(std::move(res));
  }
  return rep;
}

SuiteReport check_assignment(const GeneratorAssignment& a, Evaluator& ev, const std::vector<Monomial>& basis,
                             const SuiteOptions& opt) {
  if (auto bad = a.check_parities()) {
    SuiteReport rep;
    rep.results.push_back({"parity", *bad, false, "generator image has the wrong parity", std::nullopt});
    return rep;
  }
  return check_relations(relation_suite(a, opt), ev, basis);
}

GeneratorAssignment omega_assignment(const GeneratorAssignment& a, const Context& ctx) {
  GeneratorAssignment w(a.m(), a.n(), a.eps());
  for (int i = 0; i < a.size(); ++i)
    for (int r = 0; r <= 1; ++r) {
      if (a.has(Gen::Xm, i, r))
        w.set(Gen::Xp, i, r, PolyScalar(sgn(a.p(i))) * omega_tilde(a.xm(i, r), ctx));
      if (a.has(Gen::Xp, i, r))
        w.set(Gen::Xm, i, r, PolyScalar(sgn(a.p(i + 1))) * omega_tilde(a.xp(i, r), ctx));
      if (a.has(Gen::H, i, r)) w.set(Gen::H, i, r, omega_tilde(a.h(i, r), ctx));
    }
  return w;
}

ExprPtr build_A(const AffineGl& g, int i, int tag) {
  const int L = g.indices().size();
  auto par = [&](int p) { return g.indices().parity_at_pos(p); };
  const PolyScalar hh = half_h();
  std::vector<ExprPtr> t;
  auto ser = [&](int x1, int y1, int x2, int y2, int shift, const PolyScalar& c) {
    t.push_back(Expr::series({{g.E_pos(x1, y1, -shift, tag), -1}, {g.E_pos(x2, y2, shift, tag), 1}}, c));
  };
  for (int u = 1; u <= L; ++u) {
    if (u == i) continue;
    if (u > i) {
      ser(u, i, i, u, 0, hh);
      ser(i, u, u, i, 1, PolyScalar(-sgn(par(i) + par(u))) * hh);
    } else {
      ser(i, u, u, i, 0, PolyScalar(-sgn(par(i) + par(u))) * hh);
      ser(u, i, i, u, 1, hh);
    }
  }
  return Expr::memoize(Expr::sum(std::move(t)));
}

ExprPtr build_P(const AffineGl& g, int i, int b, int tag) {
  if (i == b) throw std::invalid_argument("build_P: i == b");
  int a = i < b ? 1 : 0;
  auto par = [&](int p) { return g.indices().parity_at_pos(p); };
  return Expr::memoize(Expr::series({{g.E_pos(i, b, -a, tag), -1}, {g.E_pos(b, i, a, tag), 1}},
                                    PolyScalar(sgn(par(i) + par(b))) * PolyScalar::h()));
}

ExprPtr build_Q(const AffineGl& g, int i, int b, int tag) {
  if (i == b) throw std::invalid_argument("build_Q: i == b");
  int a = i < b ? 0 : 1;
  return Expr::memoize(
      Expr::series({{g.E_pos(b, i, -a, tag), -1}, {g.E_pos(i, b, a, tag), 1}}, PolyScalar::h()));
}

std::vector<RelationSchema> concl_relations(const AffineGl& g, int kind, int b, int tag) {
  const int L = g.indices().size();
  if (b < 1 || b > L) throw std::invalid_argument("concl: b out of range");
  std::vector<ExprPtr> A(L + 1), S(L + 1);
  for (int i = 1; i <= L; ++i) {
    A[i] = build_A(g, i, tag);
    if (i != b) S[i] = kind == 1 ? build_P(g, i, b, tag) : build_Q(g, i, b, tag);
  }
  std::vector<RelationSchema> out;
  const char* fam = kind == 1 ? "concl-1" : "concl-2";
  for (int i = 1; i <= L; ++i)
    for (int j = i; j <= L; ++j) {
      if (i == b || j == b) continue;
      auto e = Expr::bracket(A[i], S[j]) - Expr::bracket(A[j], S[i]);
      auto q = Expr::bracket(S[i], S[j]);
      e = kind == 1 ? e + q : e - q;
      out.push_back({fam, "b=" + std::to_string(b) + " i=" + std::to_string(i) + " j=" + std::to_string(j), e});
    }
  return out;
}

}  // namespace syv
