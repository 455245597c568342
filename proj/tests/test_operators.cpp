#include <random>

#include "doctest.h"
#include "syv/operators.hpp"

using namespace syv;

namespace {

Context gl_ctx(int m, int n, int tags = 1) {
  Context ctx;
  auto g = std::make_shared<AffineGl>(m, n, PolyScalar::c(), PolyScalar(1));
  for (int t = 0; t < tags; ++t) ctx.add(g);
  return ctx;
}

const AffineGl& gl(const Context& ctx) { return static_cast<const AffineGl&>(ctx.algebra(0)); }

}  // namespace

TEST_CASE("operators: omega-tilde on modes") {
  auto ctx = gl_ctx(2, 3);
  const auto& g = gl(ctx);
  auto w = omega_tilde(Expr::mode(g.E(1, 2, 1)), ctx);
  CHECK(w->mode() == g.E(2, 1, -1));
  CHECK(w->coef() == PolyScalar(1));
  w = omega_tilde(Expr::mode(g.E(2, 1, -1)), ctx);
  CHECK(w->mode() == g.E(1, 2, 1));
  CHECK(w->coef() == PolyScalar(1));
  // odd, position of -1 exceeds that of 1
  w = omega_tilde(Expr::mode(g.E(-1, 1)), ctx);
  CHECK(w->mode() == g.E(1, -1));
  CHECK(w->coef() == PolyScalar(-1));
}

TEST_CASE("operators: op_equal and series evaluation") {
  auto ctx = gl_ctx(2, 3);
  const auto& g = gl(ctx);
  VacuumModule V(ctx);
  Evaluator ev(V);
  auto basis = V.basis_upto(1);
  auto x = Expr::mode(g.E(1, 2, 0));
  CHECK_FALSE(op_equal(ev, x, x, basis));
  auto ce = op_equal(ev, x, Expr::zero(), basis);
  REQUIRE(ce);
  CHECK(ce->lhs != ce->rhs);
  auto one = std::vector<Monomial>{Monomial({g.E(2, 1, -1)})};
  CHECK(op_equal(ev, x, Expr::zero(), one));
  // sum_s E_{1,2}t^{-s-1} E_{2,1}t^{s+1} kills the vacuum
  auto P = Expr::series({{g.E(1, 2, -1), -1}, {g.E(2, 1, 1), 1}});
  CHECK(ev.eval(P, VacuumModule::vacuum()).is_zero());
  // on E_{1,2}t^{-1}|0>: only s = 0 contributes; [E_{2,1}t, E_{1,2}t^{-1}]
  // = E_{2,2} - E_{1,1} + c and the t^0 part kills the vacuum
  auto r = ev.eval(P, Monomial({g.E(1, 2, -1)}));
  CHECK(r == PbwElement::monomial(Monomial({g.E(1, 2, -1)}), PolyScalar::c()));
}

TEST_CASE("operators: truncation soundness") {
  auto ctx = gl_ctx(2, 1);
  const auto& g = gl(ctx);
  VacuumModule V(ctx);
  Evaluator ev(V), ev3(V, 3);
  auto S = Expr::series({{g.E(1, -1, 0), -1}, {g.E(-1, 2, 0), 1}}, PolyScalar::h());
  auto T = Expr::series({{g.E(2, 1, -1), -1}, {g.E(1, 1, 1), 1}});
  for (const auto& m : V.basis_upto(2)) {
    CHECK(ev.eval(S, m) == ev3.eval(S, m));
    CHECK(ev.eval(T, m) == ev3.eval(T, m));
  }
}

TEST_CASE("operators: omega-tilde is an anti-homomorphism on evaluated products") {
  auto ctx = gl_ctx(2, 1);
  const auto& g = gl(ctx);
  VacuumModule V(ctx);
  Evaluator ev(V);
  std::vector<Mode> modes;
  for (int s = -1; s <= 1; ++s)
    for (Mode x : g.modes_at(s, 0)) modes.push_back(x);
  std::mt19937 rng(3);
  std::uniform_int_distribution<size_t> pm(0, modes.size() - 1);
  auto basis = V.basis_upto(2);
  for (int it = 0; it < 40; ++it) {
    auto x = Expr::mode(modes[pm(rng)]);
    auto y = Expr::product({Expr::mode(modes[pm(rng)]), Expr::mode(modes[pm(rng)])});
    auto lhs = omega_tilde(x * y, ctx);
    auto rhs = Expr::scale(PolyScalar((x->parity() & y->parity()) ? -1 : 1),
                           omega_tilde(y, ctx) * omega_tilde(x, ctx));
    CHECK_FALSE(op_equal(ev, lhs, rhs, basis));
    // and on brackets: pi([x,y]) = -[pi x, pi y]
    auto b1 = omega_tilde(Expr::bracket(x, y), ctx);
    auto b2 = Expr::scale(PolyScalar(-1), Expr::bracket(omega_tilde(x, ctx), omega_tilde(y, ctx)));
    CHECK_FALSE(op_equal(ev, b1, b2, basis));
    // omega-tilde respects the affine bracket of modes, central terms included
    Mode a = modes[pm(rng)], b = modes[pm(rng)];
    LinComb br;
    g.bracket(a, b, br);
    std::vector<ExprPtr> terms{Expr::scalar(br.scalar)};
    for (const auto& [z, c] : br.terms) terms.push_back(Expr::mode(z, c));
    auto lhs2 = omega_tilde(Expr::sum(terms), ctx);
    auto rhs2 = Expr::scale(PolyScalar(-1), Expr::bracket(omega_tilde(Expr::mode(a), ctx), omega_tilde(Expr::mode(b), ctx)));
    CHECK_FALSE(op_equal(ev, lhs2, rhs2, basis));
  }
}

TEST_CASE("operators: map_tags realizes a primitive coproduct") {
  auto ctx = gl_ctx(1, 1, 2);
  const auto& g = gl(ctx);
  VacuumModule V(ctx);
  Evaluator ev(V);
  Mode x = g.E(1, -1, 1), y = g.E(-1, 1, -1);
  LinComb br;
  g.bracket(x, y, br);
  std::vector<ExprPtr> t{Expr::scalar(br.scalar * PolyScalar(1))};
  for (const auto& [z, c] : br.terms) t.push_back(Expr::mode(z, c));
  // Delta([x,y]) = [Delta x, Delta y] with c -> c + c
  std::vector<std::vector<int>> f{{0, 1}};
  auto lhs = Expr::bracket(map_tags(Expr::mode(x), f), map_tags(Expr::mode(y), f));
  std::vector<ExprPtr> t2{Expr::scalar(br.scalar * PolyScalar(2))};
  for (const auto& [z, c] : br.terms) t2.push_back(map_tags(Expr::mode(z, c), f));
  CHECK_FALSE(op_equal(ev, lhs, Expr::sum(t2), V.basis_upto(2)));
  auto S = Expr::series({{g.E(1, 1, -1), -1}, {g.E(1, -1, 1), 1}});
  CHECK(map_tags(S, f)->kids().size() == 4);
}
