#include <algorithm>

#include "doctest.h"
#include "syv/composite.hpp"

using namespace syv;

namespace {

bool same(const Context& ctx, const ExprPtr& a, const ExprPtr& b, int D = 1) {
  VacuumModule V(ctx);
  Evaluator ev(V);
  return !op_equal(ev, a, b, V.basis_upto(D)).has_value();
}

Context single(const std::shared_ptr<AffineGl>& g) {
  Context ctx;
  ctx.add(g);
  return ctx;
}

PartitionData big() { return PartitionData({5, 2}, {4, 2}); }

}  // namespace

TEST_CASE("composite: generalized contractions on level-0 generators") {
  auto t1 = std::make_shared<AffineGl>(5, 4, PolyScalar::c(), PolyScalar(1));
  auto c1 = single(t1);
  PsiGen p1 = psi1_gen(3, 2, 2, 2);
  CHECK(p1.src_m == 3);
  CHECK(p1.src_n == 2);
  CHECK(same(c1, p1.x0(true, 3, *t1, 0), Expr::mode(t1->E(3, -1))));
  CHECK(same(c1, p1.x0(true, 0, *t1, 0), Expr::mode(t1->E(-2, 1, 1))));
  CHECK(p1.x11_node() == 1);
  CHECK(p1.eps_shift == 0);

  auto t2 = std::make_shared<AffineGl>(6, 4, PolyScalar::c(), PolyScalar(1));
  auto c2 = single(t2);
  PsiGen p2 = psi2_gen(3, 2, 3, 2);
  for (int i = 1; i <= 2; ++i) CHECK(same(c2, p2.x0(true, i, *t2, 0), Expr::mode(t2->E(3 + i, 4 + i))));
  CHECK(same(c2, p2.x0(true, 0, *t2, 0), Expr::mode(t2->E(-4, 4, 1))));
  CHECK(p2.x11_node() == 4);
  CHECK(p2.eps_shift == 1);

  CHECK_THROWS_AS(psi1_gen(1, 2, 0, 0), IndexError);
  CHECK_THROWS_AS(psi1_gen(2, 2, -1, 0), IndexError);
  CHECK_THROWS_AS(psi2_gen(0, 0, 2, 1), IndexError);
  CHECK_FALSE(psi1_gen(2, 2, 0, 0).rank_bound_met);
  CHECK(psi1_gen(3, 2, 0, 0).rank_bound_met);
}

TEST_CASE("composite: constants") {
  auto P = big();
  CHECK(alpha_const(P, 1) == PolyScalar::k());
  CHECK(alpha_const(P, 2) == PolyScalar::k() + PolyScalar(1));
  CHECK(gamma_const(P, 1) == alpha_const(P, 2));
  CHECK(gamma_const(P, 2) == PolyScalar(0));
  CHECK(x_const(P, 2, 2) == PolyScalar(0));
  // x_1 = gamma_1 + q_1 - q_2 - (u_1 - u_2)/2
  CHECK(x_const(P, 2, 1) == gamma_const(P, 1) + PolyScalar(2) - PolyScalar::rational(3, 2));
  CHECK(eps_const(P, 2, true) == PolyScalar::h() * (PolyScalar::k() + PolyScalar(6)));
  auto W = constants(P, 2);
  CHECK(W.eps == eps_const(P, 2));
  CHECK(W.gamma.at(1) == gamma_const(P, 1));
}

TEST_CASE("composite: Delta^s stages and eps bookkeeping") {
  auto P = big();
  auto one = delta_s(P, 1, Gen::Xp, 2, 0);
  CHECK(one.stages.size() == 1);
  CHECK(one.value.dims.size() == 1);
  CHECK(one.eps_consistent);

  auto two = delta_s(P, 2, Gen::Xp, 2, 0);
  CHECK(two.stages.size() == 2);
  REQUIRE(two.value.dims.size() == 2);
  CHECK(two.value.dims[0] == std::pair{5, 4});
  CHECK(two.value.dims[1] == std::pair{2, 2});
  CHECK(two.value.level1.empty());
  CHECK(two.eps_consistent);
  CHECK_FALSE(two.rank_bounds_met);

  auto lvl1 = delta_s(P, 2, Gen::Xp, 1, 1);
  CHECK(std::any_of(lvl1.value.level1.begin(), lvl1.value.level1.end(), [](const auto& l) { return l.factor == 0; }));
  CHECK_THROWS(delta_s(P, 2, Gen::Xp, 2, 1));

  // the transposed superscripts give factors that do not match the blocks
  auto bad = delta_s(P, 2, Gen::Xp, 2, 0, true);
  BlockSide side(P, 2);
  std::vector<PolyScalar> a = {PolyScalar(0), PolyScalar(0)};
  CHECK_THROWS(evaluate(bad.value, side, a));
}

TEST_CASE("composite: main theorem, D=1") {
  auto P = big();
  MainTheoremOptions opt;
  opt.degree = 1;
  opt.relation_degree = 1;
  for (int s : {1, 2}) {
    auto rep = check_main_theorem(P, s, opt);
    CHECK_MESSAGE(rep.pass(), "s=", s);
    CHECK(rep.basis_size > 0);
  }
  {
    MainTheoremOptions v = opt;
    v.eps_body_variant = true;
    CHECK_FALSE(check_main_theorem(P, 2, v).pass());
  }
  {
    MainTheoremOptions v = opt;
    v.phi.printed_sign = true;
    auto rep = check_main_theorem(P, 2, v);
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.first_failure()->counterexample.has_value());
  }
}

// The identities for the generators hold for any block levels; the relation
// suite on the completed image singles out c_t = alpha_t and z_t = 1.
TEST_CASE("composite: block levels") {
  auto P = big();
  MainTheoremOptions opt;
  opt.degree = 1;
  opt.relation_degree = -1;
  opt.c_levels = std::vector<PolyScalar>{PolyScalar::k(), PolyScalar::k()};
  CHECK(check_main_theorem(P, 2, opt).pass());
  opt.relation_degree = 1;
  CHECK_FALSE(check_main_theorem(P, 2, opt).pass());
  opt.c_levels.reset();
  opt.z_levels = std::vector<PolyScalar>{PolyScalar(0), PolyScalar(0)};
  CHECK_FALSE(check_main_theorem(P, 2, opt).pass());
}
