#include <algorithm>
#include <set>

#include "doctest.h"
#include "syv/maps.hpp"

using namespace syv;

namespace {

Context gl_ctx(int m, int n, int tags = 1) {
  Context ctx;
  auto g = std::make_shared<AffineGl>(m, n, PolyScalar::c(), PolyScalar(1));
  for (int t = 0; t < tags; ++t) ctx.add(g);
  return ctx;
}

const AffineGl& gl(const Context& ctx) { return static_cast<const AffineGl&>(ctx.algebra(0)); }

// Independent Cartan oracle: node i sits between positions i and i+1, with
// position 0 read as m+n; positions > m are odd.
int cartan_oracle(int m, int n, int i, int j) {
  const int L = m + n;
  auto sg = [&](int pos) {
    pos = ((pos - 1) % L + L) % L + 1;
    return pos > m ? -1 : 1;
  };
  i = ((i % L) + L) % L;
  j = ((j % L) + L) % L;
  if (i == j) return sg(i == 0 ? L : i) + sg(i + 1);
  if (j == (i + 1) % L) return -sg(i + 1);
  if (i == (j + 1) % L) return -sg(i == 0 ? L : i);
  return 0;
}

bool has_label(const std::vector<RelationSchema>& rels, const std::string& fam, const std::string& label) {
  return std::any_of(rels.begin(), rels.end(), [&](const auto& r) { return r.family == fam && r.label == label; });
}

}  // namespace

TEST_CASE("yangian: Cartan matrix") {
  CHECK(cartan(2, 3, 1, 1) == 2);
  CHECK(cartan(2, 3, 2, 2) == 0);
  CHECK(cartan(2, 3, 1, 3) == 0);
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 2}, std::pair{1, 3}})
    for (int i = 0; i < m + n; ++i)
      for (int j = 0; j < m + n; ++j) CHECK_MESSAGE(cartan(m, n, i, j) == cartan_oracle(m, n, i, j), m, n, i, j);
}

TEST_CASE("yangian: relation enumeration") {
  auto ctx = gl_ctx(2, 3);
  auto A = ev_assignment(ctx, 0, PolyScalar::a());
  auto rels = relation_suite(A);
  std::map<std::string, int> count;
  for (const auto& r : rels) ++count[r.family];
  CHECK(count["2.2"] == 25);
  // odd nodes of gl(2|3) are 0 and 2, each with X+ and X-
  CHECK(count["2.11"] == 4);
  for (int i : {0, 2}) CHECK(has_label(rels, "2.11", "[X+_{" + std::to_string(i) + ",0},X+_{" + std::to_string(i) + ",0}]"));
  CHECK_FALSE(has_label(rels, "2.11", "[X+_{1,0},X+_{1,0}]"));
  // the boundary pairs go to the boundary relations instead
  CHECK_FALSE(has_label(rels, "2.5", "[H~_{0,1},X+_{4,0}]"));
  CHECK_FALSE(has_label(rels, "2.5", "[H~_{4,1},X+_{0,0}]"));
  CHECK(has_label(rels, "2.6", "[H~_{0,1},X+_{4,0}]"));
  CHECK(has_label(rels, "2.7", "[H~_{4,1},X+_{0,0}]"));
  // deterministic
  auto again = relation_suite(A);
  REQUIRE(again.size() == rels.size());
  for (size_t i = 0; i < rels.size(); ++i) CHECK(again[i].label == rels[i].label);
  // every schema is homogeneous
  for (const auto& r : rels) {
    CHECK(r.expr->parity() != kMixed);
    CHECK(r.expr->degree() != kMixed);
  }
}

TEST_CASE("yangian: boundary coefficient") {
  PolyScalar eps = PolyScalar::c() * PolyScalar::h();
  CHECK(boundary_coefficient(2, 3, eps, false) == eps - PolyScalar::rational(1, 2) * PolyScalar::h());
  CHECK(boundary_coefficient(2, 3, eps, true) == eps - PolyScalar::rational(1, 2) * PolyScalar::h() * PolyScalar::h());
}

TEST_CASE("yangian: checker accepts ev, rejects a mutation, passes the zero assignment") {
  auto ctx = gl_ctx(2, 3);
  const auto& g = gl(ctx);
  VacuumModule V(ctx);
  Evaluator ev(V);
  auto basis = V.basis_upto(1);
  auto A = ev_assignment(ctx, 0, PolyScalar::a());
  CHECK(check_assignment(A, ev, basis).pass());

  GeneratorAssignment B(2, 3, A.eps());
  for (const auto& [lab, e] : A.images()) {
    if (lab.g == Gen::H && lab.r == 1) continue;
    B.set(lab.g, lab.i, lab.r, e);
  }
  B.set(Gen::Xp, 1, 1, A.xp(1, 1) + Expr::mode(g.E(1, 2), PolyScalar::h()));
  B.derive_h();
  // H_{1,1} is derived from the perturbed X+_{1,1}; re-derive it from the original
  B.set(Gen::H, 1, 1, A.h(1, 1));
  auto rep = check_relations(relation_suite(B, {.families = {"2.3"}}), ev, basis);
  bool hit = false;
  for (const auto& r : rep.results)
    if (r.label == "[X+_{1,1},X-_{1,0}]") hit = !r.pass;
  CHECK(hit);

  GeneratorAssignment Z(2, 3, A.eps());
  for (Gen x : {Gen::Xp, Gen::Xm, Gen::H})
    for (int i = 0; i < 5; ++i)
      for (int r = 0; r <= 1; ++r) Z.set(x, i, r, Expr::zero());
  CHECK(check_assignment(Z, ev, basis).pass());
}

TEST_CASE("yangian: omega-conjugate of ev passes; gather1 holds") {
  auto ctx = gl_ctx(2, 3);
  VacuumModule V(ctx);
  Evaluator ev(V);
  auto basis = V.basis_upto(1);
  auto A = ev_assignment(ctx, 0, PolyScalar::a());
  auto W = omega_assignment(A, ctx);
  W.derive_h();
  CHECK(check_assignment(W, ev, basis).pass());
  auto g1 = check_relations(relation_suite(A, {.families = {"gather1"}}), ev, basis);
  CHECK(g1.results.size() == 40);
  CHECK(g1.pass());
}

TEST_CASE("yangian: presentation relations") {
  auto ctx = gl_ctx(2, 3);
  const auto& g = gl(ctx);
  VacuumModule V(ctx);
  Evaluator ev(V);
  auto rels = presentation_relations(g);
  CHECK(check_relations(rels, ev, V.basis_upto(2)).pass());
  // the odd-square relations appear only for odd nodes
  std::set<std::string> labels;
  for (const auto& r : rels) labels.insert(r.label);
  CHECK(labels.count("odd square+ 2") == 1);
  CHECK(labels.count("odd square+ 1") == 0);
  // dropping the central term of h_0 breaks [x+_0, x-_0] = h_0
  auto img = presentation_images(g);
  auto h0 = lincomb_expr(img.h[0]) - Expr::scalar(PolyScalar::c());
  auto bad = Expr::bracket(lincomb_expr(img.xp[0]), lincomb_expr(img.xm[0])) - h0;
  CHECK(op_equal(ev, bad, Expr::zero(), V.basis_upto(0)).has_value());
}

TEST_CASE("yangian: A_i, P_i, Q_i and the series identities") {
  auto ctx = gl_ctx(2, 3);
  const auto& g = gl(ctx);
  VacuumModule V(ctx);
  Evaluator ev(V);
  for (int i = 1; i <= 5; ++i) CHECK(ev.eval(build_A(g, i), VacuumModule::vacuum()).is_zero());
  auto basis = V.basis_upto(2);
  for (int kind : {1, 2}) {
    auto rels = concl_relations(g, kind, 3);
    CHECK(rels.size() == 10);
    CHECK(has_label(rels, kind == 1 ? "concl-1" : "concl-2", "b=3 i=1 i=1") == false);
    CHECK(has_label(rels, kind == 1 ? "concl-1" : "concl-2", "b=3 i=1 j=1"));
    CHECK(check_relations(rels, ev, basis).pass());
  }
  // the pieces are not zero by themselves: i < b < j
  auto piece = Expr::bracket(build_A(g, 1), build_P(g, 4, 3));
  CHECK(op_equal(ev, piece, Expr::zero(), basis).has_value());
  CHECK_THROWS(concl_relations(g, 1, 6));
}
