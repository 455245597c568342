#include <random>

#include "doctest.h"
#include "syv/smodule.hpp"

using namespace syv;

namespace {

Context gl_ctx(int m, int n) {
  Context ctx;
  ctx.add(std::make_shared<AffineGl>(m, n, PolyScalar::c(), PolyScalar(1)));
  return ctx;
}

ModuleVector vec(std::initializer_list<Mode> ms, PolyScalar c = PolyScalar(1)) {
  return PbwElement::monomial(Monomial(std::vector<Mode>(ms)), c);
}

}  // namespace

TEST_CASE("smodule: basis enumeration for gl(1|1)") {
  VacuumModule V(gl_ctx(1, 1));
  CHECK(V.basis(0).size() == 1);
  CHECK(V.basis(1).size() == 4);
  // degree 2: four t^-2 modes plus pairs of t^-1 modes; the two odd modes
  // cannot repeat: C(4,2) + 2 even squares = 8
  CHECK(V.basis(2).size() == 4 + 8);
  for (const auto& m : V.basis(2)) CHECK(m.is_normal());
}

TEST_CASE("smodule: apply_mode examples") {
  VacuumModule V(gl_ctx(2, 3));
  const auto& g = static_cast<const AffineGl&>(V.context().algebra(0));
  CHECK(V.apply_mode(g.E(1, 2, 1), VacuumModule::vacuum()).is_zero());
  CHECK(V.apply_mode(g.E(1, 2, 1), vec({g.E(2, 1, -1)})) == vec({}, PolyScalar::c()));
  CHECK(V.apply_mode(g.E(1, 1, 0), vec({g.E(1, 2, -1)})) == vec({g.E(1, 2, -1)}));
  // z = 1 contributes on diagonal pairs
  CHECK(V.apply_mode(g.E(1, 1, 1), vec({g.E(2, 2, -1)})) == vec({}, PolyScalar(1)));
  CHECK(V.apply_mode(g.E(1, 1, 1), vec({g.E(1, 1, -1)})) == vec({}, PolyScalar::c() + PolyScalar(1)));
}

TEST_CASE("smodule: representation property and degree additivity") {
  VacuumModule V(gl_ctx(2, 1));
  const auto& g = static_cast<const AffineGl&>(V.context().algebra(0));
  std::vector<Mode> modes;
  for (int s = -2; s <= 2; ++s)
    for (Mode x : g.modes_at(s, 0)) modes.push_back(x);
  auto basis = V.basis_upto(2);
  std::mt19937 rng(11);
  std::uniform_int_distribution<size_t> pm(0, modes.size() - 1), pb(0, basis.size() - 1);
  for (int it = 0; it < 300; ++it) {
    Mode x = modes[pm(rng)], y = modes[pm(rng)];
    ModuleVector v = PbwElement::monomial(basis[pb(rng)], PolyScalar(1));
    ModuleVector lhs = V.apply_mode(x, V.apply_mode(y, v));
    lhs.add_scaled(V.apply_mode(y, V.apply_mode(x, v)), mpq_class((x.parity() & y.parity()) ? 1 : -1));
    LinComb br;
    g.bracket(x, y, br);
    ModuleVector rhs = v.scaled(br.scalar);
    for (const auto& [z, c] : br.terms) rhs.add_scaled(V.apply_mode(z, v), c);
    CHECK(lhs == rhs);
    int d = v.max_degree();
    for (const auto& [m, c] : V.apply_mode(x, v).terms()) CHECK(m.degree() == d - x.s());
  }
}

TEST_CASE("smodule: tensor module with per-factor bounds") {
  Context ctx;
  ctx.add(std::make_shared<AffineGl>(1, 1, PolyScalar::c(), PolyScalar(1)));
  ctx.add(std::make_shared<AffineGl>(1, 1, PolyScalar::c(), PolyScalar(1)));
  VacuumModule V(ctx);
  CHECK(V.basis(2, {1, 1}).size() == 16);
  CHECK(V.basis(1).size() == 8);
  const auto& g = static_cast<const AffineGl&>(ctx.algebra(0));
  // a positive mode of factor 1 passes factor-0 modes with a Koszul sign
  ModuleVector v = vec({g.E(1, -1, -1, 0), g.E(-1, 1, -1, 1)});
  ModuleVector r = V.apply_mode(g.E(1, -1, 1, 1), v);
  CHECK(r == vec({g.E(1, -1, -1, 0)}, PolyScalar(-1) * PolyScalar::c()));
}
