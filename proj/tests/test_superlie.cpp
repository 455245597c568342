#include "doctest.h"
#include "syv/superlie.hpp"

using namespace syv;

namespace {

LinComb lc(std::initializer_list<std::pair<Mode, long>> t, PolyScalar scalar = PolyScalar()) {
  LinComb r;
  for (auto [m, c] : t) r.add(m, PolyScalar(c));
  r.scalar = scalar;
  return r;
}

std::vector<Mode> affine_modes(const ModeAlgebra& g, int smin, int smax) {
  std::vector<Mode> out;
  for (int s = smin; s <= smax; ++s)
    for (Mode x : g.modes_at(s, 0)) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("superlie: finite gl brackets") {
  AffineGl g(2, 3, PolyScalar::c(), PolyScalar(1));
  CHECK(bracket_gl(g, g.E(1, 2), g.E(2, 1)) == lc({{g.E(1, 1), 1}, {g.E(2, 2), -1}}));
  CHECK(bracket_gl(g, g.E(1, -1), g.E(-1, 1)) == lc({{g.E(1, 1), 1}, {g.E(-1, -1), 1}}));
  AffineGl g4(4, 2, PolyScalar::c(), PolyScalar(1));
  CHECK(bracket_gl(g4, g4.E(1, 2), g4.E(3, 4)).is_zero());
}

TEST_CASE("superlie: affine brackets") {
  AffineGl g(2, 3, PolyScalar::c(), PolyScalar(1));
  CHECK(bracket_affine(g, g.E(1, 2, 1), g.E(2, 1, -1)) ==
        lc({{g.E(1, 1), 1}, {g.E(2, 2), -1}}, PolyScalar::c()));
  // no central term when u + v != 0; both Lie terms survive
  CHECK(bracket_affine(g, g.E(1, 2, 1), g.E(2, 1, 1)) == lc({{g.E(1, 1, 2), 1}, {g.E(2, 2, 2), -1}}));
  CHECK(bracket_affine(g, g.E(1, 1, 1), g.E(2, 2, -1)) == lc({}, PolyScalar(1)));
  // odd diagonal: z term carries (-1)^{p(i)+p(x)}
  CHECK(bracket_affine(g, g.E(1, 1, 2), g.E(-1, -1, -2)) == lc({}, PolyScalar(-2)));
  CHECK(g.E(1, -2).parity() == 1);
  CHECK(g.E(-1, -2).parity() == 0);
}

TEST_CASE("superlie: algebra a brackets") {
  AlgebraA A(PartitionData({3, 1}, {2, 1}), PolyScalar::k());
  // labels: col 1 = {1,2,3,-1,-2}, col 2 = {4,-3}
  CHECK(bracket_a(A, A.e(4, 1), A.psi(4, 2)).is_zero());
  CHECK(bracket_a(A, A.e(4, 4, -1), A.psi(4, 2, -1)) == lc({{A.psi(4, 2, -2), 1}}));
  CHECK(bracket_a(A, A.psi(4, 1), A.psi(-3, 2)).is_zero());
  CHECK(bracket_a(A, A.e(1, 2, -1), A.e(2, 1, -1)) == lc({{A.e(1, 1, -2), 1}, {A.e(2, 2, -2), -1}}));
  CHECK(A.kappa(A.e(1, 2), A.e(2, 1)) == PolyScalar::k());
  CHECK(A.kappa(A.e(1, 1), A.e(-1, -1)) == PolyScalar(-1));
  CHECK(A.kappa(A.e(4, 1), A.psi(4, 1)).is_zero());
  CHECK_THROWS_AS(A.psi(1, 4), IndexError);
  CHECK_THROWS_AS(A.e(1, 4), IndexError);
  CHECK(A.psi(1 + 3, 1).parity() == 1);
  CHECK(A.psi(4, -1).parity() == 0);
}

TEST_CASE("superlie: presentation images") {
  AffineGl g(2, 3, PolyScalar::c(), PolyScalar(1));
  auto img = presentation_images(g);
  CHECK(img.xp[0] == lc({{g.E(-3, 1, 1), 1}}));
  CHECK(img.xm[0] == lc({{g.E(1, -3, -1), -1}}));
  CHECK(img.h[0] == lc({{g.E(-3, -3), -1}, {g.E(1, 1), -1}}, PolyScalar::c()));
  CHECK(img.xm[1] == lc({{g.E(2, 1), 1}}));
  CHECK(img.xm[3] == lc({{g.E(-2, -1), -1}}));
  CHECK(img.h[2] == lc({{g.E(2, 2), 1}, {g.E(-1, -1), 1}}));
  CHECK(img.h[3] == lc({{g.E(-1, -1), -1}, {g.E(-2, -2), 1}}));
  CHECK(supertrace_coeffs(2, 3) == std::vector<int>{1, 1, -1, -1, -1});
}

TEST_CASE("superlie: skew-symmetry and Jacobi, gl(2|2) and a for (3,1),(2,1)") {
  AffineGl g(2, 2, PolyScalar::c(), PolyScalar::rational(1, 1));
  auto fin = g.modes_at(0, 0);
  CHECK_FALSE(check_super_skew(g, fin));
  CHECK_FALSE(check_super_jacobi(g, fin));
  AlgebraA A(PartitionData({3, 1}, {2, 1}), PolyScalar::k());
  auto am = affine_modes(A, -1, 1);
  CHECK_FALSE(check_super_skew(A, am));
  auto jac = check_super_jacobi(A, am);
  CHECK_MESSAGE(!jac, (jac ? *jac : ""));
}

TEST_CASE("superlie: a corrupted structure constant is detected") {
  struct Broken : AffineGl {
    using AffineGl::AffineGl;
    void bracket(Mode x, Mode y, LinComb& out) const override {
      AffineGl::bracket(x, y, out);
      // [E12, E21] becomes E11 + E22
      if (x.i() == 1 && x.j() == 2 && y.i() == 2 && y.j() == 1) out.add(E_pos(2, 2, x.s() + y.s()), PolyScalar(2));
      if (y.i() == 1 && y.j() == 2 && x.i() == 2 && x.j() == 1) out.add(E_pos(2, 2, x.s() + y.s()), PolyScalar(-2));
    }
  };
  Broken b(2, 1, PolyScalar::c(), PolyScalar(1));
  CHECK(check_super_jacobi(b, b.modes_at(0, 0)).has_value());
}
