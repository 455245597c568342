#include <random>

#include "doctest.h"
#include "syv/scalar.hpp"

using syv::PolyScalar;
using syv::Sym;

namespace {

PolyScalar random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), ex(0, 2), num(-5, 5), den(1, 4);
  PolyScalar p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    PolyScalar term = PolyScalar::rational(num(rng), den(rng));
    term *= PolyScalar::h().pow(static_cast<unsigned>(ex(rng)));
    term *= PolyScalar::c().pow(static_cast<unsigned>(ex(rng)));
    term *= PolyScalar::k().pow(static_cast<unsigned>(ex(rng)));
    term *= PolyScalar::a().pow(static_cast<unsigned>(ex(rng)));
    p += term;
  }
  return p;
}

}  // namespace

TEST_CASE("scalar: arithmetic examples") {
  PolyScalar h = PolyScalar::h(), c = PolyScalar::c();
  CHECK((h + (-h)).is_zero());
  CHECK((c * h) * PolyScalar(1) == c * h);
  CHECK(PolyScalar::rational(1, 2) * h * (PolyScalar(2) * c) == c * h);
  CHECK((c * h).str() == "h*c");
  CHECK((PolyScalar::rational(3, 2) * h * h * c).str() == "3/2*h^2*c");
  CHECK(PolyScalar().str() == "0");
  CHECK((h - PolyScalar(1)).str() == "h - 1");
}

TEST_CASE("scalar: substitution examples") {
  PolyScalar h = PolyScalar::h(), c = PolyScalar::c(), k = PolyScalar::k(), a = PolyScalar::a();
  CHECK((c * h).substitute({{Sym::c, c - PolyScalar(1)}}) == c * h - h);
  PolyScalar x = k + PolyScalar(3);
  CHECK(a.substitute({{Sym::a, -(x * h)}}) == -(x * h));
  CHECK((h * h).substitute({{Sym::h, PolyScalar(0)}}).is_zero());
  // simultaneous, not sequential
  CHECK((h + c).substitute({{Sym::h, c}, {Sym::c, h}}) == h + c);
  CHECK((h * c).substitute({{Sym::h, c}, {Sym::c, PolyScalar(2)}}) == PolyScalar(2) * c);
}

TEST_CASE("scalar: ring axioms and substitution homomorphism on random inputs") {
  std::mt19937 rng(20241016);
  std::map<Sym, PolyScalar> bind{{Sym::c, PolyScalar::c() - PolyScalar(1)},
                                 {Sym::a, PolyScalar::rational(-1, 2) * PolyScalar::k() * PolyScalar::h()}};
  for (int it = 0; it < 200; ++it) {
    PolyScalar p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
    CHECK((p * q).substitute(bind) == p.substitute(bind) * q.substitute(bind));
    CHECK((p + q).substitute(bind) == p.substitute(bind) + q.substitute(bind));
    PolyScalar acc = p;
    acc.add_mul(q, r);
    CHECK(acc == p + q * r);
    for (const auto& t : (p * q).terms()) CHECK(sgn(t.second) != 0);
  }
}
