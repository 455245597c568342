#include "syv/superlie.hpp"

#include <algorithm>

namespace syv {

Mode Mode::make(int tag, Kind kind, int i, int j, int s, int parity) {
  Mode m;
  m.key_ = (static_cast<uint64_t>(tag) << 56) | (static_cast<uint64_t>(s + kSOffset) << 40) |
           (static_cast<uint64_t>(kind) << 36) | (static_cast<uint64_t>(i) << 24) |
           (static_cast<uint64_t>(j) << 12) | static_cast<uint64_t>(parity & 1);
  return m;
}

void LinComb::add(Mode m, const PolyScalar& c) {
  if (!c.is_zero()) terms.emplace_back(m, c);
}

void LinComb::canonicalize() {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Mode, PolyScalar>> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms = std::move(out);
}

bool operator==(LinComb a, LinComb b) {
  a.canonicalize();
  b.canonicalize();
  return a.terms == b.terms && a.scalar == b.scalar;
}

namespace {

int sgn_pow(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

AffineGl::AffineGl(int m, int n, PolyScalar level_c, PolyScalar level_z)
    : idx_(m, n), c_(std::move(level_c)), z_(std::move(level_z)) {}

Mode AffineGl::E_pos(int pi, int pj, int s, int tag) const {
  if (pi < 1 || pi > idx_.size() || pj < 1 || pj > idx_.size()) throw IndexError("E: position out of range");
  return Mode::make(tag, Kind::E, pi, pj, s, idx_.parity_at_pos(pi) ^ idx_.parity_at_pos(pj));
}

Mode AffineGl::E(int i, int j, int s, int tag) const { return E_pos(idx_.position(i), idx_.position(j), s, tag); }

void AffineGl::bracket(Mode x, Mode y, LinComb& out) const {
  int i = x.i(), j = x.j(), a = y.i(), b = y.j();
  int u = x.s(), v = y.s();
  int pi = idx_.parity_at_pos(i), pa = idx_.parity_at_pos(a);
  int tag = x.tag();
  if (j == a) out.add(E_pos(i, b, u + v, tag), PolyScalar(1));
  if (i == b) out.add(E_pos(a, j, u + v, tag), PolyScalar(-sgn_pow(x.parity() * y.parity())));
  if (u + v == 0 && u != 0) {
    if (i == b && j == a) out.scalar.add_scaled(c_, mpq_class(u * sgn_pow(pi)));
    if (i == j && a == b) out.scalar.add_scaled(z_, mpq_class(u * sgn_pow(pi + pa)));
  }
}

std::vector<Mode> AffineGl::modes_at(int s, int tag) const {
  std::vector<Mode> out;
  for (int i = 1; i <= idx_.size(); ++i)
    for (int j = 1; j <= idx_.size(); ++j) out.push_back(E_pos(i, j, s, tag));
  std::sort(out.begin(), out.end());
  return out;
}

std::string AffineGl::name(Mode x) const {
  std::string r = "E(" + std::to_string(idx_.label_at(x.i())) + "," + std::to_string(idx_.label_at(x.j())) + ")";
  if (x.s() != 0) r += "t^" + std::to_string(x.s());
  return r;
}

AlgebraA::AlgebraA(PartitionData part, PolyScalar k)
    : part_(std::move(part)), idx_(part_.M(), part_.N()), k_(std::move(k)) {}

bool AlgebraA::in_b(int i, int j) const { return part_.col(i) >= part_.col(j); }
bool AlgebraA::in_psi(int i, int j) const { return part_.col(i) > part_.col(j); }

Mode AlgebraA::e(int i, int j, int s, int tag) const {
  if (!in_b(i, j)) throw IndexError("e: index pair outside b");
  return Mode::make(tag, Kind::e, idx_.position(i), idx_.position(j), s, part_.parity(i) ^ part_.parity(j));
}

Mode AlgebraA::psi(int i, int j, int s, int tag) const {
  if (!in_psi(i, j)) throw IndexError("psi: index pair outside the psi span");
  return Mode::make(tag, Kind::psi, idx_.position(i), idx_.position(j), s, 1 ^ part_.parity(i) ^ part_.parity(j));
}

PolyScalar AlgebraA::kappa(Mode x, Mode y) const {
  if (x.kind() != Kind::e || y.kind() != Kind::e) return PolyScalar(0);
  int i = x.i(), j = x.j(), a = y.i(), b = y.j();
  int pi = idx_.parity_at_pos(i), pa = idx_.parity_at_pos(a);
  PolyScalar r;
  if (i == b && j == a) r.add_scaled(k_, mpq_class(sgn_pow(pi)));
  if (i == j && a == b) r += PolyScalar(sgn_pow(pi + pa));
  return r;
}

void AlgebraA::bracket(Mode x, Mode y, LinComb& out) const {
  int tag = x.tag();
  int u = x.s(), v = y.s();
  if (x.kind() == Kind::psi && y.kind() == Kind::e) {
    LinComb tmp;
    bracket(y, x, tmp);
    int sg = -sgn_pow(x.parity() * y.parity());
    for (auto& [m, c] : tmp.terms) out.add(m, c * PolyScalar(sg));
    out.scalar.add_scaled(tmp.scalar, mpq_class(sg));
    return;
  }
  int i = label(x.i()), j = label(x.j()), a = label(y.i()), b = label(y.j());
  // parities of the underlying e_{ij}, e_{xy}
  int pe1 = part_.parity(i) ^ part_.parity(j);
  int pe2 = part_.parity(a) ^ part_.parity(b);
  if (x.kind() == Kind::e && y.kind() == Kind::e) {
    if (j == a) out.add(e(i, b, u + v, tag), PolyScalar(1));
    if (i == b) out.add(e(a, j, u + v, tag), PolyScalar(-sgn_pow(pe1 * pe2)));
    if (u + v == 0 && u != 0) out.scalar.add_scaled(kappa(x, y), mpq_class(u));
    return;
  }
  if (x.kind() == Kind::e && y.kind() == Kind::psi) {
    if (j == a) out.add(psi(i, b, u + v, tag), PolyScalar(1));
    if (i == b) out.add(psi(a, j, u + v, tag), PolyScalar(-sgn_pow(pe1 * (pe2 + 1))));
    return;
  }
  // psi, psi
  if (j == a) out.add(psi(i, b, u + v, tag), PolyScalar(1));
  if (i == b) out.add(psi(a, j, u + v, tag), PolyScalar(-sgn_pow((pe1 + 1) * (pe2 + 1))));
}

std::vector<Mode> AlgebraA::modes_at(int s, int tag) const {
  std::vector<Mode> out;
  for (int i : part_.labels())
    for (int j : part_.labels()) {
      if (in_b(i, j)) out.push_back(e(i, j, s, tag));
      if (in_psi(i, j)) out.push_back(psi(i, j, s, tag));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AlgebraA::name(Mode x) const {
  std::string r = x.kind() == Kind::psi ? "psi(" : "e(";
  r += std::to_string(label(x.i())) + "," + std::to_string(label(x.j())) + ")[" + std::to_string(x.s()) + "]";
  return r;
}

void Context::bracket(Mode x, Mode y, LinComb& out) const {
  if (x.tag() != y.tag()) return;
  algebra(x.tag()).bracket(x, y, out);
}

std::string Context::name(Mode x) const {
  std::string r = algebra(x.tag()).name(x);
  if (num_tags() > 1) r += "@" + std::to_string(x.tag());
  return r;
}

LinComb bracket_gl(const AffineGl& g, Mode x, Mode y) {
  LinComb out;
  g.bracket(x.with_s(0), y.with_s(0), out);
  out.canonicalize();
  return out;
}

LinComb bracket_affine(const AffineGl& g, Mode x, Mode y) {
  LinComb out;
  g.bracket(x, y, out);
  out.canonicalize();
  return out;
}

LinComb bracket_a(const AlgebraA& a, Mode x, Mode y) {
  LinComb out;
  a.bracket(x, y, out);
  out.canonicalize();
  return out;
}

PresentationImages presentation_images(const AffineGl& g, int tag) {
  const auto& I = g.indices();
  int L = I.size();
  PresentationImages img;
  img.h.resize(static_cast<size_t>(L));
  img.xp.resize(static_cast<size_t>(L));
  img.xm.resize(static_cast<size_t>(L));
  // node 0
  img.h[0].add(g.E_pos(L, L, 0, tag), PolyScalar(-1));
  img.h[0].add(g.E_pos(1, 1, 0, tag), PolyScalar(-1));
  img.h[0].scalar = g.level_c();
  img.xp[0].add(g.E_pos(L, 1, 1, tag), PolyScalar(1));
  img.xm[0].add(g.E_pos(1, L, -1, tag), PolyScalar(-1));
  for (int i = 1; i < L; ++i) {
    int p = I.parity_at_pos(i), p1 = I.parity_at_pos(i + 1);
    auto& h = img.h[static_cast<size_t>(i)];
    h.add(g.E_pos(i, i, 0, tag), PolyScalar(sgn_pow(p)));
    h.add(g.E_pos(i + 1, i + 1, 0, tag), PolyScalar(-sgn_pow(p1)));
    img.xp[static_cast<size_t>(i)].add(g.E_pos(i, i + 1, 0, tag), PolyScalar(1));
    img.xm[static_cast<size_t>(i)].add(g.E_pos(i + 1, i, 0, tag), PolyScalar(sgn_pow(p)));
  }
  for (auto* v : {&img.h, &img.xp, &img.xm})
    for (auto& lc : *v) lc.canonicalize();
  return img;
}

std::vector<int> supertrace_coeffs(int m, int n) { return SuperIndexSet(m, n).supertrace_coeffs(); }

}  // namespace syv

namespace syv {

namespace {

void add_scaled(LinComb& acc, const LinComb& x, const PolyScalar& c) {
  for (const auto& [m, v] : x.terms) acc.add(m, v * c);
  acc.scalar.add_mul(x.scalar, c);
}

std::string describe(const ModeAlgebra& g, std::initializer_list<Mode> ms) {
  std::string r;
  for (Mode m : ms) r += (r.empty() ? "" : ", ") + g.name(m);
  return r;
}

}  // namespace

std::optional<std::string> check_super_skew(const ModeAlgebra& g, const std::vector<Mode>& modes) {
  for (Mode x : modes)
    for (Mode y : modes) {
      LinComb a, b;
      g.bracket(x, y, a);
      g.bracket(y, x, b);
      add_scaled(a, b, PolyScalar((x.parity() & y.parity()) ? -1 : 1));
      a.canonicalize();
      if (!a.is_zero()) return "skew-symmetry fails for " + describe(g, {x, y});
    }
  return std::nullopt;
}

std::optional<std::string> check_super_jacobi(const ModeAlgebra& g, const std::vector<Mode>& modes) {
  // (-1)^{p(x)p(z)}[x,[y,z]] + cyclic = 0, central parts included
  auto nested = [&](Mode x, Mode y, Mode z, int sign, LinComb& acc) {
    LinComb inner;
    g.bracket(y, z, inner);
    for (const auto& [w, c] : inner.terms) {
      LinComb outer;
      g.bracket(x, w, outer);
      add_scaled(acc, outer, c * PolyScalar(sign));
    }
  };
  for (Mode x : modes)
    for (Mode y : modes)
      for (Mode z : modes) {
        LinComb acc;
        nested(x, y, z, (x.parity() & z.parity()) ? -1 : 1, acc);
        nested(y, z, x, (y.parity() & x.parity()) ? -1 : 1, acc);
        nested(z, x, y, (z.parity() & y.parity()) ? -1 : 1, acc);
        acc.canonicalize();
        if (!acc.is_zero()) return "Jacobi identity fails for " + describe(g, {x, y, z});
      }
  return std::nullopt;
}

}  // namespace syv
