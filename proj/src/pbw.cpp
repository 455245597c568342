#include "syv/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace syv {

Monomial::Monomial(const std::vector<Mode>& modes) {
  for (Mode x : modes) push_back(x);
}

void Monomial::push_back(Mode x) {
  if (n_ >= kCapacity) throw std::length_error("Monomial: capacity exceeded");
  m_[n_++] = x;
}

Monomial Monomial::tail() const {
  Monomial r;
  r.n_ = static_cast<uint8_t>(n_ - 1);
  std::copy(m_.begin() + 1, m_.begin() + n_, r.m_.begin());
  return r;
}

Monomial Monomial::prepend(Mode x) const {
  if (n_ >= kCapacity) throw std::length_error("Monomial: capacity exceeded");
  Monomial r;
  r.n_ = static_cast<uint8_t>(n_ + 1);
  r.m_[0] = x;
  std::copy(m_.begin(), m_.begin() + n_, r.m_.begin() + 1);
  return r;
}

Monomial Monomial::concat(const Monomial& o) const {
  Monomial r = *this;
  for (Mode x : o) r.push_back(x);
  return r;
}

int Monomial::parity() const {
  int p = 0;
  for (Mode x : *this) p ^= x.parity();
  return p;
}

int Monomial::degree() const {
  int d = 0;
  for (Mode x : *this) d -= x.s();
  return d;
}

int Monomial::degree_of_tag(int tag) const {
  int d = 0;
  for (Mode x : *this)
    if (x.tag() == tag) d -= x.s();
  return d;
}

bool Monomial::is_normal() const {
  for (int i = 0; i + 1 < n_; ++i) {
    if (m_[i + 1] < m_[i]) return false;
    if (m_[i] == m_[i + 1] && m_[i].parity()) return false;
  }
  return true;
}

size_t Monomial::hash() const {
  uint64_t h = 0xcbf29ce484222325ULL ^ n_;
  for (int i = 0; i < n_; ++i) {
    h ^= m_[i].key();
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<size_t>(h);
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i)
    if (a.m_[i] != b.m_[i]) return false;
  return true;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (int i = 0; i < a.n_; ++i)
    if (a.m_[i] != b.m_[i]) return a.m_[i] < b.m_[i];
  return false;
}

PbwElement PbwElement::monomial(const Monomial& m, const PolyScalar& c) {
  PbwElement e;
  e.add(m, c);
  return e;
}

void PbwElement::add(const Monomial& m, const PolyScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PbwElement::add_scaled(const PbwElement& o, const PolyScalar& c) {
  if (c.is_zero()) return;
  if (c.is_constant()) {
    add_scaled(o, c.constant());
    return;
  }
  for (const auto& [m, v] : o.terms_) add(m, v * c);
}

void PbwElement::add_scaled(const PbwElement& o, const mpq_class& c) {
  if (sgn(c) == 0) return;
  for (const auto& [m, v] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m);
    it->second.add_scaled(v, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PbwElement PbwElement::scaled(const PolyScalar& c) const {
  PbwElement r;
  r.add_scaled(*this, c);
  return r;
}

PolyScalar PbwElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? PolyScalar() : it->second;
}

int PbwElement::max_degree() const {
  int d = 0;
  for (const auto& [m, v] : terms_) d = std::max(d, m.degree());
  return d;
}

std::vector<std::pair<Monomial, PolyScalar>> PbwElement::sorted() const {
  std::vector<std::pair<Monomial, PolyScalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

PbwEngine::PbwEngine(Context ctx, bool vacuum) : ctx_(std::move(ctx)), vacuum_(vacuum) {}

bool PbwEngine::trivially_ordered(Mode x, const Monomial& m) const {
  if (vacuum_ && x.s() >= 0) return false;
  if (m.empty()) return true;
  Mode y = m[0];
  return x < y || (x == y && !x.parity());
}

void PbwEngine::left_mul_into(Mode x, const Monomial& m, const PolyScalar& c, PbwElement& out) {
  if (c.is_zero()) return;
  if (trivially_ordered(x, m)) {
    out.add(m.prepend(x), c);
    return;
  }
  if (vacuum_ && x.s() >= 0 && m.empty()) return;
  out.add_scaled(cached(x, m), c);
}

PbwElement PbwEngine::left_mul(Mode x, const Monomial& m) {
  PbwElement r;
  left_mul_into(x, m, PolyScalar(1), r);
  return r;
}

const PbwElement& PbwEngine::cached(Mode x, const Monomial& m) {
  Key k{x, m};
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  PbwElement r = compute(x, m);
  return cache_.emplace(std::move(k), std::move(r)).first->second;
}

// x * (y rest) = (-1)^{p(x)p(y)} y (x rest) + [x, y] rest, and x x = [x, x]/2
// for odd x.
PbwElement PbwEngine::compute(Mode x, const Monomial& m) {
  PbwElement res;
  Mode y = m[0];
  Monomial rest = m.tail();
  LinComb br;
  ctx_.bracket(x, y, br);
  if (x == y) {
    mpq_class half(1, 2);
    for (const auto& [z, cz] : br.terms) left_mul_into(z, rest, cz * PolyScalar(half), res);
    if (!br.scalar.is_zero()) res.add(rest, br.scalar * PolyScalar(half));
    return res;
  }
  const PolyScalar sign((x.parity() & y.parity()) ? -1 : 1);
  if (trivially_ordered(x, rest)) {
    left_mul_into(y, rest.prepend(x), sign, res);
  } else if (!(vacuum_ && x.s() >= 0 && rest.empty())) {
    const PbwElement& inner = cached(x, rest);
    for (const auto& [mono, c] : inner.terms()) left_mul_into(y, mono, c * sign, res);
  }
  for (const auto& [z, cz] : br.terms) left_mul_into(z, rest, cz, res);
  if (!br.scalar.is_zero()) res.add(rest, br.scalar);
  return res;
}

PbwElement PbwEngine::apply(Mode x, const PbwElement& v) {
  PbwElement r;
  for (const auto& [m, c] : v.terms()) left_mul_into(x, m, c, r);
  return r;
}

PbwElement PbwEngine::normal_form(const std::vector<Mode>& word, const PolyScalar& coeff) {
  PbwElement cur = PbwElement::monomial(Monomial{}, coeff);
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

PbwElement PbwEngine::mul(const PbwElement& x, const PbwElement& y) {
  PbwElement r;
  for (const auto& [mx, cx] : x.terms()) {
    PbwElement cur = y.scaled(cx);
    for (int i = mx.size() - 1; i >= 0; --i) cur = apply(mx[i], cur);
    r += cur;
  }
  return r;
}

int PbwEngine::parity(const PbwElement& x) {
  int p = -1;
  for (const auto& [m, c] : x.terms()) {
    int q = m.parity();
    if (p == -1) p = q;
    else if (p != q) return -1;
  }
  return p < 0 ? 0 : p;
}

PbwElement PbwEngine::bracket(const PbwElement& x, const PbwElement& y) {
  int px = parity(x), py = parity(y);
  if (px < 0 || py < 0) throw std::invalid_argument("bracket: inhomogeneous input");
  PbwElement r = mul(x, y);
  PbwElement yx = mul(y, x);
  r.add_scaled(yx, mpq_class((px & py) ? 1 : -1));
  return r;
}

PbwElement PbwEngine::anticommutator(const PbwElement& x, const PbwElement& y) {
  PbwElement r = mul(x, y);
  r += mul(y, x);
  return r;
}

std::string PbwEngine::str(const Monomial& m) const {
  if (m.empty()) return vacuum_ ? "|0>" : "1";
  std::string s;
  for (Mode x : m) {
    if (!s.empty()) s += " ";
    s += ctx_.name(x);
  }
  return s;
}

std::string PbwEngine::str(const PbwElement& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : v.sorted()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + str(m);
  }
  return s;
}

}  // namespace syv
