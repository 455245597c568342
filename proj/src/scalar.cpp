#include "syv/scalar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace syv {

namespace {

constexpr int kBits = 6;
constexpr uint32_t kMask = (1u << kBits) - 1;
const char* kSymNames[kNumSyms] = {"h", "c", "k", "a"};

}  // namespace

// Layout: [degree:8][h:6][c:6][k:6][a:6]; integer order is graded lex.
PolyScalar::Key PolyScalar::pack(const Exponents& e) {
  uint32_t deg = 0;
  uint32_t key = 0;
  for (int s = 0; s < kNumSyms; ++s) {
    if (e[s] > kMask) throw std::overflow_error("PolyScalar: exponent too large");
    deg += e[s];
    key = (key << kBits) | e[s];
  }
  return (deg << (kBits * kNumSyms)) | key;
}

Exponents PolyScalar::unpack(Key k) {
  Exponents e{};
  for (int s = kNumSyms - 1; s >= 0; --s) {
    e[s] = static_cast<uint8_t>(k & kMask);
    k >>= kBits;
  }
  return e;
}

PolyScalar::PolyScalar(long v) {
  if (v != 0) terms_.emplace_back(0u, mpq_class(v));
}

PolyScalar::PolyScalar(const mpq_class& v) {
  if (sgn(v) != 0) terms_.emplace_back(0u, v);
}

PolyScalar PolyScalar::sym(Sym s, int power) {
  Exponents e{};
  e[static_cast<int>(s)] = static_cast<uint8_t>(power);
  PolyScalar p;
  p.terms_.emplace_back(pack(e), mpq_class(1));
  return p;
}

PolyScalar PolyScalar::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return PolyScalar(q);
}

bool PolyScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

mpq_class PolyScalar::constant() const {
  if (!terms_.empty() && terms_[0].first == 0) return terms_[0].second;
  return mpq_class(0);
}

int PolyScalar::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.back().first >> (kBits * kNumSyms));
}

void PolyScalar::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  terms_ = std::move(out);
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      mpq_class s = terms_[i].second + o.terms_[j].second;
      if (sgn(s) != 0) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) { return *this += -o; }

PolyScalar operator-(const PolyScalar& a) {
  PolyScalar r = a;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
  PolyScalar r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.terms_.size() == 1 && b.terms_[0].first == 0) {
    r = a;
    r *= b.terms_[0].second;
    return r;
  }
  if (a.terms_.size() == 1 && a.terms_[0].first == 0) {
    r = b;
    r *= a.terms_[0].second;
    return r;
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    Exponents ex = PolyScalar::unpack(x.first);
    for (const auto& y : b.terms_) {
      Exponents ey = PolyScalar::unpack(y.first);
      Exponents ez{};
      for (int s = 0; s < kNumSyms; ++s) ez[s] = static_cast<uint8_t>(ex[s] + ey[s]);
      r.terms_.emplace_back(PolyScalar::pack(ez), x.second * y.second);
    }
  }
  r.normalize();
  return r;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& o) {
  *this = *this * o;
  return *this;
}

PolyScalar& PolyScalar::operator*=(const mpq_class& q) {
  if (sgn(q) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= q;
  return *this;
}

void PolyScalar::add_mul(const PolyScalar& p, const PolyScalar& q) {
  if (p.terms_.empty() || q.terms_.empty()) return;
  if (q.is_constant()) {
    add_scaled(p, q.terms_[0].second);
  } else if (p.is_constant()) {
    add_scaled(q, p.terms_[0].second);
  } else {
    *this += p * q;
  }
}

void PolyScalar::add_scaled(const PolyScalar& p, const mpq_class& q) {
  if (p.terms_.empty() || sgn(q) == 0) return;
  if (terms_.empty()) {
    terms_ = p.terms_;
    for (auto& t : terms_) t.second *= q;
    return;
  }
  if (terms_.size() == 1 && p.terms_.size() == 1 && terms_[0].first == p.terms_[0].first) {
    terms_[0].second += p.terms_[0].second * q;
    if (sgn(terms_[0].second) == 0) terms_.clear();
    return;
  }
  PolyScalar tmp = p;
  tmp *= q;
  *this += tmp;
}

PolyScalar PolyScalar::pow(unsigned e) const {
  PolyScalar r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

PolyScalar PolyScalar::substitute(const std::map<Sym, PolyScalar>& bindings) const {
  PolyScalar r;
  for (const auto& [key, coef] : terms_) {
    Exponents e = unpack(key);
    PolyScalar term(coef);
    Exponents kept{};
    for (int s = 0; s < kNumSyms; ++s) {
      auto it = bindings.find(static_cast<Sym>(s));
      if (it == bindings.end()) {
        kept[s] = e[s];
      } else if (e[s] > 0) {
        term *= it->second.pow(e[s]);
      }
    }
    PolyScalar mono;
    mono.terms_.emplace_back(pack(kept), mpq_class(1));
    r += term * mono;
  }
  return r;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string PolyScalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, coef] = *it;
    Exponents e = unpack(key);
    mpq_class mag = abs(coef);
    bool neg = sgn(coef) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (int s = 0; s < kNumSyms; ++s) {
      if (e[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kSymNames[s];
      if (e[s] > 1) mono += "^" + std::to_string(e[s]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

size_t PolyScalar::hash() const {
  size_t h = terms_.size();
  for (const auto& [key, coef] : terms_) {
    h = h * 1000003u ^ key;
    h = h * 31u ^ std::hash<std::string>{}(coef.get_str());
  }
  return h;
}

PolyScalar poly_add(const PolyScalar& p, const PolyScalar& q) { return p + q; }
PolyScalar poly_mul(const PolyScalar& p, const PolyScalar& q) { return p * q; }
PolyScalar poly_neg(const PolyScalar& p) { return -p; }
PolyScalar substitute(const PolyScalar& p, const std::map<Sym, PolyScalar>& bindings) {
  return p.substitute(bindings);
}

}  // namespace syv
