#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace syv {

// Symbol order is fixed: h (hbar), c (level, eps = c*h), k, a.
enum class Sym : int { h = 0, c = 1, k = 2, a = 3 };
constexpr int kNumSyms = 4;

using Exponents = std::array<uint8_t, kNumSyms>;

class PolyScalar {
 public:
  using Key = uint32_t;
  using Term = std::pair<Key, mpq_class>;

  PolyScalar() = default;
  PolyScalar(long v);  // NOLINT(google-explicit-constructor)
  explicit PolyScalar(const mpq_class& v);

  static PolyScalar sym(Sym s, int power = 1);
  static PolyScalar rational(long num, long den);
  static PolyScalar h() { return sym(Sym::h); }
  static PolyScalar c() { return sym(Sym::c); }
  static PolyScalar k() { return sym(Sym::k); }
  static PolyScalar a() { return sym(Sym::a); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term; zero if absent.
  mpq_class constant() const;
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  int total_degree() const;

  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  PolyScalar& operator*=(const PolyScalar& o);
  PolyScalar& operator*=(const mpq_class& q);
  // this += p * q, the hot operation of the straightening engine
  void add_mul(const PolyScalar& p, const PolyScalar& q);
  void add_scaled(const PolyScalar& p, const mpq_class& q);

  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
  friend PolyScalar operator-(const PolyScalar& a);
  friend bool operator==(const PolyScalar& a, const PolyScalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyScalar& a, const PolyScalar& b) { return !(a == b); }

  PolyScalar pow(unsigned e) const;

  // Simultaneous substitution of symbols by polynomials.
  PolyScalar substitute(const std::map<Sym, PolyScalar>& bindings) const;

  std::string str() const;
  size_t hash() const;

  static Key pack(const Exponents& e);
  static Exponents unpack(Key k);

 private:
  void normalize();
  std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

PolyScalar poly_add(const PolyScalar& p, const PolyScalar& q);
PolyScalar poly_mul(const PolyScalar& p, const PolyScalar& q);
PolyScalar poly_neg(const PolyScalar& p);
PolyScalar substitute(const PolyScalar& p, const std::map<Sym, PolyScalar>& bindings);

std::string to_string(const mpq_class& q);

}  // namespace syv
