#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syv/scalar.hpp"
#include "syv/superlie.hpp"

namespace syv {

// Ordered product of modes with fixed inline capacity.
class Monomial {
 public:
  static constexpr int kCapacity = 14;

  Monomial() = default;
  explicit Monomial(const std::vector<Mode>& modes);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  Mode operator[](int i) const { return m_[static_cast<size_t>(i)]; }
  const Mode* begin() const { return m_.data(); }
  const Mode* end() const { return m_.data() + n_; }

  void push_back(Mode x);
  Monomial tail() const;                 // drop the first factor
  Monomial prepend(Mode x) const;
  Monomial concat(const Monomial& o) const;
  int parity() const;
  int degree() const;                    // minus the sum of t-exponents
  int degree_of_tag(int tag) const;
  bool is_normal() const;                // non-decreasing, no repeated odd mode
  size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  uint8_t n_ = 0;
  std::array<Mode, kCapacity> m_{};
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

// PolyScalar-linear combination of normal-ordered monomials.
class PbwElement {
 public:
  using Map = std::unordered_map<Monomial, PolyScalar, MonomialHash>;

  PbwElement() = default;
  static PbwElement one() { return monomial(Monomial{}, PolyScalar(1)); }
  static PbwElement monomial(const Monomial& m, const PolyScalar& c);

  void add(const Monomial& m, const PolyScalar& c);
  void add_scaled(const PbwElement& o, const PolyScalar& c);
  void add_scaled(const PbwElement& o, const mpq_class& c);
  PbwElement& operator+=(const PbwElement& o) {
    add_scaled(o, mpq_class(1));
    return *this;
  }
  PbwElement& operator-=(const PbwElement& o) {
    add_scaled(o, mpq_class(-1));
    return *this;
  }
  PbwElement scaled(const PolyScalar& c) const;

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  PolyScalar coeff(const Monomial& m) const;
  int max_degree() const;
  // Terms sorted by monomial for deterministic output.
  std::vector<std::pair<Monomial, PolyScalar>> sorted() const;

  friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PbwElement& a, const PbwElement& b) { return !(a == b); }

 private:
  Map terms_;
};

// Straightening engine over a Context. With vacuum = true it acts on the
// vacuum module instead: a monomial whose rightmost mode has t-exponent
// >= 0 is zero, so stored monomials only contain negative modes.
class PbwEngine {
 public:
  PbwEngine(Context ctx, bool vacuum);

  const Context& context() const { return ctx_; }
  bool vacuum() const { return vacuum_; }

  // out += c * (x * m) with m normal-ordered.
  void left_mul_into(Mode x, const Monomial& m, const PolyScalar& c, PbwElement& out);
  PbwElement left_mul(Mode x, const Monomial& m);
  PbwElement apply(Mode x, const PbwElement& v);
  PbwElement normal_form(const std::vector<Mode>& word, const PolyScalar& coeff);
  PbwElement mul(const PbwElement& x, const PbwElement& y);
  // Super commutator; x and y must be homogeneous.
  PbwElement bracket(const PbwElement& x, const PbwElement& y);
  PbwElement anticommutator(const PbwElement& x, const PbwElement& y);
  static int parity(const PbwElement& x);  // -1 if mixed, 0/1 otherwise

  std::string str(const PbwElement& v) const;
  std::string str(const Monomial& m) const;
  size_t cache_size() const { return cache_.size(); }
  void clear_cache() { cache_.clear(); }

 private:
  struct Key {
    Mode x;
    Monomial m;
    friend bool operator==(const Key& a, const Key& b) { return a.x == b.x && a.m == b.m; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const { return k.m.hash() * 0x9e3779b97f4a7c15ULL ^ k.x.key(); }
  };

  bool trivially_ordered(Mode x, const Monomial& m) const;
  const PbwElement& cached(Mode x, const Monomial& m);
  PbwElement compute(Mode x, const Monomial& m);

  Context ctx_;
  bool vacuum_;
  std::unordered_map<Key, PbwElement, KeyHash> cache_;
};

}  // namespace syv
