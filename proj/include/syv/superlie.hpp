#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syv/scalar.hpp"
#include "syv/superindex.hpp"

namespace syv {

enum class Kind : uint8_t { E = 0, e = 1, psi = 2 };

// A basis mode x t^s packed into one word. Field order (most significant
// first): tag, s, kind, i, j; the parity bit sits at the bottom, so integer
// comparison is the PBW monomial order. i and j are positions (1-based) in
// the index set of the algebra attached to the tag.
class Mode {
 public:
  Mode() = default;
  static Mode make(int tag, Kind kind, int i, int j, int s, int parity);

  uint64_t key() const { return key_; }
  int tag() const { return static_cast<int>(key_ >> 56); }
  int s() const { return static_cast<int>((key_ >> 40) & 0xffff) - kSOffset; }
  Kind kind() const { return static_cast<Kind>((key_ >> 36) & 0xf); }
  int i() const { return static_cast<int>((key_ >> 24) & 0xfff); }
  int j() const { return static_cast<int>((key_ >> 12) & 0xfff); }
  int parity() const { return static_cast<int>(key_ & 1); }

  Mode with_s(int s) const { return make(tag(), kind(), i(), j(), s, parity()); }
  Mode with_tag(int t) const { return make(t, kind(), i(), j(), s(), parity()); }

  friend bool operator==(Mode a, Mode b) { return a.key_ == b.key_; }
  friend bool operator!=(Mode a, Mode b) { return a.key_ != b.key_; }
  friend bool operator<(Mode a, Mode b) { return a.key_ < b.key_; }

 private:
  static constexpr int kSOffset = 1 << 15;
  uint64_t key_ = 0;
};

// Finite linear combination of modes plus a central scalar.
struct LinComb {
  std::vector<std::pair<Mode, PolyScalar>> terms;
  PolyScalar scalar;

  void add(Mode m, const PolyScalar& c);
  void canonicalize();
  bool is_zero() const { return terms.empty() && scalar.is_zero(); }
  friend bool operator==(LinComb a, LinComb b);
};

class ModeAlgebra {
 public:
  virtual ~ModeAlgebra() = default;
  // [x, y] for two modes of this algebra (same tag), appended to out.
  virtual void bracket(Mode x, Mode y, LinComb& out) const = 0;
  // All basis modes with exponent s.
  virtual std::vector<Mode> modes_at(int s, int tag) const = 0;
  virtual std::string name(Mode x) const = 0;
  virtual const SuperIndexSet& indices() const = 0;
};

// Affinized gl(m|n) with central elements c and z set to the given scalars.
class AffineGl : public ModeAlgebra {
 public:
  AffineGl(int m, int n, PolyScalar level_c, PolyScalar level_z);

  void bracket(Mode x, Mode y, LinComb& out) const override;
  std::vector<Mode> modes_at(int s, int tag) const override;
  std::string name(Mode x) const override;
  const SuperIndexSet& indices() const override { return idx_; }

  // E_{i,j} t^s with signed labels i, j.
  Mode E(int i, int j, int s = 0, int tag = 0) const;
  // Same with positions (cyclic labels m+n etc. as in the presentation).
  Mode E_pos(int pi, int pj, int s = 0, int tag = 0) const;
  const PolyScalar& level_c() const { return c_; }

 private:
  SuperIndexSet idx_;
  PolyScalar c_, z_;
};

// The superalgebra a = b + span{psi} for a column partition, affinized
// with the inner product of level k; b is the psi-free part.
class AlgebraA : public ModeAlgebra {
 public:
  AlgebraA(PartitionData part, PolyScalar k);

  void bracket(Mode x, Mode y, LinComb& out) const override;
  std::vector<Mode> modes_at(int s, int tag) const override;
  std::string name(Mode x) const override;
  const SuperIndexSet& indices() const override { return idx_; }
  const PartitionData& partition() const { return part_; }

  bool in_b(int i, int j) const;
  bool in_psi(int i, int j) const;
  // Signed labels; throws on support violations.
  Mode e(int i, int j, int s = -1, int tag = 0) const;
  Mode psi(int i, int j, int s = -1, int tag = 0) const;
  int label(int pos) const { return idx_.label_at(pos); }
  PolyScalar kappa(Mode x, Mode y) const;

 private:
  PartitionData part_;
  SuperIndexSet idx_;
  PolyScalar k_;
};

// Per-tag algebras; modes of distinct tags supercommute.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<std::shared_ptr<const ModeAlgebra>> algebras) : algs_(std::move(algebras)) {}
  void add(std::shared_ptr<const ModeAlgebra> a) { algs_.push_back(std::move(a)); }
  int num_tags() const { return static_cast<int>(algs_.size()); }
  const ModeAlgebra& algebra(int tag) const { return *algs_.at(static_cast<size_t>(tag)); }
  std::shared_ptr<const ModeAlgebra> algebra_ptr(int tag) const { return algs_.at(static_cast<size_t>(tag)); }
  void bracket(Mode x, Mode y, LinComb& out) const;
  std::string name(Mode x) const;

 private:
  std::vector<std::shared_ptr<const ModeAlgebra>> algs_;
};

LinComb bracket_gl(const AffineGl& g, Mode x, Mode y);
LinComb bracket_affine(const AffineGl& g, Mode x, Mode y);
LinComb bracket_a(const AlgebraA& a, Mode x, Mode y);

// Images of the Chevalley generators h_i, x+_i, x-_i (i cyclic, 0..m+n-1)
// in the affinization of gl(m|n).
struct PresentationImages {
  std::vector<LinComb> h, xp, xm;
};
PresentationImages presentation_images(const AffineGl& g, int tag = 0);

std::vector<int> supertrace_coeffs(int m, int n);

// Exhaustive axiom checks over the given modes (all of one tag). Return a
// description of the first violation.
std::optional<std::string> check_super_skew(const ModeAlgebra& g, const std::vector<Mode>& modes);
std::optional<std::string> check_super_jacobi(const ModeAlgebra& g, const std::vector<Mode>& modes);

}  // namespace syv
