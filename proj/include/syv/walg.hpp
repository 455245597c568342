#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "syv/operators.hpp"

namespace syv {

// States of V^k(b) and V^k(a) as negative-mode PBW elements; x[-n] is the
// mode with t-exponent -n.
using VertexState = PbwElement;

// alpha_s, gamma_a, eps_s and the evaluation shifts x_a for a partition.
PolyScalar alpha_const(const PartitionData& part, int s);
PolyScalar gamma_const(const PartitionData& part, int a);
// eps_s = alpha_s * hbar. With body_variant, hbar (k + N - u_s + q_s).
PolyScalar eps_const(const PartitionData& part, int s, bool body_variant = false);
PolyScalar x_const(const PartitionData& part, int s, int a);

struct WConstants {
  PolyScalar alpha, eps;
  std::vector<PolyScalar> gamma, x;  // indexed by a = 1..s (slot 0 unused)
};
WConstants constants(const PartitionData& part, int s, bool body_variant = false);

// V^k(a) with symbolic k on tag 0.
class WAlgebra {
 public:
  explicit WAlgebra(PartitionData part);

  const PartitionData& partition() const { return alg_->partition(); }
  const AlgebraA& algebra() const { return *alg_; }
  PbwEngine& engine() { return eng_; }

  VertexState e(int i, int j, int n = 1);
  VertexState psi(int i, int j, int n = 1);
  VertexState product(const std::vector<Mode>& word, const PolyScalar& c = PolyScalar(1));

  // The derivation with x[-n] -> n x[-n-1].
  VertexState translate(const VertexState& v);
  // d0 on a psi-free state; throws IndexError if a psi mode occurs.
  VertexState d0(const VertexState& v);
  VertexState d0_mode(Mode x);
  // The same differential as the zero mode of a field: x[-n] w is sent to
  // (d0 x[-1])_{(-n)} w +- x[-n] d0(w), with the normally ordered modes of
  // the quadratic terms of d0 x[-1]. Used as a cross-check; it is
  // automatically compatible with the PBW relations, the Leibniz form is not.
  VertexState d0_field(const VertexState& v);
  // d0(x_(j) y) - (d0 x)_(j) y -+ x_(j) d0(y) for generators x, y and j >= 0.
  // Zero for all j iff d0 is compatible with the bracket of x and y.
  VertexState d0_obstruction(Mode x, Mode y, int j);

  std::string str(const VertexState& v) { return eng_.str(v); }
  static int weight(const Monomial& m) { return m.degree(); }

 private:
  VertexState d0_generator(int i, int j);
  VertexState field_mode(const VertexState& st, int n, const VertexState& v);

  std::shared_ptr<const AlgebraA> alg_;
  PbwEngine eng_;
  std::map<uint64_t, VertexState> d0_cache_;
};

// Throws if a bracket of two negative modes of `a` carries a central term.
void assert_negative_modes_central_free(const AlgebraA& a);

// One quadratic term +-e_{x,j}[-1] e_{i,v}[-1] of W^(2)_{a,b}; sign is the
// sign of its sum (+1 for the first two, -1 for the last two), before the
// parity factor.
struct W2Term {
  int x, j, i, v, sign;
};
std::vector<W2Term> w2_quadratic_terms(const PartitionData& part, int s, int a, int b);

// W^(1)_{a,b}, W^(2)_{a,b} for rows a, b in new_rows(s).
VertexState build_W1(WAlgebra& w, int s, int a, int b);
VertexState build_W2(WAlgebra& w, int s, int a, int b);

// Tensor product of the block affine algebras gl(u_t|q_t), t = 1..s, on
// tags 0..s-1.
class BlockSide {
 public:
  // levels_c[t-1], levels_z[t-1] are the two level parameters of block t.
  BlockSide(PartitionData part, int s, std::vector<PolyScalar> levels_c, std::vector<PolyScalar> levels_z);
  // Default levels: c_t = alpha_t, z_t = 1.
  BlockSide(PartitionData part, int s);

  const PartitionData& partition() const { return part_; }
  int factors() const { return s_; }
  const Context& context() const { return ctx_; }
  const AffineGl& block(int t) const { return *blocks_.at(static_cast<size_t>(t - 1)); }
  std::shared_ptr<const AffineGl> block_ptr(int t) const { return blocks_.at(static_cast<size_t>(t - 1)); }
  PbwEngine& engine() { return *eng_; }

  // Row label -> label of block t (throws if the row is absent there).
  int local(int row, int t) const;
  int row_of_local(int label, int t) const;
  // E^{(t)}_{x,y} t^n with x, y row labels.
  Mode E(int t, int x, int y, int n) const;

 private:
  PartitionData part_;
  int s_;
  std::vector<std::shared_ptr<const AffineGl>> blocks_;
  Context ctx_;
  std::shared_ptr<PbwEngine> eng_;
};

// Projection of a state of V^k(b) (columns <= s only) onto the block
// currents: e_{i,j}[-n] with col(i) = col(j) = t becomes E^{(t)}_{row(i),row(j)} t^{-n};
// monomials with any off-diagonal factor are dropped.
VertexState miura(const VertexState& v, BlockSide& side);

// The displayed Miura images, enumerated directly on rows and columns.
VertexState mu_W1_display(BlockSide& side, int s, int a, int b);
VertexState mu_W2_display(BlockSide& side, int s, int a, int b);

// The element v t^power of the enveloping algebra, for states of PBW
// length <= 2 whose quadratic monomials only use [-1] modes.
ExprPtr mode_of(const VertexState& v, int power);

// The seven-group expansion of mu~(W^(2)_{A,A+1} t), A = u_1 - u_s + 1.
ExprPtr w_gen_expansion(BlockSide& side, int s);

// mu~(W^(1)_{a,b} t^n) as a sum of block currents.
ExprPtr mu_W1_mode(const BlockSide& side, int s, int a, int b, int n);

}  // namespace syv
