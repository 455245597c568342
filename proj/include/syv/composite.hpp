#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syv/maps.hpp"
#include "syv/walg.hpp"

namespace syv {

// The generalized edge contractions. Level-0 generators go to currents by
// the label map below; X+_{1,1} goes to one level-1 generator plus series.
struct PsiGen {
  int kind = 1;  // 1 or 2
  int m1 = 0, n1 = 0, m2 = 0, n2 = 0;
  int src_m = 0, src_n = 0, tgt_m = 0, tgt_n = 0;
  // Source eps = target eps + eps_shift * hbar.
  int eps_shift = 0;
  // The contracted part has rank m+n >= 5 (not needed by any formula).
  bool rank_bound_met = true;

  int map_label(int i) const;
  // X+-_{node,0} (source cyclic node) as a target current on `tag`.
  ExprPtr x0(bool plus, int node, const AffineGl& tgt, int tag) const;
  // Target node of the level-1 generator in the image of X+_{1,1}.
  int x11_node() const;
  ExprPtr x11_series(const AffineGl& tgt, int tag) const;
};

// Psi_1^{m1|n1, m1+m2|n1+n2}: needs m1, n1 >= 2 and m2, n2 >= 0.
PsiGen psi1_gen(int m1, int n1, int m2, int n2);
// Psi_2^{m2|n2, m1+m2|n1+n2}: needs m2, n2 >= 2 and m1, n1 >= 0.
PsiGen psi2_gen(int m1, int n1, int m2, int n2);

// An element of a tensor product of completed affine super Yangians that is
// linear in level-1 generators: sum of coef * X+_{node,1} on a factor plus
// current modes (tag = factor, positions in that factor's gl).
struct TensorElement {
  struct Level1 {
    int factor, node;
    PolyScalar coef;
  };
  std::vector<std::pair<int, int>> dims;
  std::vector<Level1> level1;
  ExprPtr currents = Expr::zero();

  Context context() const;
};

TensorElement psi_image(const PsiGen& psi, Gen g, int node);
// Applies psi to one factor; only X+_{1,1} has a displayed level-1 image.
TensorElement apply_psi(const TensorElement& x, int factor, const PsiGen& psi);
// Delta on one factor; the right output is inserted as factor + 1.
TensorElement apply_delta(const TensorElement& x, int factor);

struct CompositeTrace {
  TensorElement value;
  // One line per stage, with the eps bookkeeping.
  std::vector<std::string> stages;
  bool eps_consistent = true;
  bool rank_bounds_met = true;
};

// Delta^s applied to X+-_{node,0} or X+_{1,1}: Psi_1-gen into block s, then
// for a = s-1 .. 1 Delta on the leftmost factor and Psi_2-gen on its left
// output. Factor t-1 ends up as block t. printed_transposed swaps the even
// and odd sizes of each Psi_2-gen (the transposed superscripts); the sizes
// then no longer match the blocks.
CompositeTrace delta_s(const PartitionData& part, int s, Gen g, int node, int r, bool printed_transposed = false);

// The tensor element evaluated with ev on every factor (parameters a[t-1]).
ExprPtr evaluate(const TensorElement& x, const BlockSide& side, const std::vector<PolyScalar>& a);

struct PhiVariants {
  // Printed Phi(X-_{i,0}) table without the (-1)^{p(i)} signs.
  bool printed_sign = false;
};

// Phi on X+-_{i,0} and X+_{1,1}, rendered through mu~ on the block side.
// The assignment carries eps_s (or its body variant).
GeneratorAssignment phi_assignment(WAlgebra& w, BlockSide& side, int s, const PhiVariants& var = {},
                                   bool eps_body_variant = false);
// Adds X+_{j,1} = (1/a_{j-1,j}) [H~_{j-1,1}, X+_{j,0}] for j >= 2, then the
// remaining generators as in complete_by_relation.
void complete_from_x11(GeneratorAssignment& a);

// The sum of the displayed expansions (eval) + (B) + (C) + (D) of the
// composite applied to X+_{1,1}.
ExprPtr expanded_lhs(const BlockSide& side, int s, const std::vector<PolyScalar>& a);

struct MainTheoremOptions {
  int degree = 2;
  bool eps_body_variant = false;
  PhiVariants phi;
  // z-levels of the blocks (default 1 each).
  std::optional<std::vector<PolyScalar>> z_levels;
  // 0 = full basis; otherwise every k-th basis vector up to this many.
  size_t sample = 0;
  // Also run the relation suite on the completed Phi at this degree (-1: skip).
  int relation_degree = 1;
  // Block levels c_t (default alpha_t).
  std::optional<std::vector<PolyScalar>> c_levels;
};

struct MainTheoremCheck {
  std::string label;
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

struct MainTheoremReport {
  std::vector<MainTheoremCheck> checks;
  std::vector<std::string> notes;
  size_t basis_size = 0;
  bool pass() const;
  const MainTheoremCheck* first_failure() const;
};

MainTheoremReport check_main_theorem(const PartitionData& part, int s, const MainTheoremOptions& opt = {});

}  // namespace syv
