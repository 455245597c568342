#pragma once

#include <string>
#include <vector>

#include "syv/yangian.hpp"

namespace syv {

// Printed readings that the checks adjudicate; all false is the adopted one.
struct MapVariants {
  // Extra (-1)^{p(i)} in front of the bilinear series of ev(X+_{i,1}).
  bool ev_printed_sign = false;
  // Psi_1(H_{i,1}), -n+1 <= i <= -1: printed E_{i-1,m} instead of E_{i-1,m+1}.
  bool psi1_printed_index = false;
  // Psi_4(H_{0,1}): printed E_{m+n+1,n} instead of E_{m+n+1,m+n}.
  bool psi4_printed_index = false;
  // Psi_2(X+_{-n,1}): printed +hbar in front of the series instead of -hbar.
  bool psi2_printed_sign = false;
};

ExprPtr lincomb_expr(const LinComb& lc);

// The defining relations of sl^(m|n) on the images of h_i, x+-_i (family
// "presentation"): [h,h], [x+,x-], [h,x], Serre, odd squares, odd quartics.
std::vector<RelationSchema> presentation_relations(const AffineGl& g, int tag = 0);

// F(X-_{i,1}) = sigma_i * omega~(F(X+_{i,1})) with sigma_i = (-1)^{p(i) + [i = 0]}.
int omega_sigma(const SuperIndexSet& src, int i);

// Fills the missing X-_{i,1} from X+_{i,1} through sigma_i omega~, then the
// missing H_{i,r}.
void complete_by_omega(GeneratorAssignment& A, const Context& ctx);

// Completes an assignment holding X+-_{j,0} and X+_{i,1} (i != 0): X+_{0,1}
// from H~_{1,1}, each X-_{j,1} from H~_{i,1} at a pivot node i, all H by brackets.
void complete_by_relation(GeneratorAssignment& A);

// Evaluation map into the affine gl(m|n) of the given tag (level c of that
// algebra, eps = c hbar). H_{i,0} are the presentation images; X+_{0,1} is
// fixed by [H~_{1,1}, X+_{0,0}] (family "2.5", i = 1, j = 0).
GeneratorAssignment ev_assignment(const Context& ctx, int tag, const PolyScalar& a, const MapVariants& var = {});

// B_i of the coproduct (1 <= i <= m+n-1) with left factor on tag tl and
// right factor on tag tr; both tags carry the same affine gl.
ExprPtr build_B(const Context& ctx, int i, int tl, int tr);

// (ev_0 (x) ev_1) o Delta on tags 0 and 1, evaluation parameters a[0], a[1].
// X+_{0,1} and X-_{j,1} are not in the domain of the displayed coproduct;
// they are fixed through the [H~_{i,1}, X+-_{j,0}] relations.
GeneratorAssignment coproduct_assignment(const Context& ctx, const std::vector<PolyScalar>& a,
                                         const MapVariants& var = {});

// (Delta (x) id) Delta = (id (x) Delta) Delta on X+-_{j,0} and X+_{i,1}, after
// evaluation on tags 0, 1, 2.
std::vector<RelationSchema> coassoc_relations(const Context& ctx, const std::vector<PolyScalar>& a,
                                              const MapVariants& var = {});

// An edge contraction composed with the evaluation map of its target.
struct MapSpec {
  std::string name;
  int src_m = 0, src_n = 0;
  int tgt_m = 0, tgt_n = 0;
  GeneratorAssignment assignment;
  // The displayed H_{i,1} table against the derived [X+_{i,1}, X-_{i,0}],
  // and sigma_i omega~(X+_{i,0}) = X-_{i,0}.
  std::vector<RelationSchema> consistency;
};

// k = 1..4. ctx must carry the target affine gl ((m+1|n) for k = 1, 3 and
// (m|n+1) for k = 2, 4) at tag `tag`; a is the target evaluation parameter.
MapSpec psi_map(int k, const Context& ctx, int tag, const PolyScalar& a, const MapVariants& var = {});

}  // namespace syv
