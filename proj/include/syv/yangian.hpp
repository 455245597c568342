#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "syv/operators.hpp"

namespace syv {

// Cartan matrix entry for cyclic nodes i, j of sl(m|n)^.
int cartan(int m, int n, int i, int j);

enum class Gen { Xp, Xm, H };

struct GenLabel {
  Gen g;
  int i;  // cyclic node 0..m+n-1
  int r;  // 0 or 1
  friend bool operator<(const GenLabel& a, const GenLabel& b) {
    return std::tie(a.g, a.i, a.r) < std::tie(b.g, b.i, b.r);
  }
  std::string str() const;
};

// Images of the Yangian generators X+-_{i,r}, H_{i,r} (r = 0, 1) as operator
// expressions, plus the parameters (m, n, eps).
class GeneratorAssignment {
 public:
  GeneratorAssignment(int m, int n, PolyScalar eps);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + n_; }
  const PolyScalar& eps() const { return eps_; }
  const SuperIndexSet& indices() const { return idx_; }

  int node(int i) const { return ((i % size()) + size()) % size(); }
  bool odd(int i) const;
  // Parity of the node label as used by omega: p(i) with node 0 read as m+n.
  int p(int i) const { return idx_.parity_cyclic(node(i)); }

  // Stores a memoized copy.
  void set(Gen g, int i, int r, const ExprPtr& e);
  bool has(Gen g, int i, int r) const;
  ExprPtr get(Gen g, int i, int r) const;
  ExprPtr xp(int i, int r) const { return get(Gen::Xp, i, r); }
  ExprPtr xm(int i, int r) const { return get(Gen::Xm, i, r); }
  ExprPtr h(int i, int r) const { return get(Gen::H, i, r); }
  // H~_{i,1} = H_{i,1} - (hbar/2) H_{i,0}^2, built once per node.
  ExprPtr htilde(int i) const;

  // Fills every missing H_{i,r} with [X+_{i,r}, X-_{i,0}].
  void derive_h();
  bool complete() const;
  // Parity invariant: X+-_{i,r} odd iff p(i) != p(i+1), H even.
  std::optional<std::string> check_parities() const;
  const std::map<GenLabel, ExprPtr>& images() const { return images_; }

 private:
  int m_, n_;
  PolyScalar eps_;
  SuperIndexSet idx_;
  std::map<GenLabel, ExprPtr> images_;
  mutable std::map<int, ExprPtr> htilde_;
};

struct SuiteOptions {
  // Use the printed quadratic coefficient eps + (m-n) hbar^2 / 2 in the
  // boundary relations instead of eps + (m-n) hbar / 2.
  bool printed_boundary = false;
  bool include_gather1 = true;
  // Restrict to the listed families (e.g. {"2.6", "2.7"}); empty = all.
  std::vector<std::string> families;
};

PolyScalar boundary_coefficient(int m, int n, const PolyScalar& eps, bool printed);

struct RelationSchema {
  std::string family;  // "2.1" ... "2.12", "gather1"
  std::string label;
  ExprPtr expr;        // left side minus right side
};

std::vector<RelationSchema> relation_suite(const GeneratorAssignment& a, const SuiteOptions& opt = {});

struct RelationResult {
  std::string family, label;
  bool pass = true;
  std::string note;
  std::optional<Counterexample> counterexample;
};

struct SuiteReport {
  std::vector<RelationResult> results;
  size_t basis_size = 0;
  bool pass() const;
  size_t failures() const;
  const RelationResult* first_failure() const;
};

// Evaluates every relation on every basis vector.
SuiteReport check_relations(const std::vector<RelationSchema>& rels, Evaluator& ev,
                            const std::vector<Monomial>& basis);
SuiteReport check_assignment(const GeneratorAssignment& a, Evaluator& ev, const std::vector<Monomial>& basis,
                             const SuiteOptions& opt = {});

// X -> omega~(A(omega(X))): the assignment conjugated by the Yangian omega
// and the current-algebra omega~.
GeneratorAssignment omega_assignment(const GeneratorAssignment& a, const Context& ctx);

// Series on an ambient affine gl; i, b are positions.
ExprPtr build_A(const AffineGl& g, int i, int tag = 0);
ExprPtr build_P(const AffineGl& g, int i, int b, int tag = 0);
ExprPtr build_Q(const AffineGl& g, int i, int b, int tag = 0);

// [A_i,P_j] - [A_j,P_i] + [P_i,P_j] (kind 1) or [A_i,Q_j] - [A_j,Q_i] - [Q_i,Q_j]
// (kind 2) for all i <= j distinct from b.
std::vector<RelationSchema> concl_relations(const AffineGl& g, int kind, int b, int tag = 0);

}  // namespace syv
