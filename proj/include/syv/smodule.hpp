#pragma once

#include <vector>

#include "syv/pbw.hpp"

namespace syv {

using ModuleVector = PbwElement;

// Vacuum module over the algebras of a Context (one tensor factor per tag).
class VacuumModule {
 public:
  explicit VacuumModule(Context ctx) : eng_(std::move(ctx), true) {}

  PbwEngine& engine() { return eng_; }
  const Context& context() const { return eng_.context(); }

  static ModuleVector vacuum() { return PbwElement::one(); }
  ModuleVector apply_mode(Mode x, const ModuleVector& v) { return eng_.apply(x, v); }

  // Normal-ordered negative-mode monomials of total degree d. If
  // per_tag_max is non-empty, the degree carried by tag t is at most
  // per_tag_max[t].
  std::vector<Monomial> basis(int d, const std::vector<int>& per_tag_max = {}) const;
  std::vector<Monomial> basis_upto(int D, const std::vector<int>& per_tag_max = {}) const;

 private:
  PbwEngine eng_;
};

}  // namespace syv
