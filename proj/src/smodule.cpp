#include "syv/smodule.hpp"

#include <algorithm>
#include <functional>

namespace syv {

std::vector<Monomial> VacuumModule::basis(int d, const std::vector<int>& per_tag_max) const {
  std::vector<Mode> modes;
  const Context& ctx = context();
  for (int t = 0; t < ctx.num_tags(); ++t)
    for (int s = -d; s <= -1; ++s)
      for (Mode x : ctx.algebra(t).modes_at(s, t)) modes.push_back(x);
  std::sort(modes.begin(), modes.end());

  std::vector<Monomial> out;
  std::vector<int> tag_deg(static_cast<size_t>(ctx.num_tags()), 0);
  Monomial cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t k = start; k < modes.size(); ++k) {
      Mode x = modes[k];
      int w = -x.s();
      if (w > left) continue;
      size_t t = static_cast<size_t>(x.tag());
      if (!per_tag_max.empty() && tag_deg[t] + w > per_tag_max[t]) continue;
      tag_deg[t] += w;
      Monomial saved = cur;
      cur.push_back(x);
      rec(x.parity() ? k + 1 : k, left - w);
      cur = saved;
      tag_deg[t] -= w;
    }
  };
  rec(0, d);
  return out;
}

std::vector<Monomial> VacuumModule::basis_upto(int D, const std::vector<int>& per_tag_max) const {
  std::vector<Monomial> out;
  for (int d = 0; d <= D; ++d) {
    auto b = basis(d, per_tag_max);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

}  // namespace syv
