#include "syv/walg.hpp"

#include <algorithm>
#include <stdexcept>

namespace syv {

namespace {

int sgn(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

PolyScalar alpha_const(const PartitionData& part, int s) {
  return PolyScalar::k() + PolyScalar(part.M() - part.N() - part.u(s) + part.q(s));
}

PolyScalar gamma_const(const PartitionData& part, int a) {
  PolyScalar g;
  for (int s = a + 1; s <= part.l(); ++s) g += alpha_const(part, s);
  return g;
}

PolyScalar eps_const(const PartitionData& part, int s, bool body_variant) {
  if (body_variant) return PolyScalar::h() * (PolyScalar::k() + PolyScalar(part.N() - part.u(s) + part.q(s)));
  return PolyScalar::h() * alpha_const(part, s);
}

PolyScalar x_const(const PartitionData& part, int s, int a) {
  return gamma_const(part, a) + PolyScalar(part.q(a) - part.q(s)) - PolyScalar::rational(part.u(a) - part.u(s), 2);
}

WConstants constants(const PartitionData& part, int s, bool body_variant) {
  if (s < 1 || s > part.l()) throw IndexError("constants: s out of range");
  WConstants r;
  r.alpha = alpha_const(part, s);
  r.eps = eps_const(part, s, body_variant);
  r.gamma.resize(static_cast<size_t>(s) + 1);
  r.x.resize(static_cast<size_t>(s) + 1);
  for (int a = 1; a <= s; ++a) {
    r.gamma[static_cast<size_t>(a)] = gamma_const(part, a);
    r.x[static_cast<size_t>(a)] = x_const(part, s, a);
  }
  return r;
}

void assert_negative_modes_central_free(const AlgebraA& a) {
  std::vector<Mode> modes = a.modes_at(-1, 0);
  for (Mode x : a.modes_at(-2, 0)) modes.push_back(x);
  for (Mode x : modes)
    for (Mode y : modes) {
      LinComb out;
      a.bracket(x, y, out);
      if (!out.scalar.is_zero())
        throw std::logic_error("central term in [" + a.name(x) + ", " + a.name(y) + "]");
    }
}

WAlgebra::WAlgebra(PartitionData part)
    : alg_(std::make_shared<AlgebraA>(std::move(part), PolyScalar::k())),
      eng_(Context({alg_}), true) {
  assert_negative_modes_central_free(*alg_);
}

VertexState WAlgebra::e(int i, int j, int n) { return product({alg_->e(i, j, -n)}); }
VertexState WAlgebra::psi(int i, int j, int n) { return product({alg_->psi(i, j, -n)}); }

VertexState WAlgebra::product(const std::vector<Mode>& word, const PolyScalar& c) {
  return eng_.normal_form(word, c);
}

VertexState WAlgebra::translate(const VertexState& v) {
  VertexState out;
  for (const auto& [m, c] : v.sorted()) {
    for (int p = 0; p < m.size(); ++p) {
      std::vector<Mode> word(m.begin(), m.end());
      int n = -word[static_cast<size_t>(p)].s();
      word[static_cast<size_t>(p)] = word[static_cast<size_t>(p)].with_s(-n - 1);
      out += eng_.normal_form(word, c * PolyScalar(n));
    }
  }
  return out;
}

VertexState WAlgebra::d0_generator(int i, int j) {
  const PartitionData& P = partition();
  const AlgebraA& A = *alg_;
  auto pe = [&](int x, int y) { return P.parity(x) ^ P.parity(y); };
  int ci = P.col(i), cj = P.col(j);
  VertexState out;
  for (int r : P.labels()) {
    int cr = P.col(r);
    if (ci > cr && cr >= cj)
      out += product({A.e(r, j), A.psi(i, r)}, PolyScalar(sgn(pe(i, j) + pe(i, r) * pe(r, j))));
    if (cj < cr && cr <= ci)
      out += product({A.psi(r, j), A.e(i, r)}, PolyScalar(-sgn(pe(i, r) * pe(r, j))));
  }
  int pi = P.parity(i);
  if (ci > cj) out += product({A.psi(i, j, -2)}, alpha_const(P, ci) * PolyScalar(sgn(pi)));
  if (auto ih = P.hat(i)) out += product({A.psi(*ih, j)}, PolyScalar(sgn(pi)));
  if (auto jt = P.tilde(j)) out += product({A.psi(i, *jt)}, PolyScalar(-sgn(pi)));
  return out;
}

VertexState WAlgebra::d0_mode(Mode x) {
  if (x.kind() != Kind::e) throw IndexError("d0: input contains a psi mode");
  auto it = d0_cache_.find(x.key());
  if (it != d0_cache_.end()) return it->second;
  VertexState r;
  if (x.s() == -1) {
    r = d0_generator(alg_->label(x.i()), alg_->label(x.j()));
  } else {
    // d0(x[-n-1]) = d0(d x[-n]) / n = d(d0 x[-n]) / n
    int n = -x.s() - 1;
    r = translate(d0_mode(x.with_s(-n))).scaled(PolyScalar::rational(1, n));
  }
  d0_cache_.emplace(x.key(), r);
  return r;
}

VertexState WAlgebra::d0(const VertexState& v) {
  VertexState out;
  for (const auto& [m, c] : v.sorted()) {
    int sign = 1;
    for (int p = 0; p < m.size(); ++p) {
      const VertexState dx = d0_mode(m[p]);
      for (const auto& [w, cw] : dx.sorted()) {
        std::vector<Mode> word(m.begin(), m.begin() + p);
        word.insert(word.end(), w.begin(), w.end());
        word.insert(word.end(), m.begin() + p + 1, m.end());
        out += eng_.normal_form(word, c * cw * PolyScalar(sign));
      }
      sign *= sgn(m[p].parity());
    }
  }
  return out;
}

VertexState WAlgebra::field_mode(const VertexState& st, int n, const VertexState& v) {
  int deg = v.max_degree();
  VertexState out;
  for (const auto& [m, c] : st.sorted()) {
    if (m.size() == 1) {
      // (x[-1])_{(n)} = x t^n, (x[-2])_{(n)} = -n x t^{n-1}
      int k = -m[0].s();
      if (k == 1) out.add_scaled(eng_.apply(m[0].with_s(n), v), c);
      else if (k == 2) out.add_scaled(eng_.apply(m[0].with_s(n - 1), v), c * PolyScalar(-n));
      else throw std::logic_error("field_mode: unexpected mode depth");
      continue;
    }
    if (m.size() != 2) throw std::logic_error("field_mode: state of PBW length > 2");
    Mode a = m[0], b = m[1];
    int sg = sgn(a.parity() * b.parity());
    for (int i = 0; n + i <= deg; ++i) out.add_scaled(eng_.apply(a.with_s(-1 - i), eng_.apply(b.with_s(n + i), v)), c);
    for (int i = 0; i <= deg; ++i)
      out.add_scaled(eng_.apply(b.with_s(n - 1 - i), eng_.apply(a.with_s(i), v)), c * PolyScalar(sg));
  }
  return out;
}

VertexState WAlgebra::d0_field(const VertexState& v) {
  VertexState out;
  for (const auto& [m, c] : v.sorted()) {
    if (m.empty()) continue;
    Mode x = m[0];
    if (x.kind() != Kind::e) throw IndexError("d0: input contains a psi mode");
    const VertexState rest = PbwElement::monomial(m.tail(), PolyScalar(1));
    out.add_scaled(field_mode(d0_mode(x.with_s(-1)), x.s(), rest), c);
    out.add_scaled(eng_.apply(x, d0_field(rest)), c * PolyScalar(sgn(x.parity())));
  }
  return out;
}

VertexState WAlgebra::d0_obstruction(Mode x, Mode y, int j) {
  if (x.kind() != Kind::e || y.kind() != Kind::e) throw IndexError("d0_obstruction: e modes expected");
  const VertexState ys = product({y.with_s(-1)});
  VertexState out = d0_field(eng_.apply(x.with_s(j), ys));
  out -= field_mode(d0_mode(x.with_s(-1)), j, ys);
  out.add_scaled(eng_.apply(x.with_s(j), d0_field(ys)), mpq_class(-sgn(x.parity())));
  return out;
}

namespace {

void check_rows(const PartitionData& P, int s, int a, int b) {
  if (s < 1 || s > P.l()) throw IndexError("W generator: s out of range");
  auto rows = P.new_rows(s);
  auto in = [&](int r) { return std::find(rows.begin(), rows.end(), r) != rows.end(); };
  if (!in(a) || !in(b)) throw IndexError("W generator: rows must lie in I_s minus I_{s+1}");
}

}  // namespace

std::vector<W2Term> w2_quadratic_terms(const PartitionData& P, int s, int a, int b) {
  check_rows(P, s, a, b);
  const int u1 = P.u(1), q1 = P.q(1);
  std::vector<W2Term> out;
  for (int cj = 1; cj <= s; ++cj)
    for (int ci = 1; ci <= s; ++ci) {
      for (int rx = -q1; rx <= u1; ++rx) {
        if (rx == 0 || !P.row_in_column(rx, cj) || !P.row_in_column(rx, ci)) continue;
        int sign = 0;
        if (cj < ci) {
          if (rx > 0 && rx > u1 - P.u(s)) sign = 1;
          if (rx < 0 && rx < -q1 + P.q(s)) sign = 1;
        } else {
          if (rx < 0 && P.q(s) - q1 <= rx && rx <= P.q(cj) - q1) sign = -1;
          if (rx > 0 && u1 - P.u(cj) <= rx && rx <= u1 - P.u(s)) sign = -1;
        }
        if (sign != 0) out.push_back({*P.at(rx, cj), *P.at(b, cj), *P.at(a, ci), *P.at(rx, ci), sign});
      }
    }
  return out;
}

VertexState build_W1(WAlgebra& w, int s, int a, int b) {
  const PartitionData& P = w.partition();
  check_rows(P, s, a, b);
  VertexState out;
  for (int c = 1; c <= P.l(); ++c) {
    auto i = P.at(a, c), j = P.at(b, c);
    if (i && j) out += w.e(*i, *j);
  }
  return out;
}

VertexState build_W2(WAlgebra& w, int s, int a, int b) {
  const PartitionData& P = w.partition();
  check_rows(P, s, a, b);
  const AlgebraA& A = w.algebra();
  VertexState out;
  for (int c = 1; c <= P.l(); ++c) {
    auto j = P.at(b, c);
    auto i = P.at(a, c + 1);
    if (i && j) out += w.e(*i, *j);
    auto i0 = P.at(a, c);
    if (i0 && j) out.add_scaled(w.e(*i0, *j, 2), -gamma_const(P, c));
  }
  for (const auto& t : w2_quadratic_terms(P, s, a, b)) {
    int pe_iv = P.parity(t.i) ^ P.parity(t.v), pe_xj = P.parity(t.x) ^ P.parity(t.j);
    out += w.product({A.e(t.x, t.j), A.e(t.i, t.v)}, PolyScalar(t.sign * sgn(P.parity(t.x) + pe_iv * pe_xj)));
  }
  return out;
}

BlockSide::BlockSide(PartitionData part, int s, std::vector<PolyScalar> levels_c, std::vector<PolyScalar> levels_z)
    : part_(std::move(part)), s_(s) {
  if (s < 1 || s > part_.l()) throw IndexError("BlockSide: s out of range");
  for (int t = 1; t <= s; ++t) {
    auto g = std::make_shared<AffineGl>(part_.u(t), part_.q(t), levels_c.at(static_cast<size_t>(t - 1)),
                                        levels_z.at(static_cast<size_t>(t - 1)));
    blocks_.push_back(g);
    ctx_.add(g);
  }
  eng_ = std::make_shared<PbwEngine>(ctx_, true);
}

namespace {

std::vector<PolyScalar> default_c(const PartitionData& P, int s) {
  std::vector<PolyScalar> r;
  for (int t = 1; t <= s; ++t) r.push_back(alpha_const(P, t));
  return r;
}

}  // namespace

BlockSide::BlockSide(PartitionData part, int s)
    : BlockSide(part, s, default_c(part, s), std::vector<PolyScalar>(static_cast<size_t>(s), PolyScalar(1))) {}

int BlockSide::local(int row, int t) const {
  if (!part_.row_in_column(row, t)) throw IndexError("row " + std::to_string(row) + " absent from block " + std::to_string(t));
  return row > 0 ? row - (part_.u(1) - part_.u(t)) : row + part_.q(1) - part_.q(t);
}

int BlockSide::row_of_local(int label, int t) const {
  return label > 0 ? label + part_.u(1) - part_.u(t) : label - part_.q(1) + part_.q(t);
}

Mode BlockSide::E(int t, int x, int y, int n) const { return block(t).E(local(x, t), local(y, t), n, t - 1); }

VertexState miura(const VertexState& v, BlockSide& side) {
  const PartitionData& P = side.partition();
  SuperIndexSet idx = P.index_set();
  VertexState out;
  for (const auto& [m, c] : v.sorted()) {
    std::vector<Mode> word;
    bool keep = true;
    for (Mode x : m) {
      if (x.kind() != Kind::e) throw IndexError("miura: psi mode in input");
      int i = idx.label_at(x.i()), j = idx.label_at(x.j());
      int t = P.col(i);
      if (P.col(j) != t) {
        keep = false;
        break;
      }
      if (t > side.factors()) throw IndexError("miura: column beyond the block factors");
      word.push_back(side.E(t, P.row(i), P.row(j), x.s()));
    }
    if (keep) out += side.engine().normal_form(word, c);
  }
  return out;
}

VertexState mu_W1_display(BlockSide& side, int s, int a, int b) {
  const PartitionData& P = side.partition();
  check_rows(P, s, a, b);
  VertexState out;
  for (int t = 1; t <= s; ++t) out += side.engine().normal_form({side.E(t, a, b, -1)}, PolyScalar(1));
  return out;
}

VertexState mu_W2_display(BlockSide& side, int s, int a, int b) {
  const PartitionData& P = side.partition();
  check_rows(P, s, a, b);
  auto par = [](int r) { return r > 0 ? 0 : 1; };
  VertexState out;
  for (int t = 1; t <= s; ++t) out += side.engine().normal_form({side.E(t, a, b, -2)}, -gamma_const(P, t));
  int u1 = P.u(1), q1 = P.q(1);
  for (int r1 = 1; r1 <= s; ++r1)
    for (int r2 = 1; r2 <= s; ++r2)
      for (int x = -q1; x <= u1; ++x) {
        if (x == 0 || !P.row_in_column(x, r1) || !P.row_in_column(x, r2)) continue;
        int sign = 0;
        if (r1 < r2 && x > u1 - P.u(s)) sign = 1;
        if (r1 < r2 && x < -q1 + P.q(s)) sign = 1;
        if (r1 >= r2 && x < 0 && P.q(s) - q1 <= x && x <= P.q(r1) - q1) sign = -1;
        if (r1 >= r2 && x > 0 && u1 - P.u(r1) <= x && x <= u1 - P.u(s)) sign = -1;
        if (sign == 0) continue;
        sign *= sgn(par(x) + (par(a) ^ par(x)) * (par(x) ^ par(b)));
        out += side.engine().normal_form({side.E(r1, x, b, -1), side.E(r2, a, x, -1)}, PolyScalar(sign));
      }
  return out;
}

namespace {

// Generalized binomial b (b-1) ... (b-r+1) / r!.
mpq_class binom(int b, int r) {
  mpq_class v(1);
  for (int i = 0; i < r; ++i) {
    v *= b - i;
    v /= i + 1;
  }
  return v;
}

}  // namespace

ExprPtr mode_of(const VertexState& v, int power) {
  std::vector<ExprPtr> terms;
  for (const auto& [m, c] : v.sorted()) {
    if (m.empty()) {
      if (power == -1) terms.push_back(Expr::scalar(c));
      continue;
    }
    if (m.size() == 1) {
      // x[-n] = d^{n-1} x[-1] / (n-1)!, and (d w) t^b = -b w t^{b-1}.
      int n = -m[0].s();
      mpq_class k = binom(power, n - 1);
      if (((n - 1) & 1) != 0) k = -k;
      if (k != 0) terms.push_back(Expr::mode(m[0].with_s(power - n + 1), c * PolyScalar(k)));
      continue;
    }
    if (m.size() == 2 && m[0].s() == -1 && m[1].s() == -1) {
      Mode u = m[0], w = m[1];
      terms.push_back(Expr::series({{u.with_s(-1), -1}, {w.with_s(power), 1}}, c));
      int sg = sgn(u.parity() * w.parity());
      terms.push_back(Expr::series({{w.with_s(power - 1), -1}, {u.with_s(0), 1}}, c * PolyScalar(sg)));
      continue;
    }
    throw std::invalid_argument("mode_of: only states of PBW length <= 2 built from [-1] modes are supported");
  }
  return Expr::sum(std::move(terms));
}

namespace {

// sum over v in Z of U t^{-v} V t^{v} for modes on distinct tags.
ExprPtr full_cross_series(Mode U, Mode V, const PolyScalar& c) {
  int sg = sgn(U.parity() * V.parity());
  return Expr::series({{U.with_s(0), -1}, {V.with_s(0), 1}}, c) +
         Expr::series({{V.with_s(-1), -1}, {U.with_s(1), 1}}, c * PolyScalar(sg));
}

}  // namespace

ExprPtr w_gen_expansion(BlockSide& side, int s) {
  const PartitionData& P = side.partition();
  if (P.u(s) - P.u(s + 1) < 2) throw IndexError("w_gen_expansion: needs u_s - u_{s+1} >= 2");
  int u1 = P.u(1), q1 = P.q(1);
  int A = u1 - P.u(s) + 1, B = A + 1;
  std::vector<ExprPtr> t;
  // group 1
  for (int a = 1; a <= s; ++a) t.push_back(Expr::mode(side.E(a, A, B, 0), gamma_const(P, a)));
  for (int r1 = 1; r1 <= s; ++r1)
    for (int r2 = 1; r2 <= s; ++r2) {
      if (r1 < r2) {
        // groups 2, 3
        for (int x = u1 - P.u(s) + 1; x <= u1; ++x)
          t.push_back(full_cross_series(side.E(r1, x, B, 0), side.E(r2, A, x, 0), PolyScalar(1)));
        for (int x = -q1; x < -q1 + P.q(s); ++x)
          t.push_back(full_cross_series(side.E(r1, x, B, 0), side.E(r2, A, x, 0), PolyScalar(1)));
      }
      if (r1 > r2) {
        // groups 4, 5
        for (int x = P.q(s) - q1; x <= P.q(r1) - q1 - 1; ++x)
          t.push_back(full_cross_series(side.E(r1, x, B, 0), side.E(r2, A, x, 0), PolyScalar(-1)));
        for (int x = u1 - P.u(r1) + 1; x <= u1 - P.u(s); ++x)
          t.push_back(full_cross_series(side.E(r1, x, B, 0), side.E(r2, A, x, 0), PolyScalar(-1)));
      }
    }
  for (int r = 1; r <= s; ++r) {
    // group 6
    for (int x = P.q(s) - q1; x <= P.q(r) - q1 - 1; ++x) {
      t.push_back(Expr::series({{side.E(r, x, B, -1), -1}, {side.E(r, A, x, 1), 1}}, PolyScalar(-1)));
      t.push_back(Expr::series({{side.E(r, A, x, 0), -1}, {side.E(r, x, B, 0), 1}}, PolyScalar(1)));
    }
    // group 7
    for (int x = u1 - P.u(r) + 1; x <= u1 - P.u(s); ++x) {
      t.push_back(Expr::series({{side.E(r, x, B, -1), -1}, {side.E(r, A, x, 1), 1}}, PolyScalar(-1)));
      t.push_back(Expr::series({{side.E(r, A, x, 0), -1}, {side.E(r, x, B, 0), 1}}, PolyScalar(-1)));
    }
  }
  return Expr::sum(std::move(t));
}

ExprPtr mu_W1_mode(const BlockSide& side, int s, int a, int b, int n) {
  check_rows(side.partition(), s, a, b);
  std::vector<ExprPtr> t;
  for (int r = 1; r <= s; ++r) t.push_back(Expr::mode(side.E(r, a, b, n)));
  return Expr::sum(std::move(t));
}

}  // namespace syv
