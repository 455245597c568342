#include "syv/operators.hpp"

#include <functional>
#include <stdexcept>

namespace syv {

namespace {

int merge_attr(int a, int b) {
  if (a == kMixed || b == kMixed) return kMixed;
  return a == b ? a : kMixed;
}

int add_attr(int a, int b) { return (a == kMixed || b == kMixed) ? kMixed : a + b; }

int xor_attr(int a, int b) { return (a == kMixed || b == kMixed) ? kMixed : (a ^ b); }

}  // namespace

ExprPtr clone_with(const Expr& e, const PolyScalar& c) {
  auto r = std::make_shared<Expr>(e);
  r->coef_ = e.coef_ * c;
  r->memo_ = false;
  if (r->coef_.is_zero()) return Expr::zero();
  return r;
}

ExprPtr Expr::zero() {
  static const ExprPtr z = std::make_shared<Expr>();
  return z;
}

ExprPtr Expr::scalar(const PolyScalar& c) {
  if (c.is_zero()) return zero();
  auto r = std::make_shared<Expr>();
  r->op_ = Op::Scalar;
  r->coef_ = c;
  return r;
}

ExprPtr Expr::mode(Mode x, const PolyScalar& c) {
  if (c.is_zero()) return zero();
  auto r = std::make_shared<Expr>();
  r->op_ = Op::Mode;
  r->mode_ = x;
  r->coef_ = c;
  r->parity_ = x.parity();
  r->degree_ = x.s();
  return r;
}

ExprPtr Expr::sum(std::vector<ExprPtr> terms) {
  auto r = std::make_shared<Expr>();
  r->op_ = Op::Sum;
  bool first = true;
  for (auto& t : terms) {
    if (!t || t->is_zero()) continue;
    if (first) {
      r->parity_ = t->parity_;
      r->degree_ = t->degree_;
      first = false;
    } else {
      r->parity_ = merge_attr(r->parity_, t->parity_);
      r->degree_ = merge_attr(r->degree_, t->degree_);
    }
    r->kids_.push_back(std::move(t));
  }
  if (r->kids_.empty()) return zero();
  if (r->kids_.size() == 1) return r->kids_[0];
  return r;
}

ExprPtr Expr::product(std::vector<ExprPtr> factors, const PolyScalar& c) {
  if (c.is_zero()) return zero();
  auto r = std::make_shared<Expr>();
  r->op_ = Op::Product;
  r->coef_ = c;
  for (auto& f : factors) {
    if (f->is_zero()) return zero();
    r->parity_ = xor_attr(r->parity_, f->parity_);
    r->degree_ = add_attr(r->degree_, f->degree_);
    r->kids_.push_back(std::move(f));
  }
  if (r->kids_.empty()) return scalar(c);
  if (r->kids_.size() == 1) return scale(c, r->kids_[0]);
  return r;
}

ExprPtr Expr::bracket(ExprPtr a, ExprPtr b) {
  if (a->is_zero() || b->is_zero()) return zero();
  if (a->parity_ == kMixed || b->parity_ == kMixed) throw std::invalid_argument("bracket: inhomogeneous operand");
  auto r = std::make_shared<Expr>();
  r->op_ = Op::Bracket;
  r->parity_ = a->parity_ ^ b->parity_;
  r->degree_ = add_attr(a->degree_, b->degree_);
  r->kids_ = {std::move(a), std::move(b)};
  return r;
}

ExprPtr Expr::anti(ExprPtr a, ExprPtr b) {
  if (a->is_zero() || b->is_zero()) return zero();
  auto r = std::make_shared<Expr>();
  r->op_ = Op::Anti;
  r->parity_ = xor_attr(a->parity_, b->parity_);
  r->degree_ = add_attr(a->degree_, b->degree_);
  r->kids_ = {std::move(a), std::move(b)};
  return r;
}

ExprPtr Expr::series(std::vector<SeriesFactor> factors, const PolyScalar& c, int series_max) {
  if (c.is_zero() || factors.empty()) return zero();
  if (series_max < 0 && factors.back().slope != 1)
    throw std::invalid_argument("series: rightmost factor must increase with s");
  auto r = std::make_shared<Expr>();
  r->op_ = Op::Series;
  r->coef_ = c;
  r->series_max_ = series_max;
  int slope_sum = 0;
  for (const auto& f : factors) {
    r->parity_ ^= f.base.parity();
    r->degree_ += f.base.s();
    slope_sum += f.slope;
  }
  if (slope_sum != 0) r->degree_ = kMixed;
  r->factors_ = std::move(factors);
  return r;
}

ExprPtr Expr::scale(const PolyScalar& c, const ExprPtr& e) {
  if (c.is_zero() || e->is_zero()) return zero();
  if (c == PolyScalar(1)) return e;
  return clone_with(*e, c);
}

ExprPtr Expr::memoize(const ExprPtr& e) {
  if (e->is_zero() || e->op_ == Op::Mode || e->op_ == Op::Scalar || e->memo_) return e;
  auto r = std::make_shared<Expr>(*e);
  r->memo_ = true;
  return r;
}

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b) { return Expr::sum({a, b}); }
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b) { return Expr::sum({a, Expr::scale(PolyScalar(-1), b)}); }
ExprPtr operator*(const PolyScalar& c, const ExprPtr& e) { return Expr::scale(c, e); }
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b) { return Expr::product({a, b}); }

std::string Expr::str(const Context& ctx) const {
  std::string body;
  switch (op_) {
    case Op::Zero:
      return "0";
    case Op::Scalar:
      return "(" + coef_.str() + ")";
    case Op::Mode:
      body = ctx.name(mode_);
      break;
    case Op::Sum:
      for (const auto& k : kids_) body += (body.empty() ? "" : " + ") + k->str(ctx);
      body = "(" + body + ")";
      break;
    case Op::Product:
      for (const auto& k : kids_) body += (body.empty() ? "" : " ") + k->str(ctx);
      break;
    case Op::Bracket:
      body = "[" + kids_[0]->str(ctx) + ", " + kids_[1]->str(ctx) + "]";
      break;
    case Op::Anti:
      body = "{" + kids_[0]->str(ctx) + ", " + kids_[1]->str(ctx) + "}";
      break;
    case Op::Series: {
      body = "sum_s(";
      bool first = true;
      for (const auto& f : factors_) {
        if (!first) body += " ";
        first = false;
        Mode b = f.base;
        std::string nm = ctx.name(b.with_s(0));
        auto pos = nm.find("t^");
        if (pos != std::string::npos) nm = nm.substr(0, pos);
        std::string ex = f.slope == 0 ? std::to_string(b.s())
                                      : (f.slope > 0 ? "s" : "-s") +
                                            (b.s() == 0 ? std::string() : (b.s() > 0 ? "+" : "") + std::to_string(b.s()));
        body += nm + "t^{" + ex + "}";
      }
      body += ")";
      break;
    }
  }
  if (coef_ == PolyScalar(1)) return body;
  return "(" + coef_.str() + ")*" + body;
}

size_t Evaluator::cached_entries() const {
  size_t n = 0;
  for (const auto& [k, v] : cache_) n += v.values.size();
  return n;
}

ModuleVector Evaluator::eval(const ExprPtr& e, const ModuleVector& v) {
  ModuleVector out;
  eval_vec_into(e, v, PolyScalar(1), out);
  return out;
}

ModuleVector Evaluator::eval(const ExprPtr& e, const Monomial& m) {
  ModuleVector out;
  eval_into(e, m, PolyScalar(1), out);
  return out;
}

void Evaluator::eval_vec_into(const ExprPtr& e, const ModuleVector& v, const PolyScalar& c, ModuleVector& out) {
  for (const auto& [m, cm] : v.terms()) eval_into(e, m, cm * c, out);
}

void Evaluator::eval_into(const ExprPtr& e, const Monomial& m, const PolyScalar& c, ModuleVector& out) {
  if (c.is_zero()) return;
  switch (e->op()) {
    case Expr::Op::Zero:
      return;
    case Expr::Op::Scalar:
      out.add(m, e->coef() * c);
      return;
    case Expr::Op::Mode:
      mod_.engine().left_mul_into(e->mode(), m, e->coef() * c, out);
      return;
    default:
      break;
  }
  if (!e->memo()) {
    ModuleVector tmp;
    compute(e, m, tmp);
    out.add_scaled(tmp, c);
    return;
  }
  auto& nc = cache_[e.get()];
  if (!nc.pin) nc.pin = e;
  auto it = nc.values.find(m);
  if (it == nc.values.end()) {
    ModuleVector tmp;
    compute(e, m, tmp);
    it = cache_[e.get()].values.emplace(m, std::move(tmp)).first;
  }
  out.add_scaled(it->second, c);
}

void Evaluator::compute(const ExprPtr& e, const Monomial& m, ModuleVector& out) {
  const PolyScalar& k = e->coef();
  switch (e->op()) {
    case Expr::Op::Sum:
      for (const auto& t : e->kids()) eval_into(t, m, k, out);
      return;
    case Expr::Op::Product: {
      const auto& f = e->kids();
      ModuleVector cur;
      eval_into(f.back(), m, k, cur);
      for (int i = static_cast<int>(f.size()) - 2; i >= 0 && !cur.is_zero(); --i) {
        ModuleVector nxt;
        eval_vec_into(f[static_cast<size_t>(i)], cur, PolyScalar(1), nxt);
        cur = std::move(nxt);
      }
      out.add_scaled(cur, mpq_class(1));
      return;
    }
    case Expr::Op::Bracket:
    case Expr::Op::Anti: {
      const auto& a = e->kids()[0];
      const auto& b = e->kids()[1];
      ModuleVector bm, am;
      eval_into(b, m, PolyScalar(1), bm);
      eval_vec_into(a, bm, k, out);
      eval_into(a, m, PolyScalar(1), am);
      int sign = 1;
      if (e->op() == Expr::Op::Bracket) sign = (a->parity() & b->parity()) ? 1 : -1;
      eval_vec_into(b, am, k * PolyScalar(sign), out);
      return;
    }
    case Expr::Op::Series: {
      const auto& fs = e->factors();
      int smax = e->series_max();
      if (smax < 0) {
        const Mode last = fs.back().base;
        smax = m.degree_of_tag(last.tag()) - last.s() + extra_;
      }
      auto& eng = mod_.engine();
      for (int s = 0; s <= smax; ++s) {
        ModuleVector cur;
        eng.left_mul_into(fs.back().at(s), m, k, cur);
        for (int i = static_cast<int>(fs.size()) - 2; i >= 0 && !cur.is_zero(); --i)
          cur = eng.apply(fs[static_cast<size_t>(i)].at(s), cur);
        out.add_scaled(cur, mpq_class(1));
      }
      return;
    }
    default:
      throw std::logic_error("Evaluator: unexpected node");
  }
}

std::string Counterexample::describe(const PbwEngine& eng) const {
  return "on " + eng.str(vector) + ": lhs = " + eng.str(lhs) + "; rhs = " + eng.str(rhs);
}

std::optional<Counterexample> op_equal(Evaluator& ev, const ExprPtr& a, const ExprPtr& b,
                                       const std::vector<Monomial>& basis) {
  for (const auto& m : basis) {
    ModuleVector va = ev.eval(a, m);
    ModuleVector vb = ev.eval(b, m);
    if (va != vb) return Counterexample{m, std::move(va), std::move(vb)};
  }
  return std::nullopt;
}

namespace {

struct OmegaMode {
  Mode mode;
  int sign;
};

OmegaMode omega_mode(Mode x, const Context& ctx) {
  if (x.kind() != Kind::E) throw std::invalid_argument("omega_tilde: only E modes");
  const auto& I = ctx.algebra(x.tag()).indices();
  int pi = I.parity_at_pos(x.i()), pj = I.parity_at_pos(x.j());
  int sign = (x.i() > x.j() && ((pi + pj) & 1)) ? -1 : 1;
  return {Mode::make(x.tag(), Kind::E, x.j(), x.i(), -x.s(), x.parity()), sign};
}

int koszul_reverse_sign(const std::vector<int>& parities) {
  int odd = 0;
  for (size_t a = 0; a < parities.size(); ++a)
    for (size_t b = a + 1; b < parities.size(); ++b) odd ^= parities[a] & parities[b];
  return odd ? -1 : 1;
}

}  // namespace

ExprPtr omega_tilde(const ExprPtr& e, const Context& ctx) {
  const PolyScalar& k = e->coef();
  switch (e->op()) {
    case Expr::Op::Zero:
    case Expr::Op::Scalar:
      return e;
    case Expr::Op::Mode: {
      auto om = omega_mode(e->mode(), ctx);
      return Expr::mode(om.mode, k * PolyScalar(om.sign));
    }
    case Expr::Op::Sum: {
      std::vector<ExprPtr> t;
      for (const auto& c : e->kids()) t.push_back(omega_tilde(c, ctx));
      return Expr::scale(k, Expr::sum(std::move(t)));
    }
    case Expr::Op::Product: {
      std::vector<ExprPtr> t;
      std::vector<int> par;
      for (auto it = e->kids().rbegin(); it != e->kids().rend(); ++it) t.push_back(omega_tilde(*it, ctx));
      for (const auto& c : e->kids()) par.push_back(c->parity());
      return Expr::product(std::move(t), k * PolyScalar(koszul_reverse_sign(par)));
    }
    case Expr::Op::Bracket: {
      auto r = Expr::bracket(omega_tilde(e->kids()[0], ctx), omega_tilde(e->kids()[1], ctx));
      return Expr::scale(k * PolyScalar(-1), r);
    }
    case Expr::Op::Anti: {
      int sg = (e->kids()[0]->parity() & e->kids()[1]->parity()) ? -1 : 1;
      auto r = Expr::anti(omega_tilde(e->kids()[0], ctx), omega_tilde(e->kids()[1], ctx));
      return Expr::scale(k * PolyScalar(sg), r);
    }
    case Expr::Op::Series: {
      std::vector<SeriesFactor> fs;
      std::vector<int> par;
      int sign = 1;
      for (auto it = e->factors().rbegin(); it != e->factors().rend(); ++it) {
        auto om = omega_mode(it->base, ctx);
        sign *= om.sign;
        fs.push_back({om.mode, -it->slope});
      }
      for (const auto& f : e->factors()) par.push_back(f.base.parity());
      sign *= koszul_reverse_sign(par);
      return Expr::series(std::move(fs), k * PolyScalar(sign), e->series_max());
    }
  }
  return e;
}

ExprPtr map_modes(const ExprPtr& e, const std::function<std::vector<Mode>(Mode)>& f) {
  const PolyScalar& k = e->coef();
  switch (e->op()) {
    case Expr::Op::Zero:
    case Expr::Op::Scalar:
      return e;
    case Expr::Op::Mode: {
      std::vector<ExprPtr> t;
      for (Mode y : f(e->mode())) t.push_back(Expr::mode(y, k));
      return Expr::sum(std::move(t));
    }
    case Expr::Op::Sum:
    case Expr::Op::Product:
    case Expr::Op::Bracket:
    case Expr::Op::Anti: {
      std::vector<ExprPtr> t;
      for (const auto& c : e->kids()) t.push_back(map_modes(c, f));
      ExprPtr r;
      if (e->op() == Expr::Op::Sum) r = Expr::sum(std::move(t));
      else if (e->op() == Expr::Op::Product) r = Expr::product(std::move(t));
      else if (e->op() == Expr::Op::Bracket) r = Expr::bracket(t[0], t[1]);
      else r = Expr::anti(t[0], t[1]);
      return Expr::scale(k, r);
    }
    case Expr::Op::Series: {
      const auto& fs = e->factors();
      std::vector<std::vector<Mode>> images;
      for (const auto& x : fs) images.push_back(f(x.base));
      for (const auto& im : images)
        if (im.empty()) return Expr::zero();
      std::vector<ExprPtr> out;
      std::vector<size_t> choice(fs.size(), 0);
      while (true) {
        std::vector<SeriesFactor> nf;
        for (size_t a = 0; a < fs.size(); ++a) nf.push_back({images[a][choice[a]], fs[a].slope});
        out.push_back(Expr::series(std::move(nf), k, e->series_max()));
        size_t a = 0;
        while (a < fs.size()) {
          if (++choice[a] < images[a].size()) break;
          choice[a] = 0;
          ++a;
        }
        if (a == fs.size()) break;
      }
      return Expr::sum(std::move(out));
    }
  }
  return e;
}

ExprPtr map_tags(const ExprPtr& e, const std::vector<std::vector<int>>& f) {
  return map_modes(e, [&](Mode x) {
    std::vector<Mode> r;
    for (int t : f.at(static_cast<size_t>(x.tag()))) r.push_back(x.with_tag(t));
    return r;
  });
}

}  // namespace syv
