#include "cubnf/convert.hpp"

#include <functional>

namespace cubnf {

std::string ConvVerdict::str() const {
  switch (kind) {
    case Kind::Yes: return "yes";
    case Kind::No: return "no";
    case Kind::Unknown: return "unknown(" + reason + ")";
  }
  return "?";
}

namespace {

constexpr const char* kFuel = "fuel-exhausted";
constexpr const char* kUnoriented = "unoriented-equation";

struct Budget {
  std::size_t left;
  bool out = false;
};

// Conjunction of independent obligations.
ConvVerdict both(const ConvVerdict& a, const ConvVerdict& b) {
  if (a.is_no() || b.is_no()) return ConvVerdict::no();
  if (a.is_unknown()) return a;
  return b;
}

// Inside a neutral spine a mismatch of arguments does not refute equality.
ConvVerdict soften(const ConvVerdict& v) {
  return v.is_no() ? ConvVerdict::unknown(kUnoriented) : v;
}

bool is_ctor(const Tm& t) {
  return t.is<tm::True>() || t.is<tm::False>() || t.is<tm::Base>() || t.is<tm::Loop>() ||
         t.is<tm::Code>();
}

class Conv {
 public:
  Conv(Ctx ctx, Budget* budget) : ctx_(std::move(ctx)), hyps_(ctx_.cof_hyps()), budget_(budget) {}

  bool holds(const Cof& phi) const { return entails(hyps_, phi); }

  bool tick() {
    if (budget_->left == 0) {
      budget_->out = true;
      return false;
    }
    --budget_->left;
    return true;
  }

  // Runs `f` once per consistent clause of the hypotheses (plus `extra`), in
  // the context contracted by that clause.
  ConvVerdict cases(const std::optional<Cof>& extra,
                    const std::function<ConvVerdict(Conv&, const ISubst&)>& f) {
    std::vector<Cof> hs = hyps_;
    if (extra) hs.push_back(*extra);
    ConvVerdict acc = ConvVerdict::yes();
    for (const auto& b : dnf(Cof::meet(hs))) {
      ISubst s = b.contraction();
      Conv c(ctx_.contract(s).without_cofs(), budget_);
      acc = both(acc, f(c, s));
      if (acc.is_no()) break;
    }
    return acc;
  }

  std::string fresh(const std::string& base, std::initializer_list<std::set<std::string>> more) {
    std::set<std::string> avoid = ctx_.names();
    for (const auto& m : more) avoid.insert(m.begin(), m.end());
    return fresh_name(base, avoid);
  }

  Conv with_term(const std::string& x, std::optional<Tp> a) {
    return Conv(ctx_.with_term(x, std::move(a)), budget_);
  }
  Conv with_dim(const std::string& i) { return Conv(ctx_.with_dim(i), budget_); }

  // --- evaluation -------------------------------------------------------

  Tm whnf(const Tm& t) {
    if (!tick()) return t;
    return std::visit(
        overloaded{
            [&](const tm::App& a) -> Tm {
              Tm f = whnf(a.fn);
              if (auto* l = f.as<tm::Lam>()) return whnf(subst_tm(l->body, l->x, a.arg));
              return tm::App{f, a.arg};
            },
            [&](const tm::Fst& p) -> Tm {
              Tm q = whnf(p.pair);
              if (auto* pr = q.as<tm::Pair>()) return whnf(pr->fst);
              return tm::Fst{q};
            },
            [&](const tm::Snd& p) -> Tm {
              Tm q = whnf(p.pair);
              if (auto* pr = q.as<tm::Pair>()) return whnf(pr->snd);
              return tm::Snd{q};
            },
            [&](const tm::If& i) -> Tm {
              Tm b = whnf(i.scrut);
              if (b.is<tm::True>()) return whnf(i.tcase);
              if (b.is<tm::False>()) return whnf(i.fcase);
              return tm::If{i.x, i.motive, b, i.tcase, i.fcase};
            },
            [&](const tm::PApp& p) -> Tm {
              Tm q = whnf(p.path);
              if (auto* l = q.as<tm::PLam>()) return whnf(subst_i_tm(l->body, l->i, p.r));
              if (p.r.is_endpoint()) {
                if (auto ty = synth(q)) {
                  Tp pt = whnf_tp(*ty);
                  if (auto* path = pt.as<tp::Path>())
                    return whnf(p.r == IExpr::zero() ? path->lhs : path->rhs);
                }
              }
              return tm::PApp{q, p.r};
            },
            [&](const tm::Unglue& u) -> Tm {
              Tm g = whnf(u.glued);
              if (auto* gi = g.as<tm::GlueIn>()) return whnf(gi->base);
              if (auto ty = synth(g)) {
                Tp gt = whnf_tp(*ty, true);
                if (auto* glue = gt.as<tp::Glue>(); glue && holds(glue->phi))
                  return whnf(apply_equiv(glue->equiv, g));
              }
              return tm::Unglue{g};
            },
            [&](const tm::GlueIn& g) -> Tm {
              if (holds(g.phi)) return whnf(g.part);
              return t;
            },
            [&](const tm::Loop& l) -> Tm {
              if (l.r.is_endpoint()) return tm::Base{};
              return t;
            },
            [&](const tm::S1Elim& e) -> Tm {
              Tm s = whnf(e.scrut);
              if (s.is<tm::Base>()) return whnf(e.base);
              if (auto* l = s.as<tm::Loop>()) return whnf(subst_i_tm(e.loop, e.i, l->r));
              return tm::S1Elim{e.x, e.motive, s, e.base, e.i, e.loop};
            },
            [&](const tm::Coe& c) -> Tm {
              if (c.r == c.s) return whnf(c.arg);
              return t;
            },
            [&](const tm::HComp& h) -> Tm {
              if (holds(Cof::join({Cof::equation(h.r, h.s), h.phi})))
                return whnf(subst_i_tm(h.tube, h.i, h.s));
              // Strict booleans: hcomp of a constructor is that constructor.
              if (whnf_tp(h.tp).is<tp::Bool>()) {
                Tm cap = whnf(subst_i_tm(h.tube, h.i, h.r));
                if (cap.is<tm::True>() || cap.is<tm::False>()) return cap;
              }
              return t;
            },
            [&](const tm::Split& s) -> Tm {
              for (const auto& [g, body] : s.arms)
                if (holds(g)) return whnf(body);
              return t;
            },
            [&](const auto&) -> Tm { return t; },
        },
        t.v());
  }

  Tp whnf_tp(const Tp& a, bool keep_glue = false) {
    if (!tick()) return a;
    return std::visit(overloaded{
                          [&](const tp::El& e) -> Tp {
                            Tm c = whnf(e.code);
                            if (auto* code = c.as<tm::Code>()) return whnf_tp(code->tp, keep_glue);
                            return tp::El{c};
                          },
                          [&](const tp::Glue& g) -> Tp {
                            if (!keep_glue && holds(g.phi)) return whnf_tp(g.fiber);
                            return a;
                          },
                          [&](const tp::Split& s) -> Tp {
                            for (const auto& [g, body] : s.arms)
                              if (holds(g)) return whnf_tp(body, keep_glue);
                            return a;
                          },
                          [&](const auto&) -> Tp { return a; },
                      },
                      a.v());
  }

  std::optional<Tp> synth(const Tm& t) {
    return std::visit(
        overloaded{
            [&](const tm::Var& v) { return ctx_.lookup(v.name); },
            [&](const tm::App& a) -> std::optional<Tp> {
              auto f = synth(a.fn);
              if (!f) return std::nullopt;
              Tp ft = whnf_tp(*f);
              if (auto* pi = ft.as<tp::Pi>()) return subst_tp(pi->cod, pi->x, a.arg);
              return std::nullopt;
            },
            [&](const tm::Fst& p) -> std::optional<Tp> {
              auto s = synth(p.pair);
              if (!s) return std::nullopt;
              Tp st = whnf_tp(*s);
              if (auto* sg = st.as<tp::Sigma>()) return sg->fst;
              return std::nullopt;
            },
            [&](const tm::Snd& p) -> std::optional<Tp> {
              auto s = synth(p.pair);
              if (!s) return std::nullopt;
              Tp st = whnf_tp(*s);
              if (auto* sg = st.as<tp::Sigma>())
                return subst_tp(sg->snd, sg->x, tm::Fst{p.pair});
              return std::nullopt;
            },
            [&](const tm::PApp& p) -> std::optional<Tp> {
              auto s = synth(p.path);
              if (!s) return std::nullopt;
              Tp st = whnf_tp(*s);
              if (auto* path = st.as<tp::Path>()) return subst_i_tp(path->fam, path->i, p.r);
              return std::nullopt;
            },
            [&](const tm::If& i) -> std::optional<Tp> {
              return subst_tp(i.motive, i.x, i.scrut);
            },
            [&](const tm::S1Elim& e) -> std::optional<Tp> {
              return subst_tp(e.motive, e.x, e.scrut);
            },
            [&](const tm::Unglue& u) -> std::optional<Tp> {
              auto s = synth(u.glued);
              if (!s) return std::nullopt;
              Tp st = whnf_tp(*s, true);
              if (auto* g = st.as<tp::Glue>()) return g->base;
              return std::nullopt;
            },
            [&](const tm::Coe& c) -> std::optional<Tp> {
              return subst_i_tp(c.fam, c.i, c.s);
            },
            [&](const tm::HComp& h) -> std::optional<Tp> { return h.tp; },
            [&](const auto&) -> std::optional<Tp> { return std::nullopt; },
        },
        t.v());
  }

  // --- conversion -------------------------------------------------------

  ConvVerdict conv(const Tm& a, const Tm& b, const std::optional<Tp>& ty) {
    if (!tick()) return ConvVerdict::unknown(kFuel);
    if (alpha_eq(a, b)) return ConvVerdict::yes();
    Tm x = whnf(a), y = whnf(b);
    if (budget_->out) return ConvVerdict::unknown(kFuel);
    if (alpha_eq(x, y)) return ConvVerdict::yes();
    std::optional<Tp> T;
    if (ty) T = whnf_tp(*ty);

    // A stuck case split is compared arm by arm.
    for (const Tm* side : {&x, &y}) {
      if (auto* s = side->as<tm::Split>()) {
        ConvVerdict acc = ConvVerdict::yes();
        for (const auto& [g, body] : s->arms) {
          const Tm& other = side == &x ? y : x;
          acc = both(acc, cases(g, [&](Conv& c, const ISubst& sg) {
                       std::optional<Tp> Ts;
                       if (T) Ts = subst_i_tp(*T, sg);
                       return c.conv(subst_i_tm(body, sg), subst_i_tm(other, sg), Ts);
                     }));
          if (acc.is_no()) break;
        }
        return acc;
      }
    }

    if (x.is<tm::Lam>() || y.is<tm::Lam>()) {
      std::string z = fresh("x", {free_names(x), free_names(y)});
      std::optional<Tp> dom, cod;
      if (T) {
        if (auto* pi = T->as<tp::Pi>()) {
          dom = pi->dom;
          cod = subst_tp(pi->cod, pi->x, tm::Var{z});
        }
      }
      auto body = [&](const Tm& t) -> Tm {
        if (auto* l = t.as<tm::Lam>()) return subst_tm(l->body, l->x, tm::Var{z});
        return tm::App{t, tm::Var{z}};
      };
      return with_term(z, dom).conv(body(x), body(y), cod);
    }

    if (x.is<tm::Pair>() || y.is<tm::Pair>()) {
      std::optional<Tp> fst_t, snd_t;
      if (T) {
        if (auto* sg = T->as<tp::Sigma>()) {
          fst_t = sg->fst;
          snd_t = subst_tp(sg->snd, sg->x, tm::Fst{x});
        }
      }
      ConvVerdict v = conv(tm::Fst{x}, tm::Fst{y}, fst_t);
      if (v.is_no()) return v;
      return both(v, conv(tm::Snd{x}, tm::Snd{y}, snd_t));
    }

    if (x.is<tm::PLam>() || y.is<tm::PLam>()) {
      std::string k = fresh("i", {free_names(x), free_names(y)});
      std::optional<Tp> fam;
      if (T) {
        if (auto* p = T->as<tp::Path>()) fam = subst_i_tp(p->fam, p->i, IExpr::var(k));
      }
      auto body = [&](const Tm& t) -> Tm {
        if (auto* l = t.as<tm::PLam>()) return subst_i_tm(l->body, l->i, IExpr::var(k));
        return tm::PApp{t, IExpr::var(k)};
      };
      return with_dim(k).conv(body(x), body(y), fam);
    }

    if (x.is<tm::GlueIn>() || y.is<tm::GlueIn>()) {
      const auto* g = x.is<tm::GlueIn>() ? x.as<tm::GlueIn>() : y.as<tm::GlueIn>();
      std::optional<Tp> base;
      if (T) {
        if (auto* gl = T->as<tp::Glue>()) base = gl->base;
      }
      ConvVerdict v = conv(tm::Unglue{x}, tm::Unglue{y}, base);
      if (v.is_no()) return v;
      return both(v, cases(g->phi, [&](Conv& c, const ISubst& s) {
                    std::optional<Tp> Ts;
                    if (T) Ts = subst_i_tp(*T, s);
                    return c.conv(subst_i_tm(x, s), subst_i_tm(y, s), Ts);
                  }));
    }

    if (is_ctor(x) && is_ctor(y)) {
      if (x.index() != y.index()) return ConvVerdict::no();
      if (auto* l = x.as<tm::Loop>())
        return l->r == y.as<tm::Loop>()->r ? ConvVerdict::yes() : ConvVerdict::no();
      if (auto* c = x.as<tm::Code>()) return conv_tp(c->tp, y.as<tm::Code>()->tp);
      return ConvVerdict::yes();
    }
    if (is_ctor(x) || is_ctor(y)) return ConvVerdict::unknown(kUnoriented);
    return soften(neutral(x, y));
  }

  ConvVerdict neutral(const Tm& x, const Tm& y) {
    if (x.index() != y.index()) return ConvVerdict::unknown(kUnoriented);
    auto same = [](bool b) { return b ? ConvVerdict::yes() : ConvVerdict::unknown(kUnoriented); };
    return std::visit(
        overloaded{
            [&](const tm::Var& v) { return same(v.name == y.as<tm::Var>()->name); },
            [&](const tm::App& a) {
              const auto& b = *y.as<tm::App>();
              ConvVerdict v = conv(a.fn, b.fn, std::nullopt);
              if (!v.is_yes()) return v;
              std::optional<Tp> dom;
              if (auto f = synth(a.fn)) {
                Tp ft = whnf_tp(*f);
                if (auto* pi = ft.as<tp::Pi>()) dom = pi->dom;
              }
              return conv(a.arg, b.arg, dom);
            },
            [&](const tm::Fst& a) { return conv(a.pair, y.as<tm::Fst>()->pair, std::nullopt); },
            [&](const tm::Snd& a) { return conv(a.pair, y.as<tm::Snd>()->pair, std::nullopt); },
            [&](const tm::PApp& a) {
              const auto& b = *y.as<tm::PApp>();
              if (a.r != b.r) return ConvVerdict::unknown(kUnoriented);
              return conv(a.path, b.path, std::nullopt);
            },
            [&](const tm::Unglue& a) {
              return conv(a.glued, y.as<tm::Unglue>()->glued, std::nullopt);
            },
            [&](const tm::If& a) {
              const auto& b = *y.as<tm::If>();
              ConvVerdict v = conv(a.scrut, b.scrut, tp::Bool{});
              if (!v.is_yes()) return v;
              std::string z = fresh(a.x, {free_names(a.motive), free_names(b.motive)});
              v = with_term(z, tp::Bool{})
                      .conv_tp(subst_tp(a.motive, a.x, tm::Var{z}),
                               subst_tp(b.motive, b.x, tm::Var{z}));
              if (!v.is_yes()) return v;
              v = conv(a.tcase, b.tcase, subst_tp(a.motive, a.x, tm::True{}));
              if (!v.is_yes()) return v;
              return conv(a.fcase, b.fcase, subst_tp(a.motive, a.x, tm::False{}));
            },
            [&](const tm::S1Elim& a) {
              const auto& b = *y.as<tm::S1Elim>();
              ConvVerdict v = conv(a.scrut, b.scrut, tp::S1{});
              if (!v.is_yes()) return v;
              std::string z = fresh(a.x, {free_names(a.motive), free_names(b.motive)});
              v = with_term(z, tp::S1{}).conv_tp(subst_tp(a.motive, a.x, tm::Var{z}),
                                                 subst_tp(b.motive, b.x, tm::Var{z}));
              if (!v.is_yes()) return v;
              v = conv(a.base, b.base, subst_tp(a.motive, a.x, tm::Base{}));
              if (!v.is_yes()) return v;
              std::string k = fresh(a.i, {free_names(a.loop), free_names(b.loop)});
              return with_dim(k).conv(subst_i_tm(a.loop, a.i, IExpr::var(k)),
                                      subst_i_tm(b.loop, b.i, IExpr::var(k)),
                                      subst_tp(a.motive, a.x, tm::Loop{IExpr::var(k)}));
            },
            [&](const tm::Coe& a) {
              const auto& b = *y.as<tm::Coe>();
              if (a.r != b.r || a.s != b.s) return ConvVerdict::unknown(kUnoriented);
              std::string k = fresh(a.i, {free_names(a.fam), free_names(b.fam)});
              ConvVerdict v = with_dim(k).conv_tp(subst_i_tp(a.fam, a.i, IExpr::var(k)),
                                                  subst_i_tp(b.fam, b.i, IExpr::var(k)));
              if (!v.is_yes()) return v;
              return conv(a.arg, b.arg, subst_i_tp(a.fam, a.i, a.r));
            },
            [&](const tm::HComp& a) {
              const auto& b = *y.as<tm::HComp>();
              if (a.r != b.r || a.s != b.s || !cof_eq(hyps_, a.phi, b.phi))
                return ConvVerdict::unknown(kUnoriented);
              ConvVerdict v = conv_tp(a.tp, b.tp);
              if (!v.is_yes()) return v;
              std::string k = fresh(a.i, {free_names(a.tube), free_names(b.tube)});
              Conv inner = with_dim(k);
              Cof dom = Cof::join({Cof::equation(IExpr::var(k), a.r), a.phi});
              return inner.cases(dom, [&](Conv& c, const ISubst& s) {
                return c.conv(subst_i_tm(subst_i_tm(a.tube, a.i, IExpr::var(k)), s),
                              subst_i_tm(subst_i_tm(b.tube, b.i, IExpr::var(k)), s),
                              subst_i_tp(a.tp, s));
              });
            },
            [&](const auto&) { return ConvVerdict::unknown(kUnoriented); },
        },
        x.v());
  }

  ConvVerdict conv_tp(const Tp& a, const Tp& b) {
    if (!tick()) return ConvVerdict::unknown(kFuel);
    if (alpha_eq(a, b)) return ConvVerdict::yes();
    Tp x = whnf_tp(a), y = whnf_tp(b);
    if (budget_->out) return ConvVerdict::unknown(kFuel);
    if (alpha_eq(x, y)) return ConvVerdict::yes();

    for (const Tp* side : {&x, &y}) {
      if (auto* s = side->as<tp::Split>()) {
        ConvVerdict acc = ConvVerdict::yes();
        for (const auto& [g, body] : s->arms) {
          const Tp& other = side == &x ? y : x;
          acc = both(acc, cases(g, [&](Conv& c, const ISubst& sg) {
                       return c.conv_tp(subst_i_tp(body, sg), subst_i_tp(other, sg));
                     }));
          if (acc.is_no()) break;
        }
        return acc;
      }
    }

    if (x.index() != y.index()) {
      if (x.is<tp::El>() || y.is<tp::El>() || x.is<tp::Glue>() || y.is<tp::Glue>())
        return ConvVerdict::unknown(kUnoriented);
      return ConvVerdict::no();
    }
    return std::visit(
        overloaded{
            [&](const tp::Pi& p) { return binder_tp(p.x, p.dom, p.cod, *y.as<tp::Pi>()); },
            [&](const tp::Sigma& p) {
              const auto& q = *y.as<tp::Sigma>();
              return binder_tp(p.x, p.fst, p.snd, tp::Pi{q.x, q.fst, q.snd});
            },
            [&](const tp::El& e) { return conv(e.code, y.as<tp::El>()->code, tp::U{}); },
            [&](const tp::Path& p) {
              const auto& q = *y.as<tp::Path>();
              std::string k = fresh(p.i, {free_names(p.fam), free_names(q.fam)});
              ConvVerdict v = with_dim(k).conv_tp(subst_i_tp(p.fam, p.i, IExpr::var(k)),
                                                  subst_i_tp(q.fam, q.i, IExpr::var(k)));
              if (v.is_no()) return v;
              v = both(v, conv(p.lhs, q.lhs, subst_i_tp(p.fam, p.i, IExpr::zero())));
              if (v.is_no()) return v;
              return both(v, conv(p.rhs, q.rhs, subst_i_tp(p.fam, p.i, IExpr::one())));
            },
            [&](const tp::Glue& g) {
              const auto& h = *y.as<tp::Glue>();
              if (!cof_eq(hyps_, g.phi, h.phi)) return ConvVerdict::unknown(kUnoriented);
              ConvVerdict v = conv_tp(g.base, h.base);
              if (v.is_no()) return v;
              return both(v, cases(g.phi, [&](Conv& c, const ISubst& s) {
                            ConvVerdict w = c.conv_tp(subst_i_tp(g.fiber, s), subst_i_tp(h.fiber, s));
                            if (w.is_no()) return w;
                            Tp et = equiv_type(subst_i_tp(g.fiber, s), subst_i_tp(g.base, s));
                            return both(w, c.conv(subst_i_tm(g.equiv, s), subst_i_tm(h.equiv, s), et));
                          }));
            },
            [&](const auto&) { return ConvVerdict::yes(); },
        },
        x.v());
  }

 private:
  ConvVerdict binder_tp(const std::string& x, const Tp& dom, const Tp& cod, const tp::Pi& q) {
    ConvVerdict v = conv_tp(dom, q.dom);
    if (v.is_no()) return v;
    std::string z = fresh(x, {free_names(cod), free_names(q.cod)});
    return both(v, with_term(z, dom).conv_tp(subst_tp(cod, x, tm::Var{z}),
                                             subst_tp(q.cod, q.x, tm::Var{z})));
  }

  Ctx ctx_;
  std::vector<Cof> hyps_;
  Budget* budget_;
};

}  // namespace

ConvVerdict bounded_convert(const Ctx& ctx, const Tm& a, const Tm& b, std::size_t fuel,
                            const std::optional<Tp>& type) {
  Budget budget{fuel};
  Conv top(ctx, &budget);
  return top.cases(std::nullopt, [&](Conv& c, const ISubst& s) {
    std::optional<Tp> t;
    if (type) t = subst_i_tp(*type, s);
    return c.conv(subst_i_tm(a, s), subst_i_tm(b, s), t);
  });
}

ConvVerdict bounded_convert_tp(const Ctx& ctx, const Tp& a, const Tp& b, std::size_t fuel) {
  Budget budget{fuel};
  Conv top(ctx, &budget);
  return top.cases(std::nullopt, [&](Conv& c, const ISubst& s) {
    return c.conv_tp(subst_i_tp(a, s), subst_i_tp(b, s));
  });
}

Tm whnf(const Ctx& ctx, const Tm& t, std::size_t fuel) {
  Budget budget{fuel};
  return Conv(ctx, &budget).whnf(t);
}

Tp whnf_tp(const Ctx& ctx, const Tp& a, std::size_t fuel, bool keep_glue) {
  Budget budget{fuel};
  return Conv(ctx, &budget).whnf_tp(a, keep_glue);
}

std::optional<Tp> synth(const Ctx& ctx, const Tm& t, std::size_t fuel) {
  Budget budget{fuel};
  return Conv(ctx, &budget).synth(t);
}

}  // namespace cubnf
