#include "cubnf/engine.hpp"

namespace cubnf {

// ---------------------------------------------------------------------------
// Embedding

namespace {

Tp hit_type(HitKind k) {
  if (k == HitKind::WBool) return tp::WBool{};
  return tp::S1{};
}

}  // namespace

Tm embed(const Split<Nf>& s) {
  RawArms<Tm> arms;
  for (const auto& a : s.arms) arms.emplace_back(a.guard, embed(a.body));
  return tm::Split{std::move(arms)};
}

Tp embed(const Split<NfTp>& s) {
  RawArms<Tp> arms;
  for (const auto& a : s.arms) arms.emplace_back(a.guard, embed(a.body));
  return tp::Split{std::move(arms)};
}

Tp embed(const NeTp& a) { return tp::El{embed(a.code)}; }

Tm embed(const Ne& e) {
  return std::visit(
      overloaded{
          [](const ne::Var& v) -> Tm { return tm::Var{v.name}; },
          [](const ne::App& a) -> Tm { return tm::App{embed(a.head), embed(a.arg)}; },
          [](const ne::Fst& a) -> Tm { return tm::Fst{embed(a.head)}; },
          [](const ne::Snd& a) -> Tm { return tm::Snd{embed(a.head)}; },
          [](const ne::If& a) -> Tm {
            return tm::If{a.x, embed(a.motive), embed(a.scrut), embed(a.tcase), embed(a.fcase)};
          },
          [](const ne::PApp& a) -> Tm { return tm::PApp{embed(a.head), a.r}; },
          [](const ne::Unglue& a) -> Tm { return tm::Unglue{embed(a.head)}; },
          [](const ne::S1Elim& a) -> Tm {
            return tm::S1Elim{a.x, embed(a.motive), embed(a.scrut), embed(a.base), a.i,
                              embed(a.loop)};
          },
          [](const ne::Star&) -> Tm { throw StarUnguarded(); },
      },
      e.v());
}

Tm embed(const Nf& t) {
  return std::visit(
      overloaded{
          [](const nf::Lam& a) -> Tm { return tm::Lam{a.x, embed(a.body)}; },
          [](const nf::Pair& a) -> Tm { return tm::Pair{embed(a.fst), embed(a.snd)}; },
          [](const nf::True&) -> Tm { return tm::True{}; },
          [](const nf::False&) -> Tm { return tm::False{}; },
          [](const nf::Code& a) -> Tm { return tm::Code{embed(a.tp)}; },
          [](const nf::PLam& a) -> Tm { return tm::PLam{a.i, embed(a.body)}; },
          [](const nf::GlueIn& a) -> Tm { return tm::GlueIn{a.phi, embed(a.base), embed(a.part)}; },
          [](const nf::Base&) -> Tm { return tm::Base{}; },
          [](const nf::Loop& a) -> Tm { return tm::Loop{a.r}; },
          [](const nf::HComp& a) -> Tm {
            return tm::HComp{hit_type(a.kind), a.r, a.s, a.phi, a.i, embed(a.tube)};
          },
          [](const nf::HCompStuck& a) -> Tm {
            return tm::HComp{embed(a.tp), a.r, a.s, a.phi, a.i, embed(a.tube)};
          },
          [](const nf::CoeStuck& a) -> Tm {
            return tm::Coe{a.i, embed(a.fam), a.r, a.s, embed(a.arg)};
          },
          [](const nf::Up& a) -> Tm { return embed(a.ne); },
      },
      t.v());
}

Tp embed(const NfTp& a) {
  return std::visit(
      overloaded{
          [](const nftp::Pi& p) -> Tp { return tp::Pi{p.x, embed(p.dom), embed(p.cod)}; },
          [](const nftp::Sigma& p) -> Tp { return tp::Sigma{p.x, embed(p.fst), embed(p.snd)}; },
          [](const nftp::Bool&) -> Tp { return tp::Bool{}; },
          [](const nftp::WBool&) -> Tp { return tp::WBool{}; },
          [](const nftp::S1&) -> Tp { return tp::S1{}; },
          [](const nftp::U&) -> Tp { return tp::U{}; },
          [](const nftp::Path& p) -> Tp {
            return tp::Path{p.i, embed(p.fam), embed(p.lhs), embed(p.rhs)};
          },
          [](const nftp::Glue& g) -> Tp {
            return tp::Glue{g.phi, embed(g.base), embed(g.fiber), embed(g.equiv)};
          },
          [](const nftp::Up& u) -> Tp { return embed(u.tp); },
      },
      a.v());
}

// ---------------------------------------------------------------------------
// Decay rewriting

CanonStats& canon_stats() {
  static CanonStats stats;
  return stats;
}

namespace {

Cof eq(const IExpr& r, const IExpr& s) { return Cof::equation(r, s); }

class Canon {
 public:
  Canon(std::vector<Cof> hyps, RuleOrder order) : hyps_(std::move(hyps)), order_(order) {}

  bool holds(const Cof& phi) const { return entails(hyps_, phi); }

  template <class X>
  X record(const X& before, X after) {
    auto& st = canon_stats();
    ++st.steps;
    if (size(after) >= size(before)) ++st.violations;
    return after;
  }

  Nf go(const Nf& t) {
    if (order_ == RuleOrder::TopDown) {
      if (auto r = step(t)) return go(*r);
    }
    Nf c = children(t);
    if (auto r = step(c)) return go(*r);
    return c;
  }

  NfTp go(const NfTp& a) {
    if (order_ == RuleOrder::TopDown) {
      if (auto r = step(a)) return go(*r);
    }
    NfTp c = children(a);
    if (auto r = step(c)) return go(*r);
    return c;
  }

  NeTp go(const NeTp& a) { return NeTp{go(a.code)}; }

  template <class X>
  Split<X> go(const Split<X>& s) {
    Split<X> out;
    for (const auto& a : s.arms) {
      std::vector<Cof> hs;
      auto clauses = dnf(a.guard);
      if (clauses.size() == 1) {
        ISubst sg = clauses[0].contraction();
        for (const auto& h : hyps_) hs.push_back(csubst(h, sg));
      } else {
        hs = hyps_;
        hs.push_back(a.guard);
      }
      Canon inner(std::move(hs), order_);
      out.arms.push_back({a.guard, inner.go(a.body)});
    }
    return out;
  }

  Ne go(const Ne& e) {
    return std::visit(
        overloaded{
            [&](const ne::Var&) -> Ne { return e; },
            [&](const ne::Star&) -> Ne { return e; },
            [&](const ne::App& a) -> Ne { return ne::App{go(a.head), go(a.arg)}; },
            [&](const ne::Fst& a) -> Ne { return ne::Fst{go(a.head)}; },
            [&](const ne::Snd& a) -> Ne { return ne::Snd{go(a.head)}; },
            [&](const ne::If& a) -> Ne {
              return ne::If{a.x, go(a.motive), go(a.scrut), go(a.tcase), go(a.fcase)};
            },
            [&](const ne::PApp& a) -> Ne { return ne::PApp{go(a.head), a.r}; },
            [&](const ne::Unglue& a) -> Ne { return ne::Unglue{a.phi, go(a.head)}; },
            [&](const ne::S1Elim& a) -> Ne {
              return ne::S1Elim{a.x, go(a.motive), go(a.scrut), go(a.base), a.i, go(a.loop)};
            },
        },
        e.v());
  }

 private:
  template <class X>
  std::optional<X> select(const Split<X>& s) {
    if (const X* b = select_arm(hyps_, s)) return *b;
    return std::nullopt;
  }

  // The tube of an hcomp evaluated at i := s, once (r = s) or phi holds.
  std::optional<Nf> tube_at(const std::string& i, const Split<Nf>& tube, const IExpr& s) {
    NfSubst sub;
    sub.dims.emplace(i, s);
    return select(apply(tube, sub));
  }

  std::optional<Nf> step(const Nf& t) {
    std::optional<Nf> r = std::visit(
        overloaded{
            [&](const nf::Loop& l) -> std::optional<Nf> {
              if (l.r.is_endpoint()) return Nf(nf::Base{});
              return std::nullopt;
            },
            [&](const nf::Up& u) -> std::optional<Nf> {
              Cof f = frontier(u.ne);
              if (u.tp) f = Cof::join({frontier(*u.tp), f});
              if (u.ne.is<ne::Star>() || holds(f)) return select(u.backup);
              return std::nullopt;
            },
            [&](const nf::HComp& h) -> std::optional<Nf> {
              if (holds(Cof::join({eq(h.r, h.s), h.phi}))) return tube_at(h.i, h.tube, h.s);
              return std::nullopt;
            },
            [&](const nf::HCompStuck& h) -> std::optional<Nf> {
              if (holds(frontier(h.tp))) return select(h.backup);
              if (holds(Cof::join({eq(h.r, h.s), h.phi}))) return tube_at(h.i, h.tube, h.s);
              return std::nullopt;
            },
            [&](const nf::CoeStuck& c) -> std::optional<Nf> {
              if (holds(forall_elim(c.i, frontier(c.fam)))) return select(c.backup);
              if (holds(eq(c.r, c.s))) return c.arg;
              return std::nullopt;
            },
            [&](const nf::GlueIn& g) -> std::optional<Nf> {
              if (holds(g.phi)) return select(g.part);
              return std::nullopt;
            },
            [&](const auto&) -> std::optional<Nf> { return std::nullopt; },
        },
        t.v());
    if (r) return record(t, *r);
    return r;
  }

  std::optional<NfTp> step(const NfTp& a) {
    std::optional<NfTp> r;
    if (auto* g = a.as<nftp::Glue>()) {
      if (holds(g->phi)) r = select(g->fiber);
    } else if (auto* u = a.as<nftp::Up>()) {
      if (u->tp.code.is<ne::Star>() || holds(frontier(u->tp))) r = select(u->backup);
    }
    if (r) return record(a, *r);
    return r;
  }

  Nf children(const Nf& t) {
    return std::visit(
        overloaded{
            [&](const nf::Lam& a) -> Nf { return nf::Lam{a.x, go(a.body)}; },
            [&](const nf::Pair& a) -> Nf { return nf::Pair{go(a.fst), go(a.snd)}; },
            [&](const nf::Code& a) -> Nf { return nf::Code{go(a.tp)}; },
            [&](const nf::PLam& a) -> Nf { return nf::PLam{a.i, go(a.body)}; },
            [&](const nf::GlueIn& a) -> Nf { return nf::GlueIn{a.phi, go(a.base), go(a.part)}; },
            [&](const nf::HComp& a) -> Nf {
              return nf::HComp{a.kind, a.r, a.s, a.phi, a.i, go(a.tube)};
            },
            [&](const nf::HCompStuck& a) -> Nf {
              return nf::HCompStuck{go(a.tp), a.r,          a.s,       a.phi,
                                    a.i,      go(a.tube),   go(a.backup), a.declared};
            },
            [&](const nf::CoeStuck& a) -> Nf {
              return nf::CoeStuck{a.i, go(a.fam), a.r, a.s, go(a.arg), go(a.backup), a.declared};
            },
            [&](const nf::Up& a) -> Nf {
              std::optional<NeTp> tp;
              if (a.tp) tp = go(*a.tp);
              return nf::Up{a.tag, go(a.ne), tp, go(a.backup), a.declared};
            },
            [&](const auto&) -> Nf { return t; },
        },
        t.v());
  }

  NfTp children(const NfTp& a) {
    return std::visit(
        overloaded{
            [&](const nftp::Pi& p) -> NfTp { return nftp::Pi{p.x, go(p.dom), go(p.cod)}; },
            [&](const nftp::Sigma& p) -> NfTp { return nftp::Sigma{p.x, go(p.fst), go(p.snd)}; },
            [&](const nftp::Path& p) -> NfTp {
              return nftp::Path{p.i, go(p.fam), go(p.lhs), go(p.rhs)};
            },
            [&](const nftp::Glue& g) -> NfTp {
              return nftp::Glue{g.phi, go(g.base), go(g.fiber), go(g.equiv)};
            },
            [&](const nftp::Up& u) -> NfTp { return nftp::Up{go(u.tp), go(u.backup), u.declared}; },
            [&](const auto&) -> NfTp { return a; },
        },
        a.v());
  }

  std::vector<Cof> hyps_;
  RuleOrder order_;
};

}  // namespace

Nf canon(const Ctx& ctx, const Nf& t, RuleOrder order) { return Canon(ctx.cof_hyps(), order).go(t); }
NfTp canon(const Ctx& ctx, const NfTp& a, RuleOrder order) {
  return Canon(ctx.cof_hyps(), order).go(a);
}
Ne canon(const Ctx& ctx, const Ne& e, RuleOrder order) { return Canon(ctx.cof_hyps(), order).go(e); }
Split<Nf> canon(const Ctx& ctx, const Split<Nf>& s, RuleOrder order) {
  return Canon(ctx.cof_hyps(), order).go(s);
}
Split<NfTp> canon(const Ctx& ctx, const Split<NfTp>& s, RuleOrder order) {
  return Canon(ctx.cof_hyps(), order).go(s);
}

// ---------------------------------------------------------------------------
// Substitution and equality

namespace {

std::vector<Cof> target_hyps(const Ctx& ctx, const ISubst& s) {
  std::vector<Cof> out;
  for (const auto& h : ctx.cof_hyps()) out.push_back(csubst(h, s));
  return out;
}

NfSubst dims_only(const ISubst& s) {
  NfSubst out;
  out.dims = s;
  return out;
}

// Runs `f` once per consistent clause of the context's assumptions, with the
// substitution contracting that clause.
template <class F>
bool all_clauses(const Ctx& ctx, F f) {
  for (const auto& b : dnf(Cof::meet(ctx.cof_hyps())))
    if (!f(b.contraction())) return false;
  return true;
}

}  // namespace

Nf subst_nf(const Ctx& ctx, const Nf& t, const ISubst& s) {
  return Canon(target_hyps(ctx, s), RuleOrder::BottomUp).go(apply(t, dims_only(s)));
}

NfTp subst_nf(const Ctx& ctx, const NfTp& a, const ISubst& s) {
  return Canon(target_hyps(ctx, s), RuleOrder::BottomUp).go(apply(a, dims_only(s)));
}

Split<Nf> subst_nf(const Ctx& ctx, const Split<Nf>& t, const ISubst& s) {
  return Canon(target_hyps(ctx, s), RuleOrder::BottomUp).go(apply(t, dims_only(s)));
}

Nf subst_i_nf(const Ctx& ctx, const Nf& t, const std::string& i, const IExpr& r) {
  return subst_nf(ctx, t, ISubst{{i, r}});
}

bool eq_nf(const Ctx& ctx, const Nf& a, const Nf& b) {
  return all_clauses(ctx, [&](const ISubst& s) {
    Canon c({}, RuleOrder::BottomUp);
    return struct_eq({}, c.go(apply(a, dims_only(s))), c.go(apply(b, dims_only(s))));
  });
}

bool eq_nf(const Ctx& ctx, const NfTp& a, const NfTp& b) {
  return all_clauses(ctx, [&](const ISubst& s) {
    Canon c({}, RuleOrder::BottomUp);
    return struct_eq({}, c.go(apply(a, dims_only(s))), c.go(apply(b, dims_only(s))));
  });
}

bool eq_nf(const Ctx& ctx, const Split<Nf>& a, const Split<Nf>& b) {
  return all_clauses(ctx, [&](const ISubst& s) {
    Canon c({}, RuleOrder::BottomUp);
    Split<Nf> x = normalize_arms(c.go(apply(a, dims_only(s))));
    Split<Nf> y = normalize_arms(c.go(apply(b, dims_only(s))));
    if (x.arms.size() != y.arms.size()) return false;
    for (std::size_t k = 0; k < x.arms.size(); ++k) {
      if (x.arms[k].guard != y.arms[k].guard) return false;
      if (!struct_eq({}, x.arms[k].body, y.arms[k].body)) return false;
    }
    return true;
  });
}

}  // namespace cubnf
