#include "cubnf/check.hpp"

#include <algorithm>

#include "cubnf/engine.hpp"
#include "cubnf/print.hpp"

namespace cubnf {

class PathSeg {
 public:
  PathSeg(Checker* c, std::string seg) : c_(c) { c_->path_.push_back(std::move(seg)); }
  ~PathSeg() { c_->path_.pop_back(); }
  PathSeg(const PathSeg&) = delete;
  PathSeg& operator=(const PathSeg&) = delete;

 private:
  Checker* c_;
};

namespace {

Tp el(const NeTp& a) { return tp::El{embed(a.code)}; }

Cof eq(const IExpr& a, const IExpr& b) { return Cof::equation(a, b); }

template <class X>
bool same_domain(const Cof& phi, const Split<X>& s) {
  std::vector<Branch> got;
  for (const auto& a : s.arms) {
    auto d = dnf(a.guard);
    if (d.size() != 1) return false;
    got.push_back(d[0]);
  }
  std::sort(got.begin(), got.end());
  got.erase(std::unique(got.begin(), got.end()), got.end());
  return got == dnf(phi) && got.size() == s.arms.size();
}

template <class X>
void require_domain(const Cof& phi, const Split<X>& s) {
  if (!same_domain(phi, s))
    throw CheckFailure({"backup-domain-mismatch", "",
                        "backup does not split over the frontier " + phi.str()});
}

}  // namespace

void Checker::fail(const std::string& kind, const std::string& msg) const {
  throw CheckFailure({kind, path(), msg});
}

std::string Checker::path() const {
  std::string out;
  for (const auto& s : path_) {
    if (!out.empty()) out += '/';
    out += s;
  }
  return out;
}

void Checker::undecided(const std::string& msg) {
  if (opts_.strict) fail("side-condition-unknown", msg);
  warnings_.push_back({"side-condition-unknown", path(), msg});
}

void Checker::require_cof_free(const Ctx& ctx) const {
  if (ctx.has_cofs())
    fail("rule-mismatch", "normal forms are checked without cofibration assumptions");
}

void Checker::scope(const Ctx& ctx, const IExpr& r) const {
  if (r.is_var() && !ctx.has_dim(r.name())) fail("unbound-name", "unbound dimension " + r.name());
}

void Checker::scope(const Ctx& ctx, const Cof& phi) const {
  for (const auto& v : cof_vars(phi))
    if (!ctx.has_dim(v)) fail("unbound-name", "unbound dimension " + v);
}

std::string Checker::fresh(const Ctx& ctx, const std::string& base,
                           const std::set<std::string>& more) const {
  std::set<std::string> avoid = ctx.names();
  avoid.insert(more.begin(), more.end());
  return fresh_name(base, avoid);
}

void Checker::expect_tp(const Ctx& ctx, const Tp& want, const Tp& got, const std::string& what) {
  auto v = bounded_convert_tp(ctx, want, got, opts_.fuel);
  if (v.is_no())
    fail("rule-mismatch", what + ": expected " + print(want) + ", got " + print(got));
  if (v.is_unknown()) undecided(what + ": " + v.str());
}

void Checker::side(const Ctx& ctx, const Tm& a, const Tm& b, const std::optional<Tp>& type,
                   const std::string& what) {
  auto v = bounded_convert(ctx, a, b, opts_.fuel, type);
  if (v.is_no()) fail("side-condition-failed", what + ": " + print(a) + " vs " + print(b));
  if (v.is_unknown()) undecided(what + ": " + v.str());
}

void Checker::side_tp(const Ctx& ctx, const Tp& a, const Tp& b, const std::string& what) {
  auto v = bounded_convert_tp(ctx, a, b, opts_.fuel);
  if (v.is_no()) fail("side-condition-failed", what + ": " + print(a) + " vs " + print(b));
  if (v.is_unknown()) undecided(what + ": " + v.str());
}

void Checker::declared(const std::optional<Cof>& decl, const Cof& computed) {
  if (decl && !cof_eq({}, *decl, computed))
    fail("frontier-mismatch", "declared " + decl->str() + ", computed " + computed.str());
}

Tm Checker::embed_checked(const Nf& t) {
  try {
    return embed(canon(Ctx{}, t));
  } catch (const StarUnguarded&) {
    fail("star-unguarded", "collapsed neutral outside its frontier");
  }
}

template <class X>
void Checker::split_generic(const Ctx& ctx, const Cof& phi, const Split<X>& s,
                            const std::string& shape_kind,
                            const std::function<void(const Ctx&, const Branch&, const X&)>& leaf) {
  scope(ctx, phi);
  const auto want = dnf(phi);
  std::vector<bool> used(want.size(), false);
  std::vector<Branch> got;
  for (std::size_t k = 0; k < s.arms.size(); ++k) {
    PathSeg seg(this, "arm" + std::to_string(k));
    const Cof& g = s.arms[k].guard;
    scope(ctx, g);
    auto d = dnf(g);
    if (d.size() != 1) fail(shape_kind, "guard " + g.str() + " is not a consistent conjunction");
    auto it = std::find(want.begin(), want.end(), d[0]);
    if (it == want.end()) fail(shape_kind, "guard " + g.str() + " is not a clause of " + phi.str());
    auto idx = static_cast<std::size_t>(it - want.begin());
    if (used[idx]) fail(shape_kind, "duplicate arm for " + g.str());
    used[idx] = true;
    got.push_back(d[0]);
  }
  for (std::size_t i = 0; i < want.size(); ++i)
    if (!used[i]) fail(shape_kind, "no arm for clause " + want[i].to_cof().str() + " of " + phi.str());

  for (std::size_t k = 0; k < s.arms.size(); ++k) {
    PathSeg seg(this, "arm" + std::to_string(k));
    leaf(ctx.contract(got[k].contraction()), got[k], s.arms[k].body);
  }

  for (std::size_t k = 0; k < got.size(); ++k)
    for (std::size_t l = k + 1; l < got.size(); ++l) {
      Branch m = got[k].meet(got[l]);
      if (!m.consistent()) continue;
      ISubst sm = m.contraction();
      Ctx cm = ctx.contract(sm);
      X a = subst_nf(ctx.contract(got[k].contraction()), s.arms[k].body, sm);
      X b = subst_nf(ctx.contract(got[l].contraction()), s.arms[l].body, sm);
      if (!eq_nf(cm, a, b)) {
        PathSeg seg(this, "arm" + std::to_string(k) + "&arm" + std::to_string(l));
        fail("overlap-disagreement", "arms disagree on " + m.to_cof().str());
      }
    }
}

void Checker::check_split(const Ctx& ctx, const Cof& phi, const Split<Nf>& s, const Tp& type,
                          const std::string& shape_kind) {
  split_generic<Nf>(ctx, phi, s, shape_kind, [&](const Ctx& c, const Branch& b, const Nf& body) {
    check_nf(c, body, subst_i_tp(type, b.contraction()));
  });
}

void Checker::check_split_tp(const Ctx& ctx, const Cof& phi, const Split<NfTp>& s,
                             const std::string& shape_kind) {
  split_generic<NfTp>(ctx, phi, s, shape_kind,
                      [&](const Ctx& c, const Branch&, const NfTp& body) { check_nftp(c, body); });
}

void Checker::backup_sides(const Ctx& ctx, const Tm& raw, const Split<Nf>& backup,
                           const Tp& type) {
  for (std::size_t k = 0; k < backup.arms.size(); ++k) {
    PathSeg seg(this, "backup" + std::to_string(k));
    ISubst s = dnf(backup.arms[k].guard).at(0).contraction();
    side(ctx.contract(s), subst_i_tm(raw, s), embed_checked(backup.arms[k].body),
         subst_i_tp(type, s), "backup agrees with the stuck term");
  }
}

// ---------------------------------------------------------------------------

void Checker::check_nf(const Ctx& ctx, const Nf& t, const Tp& type) {
  require_cof_free(ctx);
  const Tp A = whnf_tp(ctx, type, opts_.fuel, t.is<nf::GlueIn>());
  auto mismatch = [&](const std::string& what) {
    fail("rule-mismatch", what + " at type " + print(A));
  };

  std::visit(
      overloaded{
          [&](const nf::Lam& l) {
            auto* pi = A.as<tp::Pi>();
            if (!pi) mismatch("lambda");
            PathSeg seg(this, "lam");
            std::string x = fresh(ctx, l.x, free_names(pi->cod));
            check_nf(ctx.with_term(x, pi->dom), rename_term(l.body, l.x, x),
                     subst_tp(pi->cod, pi->x, tm::Var{x}));
          },
          [&](const nf::Pair& p) {
            auto* sg = A.as<tp::Sigma>();
            if (!sg) mismatch("pair");
            {
              PathSeg seg(this, "fst");
              check_nf(ctx, p.fst, sg->fst);
            }
            PathSeg seg(this, "snd");
            check_nf(ctx, p.snd, subst_tp(sg->snd, sg->x, embed_checked(p.fst)));
          },
          [&](const nf::True&) {
            if (!A.is<tp::Bool>() && !A.is<tp::WBool>()) mismatch("true");
          },
          [&](const nf::False&) {
            if (!A.is<tp::Bool>() && !A.is<tp::WBool>()) mismatch("false");
          },
          [&](const nf::Code& c) {
            if (!A.is<tp::U>()) mismatch("code");
            PathSeg seg(this, "code");
            check_nftp(ctx, c.tp);
          },
          [&](const nf::PLam& p) {
            auto* path = A.as<tp::Path>();
            if (!path) mismatch("path abstraction");
            PathSeg seg(this, "plam");
            std::string i = fresh(ctx, p.i, free_names(path->fam));
            Nf body = rename_dim(p.body, p.i, i);
            Ctx ci = ctx.with_dim(i);
            check_nf(ci, body, subst_i_tp(path->fam, path->i, IExpr::var(i)));
            for (auto [end, rhs] : {std::pair{IExpr::zero(), path->lhs}, {IExpr::one(), path->rhs}}) {
              Nf b = subst_i_nf(ci, body, i, end);
              side(ctx, embed_checked(b), rhs, subst_i_tp(path->fam, path->i, end),
                   "path boundary at " + end.str());
            }
          },
          [&](const nf::GlueIn& g) {
            scope(ctx, g.phi);
            auto* glue = A.as<tp::Glue>();
            if (!glue) mismatch("glue");
            if (!cof_eq({}, g.phi, glue->phi))
              fail("rule-mismatch", "glue cofibration " + g.phi.str() + " differs from " +
                                        glue->phi.str());
            {
              PathSeg seg(this, "base");
              check_nf(ctx, g.base, glue->base);
            }
            PathSeg seg(this, "part");
            check_split(ctx, g.phi, g.part, glue->fiber);
            Tm base = embed_checked(g.base);
            for (const auto& arm : g.part.arms) {
              ISubst s = dnf(arm.guard).at(0).contraction();
              side(ctx.contract(s), subst_i_tm(base, s),
                   apply_equiv(subst_i_tm(glue->equiv, s), embed_checked(arm.body)),
                   subst_i_tp(glue->base, s), "glue base is the image of its part");
            }
          },
          [&](const nf::Base&) {
            if (!A.is<tp::S1>()) mismatch("base");
          },
          [&](const nf::Loop& l) {
            if (!A.is<tp::S1>()) mismatch("loop");
            scope(ctx, l.r);
          },
          [&](const nf::HComp& h) {
            if (h.kind == HitKind::WBool ? !A.is<tp::WBool>() : !A.is<tp::S1>())
              mismatch(std::string("hcomp ") + hit_name(h.kind));
            scope(ctx, h.r);
            scope(ctx, h.s);
            scope(ctx, h.phi);
            PathSeg seg(this, "tube");
            std::string i = fresh(ctx, h.i, {});
            Split<Nf> tube = apply(h.tube, NfSubst{{}, {{h.i, IExpr::var(i)}}});
            check_split(ctx.with_dim(i), Cof::join({eq(IExpr::var(i), h.r), h.phi}), tube, A);
          },
          [&](const nf::HCompStuck& h) {
            scope(ctx, h.r);
            scope(ctx, h.s);
            scope(ctx, h.phi);
            Cof psi = Cof::bot();
            {
              PathSeg seg(this, "type");
              psi = check_netp(ctx, h.tp);
            }
            Tp ty = el(h.tp);
            expect_tp(ctx, A, ty, "hcomp type");
            declared(h.declared, psi);
            std::string i = fresh(ctx, h.i, {});
            Split<Nf> tube = apply(h.tube, NfSubst{{}, {{h.i, IExpr::var(i)}}});
            {
              PathSeg seg(this, "tube");
              check_split(ctx.with_dim(i), Cof::join({eq(IExpr::var(i), h.r), h.phi}), tube, ty);
            }
            PathSeg seg(this, "backup");
            check_split(ctx, psi, h.backup, A, "backup-domain-mismatch");
            Tm raw = tm::True{};
            try {
              raw = tm::HComp{ty, h.r, h.s, h.phi, i, embed(canon(Ctx{}.with_dim(i), tube))};
            } catch (const StarUnguarded&) {
              fail("star-unguarded", "collapsed neutral in hcomp tube");
            }
            backup_sides(ctx, raw, h.backup, A);
          },
          [&](const nf::CoeStuck& c) {
            scope(ctx, c.r);
            scope(ctx, c.s);
            std::string i = fresh(ctx, c.i, {});
            NeTp fam = apply(c.fam, NfSubst{{}, {{c.i, IExpr::var(i)}}});
            Cof psi = Cof::bot();
            {
              PathSeg seg(this, "line");
              psi = check_netp(ctx.with_dim(i), fam);
            }
            Cof chi = forall_elim(i, psi);
            Tp line = el(fam);
            expect_tp(ctx, A, subst_i_tp(line, i, c.s), "coe target");
            {
              PathSeg seg(this, "arg");
              check_nf(ctx, c.arg, subst_i_tp(line, i, c.r));
            }
            declared(c.declared, chi);
            PathSeg seg(this, "backup");
            check_split(ctx, chi, c.backup, A, "backup-domain-mismatch");
            backup_sides(ctx, tm::Coe{i, line, c.r, c.s, embed_checked(c.arg)}, c.backup, A);
          },
          [&](const nf::Up& u) {
            if (A.is<tp::U>()) mismatch("stabilized neutral");
            NeInfo info{std::nullopt, Cof::bot()};
            {
              PathSeg seg(this, "ne");
              info = check_ne(ctx, u.ne);
            }
            Cof f = info.frontier;
            if (u.tag == UpTag::El) {
              if (!u.tp) fail("rule-mismatch", "up el without a neutral type");
              Cof psi = Cof::bot();
              {
                PathSeg seg(this, "type");
                psi = check_netp(ctx, *u.tp);
              }
              Tp ty = el(*u.tp);
              expect_tp(ctx, A, ty, "up el");
              if (info.type) expect_tp(ctx, ty, *info.type, "neutral type");
              f = Cof::join({info.frontier, psi});
            } else {
              if (u.tp) fail("rule-mismatch", "neutral type given for a closed type");
              bool ok = (u.tag == UpTag::Bool && A.is<tp::Bool>()) ||
                        (u.tag == UpTag::WBool && A.is<tp::WBool>()) ||
                        (u.tag == UpTag::S1 && A.is<tp::S1>());
              if (!ok) mismatch(std::string("up ") + tag_name(u.tag));
              if (info.type) expect_tp(ctx, A, *info.type, "neutral type");
            }
            declared(u.declared, f);
            PathSeg seg(this, "backup");
            check_split(ctx, f, u.backup, A, "backup-domain-mismatch");
            if (!has_star(u.ne)) {
              Tm raw = tm::True{};
              try {
                raw = embed(canon(Ctx{}, u.ne));
              } catch (const StarUnguarded&) {
                fail("star-unguarded", "collapsed neutral in an argument");
              }
              backup_sides(ctx, raw, u.backup, A);
            }
          },
      },
      t.v());
}

NeInfo Checker::check_ne(const Ctx& ctx, const Ne& e) {
  require_cof_free(ctx);
  auto ne_tm = [&](const Ne& n) -> Tm {
    try {
      return embed(canon(Ctx{}, n));
    } catch (const StarUnguarded&) {
      fail("star-unguarded", "collapsed neutral in a dependent position");
    }
  };
  auto head_type = [&](const Ne& h) {
    PathSeg seg(this, "head");
    return check_ne(ctx, h);
  };
  auto motive = [&](const std::string& x0, const NfTp& m, const Tp& dom, std::string& x) -> Tp {
    PathSeg seg(this, "motive");
    x = fresh(ctx, x0, {});
    NfTp m2 = rename_term(m, x0, x);
    check_nftp(ctx.with_term(x, dom), m2);
    try {
      return embed(canon(Ctx{}, m2));
    } catch (const StarUnguarded&) {
      fail("star-unguarded", "collapsed neutral in a motive");
    }
  };

  return std::visit(
      overloaded{
          [&](const ne::Var& v) -> NeInfo {
            if (!ctx.has_term(v.name)) fail("unbound-name", "unbound variable " + v.name);
            return {ctx.lookup(v.name), Cof::bot()};
          },
          [&](const ne::App& a) -> NeInfo {
            NeInfo h = head_type(a.head);
            if (!h.type) return {std::nullopt, h.frontier};
            Tp t = whnf_tp(ctx, *h.type, opts_.fuel);
            auto* pi = t.as<tp::Pi>();
            if (!pi) fail("rule-mismatch", "application of a term of type " + print(t));
            PathSeg seg(this, "arg");
            check_nf(ctx, a.arg, pi->dom);
            return {subst_tp(pi->cod, pi->x, embed_checked(a.arg)), h.frontier};
          },
          [&](const ne::Fst& a) -> NeInfo {
            NeInfo h = head_type(a.head);
            if (!h.type) return {std::nullopt, h.frontier};
            Tp t = whnf_tp(ctx, *h.type, opts_.fuel);
            auto* sg = t.as<tp::Sigma>();
            if (!sg) fail("rule-mismatch", "projection from a term of type " + print(t));
            return {sg->fst, h.frontier};
          },
          [&](const ne::Snd& a) -> NeInfo {
            NeInfo h = head_type(a.head);
            if (!h.type) return {std::nullopt, h.frontier};
            Tp t = whnf_tp(ctx, *h.type, opts_.fuel);
            auto* sg = t.as<tp::Sigma>();
            if (!sg) fail("rule-mismatch", "projection from a term of type " + print(t));
            return {subst_tp(sg->snd, sg->x, tm::Fst{ne_tm(a.head)}), h.frontier};
          },
          [&](const ne::If& a) -> NeInfo {
            NeInfo s = head_type(a.scrut);
            if (s.type) expect_tp(ctx, tp::Bool{}, *s.type, "if scrutinee");
            std::string x;
            Tp p = motive(a.x, a.motive, tp::Bool{}, x);
            {
              PathSeg seg(this, "true");
              check_nf(ctx, a.tcase, subst_tp(p, x, tm::True{}));
            }
            {
              PathSeg seg(this, "false");
              check_nf(ctx, a.fcase, subst_tp(p, x, tm::False{}));
            }
            if (has_star(a.scrut)) return {std::nullopt, s.frontier};
            return {subst_tp(p, x, ne_tm(a.scrut)), s.frontier};
          },
          [&](const ne::PApp& a) -> NeInfo {
            scope(ctx, a.r);
            NeInfo h = head_type(a.head);
            Cof f = Cof::join({h.frontier, eq(a.r, IExpr::zero()), eq(a.r, IExpr::one())});
            if (!h.type) return {std::nullopt, f};
            Tp t = whnf_tp(ctx, *h.type, opts_.fuel);
            auto* path = t.as<tp::Path>();
            if (!path) fail("rule-mismatch", "path application of a term of type " + print(t));
            return {subst_i_tp(path->fam, path->i, a.r), f};
          },
          [&](const ne::Unglue& a) -> NeInfo {
            scope(ctx, a.phi);
            NeInfo h = head_type(a.head);
            Cof f = Cof::join({h.frontier, a.phi});
            if (!h.type) return {std::nullopt, f};
            Tp t = whnf_tp(ctx, *h.type, opts_.fuel, true);
            auto* glue = t.as<tp::Glue>();
            if (!glue) fail("rule-mismatch", "unglue of a term of type " + print(t));
            if (!cof_eq({}, glue->phi, a.phi))
              fail("rule-mismatch", "unglue cofibration " + a.phi.str() + " differs from " +
                                        glue->phi.str());
            return {glue->base, f};
          },
          [&](const ne::S1Elim& a) -> NeInfo {
            NeInfo s = head_type(a.scrut);
            if (s.type) expect_tp(ctx, tp::S1{}, *s.type, "circle eliminator scrutinee");
            std::string x;
            Tp p = motive(a.x, a.motive, tp::S1{}, x);
            {
              PathSeg seg(this, "base");
              check_nf(ctx, a.base, subst_tp(p, x, tm::Base{}));
            }
            PathSeg seg(this, "loop");
            std::string i = fresh(ctx, a.i, free_names(p));
            Nf loop = rename_dim(a.loop, a.i, i);
            Ctx ci = ctx.with_dim(i);
            check_nf(ci, loop, subst_tp(p, x, tm::Loop{IExpr::var(i)}));
            for (const auto& end : {IExpr::zero(), IExpr::one()})
              if (!eq_nf(ctx, subst_i_nf(ci, loop, i, end), a.base))
                fail("side-condition-failed", "loop case at " + end.str() + " differs from base case");
            if (has_star(a.scrut)) return {std::nullopt, s.frontier};
            return {subst_tp(p, x, ne_tm(a.scrut)), s.frontier};
          },
          [&](const ne::Star& a) -> NeInfo {
            scope(ctx, a.phi);
            if (!entails({}, a.phi))
              fail("rule-mismatch", "collapsed neutral with frontier " + a.phi.str() + " not entailed");
            return {std::nullopt, a.phi};
          },
      },
      e.v());
}

Cof Checker::check_netp(const Ctx& ctx, const NeTp& a) {
  NeInfo info = check_ne(ctx, a.code);
  if (info.type) expect_tp(ctx, tp::U{}, *info.type, "neutral type code");
  return info.frontier;
}

void Checker::check_nftp(const Ctx& ctx, const NfTp& a) {
  require_cof_free(ctx);
  auto embed_tp = [&](const NfTp& b) -> Tp {
    try {
      return embed(canon(Ctx{}, b));
    } catch (const StarUnguarded&) {
      fail("star-unguarded", "collapsed neutral in a type");
    }
  };
  auto binder = [&](const std::string& x0, const NfTp& dom, const NfTp& cod) {
    {
      PathSeg seg(this, "dom");
      check_nftp(ctx, dom);
    }
    PathSeg seg(this, "cod");
    std::string x = fresh(ctx, x0, {});
    check_nftp(ctx.with_term(x, embed_tp(dom)), rename_term(cod, x0, x));
  };

  std::visit(
      overloaded{
          [&](const nftp::Pi& p) { binder(p.x, p.dom, p.cod); },
          [&](const nftp::Sigma& s) { binder(s.x, s.fst, s.snd); },
          [&](const nftp::Bool&) {},
          [&](const nftp::WBool&) {},
          [&](const nftp::S1&) {},
          [&](const nftp::U&) {},
          [&](const nftp::Path& p) {
            std::string i = fresh(ctx, p.i, {});
            NfTp fam = rename_dim(p.fam, p.i, i);
            {
              PathSeg seg(this, "fam");
              check_nftp(ctx.with_dim(i), fam);
            }
            Tp f = embed_tp(fam);
            {
              PathSeg seg(this, "lhs");
              check_nf(ctx, p.lhs, subst_i_tp(f, i, IExpr::zero()));
            }
            PathSeg seg(this, "rhs");
            check_nf(ctx, p.rhs, subst_i_tp(f, i, IExpr::one()));
          },
          [&](const nftp::Glue& g) {
            scope(ctx, g.phi);
            {
              PathSeg seg(this, "base");
              check_nftp(ctx, g.base);
            }
            {
              PathSeg seg(this, "fiber");
              check_split_tp(ctx, g.phi, g.fiber);
            }
            Tp base = embed_tp(g.base);
            PathSeg seg(this, "equiv");
            split_generic<Nf>(ctx, g.phi, g.equiv, "wrong-shape",
                              [&](const Ctx& c, const Branch& b, const Nf& e) {
                                const NfTp* fib = nullptr;
                                for (const auto& arm : g.fiber.arms)
                                  if (dnf(arm.guard).at(0) == b) fib = &arm.body;
                                check_nf(c, e,
                                         equiv_type(embed_tp(*fib),
                                                    subst_i_tp(base, b.contraction())));
                              });
          },
          [&](const nftp::Up& u) {
            Cof psi = Cof::bot();
            {
              PathSeg seg(this, "type");
              psi = check_netp(ctx, u.tp);
            }
            declared(u.declared, psi);
            PathSeg seg(this, "backup");
            check_split_tp(ctx, psi, u.backup, "backup-domain-mismatch");
            Tp raw = el(u.tp);
            for (std::size_t k = 0; k < u.backup.arms.size(); ++k) {
              PathSeg arm(this, "backup" + std::to_string(k));
              ISubst s = dnf(u.backup.arms[k].guard).at(0).contraction();
              side_tp(ctx.contract(s), subst_i_tp(raw, s), embed_tp(u.backup.arms[k].body),
                      "type backup agrees with the neutral type");
            }
          },
      },
      a.v());
}

// ---------------------------------------------------------------------------

Nf mk_up(const Ctx& ctx, UpTag tag, const Ne& ne, const std::optional<NeTp>& tp,
         const Split<Nf>& backup) {
  Cof f = tp ? Cof::join({frontier(ne), frontier(*tp)}) : frontier(ne);
  require_domain(f, backup);
  return canon(ctx, Nf(nf::Up{tag, ne, tp, backup, std::nullopt}));
}

NfTp mk_up_tp(const Ctx& ctx, const NeTp& tp, const Split<NfTp>& backup) {
  require_domain(frontier(tp), backup);
  return canon(ctx, NfTp(nftp::Up{tp, backup, std::nullopt}));
}

Nf mk_hcomp_stuck(const Ctx& ctx, const NeTp& tp, const IExpr& r, const IExpr& s, const Cof& phi,
                  const std::string& i, const Split<Nf>& tube, const Split<Nf>& backup) {
  require_domain(frontier(tp), backup);
  return canon(ctx, Nf(nf::HCompStuck{tp, r, s, phi, i, tube, backup, std::nullopt}));
}

Nf mk_coe_stuck(const Ctx& ctx, const std::string& i, const NeTp& fam, const IExpr& r,
                const IExpr& s, const Nf& arg, const Split<Nf>& backup) {
  require_domain(forall_elim(i, frontier(fam)), backup);
  return canon(ctx, Nf(nf::CoeStuck{i, fam, r, s, arg, backup, std::nullopt}));
}

}  // namespace cubnf
