#include "cubnf/print.hpp"

namespace cubnf {

namespace {

SExpr A(std::string s) {
  SExpr out;
  out.atom = std::move(s);
  return out;
}

SExpr L(std::vector<SExpr> items) {
  SExpr out;
  out.kind = SExpr::Kind::List;
  out.items = std::move(items);
  return out;
}

SExpr bind(const std::string& x, SExpr body) { return L({A(x), std::move(body)}); }

template <class X>
SExpr raw_arms(const char* head, const RawArms<X>& arms) {
  std::vector<SExpr> items{A(head)};
  for (const auto& [g, b] : arms) items.push_back(L({to_sexpr(g), to_sexpr(b)}));
  return L(std::move(items));
}

template <class X>
SExpr split(const Split<X>& s) {
  std::vector<SExpr> items{A("split")};
  for (const auto& a : s.arms) items.push_back(L({to_sexpr(a.guard), to_sexpr(a.body)}));
  return L(std::move(items));
}

void declared(std::vector<SExpr>& items, const std::optional<Cof>& phi) {
  if (phi) items.push_back(L({A("frontier"), to_sexpr(*phi)}));
}

}  // namespace

SExpr to_sexpr(const IExpr& r) { return A(r.str()); }

SExpr to_sexpr(const Cof& phi) {
  if (phi.kind() == Cof::Kind::Eq) return L({A("="), to_sexpr(phi.lhs()), to_sexpr(phi.rhs())});
  if (phi.is_top()) return A("top");
  if (phi.is_bot()) return A("bot");
  std::vector<SExpr> items{A(phi.kind() == Cof::Kind::Meet ? "and" : "or")};
  for (const auto& a : phi.args()) items.push_back(to_sexpr(a));
  return L(std::move(items));
}

SExpr to_sexpr(const Tp& a) {
  return std::visit(
      overloaded{
          [](const tp::Pi& p) { return L({A("pi"), bind(p.x, to_sexpr(p.dom)), to_sexpr(p.cod)}); },
          [](const tp::Sigma& p) {
            return L({A("sigma"), bind(p.x, to_sexpr(p.fst)), to_sexpr(p.snd)});
          },
          [](const tp::Bool&) { return A("bool"); },
          [](const tp::WBool&) { return A("wbool"); },
          [](const tp::S1&) { return A("s1"); },
          [](const tp::U&) { return A("U"); },
          [](const tp::El& e) { return L({A("el"), to_sexpr(e.code)}); },
          [](const tp::Path& p) {
            SExpr fam = free_names(p.fam).count(p.i) ? bind(p.i, to_sexpr(p.fam)) : to_sexpr(p.fam);
            return L({A("path"), fam, to_sexpr(p.lhs), to_sexpr(p.rhs)});
          },
          [](const tp::Glue& g) {
            return L({A("glue"), to_sexpr(g.phi), to_sexpr(g.base), to_sexpr(g.fiber),
                      to_sexpr(g.equiv)});
          },
          [](const tp::Split& s) { return raw_arms("tsplit", s.arms); },
      },
      a.v());
}

SExpr to_sexpr(const Tm& t) {
  return std::visit(
      overloaded{
          [](const tm::Var& v) { return A(v.name); },
          [](const tm::Lam& l) { return L({A("lam"), A(l.x), to_sexpr(l.body)}); },
          [](const tm::App& a) { return L({A("app"), to_sexpr(a.fn), to_sexpr(a.arg)}); },
          [](const tm::Pair& p) { return L({A("pair"), to_sexpr(p.fst), to_sexpr(p.snd)}); },
          [](const tm::Fst& p) { return L({A("fst"), to_sexpr(p.pair)}); },
          [](const tm::Snd& p) { return L({A("snd"), to_sexpr(p.pair)}); },
          [](const tm::True&) { return A("true"); },
          [](const tm::False&) { return A("false"); },
          [](const tm::If& i) {
            return L({A("if"), bind(i.x, to_sexpr(i.motive)), to_sexpr(i.scrut),
                      to_sexpr(i.tcase), to_sexpr(i.fcase)});
          },
          [](const tm::Code& c) { return L({A("code"), to_sexpr(c.tp)}); },
          [](const tm::PLam& p) { return L({A("plam"), A(p.i), to_sexpr(p.body)}); },
          [](const tm::PApp& p) { return L({A("papp"), to_sexpr(p.path), to_sexpr(p.r)}); },
          [](const tm::HComp& h) {
            return L({A("hcomp"), to_sexpr(h.tp), to_sexpr(h.r), to_sexpr(h.s), to_sexpr(h.phi),
                      bind(h.i, to_sexpr(h.tube))});
          },
          [](const tm::Coe& c) {
            return L({A("coe"), bind(c.i, to_sexpr(c.fam)), to_sexpr(c.r), to_sexpr(c.s),
                      to_sexpr(c.arg)});
          },
          [](const tm::GlueIn& g) {
            return L({A("glue-in"), to_sexpr(g.phi), to_sexpr(g.base), to_sexpr(g.part)});
          },
          [](const tm::Unglue& g) { return L({A("unglue"), to_sexpr(g.glued)}); },
          [](const tm::Base&) { return A("base"); },
          [](const tm::Loop& l) { return L({A("loop"), to_sexpr(l.r)}); },
          [](const tm::S1Elim& e) {
            return L({A("s1-elim"), bind(e.x, to_sexpr(e.motive)), to_sexpr(e.scrut),
                      to_sexpr(e.base), bind(e.i, to_sexpr(e.loop))});
          },
          [](const tm::Split& s) { return raw_arms("split", s.arms); },
      },
      t.v());
}

SExpr to_sexpr(const Ne& e) {
  return std::visit(
      overloaded{
          [](const ne::Var& v) { return A(v.name); },
          [](const ne::App& a) { return L({A("app"), to_sexpr(a.head), to_sexpr(a.arg)}); },
          [](const ne::Fst& a) { return L({A("fst"), to_sexpr(a.head)}); },
          [](const ne::Snd& a) { return L({A("snd"), to_sexpr(a.head)}); },
          [](const ne::If& i) {
            return L({A("if"), bind(i.x, to_sexpr(i.motive)), to_sexpr(i.scrut),
                      to_sexpr(i.tcase), to_sexpr(i.fcase)});
          },
          [](const ne::PApp& p) { return L({A("papp"), to_sexpr(p.head), to_sexpr(p.r)}); },
          [](const ne::Unglue& u) { return L({A("unglue"), to_sexpr(u.phi), to_sexpr(u.head)}); },
          [](const ne::S1Elim& s) {
            return L({A("s1-elim"), bind(s.x, to_sexpr(s.motive)), to_sexpr(s.scrut),
                      to_sexpr(s.base), bind(s.i, to_sexpr(s.loop))});
          },
          [](const ne::Star& s) { return L({A("star"), to_sexpr(s.phi)}); },
      },
      e.v());
}

SExpr to_sexpr(const Nf& t) {
  return std::visit(
      overloaded{
          [](const nf::Lam& l) { return L({A("lam"), A(l.x), to_sexpr(l.body)}); },
          [](const nf::Pair& p) { return L({A("pair"), to_sexpr(p.fst), to_sexpr(p.snd)}); },
          [](const nf::True&) { return A("true"); },
          [](const nf::False&) { return A("false"); },
          [](const nf::Code& c) { return L({A("code"), to_sexpr(c.tp)}); },
          [](const nf::PLam& p) { return L({A("plam"), A(p.i), to_sexpr(p.body)}); },
          [](const nf::GlueIn& g) {
            return L({A("glue-in"), to_sexpr(g.phi), to_sexpr(g.base), split(g.part)});
          },
          [](const nf::Base&) { return A("base"); },
          [](const nf::Loop& l) { return L({A("loop"), to_sexpr(l.r)}); },
          [](const nf::HComp& h) {
            return L({A("hcomp"), A(hit_name(h.kind)), to_sexpr(h.r), to_sexpr(h.s),
                      to_sexpr(h.phi), bind(h.i, split(h.tube))});
          },
          [](const nf::HCompStuck& h) {
            std::vector<SExpr> items{A("hcomp-stuck"),       to_sexpr(h.tp.code), to_sexpr(h.r),
                                     to_sexpr(h.s),          to_sexpr(h.phi),     bind(h.i, split(h.tube)),
                                     split(h.backup)};
            declared(items, h.declared);
            return L(std::move(items));
          },
          [](const nf::CoeStuck& c) {
            std::vector<SExpr> items{A("coe-stuck"),   bind(c.i, to_sexpr(c.fam.code)),
                                     to_sexpr(c.r),    to_sexpr(c.s),
                                     to_sexpr(c.arg),  split(c.backup)};
            declared(items, c.declared);
            return L(std::move(items));
          },
          [](const nf::Up& u) {
            std::vector<SExpr> items{A("up"), A(tag_name(u.tag))};
            if (u.tp) items.push_back(to_sexpr(u.tp->code));
            items.push_back(to_sexpr(u.ne));
            items.push_back(split(u.backup));
            declared(items, u.declared);
            return L(std::move(items));
          },
      },
      t.v());
}

SExpr to_sexpr(const NfTp& a) {
  return std::visit(
      overloaded{
          [](const nftp::Pi& p) {
            return L({A("pi"), bind(p.x, to_sexpr(p.dom)), to_sexpr(p.cod)});
          },
          [](const nftp::Sigma& p) {
            return L({A("sigma"), bind(p.x, to_sexpr(p.fst)), to_sexpr(p.snd)});
          },
          [](const nftp::Bool&) { return A("bool"); },
          [](const nftp::WBool&) { return A("wbool"); },
          [](const nftp::S1&) { return A("s1"); },
          [](const nftp::U&) { return A("U"); },
          [](const nftp::Path& p) {
            SExpr fam = free_names(p.fam).count(p.i) ? bind(p.i, to_sexpr(p.fam)) : to_sexpr(p.fam);
            return L({A("path"), fam, to_sexpr(p.lhs), to_sexpr(p.rhs)});
          },
          [](const nftp::Glue& g) {
            return L({A("glue"), to_sexpr(g.phi), to_sexpr(g.base), split(g.fiber),
                      split(g.equiv)});
          },
          [](const nftp::Up& u) {
            if (u.backup.arms.empty() && !u.declared) return L({A("el"), to_sexpr(u.tp.code)});
            std::vector<SExpr> items{A("up-tp"), to_sexpr(u.tp.code), split(u.backup)};
            declared(items, u.declared);
            return L(std::move(items));
          },
      },
      a.v());
}

namespace {

SExpr ctx_sexpr(const Ctx& ctx) {
  std::vector<SExpr> items{A("ctx")};
  for (const auto& e : ctx.entries()) {
    switch (e.kind) {
      case Ctx::Entry::Kind::Term:
        items.push_back(L({A("tm"), A(e.name), to_sexpr(*e.type)}));
        break;
      case Ctx::Entry::Kind::Dim: items.push_back(L({A("dim"), A(e.name)})); break;
      case Ctx::Entry::Kind::Cof: items.push_back(L({A("cof"), to_sexpr(*e.cof)})); break;
    }
  }
  return L(std::move(items));
}

SExpr body_sexpr(const Ctx& ctx, const Split<Nf>& s) {
  if (!ctx.has_cofs() && s.arms.size() == 1 && s.arms[0].guard.is_top())
    return to_sexpr(s.arms[0].body);
  return split(s);
}

}  // namespace

SExpr to_sexpr(const Decl& d) {
  switch (d.kind) {
    case Decl::Kind::Def:
      return L({A("def"), A(d.name), ctx_sexpr(d.ctx), to_sexpr(*d.type), to_sexpr(*d.term)});
    case Decl::Kind::Nf:
      return L({A("nf"), A(d.name), ctx_sexpr(d.ctx), to_sexpr(*d.type),
                body_sexpr(d.ctx, *d.lhs)});
    case Decl::Kind::AssertEqNf:
      return L({A("assert-eq-nf"), ctx_sexpr(d.ctx), to_sexpr(*d.type),
                body_sexpr(d.ctx, *d.lhs), body_sexpr(d.ctx, *d.rhs)});
    case Decl::Kind::AssertCof: {
      std::vector<SExpr> hyps{A("hyps")};
      for (const auto& h : d.hyps) hyps.push_back(to_sexpr(h));
      return L({A("assert-cof"), L(std::move(hyps)), to_sexpr(*d.goal)});
    }
    case Decl::Kind::Reject:
      return L({A("reject"), A(d.expect), d.inner ? to_sexpr(*d.inner) : *d.inner_src});
  }
  return L({});
}

std::string render(const SExpr& s) {
  if (s.is_atom()) return s.atom;
  std::string out = "(";
  for (std::size_t k = 0; k < s.items.size(); ++k) {
    if (k) out += ' ';
    out += render(s.items[k]);
  }
  return out + ")";
}

}  // namespace cubnf
