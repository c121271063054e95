#pragma once

// Helpers for the decay and substitution properties: an independent frontier,
// a scan for neutrals left behind after decay, and equal rewrites of a term.

#include <random>

#include "cubnf/engine.hpp"
#include "nf_gen.hpp"
#include "oracle.hpp"

namespace props {

using namespace cubnf;

inline Cof eq(const IExpr& a, const IExpr& b) { return Cof::equation(a, b); }

// Frontier recomputed from the annotation rules, kept apart from the library.
inline Cof front(const Ne& e) {
  return std::visit(overloaded{
                        [](const ne::Var&) { return Cof::bot(); },
                        [](const ne::App& a) { return front(a.head); },
                        [](const ne::Fst& a) { return front(a.head); },
                        [](const ne::Snd& a) { return front(a.head); },
                        [](const ne::If& a) { return front(a.scrut); },
                        [](const ne::S1Elim& a) { return front(a.scrut); },
                        [](const ne::PApp& a) {
                          return Cof::join({front(a.head), eq(a.r, IExpr::zero()),
                                            eq(a.r, IExpr::one())});
                        },
                        [](const ne::Unglue& a) { return Cof::join({front(a.head), a.phi}); },
                        [](const ne::Star& a) { return a.phi; },
                    },
                    e.v());
}

inline bool residual(const Nf& t);
inline bool residual(const Ne& e);

inline bool residual(const Split<Nf>& s) {
  for (const auto& a : s.arms)
    if (residual(a.body)) return true;
  return false;
}

inline bool residual(const Ne& e) {
  return std::visit(overloaded{
                        [](const ne::App& a) { return residual(a.head) || residual(a.arg); },
                        [](const ne::Fst& a) { return residual(a.head); },
                        [](const ne::Snd& a) { return residual(a.head); },
                        [](const ne::If& a) {
                          return residual(a.scrut) || residual(a.tcase) || residual(a.fcase);
                        },
                        [](const ne::S1Elim& a) {
                          return residual(a.scrut) || residual(a.base) || residual(a.loop);
                        },
                        [](const ne::PApp& a) { return residual(a.head); },
                        [](const ne::Unglue& a) { return residual(a.head); },
                        [](const auto&) { return false; },
                    },
                    e.v());
}

inline bool residual(const Nf& t) {
  using oracle::literally_true;
  return std::visit(
      overloaded{
          [](const nf::Lam& l) { return residual(l.body); },
          [](const nf::Pair& p) { return residual(p.fst) || residual(p.snd); },
          [](const nf::PLam& p) { return residual(p.body); },
          [](const nf::Loop& l) { return l.r.is_endpoint(); },
          [](const nf::GlueIn& g) { return literally_true(g.phi) || residual(g.base) || residual(g.part); },
          [](const nf::HComp& h) {
            return literally_true(Cof::join({eq(h.r, h.s), h.phi})) || residual(h.tube);
          },
          [](const nf::HCompStuck& h) {
            return literally_true(front(h.tp.code)) ||
                   literally_true(Cof::join({eq(h.r, h.s), h.phi})) || residual(h.tube) ||
                   residual(h.backup);
          },
          [](const nf::CoeStuck& c) {
            return c.r == c.s || literally_true(forall_elim(c.i, front(c.fam.code))) ||
                   residual(c.arg) || residual(c.backup);
          },
          [](const nf::Up& u) {
            Cof f = u.tp ? Cof::join({front(u.ne), front(u.tp->code)}) : front(u.ne);
            return literally_true(f) || residual(u.ne) || residual(u.backup);
          },
          [](const auto&) { return false; },
      },
      t.v());
}

// A term equal to `t` written differently: decayed stabilizers and loops at
// endpoints are reintroduced, binders renamed.
inline Nf perturb(gen::Gen& g, const Nf& t, gen::Ty ty) {
  int c = std::uniform_int_distribution<int>(0, 2)(g.rng());
  switch (ty) {
    case gen::Ty::Bool:
      if (c == 0 && t.is<nf::True>())
        return gen::up(UpTag::Bool, ne::PApp{gen::var("p"), IExpr::zero()}, {{{Cof::top(), t}}});
      return gen::up(UpTag::Bool, ne::Star{Cof::top()}, {{{Cof::top(), t}}});
    case gen::Ty::S1:
      if (c == 0 && t.is<nf::Base>()) return nf::Loop{IExpr::one()};
      if (c == 1) return gen::up(UpTag::S1, ne::PApp{gen::var("l"), IExpr::one()}, {{{Cof::top(), t}}});
      return gen::up(UpTag::S1, ne::Star{eq(IExpr::zero(), IExpr::zero())}, {{{Cof::top(), t}}});
    case gen::Ty::Fun: {
      auto* l = t.as<nf::Lam>();
      std::string z = "z" + l->x;
      return nf::Lam{z, perturb(g, rename_term(l->body, l->x, z), gen::Ty::Bool)};
    }
    case gen::Ty::Pair: {
      auto* p = t.as<nf::Pair>();
      if (c == 0) return nf::Pair{perturb(g, p->fst, gen::Ty::Bool), p->snd};
      return nf::Pair{p->fst, perturb(g, p->snd, gen::Ty::S1)};
    }
  }
  return t;
}

// Contexts used for the congruence check.
inline std::vector<Nf> contexts(const Nf& t, gen::Ty ty) {
  std::vector<Nf> out{nf::Lam{"w", t}};
  if (ty == gen::Ty::Bool) {
    out.push_back(gen::up(UpTag::Bool, ne::App{gen::var("f"), t}));
    out.push_back(gen::up(UpTag::Bool, ne::If{"y", nftp::Bool{}, gen::var("b"), t, nf::False{}}));
    out.push_back(nf::Pair{t, nf::Base{}});
  }
  if (ty == gen::Ty::S1) out.push_back(nf::Pair{nf::True{}, t});
  return out;
}

}  // namespace props
