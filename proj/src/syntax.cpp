#include "cubnf/syntax.hpp"

#include <algorithm>

namespace cubnf {

// ---------------------------------------------------------------------------
// Contexts

Ctx Ctx::with_term(std::string name, std::optional<Tp> type) const {
  Ctx out = *this;
  out.entries_.push_back({Entry::Kind::Term, std::move(name), std::move(type), std::nullopt});
  return out;
}

Ctx Ctx::with_dim(std::string name) const {
  Ctx out = *this;
  out.entries_.push_back({Entry::Kind::Dim, std::move(name), std::nullopt, std::nullopt});
  return out;
}

Ctx Ctx::with_cof(Cof phi) const {
  Ctx out = *this;
  out.entries_.push_back({Entry::Kind::Cof, {}, std::nullopt, std::move(phi)});
  return out;
}

std::optional<Tp> Ctx::lookup(const std::string& name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->kind == Entry::Kind::Term && it->name == name) return it->type;
  return std::nullopt;
}

bool Ctx::has_term(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) {
    return e.kind == Entry::Kind::Term && e.name == name;
  });
}

bool Ctx::has_dim(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) {
    return e.kind == Entry::Kind::Dim && e.name == name;
  });
}

bool Ctx::has_cofs() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.kind == Entry::Kind::Cof; });
}

std::vector<Cof> Ctx::cof_hyps() const {
  std::vector<Cof> out;
  for (const auto& e : entries_)
    if (e.kind == Entry::Kind::Cof) out.push_back(*e.cof);
  return out;
}

std::set<std::string> Ctx::names() const {
  std::set<std::string> out;
  for (const auto& e : entries_)
    if (e.kind != Entry::Kind::Cof) out.insert(e.name);
  return out;
}

std::vector<std::string> Ctx::dims() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.kind == Entry::Kind::Dim) out.push_back(e.name);
  return out;
}

// Interval binders carry no type, so a contraction that keeps a later-bound
// representative leaves a context that is still well scoped up to moving
// dimension binders, which never have dependencies.
Ctx Ctx::contract(const ISubst& s) const {
  Ctx out;
  for (const auto& e : entries_) {
    switch (e.kind) {
      case Entry::Kind::Dim:
        if (!s.count(e.name)) out.entries_.push_back(e);
        break;
      case Entry::Kind::Term: {
        Entry n = e;
        if (n.type) n.type = subst_i_tp(*n.type, s);
        out.entries_.push_back(std::move(n));
        break;
      }
      case Entry::Kind::Cof: {
        Entry n = e;
        n.cof = csubst(*n.cof, s);
        out.entries_.push_back(std::move(n));
        break;
      }
    }
  }
  return out;
}

Ctx Ctx::without_cofs() const {
  Ctx out;
  for (const auto& e : entries_)
    if (e.kind != Entry::Kind::Cof) out.entries_.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Free names

namespace {

void fv_iexpr(const IExpr& e, std::set<std::string>& out) {
  if (e.is_var()) out.insert(e.name());
}

void fv_cof(const Cof& phi, std::set<std::string>& out) {
  auto vs = cof_vars(phi);
  out.insert(vs.begin(), vs.end());
}

void fv(const Tm& t, std::set<std::string>& out);
void fv(const Tp& a, std::set<std::string>& out);

template <class X>
void fv_bound(const X& body, const std::string& x, std::set<std::string>& out) {
  std::set<std::string> inner;
  fv(body, inner);
  inner.erase(x);
  out.insert(inner.begin(), inner.end());
}

void fv(const Tp& a, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const tp::Pi& p) { fv(p.dom, out); fv_bound(p.cod, p.x, out); },
                 [&](const tp::Sigma& p) { fv(p.fst, out); fv_bound(p.snd, p.x, out); },
                 [&](const tp::El& p) { fv(p.code, out); },
                 [&](const tp::Path& p) {
                   fv_bound(p.fam, p.i, out);
                   fv(p.lhs, out);
                   fv(p.rhs, out);
                 },
                 [&](const tp::Glue& p) {
                   fv_cof(p.phi, out);
                   fv(p.base, out);
                   fv(p.fiber, out);
                   fv(p.equiv, out);
                 },
                 [&](const tp::Split& p) {
                   for (const auto& [c, x] : p.arms) {
                     fv_cof(c, out);
                     fv(x, out);
                   }
                 },
                 [&](const auto&) {},
             },
             a.v());
}

void fv(const Tm& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const tm::Var& v) { out.insert(v.name); },
                 [&](const tm::Lam& l) { fv_bound(l.body, l.x, out); },
                 [&](const tm::App& a) { fv(a.fn, out); fv(a.arg, out); },
                 [&](const tm::Pair& p) { fv(p.fst, out); fv(p.snd, out); },
                 [&](const tm::Fst& p) { fv(p.pair, out); },
                 [&](const tm::Snd& p) { fv(p.pair, out); },
                 [&](const tm::If& p) {
                   fv_bound(p.motive, p.x, out);
                   fv(p.scrut, out);
                   fv(p.tcase, out);
                   fv(p.fcase, out);
                 },
                 [&](const tm::Code& c) { fv(c.tp, out); },
                 [&](const tm::PLam& l) { fv_bound(l.body, l.i, out); },
                 [&](const tm::PApp& a) { fv(a.path, out); fv_iexpr(a.r, out); },
                 [&](const tm::HComp& h) {
                   fv(h.tp, out);
                   fv_iexpr(h.r, out);
                   fv_iexpr(h.s, out);
                   fv_cof(h.phi, out);
                   fv_bound(h.tube, h.i, out);
                 },
                 [&](const tm::Coe& c) {
                   fv_bound(c.fam, c.i, out);
                   fv_iexpr(c.r, out);
                   fv_iexpr(c.s, out);
                   fv(c.arg, out);
                 },
                 [&](const tm::GlueIn& g) {
                   fv_cof(g.phi, out);
                   fv(g.base, out);
                   fv(g.part, out);
                 },
                 [&](const tm::Unglue& u) { fv(u.glued, out); },
                 [&](const tm::Loop& l) { fv_iexpr(l.r, out); },
                 [&](const tm::S1Elim& e) {
                   fv_bound(e.motive, e.x, out);
                   fv(e.scrut, out);
                   fv(e.base, out);
                   fv_bound(e.loop, e.i, out);
                 },
                 [&](const tm::Split& s) {
                   for (const auto& [c, x] : s.arms) {
                     fv_cof(c, out);
                     fv(x, out);
                   }
                 },
                 [&](const auto&) {},
             },
             t.v());
}

}  // namespace

std::set<std::string> free_names(const Tm& t) {
  std::set<std::string> out;
  fv(t, out);
  return out;
}

std::set<std::string> free_names(const Tp& a) {
  std::set<std::string> out;
  fv(a, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  std::string stem = base;
  while (!stem.empty() && (std::isdigit(static_cast<unsigned char>(stem.back())) ||
                           stem.back() == '_'))
    stem.pop_back();
  if (stem.empty()) stem = "v";
  for (int n = 1;; ++n) {
    std::string cand = stem + "_" + std::to_string(n);
    if (!avoid.count(cand)) return cand;
  }
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

class Substituter {
 public:
  explicit Substituter(RawSubst s) : s_(std::move(s)) {
    for (const auto& [k, t] : s_.terms) fv(t, range_);
    for (const auto& [k, e] : s_.dims) fv_iexpr(e, range_);
  }

  Tm go(const Tm& t) const;
  Tp go(const Tp& a) const;

 private:
  IExpr ie(const IExpr& e) const { return isubst(e, s_.dims); }
  Cof cof(const Cof& phi) const { return s_.dims.empty() ? phi : csubst(phi, s_.dims); }

  // Substituter for the body of a binder of `x`, returning the name to use.
  template <class Body>
  std::pair<std::string, Substituter> under(const std::string& x, bool is_dim,
                                            const Body& body) const {
    Substituter inner = *this;
    inner.s_.terms.erase(x);
    inner.s_.dims.erase(x);
    if (!range_.count(x)) return {x, inner};
    std::set<std::string> avoid = range_;
    fv(body, avoid);
    for (const auto& [k, _] : s_.terms) avoid.insert(k);
    for (const auto& [k, _] : s_.dims) avoid.insert(k);
    std::string y = fresh_name(x, avoid);
    if (is_dim)
      inner.s_.dims.insert_or_assign(x, IExpr::var(y));
    else
      inner.s_.terms.insert_or_assign(x, Tm(tm::Var{y}));
    inner.range_.insert(y);
    return {y, inner};
  }

  RawSubst s_;
  std::set<std::string> range_;
};

Tp Substituter::go(const Tp& a) const {
  return std::visit(
      overloaded{
          [&](const tp::Pi& p) -> Tp {
            auto [x, in] = under(p.x, false, p.cod);
            return tp::Pi{x, go(p.dom), in.go(p.cod)};
          },
          [&](const tp::Sigma& p) -> Tp {
            auto [x, in] = under(p.x, false, p.snd);
            return tp::Sigma{x, go(p.fst), in.go(p.snd)};
          },
          [&](const tp::El& p) -> Tp { return tp::El{go(p.code)}; },
          [&](const tp::Path& p) -> Tp {
            auto [i, in] = under(p.i, true, p.fam);
            return tp::Path{i, in.go(p.fam), go(p.lhs), go(p.rhs)};
          },
          [&](const tp::Glue& g) -> Tp {
            return tp::Glue{cof(g.phi), go(g.base), go(g.fiber), go(g.equiv)};
          },
          [&](const tp::Split& s) -> Tp {
            RawArms<Tp> arms;
            for (const auto& [c, x] : s.arms) arms.emplace_back(cof(c), go(x));
            return tp::Split{std::move(arms)};
          },
          [&](const auto&) -> Tp { return a; },
      },
      a.v());
}

Tm Substituter::go(const Tm& t) const {
  return std::visit(
      overloaded{
          [&](const tm::Var& v) -> Tm {
            auto it = s_.terms.find(v.name);
            return it == s_.terms.end() ? t : it->second;
          },
          [&](const tm::Lam& l) -> Tm {
            auto [x, in] = under(l.x, false, l.body);
            return tm::Lam{x, in.go(l.body)};
          },
          [&](const tm::App& a) -> Tm { return tm::App{go(a.fn), go(a.arg)}; },
          [&](const tm::Pair& p) -> Tm { return tm::Pair{go(p.fst), go(p.snd)}; },
          [&](const tm::Fst& p) -> Tm { return tm::Fst{go(p.pair)}; },
          [&](const tm::Snd& p) -> Tm { return tm::Snd{go(p.pair)}; },
          [&](const tm::If& p) -> Tm {
            auto [x, in] = under(p.x, false, p.motive);
            return tm::If{x, in.go(p.motive), go(p.scrut), go(p.tcase), go(p.fcase)};
          },
          [&](const tm::Code& c) -> Tm { return tm::Code{go(c.tp)}; },
          [&](const tm::PLam& l) -> Tm {
            auto [i, in] = under(l.i, true, l.body);
            return tm::PLam{i, in.go(l.body)};
          },
          [&](const tm::PApp& a) -> Tm { return tm::PApp{go(a.path), ie(a.r)}; },
          [&](const tm::HComp& h) -> Tm {
            auto [i, in] = under(h.i, true, h.tube);
            return tm::HComp{go(h.tp), ie(h.r), ie(h.s), cof(h.phi), i, in.go(h.tube)};
          },
          [&](const tm::Coe& c) -> Tm {
            auto [i, in] = under(c.i, true, c.fam);
            return tm::Coe{i, in.go(c.fam), ie(c.r), ie(c.s), go(c.arg)};
          },
          [&](const tm::GlueIn& g) -> Tm {
            return tm::GlueIn{cof(g.phi), go(g.base), go(g.part)};
          },
          [&](const tm::Unglue& u) -> Tm { return tm::Unglue{go(u.glued)}; },
          [&](const tm::Loop& l) -> Tm { return tm::Loop{ie(l.r)}; },
          [&](const tm::S1Elim& e) -> Tm {
            auto [x, inx] = under(e.x, false, e.motive);
            auto [i, ini] = under(e.i, true, e.loop);
            return tm::S1Elim{x, inx.go(e.motive), go(e.scrut), go(e.base), i, ini.go(e.loop)};
          },
          [&](const tm::Split& s) -> Tm {
            RawArms<Tm> arms;
            for (const auto& [c, x] : s.arms) arms.emplace_back(cof(c), go(x));
            return tm::Split{std::move(arms)};
          },
          [&](const auto&) -> Tm { return t; },
      },
      t.v());
}

}  // namespace

Tm apply(const Tm& t, const RawSubst& s) { return s.empty() ? t : Substituter(s).go(t); }
Tp apply(const Tp& a, const RawSubst& s) { return s.empty() ? a : Substituter(s).go(a); }

Tm subst_tm(const Tm& t, const std::string& x, const Tm& u) {
  RawSubst s;
  s.terms.emplace(x, u);
  return apply(t, s);
}
Tp subst_tp(const Tp& a, const std::string& x, const Tm& u) {
  RawSubst s;
  s.terms.emplace(x, u);
  return apply(a, s);
}
Tm subst_i_tm(const Tm& t, const ISubst& d) {
  RawSubst s;
  s.dims = d;
  return apply(t, s);
}
Tp subst_i_tp(const Tp& a, const ISubst& d) {
  RawSubst s;
  s.dims = d;
  return apply(a, s);
}
Tm subst_i_tm(const Tm& t, const std::string& i, const IExpr& r) {
  return subst_i_tm(t, ISubst{{i, r}});
}
Tp subst_i_tp(const Tp& a, const std::string& i, const IExpr& r) {
  return subst_i_tp(a, ISubst{{i, r}});
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

// Renames the bound variables of both sides to a common fresh name.
template <class X>
std::pair<X, X> common_binder(const std::string& x, const X& a, const std::string& y, const X& b,
                              bool is_dim) {
  if (x == y) return {a, b};
  std::set<std::string> avoid;
  fv(a, avoid);
  fv(b, avoid);
  avoid.insert(x);
  avoid.insert(y);
  std::string z = fresh_name(x, avoid);
  RawSubst sa, sb;
  if (is_dim) {
    sa.dims.emplace(x, IExpr::var(z));
    sb.dims.emplace(y, IExpr::var(z));
  } else {
    sa.terms.emplace(x, Tm(tm::Var{z}));
    sb.terms.emplace(y, Tm(tm::Var{z}));
  }
  return {apply(a, sa), apply(b, sb)};
}

template <class X>
bool alpha_bound(const std::string& x, const X& a, const std::string& y, const X& b,
                 bool is_dim) {
  auto [l, r] = common_binder(x, a, y, b, is_dim);
  return alpha_eq(l, r);
}

template <class X>
bool alpha_arms(const RawArms<X>& a, const RawArms<X>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].first != b[k].first || !alpha_eq(a[k].second, b[k].second)) return false;
  return true;
}

}  // namespace

bool alpha_eq(const Tp& a, const Tp& b) {
  if (a.same(b)) return true;
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const tp::Pi& p) {
            const auto& q = *b.as<tp::Pi>();
            return alpha_eq(p.dom, q.dom) && alpha_bound(p.x, p.cod, q.x, q.cod, false);
          },
          [&](const tp::Sigma& p) {
            const auto& q = *b.as<tp::Sigma>();
            return alpha_eq(p.fst, q.fst) && alpha_bound(p.x, p.snd, q.x, q.snd, false);
          },
          [&](const tp::El& p) { return alpha_eq(p.code, b.as<tp::El>()->code); },
          [&](const tp::Path& p) {
            const auto& q = *b.as<tp::Path>();
            return alpha_bound(p.i, p.fam, q.i, q.fam, true) && alpha_eq(p.lhs, q.lhs) &&
                   alpha_eq(p.rhs, q.rhs);
          },
          [&](const tp::Glue& g) {
            const auto& h = *b.as<tp::Glue>();
            return g.phi == h.phi && alpha_eq(g.base, h.base) && alpha_eq(g.fiber, h.fiber) &&
                   alpha_eq(g.equiv, h.equiv);
          },
          [&](const tp::Split& s) { return alpha_arms(s.arms, b.as<tp::Split>()->arms); },
          [&](const auto&) { return true; },
      },
      a.v());
}

bool alpha_eq(const Tm& a, const Tm& b) {
  if (a.same(b)) return true;
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const tm::Var& v) { return v.name == b.as<tm::Var>()->name; },
          [&](const tm::Lam& l) {
            const auto& m = *b.as<tm::Lam>();
            return alpha_bound(l.x, l.body, m.x, m.body, false);
          },
          [&](const tm::App& p) {
            const auto& q = *b.as<tm::App>();
            return alpha_eq(p.fn, q.fn) && alpha_eq(p.arg, q.arg);
          },
          [&](const tm::Pair& p) {
            const auto& q = *b.as<tm::Pair>();
            return alpha_eq(p.fst, q.fst) && alpha_eq(p.snd, q.snd);
          },
          [&](const tm::Fst& p) { return alpha_eq(p.pair, b.as<tm::Fst>()->pair); },
          [&](const tm::Snd& p) { return alpha_eq(p.pair, b.as<tm::Snd>()->pair); },
          [&](const tm::If& p) {
            const auto& q = *b.as<tm::If>();
            return alpha_bound(p.x, p.motive, q.x, q.motive, false) &&
                   alpha_eq(p.scrut, q.scrut) && alpha_eq(p.tcase, q.tcase) &&
                   alpha_eq(p.fcase, q.fcase);
          },
          [&](const tm::Code& c) { return alpha_eq(c.tp, b.as<tm::Code>()->tp); },
          [&](const tm::PLam& l) {
            const auto& m = *b.as<tm::PLam>();
            return alpha_bound(l.i, l.body, m.i, m.body, true);
          },
          [&](const tm::PApp& p) {
            const auto& q = *b.as<tm::PApp>();
            return p.r == q.r && alpha_eq(p.path, q.path);
          },
          [&](const tm::HComp& h) {
            const auto& k = *b.as<tm::HComp>();
            return h.r == k.r && h.s == k.s && h.phi == k.phi && alpha_eq(h.tp, k.tp) &&
                   alpha_bound(h.i, h.tube, k.i, k.tube, true);
          },
          [&](const tm::Coe& c) {
            const auto& d = *b.as<tm::Coe>();
            return c.r == d.r && c.s == d.s && alpha_bound(c.i, c.fam, d.i, d.fam, true) &&
                   alpha_eq(c.arg, d.arg);
          },
          [&](const tm::GlueIn& g) {
            const auto& h = *b.as<tm::GlueIn>();
            return g.phi == h.phi && alpha_eq(g.base, h.base) && alpha_eq(g.part, h.part);
          },
          [&](const tm::Unglue& u) { return alpha_eq(u.glued, b.as<tm::Unglue>()->glued); },
          [&](const tm::Loop& l) { return l.r == b.as<tm::Loop>()->r; },
          [&](const tm::S1Elim& e) {
            const auto& f = *b.as<tm::S1Elim>();
            return alpha_bound(e.x, e.motive, f.x, f.motive, false) &&
                   alpha_eq(e.scrut, f.scrut) && alpha_eq(e.base, f.base) &&
                   alpha_bound(e.i, e.loop, f.i, f.loop, true);
          },
          [&](const tm::Split& s) { return alpha_arms(s.arms, b.as<tm::Split>()->arms); },
          [&](const auto&) { return true; },
      },
      a.v());
}

// ---------------------------------------------------------------------------
// Sugar

Tp path_type(const Tp& a, const Tm& lhs, const Tm& rhs) {
  std::set<std::string> avoid = free_names(a);
  return tp::Path{fresh_name("_", avoid), a, lhs, rhs};
}

Tp arrow(const Tp& a, const Tp& b) {
  std::set<std::string> avoid = free_names(b);
  return tp::Pi{fresh_name("_", avoid), a, b};
}

Tp equiv_type(const Tp& a, const Tp& b) {
  std::set<std::string> avoid = free_names(a);
  avoid.merge(free_names(b));
  return tp::Sigma{fresh_name("_", avoid), arrow(a, b), arrow(b, a)};
}

Tm apply_equiv(const Tm& e, const Tm& a) { return tm::App{tm::Fst{e}, a}; }

}  // namespace cubnf
