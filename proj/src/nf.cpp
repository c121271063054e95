#include "cubnf/nf.hpp"

#include <algorithm>

#include "cubnf/syntax.hpp"

namespace cubnf {

const char* tag_name(UpTag t) {
  switch (t) {
    case UpTag::Bool: return "bool";
    case UpTag::WBool: return "wbool";
    case UpTag::S1: return "s1";
    case UpTag::El: return "el";
  }
  return "?";
}

const char* hit_name(HitKind k) { return k == HitKind::WBool ? "wbool" : "s1"; }

// ---------------------------------------------------------------------------
// Frontier

Cof frontier(const Ne& e) {
  return std::visit(
      overloaded{
          [](const ne::Var&) { return Cof::bot(); },
          [](const ne::App& a) { return frontier(a.head); },
          [](const ne::Fst& a) { return frontier(a.head); },
          [](const ne::Snd& a) { return frontier(a.head); },
          [](const ne::If& a) { return frontier(a.scrut); },
          [](const ne::S1Elim& a) { return frontier(a.scrut); },
          [](const ne::PApp& a) {
            return Cof::join({frontier(a.head), Cof::equation(a.r, IExpr::zero()),
                              Cof::equation(a.r, IExpr::one())});
          },
          [](const ne::Unglue& a) { return Cof::join({frontier(a.head), a.phi}); },
          [](const ne::Star& a) { return a.phi; },
      },
      e.v());
}

Cof frontier(const NeTp& a) { return frontier(a.code); }

bool has_star(const Ne& e) {
  return std::visit(overloaded{
                        [](const ne::Var&) { return false; },
                        [](const ne::Star&) { return true; },
                        [](const ne::If& a) { return has_star(a.scrut); },
                        [](const ne::S1Elim& a) { return has_star(a.scrut); },
                        [](const auto& a) { return has_star(a.head); },
                    },
                    e.v());
}

// ---------------------------------------------------------------------------
// Size

std::size_t size(const Ne& e) {
  return std::visit(overloaded{
                        [](const ne::Var&) -> std::size_t { return 1; },
                        [](const ne::Star&) -> std::size_t { return 1; },
                        [](const ne::App& a) { return 1 + size(a.head) + size(a.arg); },
                        [](const ne::If& a) {
                          return 1 + size(a.motive) + size(a.scrut) + size(a.tcase) +
                                 size(a.fcase);
                        },
                        [](const ne::S1Elim& a) {
                          return 1 + size(a.motive) + size(a.scrut) + size(a.base) +
                                 size(a.loop);
                        },
                        [](const auto& a) { return 1 + size(a.head); },
                    },
                    e.v());
}

std::size_t size(const Nf& t) {
  return std::visit(
      overloaded{
          [](const nf::Lam& a) { return 1 + size(a.body); },
          [](const nf::Pair& a) { return 1 + size(a.fst) + size(a.snd); },
          [](const nf::Code& a) { return 1 + size(a.tp); },
          [](const nf::PLam& a) { return 1 + size(a.body); },
          [](const nf::GlueIn& a) { return 1 + size(a.base) + size(a.part); },
          [](const nf::Loop&) -> std::size_t { return 2; },
          [](const nf::HComp& a) { return 1 + size(a.tube); },
          [](const nf::HCompStuck& a) {
            return 1 + size(a.tp.code) + size(a.tube) + size(a.backup);
          },
          [](const nf::CoeStuck& a) {
            return 1 + size(a.fam.code) + size(a.arg) + size(a.backup);
          },
          [](const nf::Up& a) {
            return 1 + size(a.ne) + (a.tp ? size(a.tp->code) : 0) + size(a.backup);
          },
          [](const auto&) -> std::size_t { return 1; },
      },
      t.v());
}

std::size_t size(const NfTp& a) {
  return std::visit(overloaded{
                        [](const nftp::Pi& p) { return 1 + size(p.dom) + size(p.cod); },
                        [](const nftp::Sigma& p) { return 1 + size(p.fst) + size(p.snd); },
                        [](const nftp::Path& p) {
                          return 1 + size(p.fam) + size(p.lhs) + size(p.rhs);
                        },
                        [](const nftp::Glue& g) {
                          return 1 + size(g.base) + size(g.fiber) + size(g.equiv);
                        },
                        [](const nftp::Up& u) { return 1 + size(u.tp.code) + size(u.backup); },
                        [](const auto&) -> std::size_t { return 1; },
                    },
                    a.v());
}

// ---------------------------------------------------------------------------
// Free names

namespace {

void fv(const Nf& t, std::set<std::string>& out);
void fv(const Ne& e, std::set<std::string>& out);
void fv(const NfTp& a, std::set<std::string>& out);

void fv(const IExpr& r, std::set<std::string>& out) {
  if (r.is_var()) out.insert(r.name());
}
void fv(const Cof& phi, std::set<std::string>& out) {
  auto vs = cof_vars(phi);
  out.insert(vs.begin(), vs.end());
}
void fv(const NeTp& a, std::set<std::string>& out) { fv(a.code, out); }
template <class X>
void fv(const Split<X>& s, std::set<std::string>& out) {
  for (const auto& a : s.arms) {
    fv(a.guard, out);
    fv(a.body, out);
  }
}
template <class X>
void fv(const std::optional<X>& x, std::set<std::string>& out) {
  if (x) fv(*x, out);
}
template <class X>
void fv_bound(const X& body, const std::string& x, std::set<std::string>& out) {
  std::set<std::string> inner;
  fv(body, inner);
  inner.erase(x);
  out.insert(inner.begin(), inner.end());
}

void fv(const Ne& e, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const ne::Var& v) { out.insert(v.name); },
                 [&](const ne::App& a) { fv(a.head, out); fv(a.arg, out); },
                 [&](const ne::Fst& a) { fv(a.head, out); },
                 [&](const ne::Snd& a) { fv(a.head, out); },
                 [&](const ne::If& a) {
                   fv_bound(a.motive, a.x, out);
                   fv(a.scrut, out);
                   fv(a.tcase, out);
                   fv(a.fcase, out);
                 },
                 [&](const ne::PApp& a) { fv(a.head, out); fv(a.r, out); },
                 [&](const ne::Unglue& a) { fv(a.phi, out); fv(a.head, out); },
                 [&](const ne::S1Elim& a) {
                   fv_bound(a.motive, a.x, out);
                   fv(a.scrut, out);
                   fv(a.base, out);
                   fv_bound(a.loop, a.i, out);
                 },
                 [&](const ne::Star& a) { fv(a.phi, out); },
             },
             e.v());
}

void fv(const Nf& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const nf::Lam& a) { fv_bound(a.body, a.x, out); },
                 [&](const nf::Pair& a) { fv(a.fst, out); fv(a.snd, out); },
                 [&](const nf::Code& a) { fv(a.tp, out); },
                 [&](const nf::PLam& a) { fv_bound(a.body, a.i, out); },
                 [&](const nf::GlueIn& a) {
                   fv(a.phi, out);
                   fv(a.base, out);
                   fv(a.part, out);
                 },
                 [&](const nf::Loop& a) { fv(a.r, out); },
                 [&](const nf::HComp& a) {
                   fv(a.r, out);
                   fv(a.s, out);
                   fv(a.phi, out);
                   fv_bound(a.tube, a.i, out);
                 },
                 [&](const nf::HCompStuck& a) {
                   fv(a.tp, out);
                   fv(a.r, out);
                   fv(a.s, out);
                   fv(a.phi, out);
                   fv_bound(a.tube, a.i, out);
                   fv(a.backup, out);
                   fv(a.declared, out);
                 },
                 [&](const nf::CoeStuck& a) {
                   fv_bound(a.fam, a.i, out);
                   fv(a.r, out);
                   fv(a.s, out);
                   fv(a.arg, out);
                   fv(a.backup, out);
                   fv(a.declared, out);
                 },
                 [&](const nf::Up& a) {
                   fv(a.ne, out);
                   fv(a.tp, out);
                   fv(a.backup, out);
                   fv(a.declared, out);
                 },
                 [&](const auto&) {},
             },
             t.v());
}

void fv(const NfTp& a, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const nftp::Pi& p) { fv(p.dom, out); fv_bound(p.cod, p.x, out); },
                 [&](const nftp::Sigma& p) { fv(p.fst, out); fv_bound(p.snd, p.x, out); },
                 [&](const nftp::Path& p) {
                   fv_bound(p.fam, p.i, out);
                   fv(p.lhs, out);
                   fv(p.rhs, out);
                 },
                 [&](const nftp::Glue& g) {
                   fv(g.phi, out);
                   fv(g.base, out);
                   fv(g.fiber, out);
                   fv(g.equiv, out);
                 },
                 [&](const nftp::Up& u) {
                   fv(u.tp, out);
                   fv(u.backup, out);
                   fv(u.declared, out);
                 },
                 [&](const auto&) {},
             },
             a.v());
}

}  // namespace

std::set<std::string> free_names(const Nf& t) {
  std::set<std::string> out;
  fv(t, out);
  return out;
}
std::set<std::string> free_names(const Ne& e) {
  std::set<std::string> out;
  fv(e, out);
  return out;
}
std::set<std::string> free_names(const NfTp& a) {
  std::set<std::string> out;
  fv(a, out);
  return out;
}

// ---------------------------------------------------------------------------
// Split arms

template <class X>
Split<X> normalize_arms(const Split<X>& sp) {
  std::vector<std::pair<Branch, const X*>> items;
  for (const auto& a : sp.arms)
    for (const auto& b : dnf(a.guard)) items.emplace_back(b, &a.body);
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  Split<X> out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    bool drop = false;
    for (std::size_t l = 0; l < items.size() && !drop; ++l) {
      if (l == k) continue;
      if (items[l].first == items[k].first)
        drop = l < k;  // keep the first of identical clauses
      else
        drop = items[k].first.satisfies(items[l].first);
    }
    if (!drop) out.arms.push_back({items[k].first.to_cof(), *items[k].second});
  }
  return out;
}

template Split<Nf> normalize_arms(const Split<Nf>&);
template Split<NfTp> normalize_arms(const Split<NfTp>&);

// ---------------------------------------------------------------------------
// Substitution

namespace {

class Applier {
 public:
  explicit Applier(NfSubst s) : s_(std::move(s)) {
    for (const auto& [k, v] : s_.terms) range_.insert(v);
    for (const auto& [k, e] : s_.dims)
      if (e.is_var()) range_.insert(e.name());
  }

  Nf go(const Nf& t) const;
  Ne go(const Ne& e) const;
  NfTp go(const NfTp& a) const;
  NeTp go(const NeTp& a) const { return NeTp{go(a.code)}; }

  template <class X>
  Split<X> go(const Split<X>& sp) const {
    Split<X> out;
    if (s_.dims.empty()) {
      for (const auto& a : sp.arms) out.arms.push_back({a.guard, go(a.body)});
      return out;
    }
    for (const auto& a : sp.arms) {
      Cof g = csubst(a.guard, s_.dims);
      for (const auto& b : dnf(g)) {
        NfSubst inner = s_;
        inner.dims = compose(s_.dims, b.contraction());
        out.arms.push_back({b.to_cof(), Applier(inner).go(a.body)});
      }
    }
    return normalize_arms(out);
  }

 private:
  IExpr ie(const IExpr& e) const { return isubst(e, s_.dims); }
  Cof cof(const Cof& phi) const { return s_.dims.empty() ? phi : csubst(phi, s_.dims); }
  std::optional<Cof> cof(const std::optional<Cof>& phi) const {
    if (!phi) return phi;
    return cof(*phi);
  }

  template <class Node>
  std::pair<std::string, Applier> under(const std::string& x, bool is_dim,
                                        const Node& whole) const {
    Applier inner = *this;
    if (is_dim)
      inner.s_.dims.erase(x);
    else
      inner.s_.terms.erase(x);
    if (!range_.count(x)) return {x, inner};
    std::set<std::string> avoid = range_;
    fv(whole, avoid);
    for (const auto& [k, _] : s_.terms) avoid.insert(k);
    for (const auto& [k, _] : s_.dims) avoid.insert(k);
    avoid.insert(x);
    std::string y = fresh_name(x, avoid);
    if (is_dim)
      inner.s_.dims.insert_or_assign(x, IExpr::var(y));
    else
      inner.s_.terms.insert_or_assign(x, y);
    inner.range_.insert(y);
    return {y, inner};
  }

  NfSubst s_;
  std::set<std::string> range_;
};

Ne Applier::go(const Ne& e) const {
  return std::visit(
      overloaded{
          [&](const ne::Var& v) -> Ne {
            auto it = s_.terms.find(v.name);
            return it == s_.terms.end() ? e : Ne(ne::Var{it->second});
          },
          [&](const ne::App& a) -> Ne { return ne::App{go(a.head), go(a.arg)}; },
          [&](const ne::Fst& a) -> Ne { return ne::Fst{go(a.head)}; },
          [&](const ne::Snd& a) -> Ne { return ne::Snd{go(a.head)}; },
          [&](const ne::If& a) -> Ne {
            auto [x, in] = under(a.x, false, a.motive);
            return ne::If{x, in.go(a.motive), go(a.scrut), go(a.tcase), go(a.fcase)};
          },
          [&](const ne::PApp& a) -> Ne { return ne::PApp{go(a.head), ie(a.r)}; },
          [&](const ne::Unglue& a) -> Ne { return ne::Unglue{cof(a.phi), go(a.head)}; },
          [&](const ne::S1Elim& a) -> Ne {
            auto [x, inx] = under(a.x, false, a.motive);
            auto [i, ini] = under(a.i, true, a.loop);
            return ne::S1Elim{x, inx.go(a.motive), go(a.scrut), go(a.base), i, ini.go(a.loop)};
          },
          [&](const ne::Star& a) -> Ne { return ne::Star{cof(a.phi)}; },
      },
      e.v());
}

Nf Applier::go(const Nf& t) const {
  return std::visit(
      overloaded{
          [&](const nf::Lam& a) -> Nf {
            auto [x, in] = under(a.x, false, a.body);
            return nf::Lam{x, in.go(a.body)};
          },
          [&](const nf::Pair& a) -> Nf { return nf::Pair{go(a.fst), go(a.snd)}; },
          [&](const nf::Code& a) -> Nf { return nf::Code{go(a.tp)}; },
          [&](const nf::PLam& a) -> Nf {
            auto [i, in] = under(a.i, true, a.body);
            return nf::PLam{i, in.go(a.body)};
          },
          [&](const nf::GlueIn& a) -> Nf {
            return nf::GlueIn{cof(a.phi), go(a.base), go(a.part)};
          },
          [&](const nf::Loop& a) -> Nf { return nf::Loop{ie(a.r)}; },
          [&](const nf::HComp& a) -> Nf {
            auto [i, in] = under(a.i, true, a.tube);
            return nf::HComp{a.kind, ie(a.r), ie(a.s), cof(a.phi), i, in.go(a.tube)};
          },
          [&](const nf::HCompStuck& a) -> Nf {
            auto [i, in] = under(a.i, true, a.tube);
            return nf::HCompStuck{go(a.tp),   ie(a.r),         ie(a.s),       cof(a.phi), i,
                                  in.go(a.tube), go(a.backup), cof(a.declared)};
          },
          [&](const nf::CoeStuck& a) -> Nf {
            auto [i, in] = under(a.i, true, a.fam);
            return nf::CoeStuck{i,          in.go(a.fam), ie(a.r),        ie(a.s),
                                go(a.arg),  go(a.backup), cof(a.declared)};
          },
          [&](const nf::Up& a) -> Nf {
            std::optional<NeTp> tp;
            if (a.tp) tp = go(*a.tp);
            return nf::Up{a.tag, go(a.ne), tp, go(a.backup), cof(a.declared)};
          },
          [&](const auto&) -> Nf { return t; },
      },
      t.v());
}

NfTp Applier::go(const NfTp& a) const {
  return std::visit(
      overloaded{
          [&](const nftp::Pi& p) -> NfTp {
            auto [x, in] = under(p.x, false, p.cod);
            return nftp::Pi{x, go(p.dom), in.go(p.cod)};
          },
          [&](const nftp::Sigma& p) -> NfTp {
            auto [x, in] = under(p.x, false, p.snd);
            return nftp::Sigma{x, go(p.fst), in.go(p.snd)};
          },
          [&](const nftp::Path& p) -> NfTp {
            auto [i, in] = under(p.i, true, p.fam);
            return nftp::Path{i, in.go(p.fam), go(p.lhs), go(p.rhs)};
          },
          [&](const nftp::Glue& g) -> NfTp {
            return nftp::Glue{cof(g.phi), go(g.base), go(g.fiber), go(g.equiv)};
          },
          [&](const nftp::Up& u) -> NfTp {
            return nftp::Up{go(u.tp), go(u.backup), cof(u.declared)};
          },
          [&](const auto&) -> NfTp { return a; },
      },
      a.v());
}

}  // namespace

Nf apply(const Nf& t, const NfSubst& s) { return s.empty() ? t : Applier(s).go(t); }
Ne apply(const Ne& e, const NfSubst& s) { return s.empty() ? e : Applier(s).go(e); }
NfTp apply(const NfTp& a, const NfSubst& s) { return s.empty() ? a : Applier(s).go(a); }
NeTp apply(const NeTp& a, const NfSubst& s) { return s.empty() ? a : Applier(s).go(a); }
Split<Nf> apply(const Split<Nf>& sp, const NfSubst& s) { return Applier(s).go(sp); }
Split<NfTp> apply(const Split<NfTp>& sp, const NfSubst& s) { return Applier(s).go(sp); }

Nf rename_term(const Nf& body, const std::string& from, const std::string& to) {
  NfSubst s;
  s.terms.emplace(from, to);
  return apply(body, s);
}
Nf rename_dim(const Nf& body, const std::string& from, const std::string& to) {
  NfSubst s;
  s.dims.emplace(from, IExpr::var(to));
  return apply(body, s);
}
NfTp rename_term(const NfTp& body, const std::string& from, const std::string& to) {
  NfSubst s;
  s.terms.emplace(from, to);
  return apply(body, s);
}
NfTp rename_dim(const NfTp& body, const std::string& from, const std::string& to) {
  NfSubst s;
  s.dims.emplace(from, IExpr::var(to));
  return apply(body, s);
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

class Comparer {
 public:
  Comparer(bool semantic, std::vector<Cof> hyps) : semantic_(semantic), hyps_(std::move(hyps)) {}

  bool cof(const Cof& a, const Cof& b) const {
    return semantic_ ? cof_eq(hyps_, a, b) : a == b;
  }
  bool decl(const std::optional<Cof>& a, const std::optional<Cof>& b) const {
    if (semantic_) return true;
    return a.has_value() == b.has_value() && (!a || *a == *b);
  }

  template <class X>
  bool split(const Split<X>& a, const Split<X>& b) const {
    if (!semantic_) {
      if (a.arms.size() != b.arms.size()) return false;
      for (std::size_t k = 0; k < a.arms.size(); ++k)
        if (a.arms[k].guard != b.arms[k].guard || !eq(a.arms[k].body, b.arms[k].body))
          return false;
      return true;
    }
    Split<X> na = normalize_arms(a), nb = normalize_arms(b);
    if (na.arms.size() != nb.arms.size()) return false;
    for (std::size_t k = 0; k < na.arms.size(); ++k)
      if (na.arms[k].guard != nb.arms[k].guard || !eq(na.arms[k].body, nb.arms[k].body))
        return false;
    return true;
  }

  template <class X>
  bool bound(const std::string& x, const X& a, const std::string& y, const X& b,
             bool is_dim) const {
    if (x == y) return eq(a, b);
    std::set<std::string> avoid = free_names(a);
    avoid.merge(free_names(b));
    avoid.insert(x);
    avoid.insert(y);
    std::string z = fresh_name(x, avoid);
    if (is_dim) return eq(rename_dim(a, x, z), rename_dim(b, y, z));
    return eq(rename_term(a, x, z), rename_term(b, y, z));
  }

  bool eq(const NeTp& a, const NeTp& b) const { return eq(a.code, b.code); }

  bool eq(const Ne& a, const Ne& b) const {
    if (a.same(b)) return true;
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const ne::Var& v) { return v.name == b.as<ne::Var>()->name; },
            [&](const ne::App& p) {
              const auto& q = *b.as<ne::App>();
              return eq(p.head, q.head) && eq(p.arg, q.arg);
            },
            [&](const ne::Fst& p) { return eq(p.head, b.as<ne::Fst>()->head); },
            [&](const ne::Snd& p) { return eq(p.head, b.as<ne::Snd>()->head); },
            [&](const ne::If& p) {
              const auto& q = *b.as<ne::If>();
              return bound(p.x, p.motive, q.x, q.motive, false) && eq(p.scrut, q.scrut) &&
                     eq(p.tcase, q.tcase) && eq(p.fcase, q.fcase);
            },
            [&](const ne::PApp& p) {
              const auto& q = *b.as<ne::PApp>();
              return p.r == q.r && eq(p.head, q.head);
            },
            [&](const ne::Unglue& p) {
              const auto& q = *b.as<ne::Unglue>();
              return cof(p.phi, q.phi) && eq(p.head, q.head);
            },
            [&](const ne::S1Elim& p) {
              const auto& q = *b.as<ne::S1Elim>();
              return bound(p.x, p.motive, q.x, q.motive, false) && eq(p.scrut, q.scrut) &&
                     eq(p.base, q.base) && bound(p.i, p.loop, q.i, q.loop, true);
            },
            [&](const ne::Star& p) { return cof(p.phi, b.as<ne::Star>()->phi); },
        },
        a.v());
  }

  bool eq(const Nf& a, const Nf& b) const {
    if (a.same(b)) return true;
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const nf::Lam& p) {
              const auto& q = *b.as<nf::Lam>();
              return bound(p.x, p.body, q.x, q.body, false);
            },
            [&](const nf::Pair& p) {
              const auto& q = *b.as<nf::Pair>();
              return eq(p.fst, q.fst) && eq(p.snd, q.snd);
            },
            [&](const nf::Code& p) { return eq(p.tp, b.as<nf::Code>()->tp); },
            [&](const nf::PLam& p) {
              const auto& q = *b.as<nf::PLam>();
              return bound(p.i, p.body, q.i, q.body, true);
            },
            [&](const nf::GlueIn& p) {
              const auto& q = *b.as<nf::GlueIn>();
              return cof(p.phi, q.phi) && eq(p.base, q.base) && split(p.part, q.part);
            },
            [&](const nf::Loop& p) { return p.r == b.as<nf::Loop>()->r; },
            [&](const nf::HComp& p) {
              const auto& q = *b.as<nf::HComp>();
              return p.kind == q.kind && p.r == q.r && p.s == q.s && cof(p.phi, q.phi) &&
                     bound_split(p.i, p.tube, q.i, q.tube);
            },
            [&](const nf::HCompStuck& p) {
              const auto& q = *b.as<nf::HCompStuck>();
              return eq(p.tp, q.tp) && p.r == q.r && p.s == q.s && cof(p.phi, q.phi) &&
                     bound_split(p.i, p.tube, q.i, q.tube) && split(p.backup, q.backup) &&
                     decl(p.declared, q.declared);
            },
            [&](const nf::CoeStuck& p) {
              const auto& q = *b.as<nf::CoeStuck>();
              return p.r == q.r && p.s == q.s && bound_netp(p.i, p.fam, q.i, q.fam) &&
                     eq(p.arg, q.arg) && split(p.backup, q.backup) &&
                     decl(p.declared, q.declared);
            },
            [&](const nf::Up& p) {
              const auto& q = *b.as<nf::Up>();
              if (p.tag != q.tag || p.tp.has_value() != q.tp.has_value()) return false;
              if (p.tp && !eq(*p.tp, *q.tp)) return false;
              return eq(p.ne, q.ne) && split(p.backup, q.backup) && decl(p.declared, q.declared);
            },
            [&](const auto&) { return true; },
        },
        a.v());
  }

  bool eq(const NfTp& a, const NfTp& b) const {
    if (a.same(b)) return true;
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const nftp::Pi& p) {
              const auto& q = *b.as<nftp::Pi>();
              return eq(p.dom, q.dom) && bound(p.x, p.cod, q.x, q.cod, false);
            },
            [&](const nftp::Sigma& p) {
              const auto& q = *b.as<nftp::Sigma>();
              return eq(p.fst, q.fst) && bound(p.x, p.snd, q.x, q.snd, false);
            },
            [&](const nftp::Path& p) {
              const auto& q = *b.as<nftp::Path>();
              return bound(p.i, p.fam, q.i, q.fam, true) && eq(p.lhs, q.lhs) &&
                     eq(p.rhs, q.rhs);
            },
            [&](const nftp::Glue& g) {
              const auto& h = *b.as<nftp::Glue>();
              return cof(g.phi, h.phi) && eq(g.base, h.base) && split(g.fiber, h.fiber) &&
                     split(g.equiv, h.equiv);
            },
            [&](const nftp::Up& u) {
              const auto& w = *b.as<nftp::Up>();
              return eq(u.tp, w.tp) && split(u.backup, w.backup) &&
                     decl(u.declared, w.declared);
            },
            [&](const auto&) { return true; },
        },
        a.v());
  }

 private:
  bool bound_split(const std::string& x, const Split<Nf>& a, const std::string& y,
                   const Split<Nf>& b) const {
    if (x == y) return split(a, b);
    std::set<std::string> avoid;
    fv(a, avoid);
    fv(b, avoid);
    avoid.insert(x);
    avoid.insert(y);
    std::string z = fresh_name(x, avoid);
    NfSubst sa, sb;
    sa.dims.emplace(x, IExpr::var(z));
    sb.dims.emplace(y, IExpr::var(z));
    return split(apply(a, sa), apply(b, sb));
  }

  bool bound_netp(const std::string& x, const NeTp& a, const std::string& y,
                  const NeTp& b) const {
    if (x == y) return eq(a, b);
    std::set<std::string> avoid;
    fv(a, avoid);
    fv(b, avoid);
    avoid.insert(x);
    avoid.insert(y);
    std::string z = fresh_name(x, avoid);
    NfSubst sa, sb;
    sa.dims.emplace(x, IExpr::var(z));
    sb.dims.emplace(y, IExpr::var(z));
    return eq(apply(a, sa), apply(b, sb));
  }

  bool semantic_;
  std::vector<Cof> hyps_;
};

}  // namespace

bool alpha_eq(const Nf& a, const Nf& b) { return Comparer(false, {}).eq(a, b); }
bool alpha_eq(const Ne& a, const Ne& b) { return Comparer(false, {}).eq(a, b); }
bool alpha_eq(const NfTp& a, const NfTp& b) { return Comparer(false, {}).eq(a, b); }

bool struct_eq(const std::vector<Cof>& hyps, const Nf& a, const Nf& b) {
  return Comparer(true, hyps).eq(a, b);
}
bool struct_eq(const std::vector<Cof>& hyps, const Ne& a, const Ne& b) {
  return Comparer(true, hyps).eq(a, b);
}
bool struct_eq(const std::vector<Cof>& hyps, const NfTp& a, const NfTp& b) {
  return Comparer(true, hyps).eq(a, b);
}

}  // namespace cubnf
