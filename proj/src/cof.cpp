#include "cubnf/cof.hpp"

#include <algorithm>
#include <sstream>

namespace cubnf {

std::string IExpr::str() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Var: return name_;
  }
  return "?";
}

Cof Cof::equation(IExpr lhs, IExpr rhs) {
  return Cof(Kind::Eq, std::move(lhs), std::move(rhs), {});
}
Cof Cof::meet(std::vector<Cof> args) {
  return Cof(Kind::Meet, IExpr::zero(), IExpr::zero(), std::move(args));
}
Cof Cof::join(std::vector<Cof> args) {
  return Cof(Kind::Join, IExpr::zero(), IExpr::zero(), std::move(args));
}

bool operator==(const Cof& a, const Cof& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Cof::Kind::Eq) return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
  return a.args_ == b.args_;
}

bool operator<(const Cof& a, const Cof& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.kind_ == Cof::Kind::Eq) {
    if (a.lhs_ != b.lhs_) return a.lhs_ < b.lhs_;
    return a.rhs_ < b.rhs_;
  }
  return std::lexicographical_compare(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                      b.args_.end());
}

std::string Cof::str() const {
  if (is_top()) return "top";
  if (is_bot()) return "bot";
  std::ostringstream os;
  switch (kind_) {
    case Kind::Eq: os << "(= " << lhs_.str() << ' ' << rhs_.str() << ')'; break;
    case Kind::Meet:
    case Kind::Join:
      os << (kind_ == Kind::Meet ? "(and" : "(or");
      for (const auto& a : args_) os << ' ' << a.str();
      os << ')';
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Branches

namespace {

struct UnionFind {
  std::map<IExpr, IExpr> parent;

  IExpr find(const IExpr& e) {
    auto it = parent.find(e);
    if (it == parent.end()) return e;
    IExpr root = find(it->second);
    it->second = root;
    return root;
  }
  // The smaller element becomes the root so roots are class minima.
  void unite(const IExpr& a, const IExpr& b) {
    IExpr ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent.insert_or_assign(rb, ra);
  }
};

}  // namespace

Branch Branch::of_atoms(const std::vector<std::pair<IExpr, IExpr>>& atoms) {
  UnionFind uf;
  std::set<IExpr> members;
  for (const auto& [a, b] : atoms) {
    members.insert(a);
    members.insert(b);
    uf.unite(a, b);
  }
  Branch out;
  out.consistent_ = !(uf.find(IExpr::zero()) == uf.find(IExpr::one()));
  for (const auto& m : members) {
    IExpr r = uf.find(m);
    if (r == m) continue;
    out.atoms_.emplace_back(r, m);
    if (m.is_var()) out.reps_.emplace(m.name(), r);
  }
  std::sort(out.atoms_.begin(), out.atoms_.end());
  return out;
}

IExpr Branch::rep(const IExpr& e) const {
  if (!e.is_var()) {
    // 1 may be merged into 0 in an inconsistent clause.
    if (e.kind() == IExpr::Kind::One && !consistent_) return IExpr::zero();
    return e;
  }
  auto it = reps_.find(e.name());
  return it == reps_.end() ? e : it->second;
}

bool Branch::satisfies(const Branch& other) const {
  if (!consistent_) return true;
  for (const auto& [a, b] : other.atoms_)
    if (!holds(a, b)) return false;
  return other.consistent_;
}

Branch Branch::meet(const Branch& other) const {
  std::vector<std::pair<IExpr, IExpr>> all = atoms_;
  all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
  if (!consistent_ || !other.consistent_) all.emplace_back(IExpr::zero(), IExpr::one());
  return of_atoms(all);
}

ISubst Branch::contraction() const {
  return ISubst(reps_.begin(), reps_.end());
}

std::vector<std::vector<IExpr>> Branch::classes() const {
  std::map<IExpr, std::vector<IExpr>> by_rep;
  for (const auto& [r, m] : atoms_) {
    auto& cls = by_rep[r];
    if (cls.empty()) cls.push_back(r);
    cls.push_back(m);
  }
  std::vector<std::vector<IExpr>> out;
  for (auto& [r, cls] : by_rep) out.push_back(std::move(cls));
  return out;
}

Cof Branch::to_cof() const {
  if (!consistent_) return Cof::bot();
  if (atoms_.size() == 1) return Cof::equation(atoms_[0].first, atoms_[0].second);
  std::vector<Cof> eqs;
  for (const auto& [a, b] : atoms_) eqs.push_back(Cof::equation(a, b));
  return Cof::meet(std::move(eqs));
}

// ---------------------------------------------------------------------------
// Substitution

IExpr isubst(const IExpr& e, const std::string& i, const IExpr& r) {
  return e.is_var() && e.name() == i ? r : e;
}

IExpr isubst(const IExpr& e, const ISubst& s) {
  if (!e.is_var()) return e;
  auto it = s.find(e.name());
  return it == s.end() ? e : it->second;
}

Cof csubst(const Cof& phi, const ISubst& s) {
  switch (phi.kind()) {
    case Cof::Kind::Eq: return Cof::equation(isubst(phi.lhs(), s), isubst(phi.rhs(), s));
    case Cof::Kind::Meet:
    case Cof::Kind::Join: {
      std::vector<Cof> args;
      args.reserve(phi.args().size());
      for (const auto& a : phi.args()) args.push_back(csubst(a, s));
      return phi.kind() == Cof::Kind::Meet ? Cof::meet(std::move(args))
                                           : Cof::join(std::move(args));
    }
  }
  return phi;
}

Cof csubst(const Cof& phi, const std::string& i, const IExpr& r) {
  return csubst(phi, ISubst{{i, r}});
}

ISubst compose(const ISubst& first, const ISubst& then) {
  ISubst out;
  for (const auto& [v, e] : first) out.insert_or_assign(v, isubst(e, then));
  for (const auto& [v, e] : then) out.emplace(v, e);
  // Drop identity entries so that composites compare cleanly.
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_var() && it->second.name() == it->first)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

static void collect_vars(const Cof& phi, std::set<std::string>& out) {
  if (phi.kind() == Cof::Kind::Eq) {
    if (phi.lhs().is_var()) out.insert(phi.lhs().name());
    if (phi.rhs().is_var()) out.insert(phi.rhs().name());
    return;
  }
  for (const auto& a : phi.args()) collect_vars(a, out);
}

std::set<std::string> cof_vars(const Cof& phi) {
  std::set<std::string> out;
  collect_vars(phi, out);
  return out;
}

// ---------------------------------------------------------------------------
// Decision procedures

namespace {

// Sort, deduplicate and drop every branch that implies a different one.
std::vector<Branch> reduce(std::vector<Branch> bs) {
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::vector<Branch> out;
  for (std::size_t k = 0; k < bs.size(); ++k) {
    bool absorbed = false;
    for (std::size_t l = 0; l < bs.size() && !absorbed; ++l)
      absorbed = l != k && bs[k].satisfies(bs[l]);
    if (!absorbed) out.push_back(bs[k]);
  }
  return out;
}

std::vector<Branch> dnf_rec(const Cof& phi) {
  switch (phi.kind()) {
    case Cof::Kind::Eq: {
      Branch b = Branch::of_atoms({{phi.lhs(), phi.rhs()}});
      if (!b.consistent()) return {};
      return {b};
    }
    case Cof::Kind::Meet: {
      std::vector<Branch> acc{Branch()};
      for (const auto& arg : phi.args()) {
        std::vector<Branch> next;
        for (const auto& d : dnf_rec(arg))
          for (const auto& b : acc) {
            Branch m = b.meet(d);
            if (m.consistent()) next.push_back(std::move(m));
          }
        acc = reduce(std::move(next));
        if (acc.empty()) break;
      }
      return acc;
    }
    case Cof::Kind::Join: {
      std::vector<Branch> acc;
      for (const auto& arg : phi.args()) {
        auto d = dnf_rec(arg);
        acc.insert(acc.end(), d.begin(), d.end());
      }
      return reduce(std::move(acc));
    }
  }
  return {};
}

}  // namespace

std::vector<Branch> dnf(const Cof& phi) { return dnf_rec(phi); }

// A clause entails a disjunction exactly when it entails one disjunct: the
// generic point of a clause (each class collapsed to its representative)
// satisfies a disjunct only if the clause itself satisfies it.
bool entails(const std::vector<Cof>& hyps, const Cof& goal) {
  auto ctx = dnf(Cof::meet(hyps));
  if (ctx.empty()) return true;
  auto target = dnf(goal);
  for (const auto& b : ctx) {
    bool ok = std::any_of(target.begin(), target.end(),
                          [&](const Branch& c) { return b.satisfies(c); });
    if (!ok) return false;
  }
  return true;
}

bool cof_eq(const std::vector<Cof>& hyps, const Cof& phi, const Cof& psi) {
  auto with = [&](const Cof& extra) {
    auto h = hyps;
    h.push_back(extra);
    return h;
  };
  return entails(with(phi), psi) && entails(with(psi), phi);
}

Cof forall_elim(const std::string& i, const Cof& phi) {
  switch (phi.kind()) {
    case Cof::Kind::Eq: {
      bool l = phi.lhs().is_var() && phi.lhs().name() == i;
      bool r = phi.rhs().is_var() && phi.rhs().name() == i;
      if (!l && !r) return phi;
      if (l && r) return Cof::top();
      return Cof::bot();
    }
    case Cof::Kind::Meet:
    case Cof::Kind::Join: {
      std::vector<Cof> args;
      for (const auto& a : phi.args()) args.push_back(forall_elim(i, a));
      return phi.kind() == Cof::Kind::Meet ? Cof::meet(std::move(args))
                                           : Cof::join(std::move(args));
    }
  }
  return phi;
}

Cof cof_of_branches(const std::vector<Branch>& branches) {
  if (branches.size() == 1) return branches[0].to_cof();
  std::vector<Cof> args;
  for (const auto& b : branches) args.push_back(b.to_cof());
  return Cof::join(std::move(args));
}

}  // namespace cubnf
