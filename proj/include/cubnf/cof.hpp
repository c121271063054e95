#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cubnf {

/// An interval expression: an endpoint or an interval variable.
class IExpr {
 public:
  enum class Kind { Zero, One, Var };

  static IExpr zero() { return IExpr(Kind::Zero, {}); }
  static IExpr one() { return IExpr(Kind::One, {}); }
  static IExpr var(std::string name) { return IExpr(Kind::Var, std::move(name)); }

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Var; }
  bool is_endpoint() const { return kind_ != Kind::Var; }
  const std::string& name() const { return name_; }

  // 0 < 1 < variables ordered by name.
  friend bool operator<(const IExpr& a, const IExpr& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.name_ < b.name_;
  }
  friend bool operator==(const IExpr& a, const IExpr& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }
  friend bool operator!=(const IExpr& a, const IExpr& b) { return !(a == b); }

  std::string str() const;

 private:
  IExpr(Kind k, std::string n) : kind_(k), name_(std::move(n)) {}
  Kind kind_;
  std::string name_;
};

/// Simultaneous substitution of interval variables.
using ISubst = std::map<std::string, IExpr>;

/// A cofibration: an equation between interval expressions, or a finite
/// meet or join. Top is the empty meet and bottom the empty join.
class Cof {
 public:
  enum class Kind { Eq, Meet, Join };

  static Cof equation(IExpr lhs, IExpr rhs);
  static Cof meet(std::vector<Cof> args);
  static Cof join(std::vector<Cof> args);
  static Cof top() { return meet({}); }
  static Cof bot() { return join({}); }

  Kind kind() const { return kind_; }
  const IExpr& lhs() const { return lhs_; }
  const IExpr& rhs() const { return rhs_; }
  const std::vector<Cof>& args() const { return args_; }

  bool is_top() const { return kind_ == Kind::Meet && args_.empty(); }
  bool is_bot() const { return kind_ == Kind::Join && args_.empty(); }

  friend bool operator==(const Cof& a, const Cof& b);
  friend bool operator!=(const Cof& a, const Cof& b) { return !(a == b); }
  friend bool operator<(const Cof& a, const Cof& b);

  std::string str() const;

 private:
  Cof(Kind k, IExpr l, IExpr r, std::vector<Cof> args)
      : kind_(k), lhs_(std::move(l)), rhs_(std::move(r)), args_(std::move(args)) {}
  Kind kind_;
  IExpr lhs_;
  IExpr rhs_;
  std::vector<Cof> args_;
};

/// One conjunctive clause of a cofibration in canonical form.
///
/// Atoms are stored oriented (smaller side first) and are derived from the
/// congruence closure: every non-representative member of a class appears
/// exactly once, paired with the class minimum. Two branches with the same
/// closure therefore have identical atom lists.
class Branch {
 public:
  Branch() = default;

  /// Builds the closure of a set of equations. The result may be inconsistent.
  static Branch of_atoms(const std::vector<std::pair<IExpr, IExpr>>& atoms);

  const std::vector<std::pair<IExpr, IExpr>>& atoms() const { return atoms_; }
  bool consistent() const { return consistent_; }
  bool is_top() const { return consistent_ && atoms_.empty(); }

  /// Class representative of an interval expression under this clause.
  IExpr rep(const IExpr& e) const;
  bool holds(const IExpr& a, const IExpr& b) const { return rep(a) == rep(b); }
  /// True when every atom of `other` holds under this clause.
  bool satisfies(const Branch& other) const;
  Branch meet(const Branch& other) const;

  /// Substitution sending every variable to its class representative.
  ISubst contraction() const;
  /// Classes as a partition, each class sorted, singletons omitted.
  std::vector<std::vector<IExpr>> classes() const;

  Cof to_cof() const;

  friend bool operator==(const Branch& a, const Branch& b) {
    return a.consistent_ == b.consistent_ && a.atoms_ == b.atoms_;
  }
  friend bool operator<(const Branch& a, const Branch& b) {
    if (a.atoms_.size() != b.atoms_.size()) return a.atoms_.size() < b.atoms_.size();
    return a.atoms_ < b.atoms_;
  }

 private:
  std::vector<std::pair<IExpr, IExpr>> atoms_;
  std::map<std::string, IExpr> reps_;  // non-representative variables only
  bool consistent_ = true;
};

IExpr isubst(const IExpr& e, const std::string& i, const IExpr& r);
IExpr isubst(const IExpr& e, const ISubst& s);
Cof csubst(const Cof& phi, const std::string& i, const IExpr& r);
Cof csubst(const Cof& phi, const ISubst& s);

/// Composite substitution: first `first`, then `then`.
ISubst compose(const ISubst& first, const ISubst& then);

std::set<std::string> cof_vars(const Cof& phi);

/// Canonical disjunctive normal form: consistent, absorbed, sorted branches.
std::vector<Branch> dnf(const Cof& phi);

/// Decides hyps |- goal in the theory of the face lattice.
bool entails(const std::vector<Cof>& hyps, const Cof& goal);

/// Extensional equality of cofibrations under hypotheses.
bool cof_eq(const std::vector<Cof>& hyps, const Cof& phi, const Cof& psi);

/// Eliminates a universal quantifier over the interval variable `i`.
Cof forall_elim(const std::string& i, const Cof& phi);

/// Join of canonical branches as a cofibration.
Cof cof_of_branches(const std::vector<Branch>& branches);

}  // namespace cubnf
