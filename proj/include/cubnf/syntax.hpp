#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubnf/cof.hpp"
#include "cubnf/ref.hpp"

namespace cubnf {

struct TmNode;
struct TpNode;
using Tm = Ref<TmNode>;
using Tp = Ref<TpNode>;

template <class X>
using RawArms = std::vector<std::pair<Cof, X>>;

// Raw types.
namespace tp {
struct Pi { std::string x; Tp dom; Tp cod; };
struct Sigma { std::string x; Tp fst; Tp snd; };
struct Bool {};
struct WBool {};
struct S1 {};
struct U {};
struct El { Tm code; };
/// Dependent path type; `i` binds in `fam` only.
struct Path { std::string i; Tp fam; Tm lhs; Tm rhs; };
/// Glue type. `fiber` and `equiv` are meaningful under `phi` and are
/// usually case splits over it.
struct Glue { Cof phi; Tp base; Tp fiber; Tm equiv; };
struct Split { RawArms<Tp> arms; };
}  // namespace tp

// Raw terms.
namespace tm {
struct Var { std::string name; };
struct Lam { std::string x; Tm body; };
struct App { Tm fn; Tm arg; };
struct Pair { Tm fst; Tm snd; };
struct Fst { Tm pair; };
struct Snd { Tm pair; };
struct True {};
struct False {};
struct If { std::string x; Tp motive; Tm scrut; Tm tcase; Tm fcase; };
struct Code { Tp tp; };
struct PLam { std::string i; Tm body; };
struct PApp { Tm path; IExpr r; };
struct HComp { Tp tp; IExpr r; IExpr s; Cof phi; std::string i; Tm tube; };
struct Coe { std::string i; Tp fam; IExpr r; IExpr s; Tm arg; };
struct GlueIn { Cof phi; Tm base; Tm part; };
struct Unglue { Tm glued; };
struct Base {};
struct Loop { IExpr r; };
struct S1Elim { std::string x; Tp motive; Tm scrut; Tm base; std::string i; Tm loop; };
struct Split { RawArms<Tm> arms; };
}  // namespace tm

struct TpNode {
  std::variant<tp::Pi, tp::Sigma, tp::Bool, tp::WBool, tp::S1, tp::U, tp::El, tp::Path,
               tp::Glue, tp::Split>
      v;
};

struct TmNode {
  std::variant<tm::Var, tm::Lam, tm::App, tm::Pair, tm::Fst, tm::Snd, tm::True, tm::False,
               tm::If, tm::Code, tm::PLam, tm::PApp, tm::HComp, tm::Coe, tm::GlueIn,
               tm::Unglue, tm::Base, tm::Loop, tm::S1Elim, tm::Split>
      v;
};

/// Typing context: term variables, interval variables and cofibration
/// assumptions. A term binding may lack a type when it was introduced by an
/// unannotated binder during conversion checking.
class Ctx {
 public:
  struct Entry {
    enum class Kind { Term, Dim, Cof };
    Kind kind;
    std::string name;
    std::optional<Tp> type;
    std::optional<Cof> cof;
  };

  Ctx() = default;

  Ctx with_term(std::string name, std::optional<Tp> type) const;
  Ctx with_dim(std::string name) const;
  Ctx with_cof(Cof phi) const;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Type of a term variable; nullopt when unbound or untyped.
  std::optional<Tp> lookup(const std::string& name) const;
  bool has_term(const std::string& name) const;
  bool has_dim(const std::string& name) const;
  bool has_cofs() const;
  std::vector<Cof> cof_hyps() const;
  std::set<std::string> names() const;
  std::vector<std::string> dims() const;

  /// Removes every dimension in the domain of `s` and substitutes through the
  /// remaining entries.
  Ctx contract(const ISubst& s) const;
  /// The context with all cofibration assumptions dropped.
  Ctx without_cofs() const;

 private:
  std::vector<Entry> entries_;
};

std::set<std::string> free_names(const Tm& t);
std::set<std::string> free_names(const Tp& a);

/// A fresh name based on `base` not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Simultaneous capture-avoiding substitution of term and interval variables.
struct RawSubst {
  std::map<std::string, Tm> terms;
  ISubst dims;
  bool empty() const { return terms.empty() && dims.empty(); }
};

Tm apply(const Tm& t, const RawSubst& s);
Tp apply(const Tp& a, const RawSubst& s);

Tm subst_tm(const Tm& t, const std::string& x, const Tm& u);
Tp subst_tp(const Tp& a, const std::string& x, const Tm& u);
Tm subst_i_tm(const Tm& t, const std::string& i, const IExpr& r);
Tp subst_i_tp(const Tp& a, const std::string& i, const IExpr& r);
Tm subst_i_tm(const Tm& t, const ISubst& s);
Tp subst_i_tp(const Tp& a, const ISubst& s);

/// Equality up to renaming of bound variables. Cofibrations and interval
/// expressions are compared syntactically.
bool alpha_eq(const Tm& a, const Tm& b);
bool alpha_eq(const Tp& a, const Tp& b);

/// Non-dependent path sugar.
Tp path_type(const Tp& a, const Tm& lhs, const Tm& rhs);
/// Function type sugar with an unused binder.
Tp arrow(const Tp& a, const Tp& b);
/// Carrier of an equivalence A ~ B: a forward map and a backward map. The
/// witness structure beyond the forward map is not inspected.
Tp equiv_type(const Tp& a, const Tp& b);
/// `e(a)` for an equivalence `e`.
Tm apply_equiv(const Tm& e, const Tm& a);

}  // namespace cubnf
