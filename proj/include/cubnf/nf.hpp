#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubnf/cof.hpp"
#include "cubnf/ref.hpp"

namespace cubnf {

struct NeNode;
struct NfNode;
struct NfTpNode;
using Ne = Ref<NeNode>;
using Nf = Ref<NfNode>;
using NfTp = Ref<NfTpNode>;

/// Neutral type: El of a neutral code.
struct NeTp {
  Ne code;
};

/// One arm of a cofibration split. The guard is a conjunction of equations
/// and the body lives in the context contracted by that conjunction.
template <class X>
struct Arm {
  Cof guard;
  X body;
};

/// A normal form decomposed up front along a cofibration. The empty split is
/// the unique element over bottom.
template <class X>
struct Split {
  std::vector<Arm<X>> arms;
};

/// Types at which a neutral may be stabilized into a normal form.
enum class UpTag { Bool, WBool, S1, El };
/// Higher inductive types whose hcomp is a value.
enum class HitKind { WBool, S1 };

const char* tag_name(UpTag t);
const char* hit_name(HitKind k);

namespace ne {
struct Var { std::string name; };
struct App { Ne head; Nf arg; };
struct Fst { Ne head; };
struct Snd { Ne head; };
struct If { std::string x; NfTp motive; Ne scrut; Nf tcase; Nf fcase; };
struct PApp { Ne head; IExpr r; };
/// Unglue of a neutral at Glue^phi; `phi` is the glue cofibration.
struct Unglue { Cof phi; Ne head; };
struct S1Elim { std::string x; NfTp motive; Ne scrut; Nf base; std::string i; Nf loop; };
/// The collapsed neutral, well formed only when its frontier holds.
struct Star { Cof phi; };
}  // namespace ne

namespace nf {
struct Lam { std::string x; Nf body; };
struct Pair { Nf fst; Nf snd; };
struct True {};
struct False {};
struct Code { NfTp tp; };
struct PLam { std::string i; Nf body; };
struct GlueIn { Cof phi; Nf base; Split<Nf> part; };
struct Base {};
struct Loop { IExpr r; };
/// hcomp as a value of a higher inductive type; the tube is split over
/// (i = r) or phi in the context extended with i.
struct HComp { HitKind kind; IExpr r; IExpr s; Cof phi; std::string i; Split<Nf> tube; };
/// hcomp stuck on a neutral type, with a stabilizer over the type's frontier.
struct HCompStuck {
  NeTp tp;
  IExpr r;
  IExpr s;
  Cof phi;
  std::string i;
  Split<Nf> tube;
  Split<Nf> backup;
  std::optional<Cof> declared;
};
/// coe stuck on a neutral type line; the stabilizer spans forall i of the
/// line's frontier.
struct CoeStuck {
  std::string i;
  NeTp fam;
  IExpr r;
  IExpr s;
  Nf arg;
  Split<Nf> backup;
  std::optional<Cof> declared;
};
/// Stabilized neutral. The backup spans the frontier of the neutral joined
/// with the frontier of its neutral type, when `tp` is present.
struct Up {
  UpTag tag;
  Ne ne;
  std::optional<NeTp> tp;
  Split<Nf> backup;
  std::optional<Cof> declared;
};
}  // namespace nf

namespace nftp {
struct Pi { std::string x; NfTp dom; NfTp cod; };
struct Sigma { std::string x; NfTp fst; NfTp snd; };
struct Bool {};
struct WBool {};
struct S1 {};
struct U {};
struct Path { std::string i; NfTp fam; Nf lhs; Nf rhs; };
struct Glue { Cof phi; NfTp base; Split<NfTp> fiber; Split<Nf> equiv; };
struct Up { NeTp tp; Split<NfTp> backup; std::optional<Cof> declared; };
}  // namespace nftp

struct NeNode {
  std::variant<ne::Var, ne::App, ne::Fst, ne::Snd, ne::If, ne::PApp, ne::Unglue, ne::S1Elim,
               ne::Star>
      v;
};

struct NfNode {
  std::variant<nf::Lam, nf::Pair, nf::True, nf::False, nf::Code, nf::PLam, nf::GlueIn,
               nf::Base, nf::Loop, nf::HComp, nf::HCompStuck, nf::CoeStuck, nf::Up>
      v;
};

struct NfTpNode {
  std::variant<nftp::Pi, nftp::Sigma, nftp::Bool, nftp::WBool, nftp::S1, nftp::U, nftp::Path,
               nftp::Glue, nftp::Up>
      v;
};

/// Frontier of instability: the cofibration under which a neutral decays.
Cof frontier(const Ne& e);
Cof frontier(const NeTp& a);

/// True when the neutral contains a collapsed neutral anywhere in its spine.
bool has_star(const Ne& e);

/// Node count used as the termination metric for canonicalization.
std::size_t size(const Nf& t);
std::size_t size(const Ne& e);
std::size_t size(const NfTp& a);
template <class X>
std::size_t size(const Split<X>& s) {
  std::size_t n = 1;
  for (const auto& a : s.arms) n += size(a.body);
  return n;
}

std::set<std::string> free_names(const Nf& t);
std::set<std::string> free_names(const Ne& e);
std::set<std::string> free_names(const NfTp& a);

/// Simultaneous renaming of term variables and substitution of interval
/// variables on normal forms. Purely structural: no decay is performed, but
/// split arms are re-decomposed along the substituted cofibrations.
struct NfSubst {
  std::map<std::string, std::string> terms;
  ISubst dims;
  bool empty() const { return terms.empty() && dims.empty(); }
};

Nf apply(const Nf& t, const NfSubst& s);
Ne apply(const Ne& e, const NfSubst& s);
NfTp apply(const NfTp& a, const NfSubst& s);
NeTp apply(const NeTp& a, const NfSubst& s);
Split<Nf> apply(const Split<Nf>& sp, const NfSubst& s);
Split<NfTp> apply(const Split<NfTp>& sp, const NfSubst& s);

/// Canonical arm list: every guard replaced by its canonical clause,
/// inconsistent arms dropped, duplicate and absorbed arms removed, sorted.
template <class X>
Split<X> normalize_arms(const Split<X>& sp);

/// Renames a bound name of `body` to `to`.
Nf rename_term(const Nf& body, const std::string& from, const std::string& to);
Nf rename_dim(const Nf& body, const std::string& from, const std::string& to);
NfTp rename_term(const NfTp& body, const std::string& from, const std::string& to);
NfTp rename_dim(const NfTp& body, const std::string& from, const std::string& to);

/// Structural equality up to renaming of bound variables; cofibrations and
/// split arms compared syntactically.
bool alpha_eq(const Nf& a, const Nf& b);
bool alpha_eq(const Ne& a, const Ne& b);
bool alpha_eq(const NfTp& a, const NfTp& b);

/// Structural comparison with cofibrations compared extensionally under
/// `hyps` and split arms matched by canonical clause. Declared frontier
/// annotations are ignored. Does not canonicalize.
bool struct_eq(const std::vector<Cof>& hyps, const Nf& a, const Nf& b);
bool struct_eq(const std::vector<Cof>& hyps, const Ne& a, const Ne& b);
bool struct_eq(const std::vector<Cof>& hyps, const NfTp& a, const NfTp& b);

}  // namespace cubnf
