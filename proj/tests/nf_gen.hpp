#pragma once

// Random well-formed normal forms over a fixed context. Backups are built
// from the canonical clauses of the frontier, so every generated term checks.

#include <random>
#include <string>
#include <vector>

#include "cof_family.hpp"
#include "cubnf/decl.hpp"
#include "cubnf/engine.hpp"
#include "cubnf/nf.hpp"

namespace gen {

using namespace cubnf;

enum class Ty { Bool, S1, Fun, Pair };

inline Ctx base_ctx() {
  Ctx g;
  g = g.with_term("f", parse_tp("(pi (x bool) bool)"));
  g = g.with_term("b", tp::Bool{});
  g = g.with_term("p", parse_tp("(path bool true false)"));
  g = g.with_term("q", parse_tp("(path bool b b)", g));
  g = g.with_term("c", tp::S1{});
  g = g.with_term("l", parse_tp("(path s1 base base)"));
  return g.with_dim("i").with_dim("j").with_dim("k");
}

inline Tp type_of(Ty t) {
  switch (t) {
    case Ty::Bool: return tp::Bool{};
    case Ty::S1: return tp::S1{};
    case Ty::Fun: return parse_tp("(pi (x bool) bool)");
    case Ty::Pair: return parse_tp("(sigma (x bool) s1)");
  }
  return tp::Bool{};
}

inline Nf up(UpTag tag, Ne e, Split<Nf> backup = {}) {
  return nf::Up{tag, std::move(e), std::nullopt, std::move(backup), std::nullopt};
}
inline Ne var(const std::string& x) { return ne::Var{x}; }

/// Backup of a path application at r, given the values at each endpoint.
inline Split<Nf> endpoint_backup(const IExpr& r, const Nf& at0, const Nf& at1) {
  Split<Nf> out;
  Cof f = Cof::join({Cof::equation(r, IExpr::zero()), Cof::equation(r, IExpr::one())});
  for (const auto& b : dnf(f)) out.arms.push_back({b.to_cof(), b.rep(r) == IExpr::zero() ? at0 : at1});
  return out;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  Ty ty() { return static_cast<Ty>(n(4)); }

  Nf of(Ty t, int depth) {
    switch (t) {
      case Ty::Bool: return boolean(depth);
      case Ty::S1: return circle(depth);
      case Ty::Fun: return fun(depth);
      case Ty::Pair: return nf::Pair{boolean(depth), circle(depth)};
    }
    return nf::True{};
  }

  IExpr dim() {
    switch (n(6)) {
      case 0: return IExpr::zero();
      case 1: return IExpr::one();
      default: return IExpr::var(dims_[n(static_cast<int>(dims_.size()))]);
    }
  }

  Nf boolean(int depth) {
    int c = depth <= 0 ? n(5) : n(10);
    switch (c) {
      case 0: return nf::True{};
      case 1: return nf::False{};
      case 2: return up(UpTag::Bool, var(bools_[n(static_cast<int>(bools_.size()))]));
      case 3: {
        IExpr r = dim();
        return up(UpTag::Bool, ne::PApp{var("p"), r}, endpoint_backup(r, nf::True{}, nf::False{}));
      }
      case 4: {
        IExpr r = dim();
        Nf v = up(UpTag::Bool, var("b"));
        return up(UpTag::Bool, ne::PApp{var("q"), r}, endpoint_backup(r, v, v));
      }
      case 5: return up(UpTag::Bool, ne::App{var("f"), boolean(depth - 1)});
      case 6:
        return up(UpTag::Bool, ne::If{"y", nftp::Bool{}, var(bools_[n(static_cast<int>(bools_.size()))]),
                                      boolean(depth - 1), boolean(depth - 1)});
      case 7: {
        IExpr r = dim();
        Nf t = boolean(depth - 1);
        Nf e = boolean(depth - 1);
        Split<Nf> backup;
        Cof f = Cof::join({Cof::equation(r, IExpr::zero()), Cof::equation(r, IExpr::one())});
        for (const auto& b : dnf(f))
          backup.arms.push_back(
              {b.to_cof(), subst_nf(Ctx{}, b.rep(r) == IExpr::zero() ? t : e, b.contraction())});
        return up(UpTag::Bool, ne::If{"y", nftp::Bool{}, ne::PApp{var("p"), r}, t, e}, backup);
      }
      case 8: {
        Nf v = boolean(depth - 1);
        return up(UpTag::Bool, ne::S1Elim{"x", nftp::Bool{}, var("c"), v, "m", v});
      }
      default: return up(UpTag::Bool, ne::App{var("f"), boolean(depth - 1)});
    }
  }

  Nf circle(int depth) {
    int c = depth <= 0 ? n(4) : n(7);
    switch (c) {
      case 0: return nf::Base{};
      case 1: return nf::Loop{dim()};
      case 2: return up(UpTag::S1, var("c"));
      case 3: {
        IExpr r = dim();
        return up(UpTag::S1, ne::PApp{var("l"), r}, endpoint_backup(r, nf::Base{}, nf::Base{}));
      }
      case 4:
      case 5: {
        // Constant tube: every arm is the same value, contracted.
        IExpr r = dim();
        IExpr s = dim();
        Cof phi = family::random_cof(rng_, dims_, 1);
        Nf v = circle(depth - 1);
        Split<Nf> tube;
        for (const auto& b : dnf(Cof::join({Cof::equation(IExpr::var("h"), r), phi})))
          tube.arms.push_back({b.to_cof(), subst_nf(Ctx{}, v, b.contraction())});
        return nf::HComp{HitKind::S1, r, s, phi, "h", tube};
      }
      default:
        return up(UpTag::S1, ne::S1Elim{"x", nftp::S1{}, var("c"), nf::Base{}, "m",
                                        nf::Loop{IExpr::var("m")}});
    }
  }

  Nf fun(int depth) {
    std::string x = "x" + std::to_string(bools_.size());
    bools_.push_back(x);
    Nf body = boolean(depth);
    bools_.pop_back();
    return nf::Lam{x, body};
  }

 private:
  int n(int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng_); }

  std::mt19937 rng_;
  std::vector<std::string> dims_{"i", "j", "k"};
  std::vector<std::string> bools_{"b"};
};

}  // namespace gen
