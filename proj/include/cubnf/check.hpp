#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubnf/convert.hpp"
#include "cubnf/nf.hpp"
#include "cubnf/syntax.hpp"

namespace cubnf {

/// Error kinds: rule-mismatch, frontier-mismatch, side-condition-failed,
/// side-condition-unknown, wrong-shape, overlap-disagreement,
/// backup-domain-mismatch, unbound-name, star-unguarded.
struct Diagnostic {
  std::string kind;
  std::string path;
  std::string message;
};

class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(Diagnostic d)
      : std::runtime_error(d.kind + " at " + (d.path.empty() ? "." : d.path) + ": " + d.message),
        diag_(std::move(d)) {}
  const Diagnostic& diag() const { return diag_; }

 private:
  Diagnostic diag_;
};

struct CheckOptions {
  bool strict = false;
  std::size_t fuel = kDefaultFuel;
};

/// Synthesized information for a neutral: its type (absent for a collapsed
/// neutral, which inhabits every type) and its frontier.
struct NeInfo {
  std::optional<Tp> type;
  Cof frontier;
};

/// Well-formedness checker for normal and neutral forms. Contexts must be
/// free of cofibration assumptions; splits carry them instead. The first
/// error is thrown as CheckFailure; undecided side conditions are collected
/// as warnings, or thrown under strict mode.
class Checker {
 public:
  explicit Checker(CheckOptions opts = {}) : opts_(opts) {}

  void check_nf(const Ctx& ctx, const Nf& t, const Tp& type);
  void check_nftp(const Ctx& ctx, const NfTp& a);
  NeInfo check_ne(const Ctx& ctx, const Ne& e);
  Cof check_netp(const Ctx& ctx, const NeTp& a);

  /// Checks a split over `phi`; each arm body is checked at `type` contracted
  /// by the arm's clause. `shape_kind` names the error for a domain mismatch.
  void check_split(const Ctx& ctx, const Cof& phi, const Split<Nf>& s, const Tp& type,
                   const std::string& shape_kind = "wrong-shape");
  void check_split_tp(const Ctx& ctx, const Cof& phi, const Split<NfTp>& s,
                      const std::string& shape_kind = "wrong-shape");

  const std::vector<Diagnostic>& warnings() const { return warnings_; }

 private:
  friend class PathSeg;
  [[noreturn]] void fail(const std::string& kind, const std::string& msg) const;
  std::string path() const;
  void undecided(const std::string& msg);

  void require_cof_free(const Ctx& ctx) const;
  void scope(const Ctx& ctx, const IExpr& r) const;
  void scope(const Ctx& ctx, const Cof& phi) const;
  void expect_tp(const Ctx& ctx, const Tp& want, const Tp& got, const std::string& what);
  void side(const Ctx& ctx, const Tm& a, const Tm& b, const std::optional<Tp>& type,
            const std::string& what);
  void side_tp(const Ctx& ctx, const Tp& a, const Tp& b, const std::string& what);
  void declared(const std::optional<Cof>& decl, const Cof& computed);

  template <class X>
  void split_generic(const Ctx& ctx, const Cof& phi, const Split<X>& s,
                     const std::string& shape_kind,
                     const std::function<void(const Ctx&, const Branch&, const X&)>& leaf);

  // Each backup arm must agree with `raw` at `type` under its clause.
  void backup_sides(const Ctx& ctx, const Tm& raw, const Split<Nf>& backup, const Tp& type);
  Tm embed_checked(const Nf& t);
  std::string fresh(const Ctx& ctx, const std::string& base, const std::set<std::string>& more) const;

  CheckOptions opts_;
  std::vector<Diagnostic> warnings_;
  std::vector<std::string> path_;
};

// Smart constructors: validate the backup domain against the frontier and
// return the canonical representative, decaying when the frontier holds.
Nf mk_up(const Ctx& ctx, UpTag tag, const Ne& ne, const std::optional<NeTp>& tp,
         const Split<Nf>& backup);
NfTp mk_up_tp(const Ctx& ctx, const NeTp& tp, const Split<NfTp>& backup);
Nf mk_hcomp_stuck(const Ctx& ctx, const NeTp& tp, const IExpr& r, const IExpr& s, const Cof& phi,
                  const std::string& i, const Split<Nf>& tube, const Split<Nf>& backup);
Nf mk_coe_stuck(const Ctx& ctx, const std::string& i, const NeTp& fam, const IExpr& r,
                const IExpr& s, const Nf& arg, const Split<Nf>& backup);

}  // namespace cubnf
