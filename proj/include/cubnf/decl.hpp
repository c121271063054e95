#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubnf/cof.hpp"
#include "cubnf/nf.hpp"
#include "cubnf/sexpr.hpp"
#include "cubnf/syntax.hpp"

namespace cubnf {

/// A top-level declaration of an input file.
struct Decl {
  enum class Kind { Def, Nf, AssertEqNf, AssertCof, Reject };
  Kind kind = Kind::Def;
  Loc loc;
  std::string name;
  Ctx ctx;
  std::optional<Tp> type;
  std::optional<Tm> term;
  // Normal-form payloads. When the context carries cofibrations these are
  // splits over their meet; otherwise a single arm guarded by top.
  std::optional<Split<Nf>> lhs;
  std::optional<Split<Nf>> rhs;
  std::vector<Cof> hyps;
  std::optional<Cof> goal;
  // For Reject: the error kind the inner declaration must produce.
  std::string expect;
  std::shared_ptr<const Decl> inner;
  // For Reject whose inner declaration does not parse: its source and error.
  std::optional<SExpr> inner_src;
  std::string inner_error_kind;
  std::string inner_error;
};

const char* decl_keyword(Decl::Kind k);

std::vector<Decl> parse_decls(std::string_view text);
Decl parse_decl(const SExpr& s);

/// Cofibration with free interval variables allowed.
Cof parse_cof(std::string_view text);
Cof parse_cof(const SExpr& s);

// Single expressions, scoped by `ctx`.
Tm parse_tm(std::string_view text, const Ctx& ctx = {});
Tp parse_tp(std::string_view text, const Ctx& ctx = {});
Nf parse_nf(std::string_view text, const Ctx& ctx = {});
Ne parse_ne(std::string_view text, const Ctx& ctx = {});
NfTp parse_nftp(std::string_view text, const Ctx& ctx = {});

}  // namespace cubnf
