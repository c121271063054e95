#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubnf/check.hpp"
#include "cubnf/decl.hpp"

namespace cubnf {

/// Outcome of one declaration.
struct DeclResult {
  std::string keyword;
  std::string name;
  Loc loc;
  bool ok = true;
  std::string error_kind;
  std::string error_path;
  std::string message;
  std::vector<Diagnostic> warnings;
};

struct FileReport {
  std::string file;
  std::vector<DeclResult> decls;
  bool any_error() const;
  bool any_warning() const;
};

/// 0 when everything passed cleanly, 1 on any error, 2 when only warnings.
int exit_code(const std::vector<FileReport>& reports);

DeclResult run_decl(const Decl& d, const CheckOptions& opts = {});
/// Parses and checks every declaration of a file. A declaration that fails to
/// parse is reported and the rest are still checked.
FileReport check_text(std::string_view text, const std::string& file,
                      const CheckOptions& opts = {});

/// Checks an nf declaration body at its type, splitting over the context's
/// cofibrations when there are any.
void check_body(Checker& c, const Ctx& ctx, const Tp& type, const Split<Nf>& body);

}  // namespace cubnf
