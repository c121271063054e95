#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubnf {

struct Loc {
  int line = 1;
  int col = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(Loc loc, const std::string& msg, std::string kind = "syntax")
      : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " + msg),
        loc_(loc),
        msg_(msg),
        kind_(std::move(kind)) {}
  Loc loc() const { return loc_; }
  const std::string& message() const { return msg_; }
  /// "syntax" or "unbound-name".
  const std::string& kind() const { return kind_; }

 private:
  Loc loc_;
  std::string msg_;
  std::string kind_;
};

struct SExpr {
  enum class Kind { Atom, List };
  Kind kind = Kind::Atom;
  std::string atom;
  std::vector<SExpr> items;
  Loc loc;

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_atom(std::string_view s) const { return kind == Kind::Atom && atom == s; }
  bool is_list() const { return kind == Kind::List; }
  /// True for a list whose first element is the given atom.
  bool is_form(std::string_view head) const {
    return is_list() && !items.empty() && items[0].is_atom(head);
  }
  const std::string& head() const;
};

/// Reads every top-level s-expression. `;` starts a line comment.
std::vector<SExpr> read_sexprs(std::string_view text);
SExpr read_sexpr(std::string_view text);

}  // namespace cubnf
