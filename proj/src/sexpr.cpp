#include "cubnf/sexpr.hpp"

#include <cctype>

namespace cubnf {

const std::string& SExpr::head() const {
  static const std::string empty;
  if (!is_list() || items.empty() || !items[0].is_atom()) return empty;
  return items[0].atom;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) throw ParseError(loc_, "unexpected end of input");
    SExpr out;
    out.loc = loc_;
    char c = text_[pos_];
    if (c == ')') throw ParseError(loc_, "unexpected ')'");
    if (c == '(') {
      advance();
      out.kind = SExpr::Kind::List;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) throw ParseError(out.loc, "unclosed '('");
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        out.items.push_back(read());
      }
      return out;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) advance();
    out.atom = std::string(text_.substr(start, pos_ - start));
    return out;
  }

 private:
  static bool is_delim(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.col = 1;
    } else {
      ++loc_.col;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Loc loc_;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) {
  Reader r(text);
  std::vector<SExpr> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

SExpr read_sexpr(std::string_view text) {
  Reader r(text);
  SExpr e = r.read();
  if (!r.at_end()) throw ParseError({}, "trailing input after expression");
  return e;
}

}  // namespace cubnf
