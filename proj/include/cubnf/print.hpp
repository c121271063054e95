#pragma once

#include <string>

#include "cubnf/decl.hpp"

namespace cubnf {

SExpr to_sexpr(const IExpr& r);
SExpr to_sexpr(const Cof& phi);
SExpr to_sexpr(const Tm& t);
SExpr to_sexpr(const Tp& a);
SExpr to_sexpr(const Nf& t);
SExpr to_sexpr(const Ne& e);
SExpr to_sexpr(const NfTp& a);
SExpr to_sexpr(const Decl& d);

/// Single-line rendering.
std::string render(const SExpr& s);

template <class X>
std::string print(const X& x) {
  return render(to_sexpr(x));
}

}  // namespace cubnf
