#include "cubnf/driver.hpp"

#include "cubnf/engine.hpp"

namespace cubnf {

bool FileReport::any_error() const {
  for (const auto& d : decls)
    if (!d.ok) return true;
  return false;
}

bool FileReport::any_warning() const {
  for (const auto& d : decls)
    if (!d.warnings.empty()) return true;
  return false;
}

int exit_code(const std::vector<FileReport>& reports) {
  bool warn = false;
  for (const auto& r : reports) {
    if (r.any_error()) return 1;
    warn = warn || r.any_warning();
  }
  return warn ? 2 : 0;
}

void check_body(Checker& c, const Ctx& ctx, const Tp& type, const Split<Nf>& body) {
  if (ctx.has_cofs()) {
    c.check_split(ctx.without_cofs(), Cof::meet(ctx.cof_hyps()), body, type);
    return;
  }
  if (body.arms.size() != 1 || !body.arms[0].guard.is_top())
    throw CheckFailure({"wrong-shape", "", "a body without context cofibrations is not a split"});
  c.check_nf(ctx, body.arms[0].body, type);
}

namespace {

void fail_with(DeclResult& r, std::string kind, std::string path, std::string msg) {
  r.ok = false;
  r.error_kind = std::move(kind);
  r.error_path = std::move(path);
  r.message = std::move(msg);
}

}  // namespace

DeclResult run_decl(const Decl& d, const CheckOptions& opts) {
  DeclResult r;
  r.keyword = decl_keyword(d.kind);
  r.name = d.name;
  r.loc = d.loc;
  Checker c(opts);
  try {
    switch (d.kind) {
      case Decl::Kind::Def:
        break;
      case Decl::Kind::Nf:
        check_body(c, d.ctx, *d.type, *d.lhs);
        break;
      case Decl::Kind::AssertEqNf: {
        check_body(c, d.ctx, *d.type, *d.lhs);
        check_body(c, d.ctx, *d.type, *d.rhs);
        bool same = d.ctx.has_cofs()
                        ? eq_nf(d.ctx.without_cofs(), *d.lhs, *d.rhs)
                        : eq_nf(d.ctx, d.lhs->arms.at(0).body, d.rhs->arms.at(0).body);
        if (!same) fail_with(r, "not-equal", "", "normal forms differ");
        break;
      }
      case Decl::Kind::AssertCof:
        if (!entails(d.hyps, *d.goal))
          fail_with(r, "not-entailed", "", "goal " + d.goal->str() + " is not entailed");
        break;
      case Decl::Kind::Reject: {
        DeclResult inner;
        if (d.inner) {
          inner = run_decl(*d.inner, opts);
        } else {
          fail_with(inner, d.inner_error_kind, "", d.inner_error);
        }
        r.name = inner.name;
        if (inner.ok)
          fail_with(r, "unexpected-success", "", "expected " + d.expect + " but it checks");
        else if (inner.error_kind != d.expect)
          fail_with(r, "wrong-error-kind", inner.error_path,
                    "expected " + d.expect + ", got " + inner.error_kind + ": " + inner.message);
        else
          r.message = inner.message;
        return r;
      }
    }
  } catch (const CheckFailure& e) {
    fail_with(r, e.diag().kind, e.diag().path, e.diag().message);
  } catch (const StarUnguarded& e) {
    fail_with(r, "star-unguarded", "", e.what());
  } catch (const std::exception& e) {
    fail_with(r, "internal-error", "", e.what());
  }
  r.warnings = c.warnings();
  return r;
}

FileReport check_text(std::string_view text, const std::string& file, const CheckOptions& opts) {
  FileReport rep;
  rep.file = file;
  std::vector<SExpr> forms;
  try {
    forms = read_sexprs(text);
  } catch (const ParseError& e) {
    DeclResult r;
    r.keyword = "file";
    r.loc = e.loc();
    fail_with(r, e.kind(), "", e.message());
    rep.decls.push_back(r);
    return rep;
  }
  for (const auto& s : forms) {
    try {
      rep.decls.push_back(run_decl(parse_decl(s), opts));
    } catch (const ParseError& e) {
      DeclResult r;
      r.keyword = s.is_list() && !s.items.empty() && s.items[0].is_atom() ? s.items[0].atom : "?";
      r.loc = e.loc();
      fail_with(r, e.kind(), "", e.message());
      rep.decls.push_back(r);
    }
  }
  return rep;
}

}  // namespace cubnf
