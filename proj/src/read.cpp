#include <cctype>
#include <set>

#include "cubnf/decl.hpp"

namespace cubnf {

const char* decl_keyword(Decl::Kind k) {
  switch (k) {
    case Decl::Kind::Def: return "def";
    case Decl::Kind::Nf: return "nf";
    case Decl::Kind::AssertEqNf: return "assert-eq-nf";
    case Decl::Kind::AssertCof: return "assert-cof";
    case Decl::Kind::Reject: return "reject";
  }
  return "?";
}

namespace {

const std::set<std::string> kReserved = {
    "0",      "1",     "top",      "bot",     "and",      "or",          "forall",  "=",
    "pi",     "sigma", "bool",     "wbool",   "s1",       "U",           "el",      "path",
    "glue",   "tsplit", "lam",     "app",     "pair",     "fst",         "snd",     "true",
    "false",  "if",    "code",     "plam",    "papp",     "hcomp",       "coe",     "glue-in",
    "unglue", "base",  "loop",     "s1-elim", "split",    "hcomp-stuck", "coe-stuck", "up",
    "up-tp",  "star",  "frontier",
};

bool is_ident(const std::string& s) {
  if (s.empty() || kReserved.count(s)) return false;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(c0) || c0 == '_')) return false;
  for (char c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_' || c == '-' || c == '\'')) return false;
  }
  return true;
}

[[noreturn]] void fail(const SExpr& s, const std::string& msg) { throw ParseError(s.loc, msg); }

class Parser {
 public:
  explicit Parser(bool free_dims = false) : free_dims_(free_dims) {}

  void bind_ctx(const Ctx& ctx) {
    for (const auto& e : ctx.entries()) {
      if (e.kind == Ctx::Entry::Kind::Term) terms_.insert(e.name);
      if (e.kind == Ctx::Entry::Kind::Dim) dims_.insert(e.name);
    }
  }

  // --- shape helpers ------------------------------------------------------

  static void arity(const SExpr& s, std::size_t n) {
    if (s.items.size() != n)
      fail(s, "'" + s.head() + "' expects " + std::to_string(n - 1) + " arguments");
  }

  static std::string ident(const SExpr& s) {
    if (!s.is_atom() || !(is_ident(s.atom))) fail(s, "expected an identifier");
    return s.atom;
  }

  static std::pair<std::string, const SExpr*> binder(const SExpr& s) {
    if (!s.is_list() || s.items.size() != 2) fail(s, "expected a binder (name X)");
    return {ident(s.items[0]), &s.items[1]};
  }

  // Runs `f` with `x` bound as a term or dimension name.
  template <class F>
  auto with(const std::string& x, bool is_dim, F f) {
    auto& scope = is_dim ? dims_ : terms_;
    bool had = scope.count(x) > 0;
    scope.insert(x);
    struct Restore {
      std::set<std::string>& s;
      std::string x;
      bool had;
      ~Restore() {
        if (!had) s.erase(x);
      }
    } restore{scope, x, had};
    return f();
  }

  // --- cofibrations ------------------------------------------------------

  IExpr iexpr(const SExpr& s) {
    if (s.is_atom("0")) return IExpr::zero();
    if (s.is_atom("1")) return IExpr::one();
    if (s.is_atom() && is_ident(s.atom)) {
      if (free_dims_ || dims_.count(s.atom)) return IExpr::var(s.atom);
      if (terms_.count(s.atom)) fail(s, "not an interval expression: " + s.atom);
      throw ParseError(s.loc, "unbound name '" + s.atom + "'", "unbound-name");
    }
    fail(s, "not an interval expression");
  }

  Cof cof(const SExpr& s) {
    if (s.is_atom("top")) return Cof::top();
    if (s.is_atom("bot")) return Cof::bot();
    if (s.is_form("=")) {
      arity(s, 3);
      return Cof::equation(iexpr(s.items[1]), iexpr(s.items[2]));
    }
    if (s.is_form("and") || s.is_form("or")) {
      std::vector<Cof> args;
      for (std::size_t k = 1; k < s.items.size(); ++k) args.push_back(cof(s.items[k]));
      return s.is_form("and") ? Cof::meet(std::move(args)) : Cof::join(std::move(args));
    }
    if (s.is_form("forall")) {
      arity(s, 3);
      std::string i = ident(s.items[1]);
      Cof body = with(i, true, [&] { return cof(s.items[2]); });
      return forall_elim(i, body);
    }
    fail(s, "not a cofibration");
  }

  template <class X, class F>
  RawArms<X> raw_arms(const SExpr& s, F f) {
    RawArms<X> arms;
    for (std::size_t k = 1; k < s.items.size(); ++k) {
      const SExpr& a = s.items[k];
      if (!a.is_list() || a.items.size() != 2) fail(a, "expected a split arm (cof body)");
      Cof g = cof(a.items[0]);
      arms.emplace_back(g, f(a.items[1]));
    }
    return arms;
  }

  template <class X, class F>
  Split<X> split(const SExpr& s, F f) {
    if (!s.is_form("split")) fail(s, "expected (split ...)");
    Split<X> out;
    for (auto& [g, body] : raw_arms<X>(s, f)) out.arms.push_back({g, body});
    return out;
  }

  std::optional<Cof> declared(const SExpr& s, std::size_t at) {
    if (s.items.size() == at) return std::nullopt;
    if (s.items.size() != at + 1 || !s.items[at].is_form("frontier") ||
        s.items[at].items.size() != 2)
      fail(s, "malformed '" + s.head() + "'");
    return cof(s.items[at].items[1]);
  }

  // A path family written either as (i A) or as a bare type.
  static bool is_binder_form(const SExpr& s) {
    return s.is_list() && s.items.size() == 2 && s.items[0].is_atom() &&
           is_ident(s.items[0].atom);
  }

  // --- raw syntax ---------------------------------------------------------

  Tp tp(const SExpr& s) {
    if (s.is_atom("bool")) return tp::Bool{};
    if (s.is_atom("wbool")) return tp::WBool{};
    if (s.is_atom("s1")) return tp::S1{};
    if (s.is_atom("U")) return tp::U{};
    const std::string& h = s.head();
    if (h == "pi" || h == "sigma") {
      arity(s, 3);
      auto [x, dom] = binder(s.items[1]);
      Tp a = tp(*dom);
      Tp b = with(x, false, [&] { return tp(s.items[2]); });
      if (h == "pi") return tp::Pi{x, a, b};
      return tp::Sigma{x, a, b};
    }
    if (h == "el") {
      arity(s, 2);
      return tp::El{tm(s.items[1])};
    }
    if (h == "path") {
      arity(s, 4);
      std::string i = "_";
      const SExpr* fam = &s.items[1];
      if (is_binder_form(*fam)) std::tie(i, fam) = binder(*fam);
      Tp a = with(i, true, [&] { return tp(*fam); });
      return tp::Path{i, a, tm(s.items[2]), tm(s.items[3])};
    }
    if (h == "glue") {
      arity(s, 5);
      return tp::Glue{cof(s.items[1]), tp(s.items[2]), tp(s.items[3]), tm(s.items[4])};
    }
    if (h == "tsplit") return tp::Split{raw_arms<Tp>(s, [&](const SExpr& b) { return tp(b); })};
    fail(s, "not a type");
  }

  Tm var(const SExpr& s) {
    if (!terms_.count(s.atom)) {
      if (dims_.count(s.atom)) fail(s, "interval variable used as a term: " + s.atom);
      throw ParseError(s.loc, "unbound name '" + s.atom + "'", "unbound-name");
    }
    return tm::Var{s.atom};
  }

  Tm tm(const SExpr& s) {
    if (s.is_atom("true")) return tm::True{};
    if (s.is_atom("false")) return tm::False{};
    if (s.is_atom("base")) return tm::Base{};
    if (s.is_atom() && is_ident(s.atom)) return var(s);
    const std::string& h = s.head();
    if (h == "lam") {
      arity(s, 3);
      std::string x = ident(s.items[1]);
      return tm::Lam{x, with(x, false, [&] { return tm(s.items[2]); })};
    }
    if (h == "app") {
      arity(s, 3);
      return tm::App{tm(s.items[1]), tm(s.items[2])};
    }
    if (h == "pair") {
      arity(s, 3);
      return tm::Pair{tm(s.items[1]), tm(s.items[2])};
    }
    if (h == "fst") {
      arity(s, 2);
      return tm::Fst{tm(s.items[1])};
    }
    if (h == "snd") {
      arity(s, 2);
      return tm::Snd{tm(s.items[1])};
    }
    if (h == "if") {
      arity(s, 5);
      auto [x, mot] = binder(s.items[1]);
      Tp p = with(x, false, [&] { return tp(*mot); });
      return tm::If{x, p, tm(s.items[2]), tm(s.items[3]), tm(s.items[4])};
    }
    if (h == "code") {
      arity(s, 2);
      return tm::Code{tp(s.items[1])};
    }
    if (h == "plam") {
      arity(s, 3);
      std::string i = ident(s.items[1]);
      return tm::PLam{i, with(i, true, [&] { return tm(s.items[2]); })};
    }
    if (h == "papp") {
      arity(s, 3);
      return tm::PApp{tm(s.items[1]), iexpr(s.items[2])};
    }
    if (h == "hcomp") {
      arity(s, 6);
      auto [i, tube] = binder(s.items[5]);
      Tm t = with(i, true, [&] { return tm(*tube); });
      return tm::HComp{tp(s.items[1]), iexpr(s.items[2]), iexpr(s.items[3]), cof(s.items[4]), i,
                       t};
    }
    if (h == "coe") {
      arity(s, 5);
      auto [i, fam] = binder(s.items[1]);
      Tp a = with(i, true, [&] { return tp(*fam); });
      return tm::Coe{i, a, iexpr(s.items[2]), iexpr(s.items[3]), tm(s.items[4])};
    }
    if (h == "glue-in") {
      arity(s, 4);
      return tm::GlueIn{cof(s.items[1]), tm(s.items[2]), tm(s.items[3])};
    }
    if (h == "unglue") {
      arity(s, 2);
      return tm::Unglue{tm(s.items[1])};
    }
    if (h == "loop") {
      arity(s, 2);
      return tm::Loop{iexpr(s.items[1])};
    }
    if (h == "s1-elim") {
      arity(s, 5);
      auto [x, mot] = binder(s.items[1]);
      Tp p = with(x, false, [&] { return tp(*mot); });
      auto [i, lp] = binder(s.items[4]);
      Tm l = with(i, true, [&] { return tm(*lp); });
      return tm::S1Elim{x, p, tm(s.items[2]), tm(s.items[3]), i, l};
    }
    if (h == "split") return tm::Split{raw_arms<Tm>(s, [&](const SExpr& b) { return tm(b); })};
    fail(s, "not a term");
  }

  // --- normal forms -------------------------------------------------------

  Split<Nf> nf_split(const SExpr& s) {
    return split<Nf>(s, [&](const SExpr& b) { return nf(b); });
  }

  Ne ne(const SExpr& s) {
    if (s.is_atom() && is_ident(s.atom)) {
      var(s);
      return ne::Var{s.atom};
    }
    const std::string& h = s.head();
    if (h == "app") {
      arity(s, 3);
      return ne::App{ne(s.items[1]), nf(s.items[2])};
    }
    if (h == "fst") {
      arity(s, 2);
      return ne::Fst{ne(s.items[1])};
    }
    if (h == "snd") {
      arity(s, 2);
      return ne::Snd{ne(s.items[1])};
    }
    if (h == "if") {
      arity(s, 5);
      auto [x, mot] = binder(s.items[1]);
      NfTp p = with(x, false, [&] { return nftp(*mot); });
      return ne::If{x, p, ne(s.items[2]), nf(s.items[3]), nf(s.items[4])};
    }
    if (h == "papp") {
      arity(s, 3);
      return ne::PApp{ne(s.items[1]), iexpr(s.items[2])};
    }
    if (h == "unglue") {
      arity(s, 3);
      return ne::Unglue{cof(s.items[1]), ne(s.items[2])};
    }
    if (h == "s1-elim") {
      arity(s, 5);
      auto [x, mot] = binder(s.items[1]);
      NfTp p = with(x, false, [&] { return nftp(*mot); });
      auto [i, lp] = binder(s.items[4]);
      Nf l = with(i, true, [&] { return nf(*lp); });
      return ne::S1Elim{x, p, ne(s.items[2]), nf(s.items[3]), i, l};
    }
    if (h == "star") {
      arity(s, 2);
      return ne::Star{cof(s.items[1])};
    }
    fail(s, "not a neutral form");
  }

  Nf nf(const SExpr& s) {
    if (s.is_atom("true")) return nf::True{};
    if (s.is_atom("false")) return nf::False{};
    if (s.is_atom("base")) return nf::Base{};
    const std::string& h = s.head();
    if (h == "lam") {
      arity(s, 3);
      std::string x = ident(s.items[1]);
      return nf::Lam{x, with(x, false, [&] { return nf(s.items[2]); })};
    }
    if (h == "pair") {
      arity(s, 3);
      return nf::Pair{nf(s.items[1]), nf(s.items[2])};
    }
    if (h == "code") {
      arity(s, 2);
      return nf::Code{nftp(s.items[1])};
    }
    if (h == "plam") {
      arity(s, 3);
      std::string i = ident(s.items[1]);
      return nf::PLam{i, with(i, true, [&] { return nf(s.items[2]); })};
    }
    if (h == "glue-in") {
      arity(s, 4);
      return nf::GlueIn{cof(s.items[1]), nf(s.items[2]), nf_split(s.items[3])};
    }
    if (h == "loop") {
      arity(s, 2);
      return nf::Loop{iexpr(s.items[1])};
    }
    if (h == "hcomp") {
      arity(s, 6);
      HitKind k;
      if (s.items[1].is_atom("wbool"))
        k = HitKind::WBool;
      else if (s.items[1].is_atom("s1"))
        k = HitKind::S1;
      else
        fail(s.items[1], "hcomp normal forms exist only at wbool and s1");
      auto [i, tube] = binder(s.items[5]);
      Split<Nf> t = with(i, true, [&] { return nf_split(*tube); });
      return nf::HComp{k, iexpr(s.items[2]), iexpr(s.items[3]), cof(s.items[4]), i, t};
    }
    if (h == "hcomp-stuck") {
      if (s.items.size() < 7) fail(s, "malformed 'hcomp-stuck'");
      auto [i, tube] = binder(s.items[5]);
      Split<Nf> t = with(i, true, [&] { return nf_split(*tube); });
      return nf::HCompStuck{NeTp{ne(s.items[1])}, iexpr(s.items[2]), iexpr(s.items[3]),
                            cof(s.items[4]),       i,                 t,
                            nf_split(s.items[6]),  declared(s, 7)};
    }
    if (h == "coe-stuck") {
      if (s.items.size() < 6) fail(s, "malformed 'coe-stuck'");
      auto [i, fam] = binder(s.items[1]);
      Ne a = with(i, true, [&] { return ne(*fam); });
      return nf::CoeStuck{i,
                          NeTp{a},
                          iexpr(s.items[2]),
                          iexpr(s.items[3]),
                          nf(s.items[4]),
                          nf_split(s.items[5]),
                          declared(s, 6)};
    }
    if (h == "up") {
      if (s.items.size() < 4) fail(s, "malformed 'up'");
      const SExpr& tag = s.items[1];
      if (tag.is_atom("el")) {
        if (s.items.size() < 5) fail(s, "malformed 'up'");
        return nf::Up{UpTag::El, ne(s.items[3]), NeTp{ne(s.items[2])}, nf_split(s.items[4]),
                      declared(s, 5)};
      }
      UpTag t;
      if (tag.is_atom("bool"))
        t = UpTag::Bool;
      else if (tag.is_atom("wbool"))
        t = UpTag::WBool;
      else if (tag.is_atom("s1"))
        t = UpTag::S1;
      else
        fail(tag, "up is available only at bool, wbool, s1 and el");
      return nf::Up{t, ne(s.items[2]), std::nullopt, nf_split(s.items[3]), declared(s, 4)};
    }
    fail(s, "not a normal form");
  }

  NfTp nftp(const SExpr& s) {
    if (s.is_atom("bool")) return nftp::Bool{};
    if (s.is_atom("wbool")) return nftp::WBool{};
    if (s.is_atom("s1")) return nftp::S1{};
    if (s.is_atom("U")) return nftp::U{};
    const std::string& h = s.head();
    if (h == "pi" || h == "sigma") {
      arity(s, 3);
      auto [x, dom] = binder(s.items[1]);
      NfTp a = nftp(*dom);
      NfTp b = with(x, false, [&] { return nftp(s.items[2]); });
      if (h == "pi") return nftp::Pi{x, a, b};
      return nftp::Sigma{x, a, b};
    }
    if (h == "path") {
      arity(s, 4);
      std::string i = "_";
      const SExpr* fam = &s.items[1];
      if (is_binder_form(*fam)) std::tie(i, fam) = binder(*fam);
      NfTp a = with(i, true, [&] { return nftp(*fam); });
      return nftp::Path{i, a, nf(s.items[2]), nf(s.items[3])};
    }
    if (h == "glue") {
      arity(s, 5);
      return nftp::Glue{cof(s.items[1]), nftp(s.items[2]),
                        split<NfTp>(s.items[3], [&](const SExpr& b) { return nftp(b); }),
                        nf_split(s.items[4])};
    }
    if (h == "el") {
      arity(s, 2);
      return nftp::Up{NeTp{ne(s.items[1])}, {}, std::nullopt};
    }
    if (h == "up-tp") {
      if (s.items.size() < 3) fail(s, "malformed 'up-tp'");
      return nftp::Up{NeTp{ne(s.items[1])},
                      split<NfTp>(s.items[2], [&](const SExpr& b) { return nftp(b); }),
                      declared(s, 3)};
    }
    fail(s, "not a normal type");
  }

  // --- declarations -------------------------------------------------------

  Ctx ctx(const SExpr& s) {
    if (!s.is_form("ctx")) fail(s, "expected (ctx ...)");
    Ctx out;
    for (std::size_t k = 1; k < s.items.size(); ++k) {
      const SExpr& e = s.items[k];
      if (e.is_form("tm")) {
        arity(e, 3);
        std::string x = ident(e.items[1]);
        out = out.with_term(x, tp(e.items[2]));
        terms_.insert(x);
      } else if (e.is_form("dim")) {
        arity(e, 2);
        std::string i = ident(e.items[1]);
        out = out.with_dim(i);
        dims_.insert(i);
      } else if (e.is_form("cof")) {
        arity(e, 2);
        out = out.with_cof(cof(e.items[1]));
      } else {
        fail(e, "expected a context entry (tm x A), (dim i) or (cof phi)");
      }
    }
    return out;
  }

  Split<Nf> body(const Ctx& c, const SExpr& s) {
    if (c.has_cofs()) return nf_split(s);
    return Split<Nf>{{{Cof::top(), nf(s)}}};
  }

  Decl decl(const SExpr& s) {
    Decl d;
    d.loc = s.loc;
    const std::string& h = s.head();
    if (h == "def") {
      arity(s, 5);
      d.kind = Decl::Kind::Def;
      d.name = ident(s.items[1]);
      d.ctx = ctx(s.items[2]);
      d.type = tp(s.items[3]);
      d.term = tm(s.items[4]);
    } else if (h == "nf") {
      arity(s, 5);
      d.kind = Decl::Kind::Nf;
      d.name = ident(s.items[1]);
      d.ctx = ctx(s.items[2]);
      d.type = tp(s.items[3]);
      d.lhs = body(d.ctx, s.items[4]);
    } else if (h == "assert-eq-nf") {
      arity(s, 5);
      d.kind = Decl::Kind::AssertEqNf;
      d.ctx = ctx(s.items[1]);
      d.type = tp(s.items[2]);
      d.lhs = body(d.ctx, s.items[3]);
      d.rhs = body(d.ctx, s.items[4]);
    } else if (h == "assert-cof") {
      arity(s, 3);
      d.kind = Decl::Kind::AssertCof;
      if (!s.items[1].is_form("hyps")) fail(s.items[1], "expected (hyps ...)");
      free_dims_ = true;
      for (std::size_t k = 1; k < s.items[1].items.size(); ++k)
        d.hyps.push_back(cof(s.items[1].items[k]));
      d.goal = cof(s.items[2]);
    } else if (h == "reject") {
      arity(s, 3);
      d.kind = Decl::Kind::Reject;
      d.expect = ident(s.items[1]);
      try {
        d.inner = std::make_shared<const Decl>(Parser().decl(s.items[2]));
      } catch (const ParseError& e) {
        d.inner_src = s.items[2];
        d.inner_error_kind = e.kind();
        d.inner_error = e.what();
      }
      d.loc = s.loc;
    } else {
      fail(s, "unknown declaration");
    }
    return d;
  }

 private:
  bool free_dims_;
  std::set<std::string> terms_;
  std::set<std::string> dims_;
};

template <class F>
auto parse_one(std::string_view text, const Ctx& ctx, F f) {
  Parser p;
  p.bind_ctx(ctx);
  return f(p, read_sexpr(text));
}

}  // namespace

std::vector<Decl> parse_decls(std::string_view text) {
  std::vector<Decl> out;
  for (const auto& s : read_sexprs(text)) out.push_back(parse_decl(s));
  return out;
}

Decl parse_decl(const SExpr& s) { return Parser().decl(s); }

Cof parse_cof(const SExpr& s) { return Parser(true).cof(s); }
Cof parse_cof(std::string_view text) { return parse_cof(read_sexpr(text)); }

Tm parse_tm(std::string_view text, const Ctx& ctx) {
  return parse_one(text, ctx, [](Parser& p, const SExpr& s) { return p.tm(s); });
}
Tp parse_tp(std::string_view text, const Ctx& ctx) {
  return parse_one(text, ctx, [](Parser& p, const SExpr& s) { return p.tp(s); });
}
Nf parse_nf(std::string_view text, const Ctx& ctx) {
  return parse_one(text, ctx, [](Parser& p, const SExpr& s) { return p.nf(s); });
}
Ne parse_ne(std::string_view text, const Ctx& ctx) {
  return parse_one(text, ctx, [](Parser& p, const SExpr& s) { return p.ne(s); });
}
NfTp parse_nftp(std::string_view text, const Ctx& ctx) {
  return parse_one(text, ctx, [](Parser& p, const SExpr& s) { return p.nftp(s); });
}

}  // namespace cubnf
