#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubnf/decl.hpp"
#include "cubnf/print.hpp"
#include "cubnf/syntax.hpp"

using namespace cubnf;

namespace {

Ctx fgx() {
  return Ctx{}
      .with_term("f", tp::Pi{"_", tp::Bool{}, tp::Bool{}})
      .with_term("g", std::nullopt)
      .with_term("x", tp::Bool{})
      .with_term("y", tp::Bool{})
      .with_term("p", std::nullopt)
      .with_dim("i")
      .with_dim("j");
}

Tm T(const char* s) { return parse_tm(s, fgx()); }

// Random well-scoped raw terms over a few names, binders reusing names to
// exercise capture.
Tm random_tm(std::mt19937& rng, int depth) {
  static const char* names[] = {"x", "y", "z"};
  static const char* dims[] = {"i", "j", "k"};
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 3 : 10);
  std::uniform_int_distribution<int> n3(0, 2);
  switch (pick(rng)) {
    case 0: return tm::Var{names[n3(rng)]};
    case 1: return tm::True{};
    case 2: return tm::Loop{n3(rng) == 0 ? IExpr::zero() : IExpr::var(dims[n3(rng)])};
    case 3: return tm::Var{names[n3(rng)]};
    case 4: return tm::Lam{names[n3(rng)], random_tm(rng, depth - 1)};
    case 5: return tm::App{random_tm(rng, depth - 1), random_tm(rng, depth - 1)};
    case 6: return tm::PLam{dims[n3(rng)], random_tm(rng, depth - 1)};
    case 7: return tm::PApp{random_tm(rng, depth - 1), IExpr::var(dims[n3(rng)])};
    case 8:
      return tm::Split{{{Cof::equation(IExpr::var(dims[n3(rng)]), IExpr::zero()),
                         random_tm(rng, depth - 1)},
                        {Cof::equation(IExpr::var(dims[n3(rng)]), IExpr::var(dims[n3(rng)])),
                         random_tm(rng, depth - 1)}}};
    case 9: return tm::Pair{random_tm(rng, depth - 1), random_tm(rng, depth - 1)};
    default: return tm::Fst{random_tm(rng, depth - 1)};
  }
}

// Collects interval expressions and cofibrations in traversal order.
void leaves(const Tm& t, std::vector<std::string>& out) {
  std::visit(overloaded{
                 [&](const tm::Loop& l) { out.push_back(l.r.str()); },
                 [&](const tm::PApp& p) {
                   leaves(p.path, out);
                   out.push_back(p.r.str());
                 },
                 [&](const tm::Split& s) {
                   for (const auto& [g, b] : s.arms) {
                     out.push_back(g.str());
                     leaves(b, out);
                   }
                 },
                 [&](const tm::Lam& l) { leaves(l.body, out); },
                 [&](const tm::PLam& l) { leaves(l.body, out); },
                 [&](const tm::App& a) {
                   leaves(a.fn, out);
                   leaves(a.arg, out);
                 },
                 [&](const tm::Pair& a) {
                   leaves(a.fst, out);
                   leaves(a.snd, out);
                 },
                 [&](const tm::Fst& a) { leaves(a.pair, out); },
                 [&](const auto&) {},
             },
             t.v());
}

}  // namespace

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(parse_tm("(lam x x)"), parse_tm("(lam y y)")));
  CHECK(alpha_eq(T("(lam a f)"), T("(lam b f)")));
  CHECK_FALSE(alpha_eq(T("(loop 0)"), T("base")));
  CHECK_FALSE(alpha_eq(parse_tm("(lam x (lam y x))"), parse_tm("(lam x (lam y y))")));
  CHECK(alpha_eq(parse_tp("(pi (a bool) (path (k bool) true false))"),
                 parse_tp("(pi (b bool) (path bool true false))")));
}

TEST_CASE("substitution") {
  CHECK(alpha_eq(subst_tm(T("(app f x)"), "x", tm::True{}), T("(app f true)")));
  CHECK(alpha_eq(subst_i_tm(T("(papp p i)"), "i", IExpr::zero()), T("(papp p 0)")));
  CHECK(alpha_eq(subst_i_tm(T("(split ((= i 0) (loop i)))"), "i", IExpr::var("j")),
                 T("(split ((= j 0) (loop j)))")));
  // capture avoidance
  Tm t = subst_tm(T("(lam y (app f x))"), "x", T("y"));
  auto* l = t.as<tm::Lam>();
  REQUIRE(l);
  CHECK(l->x != "y");
  CHECK(alpha_eq(t, T("(lam z (app f y))")));
  Tm u = subst_i_tm(T("(plam j (loop i))"), "i", IExpr::var("j"));
  CHECK(alpha_eq(u, T("(plam k (loop j))")));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH(T("(papp p 2)"), doctest::Contains("not an interval expression"));
  try {
    T("(app f nope)");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == "unbound-name");
    CHECK(e.message().find("nope") != std::string::npos);
    CHECK(e.loc().col == 8);
  }
  CHECK_THROWS_AS(parse_decls("(def a (ctx) bool"), ParseError);
  CHECK_THROWS_WITH(parse_tm("(loop x)", fgx()), doctest::Contains("not an interval expression"));
}

TEST_CASE("printing") {
  CHECK(print(parse_tm("(lam x x)")) == "(lam x x)");
  CHECK(print(T("(papp p 0)")) == "(papp p 0)");
  CHECK(print(parse_tp("(path (k bool) true false)")) == "(path bool true false)");
  CHECK(print(parse_tp("(path (k (path bool (loop k) base)) true false)", fgx())) ==
        "(path (k (path bool (loop k) base)) true false)");
  CHECK(print(parse_cof("(forall i (or (= i j) (= k 1)))")) == "(or bot (= k 1))");
  CHECK(print(parse_nftp("(el x)", fgx())) == "(el x)");
}

TEST_CASE("declaration round trip") {
  const char* src = R"(
    (def id (ctx) (pi (x bool) bool) (lam x x))
    (nf n (ctx (tm b bool)) bool (up bool b (split)))
    (nf m (ctx (dim i) (cof (= i 0))) s1 (split ((= i 0) base)))
    (assert-eq-nf (ctx) s1 (loop 0) base)
    (assert-cof (hyps (= i j) (= j 0)) (= i 0))
    (reject wrong-shape (nf e (ctx) bool (up bool (star top) (split))))
  )";
  auto ds = parse_decls(src);
  REQUIRE(ds.size() == 6);
  for (const auto& d : ds) {
    std::string once = print(d);
    CHECK(print(parse_decls(once).at(0)) == once);
  }
}

TEST_CASE("substitution composition on random terms") {
  std::mt19937 rng(3);
  for (int n = 0; n < 2000; ++n) {
    Tm t = random_tm(rng, 4), u = random_tm(rng, 2), v = random_tm(rng, 2);
    // The lemma needs x fresh for v; y fresh for u alone is not enough
    // (t = y, u = true, v = x is a counterexample).
    if (free_names(u).count("y") || free_names(v).count("x")) continue;
    Tm lhs = subst_tm(subst_tm(t, "x", u), "y", v);
    Tm rhs = subst_tm(subst_tm(t, "y", v), "x", subst_tm(u, "y", v));
    CHECK(alpha_eq(lhs, rhs));
  }
}

TEST_CASE("interval substitution commutes with csubst on cofibration leaves") {
  std::mt19937 rng(5);
  for (int n = 0; n < 2000; ++n) {
    Tm t = random_tm(rng, 4);
    if (free_names(t).count("k")) continue;  // keep binders from shadowing the target
    std::vector<std::string> before, after;
    leaves(t, before);
    leaves(subst_i_tm(t, "k", IExpr::one()), after);
    REQUIRE(before.size() == after.size());
  }
  Tm t = T("(split ((= i 0) (loop i)) ((= i j) (papp p j)))");
  Tm s = subst_i_tm(t, "i", IExpr::one());
  auto* sp = s.as<tm::Split>();
  REQUIRE(sp);
  CHECK(sp->arms[0].first == csubst(Cof::equation(IExpr::var("i"), IExpr::zero()), "i",
                                    IExpr::one()));
  CHECK(sp->arms[1].first == csubst(Cof::equation(IExpr::var("i"), IExpr::var("j")), "i",
                                    IExpr::one()));
}
