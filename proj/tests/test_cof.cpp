#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cof_family.hpp"
#include "cubnf/cof.hpp"
#include "oracle.hpp"

using namespace cubnf;
using family::eq;
using family::iv;

TEST_CASE("isubst and csubst") {
  CHECK(isubst(IExpr::var("i"), "i", IExpr::zero()) == IExpr::zero());
  CHECK(isubst(IExpr::one(), "i", IExpr::var("j")) == IExpr::one());
  CHECK(isubst(IExpr::var("j"), "i", IExpr::zero()) == IExpr::var("j"));

  Cof phi = Cof::join({eq("i", "0"), eq("i", "j")});
  CHECK(csubst(phi, "i", iv("j")) == Cof::join({eq("j", "0"), eq("j", "j")}));
  CHECK(csubst(Cof::top(), "i", iv("0")) == Cof::top());
  CHECK(csubst(eq("i", "1"), "i", iv("1")) == eq("1", "1"));
}

TEST_CASE("dnf") {
  CHECK(dnf(Cof::bot()).empty());
  auto d = dnf(Cof::join({eq("0", "1"), eq("i", "0")}));
  REQUIRE(d.size() == 1);
  CHECK(d[0] == Branch::of_atoms({{iv("i"), iv("0")}}));

  Cof psi = Cof::meet({eq("i", "0"), Cof::join({eq("j", "1"), Cof::top()})});
  CHECK(dnf(psi) == dnf(eq("i", "0")));
  CHECK(oracle::entails({psi}, eq("i", "0")));
  CHECK(oracle::entails({eq("i", "0")}, psi));

  auto top = dnf(Cof::top());
  REQUIRE(top.size() == 1);
  CHECK(top[0].is_top());
}

TEST_CASE("dnf orients atoms and drops reflexive ones") {
  auto d = dnf(Cof::meet({eq("j", "i"), eq("k", "k"), eq("1", "j")}));
  REQUIRE(d.size() == 1);
  // class {1, i, j}: both variables paired with the endpoint
  std::vector<std::pair<IExpr, IExpr>> want{{iv("1"), iv("i")}, {iv("1"), iv("j")}};
  CHECK(d[0].atoms() == want);
}

TEST_CASE("entails") {
  CHECK(entails({}, Cof::top()));
  CHECK(entails({eq("i", "j"), eq("j", "0")}, eq("i", "0")));
  CHECK_FALSE(entails({Cof::join({eq("i", "0"), eq("i", "1")})}, eq("i", "0")));
  CHECK(entails({Cof::bot()}, eq("0", "1")));
  CHECK_FALSE(entails({}, Cof::join({eq("i", "0"), eq("i", "1")})));
}

TEST_CASE("cof_eq") {
  CHECK(cof_eq({}, eq("0", "1"), Cof::bot()));
  CHECK_FALSE(cof_eq({}, eq("i", "0"), eq("i", "1")));
  for (const auto& a : family::depth0())
    for (const auto& b : family::depth0())
      CHECK(cof_eq({}, Cof::meet({a, b}), Cof::meet({b, a})));
}

TEST_CASE("forall_elim") {
  CHECK(forall_elim("i", eq("j", "0")) == eq("j", "0"));
  CHECK(cof_eq({}, forall_elim("i", eq("i", "i")), Cof::top()));
  CHECK(cof_eq({}, forall_elim("i", eq("i", "0")), Cof::bot()));
  Cof r = forall_elim("i", Cof::join({eq("i", "j"), eq("k", "1")}));
  CHECK(r == Cof::join({Cof::bot(), eq("k", "1")}));
  CHECK_FALSE(cof_vars(r).count("i"));
}

TEST_CASE("oracle sanity") {
  CHECK(oracle::entails({}, eq("i", "i")));
  CHECK(oracle::entails({Cof::meet({eq("i", "0"), eq("i", "1")})}, Cof::bot()));
  CHECK_FALSE(oracle::entails({}, Cof::join({eq("i", "0"), eq("i", "1")})));
  CHECK_THROWS(oracle::entails({}, Cof::meet({eq("a", "b"), eq("c", "d"), eq("e", "0")})));
}

TEST_CASE("entails agrees with the oracle on depth <= 1 pairs") {
  auto fs = family::upto1();
  std::size_t n = 0;
  for (const auto& h : fs)
    for (const auto& g : fs) {
      CHECK(entails({h}, g) == oracle::entails({h}, g));
      ++n;
    }
  CHECK(n == fs.size() * fs.size());
}

TEST_CASE("extensional equality gives identical dnf") {
  auto fs = family::upto1();
  for (const auto& a : fs)
    for (const auto& b : fs)
      if (cof_eq({}, a, b)) CHECK(dnf(a) == dnf(b));
}

TEST_CASE("forall_elim properties on random formulas") {
  std::mt19937 rng(7);
  for (int n = 0; n < 2000; ++n) {
    Cof phi = family::random_cof(rng, {"i", "j", "k"}, 3);
    Cof h = family::random_cof(rng, {"j", "k"}, 2);
    Cof r = forall_elim("i", phi);
    CHECK_FALSE(cof_vars(r).count("i"));
    CHECK(forall_elim("i", r) == r);
    CHECK(entails({h}, r) == oracle::entails({h}, phi, {"i"}));
  }
}

TEST_CASE("random four-variable agreement") {
  std::mt19937 rng(11);
  for (int n = 0; n < 10000; ++n) {
    Cof h = family::random_cof(rng, {"i", "j", "k", "l"}, 3);
    Cof g = family::random_cof(rng, {"i", "j", "k", "l"}, 3);
    REQUIRE(entails({h}, g) == oracle::entails({h}, g));
  }
}

TEST_CASE("printing") {
  CHECK(Cof::top().str() == "top");
  CHECK(Cof::bot().str() == "bot");
  CHECK(Cof::join({eq("i", "0"), Cof::meet({eq("j", "1")})}).str() == "(or (= i 0) (and (= j 1)))");
}
