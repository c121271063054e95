#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus_util.hpp"

TEST_CASE("corpus checks") {
  auto s = corpus::run();
  for (const auto& f : s.failures) FAIL_CHECK(f);
  CHECK(s.positives >= 30);
  CHECK(s.negatives >= 15);
  for (const auto& k : {"frontier-mismatch", "backup-domain-mismatch", "rule-mismatch", "wrong-shape"})
    CHECK_MESSAGE(s.negative_kinds.count(k), k);
  for (const auto& form : corpus::required_forms()) CHECK_MESSAGE(s.forms.count(form), form);
}

TEST_CASE("corpus contains the (i=0) or (i=j) split") {
  bool found = false;
  for (const auto& f : corpus::files())
    for (const auto& form : cubnf::read_sexprs(corpus::slurp(f))) {
      cubnf::Decl d = cubnf::parse_decl(form);
      if (d.kind != cubnf::Decl::Kind::Nf || !d.ctx.has_cofs()) continue;
      auto want = cubnf::dnf(cubnf::parse_cof("(or (= i 0) (= i j))"));
      if (cubnf::dnf(cubnf::Cof::meet(d.ctx.cof_hyps())) == want) found = true;
    }
  CHECK(found);
}

TEST_CASE("print then parse is the identity on the corpus") {
  auto s = corpus::run();
  CHECK(s.roundtrip_checked > 45);
  for (const auto& f : s.roundtrip_failures) FAIL_CHECK(f);
}
