// One pass/fail line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cof_family.hpp"
#include "corpus_util.hpp"
#include "cubnf/check.hpp"
#include "cubnf/convert.hpp"
#include "cubnf/engine.hpp"
#include "nf_gen.hpp"
#include "nf_props.hpp"
#include "oracle.hpp"

using namespace cubnf;
using family::eq;
using family::iv;

namespace {

constexpr std::size_t kFuel = 100000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome solver_completeness() {
  auto t0 = Clock::now();
  std::size_t pairs = 0, bad = 0;
  auto agree = [&](const std::vector<Cof>& hyps, const Cof& g) {
    ++pairs;
    if (entails(hyps, g) != oracle::entails(hyps, g)) ++bad;
  };
  auto small = family::upto1();
  for (const auto& h : small)
    for (const auto& g : small) agree({h}, g);
  auto d2 = family::depth2();
  for (const auto& big : d2)
    for (const auto& a : family::depth0()) {
      agree({big}, a);
      agree({a}, big);
    }
  std::size_t family_pairs = pairs;

  std::mt19937 rng(2024);
  for (int n = 0; n < 10000; ++n) {
    std::vector<Cof> hyps;
    for (int k = std::uniform_int_distribution<int>(0, 2)(rng); k > 0; --k)
      hyps.push_back(family::random_cof(rng, {"i", "j", "k"}, 3));
    agree(hyps, family::random_cof(rng, {"i", "j", "k"}, 3));
  }
  double secs = seconds_since(t0);
  std::ostringstream os;
  os << family_pairs << " family pairs over 2 variables, " << pairs - family_pairs
     << " random 3-variable instances, " << bad << " disagreements, " << secs << "s";
  return {bad == 0 && secs < 300.0, os.str()};
}

Outcome forall_characterization() {
  std::size_t n = 0, bad = 0;
  std::vector<Cof> goals = family::upto1();
  auto d2 = family::depth2();
  goals.insert(goals.end(), d2.begin(), d2.end());
  for (const std::string i : {"i", "j"}) {
    std::vector<Cof> hyps;
    for (const auto& h : family::upto1())
      if (!family::mentions(h, i)) hyps.push_back(h);
    for (const auto& phi : goals) {
      Cof r = forall_elim(i, phi);
      if (cof_vars(r).count(i)) ++bad;
      for (const auto& h : hyps) {
        ++n;
        if (entails({h}, r) != oracle::entails({h}, phi, {i})) ++bad;
      }
    }
  }
  std::ostringstream os;
  os << n << " (hypothesis, formula) pairs, " << bad << " disagreements";
  return {bad == 0, os.str()};
}

Outcome corpus_coverage() {
  auto s = corpus::run();
  std::vector<std::string> missing;
  for (const auto& f : corpus::required_forms())
    if (!s.forms.count(f)) missing.push_back(f);
  bool kinds = s.negative_kinds.count("frontier-mismatch") && s.negative_kinds.count("backup-domain-mismatch") &&
               s.negative_kinds.count("rule-mismatch") && s.negative_kinds.count("wrong-shape");
  std::ostringstream os;
  os << s.positives << " positive, " << s.negatives << " negative, " << s.failures.size()
     << " failing, " << missing.size() << " uncovered forms";
  for (const auto& m : missing) os << " [" << m << "]";
  for (const auto& f : s.failures) os << "\n    " << f;
  return {s.failures.empty() && missing.empty() && kinds && s.positives >= 30 && s.negatives >= 15,
          os.str()};
}

Outcome frontier_annotations() {
  int bad = 0;
  auto expect = [&](const Cof& got, const Cof& want) {
    if (!(got == want) || !oracle::entails({got}, want) || !oracle::entails({want}, got)) ++bad;
  };
  Ne x = ne::Var{"x"};
  expect(frontier(x), Cof::bot());
  Ne p = ne::PApp{ne::Var{"p"}, iv("i")};
  expect(frontier(p), Cof::join({Cof::bot(), eq("i", "0"), eq("i", "1")}));
  Ne pp = ne::PApp{p, iv("j")};
  expect(frontier(pp), Cof::join({frontier(p), eq("j", "0"), eq("j", "1")}));
  Ne pe = ne::PApp{ne::Var{"p"}, iv("1")};
  expect(frontier(pe), Cof::join({Cof::bot(), eq("1", "0"), eq("1", "1")}));
  Cof phi = eq("k", "0");
  expect(frontier(Ne(ne::Unglue{phi, x})), Cof::join({Cof::bot(), phi}));
  expect(frontier(Ne(ne::Unglue{phi, pp})), Cof::join({frontier(pp), phi}));
  std::ostringstream os;
  os << "6 annotations, " << bad << " mismatches";
  return {bad == 0, os.str()};
}

Outcome decay_and_equality() {
  int bad = 0;
  Ctx empty;
  if (!eq_nf(empty, Nf(nf::Loop{IExpr::zero()}), Nf(nf::Base{}))) ++bad;
  if (!eq_nf(empty, Nf(nf::Loop{IExpr::one()}), Nf(nf::Base{}))) ++bad;

  Ctx gb = Ctx{}.with_term("b", tp::Bool{});
  Nf bt = gen::up(UpTag::Bool, gen::var("b"));
  Nf star = gen::up(UpTag::Bool, ne::Star{Cof::top()}, {{{Cof::top(), bt}}});
  if (!alpha_eq(canon(gb, star), bt)) ++bad;

  Ctx ga = Ctx{}.with_term("A", tp::U{});
  ga = ga.with_term("a", tp::El{tm::Var{"A"}}).with_dim("j");
  Nf a = nf::Up{UpTag::El, gen::var("a"), NeTp{gen::var("A")}, {}, std::nullopt};
  Nf hc = nf::HCompStuck{NeTp{gen::var("A")}, iv("j"), iv("j"), eq("j", "0"), "i",
                         {{{eq("i", "j"), a}, {eq("j", "0"), a}}}, {}, std::nullopt};
  if (!alpha_eq(canon(ga, hc), a)) ++bad;

  gen::Gen g(101);
  Ctx ctx = gen::base_ctx();
  int forms = 0;
  for (; forms < 1000; ++forms) {
    gen::Ty ty = g.ty();
    Nf t = canon(ctx, g.of(ty, 3));
    Nf t2 = props::perturb(g, t, ty);
    Nf t3 = props::perturb(g, t2, ty);
    if (!eq_nf(ctx, t, t) || !eq_nf(ctx, t, t2) || !eq_nf(ctx, t2, t) || !eq_nf(ctx, t2, t3) ||
        !eq_nf(ctx, t, t3))
      ++bad;
    auto c1 = props::contexts(t, ty);
    auto c2 = props::contexts(t2, ty);
    for (std::size_t k = 0; k < c1.size(); ++k)
      if (!eq_nf(ctx, c1[k], c2[k])) ++bad;
  }
  if (eq_nf(empty, Nf(nf::True{}), Nf(nf::False{}))) ++bad;
  std::ostringstream os;
  os << "loop endpoints, star decay, stuck hcomp at r=s, " << forms << " generated forms; " << bad
     << " failures";
  return {bad == 0, os.str()};
}

Outcome substitution_coherence() {
  gen::Gen g(202);
  Ctx ctx = gen::base_ctx();
  const std::vector<std::pair<std::string, IExpr>> substs = {
      {"i", IExpr::zero()}, {"i", IExpr::one()}, {"i", IExpr::var("j")}};
  int terms = 0, recheck = 0, resid = 0, conv = 0;
  while (terms < 1000) {
    gen::Ty ty = g.ty();
    Nf t = canon(ctx, g.of(ty, 3));
    if (print(t).find("papp") == std::string::npos) continue;
    ++terms;
    Tp type = gen::type_of(ty);
    for (const auto& [i, r] : substs) {
      ISubst s{{i, r}};
      Ctx target = ctx.contract(s);
      Nf out = subst_nf(ctx, t, s);
      try {
        Checker c({true, kFuel});
        c.check_nf(target, out, type);
      } catch (const CheckFailure&) {
        ++recheck;
      }
      if (props::residual(out)) ++resid;
      if (!bounded_convert(target, embed(out), subst_i_tm(embed(t), s), kFuel, type).is_yes()) ++conv;
    }
  }
  std::ostringstream os;
  os << terms << " terms x 3 substitutions; failures: recheck " << recheck << ", residual "
     << resid << ", convert " << conv;
  return {recheck + resid + conv == 0, os.str()};
}

Outcome canon_decreases() {
  auto& st = canon_stats();
  std::size_t steps0 = st.steps.load(), viol0 = st.violations.load();
  gen::Gen g(303);
  Ctx ctx = gen::base_ctx();
  for (int n = 0; n < 1000; ++n) {
    Nf t = g.of(g.ty(), 4);
    canon(ctx, t);
    canon(ctx, t, RuleOrder::TopDown);
    subst_i_nf(ctx, t, "j", IExpr::one());
  }
  std::size_t steps = st.steps.load() - steps0, viol = st.violations.load() - viol0;
  std::ostringstream os;
  os << steps << " rewrite steps, " << viol << " without strict size decrease"
     << " (all runs: " << st.steps.load() << " steps, " << st.violations.load() << " violations)";
  return {steps > 0 && st.violations.load() == 0, os.str()};
}

std::string run_cli(const std::string& args) {
  std::string out;
  FILE* p = popen((std::string(CUBNF_CLI) + " " + args).c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

Outcome roundtrip_and_json() {
  auto s = corpus::run();
  std::string files;
  for (const auto& f : corpus::files()) files += " '" + f + "'";
  std::string a = run_cli("check --json" + files);
  std::string b = run_cli("check --json" + files);
  bool stable = !a.empty() && a == b;
  std::ostringstream os;
  os << s.roundtrip_checked << " declarations, " << s.roundtrip_failures.size()
     << " round-trip failures; json " << a.size() << " bytes, " << (stable ? "stable" : "UNSTABLE");
  return {s.roundtrip_failures.empty() && s.roundtrip_checked > 0 && stable, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cofibration solver agrees with the oracle", solver_completeness},
      {"forall elimination characterization", forall_characterization},
      {"rule coverage corpus", corpus_coverage},
      {"frontier annotations", frontier_annotations},
      {"decay and equality", decay_and_equality},
      {"substitution coherence", substitution_coherence},
      {"canon steps strictly decrease size", canon_decreases},
      {"round trip and stable json", roundtrip_and_json},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
