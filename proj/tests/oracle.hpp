#pragma once

// Semantic entailment by brute force, independent of the solver: a formula
// is literally true when some clause consists of reflexive atoms only.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubnf/cof.hpp"

namespace oracle {

using cubnf::Cof;
using cubnf::IExpr;
using cubnf::ISubst;

inline bool literally_true(const Cof& phi) {
  switch (phi.kind()) {
    case Cof::Kind::Eq: return phi.lhs() == phi.rhs();
    case Cof::Kind::Meet:
      for (const auto& a : phi.args())
        if (!literally_true(a)) return false;
      return true;
    case Cof::Kind::Join:
      for (const auto& a : phi.args())
        if (literally_true(a)) return true;
      return false;
  }
  return false;
}

inline void each_subst(const std::vector<std::string>& vars, std::size_t k, ISubst& s,
                       const auto& f) {
  if (k == vars.size()) {
    f(s);
    return;
  }
  std::vector<IExpr> targets{IExpr::zero(), IExpr::one()};
  for (const auto& v : vars) targets.push_back(IExpr::var(v));
  for (const auto& t : targets) {
    s.insert_or_assign(vars[k], t);
    each_subst(vars, k + 1, s, f);
  }
}

inline bool entails(const std::vector<Cof>& hyps, const Cof& goal,
                    std::set<std::string> vars = {}) {
  for (const auto& h : hyps) vars.merge(cubnf::cof_vars(h));
  vars.merge(cubnf::cof_vars(goal));
  if (vars.size() > 4) throw std::invalid_argument("oracle: more than 4 variables");
  std::vector<std::string> vs(vars.begin(), vars.end());
  Cof hyp = Cof::meet(hyps);
  bool ok = true;
  ISubst s;
  each_subst(vs, 0, s, [&](const ISubst& sigma) {
    if (ok && literally_true(cubnf::csubst(hyp, sigma)) &&
        !literally_true(cubnf::csubst(goal, sigma)))
      ok = false;
  });
  return ok;
}

}  // namespace oracle
