#pragma once

#include <random>
#include <string>
#include <vector>

#include "cubnf/cof.hpp"

namespace family {

using cubnf::Cof;
using cubnf::IExpr;

inline IExpr iv(const std::string& n) {
  if (n == "0") return IExpr::zero();
  if (n == "1") return IExpr::one();
  return IExpr::var(n);
}
inline Cof eq(const std::string& a, const std::string& b) { return Cof::equation(iv(a), iv(b)); }

// i=0, i=1, j=0, j=1, i=j, 0=1, top, bot
inline std::vector<Cof> depth0() {
  return {eq("i", "0"), eq("i", "1"), eq("j", "0"), eq("j", "1"),
          eq("i", "j"), eq("0", "1"), Cof::top(),   Cof::bot()};
}

inline std::vector<Cof> combine(const std::vector<Cof>& xs, const std::vector<Cof>& ys) {
  std::vector<Cof> out;
  out.reserve(2 * xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) {
      out.push_back(Cof::meet({x, y}));
      out.push_back(Cof::join({x, y}));
    }
  return out;
}

inline std::vector<Cof> depth1() { return combine(depth0(), depth0()); }

inline std::vector<Cof> upto1() {
  auto out = depth0();
  auto d1 = depth1();
  out.insert(out.end(), d1.begin(), d1.end());
  return out;
}

inline std::vector<Cof> depth2() {
  auto u = upto1();
  return combine(u, u);
}

inline bool mentions(const Cof& phi, const std::string& v) { return cubnf::cof_vars(phi).count(v); }

/// Random formula over `vars` with connective depth at most `depth`.
inline Cof random_cof(std::mt19937& rng, const std::vector<std::string>& vars, int depth) {
  std::vector<std::string> leaves = vars;
  leaves.push_back("0");
  leaves.push_back("1");
  std::uniform_int_distribution<int> pick(0, 9);
  int c = pick(rng);
  if (depth == 0 || c < 4) {
    if (c == 0) return Cof::top();
    if (c == 1) return Cof::bot();
    std::uniform_int_distribution<std::size_t> leaf(0, leaves.size() - 1);
    return eq(leaves[leaf(rng)], leaves[leaf(rng)]);
  }
  std::uniform_int_distribution<int> arity(0, 3);
  std::vector<Cof> args;
  for (int n = arity(rng); n > 0; --n) args.push_back(random_cof(rng, vars, depth - 1));
  return c < 7 ? Cof::meet(std::move(args)) : Cof::join(std::move(args));
}

}  // namespace family
