#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

#include "cubnf/nf.hpp"
#include "cubnf/syntax.hpp"

namespace cubnf {

/// Raised by the embeddings on a collapsed neutral outside a guarded spot.
class StarUnguarded : public std::runtime_error {
 public:
  StarUnguarded() : std::runtime_error("star-unguarded") {}
};

Tm embed(const Nf& t);
Tm embed(const Ne& e);
Tp embed(const NfTp& a);
Tp embed(const NeTp& a);
Tm embed(const Split<Nf>& s);
Tp embed(const Split<NfTp>& s);

enum class RuleOrder { BottomUp, TopDown };

/// Rewrite counters. A violation is a step whose result is not strictly
/// smaller than its input under `size`.
struct CanonStats {
  std::atomic<std::size_t> steps{0};
  std::atomic<std::size_t> violations{0};
};
CanonStats& canon_stats();

/// Exhaustive decay rewriting under the context's cofibration assumptions.
Nf canon(const Ctx& ctx, const Nf& t, RuleOrder order = RuleOrder::BottomUp);
NfTp canon(const Ctx& ctx, const NfTp& a, RuleOrder order = RuleOrder::BottomUp);
Ne canon(const Ctx& ctx, const Ne& e, RuleOrder order = RuleOrder::BottomUp);
Split<Nf> canon(const Ctx& ctx, const Split<Nf>& s, RuleOrder order = RuleOrder::BottomUp);
Split<NfTp> canon(const Ctx& ctx, const Split<NfTp>& s, RuleOrder order = RuleOrder::BottomUp);

/// Interval substitution followed by decay; `ctx` is the source context.
Nf subst_nf(const Ctx& ctx, const Nf& t, const ISubst& s);
NfTp subst_nf(const Ctx& ctx, const NfTp& a, const ISubst& s);
Split<Nf> subst_nf(const Ctx& ctx, const Split<Nf>& t, const ISubst& s);
Nf subst_i_nf(const Ctx& ctx, const Nf& t, const std::string& i, const IExpr& r);

/// Decidable equality of normal forms.
bool eq_nf(const Ctx& ctx, const Nf& a, const Nf& b);
bool eq_nf(const Ctx& ctx, const NfTp& a, const NfTp& b);
bool eq_nf(const Ctx& ctx, const Split<Nf>& a, const Split<Nf>& b);

/// The arm of a split whose guard holds under `hyps`, if any.
template <class X>
const X* select_arm(const std::vector<Cof>& hyps, const Split<X>& s) {
  for (const auto& a : s.arms)
    if (entails(hyps, a.guard)) return &a.body;
  return nullptr;
}

}  // namespace cubnf
