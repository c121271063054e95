#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "cubnf/syntax.hpp"

namespace cubnf {

struct ConvVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Yes;
  /// For Unknown: "fuel-exhausted" or "unoriented-equation".
  std::string reason;

  static ConvVerdict yes() { return {Kind::Yes, {}}; }
  static ConvVerdict no() { return {Kind::No, {}}; }
  static ConvVerdict unknown(std::string why) { return {Kind::Unknown, std::move(why)}; }
  bool is_yes() const { return kind == Kind::Yes; }
  bool is_no() const { return kind == Kind::No; }
  bool is_unknown() const { return kind == Kind::Unknown; }
  std::string str() const;
};

constexpr std::size_t kDefaultFuel = 1000;

/// Fuel-bounded conversion of raw terms, optionally at a known type. Yes and
/// No are definitive; everything the rewrite rules cannot settle is Unknown.
ConvVerdict bounded_convert(const Ctx& ctx, const Tm& a, const Tm& b,
                            std::size_t fuel = kDefaultFuel,
                            const std::optional<Tp>& type = std::nullopt);
ConvVerdict bounded_convert_tp(const Ctx& ctx, const Tp& a, const Tp& b,
                               std::size_t fuel = kDefaultFuel);

/// Weak head normalization under a context without cofibration assumptions.
Tm whnf(const Ctx& ctx, const Tm& t, std::size_t fuel = kDefaultFuel);
/// Reduces El of codes, entailed type splits and, unless `keep_glue`,
/// entailed Glue.
Tp whnf_tp(const Ctx& ctx, const Tp& a, std::size_t fuel = kDefaultFuel, bool keep_glue = false);

/// Type of a neutral-headed raw term from the context, when determinable.
std::optional<Tp> synth(const Ctx& ctx, const Tm& t, std::size_t fuel = kDefaultFuel);

}  // namespace cubnf
