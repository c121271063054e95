#pragma once

#include <concepts>
#include <memory>
#include <type_traits>
#include <utility>
#include <variant>

namespace cubnf {

/// Immutable shared handle to a variant node. Copies share structure.
template <class Node>
class Ref {
 public:
  template <class T>
    requires(!std::same_as<std::remove_cvref_t<T>, Ref>)
  Ref(T&& x)  // NOLINT: implicit conversion from node alternatives
      : p_(std::make_shared<const Node>(Node{std::forward<T>(x)})) {}

  const auto& v() const { return p_->v; }
  template <class T>
  const T* as() const {
    return std::get_if<T>(&p_->v);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(p_->v);
  }
  std::size_t index() const { return p_->v.index(); }
  bool same(const Ref& o) const { return p_ == o.p_; }

 private:
  std::shared_ptr<const Node> p_;
};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace cubnf
