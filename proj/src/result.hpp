#pragma once

#include <utility>
#include <variant>

namespace goptics {

// Minimal expected-style carrier for fallible operations whose failures are
// ordinary data (derivation errors, parse errors, schema findings).
template <class T, class E>
class Result {
public:
  Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : v_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() { return std::get<0>(v_); }
  const T& value() const { return std::get<0>(v_); }
  E& error() { return std::get<1>(v_); }
  const E& error() const { return std::get<1>(v_); }

  T value_or(T fallback) const { return ok() ? value() : std::move(fallback); }

private:
  std::variant<T, E> v_;
};

} // namespace goptics
