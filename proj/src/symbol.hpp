#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace goptics {

// Interned identifier. Equality is an integer compare; the backing string
// lives for the lifetime of the process. Symbol 0 is the empty string.
class Symbol {
public:
  Symbol() = default;

  static Symbol intern(std::string_view text);

  const std::string& str() const;
  uint32_t id() const { return id_; }
  bool empty() const { return id_ == 0; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
  friend bool operator<(Symbol a, Symbol b) { return a.id_ < b.id_; }

private:
  explicit Symbol(uint32_t id) : id_(id) {}
  uint32_t id_ = 0;
};

} // namespace goptics
