#include "symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace goptics {
namespace {

struct InternTable {
  std::shared_mutex mutex;
  std::deque<std::string> strings;
  std::unordered_map<std::string_view, uint32_t> ids;

  InternTable() {
    strings.emplace_back();
    ids.emplace(strings.back(), 0u);
  }
};

InternTable& table() {
  static InternTable t;
  return t;
}

} // namespace

Symbol Symbol::intern(std::string_view text) {
  InternTable& t = table();
  {
    std::shared_lock lock(t.mutex);
    auto it = t.ids.find(text);
    if (it != t.ids.end()) return Symbol(it->second);
  }
  std::unique_lock lock(t.mutex);
  auto it = t.ids.find(text);
  if (it != t.ids.end()) return Symbol(it->second);
  t.strings.emplace_back(text);
  uint32_t id = static_cast<uint32_t>(t.strings.size() - 1);
  t.ids.emplace(t.strings.back(), id);
  return Symbol(id);
}

const std::string& Symbol::str() const {
  InternTable& t = table();
  std::shared_lock lock(t.mutex);
  return t.strings[id_];
}

} // namespace goptics
