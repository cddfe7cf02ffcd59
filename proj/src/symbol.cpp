#include "zvk/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace zvk {

namespace {

struct InternTable {
  std::mutex mutex;
  std::unordered_set<std::string> names;
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  name_ = &*t.names.emplace(name).first;
}

}  // namespace zvk
