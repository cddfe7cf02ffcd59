#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace zvk {

/// Interned generator name. Two symbols are equal iff their names are equal;
/// ordering is by name.
class Symbol {
 public:
  explicit Symbol(std::string_view name);

  const std::string& name() const noexcept { return *name_; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name_->compare(*b.name_) < 0 ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
  }

 private:
  friend struct std::hash<Symbol>;
  const std::string* name_;
};

inline std::ostream& operator<<(std::ostream& os, Symbol s) { return os << s.name(); }

}  // namespace zvk

template <>
struct std::hash<zvk::Symbol> {
  std::size_t operator()(zvk::Symbol s) const noexcept {
    return std::hash<const void*>{}(s.name_);
  }
};
