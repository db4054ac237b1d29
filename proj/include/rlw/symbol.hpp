#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace rlw {

// Interned identifier. Equality is pointer equality; ordering is by spelling.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  const std::string& str() const;
  bool empty() const { return p_ == nullptr; }
  std::size_t hash() const { return std::hash<const void*>()(p_); }
  // Stable across runs, used for the free-variable filter masks.
  std::uint64_t mask_bit() const;

  friend bool operator==(Symbol a, Symbol b) { return a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.p_ == b.p_) return std::strong_ordering::equal;
    int c = a.str().compare(b.str());
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  const std::string* p_ = nullptr;
};

// A variable is either bound (de Bruijn index counted from the nearest
// enclosing binder) or free (a name).
struct Var {
  bool bound = false;
  std::uint32_t index = 0;
  Symbol name;

  static Var free(Symbol s) { return Var{false, 0, s}; }
  static Var at(std::uint32_t i) { return Var{true, i, Symbol()}; }

  friend bool operator==(const Var& a, const Var& b) {
    return a.bound == b.bound && (a.bound ? a.index == b.index : a.name == b.name);
  }
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (a.bound != b.bound) return a.bound ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.bound) return a.index <=> b.index;
    return a.name <=> b.name;
  }
};

}  // namespace rlw

template <>
struct std::hash<rlw::Symbol> {
  std::size_t operator()(rlw::Symbol s) const { return s.hash(); }
};
