#include "rlw/symbol.hpp"

#include <mutex>
#include <unordered_set>

namespace rlw {

namespace {

struct Table {
  std::mutex mu;
  std::unordered_set<std::string> names;
};

Table& table() {
  static Table t;
  return t;
}

const std::string& empty_name() {
  static const std::string e;
  return e;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  p_ = &*t.names.emplace(name).first;
}

const std::string& Symbol::str() const { return p_ ? *p_ : empty_name(); }

std::uint64_t Symbol::mask_bit() const {
  // FNV-1a over the spelling, folded to one of 64 bits
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : str()) h = (h ^ c) * 1099511628211ULL;
  return std::uint64_t{1} << (h % 64);
}

}  // namespace rlw
