#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

#include "rlw/algebraic.hpp"
#include "rlw/resource.hpp"

namespace rlw {

// x, y, z, w, v, u, then x1, y1, ...
std::vector<Symbol> var_pool(std::uint32_t n);

// Deterministic generator of random expressions. Sizes are exact; callers
// draw the size when they want a size bound.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  std::uint32_t between(std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(below(hi - lo + 1));
  }
  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

  Term term(std::uint32_t size, const std::vector<Symbol>& free);
  // A monomial whose elements sum to `size`.
  Bag bag(std::uint32_t size, const std::vector<Symbol>& free);
  Bag bag_of(std::uint32_t count, std::uint32_t max_elem, const std::vector<Symbol>& free);
  Alg pure(std::uint32_t size, const std::vector<Symbol>& free);
  // Uses 0, scalar actions and sums; coefficients are admissible in d.
  Alg algebraic(std::uint32_t size, const std::vector<Symbol>& free, const Semiring& d);
  Scalar scalar(const Semiring& d);

 private:
  Term term_at(std::uint32_t size, std::uint32_t depth, const std::vector<Symbol>& free);
  Bag bag_at(std::uint32_t size, std::uint32_t depth, const std::vector<Symbol>& free);
  Alg alg_at(std::uint32_t size, std::uint32_t depth, const std::vector<Symbol>& free,
             const Semiring* d);
  Var leaf(std::uint32_t depth, const std::vector<Symbol>& free);
  Symbol hint();

  std::mt19937_64 rng_;
};

enum class GenKind { Resource, Algebraic, Pure };

GenKind gen_kind_by_name(std::string_view name);

std::variant<Term, Alg> gen_random(GenKind kind, std::uint32_t size, std::uint32_t vars,
                                   std::uint64_t seed);

}  // namespace rlw
