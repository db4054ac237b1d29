#include "rlw/generate.hpp"

#include <string>

#include "rlw/errors.hpp"

namespace rlw {

std::vector<Symbol> var_pool(std::uint32_t n) {
  static const char* base[] = {"x", "y", "z", "w", "v", "u"};
  std::vector<Symbol> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string s = base[i % 6];
    if (i >= 6) s += std::to_string(i / 6);
    out.emplace_back(s);
  }
  return out;
}

Symbol Generator::hint() {
  static const char* names[] = {"a", "b", "c", "x", "y"};
  return Symbol(names[below(5)]);
}

Var Generator::leaf(std::uint32_t depth, const std::vector<Symbol>& free) {
  std::uint64_t n = depth + free.size();
  if (n == 0) return Var::free(Symbol("x"));
  std::uint64_t k = below(n);
  if (k < depth) return Var::at(static_cast<std::uint32_t>(k));
  return Var::free(free[k - depth]);
}

Term Generator::term_at(std::uint32_t size, std::uint32_t depth, const std::vector<Symbol>& free) {
  if (size <= 1) return Term::var(leaf(depth, free));
  if (chance(1, 3)) return Term::abs(hint(), term_at(size - 1, depth + 1, free));
  std::uint32_t f = between(1, size - 1);
  return Term::app(term_at(f, depth, free), bag_at(size - 1 - f, depth, free));
}

Bag Generator::bag_at(std::uint32_t size, std::uint32_t depth, const std::vector<Symbol>& free) {
  std::vector<Term> el;
  while (size > 0) {
    std::uint32_t k = between(1, size);
    el.push_back(term_at(k, depth, free));
    size -= k;
  }
  return Bag(std::move(el));
}

Term Generator::term(std::uint32_t size, const std::vector<Symbol>& free) {
  return term_at(size, 0, free);
}

Bag Generator::bag(std::uint32_t size, const std::vector<Symbol>& free) {
  return bag_at(size, 0, free);
}

Bag Generator::bag_of(std::uint32_t count, std::uint32_t max_elem, const std::vector<Symbol>& free) {
  std::vector<Term> el;
  for (std::uint32_t i = 0; i < count; ++i) el.push_back(term_at(between(1, max_elem), 0, free));
  return Bag(std::move(el));
}

Scalar Generator::scalar(const Semiring& d) {
  switch (d.kind()) {
    case SemiringKind::Bool: return Scalar(static_cast<long>(below(2)));
    case SemiringKind::Nat: return Scalar(static_cast<long>(below(4)));
    case SemiringKind::Int: return Scalar(static_cast<long>(below(7)) - 3);
    case SemiringKind::RatNonneg:
      return Scalar(mpq_class(static_cast<long>(below(4)), static_cast<long>(1 + below(3))));
    case SemiringKind::Rat:
      return Scalar(mpq_class(static_cast<long>(below(7)) - 3, static_cast<long>(1 + below(3))));
  }
  return Scalar();
}

Alg Generator::alg_at(std::uint32_t size, std::uint32_t depth, const std::vector<Symbol>& free,
                      const Semiring* d) {
  if (size <= 1) {
    if (d && chance(1, 6)) return Alg::zero();
    return Alg::var(leaf(depth, free));
  }
  if (size == 2) {
    if (d && chance(1, 3)) return Alg::scale(scalar(*d), alg_at(1, depth, free, d));
    return Alg::abs(hint(), alg_at(1, depth + 1, free, d));
  }
  std::uint32_t pick = static_cast<std::uint32_t>(below(d ? 8 : 5));
  if (pick < 2) return Alg::abs(hint(), alg_at(size - 1, depth + 1, free, d));
  if (pick < 5) {
    std::uint32_t f = between(1, size - 2);
    return Alg::app(alg_at(f, depth, free, d), alg_at(size - 1 - f, depth, free, d));
  }
  if (pick == 5) return Alg::scale(scalar(*d), alg_at(size - 1, depth, free, d));
  std::uint32_t l = between(1, size - 2);
  return Alg::sum(alg_at(l, depth, free, d), alg_at(size - 1 - l, depth, free, d));
}

Alg Generator::pure(std::uint32_t size, const std::vector<Symbol>& free) {
  return alg_at(size, 0, free, nullptr);
}

Alg Generator::algebraic(std::uint32_t size, const std::vector<Symbol>& free, const Semiring& d) {
  return alg_at(size, 0, free, &d);
}

GenKind gen_kind_by_name(std::string_view name) {
  if (name == "resource") return GenKind::Resource;
  if (name == "algebraic") return GenKind::Algebraic;
  if (name == "pure") return GenKind::Pure;
  throw UsageError("unknown generator kind '" + std::string(name) + "'");
}

std::variant<Term, Alg> gen_random(GenKind kind, std::uint32_t size, std::uint32_t vars,
                                   std::uint64_t seed) {
  Generator g(seed);
  auto pool = var_pool(vars);
  switch (kind) {
    case GenKind::Resource: return g.term(size, pool);
    case GenKind::Pure: return g.pure(size, pool);
    case GenKind::Algebraic: return g.algebraic(size, pool, Semiring());
  }
  return Term();
}

}  // namespace rlw
