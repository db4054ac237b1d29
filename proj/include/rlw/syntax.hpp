#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "rlw/algebraic.hpp"
#include "rlw/resource.hpp"

namespace rlw {

struct Metrics {
  std::uint32_t size = 0;
  std::uint32_t height = 0;
  std::uint32_t mono_depth = 0;
};

struct OccInfo {
  std::uint32_t count = 0;
  std::set<std::uint32_t> depths;

  std::uint32_t max_depth() const { return depths.empty() ? 0 : *depths.rbegin(); }
};

// Result of parsing resource syntax: a lone expression or a sum.
using ResourceValue = std::variant<Term, Bag, TermSum, BagSum>;

ResourceValue parse_resource(std::string_view text, const Semiring& s = Semiring());
Term parse_term(std::string_view text);
Bag parse_bag(std::string_view text);
// Accepts a single term or a term sum.
TermSum parse_term_sum(std::string_view text, const Semiring& s = Semiring());
Alg parse_algebraic(std::string_view text, const Semiring& s = Semiring());

std::string render(const Term& t);
std::string render(const Bag& b);
std::string render(const ResExpr& e);
std::string render(const TermSum& s);
std::string render(const BagSum& s);
std::string render(const ResourceValue& v);
std::string render(const Alg& m);

std::strong_ordering compare_terms(const ResExpr& a, const ResExpr& b);

Metrics metrics(const ResExpr& e);

// Occurrences of the free variable x.
OccInfo occ(Symbol x, const ResExpr& e);
// Occurrences of the variable bound by the binder `index` levels above e.
OccInfo occ_bound(std::uint32_t index, const ResExpr& e);

std::set<Symbol> free_vars(const ResExpr& e);

}  // namespace rlw
