#include "rlw/syntax.hpp"

namespace rlw {

namespace {

struct Target {
  bool bound;
  std::uint32_t index;
  Symbol name;

  bool hits(const Var& v, std::uint32_t depth) const {
    return bound ? (v.bound && v.index == index + depth) : (!v.bound && v.name == name);
  }
};

// depths are offsets from the root of e, starting at 1 on the variable itself
void occ_rec(const Term& t, const Target& x, std::uint32_t depth, std::uint32_t offset, OccInfo& out);

void occ_rec(const Bag& b, const Target& x, std::uint32_t depth, std::uint32_t offset, OccInfo& out) {
  for (const auto& u : b.elems()) occ_rec(u, x, depth, offset, out);
}

void occ_rec(const Term& t, const Target& x, std::uint32_t depth, std::uint32_t offset, OccInfo& out) {
  switch (t.tag()) {
    case Tag::Var:
      if (x.hits(t.var(), depth)) {
        ++out.count;
        out.depths.insert(offset + 1);
      }
      return;
    case Tag::Abs: occ_rec(t.body(), x, depth + 1, offset + 1, out); return;
    case Tag::App:
      occ_rec(t.fn(), x, depth, offset, out);
      occ_rec(t.arg(), x, depth, offset + 1, out);
      return;
  }
}

void free_rec(const Term& t, std::set<Symbol>& out) {
  if (!t.fvmask()) return;
  switch (t.tag()) {
    case Tag::Var:
      if (!t.var().bound) out.insert(t.var().name);
      return;
    case Tag::Abs: free_rec(t.body(), out); return;
    case Tag::App:
      free_rec(t.fn(), out);
      for (const auto& u : t.arg().elems()) free_rec(u, out);
      return;
  }
}

}  // namespace

std::strong_ordering compare_terms(const ResExpr& a, const ResExpr& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (auto* t = std::get_if<Term>(&a)) return compare(*t, std::get<Term>(b));
  return compare(std::get<Bag>(a), std::get<Bag>(b));
}

Metrics metrics(const ResExpr& e) {
  return std::visit([](const auto& x) { return Metrics{x.size(), x.height(), x.mono_depth()}; }, e);
}

OccInfo occ(Symbol x, const ResExpr& e) {
  OccInfo out;
  Target t{false, 0, x};
  std::visit([&](const auto& v) { occ_rec(v, t, 0, 0, out); }, e);
  return out;
}

OccInfo occ_bound(std::uint32_t index, const ResExpr& e) {
  OccInfo out;
  Target t{true, index, Symbol()};
  std::visit([&](const auto& v) { occ_rec(v, t, 0, 0, out); }, e);
  return out;
}

std::set<Symbol> free_vars(const ResExpr& e) {
  std::set<Symbol> out;
  if (auto* t = std::get_if<Term>(&e)) {
    free_rec(*t, out);
  } else {
    for (const auto& u : std::get<Bag>(e).elems()) free_rec(u, out);
  }
  return out;
}

}  // namespace rlw
