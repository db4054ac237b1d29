#include "rlw/resource.hpp"

#include <algorithm>

namespace rlw {

namespace {

inline std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t var_hash(const Var& v) {
  if (v.bound) return mix(11, v.index);
  std::size_t h = 17;
  for (unsigned char c : v.name.str()) h = mix(h, c);
  return h;
}

const std::shared_ptr<const BagNode>& empty_bag_node() {
  static const std::shared_ptr<const BagNode> e = std::make_shared<BagNode>();
  return e;
}

}  // namespace

Term Term::var(Var v) {
  auto n = std::make_shared<TermNode>();
  n->tag = Tag::Var;
  n->v = v;
  n->loose = v.bound ? v.index + 1 : 0;
  n->fvmask = v.bound ? 0 : v.name.mask_bit();
  n->hash = var_hash(v);
  return Term(std::move(n));
}

Term Term::abs(Symbol hint, Term body) {
  auto n = std::make_shared<TermNode>();
  n->tag = Tag::Abs;
  n->hint = hint;
  n->size = 1 + body.size();
  n->height = 1 + body.height();
  n->depth = body.mono_depth();
  n->loose = body.loose() > 0 ? body.loose() - 1 : 0;
  n->fvmask = body.fvmask();
  n->normal = body.normal();
  n->hash = mix(23, body.hash());
  n->body = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fn, Bag arg) {
  auto n = std::make_shared<TermNode>();
  n->tag = Tag::App;
  n->size = 1 + fn.size() + arg.size();
  n->height = std::max(fn.height(), 1 + arg.height());
  n->depth = std::max(fn.mono_depth(), arg.mono_depth());
  n->loose = std::max(fn.loose(), arg.loose());
  n->fvmask = fn.fvmask() | arg.fvmask();
  n->normal = fn.tag() != Tag::Abs && fn.normal() && arg.normal();
  n->hash = mix(mix(29, fn.hash()), arg.hash());
  n->fn = std::move(fn);
  n->arg = std::move(arg);
  return Term(std::move(n));
}

Bag::Bag() : n_(empty_bag_node()) {}

Bag::Bag(std::vector<Term> elems) {
  if (elems.empty()) {
    n_ = empty_bag_node();
    return;
  }
  if (!std::is_sorted(elems.begin(), elems.end(), ExprLess{}))
    std::sort(elems.begin(), elems.end(), ExprLess{});
  auto n = std::make_shared<BagNode>();
  std::uint32_t depth = 0;
  std::size_t h = 31;
  for (const auto& t : elems) {
    n->size += t.size();
    n->height = std::max(n->height, t.height());
    depth = std::max(depth, t.mono_depth());
    n->loose = std::max(n->loose, t.loose());
    n->fvmask |= t.fvmask();
    n->normal = n->normal && t.normal();
    h = mix(h, t.hash());
  }
  n->depth = 1 + depth;
  n->hash = h;
  n->elems = std::move(elems);
  n_ = std::move(n);
}

std::strong_ordering compare(const Term& a, const Term& b) {
  if (a.get() == b.get()) return std::strong_ordering::equal;
  if (a.tag() != b.tag()) return a.tag() <=> b.tag();
  switch (a.tag()) {
    case Tag::Var: return a.var() <=> b.var();
    case Tag::Abs: return compare(a.body(), b.body());
    case Tag::App:
      if (auto c = compare(a.fn(), b.fn()); c != 0) return c;
      return compare(a.arg(), b.arg());
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Bag& a, const Bag& b) {
  if (a.get() == b.get()) return std::strong_ordering::equal;
  const auto& x = a.elems();
  const auto& y = b.elems();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(x[i], y[i]); c != 0) return c;
  return x.size() <=> y.size();
}

TermSum abs_sum(Symbol hint, const TermSum& body) {
  TermSum out(body.semiring());
  for (const auto& [t, c] : body) out.add(Term::abs(hint, t), c);
  return out;
}

TermSum app_sum(const TermSum& fn, const BagSum& arg) {
  const Semiring& s = fn.semiring();
  TermSum out(s);
  for (const auto& [f, c] : fn)
    for (const auto& [a, d] : arg) out.add(Term::app(f, a), s.mul(c, d));
  return out;
}

BagSum bag_product(const Semiring& s, const std::vector<TermSum>& parts) {
  std::vector<std::pair<std::vector<Term>, Scalar>> acc{{{}, s.one()}};
  for (const auto& part : parts) {
    std::vector<std::pair<std::vector<Term>, Scalar>> next;
    next.reserve(acc.size() * part.size());
    for (const auto& [elems, c] : acc)
      for (const auto& [t, d] : part) {
        auto e = elems;
        e.push_back(t);
        next.emplace_back(std::move(e), s.mul(c, d));
      }
    acc = std::move(next);
  }
  BagSum out(s);
  for (auto& [elems, c] : acc) out.add(Bag(std::move(elems)), c);
  return out;
}

Term shift(const Term& t, std::uint32_t k, std::uint32_t cutoff) {
  if (k == 0 || t.loose() <= cutoff) return t;
  switch (t.tag()) {
    case Tag::Var: return Term::bvar(t.var().index + k);
    case Tag::Abs: return Term::abs(t.hint(), shift(t.body(), k, cutoff + 1));
    case Tag::App: return Term::app(shift(t.fn(), k, cutoff), shift(t.arg(), k, cutoff));
  }
  return t;
}

Bag shift(const Bag& b, std::uint32_t k, std::uint32_t cutoff) {
  if (k == 0 || b.loose() <= cutoff) return b;
  std::vector<Term> e;
  e.reserve(b.count());
  for (const auto& t : b.elems()) e.push_back(shift(t, k, cutoff));
  return Bag(std::move(e));
}

TermSum shift(const TermSum& s, std::uint32_t k) {
  TermSum out(s.semiring());
  for (const auto& [t, c] : s) out.add(shift(t, k), c);
  return out;
}

namespace {

Term close_rec(const Term& t, Symbol x, std::uint32_t depth, std::uint64_t bit) {
  if (!(t.fvmask() & bit)) return shift(t, 1, depth);
  switch (t.tag()) {
    case Tag::Var:
      if (!t.var().bound && t.var().name == x) return Term::bvar(depth);
      return shift(t, 1, depth);
    case Tag::Abs: return Term::abs(t.hint(), close_rec(t.body(), x, depth + 1, bit));
    case Tag::App: {
      std::vector<Term> e;
      for (const auto& u : t.arg().elems()) e.push_back(close_rec(u, x, depth, bit));
      return Term::app(close_rec(t.fn(), x, depth, bit), Bag(std::move(e)));
    }
  }
  return t;
}

}  // namespace

Term close_over(const Term& t, Symbol x, std::uint32_t depth) {
  return close_rec(t, x, depth, x.mask_bit());
}

}  // namespace rlw
