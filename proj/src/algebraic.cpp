#include "rlw/algebraic.hpp"

#include <algorithm>

namespace rlw {

namespace {

inline std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::shared_ptr<AlgNode> node(AlgTag t) {
  auto n = std::make_shared<AlgNode>();
  n->tag = t;
  return n;
}

}  // namespace

Alg Alg::var(Var v) {
  auto n = node(AlgTag::Var);
  n->v = v;
  n->loose = v.bound ? v.index + 1 : 0;
  n->fvmask = v.bound ? 0 : v.name.mask_bit();
  std::size_t h = v.bound ? mix(11, v.index) : 17;
  if (!v.bound)
    for (unsigned char c : v.name.str()) h = mix(h, c);
  n->hash = h;
  return Alg(std::move(n));
}

Alg Alg::abs(Symbol hint, Alg body) {
  auto n = node(AlgTag::Abs);
  n->hint = hint;
  n->size = 1 + body.size();
  n->loose = body.loose() ? body.loose() - 1 : 0;
  n->fvmask = body.fvmask();
  n->hash = mix(23, body.hash());
  n->pure = body.pure();
  n->simple = n->canonical = body.simple();
  n->beta_normal = body.beta_normal();
  n->a = std::move(body);
  return Alg(std::move(n));
}

Alg Alg::app(Alg fn, Alg arg) {
  auto n = node(AlgTag::App);
  n->size = 1 + fn.size() + arg.size();
  n->loose = std::max(fn.loose(), arg.loose());
  n->fvmask = fn.fvmask() | arg.fvmask();
  n->hash = mix(mix(29, fn.hash()), arg.hash());
  n->pure = fn.pure() && arg.pure();
  n->simple = n->canonical = fn.simple() && arg.canonical();
  n->beta_normal = fn.tag() != AlgTag::Abs && fn.beta_normal() && arg.beta_normal();
  n->a = std::move(fn);
  n->b = std::move(arg);
  return Alg(std::move(n));
}

Alg Alg::zero() {
  static const Alg z = [] {
    auto n = node(AlgTag::Zero);
    n->hash = 37;
    n->pure = false;
    n->simple = false;
    return Alg(std::move(n));
  }();
  return z;
}

Alg Alg::scale(Scalar a, Alg body) {
  auto n = node(AlgTag::Scale);
  n->size = 1 + body.size();
  n->loose = body.loose();
  n->fvmask = body.fvmask();
  std::size_t h = 41;
  h = mix(h, std::hash<std::string>()(a.value().get_str()));
  n->hash = mix(h, body.hash());
  n->pure = false;
  n->simple = false;
  n->canonical = body.canonical();
  n->beta_normal = body.beta_normal();
  n->coef = std::move(a);
  n->a = std::move(body);
  return Alg(std::move(n));
}

Alg Alg::sum(Alg lhs, Alg rhs) {
  auto n = node(AlgTag::Sum);
  n->size = 1 + lhs.size() + rhs.size();
  n->loose = std::max(lhs.loose(), rhs.loose());
  n->fvmask = lhs.fvmask() | rhs.fvmask();
  n->hash = mix(mix(43, lhs.hash()), rhs.hash());
  n->pure = false;
  n->simple = false;
  n->canonical = lhs.canonical() && rhs.canonical();
  n->beta_normal = lhs.beta_normal() && rhs.beta_normal();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Alg(std::move(n));
}

std::strong_ordering compare(const Alg& a, const Alg& b) {
  if (a.get() == b.get()) return std::strong_ordering::equal;
  if (a.tag() != b.tag()) return a.tag() <=> b.tag();
  switch (a.tag()) {
    case AlgTag::Var: return a.var() <=> b.var();
    case AlgTag::Abs: return compare(a.body(), b.body());
    case AlgTag::Zero: return std::strong_ordering::equal;
    case AlgTag::Scale:
      if (auto c = a.coef() <=> b.coef(); c != 0) return c;
      return compare(a.body(), b.body());
    case AlgTag::App:
    case AlgTag::Sum:
      if (auto c = compare(a.lhs(), b.lhs()); c != 0) return c;
      return compare(a.rhs(), b.rhs());
  }
  return std::strong_ordering::equal;
}

Alg shift(const Alg& m, std::uint32_t k, std::uint32_t cutoff) {
  if (k == 0 || m.loose() <= cutoff) return m;
  switch (m.tag()) {
    case AlgTag::Var: return Alg::bvar(m.var().index + k);
    case AlgTag::Abs: return Alg::abs(m.hint(), shift(m.body(), k, cutoff + 1));
    case AlgTag::App: return Alg::app(shift(m.fn(), k, cutoff), shift(m.arg(), k, cutoff));
    case AlgTag::Zero: return m;
    case AlgTag::Scale: return Alg::scale(m.coef(), shift(m.body(), k, cutoff));
    case AlgTag::Sum: return Alg::sum(shift(m.lhs(), k, cutoff), shift(m.rhs(), k, cutoff));
  }
  return m;
}

namespace {

template <class Leaf>
Alg rebuild(const Alg& m, std::uint32_t depth, const Leaf& leaf) {
  switch (m.tag()) {
    case AlgTag::Var: return leaf(m, depth);
    case AlgTag::Abs: return Alg::abs(m.hint(), leaf.rec(m.body(), depth + 1));
    case AlgTag::App: return Alg::app(leaf.rec(m.fn(), depth), leaf.rec(m.arg(), depth));
    case AlgTag::Zero: return m;
    case AlgTag::Scale: return Alg::scale(m.coef(), leaf.rec(m.body(), depth));
    case AlgTag::Sum: return Alg::sum(leaf.rec(m.lhs(), depth), leaf.rec(m.rhs(), depth));
  }
  return m;
}

struct FreeSubst {
  Symbol x;
  std::uint64_t bit;
  const Alg& n;
  Alg operator()(const Alg& v, std::uint32_t depth) const {
    if (!v.var().bound && v.var().name == x) return shift(n, depth);
    return v;
  }
  Alg rec(const Alg& m, std::uint32_t depth) const {
    if (!(m.fvmask() & bit)) return m;
    return rebuild(m, depth, *this);
  }
};

struct TopSubst {
  const Alg& n;
  Alg operator()(const Alg& v, std::uint32_t depth) const {
    if (!v.var().bound || v.var().index < depth) return v;
    if (v.var().index == depth) return shift(n, depth);
    return Alg::bvar(v.var().index - 1);
  }
  Alg rec(const Alg& m, std::uint32_t depth) const {
    if (m.loose() <= depth) return m;
    return rebuild(m, depth, *this);
  }
};

struct Closer {
  Symbol x;
  std::uint64_t bit;
  Alg operator()(const Alg& v, std::uint32_t depth) const {
    if (!v.var().bound) return v.var().name == x ? Alg::bvar(depth) : v;
    return v.var().index >= depth ? Alg::bvar(v.var().index + 1) : v;
  }
  Alg rec(const Alg& m, std::uint32_t depth) const {
    if (!(m.fvmask() & bit)) return shift(m, 1, depth);
    return rebuild(m, depth, *this);
  }
};

void collect_free(const Alg& m, std::set<Symbol>& out) {
  if (!m.fvmask()) return;
  switch (m.tag()) {
    case AlgTag::Var:
      if (!m.var().bound) out.insert(m.var().name);
      return;
    case AlgTag::Zero: return;
    case AlgTag::Abs:
    case AlgTag::Scale: collect_free(m.body(), out); return;
    case AlgTag::App:
    case AlgTag::Sum:
      collect_free(m.lhs(), out);
      collect_free(m.rhs(), out);
      return;
  }
}

}  // namespace

Alg subst_free(const Alg& m, Symbol x, const Alg& n) {
  return FreeSubst{x, x.mask_bit(), n}.rec(m, 0);
}

Alg subst_top(const Alg& body, const Alg& n) { return TopSubst{n}.rec(body, 0); }

Alg close_over(const Alg& m, Symbol x) { return Closer{x, x.mask_bit()}.rec(m, 0); }

std::set<Symbol> free_vars(const Alg& m) {
  std::set<Symbol> out;
  collect_free(m, out);
  return out;
}

Alg canon_abs(Symbol hint, const Alg& body) {
  switch (body.tag()) {
    case AlgTag::Zero: return body;
    case AlgTag::Scale: return Alg::scale(body.coef(), canon_abs(hint, body.body()));
    case AlgTag::Sum: return Alg::sum(canon_abs(hint, body.lhs()), canon_abs(hint, body.rhs()));
    default: return Alg::abs(hint, body);
  }
}

Alg canon_app(const Alg& fn, const Alg& arg) {
  switch (fn.tag()) {
    case AlgTag::Zero: return fn;
    case AlgTag::Scale: return Alg::scale(fn.coef(), canon_app(fn.body(), arg));
    case AlgTag::Sum: return Alg::sum(canon_app(fn.lhs(), arg), canon_app(fn.rhs(), arg));
    default: return Alg::app(fn, arg);
  }
}

Alg canonicalize_alg(const Alg& m) {
  if (m.canonical()) return m;
  switch (m.tag()) {
    case AlgTag::Var:
    case AlgTag::Zero: return m;
    case AlgTag::Abs: return canon_abs(m.hint(), canonicalize_alg(m.body()));
    case AlgTag::App: return canon_app(canonicalize_alg(m.fn()), canonicalize_alg(m.arg()));
    case AlgTag::Scale: return Alg::scale(m.coef(), canonicalize_alg(m.body()));
    case AlgTag::Sum: return Alg::sum(canonicalize_alg(m.lhs()), canonicalize_alg(m.rhs()));
  }
  return m;
}

}  // namespace rlw
