#include "rlw/calculus.hpp"

#include <bit>
#include <vector>

namespace rlw {

namespace {

struct Hole {
  bool bound;
  std::uint32_t index;
  Symbol name;
  std::uint64_t bit;
  bool eliminate;

  static Hole named(Symbol x) { return Hole{false, 0, x, x.mask_bit(), false}; }
  static Hole binder() { return Hole{true, 0, Symbol(), 0, true}; }

  bool hits(const Var& v, std::uint32_t depth) const {
    return bound ? (v.bound && v.index == index + depth) : (!v.bound && v.name == name);
  }
  bool may_occur(std::uint32_t loose, std::uint64_t mask, std::uint32_t depth) const {
    return bound ? loose > index + depth : (mask & bit) != 0;
  }
};

std::uint32_t count(const Term& t, const Hole& h, std::uint32_t depth);

std::uint32_t count(const Bag& b, const Hole& h, std::uint32_t depth) {
  if (!h.may_occur(b.loose(), b.fvmask(), depth)) return 0;
  std::uint32_t n = 0;
  for (const auto& u : b.elems()) n += count(u, h, depth);
  return n;
}

std::uint32_t count(const Term& t, const Hole& h, std::uint32_t depth) {
  if (!h.may_occur(t.loose(), t.fvmask(), depth)) return 0;
  switch (t.tag()) {
    case Tag::Var: return h.hits(t.var(), depth) ? 1 : 0;
    case Tag::Abs: return count(t.body(), h, depth + 1);
    case Tag::App: return count(t.fn(), h, depth) + count(t.arg(), h, depth);
  }
  return 0;
}

using Sel = std::vector<std::uint8_t>;

// Distributes selected items onto occurrences of a hole. In exact mode every
// occurrence receives one item; otherwise occurrences may stay untouched.
// Every selected item is always placed.
class Filler {
 public:
  Filler(const Hole& h, const std::vector<Term>& items, bool exact)
      : h_(h), items_(items), exact_(exact) {}

  std::vector<Term> fill(const Term& t, std::uint32_t depth, const Sel& sel) const {
    std::uint32_t c = count(t, h_, depth);
    if (exact_ ? sel.size() != c : sel.size() > c) return {};
    if (sel.empty()) return {lower(t, depth)};
    switch (t.tag()) {
      case Tag::Var: return {shift(items_[sel[0]], depth)};
      case Tag::Abs: {
        std::vector<Term> out;
        for (auto& b : fill(t.body(), depth + 1, sel)) out.push_back(Term::abs(t.hint(), std::move(b)));
        return out;
      }
      case Tag::App: {
        std::vector<Term> out;
        std::uint32_t cf = count(t.fn(), h_, depth);
        std::uint32_t ca = c - cf;
        for_each_split(sel, cf, ca, [&](const Sel& left, const Sel& right) {
          auto fs = fill(t.fn(), depth, left);
          if (fs.empty()) return;
          auto as = fill(t.arg(), depth, right);
          for (const auto& f : fs)
            for (const auto& a : as) out.push_back(Term::app(f, a));
        });
        return out;
      }
    }
    return {};
  }

  std::vector<Bag> fill(const Bag& b, std::uint32_t depth, const Sel& sel) const {
    std::uint32_t c = count(b, h_, depth);
    if (exact_ ? sel.size() != c : sel.size() > c) return {};
    if (sel.empty()) return {lower(b, depth)};
    const auto& el = b.elems();
    std::vector<std::uint32_t> caps(el.size());
    std::vector<std::uint32_t> after(el.size() + 1, 0);
    for (std::size_t j = el.size(); j-- > 0;) {
      caps[j] = count(el[j], h_, depth);
      after[j] = after[j + 1] + caps[j];
    }
    std::vector<Bag> out;
    std::vector<std::vector<Term>> choice(el.size());
    // element j takes a part of `rest`; the tail must fit in the later capacities
    auto go = [&](auto&& self, std::size_t j, const Sel& rest) -> void {
      if (j == el.size()) {
        if (!rest.empty()) return;
        product(choice, 0, {}, out);
        return;
      }
      for_each_split(rest, caps[j], after[j + 1], [&](const Sel& mine, const Sel& others) {
        auto r = fill(el[j], depth, mine);
        if (r.empty()) return;
        choice[j] = std::move(r);
        self(self, j + 1, others);
      });
    };
    go(go, 0, sel);
    return out;
  }

 private:
  // Splits sel into (left, right) with |left| <= capl and |right| <= capr
  // (exact mode: equalities).
  template <class F>
  void for_each_split(const Sel& sel, std::uint32_t capl, std::uint32_t capr, F&& f) const {
    const std::size_t n = sel.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::uint32_t k = static_cast<std::uint32_t>(std::popcount(mask));
      std::uint32_t r = static_cast<std::uint32_t>(n) - k;
      if (exact_ ? (k != capl || r != capr) : (k > capl || r > capr)) continue;
      Sel left, right;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? left : right).push_back(sel[i]);
      f(left, right);
    }
  }

  static void product(const std::vector<std::vector<Term>>& choice, std::size_t j,
                      std::vector<Term> acc, std::vector<Bag>& out) {
    if (j == choice.size()) {
      out.emplace_back(std::move(acc));
      return;
    }
    for (const auto& t : choice[j]) {
      auto next = acc;
      next.push_back(t);
      product(choice, j + 1, std::move(next), out);
    }
  }

  Term lower(const Term& t, std::uint32_t depth) const {
    if (!h_.eliminate || t.loose() <= h_.index + depth + 1) return t;
    switch (t.tag()) {
      case Tag::Var: return Term::bvar(t.var().index - 1);
      case Tag::Abs: return Term::abs(t.hint(), lower(t.body(), depth + 1));
      case Tag::App: return Term::app(lower(t.fn(), depth), lower(t.arg(), depth));
    }
    return t;
  }

  Bag lower(const Bag& b, std::uint32_t depth) const {
    if (!h_.eliminate || b.loose() <= h_.index + depth + 1) return b;
    std::vector<Term> e;
    for (const auto& u : b.elems()) e.push_back(lower(u, depth));
    return Bag(std::move(e));
  }

  const Hole& h_;
  const std::vector<Term>& items_;
  bool exact_;
};

Sel all_of(std::size_t n) {
  Sel s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint8_t>(i);
  return s;
}

template <class E>
FinSum<E> run(const E& e, const Hole& h, const std::vector<Term>& items, bool exact,
              const Semiring& s) {
  FinSum<E> out(s);
  Filler f(h, items, exact);
  for (auto& r : f.fill(e, 0, all_of(items.size()))) out.add(r);
  return out;
}

TermSum subst_rec(const Term& t, const Hole& h, const TermSum& sigma, std::uint32_t depth);

BagSum subst_rec(const Bag& b, const Hole& h, const TermSum& sigma, std::uint32_t depth) {
  if (count(b, h, depth) == 0) return BagSum(sigma.semiring(), b);
  std::vector<TermSum> parts;
  for (const auto& u : b.elems()) parts.push_back(subst_rec(u, h, sigma, depth));
  return bag_product(sigma.semiring(), parts);
}

TermSum subst_rec(const Term& t, const Hole& h, const TermSum& sigma, std::uint32_t depth) {
  if (count(t, h, depth) == 0) return TermSum(sigma.semiring(), t);
  switch (t.tag()) {
    case Tag::Var: return shift(sigma, depth);
    case Tag::Abs: return abs_sum(t.hint(), subst_rec(t.body(), h, sigma, depth + 1));
    case Tag::App:
      return app_sum(subst_rec(t.fn(), h, sigma, depth), subst_rec(t.arg(), h, sigma, depth));
  }
  return TermSum(sigma.semiring());
}

template <class E, class F>
FinSum<E> linear(const FinSum<E>& e, F&& f) {
  FinSum<E> out(e.semiring());
  for (const auto& [x, c] : e) out.add_scaled(f(x), c);
  return out;
}

}  // namespace

TermSum pdiff(const Term& e, Symbol x, const Term& u, const Semiring& s) {
  return run(e, Hole::named(x), {u}, false, s);
}
BagSum pdiff(const Bag& e, Symbol x, const Term& u, const Semiring& s) {
  return run(e, Hole::named(x), {u}, false, s);
}

TermSum npdiff(const Term& e, Symbol x, const Bag& us, const Semiring& s) {
  return run(e, Hole::named(x), us.elems(), false, s);
}
BagSum npdiff(const Bag& e, Symbol x, const Bag& us, const Semiring& s) {
  return run(e, Hole::named(x), us.elems(), false, s);
}

TermSum lsubst(const Term& e, Symbol x, const Bag& us, const Semiring& s) {
  return run(e, Hole::named(x), us.elems(), true, s);
}
BagSum lsubst(const Bag& e, Symbol x, const Bag& us, const Semiring& s) {
  return run(e, Hole::named(x), us.elems(), true, s);
}

TermSum subst_sum(const Term& e, Symbol x, const TermSum& sigma) {
  return subst_rec(e, Hole::named(x), sigma, 0);
}
BagSum subst_sum(const Bag& e, Symbol x, const TermSum& sigma) {
  return subst_rec(e, Hole::named(x), sigma, 0);
}

TermSum pdiff(const TermSum& e, Symbol x, const Term& u) {
  return linear(e, [&](const Term& t) { return pdiff(t, x, u, e.semiring()); });
}
TermSum npdiff(const TermSum& e, Symbol x, const Bag& us) {
  return linear(e, [&](const Term& t) { return npdiff(t, x, us, e.semiring()); });
}
TermSum lsubst(const TermSum& e, Symbol x, const Bag& us) {
  return linear(e, [&](const Term& t) { return lsubst(t, x, us, e.semiring()); });
}
BagSum lsubst(const BagSum& e, Symbol x, const Bag& us) {
  return linear(e, [&](const Bag& b) { return lsubst(b, x, us, e.semiring()); });
}
TermSum subst_sum(const TermSum& e, Symbol x, const TermSum& sigma) {
  return linear(e, [&](const Term& t) { return subst_sum(t, x, sigma); });
}

TermSum fire_redex(const Term& body, const Bag& arg, const Semiring& s) {
  return run(body, Hole::binder(), arg.elems(), true, s);
}

std::uint32_t degree(const Term& e, Symbol x) { return count(e, Hole::named(x), 0); }
std::uint32_t degree(const Bag& e, Symbol x) { return count(e, Hole::named(x), 0); }
std::uint32_t bound_degree(const Term& e, std::uint32_t index) {
  Hole h = Hole::binder();
  h.index = index;
  return count(e, h, 0);
}

}  // namespace rlw
