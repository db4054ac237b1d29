#pragma once

// Slow reference implementations used as test oracles. They work on
// occurrence positions directly and share no code with the library beyond
// the term constructors.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "rlw/algebraic.hpp"
#include "rlw/resource.hpp"

namespace oracle {

using namespace rlw;

using Pick = std::function<std::optional<Term>(std::size_t)>;

// Rebuilds e, replacing the k-th free occurrence of x (pre-order) by pick(k).
inline Term replace(const Term& e, Symbol x, const Pick& pick, std::size_t& k) {
  switch (e.tag()) {
    case Tag::Var:
      if (!e.var().bound && e.var().name == x) {
        auto r = pick(k++);
        return r ? *r : e;
      }
      return e;
    case Tag::Abs: return Term::abs(e.hint(), replace(e.body(), x, pick, k));
    case Tag::App: {
      Term f = replace(e.fn(), x, pick, k);
      std::vector<Term> el;
      for (const auto& u : e.arg().elems()) el.push_back(replace(u, x, pick, k));
      return Term::app(f, Bag(el));
    }
  }
  return e;
}

inline std::size_t occurrences(const Term& e, Symbol x) {
  std::size_t k = 0;
  replace(e, x, [](std::size_t) { return std::optional<Term>(); }, k);
  return k;
}

// Items must not contain dangling bound indices.
inline TermSum lsubst(const Term& e, Symbol x, const std::vector<Term>& items, const Semiring& s) {
  TermSum out(s);
  std::size_t n = occurrences(e, x);
  if (n != items.size()) return out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t k = 0;
    out.add(replace(e, x, [&](std::size_t i) { return std::optional<Term>(items[perm[i]]); }, k));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Injections of the items into the occurrences of x.
inline TermSum npdiff(const Term& e, Symbol x, const std::vector<Term>& items, const Semiring& s) {
  TermSum out(s);
  std::size_t n = occurrences(e, x);
  std::vector<std::optional<std::size_t>> slot(n);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == items.size()) {
      std::size_t k = 0;
      out.add(replace(e, x,
                      [&](std::size_t j) {
                        return slot[j] ? std::optional<Term>(items[*slot[j]]) : std::optional<Term>(Term::var(x));
                      },
                      k));
      return;
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!slot[j]) {
        slot[j] = i;
        go(i + 1);
        slot[j].reset();
      }
  };
  go(0);
  return out;
}

// Every occurrence independently takes one summand of sigma.
inline TermSum subst_sum(const Term& e, Symbol x, const TermSum& sigma) {
  const Semiring& s = sigma.semiring();
  TermSum out(s);
  std::size_t n = occurrences(e, x);
  std::vector<std::pair<Term, Scalar>> sm(sigma.begin(), sigma.end());
  if (n > 0 && sm.empty()) return out;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    Scalar c = s.one();
    for (auto j : choice) c = s.mul(c, sm[j].second);
    std::size_t k = 0;
    out.add(replace(e, x, [&](std::size_t i) { return std::optional<Term>(sm[choice[i]].first); }, k), c);
    std::size_t i = 0;
    while (i < n && ++choice[i] == sm.size()) choice[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline std::uint32_t size(const Term& t);
inline std::uint32_t size(const Bag& b) {
  std::uint32_t n = 0;
  for (const auto& u : b.elems()) n += size(u);
  return n;
}
inline std::uint32_t size(const Term& t) {
  switch (t.tag()) {
    case Tag::Var: return 1;
    case Tag::Abs: return 1 + size(t.body());
    case Tag::App: return 1 + size(t.fn()) + size(t.arg());
  }
  return 0;
}

inline std::uint32_t height(const Term& t);
inline std::uint32_t height(const Bag& b) {
  std::uint32_t h = 0;
  for (const auto& u : b.elems()) h = std::max(h, height(u));
  return h;
}
inline std::uint32_t height(const Term& t) {
  switch (t.tag()) {
    case Tag::Var: return 1;
    case Tag::Abs: return 1 + height(t.body());
    case Tag::App: return std::max(height(t.fn()), 1 + height(t.arg()));
  }
  return 0;
}

// Coefficient of s in the Taylor expansion, straight from the clauses.
inline Scalar taylor_coeff(const Alg& m, const Term& s, const Semiring& d) {
  switch (m.tag()) {
    case AlgTag::Var: return s.tag() == Tag::Var && s.var() == m.var() ? d.one() : d.zero();
    case AlgTag::Abs:
      return s.tag() == Tag::Abs ? taylor_coeff(m.body(), s.body(), d) : d.zero();
    case AlgTag::Zero: return d.zero();
    case AlgTag::Scale: return d.mul(m.coef(), taylor_coeff(m.body(), s, d));
    case AlgTag::Sum: return d.add(taylor_coeff(m.lhs(), s, d), taylor_coeff(m.rhs(), s, d));
    case AlgTag::App: {
      if (s.tag() != Tag::App) return d.zero();
      Scalar head = taylor_coeff(m.fn(), s.fn(), d);
      if (head.is_zero()) return head;
      // distinct orderings of the monomial, each a product of coefficients
      std::vector<Term> el = s.arg().elems();
      std::sort(el.begin(), el.end(), ExprLess());
      Scalar acc = d.zero();
      do {
        Scalar p = d.one();
        for (const auto& u : el) p = d.mul(p, taylor_coeff(m.arg(), u, d));
        acc = d.add(acc, p);
      } while (std::next_permutation(el.begin(), el.end(), ExprLess()));
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), el.size());
      return d.mul(head, d.mul(acc, d.inv_nat(f)));
    }
  }
  return d.zero();
}

}  // namespace oracle
