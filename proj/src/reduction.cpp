#include "rlw/reduction.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rlw/calculus.hpp"
#include "rlw/errors.hpp"
#include "rlw/syntax.hpp"

namespace rlw {

namespace {

using Path = std::vector<std::uint32_t>;

Path prepend(std::uint32_t head, const Path& tail) {
  Path p;
  p.reserve(tail.size() + 1);
  p.push_back(head);
  p.insert(p.end(), tail.begin(), tail.end());
  return p;
}

BagSum replace_elem(const Bag& b, std::size_t i, const TermSum& sigma) {
  BagSum out(sigma.semiring());
  for (const auto& [t, c] : sigma) {
    auto e = b.elems();
    e[i] = t;
    out.add(Bag(std::move(e)), c);
  }
  return out;
}

TermSum fire_all(const TermSum& bodies, const BagSum& args) {
  const Semiring& s = bodies.semiring();
  TermSum out(s);
  for (const auto& [b, c] : bodies)
    for (const auto& [a, d] : args) out.add_scaled(fire_redex(b, a, s), s.mul(c, d));
  return out;
}

std::vector<std::pair<Path, TermSum>> steps(const Term& t, const Semiring& s);

std::vector<std::pair<Path, BagSum>> steps(const Bag& b, const Semiring& s) {
  std::vector<std::pair<Path, BagSum>> out;
  if (b.normal()) return out;
  for (std::size_t i = 0; i < b.count(); ++i)
    for (auto& [p, sigma] : steps(b.elems()[i], s))
      out.emplace_back(prepend(static_cast<std::uint32_t>(i), p), replace_elem(b, i, sigma));
  return out;
}

std::vector<std::pair<Path, TermSum>> steps(const Term& t, const Semiring& s) {
  std::vector<std::pair<Path, TermSum>> out;
  if (t.normal()) return out;
  switch (t.tag()) {
    case Tag::Var: break;
    case Tag::Abs:
      for (auto& [p, sigma] : steps(t.body(), s)) out.emplace_back(prepend(0, p), abs_sum(t.hint(), sigma));
      break;
    case Tag::App: {
      const Term& f = t.fn();
      const Bag& a = t.arg();
      if (f.tag() == Tag::Abs) out.emplace_back(Path{}, fire_redex(f.body(), a, s));
      for (auto& [p, sigma] : steps(f, s)) out.emplace_back(prepend(0, p), app_sum(sigma, BagSum(s, a)));
      for (auto& [p, sigma] : steps(a, s)) {
        std::uint32_t i = p.front();
        Path rest(p.begin() + 1, p.end());
        out.emplace_back(prepend(i + 1, rest), app_sum(TermSum(s, f), sigma));
      }
      break;
    }
  }
  return out;
}

template <class E, class F>
FinSum<E> linear(const FinSum<E>& e, F&& f) {
  FinSum<E> out(e.semiring());
  for (const auto& [x, c] : e) out.add_scaled(f(x), c);
  return out;
}

TermSum left_term(const Term& t, const Semiring& s);

BagSum left_bag(const Bag& b, const Semiring& s) {
  if (b.normal()) return BagSum(s, b);
  std::vector<TermSum> parts;
  for (const auto& u : b.elems()) parts.push_back(left_term(u, s));
  return bag_product(s, parts);
}

TermSum left_term(const Term& t, const Semiring& s) {
  if (t.normal()) return TermSum(s, t);
  if (t.tag() == Tag::Abs) return abs_sum(t.hint(), left_term(t.body(), s));
  std::vector<const Bag*> args;
  const Term* h = &t;
  while (h->tag() == Tag::App) {
    args.push_back(&h->arg());
    h = &h->fn();
  }
  std::reverse(args.begin(), args.end());
  if (h->tag() == Tag::Var) {
    TermSum acc(s, *h);
    for (const Bag* a : args) acc = app_sum(acc, left_bag(*a, s));
    return acc;
  }
  TermSum acc = fire_redex(h->body(), *args[0], s);
  for (std::size_t i = 1; i < args.size(); ++i) acc = app_sum(acc, BagSum(s, *args[i]));
  return acc;
}

TermSum full_term(const Term& t, const Semiring& s);

BagSum full_bag(const Bag& b, const Semiring& s) {
  if (b.normal()) return BagSum(s, b);
  std::vector<TermSum> parts;
  for (const auto& u : b.elems()) parts.push_back(full_term(u, s));
  return bag_product(s, parts);
}

TermSum full_term(const Term& t, const Semiring& s) {
  if (t.normal()) return TermSum(s, t);
  switch (t.tag()) {
    case Tag::Var: return TermSum(s, t);
    case Tag::Abs: return abs_sum(t.hint(), full_term(t.body(), s));
    case Tag::App:
      if (t.fn().tag() == Tag::Abs) return fire_all(full_term(t.fn().body(), s), full_bag(t.arg(), s));
      return app_sum(full_term(t.fn(), s), full_bag(t.arg(), s));
  }
  return TermSum(s);
}

TermSum fpbs_term(std::uint32_t d, const Term& t, const Semiring& s);

BagSum fpbs_bag(std::uint32_t d, const Bag& b, const Semiring& s) {
  if (d == 0 || b.normal()) return BagSum(s, b);
  std::vector<TermSum> parts;
  for (const auto& u : b.elems()) parts.push_back(fpbs_term(d, u, s));
  return bag_product(s, parts);
}

TermSum fpbs_term(std::uint32_t d, const Term& t, const Semiring& s) {
  if (d == 0 || t.normal()) return TermSum(s, t);
  switch (t.tag()) {
    case Tag::Var: return TermSum(s, t);
    case Tag::Abs: return abs_sum(t.hint(), fpbs_term(d - 1, t.body(), s));
    case Tag::App: {
      const Term& f = t.fn();
      if (f.tag() == Tag::Abs && occ_bound(0, f.body()).max_depth() <= d - 1)
        return fire_all(fpbs_term(d - 1, f.body(), s), fpbs_bag(d - 1, t.arg(), s));
      return app_sum(fpbs_term(d, f, s), fpbs_bag(d - 1, t.arg(), s));
    }
  }
  return TermSum(s);
}

std::set<TermSum> par_term(const Term& t, const Semiring& s);

std::set<BagSum> par_bag(const Bag& b, const Semiring& s) {
  std::vector<std::vector<TermSum>> options;
  for (const auto& u : b.elems()) {
    auto o = par_term(u, s);
    options.emplace_back(o.begin(), o.end());
  }
  std::set<BagSum> out;
  std::vector<TermSum> pick(options.size());
  auto go = [&](auto&& self, std::size_t j) -> void {
    if (j == options.size()) {
      out.insert(bag_product(s, pick));
      return;
    }
    for (const auto& o : options[j]) {
      pick[j] = o;
      self(self, j + 1);
    }
  };
  go(go, 0);
  return out;
}

std::set<TermSum> par_term(const Term& t, const Semiring& s) {
  std::set<TermSum> out;
  if (t.normal()) {
    out.insert(TermSum(s, t));
    return out;
  }
  switch (t.tag()) {
    case Tag::Var: out.insert(TermSum(s, t)); break;
    case Tag::Abs:
      for (const auto& b : par_term(t.body(), s)) out.insert(abs_sum(t.hint(), b));
      break;
    case Tag::App: {
      auto args = par_bag(t.arg(), s);
      for (const auto& f : par_term(t.fn(), s))
        for (const auto& a : args) out.insert(app_sum(f, a));
      if (t.fn().tag() == Tag::Abs)
        for (const auto& b : par_term(t.fn().body(), s))
          for (const auto& a : args) out.insert(fire_all(b, a));
      break;
    }
  }
  return out;
}

template <class E>
std::vector<E> reachable(const E& e) {
  Semiring s(SemiringKind::Nat);
  std::set<E, ExprLess> seen{e};
  std::deque<E> todo{e};
  while (!todo.empty()) {
    E cur = todo.front();
    todo.pop_front();
    for (auto& [p, sigma] : one_step_reducts(cur, s))
      for (const auto& [x, c] : sigma)
        if (seen.insert(x).second) todo.push_back(x);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<std::pair<RedexPosition, TermSum>> one_step_reducts(const Term& e, const Semiring& s) {
  std::vector<std::pair<RedexPosition, TermSum>> out;
  for (auto& [p, sigma] : steps(e, s)) out.emplace_back(RedexPosition{std::move(p)}, std::move(sigma));
  return out;
}

std::vector<std::pair<RedexPosition, BagSum>> one_step_reducts(const Bag& e, const Semiring& s) {
  std::vector<std::pair<RedexPosition, BagSum>> out;
  for (auto& [p, sigma] : steps(e, s)) out.emplace_back(RedexPosition{std::move(p)}, std::move(sigma));
  return out;
}

const TermSum& Normalizer::term(const Term& t) {
  auto it = memo_.find(t);
  if (it != memo_.end()) return it->second;
  TermSum out(s_);
  if (t.normal()) {
    out.add(t);
  } else {
    switch (t.tag()) {
      case Tag::Var: out.add(t); break;
      case Tag::Abs: out = abs_sum(t.hint(), term(t.body())); break;
      case Tag::App: {
        TermSum fs = term(t.fn());
        BagSum as = bag(t.arg());
        for (const auto& [f, c] : fs)
          for (const auto& [a, d] : as) {
            Scalar k = s_.mul(c, d);
            if (f.tag() == Tag::Abs) {
              out.add_scaled(sum(fire_redex(f.body(), a, s_)), k);
            } else {
              out.add(Term::app(f, a), k);
            }
          }
        break;
      }
    }
  }
  return memo_.emplace(t, std::move(out)).first->second;
}

BagSum Normalizer::bag(const Bag& b) {
  if (b.normal()) return BagSum(s_, b);
  std::vector<TermSum> parts;
  for (const auto& u : b.elems()) parts.push_back(term(u));
  return bag_product(s_, parts);
}

TermSum Normalizer::sum(const TermSum& e) {
  TermSum out(s_);
  for (const auto& [t, c] : e) out.add_scaled(term(t), c);
  return out;
}

BagSum Normalizer::sum(const BagSum& e) {
  BagSum out(s_);
  for (const auto& [b, c] : e) out.add_scaled(bag(b), c);
  return out;
}

TermSum nf(const TermSum& e) { return Normalizer(e.semiring()).sum(e); }
BagSum nf(const BagSum& e) { return Normalizer(e.semiring()).sum(e); }
TermSum nf(const Term& e, const Semiring& s) { return Normalizer(s).term(e); }

TermSum normal_restrict(const TermSum& e) {
  TermSum out(e.semiring());
  for (const auto& [t, c] : e)
    if (t.normal()) out.add(t, c);
  return out;
}

BagSum normal_restrict(const BagSum& e) {
  BagSum out(e.semiring());
  for (const auto& [b, c] : e)
    if (b.normal()) out.add(b, c);
  return out;
}

std::vector<Term> reachable_support(const Term& e) { return reachable(e); }
std::vector<Bag> reachable_support(const Bag& e) { return reachable(e); }

TermSum left_reduct(const TermSum& e) {
  return linear(e, [&](const Term& t) { return left_term(t, e.semiring()); });
}
BagSum left_reduct(const BagSum& e) {
  return linear(e, [&](const Bag& b) { return left_bag(b, e.semiring()); });
}
TermSum left_reduct(const Term& e, const Semiring& s) { return left_term(e, s); }
BagSum left_reduct(const Bag& e, const Semiring& s) { return left_bag(e, s); }

TermSum full_reduct(const TermSum& e) {
  return linear(e, [&](const Term& t) { return full_term(t, e.semiring()); });
}
BagSum full_reduct(const BagSum& e) {
  return linear(e, [&](const Bag& b) { return full_bag(b, e.semiring()); });
}
TermSum full_reduct(const Term& e, const Semiring& s) { return full_term(e, s); }
BagSum full_reduct(const Bag& e, const Semiring& s) { return full_bag(e, s); }

TermSum fpbs_reduct(std::uint32_t d, const TermSum& e) {
  return linear(e, [&](const Term& t) { return fpbs_term(d, t, e.semiring()); });
}
BagSum fpbs_reduct(std::uint32_t d, const BagSum& e) {
  return linear(e, [&](const Bag& b) { return fpbs_bag(d, b, e.semiring()); });
}
TermSum fpbs_reduct(std::uint32_t d, const Term& e, const Semiring& s) { return fpbs_term(d, e, s); }
BagSum fpbs_reduct(std::uint32_t d, const Bag& e, const Semiring& s) { return fpbs_bag(d, e, s); }

std::vector<TermSum> parallel_reducts(const Term& e, std::uint32_t cap, const Semiring& s) {
  if (e.size() > cap)
    throw CapExceeded("size " + std::to_string(e.size()) + " exceeds cap " + std::to_string(cap));
  auto r = par_term(e, s);
  return {r.begin(), r.end()};
}

std::vector<BagSum> parallel_reducts(const Bag& e, std::uint32_t cap, const Semiring& s) {
  if (e.size() > cap)
    throw CapExceeded("size " + std::to_string(e.size()) + " exceeds cap " + std::to_string(cap));
  auto r = par_bag(e, s);
  return {r.begin(), r.end()};
}

mpz_class growth_bound(unsigned k, unsigned l, unsigned m) {
  mpz_class four_k, b = 0;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  for (unsigned i = 0; i < l; ++i) b = four_k * b + 1;
  mpz_class four_m;
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
  return four_m * b;
}

}  // namespace rlw
