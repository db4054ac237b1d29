#include "rlw/lambda.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "rlw/errors.hpp"
#include "rlw/taylor.hpp"

namespace rlw {

namespace {

struct OutOfFuel {};

Alg wrap_binders(const std::vector<Symbol>& binders, Alg body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = canon_abs(*it, body);
  return body;
}

void simple_summands(const Alg& m, std::vector<Alg>& out) {
  switch (m.tag()) {
    case AlgTag::Zero: return;
    case AlgTag::Scale: simple_summands(m.body(), out); return;
    case AlgTag::Sum:
      simple_summands(m.lhs(), out);
      simple_summands(m.rhs(), out);
      return;
    default: out.push_back(m);
  }
}

Judgement solvable_within(const Alg& m, std::uint64_t& budget);

Judgement kleene_and(const Judgement& a, const Judgement& b) {
  if (a.is_no() || b.is_no()) return Judgement::no();
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return Judgement::definite({});
}

// Every head step taken by a sub-check is paid from one shared budget.
Judgement determinate(const Alg& m, std::uint32_t d, std::uint64_t& fuel) {
  if (d == 0) return Judgement::definite({});
  switch (m.tag()) {
    case AlgTag::Zero: return Judgement::definite({});
    case AlgTag::Scale: return determinate(m.body(), d, fuel);
    case AlgTag::Sum: {
      Judgement l = determinate(m.lhs(), d, fuel);
      if (l.is_no()) return l;
      return kleene_and(l, determinate(m.rhs(), d, fuel));
    }
    default: break;
  }
  HeadShape h = head_classify(m);
  if (auto* hn = std::get_if<HeadNormal>(&h)) {
    Judgement acc = Judgement::definite({});
    for (const auto& a : hn->args) {
      acc = kleene_and(acc, determinate(a, d - 1, fuel));
      if (acc.is_no()) break;
    }
    return acc;
  }
  Judgement ws = solvable_within(m, fuel);
  if (ws.is_no()) return Judgement::definite({});
  if (ws.is_definite()) return Judgement::no();
  return ws;
}

class Approximator {
 public:
  explicit Approximator(std::uint64_t fuel) : fuel_(fuel) {}

  Alg run(const Alg& m, std::uint32_t d) {
    if (d == 0 || unsolvable(m)) return Alg::zero();
    switch (m.tag()) {
      case AlgTag::Zero: return m;
      case AlgTag::Scale: return Alg::scale(m.coef(), run(m.body(), d));
      case AlgTag::Sum: return Alg::sum(run(m.lhs(), d), run(m.rhs(), d));
      default: break;
    }
    HeadShape h = head_classify(m);
    if (auto* hn = std::get_if<HeadNormal>(&h)) {
      Alg acc = Alg::var(hn->head);
      for (const auto& a : hn->args) acc = canon_app(acc, run(a, d - 1));
      return wrap_binders(hn->binders, acc);
    }
    if (spent_ >= fuel_) throw OutOfFuel{};
    ++spent_;
    return run(head_reduct(m), d);
  }

  std::uint64_t spent() const { return spent_; }

 private:
  bool unsolvable(const Alg& m) {
    auto it = ws_.find(m);
    if (it == ws_.end()) {
      std::uint64_t budget = fuel_ - std::min(spent_, fuel_);
      Judgement j = solvable_within(m, budget);
      spent_ = fuel_ - budget;
      it = ws_.emplace(m, j).first;
    }
    if (it->second.is_unknown()) throw OutOfFuel{};
    return it->second.is_no();
  }

  std::uint64_t fuel_;
  std::uint64_t spent_ = 0;
  std::unordered_map<Alg, Judgement> ws_;
};

class DirectExpander {
 public:
  DirectExpander(const Semiring& d, std::uint64_t fuel) : d_(d), fuel_(fuel) {}

  TermSum run(const Alg& m, std::uint32_t n, std::uint32_t depth) {
    TermSum out(d_);
    if (n == 0) return out;
    switch (m.tag()) {
      case AlgTag::Zero: return out;
      case AlgTag::Scale:
        if (!m.coef().is_zero()) out.add_scaled(run(m.body(), n, depth), m.coef());
        return out;
      case AlgTag::Sum:
        out.add(run(m.lhs(), n, depth));
        out.add(run(m.rhs(), n, depth));
        return out;
      default: break;
    }
    // head reduction keeps the outer binders
    std::uint32_t binders = 0;
    for (const Alg* c = &m; c->tag() == AlgTag::Abs; c = &c->body()) ++binders;
    if (binders >= n) return out;
    Key key{m, n, depth};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!active_.insert(key).second) throw OutOfFuel{};
    if (!unsolvable(m)) {
      HeadShape h = head_classify(m);
      if (auto* hn = std::get_if<HeadNormal>(&h)) {
        expand_hnf(*hn, n, depth, out);
      } else {
        if (spent_ >= fuel_) throw OutOfFuel{};
        ++spent_;
        out = run(head_reduct(m), n, depth);
      }
    }
    active_.erase(key);
    memo_.emplace(key, out);
    return out;
  }

  std::uint64_t spent() const { return spent_; }

 private:
  struct Key {
    Alg m;
    std::uint32_t n, depth;
    friend bool operator==(const Key& a, const Key& b) {
      return a.n == b.n && a.depth == b.depth && a.m == b.m;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.m.hash() ^ (std::size_t(k.n) * 0x9e3779b97f4a7c15ull) ^ (std::size_t(k.depth) << 40);
    }
  };

  bool unsolvable(const Alg& m) {
    auto it = ws_.find(m);
    if (it == ws_.end()) {
      std::uint64_t budget = fuel_ - std::min(spent_, fuel_);
      Judgement j = solvable_within(m, budget);
      spent_ = fuel_ - budget;
      it = ws_.emplace(m, j).first;
    }
    if (it->second.is_unknown()) throw OutOfFuel{};
    return it->second.is_no();
  }

  void expand_hnf(const HeadNormal& hn, std::uint32_t n, std::uint32_t depth, TermSum& out) {
    const std::size_t k = hn.binders.size();
    const std::size_t nargs = hn.args.size();
    if (n < k + 1 + nargs) return;
    if (nargs > 0 && depth == 0) return;
    std::uint32_t room = static_cast<std::uint32_t>(n - k - 1 - nargs);
    args(hn, 0, room, depth, Term::var(hn.head), d_.one(), out);
  }

  void args(const HeadNormal& hn, std::size_t i, std::uint32_t room, std::uint32_t depth,
            const Term& acc, const Scalar& c, TermSum& out) {
    if (i == hn.args.size()) {
      Term t = acc;
      for (auto it = hn.binders.rbegin(); it != hn.binders.rend(); ++it) t = Term::abs(*it, t);
      out.add(t, c);
      return;
    }
    TermSum e = run(hn.args[i], room, depth - 1);
    std::vector<std::pair<Term, Scalar>> cand(e.begin(), e.end());
    std::vector<Term> pick;
    bags(cand, 0, room, c, pick, [&](const Bag& b, std::uint32_t left, const Scalar& w) {
      args(hn, i + 1, left, depth, Term::app(acc, b), w, out);
    });
  }

  template <class F>
  void bags(const std::vector<std::pair<Term, Scalar>>& cand, std::size_t i, std::uint32_t room,
            const Scalar& acc, std::vector<Term>& pick, F&& emit) {
    if (i == cand.size()) {
      emit(Bag(pick), room, acc);
      return;
    }
    bags(cand, i + 1, room, acc, pick, emit);
    const auto& [u, c] = cand[i];
    Scalar k = acc;
    std::size_t base = pick.size();
    for (unsigned m = 1; m * u.size() <= room; ++m) {
      pick.push_back(u);
      k = d_.mul(k, c);
      Scalar w = d_.mul(k, d_.inv_factorial(m));
      if (!w.is_zero()) bags(cand, i + 1, room - m * u.size(), w, pick, emit);
    }
    pick.resize(base);
  }

  Semiring d_;
  std::uint64_t fuel_;
  std::uint64_t spent_ = 0;
  std::unordered_map<Key, TermSum, KeyHash> memo_;
  std::unordered_set<Key, KeyHash> active_;
  std::unordered_map<Alg, Judgement> ws_;
};

std::uint32_t default_depth(const TruncationBound& b) {
  return b.max_mono_depth ? *b.max_mono_depth + 1 : b.max_size / 2 + 1;
}

Judgement solvable_within(const Alg& m, std::uint64_t& budget) {
  std::vector<Alg> start;
  simple_summands(canonicalize_alg(m), start);
  std::unordered_set<Alg> seen(start.begin(), start.end());
  std::deque<Alg> todo(start.begin(), start.end());
  while (!todo.empty()) {
    Alg s = todo.front();
    todo.pop_front();
    HeadShape h = head_classify(s);
    if (std::holds_alternative<HeadNormal>(h)) return Judgement::definite({});
    if (budget == 0) return Judgement::unknown(0);
    --budget;
    std::vector<Alg> next;
    simple_summands(head_reduct(s), next);
    for (auto& n : next)
      if (seen.insert(n).second) todo.push_back(n);
  }
  return Judgement::no();
}

}  // namespace

Alg beta_subst(const Alg& m, Symbol x, const Alg& n) { return canonicalize_alg(subst_free(m, x, n)); }

HeadShape head_classify(const Alg& s) {
  std::vector<Symbol> binders;
  const Alg* cur = &s;
  while (cur->tag() == AlgTag::Abs) {
    binders.push_back(cur->hint());
    cur = &cur->body();
  }
  std::vector<Alg> args;
  while (cur->tag() == AlgTag::App) {
    args.push_back(cur->arg());
    cur = &cur->fn();
  }
  std::reverse(args.begin(), args.end());
  if (cur->tag() == AlgTag::Var) return HeadNormal{std::move(binders), cur->var(), std::move(args)};
  if (cur->tag() == AlgTag::Abs && !args.empty()) {
    Alg arg = args.front();
    args.erase(args.begin());
    return HeadRedex{std::move(binders), *cur, std::move(arg), std::move(args)};
  }
  throw Error("NotSimple", "spine head is not a variable or an abstraction");
}

Alg head_reduct(const Alg& s) {
  HeadShape h = head_classify(s);
  auto* hr = std::get_if<HeadRedex>(&h);
  if (!hr) return s;
  Alg acc = canonicalize_alg(subst_top(hr->fn.body(), hr->arg));
  for (const auto& a : hr->rest) acc = canon_app(acc, a);
  return wrap_binders(hr->binders, acc);
}

Alg left_reduct_alg(const Alg& m) {
  switch (m.tag()) {
    case AlgTag::Zero: return m;
    case AlgTag::Scale: return Alg::scale(m.coef(), left_reduct_alg(m.body()));
    case AlgTag::Sum: return Alg::sum(left_reduct_alg(m.lhs()), left_reduct_alg(m.rhs()));
    default: break;
  }
  if (m.beta_normal()) return m;
  HeadShape h = head_classify(m);
  if (auto* hn = std::get_if<HeadNormal>(&h)) {
    Alg acc = Alg::var(hn->head);
    for (const auto& a : hn->args) acc = canon_app(acc, left_reduct_alg(a));
    return wrap_binders(hn->binders, acc);
  }
  return head_reduct(m);
}

Alg full_reduct_alg(const Alg& m) {
  if (m.beta_normal()) return m;
  switch (m.tag()) {
    case AlgTag::Var:
    case AlgTag::Zero: return m;
    case AlgTag::Abs: return canon_abs(m.hint(), full_reduct_alg(m.body()));
    case AlgTag::App:
      if (m.fn().tag() == AlgTag::Abs)
        return canonicalize_alg(subst_top(full_reduct_alg(m.fn().body()), full_reduct_alg(m.arg())));
      return canon_app(full_reduct_alg(m.fn()), full_reduct_alg(m.arg()));
    case AlgTag::Scale: return Alg::scale(m.coef(), full_reduct_alg(m.body()));
    case AlgTag::Sum: return Alg::sum(full_reduct_alg(m.lhs()), full_reduct_alg(m.rhs()));
  }
  return m;
}

Verdict<Alg> normalize_alg(const Alg& m, std::uint64_t fuel) {
  Alg cur = canonicalize_alg(m);
  std::unordered_set<Alg> seen;
  for (std::uint64_t i = 0;; ++i) {
    if (cur.beta_normal()) return Verdict<Alg>::definite(cur);
    if (!seen.insert(cur).second) return Verdict<Alg>::no();
    if (i == fuel) return Verdict<Alg>::unknown(fuel);
    cur = left_reduct_alg(cur);
  }
}

Judgement weak_solvable(const Alg& m, std::uint64_t fuel) {
  std::uint64_t budget = fuel;
  Judgement j = solvable_within(m, budget);
  j.fuel_spent = fuel - budget;
  return j;
}

Judgement d_determinate(const Alg& m, std::uint32_t d, std::uint64_t fuel) {
  std::uint64_t budget = fuel;
  Judgement j = determinate(canonicalize_alg(m), d, budget);
  j.fuel_spent = fuel - budget;
  return j;
}

Verdict<std::uint64_t> d_determinable(const Alg& m, std::uint32_t d, std::uint64_t fuel) {
  Alg cur = canonicalize_alg(m);
  std::unordered_set<Alg> seen;
  bool all_no = true;
  std::uint64_t budget = fuel;
  for (std::uint64_t k = 0;; ++k) {
    if (!seen.insert(cur).second) {
      auto v = all_no ? Verdict<std::uint64_t>::no() : Verdict<std::uint64_t>::unknown(0);
      v.fuel_spent = fuel - budget;
      return v;
    }
    Judgement j = determinate(cur, d, budget);
    if (j.is_definite()) {
      auto v = Verdict<std::uint64_t>::definite(k);
      v.fuel_spent = fuel - budget;
      return v;
    }
    all_no = all_no && j.is_no();
    if (budget == 0) return Verdict<std::uint64_t>::unknown(fuel);
    --budget;
    cur = left_reduct_alg(cur);
  }
}

Verdict<Alg> approximant(const Alg& m, std::uint32_t d, std::uint64_t fuel) {
  Approximator a(fuel);
  try {
    return Verdict<Alg>::definite(a.run(canonicalize_alg(m), d));
  } catch (const OutOfFuel&) {
    return Verdict<Alg>::unknown(a.spent());
  }
}

Verdict<TermSum> nf_taylor_direct(const Alg& m, const TruncationBound& bound, std::uint64_t fuel,
                                  const Semiring& s) {
  if (!s.has_fractions()) throw NoFractions(std::string(s.name()) + " cannot express 1/n!");
  DirectExpander e(s, fuel);
  std::uint32_t depth = bound.max_mono_depth ? *bound.max_mono_depth : UINT32_MAX;
  try {
    return Verdict<TermSum>::definite(e.run(canonicalize_alg(m), bound.max_size, depth));
  } catch (const OutOfFuel&) {
    return Verdict<TermSum>::unknown(e.spent());
  }
}

Verdict<Scalar> nf_taylor_coeff(const Alg& m, const Term& t, std::uint64_t fuel, const Semiring& s) {
  if (!s.has_fractions()) throw NoFractions(std::string(s.name()) + " cannot express 1/n!");
  if (!t.normal()) throw NotNormal("target term has a redex");
  std::uint32_t d = t.mono_depth() + 1;
  Alg cur = canonicalize_alg(m);
  auto k = d_determinable(cur, d, fuel);
  if (k.is_definite()) {
    for (std::uint64_t i = 0; i < k.value; ++i) cur = left_reduct_alg(cur);
    auto a = approximant(cur, d, fuel);
    if (a.is_definite()) return Verdict<Scalar>::definite(taylor_coeff(a.value, t, s));
  }
  auto v = nf_taylor_direct(m, TruncationBound{t.size(), t.mono_depth()}, fuel, s);
  if (!v.is_definite()) return Verdict<Scalar>::unknown(v.fuel_spent);
  return Verdict<Scalar>::definite(v.value.coeff(t));
}

Verdict<TermSum> nf_taylor_truncated(const Alg& m, const TruncationBound& bound, std::uint64_t fuel,
                                     const Semiring& s) {
  if (!s.has_fractions()) throw NoFractions(std::string(s.name()) + " cannot express 1/n!");
  std::uint32_t d = default_depth(bound);
  Alg cur = canonicalize_alg(m);
  auto k = d_determinable(cur, d, fuel);
  if (k.is_definite()) {
    for (std::uint64_t i = 0; i < k.value; ++i) cur = left_reduct_alg(cur);
    auto a = approximant(cur, d, fuel);
    if (a.is_definite()) return Verdict<TermSum>::definite(taylor_truncated(a.value, bound, s));
  }
  return nf_taylor_direct(m, bound, fuel, s);
}

}  // namespace rlw
