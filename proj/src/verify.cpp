#include "rlw/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "rlw/calculus.hpp"
#include "rlw/corpus.hpp"
#include "rlw/errors.hpp"
#include "rlw/generate.hpp"
#include "rlw/reduction.hpp"
#include "rlw/syntax.hpp"
#include "rlw/taylor.hpp"

namespace rlw {

namespace {

class Law {
 public:
  explicit Law(std::string name, std::string note = {}) {
    r_.law = std::move(name);
    r_.note = std::move(note);
  }

  // body returns an empty string on success and a counterexample otherwise
  template <class F>
  void run(F&& body) {
    ++r_.instances;
    std::string bad;
    try {
      bad = body();
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    if (!bad.empty()) {
      ++r_.failures;
      if (r_.counterexample.empty()) r_.counterexample = bad;
    }
  }

  std::size_t instances() const { return r_.instances; }
  LawResult result(bool observation = false) const {
    LawResult r = r_;
    r.observation = observation;
    return r;
  }

 private:
  LawResult r_;
};

std::string ok_or(bool ok, const std::function<std::string()>& why) { return ok ? std::string() : why(); }

std::string str(const Scalar& s) { return s.value().get_str(); }

template <class E>
std::string show(const E& e) {
  return render(e);
}

std::uint32_t max_size_or(const SuiteConfig& cfg, std::uint32_t dflt) {
  return cfg.max_size ? *cfg.max_size : dflt;
}

bool subset(const std::set<std::uint32_t>& a, const std::set<std::uint32_t>& b) {
  for (auto x : a)
    if (!b.count(x)) return false;
  return true;
}

template <class E>
TermSum restrict_size(const FinSum<E>& e, std::uint32_t n) {
  TermSum out(e.semiring());
  for (const auto& [t, c] : e)
    if (t.size() <= n) out.add(t, c);
  return out;
}

// Multisets of exactly k elements drawn from cand, each weighted by its
// promotion coefficient, with total size at most room.
void choose_multisets(const Semiring& d, const std::vector<std::pair<Term, Scalar>>& cand,
                      std::size_t i, std::uint32_t k, std::uint32_t room, const Scalar& w,
                      std::vector<Term>& pick,
                      const std::function<void(const Bag&, const Scalar&)>& emit) {
  if (k == 0) {
    emit(Bag(pick), w);
    return;
  }
  if (i == cand.size()) return;
  choose_multisets(d, cand, i + 1, k, room, w, pick, emit);
  const auto& [u, c] = cand[i];
  Scalar acc = w;
  std::size_t base = pick.size();
  for (std::uint32_t m = 1; m <= k && m * u.size() <= room; ++m) {
    pick.push_back(u);
    acc = d.mul(acc, c);
    Scalar wm = d.mul(acc, d.inv_factorial(m));
    choose_multisets(d, cand, i + 1, k - m, room - m * u.size(), wm, pick, emit);
  }
  pick.resize(base);
}

// ---------------------------------------------------------------- scalars

std::vector<Scalar> decompose(Generator& g, const Semiring& d, const Scalar& total, std::size_t len) {
  std::vector<Scalar> out(len, d.zero());
  switch (d.kind()) {
    case SemiringKind::Bool: {
      if (total.is_zero()) return out;
      for (auto& c : out) c = Scalar(static_cast<long>(g.below(2)));
      out[g.below(len)] = d.one();
      return out;
    }
    case SemiringKind::Nat:
    case SemiringKind::RatNonneg: {
      std::vector<mpq_class> cuts{0, total.value()};
      for (std::size_t i = 1; i < len; ++i) {
        if (d.kind() == SemiringKind::Nat) {
          mpz_class t = total.value().get_num();
          cuts.push_back(mpq_class(t * static_cast<unsigned long>(g.below(13)) / 12));
        } else {
          cuts.push_back(total.value() * mpq_class(static_cast<long>(g.below(13)), 12));
        }
      }
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t i = 0; i < len; ++i) out[i] = Scalar(mpq_class(cuts[i + 1] - cuts[i]));
      return out;
    }
    case SemiringKind::Int:
    case SemiringKind::Rat: {
      Scalar rest = total;
      for (std::size_t i = 0; i + 1 < len; ++i) {
        out[i] = g.scalar(d);
        rest = d.add(rest, d.neg(out[i]));
      }
      out[len - 1] = rest;
      return out;
    }
  }
  return out;
}

std::string check_split(const Semiring& d, const std::vector<std::vector<Scalar>>& rows) {
  SplitTensor t = split_multi(d, rows);
  std::vector<std::vector<Scalar>> marg;
  for (auto n : t.shape) marg.emplace_back(n, d.zero());
  std::vector<std::size_t> idx(t.shape.size(), 0);
  for (std::size_t off = 0; off < t.cells.size(); ++off) {
    std::size_t rem = off;
    for (std::size_t i = t.shape.size(); i-- > 0;) {
      idx[i] = rem % t.shape[i];
      rem /= t.shape[i];
    }
    if (!d.admits(t.cells[off])) return "inadmissible cell " + str(t.cells[off]);
    for (std::size_t i = 0; i < idx.size(); ++i) marg[i][idx[i]] = d.add(marg[i][idx[i]], t.cells[off]);
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (!d.eq(marg[i][j], rows[i][j])) {
        std::ostringstream os;
        os << d.name() << ": row " << i << " entry " << j << " expected " << str(rows[i][j]) << " got "
           << str(marg[i][j]);
        return os.str();
      }
  return {};
}

SuiteReport scalars_suite(const SuiteConfig& cfg) {
  Generator g(cfg.seed);
  SuiteReport rep{"scalars", {}};

  Law ax("semiring axioms on random scalars");
  for (const auto& d : Semiring::all())
    for (std::uint32_t i = 0; i < 200 * cfg.scale; ++i) {
      Scalar a = g.scalar(d), b = g.scalar(d), c = g.scalar(d);
      ax.run([&] {
        bool ok = d.add(a, b) == d.add(b, a) && d.mul(a, b) == d.mul(b, a) &&
                  d.add(d.add(a, b), c) == d.add(a, d.add(b, c)) &&
                  d.mul(d.mul(a, b), c) == d.mul(a, d.mul(b, c)) &&
                  d.mul(a, d.add(b, c)) == d.add(d.mul(a, b), d.mul(a, c)) &&
                  d.add(d.zero(), a) == a && d.mul(d.one(), a) == a && d.mul(d.zero(), a).is_zero() &&
                  d.admits(d.add(a, b)) && d.admits(d.mul(a, b));
        return ok_or(ok, [&] {
          return std::string(d.name()) + ": a=" + str(a) + " b=" + str(b) + " c=" + str(c);
        });
      });
    }
  rep.laws.push_back(ax.result());

  Law emb("nat_embed is a semiring morphism (m, n <= 50)");
  for (const auto& d : Semiring::all())
    for (std::uint64_t m = 0; m <= 50; ++m)
      for (std::uint64_t n = 0; n <= 50; ++n)
        emb.run([&] {
          bool ok = nat_embed(d, m + n) == d.add(nat_embed(d, m), nat_embed(d, n)) &&
                    nat_embed(d, m * n) == d.mul(nat_embed(d, m), nat_embed(d, n));
          return ok_or(ok, [&] {
            return std::string(d.name()) + ": m=" + std::to_string(m) + " n=" + std::to_string(n);
          });
        });
  rep.laws.push_back(emb.result());

  Law s2("split2 marginals");
  for (const auto& d : Semiring::all())
    for (std::uint32_t i = 0; i < 300 * cfg.scale; ++i) {
      Scalar a1 = g.scalar(d), a2 = g.scalar(d);
      auto b = decompose(g, d, d.add(a1, a2), 2);
      s2.run([&] {
        Split2 c = split2(d, a1, a2, b[0], b[1]);
        bool ok = d.add(c.c[0][0], c.c[0][1]) == a1 && d.add(c.c[1][0], c.c[1][1]) == a2 &&
                  d.add(c.c[0][0], c.c[1][0]) == b[0] && d.add(c.c[0][1], c.c[1][1]) == b[1];
        for (auto& row : c.c)
          for (auto& x : row) ok = ok && d.admits(x);
        return ok_or(ok, [&] {
          return std::string(d.name()) + ": a=(" + str(a1) + "," + str(a2) + ") b=(" + str(b[0]) +
                 "," + str(b[1]) + ")";
        });
      });
    }
  rep.laws.push_back(s2.result());

  for (auto kind : {SemiringKind::Nat, SemiringKind::RatNonneg, SemiringKind::Int, SemiringKind::Rat,
                    SemiringKind::Bool}) {
    Semiring d(kind);
    Law sm("additive splitting marginals over " + std::string(d.name()));
    for (std::uint32_t i = 0; i < 1000 * cfg.scale; ++i) {
      std::size_t nrows = 1 + g.below(4);
      std::vector<std::vector<Scalar>> rows;
      std::vector<Scalar> first(1 + g.below(4));
      for (auto& c : first) c = g.scalar(d);
      Scalar total = d.zero();
      for (auto& c : first) total = d.add(total, c);
      rows.push_back(first);
      for (std::size_t r = 1; r < nrows; ++r) rows.push_back(decompose(g, d, total, 1 + g.below(4)));
      sm.run([&] { return check_split(d, rows); });
    }
    rep.laws.push_back(sm.result());
  }

  Law gate("inverse of naturals is gated by has_fractions");
  for (const auto& d : Semiring::all())
    gate.run([&] {
      bool threw = false;
      Scalar r;
      try {
        r = d.inv_nat(std::uint64_t{3});
      } catch (const NoFractions&) {
        threw = true;
      }
      bool ok = threw ? !d.has_fractions() : d.has_fractions() && d.admits(r);
      return ok_or(ok, [&] { return std::string(d.name()); });
    });
  rep.laws.push_back(gate.result());
  return rep;
}

// --------------------------------------------------------------- calculus

bool rule_at_root(const Alg& m) {
  if (m.tag() == AlgTag::Abs) {
    auto t = m.body().tag();
    return t == AlgTag::Zero || t == AlgTag::Scale || t == AlgTag::Sum;
  }
  if (m.tag() == AlgTag::App) {
    auto t = m.fn().tag();
    return t == AlgTag::Zero || t == AlgTag::Scale || t == AlgTag::Sum;
  }
  return false;
}

Alg apply_root(const Alg& m) {
  if (m.tag() == AlgTag::Abs) {
    const Alg& b = m.body();
    if (b.tag() == AlgTag::Zero) return b;
    if (b.tag() == AlgTag::Scale) return Alg::scale(b.coef(), Alg::abs(m.hint(), b.body()));
    return Alg::sum(Alg::abs(m.hint(), b.lhs()), Alg::abs(m.hint(), b.rhs()));
  }
  const Alg& f = m.fn();
  if (f.tag() == AlgTag::Zero) return f;
  if (f.tag() == AlgTag::Scale) return Alg::scale(f.coef(), Alg::app(f.body(), m.arg()));
  return Alg::sum(Alg::app(f.lhs(), m.arg()), Alg::app(f.rhs(), m.arg()));
}

std::uint64_t count_sites(const Alg& m) {
  std::uint64_t n = rule_at_root(m) ? 1 : 0;
  switch (m.tag()) {
    case AlgTag::Abs:
    case AlgTag::Scale: return n + count_sites(m.body());
    case AlgTag::App: return n + count_sites(m.fn()) + count_sites(m.arg());
    case AlgTag::Sum: return n + count_sites(m.lhs()) + count_sites(m.rhs());
    default: return n;
  }
}

// Rewrites the k-th site in pre-order.
Alg rewrite_site(const Alg& m, std::uint64_t& k) {
  if (rule_at_root(m)) {
    if (k == 0) {
      k = UINT64_MAX;
      return apply_root(m);
    }
    --k;
  }
  auto done = [&] { return k == UINT64_MAX; };
  switch (m.tag()) {
    case AlgTag::Abs: {
      Alg b = rewrite_site(m.body(), k);
      return done() ? Alg::abs(m.hint(), b) : m;
    }
    case AlgTag::Scale: {
      Alg b = rewrite_site(m.body(), k);
      return done() ? Alg::scale(m.coef(), b) : m;
    }
    case AlgTag::App: {
      Alg f = rewrite_site(m.fn(), k);
      if (done()) return Alg::app(f, m.arg());
      Alg a = rewrite_site(m.arg(), k);
      return done() ? Alg::app(m.fn(), a) : m;
    }
    case AlgTag::Sum: {
      Alg l = rewrite_site(m.lhs(), k);
      if (done()) return Alg::sum(l, m.rhs());
      Alg r = rewrite_site(m.rhs(), k);
      return done() ? Alg::sum(m.lhs(), r) : m;
    }
    default: return m;
  }
}

// Independent normalizer for the linearity equations: fires rules at random
// positions until none applies.
Alg random_canonical(const Alg& m, Generator& g) {
  Alg cur = m;
  for (std::uint64_t n = count_sites(cur); n > 0; n = count_sites(cur)) {
    std::uint64_t k = g.below(n);
    cur = rewrite_site(cur, k);
  }
  return cur;
}

SuiteReport calculus_suite(const SuiteConfig& cfg) {
  Generator g(cfg.seed);
  const Semiring Q;
  const Semiring N(SemiringKind::Nat);
  const Symbol x("x"), y("y"), z("z"), w("w");
  const std::vector<Symbol> xyz{x, y, z}, zw{z, w}, yz{y, z};
  const std::uint32_t maxs = max_size_or(cfg, 8);
  const std::uint32_t target = 300 * cfg.scale;
  SuiteReport rep{"calculus", {}};

  auto sample_with = [&](auto pred) {
    for (int tries = 0;; ++tries) {
      Term e = g.term(g.between(3, std::max<std::uint32_t>(3, maxs)), xyz);
      if (pred(e) || tries > 200) return e;
    }
  };

  {
    Law law("schwarz symmetry of second derivatives");
    while (law.instances() < target) {
      Term e = sample_with([&](const Term& e) { return degree(e, x) > 0 && degree(e, y) > 0; });
      Term t = g.term(g.between(1, 3), zw), u = g.term(g.between(1, 3), zw);
      law.run([&] {
        auto l = pdiff(pdiff(e, x, t, Q), y, u);
        auto r = pdiff(pdiff(e, y, u, Q), x, t);
        return ok_or(l == r, [&] { return "e=" + show(e) + " t=" + show(t) + " u=" + show(u); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("derivative exchange with correction term");
    while (law.instances() < target) {
      Term e = sample_with([&](const Term& e) { return degree(e, x) > 0 && degree(e, y) > 0; });
      Term t = g.term(g.between(1, 4), yz), u = g.term(g.between(1, 3), zw);
      law.run([&] {
        auto l = pdiff(pdiff(e, x, t, Q), y, u);
        auto r = pdiff(pdiff(e, y, u, Q), x, t);
        for (const auto& [t2, c] : pdiff(t, y, u, Q)) r.add_scaled(pdiff(e, x, t2, Q), c);
        return ok_or(l == r, [&] { return "e=" + show(e) + " t=" + show(t) + " u=" + show(u); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("iterated derivative equals repeated partial derivative");
    while (law.instances() < target) {
      Term e = sample_with([&](const Term& e) { return degree(e, x) > 0; });
      Bag s = g.bag_of(static_cast<std::uint32_t>(g.below(4)), 3, yz);
      law.run([&] {
        auto l = npdiff(e, x, s, Q);
        TermSum r(Q, e);
        for (const auto& u : s.elems()) r = pdiff(r, x, u);
        return ok_or(l == r, [&] { return "e=" + show(e) + " s=" + show(s); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("iterated derivative size and occurrence bookkeeping");
    while (law.instances() < target) {
      Term e = sample_with([&](const Term& e) { return degree(e, x) > 0; });
      std::uint32_t n = static_cast<std::uint32_t>(g.below(std::min<std::uint32_t>(degree(e, x), 3) + 1));
      Bag s = g.bag_of(n, 3, yz);
      law.run([&]() -> std::string {
        auto ox = occ(x, e);
        if (ox.count < n) return "degree below n";
        for (const auto& [e2, c] : npdiff(e, x, s, N)) {
          auto why = [&](const char* what) { return std::string(what) + ": e=" + show(e) + " s=" + show(s) + " e'=" + show(e2); };
          auto ox2 = occ(x, e2);
          if (ox2.count != ox.count - n) return why("x count");
          if (!subset(ox2.depths, ox.depths)) return why("x depths");
          for (Symbol v : {y, z, w}) {
            auto oe = occ(v, e), oe2 = occ(v, e2), os = occ(v, s);
            if (oe2.count != oe.count + os.count) return why("count additivity");
            std::set<std::uint32_t> hi = oe.depths;
            for (auto d1 : ox.depths)
              for (auto d2 : os.depths) hi.insert(d1 + d2 - 1);
            if (!subset(oe.depths, oe2.depths) || !subset(oe2.depths, hi)) return why("depth inclusions");
          }
          if (e2.size() != e.size() + s.size() - n) return why("size");
          std::uint32_t hmax = std::max(e.height(), ox.max_depth() + s.height() - (n ? 1 : 0));
          if (e.height() > e2.height() || e2.height() > std::max(e.height(), hmax)) return why("height");
        }
        return {};
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("multilinear substitution vanishes iff the degree differs");
    Law book("multilinear substitution size bookkeeping");
    while (law.instances() < target) {
      Term e = g.term(g.between(1, maxs), xyz);
      std::uint32_t k = static_cast<std::uint32_t>(g.below(4));
      Bag s = g.bag_of(k, 3, yz);
      law.run([&] {
        bool empty = lsubst(e, x, s, N).empty();
        return ok_or(empty == (degree(e, x) != k), [&] { return "e=" + show(e) + " s=" + show(s); });
      });
      book.run([&]() -> std::string {
        for (const auto& [e2, c] : lsubst(e, x, s, N)) {
          if (degree(e2, x) != 0 || e2.size() != e.size() + s.size() - k)
            return "e=" + show(e) + " s=" + show(s) + " e'=" + show(e2);
          for (Symbol v : {y, z})
            if (degree(e2, v) != degree(e, v) + degree(s, v))
              return "count: e=" + show(e) + " s=" + show(s);
        }
        return {};
      });
    }
    rep.laws.push_back(law.result());
    rep.laws.push_back(book.result());
  }
  {
    Law law("commutation of multilinear substitutions");
    while (law.instances() < target) {
      Term e = sample_with([&](const Term& e) { return degree(e, x) <= 3; });
      std::uint32_t dx = degree(e, x);
      if (dx > 3) continue;
      Bag t = g.bag_of(dx, 3, yz);
      std::uint32_t dy = degree(e, y) + degree(t, y);
      if (dy > 3) continue;
      Bag u = g.bag_of(dy, 3, yz);
      law.run([&] {
        TermSum l = lsubst(lsubst(e, x, t, Q), y, u);
        TermSum r(Q);
        const auto& ue = u.elems();
        for (std::uint32_t mask = 0; mask < (1u << ue.size()); ++mask) {
          std::vector<Term> in, out;
          for (std::size_t i = 0; i < ue.size(); ++i) ((mask >> i) & 1 ? in : out).push_back(ue[i]);
          TermSum a = lsubst(e, y, Bag(in), Q);
          BagSum b = lsubst(t, y, Bag(out), Q);
          for (const auto& [ea, ca] : a)
            for (const auto& [tb, cb] : b) r.add_scaled(lsubst(ea, x, tb, Q), Q.mul(ca, cb));
        }
        return ok_or(l == r, [&] { return "e=" + show(e) + " t=" + show(t) + " u=" + show(u); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("linearity of derivatives and substitution in the expression");
    while (law.instances() < target) {
      Term e1 = g.term(g.between(1, maxs), xyz), e2 = g.term(g.between(1, maxs), xyz);
      Scalar a = g.scalar(Q), b = g.scalar(Q);
      Bag s = g.bag_of(static_cast<std::uint32_t>(g.below(3)), 3, yz);
      law.run([&] {
        TermSum sum(Q);
        sum.add(e1, a);
        sum.add(e2, b);
        TermSum l1 = lsubst(sum, x, s), l2 = npdiff(sum, x, s);
        TermSum r1(Q), r2(Q);
        r1.add_scaled(lsubst(e1, x, s, Q), a);
        r1.add_scaled(lsubst(e2, x, s, Q), b);
        r2.add_scaled(npdiff(e1, x, s, Q), a);
        r2.add_scaled(npdiff(e2, x, s, Q), b);
        return ok_or(l1 == r1 && l2 == r2, [&] { return "e1=" + show(e1) + " e2=" + show(e2); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("taylor expansion commutes with substitution (sizes <= 8)");
    const std::uint32_t n = std::min<std::uint32_t>(maxs, 8);
    while (law.instances() < target) {
      Alg m = g.algebraic(g.between(1, 5), {x, y}, Q);
      Alg p = g.algebraic(g.between(1, 4), {y, z}, Q);
      law.run([&] {
        TermSum l = taylor_truncated(subst_free(m, x, p), {n}, Q);
        TermSum tm = taylor_truncated(m, {n}, Q), tp = taylor_truncated(p, {n}, Q);
        std::vector<std::pair<Term, Scalar>> cand(tp.begin(), tp.end());
        TermSum r(Q);
        for (const auto& [s, c] : tm) {
          std::uint32_t k = degree(s, x);
          std::uint32_t room = n - (s.size() - k);
          std::vector<Term> pick;
          choose_multisets(Q, cand, 0, k, room, Q.one(), pick, [&](const Bag& ts, const Scalar& wgt) {
            r.add_scaled(lsubst(s, x, ts, Q), Q.mul(c, wgt));
          });
        }
        r = restrict_size(r, n);
        return ok_or(l == r, [&] { return "M=" + show(m) + " N=" + show(p); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("parse and render round trip");
    for (std::uint32_t i = 0; i < target; ++i) {
      Term t = g.term(g.between(1, 12), xyz);
      Bag b = g.bag(g.between(0, 8), xyz);
      TermSum s(Q);
      for (int j = 0, k = 1 + static_cast<int>(g.below(3)); j < k; ++j) s.add(g.term(g.between(1, 6), xyz), g.scalar(Q));
      Alg m = g.algebraic(g.between(1, 12), xyz, Q);
      law.run([&] {
        bool ok = parse_term(render(t)) == t && parse_bag(render(b)) == b &&
                  parse_term_sum(render(s), Q) == s && parse_algebraic(render(m), Q) == m;
        return ok_or(ok, [&] { return show(t) + " | " + show(b) + " | " + show(s) + " | " + show(m); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("compare is a total order");
    for (std::uint32_t i = 0; i < target; ++i) {
      Term a = g.term(g.between(1, 4), {x, y}), b = g.term(g.between(1, 4), {x, y}),
           c = g.term(g.between(1, 4), {x, y});
      law.run([&] {
        auto ab = compare(a, b), ba = compare(b, a), bc = compare(b, c), ac = compare(a, c);
        bool ok = (ab == 0) == (a == b) && (ab < 0) == (ba > 0) && (ab == 0) == (ba == 0);
        if (ab <= 0 && bc <= 0) ok = ok && ac <= 0;
        return ok_or(ok, [&] { return show(a) + " ; " + show(b) + " ; " + show(c); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("canonical form is idempotent and independent of rewrite order");
    for (std::uint32_t i = 0; i < target; ++i) {
      Alg m = g.algebraic(g.between(1, 12), xyz, Q);
      law.run([&] {
        Alg c = canonicalize_alg(m);
        bool ok = c.canonical() && canonicalize_alg(c) == c && random_canonical(m, g) == c &&
                  random_canonical(m, g) == c;
        return ok_or(ok, [&] { return show(m); });
      });
    }
    rep.laws.push_back(law.result());
  }
  {
    Law law("metric inequalities");
    for (std::uint32_t i = 0; i < target; ++i) {
      Term t = g.term(g.between(1, 12), xyz);
      law.run([&] {
        bool ok = t.height() <= t.size();
        for (Symbol v : xyz) {
          auto o = occ(v, t);
          ok = ok && o.count <= t.size() && o.max_depth() <= t.height();
        }
        return ok_or(ok, [&] { return show(t); });
      });
    }
    rep.laws.push_back(law.result());
  }
  return rep;
}

// ------------------------------------------------------- reduction bounds

template <class E>
std::uint32_t pow_bound(std::uint32_t base, std::uint32_t e, const E&) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e && r < (1ull << 40); ++i) r *= base;
  return static_cast<std::uint32_t>(std::min<std::uint64_t>(r, 1u << 30));
}

template <class E>
void bounds_instance(const E& e, const Semiring& d, Law& step, Law& left, Law& full, Law& height,
                     Law& fpbs) {
  auto fv = [](const auto& v) { return free_vars(ResExpr(v)); };
  step.run([&]() -> std::string {
    for (const auto& [pos, sigma] : one_step_reducts(e, d))
      for (const auto& [e2, c] : sigma)
        if (!(e2.size() + 2 <= e.size() && e.size() <= 2 * e2.size() + 2) || fv(e2) != fv(e))
          return show(e) + " -> " + show(e2);
    return {};
  });
  left.run([&]() -> std::string {
    for (const auto& [e2, c] : left_reduct(e, d))
      if (e.size() > 4 * e2.size()) return show(e) + " -> " + show(e2);
    return {};
  });
  full.run([&]() -> std::string {
    std::uint64_t k = pow_bound(4, e.height(), e);
    for (const auto& [e2, c] : full_reduct(e, d))
      if (e.size() > k * e2.size()) return show(e) + " -> " + show(e2);
    return {};
  });
  if (e.size() <= kDefaultParallelCap) {
    auto par = parallel_reducts(e, kDefaultParallelCap, d);
    height.run([&]() -> std::string {
      std::uint64_t k = pow_bound(2, e.height(), e) * std::uint64_t(e.height());
      for (const auto& eps : par)
        for (const auto& [e2, c] : eps)
          if (e2.height() > k) return show(e) + " => " + show(e2);
      return {};
    });
    fpbs.run([&]() -> std::string {
      if (!(fpbs_reduct(e.height(), e, d) == full_reduct(e, d))) return "at height: " + show(e);
      if (e.size() > 7) return {};
      for (std::uint32_t k = 0; k <= e.height(); ++k)
        if (std::find(par.begin(), par.end(), fpbs_reduct(k, e, d)) == par.end())
          return "not a parallel reduct at depth " + std::to_string(k) + ": " + show(e);
      return {};
    });
  }
}

SuiteReport reduction_bounds_suite(const SuiteConfig& cfg) {
  Generator g(cfg.seed);
  const Semiring N(SemiringKind::Nat);
  const std::vector<Symbol> xyz{Symbol("x"), Symbol("y"), Symbol("z")};
  const std::uint32_t maxs = max_size_or(cfg, 12);
  SuiteReport rep{"reduction-bounds", {}};
  Law step("one-step reduct size law and free variables");
  Law left("left reduct size law");
  Law full("full reduct size law");
  Law height("parallel reduct height growth");
  Law fpbs("depth-bounded full reduct coherence");
  for (std::uint32_t i = 0; i < 500 * cfg.scale; ++i) {
    if (i % 2 == 0) {
      bounds_instance(g.term(g.between(1, maxs), xyz), N, step, left, full, height, fpbs);
    } else {
      bounds_instance(g.bag(g.between(0, maxs), xyz), N, step, left, full, height, fpbs);
    }
  }
  for (Law* l : {&step, &left, &full, &height, &fpbs}) rep.laws.push_back(l->result());

  Law sup("growth bound superadditivity");
  Law ge("growth bound dominates l");
  Law mono("growth bound monotonicity");
  Law rec("growth bound closed forms");
  const unsigned M = 6;
  std::map<std::tuple<unsigned, unsigned, unsigned>, mpz_class> b;
  for (unsigned k = 0; k <= M; ++k)
    for (unsigned l = 0; l <= 2 * M; ++l)
      for (unsigned m = 0; m <= M; ++m) b[{k, l, m}] = growth_bound(k, l, m);
  for (unsigned k = 0; k <= M; ++k)
    for (unsigned m = 0; m <= M; ++m)
      for (unsigned l = 0; l <= M; ++l) {
        ge.run([&] { return ok_or(b[{k, l, m}] >= l, [&] { return std::to_string(k) + "," + std::to_string(l); }); });
        rec.run([&] {
          mpz_class p;
          mpz_ui_pow_ui(p.get_mpz_t(), 4, m);
          bool ok = b[{k, l, m}] == p * b[{k, l, 0}] && b[{k, 0, m}] == 0 && b[{k, 1, m}] == p;
          if (l > 0) ok = ok && b[{k, l, 0}] == b[{k, l - 1, k}] + 1;
          return ok_or(ok, [&] { return std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m); });
        });
        for (unsigned l2 = 0; l2 <= M; ++l2)
          sup.run([&] {
            return ok_or(b[{k, l + l2, m}] >= b[{k, l, m}] + b[{k, l2, m}],
                         [&] { return std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(l2); });
          });
      }
  for (unsigned k = 0; k <= M; ++k)
    for (unsigned l = 0; l <= M; ++l)
      for (unsigned m = 0; m <= M; ++m)
        for (unsigned k2 = k; k2 <= M; ++k2)
          for (unsigned l2 = l; l2 <= M; ++l2)
            for (unsigned m2 = m; m2 <= M; ++m2)
              mono.run([&] {
                return ok_or(b[{k, l, m}] <= b[{k2, l2, m2}], [&] { return std::to_string(k) + "," + std::to_string(l); });
              });
  for (Law* l : {&sup, &ge, &mono, &rec}) rep.laws.push_back(l->result());
  return rep;
}

// ---------------------------------------------------------------- diamond

bool within(const TermSum& part, const Scalar& k, const TermSum& target) {
  for (const auto& [t, c] : part)
    if (target.semiring().mul(k, c) > target.coeff(t)) return false;
  return true;
}

// Searches one parallel step from eps to target, summand by summand.
bool reaches(const TermSum& eps, const TermSum& target, std::size_t& budget) {
  const Semiring& d = target.semiring();
  std::vector<std::pair<Scalar, std::vector<TermSum>>> opts;
  for (const auto& [t, c] : eps) {
    std::vector<TermSum> keep;
    for (auto& p : parallel_reducts(t, 64, d))
      if (within(p, c, target)) keep.push_back(std::move(p));
    if (keep.empty()) return false;
    opts.emplace_back(c, std::move(keep));
  }
  std::function<bool(std::size_t, const TermSum&)> dfs = [&](std::size_t i, const TermSum& acc) {
    if (i == opts.size()) return acc == target;
    for (const auto& p : opts[i].second) {
      if (budget == 0) return false;
      --budget;
      TermSum next = acc;
      next.add_scaled(p, opts[i].first);
      if (!within(next, d.one(), target)) continue;
      if (dfs(i + 1, next)) return true;
    }
    return false;
  };
  return dfs(0, TermSum(d));
}

SuiteReport diamond_suite(const SuiteConfig& cfg) {
  Generator g(cfg.seed);
  const Semiring N(SemiringKind::Nat);
  const std::vector<Symbol> xyz{Symbol("x"), Symbol("y"), Symbol("z")};
  const std::uint32_t maxs = std::min<std::uint32_t>(max_size_or(cfg, 7), kDefaultParallelCap);
  SuiteReport rep{"diamond", {}};
  Law star("the full reduct is a parallel reduct");
  Law diamond("every parallel reduct reaches the full reduct in one parallel step");
  Law nf_law("parallel reducts share the normal form");
  for (std::uint32_t i = 0; i < 100 * cfg.scale; ++i) {
    Term e;
    // prefer at least two redexes
    for (int tries = 0; tries < 400; ++tries) {
      e = g.term(g.between(3, maxs), xyz);
      if (one_step_reducts(e, N).size() >= 2) break;
    }
    auto par = parallel_reducts(e, kDefaultParallelCap, N);
    TermSum target = full_reduct(e, N);
    TermSum nfe = nf(e, N);
    star.run([&] {
      return ok_or(std::find(par.begin(), par.end(), target) != par.end(), [&] { return show(e); });
    });
    for (const auto& eps : par) {
      diamond.run([&] {
        std::size_t budget = 200000;
        return ok_or(reaches(eps, target, budget), [&] { return show(e) + " => " + show(eps); });
      });
      nf_law.run([&] { return ok_or(nf(eps) == nfe, [&] { return show(e) + " => " + show(eps); }); });
    }
  }
  rep.laws.push_back(star.result());
  rep.laws.push_back(diamond.result());
  rep.laws.push_back(nf_law.result());
  return rep;
}

// ---------------------------------------------------------- taylor-uniform

bool has_zero_scale(const Alg& m) {
  switch (m.tag()) {
    case AlgTag::Scale: return m.coef().is_zero() || has_zero_scale(m.body());
    case AlgTag::Abs: return has_zero_scale(m.body());
    case AlgTag::App: return has_zero_scale(m.fn()) || has_zero_scale(m.arg());
    case AlgTag::Sum: return has_zero_scale(m.lhs()) || has_zero_scale(m.rhs());
    default: return false;
  }
}

SuiteReport taylor_uniform_suite(const SuiteConfig& cfg) {
  Generator g(cfg.seed);
  const Semiring Q;
  const Semiring B(SemiringKind::Bool);
  const std::vector<Symbol> xy{Symbol("x"), Symbol("y")};
  const std::uint32_t bound = max_size_or(cfg, 10);
  SuiteReport rep{"taylor-uniform", {}};

  Law uniform("pure terms have coefficient 1/m(s) on their support");
  Law coherent("support of the truncated expansion matches the Taylor support");
  for (std::uint32_t i = 0; i < 200 * cfg.scale; ++i) {
    Alg m = g.pure(g.between(1, 8), xy);
    auto supp = taylor_support(m, {bound});
    uniform.run([&]() -> std::string {
      for (const auto& s : supp) {
        Scalar c = taylor_coeff(m, s, Q);
        if (!(c == Scalar(mpq_class(mpz_class(1), er_multiplicity(s)))))
          return "M=" + show(m) + " s=" + show(s) + " coeff " + str(c);
      }
      return {};
    });
    coherent.run([&]() -> std::string {
      TermSum t = taylor_truncated(m, {bound}, Q);
      std::set<Term, ExprLess> keys;
      for (const auto& [s, c] : t) {
        keys.insert(s);
        if (!(taylor_coeff(m, s, Q) == c)) return "coefficient mismatch at " + show(s);
      }
      return ok_or(keys == supp, [&] { return "M=" + show(m); });
    });
  }
  for (std::uint32_t i = 0; i < 200 * cfg.scale; ++i) {
    Alg m = g.algebraic(g.between(1, 8), xy, Q);
    coherent.run([&]() -> std::string {
      auto supp = taylor_support(m, {8});
      for (const auto& [s, c] : taylor_truncated(m, {8}, Q))
        if (!supp.count(s) || !(taylor_coeff(m, s, Q) == c)) return "M=" + show(m) + " s=" + show(s);
      return {};
    });
  }
  rep.laws.push_back(uniform.result());
  rep.laws.push_back(coherent.result());

  Law bool_law("over booleans the expansion is the support indicator");
  for (std::uint32_t i = 0; i < 200 * cfg.scale; ++i) {
    Alg m = g.algebraic(g.between(1, 8), xy, B);
    if (has_zero_scale(m)) continue;
    bool_law.run([&]() -> std::string {
      auto supp = taylor_support(m, {8});
      TermSum t = taylor_truncated(m, {8}, B);
      if (t.size() != supp.size()) return "M=" + show(m);
      for (const auto& [s, c] : t)
        if (!supp.count(s) || !(c == B.one())) return "M=" + show(m) + " s=" + show(s);
      return {};
    });
  }
  rep.laws.push_back(bool_law.result());

  Law collapse("x 0 + x x and x x share their support");
  Alg lhs = parse_algebraic("x 0 + x x"), rhs = parse_algebraic("x x");
  for (std::uint32_t b = 1; b <= 8; ++b)
    collapse.run([&] {
      bool ok = taylor_support(lhs, {b}) == taylor_support(rhs, {b}) &&
                taylor_truncated(lhs, {b}, B) == taylor_truncated(rhs, {b}, B);
      return ok_or(ok, [&] { return "bound " + std::to_string(b); });
    });
  rep.laws.push_back(collapse.result());

  Law skel("linear skeleton lies in the support and separates corpus terms");
  std::vector<std::pair<std::string, Alg>> pure;
  for (const auto& c : corpus())
    if (c.pure) pure.emplace_back(c.name, parse_algebraic(c.source));
  for (const auto& [name, m] : pure)
    skel.run([&]() -> std::string {
      Term l = linear_skeleton(m);
      if (!taylor_support(m, {l.size()}).count(l)) return name + ": skeleton missing";
      for (const auto& [other, n] : pure)
        if (!(n == m) && taylor_support(n, {l.size()}).count(l)) return name + " vs " + other;
      return {};
    });
  rep.laws.push_back(skel.result());
  return rep;
}

// ------------------------------------------------------------- commutation

std::uint32_t alg_height(const Alg& m) {
  switch (m.tag()) {
    case AlgTag::Var:
    case AlgTag::Zero: return 1;
    case AlgTag::Abs: return 1 + alg_height(m.body());
    case AlgTag::App: return std::max(alg_height(m.fn()), 1 + alg_height(m.arg()));
    case AlgTag::Scale: return alg_height(m.body());
    case AlgTag::Sum: return std::max(alg_height(m.lhs()), alg_height(m.rhs()));
  }
  return 1;
}

SuiteReport commutation_suite(const SuiteConfig& cfg) {
  const Semiring Q;
  const std::uint32_t bound = max_size_or(cfg, 10);
  SuiteReport rep{"commutation", {}};

  Law comm("normal form of the expansion is the expansion of the normal form");
  for (const auto& c : corpus()) {
    if (!c.normalizable) continue;
    Alg m = parse_algebraic(c.source);
    comm.run([&]() -> std::string {
      auto n = normalize_alg(m, cfg.fuel);
      if (!n.is_definite()) return c.name + ": normalization not definite";
      auto l = nf_taylor_truncated(m, {bound}, cfg.fuel, Q);
      if (!l.is_definite()) return c.name + ": nf-taylor not definite";
      return ok_or(l.value == taylor_truncated(n.value, {bound}, Q), [&] { return c.name; });
    });
  }
  rep.laws.push_back(comm.result());

  Law omega("omega has an empty normalized expansion and is unsolvable");
  Alg om = corpus_term("omega");
  for (std::uint32_t b = 1; b <= 12; ++b)
    omega.run([&] {
      auto v = nf_taylor_truncated(om, {b}, cfg.fuel, Q);
      return ok_or(v.is_definite() && v.value.empty() && weak_solvable(om, cfg.fuel).is_no(),
                   [&] { return "bound " + std::to_string(b); });
    });
  rep.laws.push_back(omega.result());

  Law conf("left and full reduct iterations agree on pure terms");
  for (const auto& c : corpus()) {
    if (!c.normalizable || !c.pure) continue;
    Alg m = parse_algebraic(c.source);
    conf.run([&]() -> std::string {
      Alg cur = canonicalize_alg(m);
      for (std::uint64_t i = 0; i < cfg.fuel && !cur.beta_normal(); ++i) cur = full_reduct_alg(cur);
      auto n = normalize_alg(m, cfg.fuel);
      return ok_or(n.is_definite() && cur == n.value, [&] { return c.name; });
    });
  }
  rep.laws.push_back(conf.result());

  Law sim("expansion of a reduct has the same normal coefficients",
          "run on terms of height <= 2, where the antecedent bound 4^height * 8 stays enumerable");
  Generator g(cfg.seed);
  std::vector<Alg> cases{corpus_term("I_y"), corpus_term("zero_arg")};
  const std::vector<Symbol> xy{Symbol("x"), Symbol("y")};
  while (cases.size() < 40) {
    Alg m = g.pure(g.between(2, 6), xy);
    if (alg_height(m) <= 2) cases.push_back(m);
  }
  for (const auto& m : cases) {
    Alg cm = canonicalize_alg(m);
    std::uint32_t b = 8;
    for (std::uint32_t i = 0; i < alg_height(m); ++i) b *= 4;
    for (const Alg& m2 : {left_reduct_alg(cm), full_reduct_alg(cm)})
      sim.run([&] {
        TermSum l = restrict_size(normal_restrict(nf(taylor_truncated(cm, {b}, Q))), 8);
        TermSum r = restrict_size(normal_restrict(nf(taylor_truncated(m2, {b}, Q))), 8);
        return ok_or(l == r, [&] { return show(m) + " vs " + show(m2); });
      });
  }
  rep.laws.push_back(sim.result());
  return rep;
}

// ------------------------------------------------------------ approximants

std::set<Term, ExprLess> keys_of(const TermSum& s) {
  std::set<Term, ExprLess> out;
  for (const auto& [t, c] : s) out.insert(t);
  return out;
}

SuiteReport approximants_suite(const SuiteConfig& cfg) {
  const Semiring Q;
  const std::uint32_t bound = max_size_or(cfg, 10);
  Generator g(cfg.seed);
  SuiteReport rep{"approximants", {}};

  Law conv("approximant coefficients match the normalized expansion");
  for (const char* name : {"Y_g", "x_omega"}) {
    Alg m = corpus_term(name);
    for (std::uint32_t d = 1; d <= 3; ++d) {
      auto a = approximant(m, d, cfg.fuel);
      conv.run([&]() -> std::string {
        if (!a.is_definite()) return std::string(name) + ": approximant not definite at " + std::to_string(d);
        TruncationBound tb{bound, d - 1};
        auto direct = nf_taylor_direct(m, tb, cfg.fuel, Q);
        if (!direct.is_definite()) return std::string(name) + ": direct expansion not definite";
        auto cands = keys_of(taylor_truncated(a.value, tb, Q));
        for (const auto& t : keys_of(direct.value)) cands.insert(t);
        for (int i = 0; i < 60; ++i) {
          Term t = g.term(g.between(1, bound), {Symbol("x")});
          if (t.normal() && tb.admits(t)) cands.insert(t);
        }
        for (const auto& t : cands) {
          auto v = nf_taylor_coeff(m, t, cfg.fuel, Q);
          Scalar c = taylor_coeff(a.value, t, Q);
          if (!v.is_definite() || !(v.value == c) || !(direct.value.coeff(t) == c))
            return std::string(name) + " d=" + std::to_string(d) + " t=" + show(t);
        }
        return {};
      });
    }
  }
  rep.laws.push_back(conv.result());

  Law stable("approximants are invariant under left reduction");
  Law mono("shallower approximants agree below their depth");
  for (const auto& c : corpus()) {
    Alg m = canonicalize_alg(parse_algebraic(c.source));
    Alg lm = left_reduct_alg(m);
    std::vector<Verdict<Alg>> as;
    for (std::uint32_t d = 0; d <= 3; ++d) as.push_back(approximant(m, d, cfg.fuel));
    for (std::uint32_t d = 1; d <= 3; ++d) {
      auto b = approximant(lm, d, cfg.fuel);
      if (as[d].is_definite() && b.is_definite())
        stable.run([&] { return ok_or(as[d].value == b.value, [&] { return c.name + " d=" + std::to_string(d); }); });
      for (std::uint32_t d2 = 1; d2 < d; ++d2)
        if (as[d].is_definite() && as[d2].is_definite())
          mono.run([&] {
            TruncationBound tb{8, d2 - 1};
            return ok_or(taylor_truncated(as[d].value, tb, Q) == taylor_truncated(as[d2].value, tb, Q),
                         [&] { return c.name + " d=" + std::to_string(d) + " d'=" + std::to_string(d2); });
          });
    }
  }
  rep.laws.push_back(stable.result());
  rep.laws.push_back(mono.result());

  Law loop("looping sum example: not determinable, yet coefficients are definite");
  Alg ml = corpus_term("M_loop");
  loop.run([&]() -> std::string {
    Alg l2 = left_reduct_alg(left_reduct_alg(canonicalize_alg(ml)));
    Alg expect = canonicalize_alg(parse_algebraic("(\\x. x) + \\x. " + corpus_entry("M_loop").source));
    if (!(l2 == expect)) return "second left reduct is " + show(l2);
    if (!d_determinate(l2, 1, cfg.fuel).is_no()) return "second left reduct is 1-determinate";
    if (!d_determinable(ml, 1, 50).is_unknown()) return "determinability not unknown";
    std::string s = "\\x. x";
    for (int n = 0; n < 7; ++n, s = "\\x. " + s) {
      auto v = nf_taylor_coeff(ml, parse_term(s), cfg.fuel, Q);
      if (!v.is_definite() || !(v.value == Q.one())) return "coefficient at " + s;
    }
    return {};
  });
  loop.run([&]() -> std::string {
    TermSum t = taylor_truncated(ml, {15}, Q);
    TermSum n = nf(t);
    for (const char* s : {"\\x. x", "\\x. \\y. y"})
      if (!(n.coeff(parse_term(s)) == Q.one())) return std::string("brute force coefficient at ") + s;
    return {};
  });
  rep.laws.push_back(loop.result());

  Law beta("d-determinability is preserved by full reduction",
           "an unproved conjecture; disagreements are reported, not failures");
  for (const auto& c : corpus()) {
    Alg m = canonicalize_alg(parse_algebraic(c.source));
    Alg fm = full_reduct_alg(m);
    for (std::uint32_t d = 1; d <= 2; ++d) {
      auto a = d_determinable(m, d, 60), b = d_determinable(fm, d, 60);
      if (a.is_unknown() || b.is_unknown()) continue;
      beta.run([&] {
        return ok_or(a.is_definite() == b.is_definite(), [&] { return c.name + " d=" + std::to_string(d); });
      });
    }
  }
  rep.laws.push_back(beta.result(true));
  return rep;
}

// ---------------------------------------------------------- conservativity

SuiteReport conservativity_suite(const SuiteConfig& cfg) {
  const Semiring Q;
  const std::uint32_t bound = max_size_or(cfg, 10);
  SuiteReport rep{"conservativity", {}};
  struct Row {
    std::string name;
    Verdict<Alg> nf;
    Verdict<TermSum> taylor;
  };
  std::vector<Row> rows;
  for (const auto& c : corpus()) {
    if (!c.pure || !c.normalizable) continue;
    Alg m = parse_algebraic(c.source);
    rows.push_back({c.name, normalize_alg(m, cfg.fuel), nf_taylor_truncated(m, {bound}, cfg.fuel, Q)});
  }
  Law law("truncated normalized expansions agree iff normal forms are alpha-equal");
  std::size_t equal_pairs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      law.run([&]() -> std::string {
        const Row &a = rows[i], &b = rows[j];
        if (!a.nf.is_definite() || !b.nf.is_definite() || !a.taylor.is_definite() || !b.taylor.is_definite())
          return a.name + " / " + b.name + ": not definite";
        bool same_nf = a.nf.value == b.nf.value;
        equal_pairs += same_nf;
        return ok_or(same_nf == (a.taylor.value == b.taylor.value), [&] { return a.name + " / " + b.name; });
      });
  LawResult r = law.result();
  r.note = std::to_string(equal_pairs) + " pairs with equal normal forms";
  rep.laws.push_back(r);
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"calculus",     "reduction-bounds", "diamond",
                                                 "taylor-uniform", "commutation",    "approximants",
                                                 "conservativity", "scalars"};
  return names;
}

SuiteReport verify_suite(std::string_view name, const SuiteConfig& cfg) {
  if (name == "calculus") return calculus_suite(cfg);
  if (name == "reduction-bounds") return reduction_bounds_suite(cfg);
  if (name == "diamond") return diamond_suite(cfg);
  if (name == "taylor-uniform") return taylor_uniform_suite(cfg);
  if (name == "commutation") return commutation_suite(cfg);
  if (name == "approximants") return approximants_suite(cfg);
  if (name == "conservativity") return conservativity_suite(cfg);
  if (name == "scalars") return scalars_suite(cfg);
  throw SuiteUnknown("no suite named '" + std::string(name) + "'");
}

std::string render_report(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
  for (const auto& l : r.laws) {
    const char* tag = l.observation ? "note" : l.pass() ? "pass" : "FAIL";
    os << "  [" << tag << "] " << l.law << " (" << l.instances << " instances";
    if (l.failures) os << ", " << l.failures << " failing";
    os << ")\n";
    if (!l.note.empty()) os << "    " << l.note << "\n";
    if (!l.counterexample.empty()) os << "    counterexample: " << l.counterexample << "\n";
  }
  return os.str();
}

}  // namespace rlw
