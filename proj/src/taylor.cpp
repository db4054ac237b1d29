#include "rlw/taylor.hpp"

#include <map>
#include <tuple>
#include <unordered_map>

#include "rlw/errors.hpp"

namespace rlw {

namespace {

void require_fractions(const Semiring& d) {
  if (!d.has_fractions()) throw NoFractions(std::string(d.name()) + " cannot express 1/n!");
}

struct PairHash {
  std::size_t operator()(const std::pair<const AlgNode*, const TermNode*>& p) const {
    return std::hash<const void*>()(p.first) * 31 + std::hash<const void*>()(p.second);
  }
};

class CoeffEngine {
 public:
  explicit CoeffEngine(const Semiring& d) : d_(d) {}

  Scalar coeff(const Alg& m, const Term& s) {
    auto key = std::make_pair(m.get(), s.get());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Scalar c = compute(m, s);
    memo_.emplace(key, c);
    return c;
  }

 private:
  Scalar compute(const Alg& m, const Term& s) {
    switch (m.tag()) {
      case AlgTag::Var:
        return s.tag() == Tag::Var && s.var() == m.var() ? d_.one() : d_.zero();
      case AlgTag::Abs:
        return s.tag() == Tag::Abs ? coeff(m.body(), s.body()) : d_.zero();
      case AlgTag::App: {
        if (s.tag() != Tag::App) return d_.zero();
        Scalar c = coeff(m.fn(), s.fn());
        if (c.is_zero()) return c;
        return d_.mul(c, promotion(m.arg(), s.arg()));
      }
      case AlgTag::Zero: return d_.zero();
      case AlgTag::Scale: return d_.mul(m.coef(), coeff(m.body(), s));
      case AlgTag::Sum: return d_.add(coeff(m.lhs(), s), coeff(m.rhs(), s));
    }
    return d_.zero();
  }

  Scalar promotion(const Alg& n, const Bag& ts) {
    Scalar out = d_.one();
    const auto& el = ts.elems();
    for (std::size_t i = 0; i < el.size();) {
      std::size_t j = i;
      while (j < el.size() && el[j] == el[i]) ++j;
      Scalar c = coeff(n, el[i]);
      for (std::size_t k = i; k < j; ++k) out = d_.mul(out, c);
      out = d_.mul(out, d_.inv_factorial(static_cast<unsigned>(j - i)));
      if (out.is_zero()) return out;
      i = j;
    }
    return out;
  }

  Semiring d_;
  std::unordered_map<std::pair<const AlgNode*, const TermNode*>, Scalar, PairHash> memo_;
};

// Truncated expansion; with `support` set every scalar action counts as 1 and
// the Boolean semiring is used, which yields the support.
class Expander {
 public:
  Expander(const Semiring& d, bool support) : d_(d), support_(support) {}

  const TermSum& expand(const Alg& m, std::uint32_t n, std::uint32_t depth) {
    auto key = std::make_tuple(m.get(), n, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TermSum out = compute(m, n, depth);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  TermSum compute(const Alg& m, std::uint32_t n, std::uint32_t depth) {
    TermSum out(d_);
    if (n == 0) return out;
    switch (m.tag()) {
      case AlgTag::Var: out.add(Term::var(m.var())); break;
      case AlgTag::Abs:
        for (const auto& [s, c] : expand(m.body(), n - 1, depth)) out.add(Term::abs(m.hint(), s), c);
        break;
      case AlgTag::App: {
        if (n < 2 || depth == 0) break;
        const TermSum fs = expand(m.fn(), n - 1, depth);
        for (const auto& [f, c] : fs) {
          std::uint32_t room = n - 1 - f.size();
          const TermSum& args = expand(m.arg(), room, depth - 1);
          std::vector<std::pair<Term, Scalar>> cand(args.begin(), args.end());
          std::vector<Term> pick;
          multisets(cand, 0, room, c, pick, f, out);
        }
        break;
      }
      case AlgTag::Zero: break;
      case AlgTag::Scale:
        out.add_scaled(expand(m.body(), n, depth), support_ ? d_.one() : m.coef());
        break;
      case AlgTag::Sum:
        out.add(expand(m.lhs(), n, depth));
        out.add(expand(m.rhs(), n, depth));
        break;
    }
    return out;
  }

  void multisets(const std::vector<std::pair<Term, Scalar>>& cand, std::size_t i, std::uint32_t room,
                 const Scalar& acc, std::vector<Term>& pick, const Term& f, TermSum& out) {
    if (i == cand.size()) {
      out.add(Term::app(f, Bag(pick)), acc);
      return;
    }
    multisets(cand, i + 1, room, acc, pick, f, out);
    const auto& [u, c] = cand[i];
    Scalar k = acc;
    std::size_t base = pick.size();
    for (unsigned m = 1; m * u.size() <= room; ++m) {
      pick.push_back(u);
      k = d_.mul(k, c);
      Scalar w = d_.mul(k, d_.inv_factorial(m));
      if (!w.is_zero()) multisets(cand, i + 1, room - m * u.size(), w, pick, f, out);
    }
    pick.resize(base);
  }

  struct KeyHash {
    std::size_t operator()(const std::tuple<const AlgNode*, std::uint32_t, std::uint32_t>& k) const {
      return std::hash<const void*>()(std::get<0>(k)) ^ (std::get<1>(k) * 0x9e3779b9u) ^
             (std::size_t(std::get<2>(k)) << 20);
    }
  };

  Semiring d_;
  bool support_;
  std::unordered_map<std::tuple<const AlgNode*, std::uint32_t, std::uint32_t>, TermSum, KeyHash> memo_;
};

std::uint32_t depth_of(const TruncationBound& b) {
  return b.max_mono_depth ? *b.max_mono_depth : UINT32_MAX;
}

}  // namespace

Scalar prom_coeff(const TermSum& tau, const Bag& ts) {
  const Semiring& d = tau.semiring();
  require_fractions(d);
  Scalar out = d.one();
  const auto& el = ts.elems();
  for (std::size_t i = 0; i < el.size();) {
    std::size_t j = i;
    while (j < el.size() && el[j] == el[i]) ++j;
    Scalar c = tau.coeff(el[i]);
    for (std::size_t k = i; k < j; ++k) out = d.mul(out, c);
    out = d.mul(out, d.inv_factorial(static_cast<unsigned>(j - i)));
    i = j;
  }
  return out;
}

Scalar taylor_coeff(const Alg& m, const Term& s, const Semiring& d) {
  require_fractions(d);
  return CoeffEngine(d).coeff(m, s);
}

std::set<Term, ExprLess> taylor_support(const Alg& m, const TruncationBound& bound) {
  Expander e(Semiring(SemiringKind::Bool), true);
  std::set<Term, ExprLess> out;
  for (const auto& [s, c] : e.expand(m, bound.max_size, depth_of(bound))) out.insert(s);
  return out;
}

TermSum taylor_truncated(const Alg& m, const TruncationBound& bound, const Semiring& d) {
  require_fractions(d);
  Expander e(d, false);
  return e.expand(m, bound.max_size, depth_of(bound));
}

mpz_class er_multiplicity(const Term& s) {
  switch (s.tag()) {
    case Tag::Var: return 1;
    case Tag::Abs: return er_multiplicity(s.body());
    case Tag::App: {
      mpz_class out = er_multiplicity(s.fn());
      const auto& el = s.arg().elems();
      for (std::size_t i = 0; i < el.size();) {
        std::size_t j = i;
        while (j < el.size() && el[j] == el[i]) ++j;
        mpz_class f, p;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        mpz_pow_ui(p.get_mpz_t(), er_multiplicity(el[i]).get_mpz_t(), j - i);
        out *= f * p;
        i = j;
      }
      return out;
    }
  }
  return 1;
}

Term linear_skeleton(const Alg& m) {
  if (!m.pure()) throw NotPure("linear skeleton needs a pure term");
  switch (m.tag()) {
    case AlgTag::Var: return Term::var(m.var());
    case AlgTag::Abs: return Term::abs(m.hint(), linear_skeleton(m.body()));
    case AlgTag::App: return Term::app(linear_skeleton(m.fn()), Bag({linear_skeleton(m.arg())}));
    default: break;
  }
  throw NotPure("linear skeleton needs a pure term");
}

}  // namespace rlw
