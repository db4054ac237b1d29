#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "rlw/scalar.hpp"
#include "rlw/symbol.hpp"

namespace rlw {

enum class Tag : std::uint8_t { Var = 0, Abs = 1, App = 2 };

struct TermNode;
struct BagNode;
class Bag;

// Resource term: x | \x.s | s[t1,...,tn]. Immutable and shared.
// Bound variables are de Bruijn indices; the binder keeps its source name as
// a printing hint only.
class Term {
 public:
  Term() = default;

  static Term var(Var v);
  static Term var(Symbol name) { return var(Var::free(name)); }
  static Term bvar(std::uint32_t index) { return var(Var::at(index)); }
  static Term abs(Symbol hint, Term body);
  static Term app(Term fn, Bag arg);

  Tag tag() const;
  const Var& var() const;
  Symbol hint() const;
  const Term& body() const;
  const Term& fn() const;
  const Bag& arg() const;

  std::uint32_t size() const;
  std::uint32_t height() const;
  std::uint32_t mono_depth() const;
  // One more than the largest dangling de Bruijn index, 0 if none.
  std::uint32_t loose() const;
  std::uint64_t fvmask() const;
  bool normal() const;
  std::size_t hash() const;

  const TermNode* get() const { return n_.get(); }
  explicit operator bool() const { return n_ != nullptr; }

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const TermNode> n_;
};

// Resource monomial: a finite multiset of terms kept as a sorted sequence.
class Bag {
 public:
  Bag();
  explicit Bag(std::vector<Term> elems);

  const std::vector<Term>& elems() const;
  std::size_t count() const { return elems().size(); }

  std::uint32_t size() const;
  std::uint32_t height() const;
  std::uint32_t mono_depth() const;
  std::uint32_t loose() const;
  std::uint64_t fvmask() const;
  bool normal() const;
  std::size_t hash() const;

  const BagNode* get() const { return n_.get(); }

 private:
  std::shared_ptr<const BagNode> n_;
};

struct TermNode {
  Tag tag;
  Var v;
  Symbol hint;
  Term body;  // Abs
  Term fn;    // App
  Bag arg;    // App
  std::uint32_t size = 1, height = 1, depth = 0, loose = 0;
  std::uint64_t fvmask = 0;
  bool normal = true;
  std::size_t hash = 0;
};

struct BagNode {
  std::vector<Term> elems;
  std::uint32_t size = 0, height = 0, depth = 1, loose = 0;
  std::uint64_t fvmask = 0;
  bool normal = true;
  std::size_t hash = 0;
};

inline Tag Term::tag() const { return n_->tag; }
inline const Var& Term::var() const { return n_->v; }
inline Symbol Term::hint() const { return n_->hint; }
inline const Term& Term::body() const { return n_->body; }
inline const Term& Term::fn() const { return n_->fn; }
inline const Bag& Term::arg() const { return n_->arg; }
inline std::uint32_t Term::size() const { return n_->size; }
inline std::uint32_t Term::height() const { return n_->height; }
inline std::uint32_t Term::mono_depth() const { return n_->depth; }
inline std::uint32_t Term::loose() const { return n_->loose; }
inline std::uint64_t Term::fvmask() const { return n_->fvmask; }
inline bool Term::normal() const { return n_->normal; }
inline std::size_t Term::hash() const { return n_->hash; }

inline const std::vector<Term>& Bag::elems() const { return n_->elems; }
inline std::uint32_t Bag::size() const { return n_->size; }
inline std::uint32_t Bag::height() const { return n_->height; }
inline std::uint32_t Bag::mono_depth() const { return n_->depth; }
inline std::uint32_t Bag::loose() const { return n_->loose; }
inline std::uint64_t Bag::fvmask() const { return n_->fvmask; }
inline bool Bag::normal() const { return n_->normal; }
inline std::size_t Bag::hash() const { return n_->hash; }

// Total structural order: Var < Abs < App, then components; bound variables
// precede free ones.
std::strong_ordering compare(const Term& a, const Term& b);
std::strong_ordering compare(const Bag& a, const Bag& b);

inline bool operator==(const Term& a, const Term& b) {
  return a.get() == b.get() || (a.hash() == b.hash() && compare(a, b) == 0);
}
inline bool operator==(const Bag& a, const Bag& b) {
  return a.get() == b.get() || (a.hash() == b.hash() && compare(a, b) == 0);
}

struct ExprLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
  bool operator()(const Bag& a, const Bag& b) const { return compare(a, b) < 0; }
};

struct ExprHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
  std::size_t operator()(const Bag& b) const { return b.hash(); }
};

using ResExpr = std::variant<Term, Bag>;

// Finite formal sum of resource expressions of one kind, no zero entries,
// iterated in compare order.
template <class E>
class FinSum {
 public:
  using Map = std::map<E, Scalar, ExprLess>;

  explicit FinSum(Semiring s = Semiring()) : s_(s) {}
  FinSum(Semiring s, const E& e) : s_(s) { add(e, s_.one()); }

  const Semiring& semiring() const { return s_; }

  void add(const E& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = m_.find(e);
    if (it == m_.end()) {
      m_.emplace(e, c);
      return;
    }
    it->second = s_.add(it->second, c);
    if (it->second.is_zero()) m_.erase(it);
  }
  void add(const E& e) { add(e, s_.one()); }
  void add(const FinSum& o) {
    for (const auto& [e, c] : o.m_) add(e, c);
  }
  void add_scaled(const FinSum& o, const Scalar& k) {
    if (k.is_zero()) return;
    for (const auto& [e, c] : o.m_) add(e, s_.mul(k, c));
  }

  Scalar coeff(const E& e) const {
    auto it = m_.find(e);
    return it == m_.end() ? s_.zero() : it->second;
  }
  bool contains(const E& e) const { return m_.count(e) != 0; }
  bool empty() const { return m_.empty(); }
  std::size_t size() const { return m_.size(); }
  auto begin() const { return m_.begin(); }
  auto end() const { return m_.end(); }

  std::vector<E> support() const {
    std::vector<E> out;
    out.reserve(m_.size());
    for (const auto& kv : m_) out.push_back(kv.first);
    return out;
  }

  friend bool operator==(const FinSum& a, const FinSum& b) {
    if (a.m_.size() != b.m_.size()) return false;
    auto i = a.m_.begin();
    for (auto j = b.m_.begin(); j != b.m_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const FinSum& a, const FinSum& b) {
    auto i = a.m_.begin();
    auto j = b.m_.begin();
    for (; i != a.m_.end() && j != b.m_.end(); ++i, ++j) {
      if (auto c = compare(i->first, j->first); c != 0) return c;
      if (auto c = i->second <=> j->second; c != 0) return c;
    }
    if (i != a.m_.end()) return std::strong_ordering::greater;
    if (j != b.m_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

 private:
  Semiring s_;
  Map m_;
};

using TermSum = FinSum<Term>;
using BagSum = FinSum<Bag>;

// Bilinear lifts of the constructors.
TermSum abs_sum(Symbol hint, const TermSum& body);
TermSum app_sum(const TermSum& fn, const BagSum& arg);
BagSum bag_product(const Semiring& s, const std::vector<TermSum>& parts);

// Adds k to every dangling index >= cutoff.
Term shift(const Term& t, std::uint32_t k, std::uint32_t cutoff = 0);
Bag shift(const Bag& b, std::uint32_t k, std::uint32_t cutoff = 0);
TermSum shift(const TermSum& s, std::uint32_t k);

// Turns the free variable x into the de Bruijn index of a new outermost
// binder at depth 0 (inverse of opening).
Term close_over(const Term& t, Symbol x, std::uint32_t depth = 0);

}  // namespace rlw

template <>
struct std::hash<rlw::Term> {
  std::size_t operator()(const rlw::Term& t) const { return t.hash(); }
};
template <>
struct std::hash<rlw::Bag> {
  std::size_t operator()(const rlw::Bag& b) const { return b.hash(); }
};
