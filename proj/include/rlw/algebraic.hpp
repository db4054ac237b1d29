#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>

#include "rlw/scalar.hpp"
#include "rlw/symbol.hpp"

namespace rlw {

enum class AlgTag : std::uint8_t { Var = 0, Abs, App, Zero, Scale, Sum };

struct AlgNode;

// Algebraic lambda-term: x | \x.M | M N | 0 | a*M | M+N, de Bruijn for bound
// variables as in Term.
class Alg {
 public:
  Alg() = default;

  static Alg var(Var v);
  static Alg var(Symbol name) { return var(Var::free(name)); }
  static Alg bvar(std::uint32_t i) { return var(Var::at(i)); }
  static Alg abs(Symbol hint, Alg body);
  static Alg app(Alg fn, Alg arg);
  static Alg zero();
  static Alg scale(Scalar a, Alg body);
  static Alg sum(Alg lhs, Alg rhs);

  AlgTag tag() const;
  const Var& var() const;
  Symbol hint() const;
  const Alg& body() const;  // Abs and Scale
  const Alg& fn() const;
  const Alg& arg() const;
  const Alg& lhs() const;
  const Alg& rhs() const;
  const Scalar& coef() const;

  std::uint32_t size() const;
  std::uint32_t loose() const;
  std::uint64_t fvmask() const;
  std::size_t hash() const;
  bool pure() const;
  // Simple: x | \x.S | S M with S simple (and every M canonical).
  bool simple() const;
  bool canonical() const;
  bool beta_normal() const;

  const AlgNode* get() const { return n_.get(); }
  explicit operator bool() const { return n_ != nullptr; }

 private:
  explicit Alg(std::shared_ptr<const AlgNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const AlgNode> n_;
};

struct AlgNode {
  AlgTag tag;
  Var v;
  Symbol hint;
  Alg a, b;
  Scalar coef;
  std::uint32_t size = 1, loose = 0;
  std::uint64_t fvmask = 0;
  std::size_t hash = 0;
  bool pure = true, simple = true, canonical = true, beta_normal = true;
};

inline AlgTag Alg::tag() const { return n_->tag; }
inline const Var& Alg::var() const { return n_->v; }
inline Symbol Alg::hint() const { return n_->hint; }
inline const Alg& Alg::body() const { return n_->a; }
inline const Alg& Alg::fn() const { return n_->a; }
inline const Alg& Alg::arg() const { return n_->b; }
inline const Alg& Alg::lhs() const { return n_->a; }
inline const Alg& Alg::rhs() const { return n_->b; }
inline const Scalar& Alg::coef() const { return n_->coef; }
inline std::uint32_t Alg::size() const { return n_->size; }
inline std::uint32_t Alg::loose() const { return n_->loose; }
inline std::uint64_t Alg::fvmask() const { return n_->fvmask; }
inline std::size_t Alg::hash() const { return n_->hash; }
inline bool Alg::pure() const { return n_->pure; }
inline bool Alg::simple() const { return n_->simple; }
inline bool Alg::canonical() const { return n_->canonical; }
inline bool Alg::beta_normal() const { return n_->beta_normal; }

std::strong_ordering compare(const Alg& a, const Alg& b);
inline bool operator==(const Alg& a, const Alg& b) {
  return a.get() == b.get() || (a.hash() == b.hash() && compare(a, b) == 0);
}

Alg shift(const Alg& m, std::uint32_t k, std::uint32_t cutoff = 0);
// Capture-avoiding replacement of the free variable x by n (no canonicalization).
Alg subst_free(const Alg& m, Symbol x, const Alg& n);
// Body of a binder with index 0 replaced by n, outer indices lowered.
Alg subst_top(const Alg& body, const Alg& n);
// Abstraction body over the free variable x (inverse of opening).
Alg close_over(const Alg& m, Symbol x);

std::set<Symbol> free_vars(const Alg& m);

// Constructors that keep canonical inputs canonical by pushing the abstraction
// or the application through 0, scalar actions and sums.
Alg canon_abs(Symbol hint, const Alg& body);
Alg canon_app(const Alg& fn, const Alg& arg);
Alg canonicalize_alg(const Alg& m);

}  // namespace rlw

template <>
struct std::hash<rlw::Alg> {
  std::size_t operator()(const rlw::Alg& m) const { return m.hash(); }
};
