#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rlw {

// A scalar is an exact rational; the semiring it belongs to decides which
// values are legal and how add/mul behave (booleans use or/and on {0,1}).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(long v) : v_(v) {}
  explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

enum class SemiringKind { Nat, Int, Rat, RatNonneg, Bool };

class Semiring {
 public:
  Semiring() : Semiring(SemiringKind::Rat) {}
  explicit Semiring(SemiringKind k) : kind_(k) {}

  static Semiring by_name(std::string_view name);
  static std::vector<Semiring> all();

  SemiringKind kind() const { return kind_; }
  std::string_view name() const;

  bool zerosumfree() const { return kind_ != SemiringKind::Int && kind_ != SemiringKind::Rat; }
  bool has_fractions() const {
    return kind_ == SemiringKind::Rat || kind_ == SemiringKind::RatNonneg ||
           kind_ == SemiringKind::Bool;
  }
  bool is_ring() const { return kind_ == SemiringKind::Int || kind_ == SemiringKind::Rat; }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(1); }
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
  // Additive inverse; only for rings.
  Scalar neg(const Scalar& a) const;

  Scalar embed(const mpz_class& n) const;
  Scalar embed(std::uint64_t n) const { return embed(mpz_class(static_cast<unsigned long>(n))); }
  Scalar inv_nat(const mpz_class& n) const;
  Scalar inv_nat(std::uint64_t n) const { return inv_nat(mpz_class(static_cast<unsigned long>(n))); }
  // 1/n! as a scalar.
  Scalar inv_factorial(unsigned n) const;

  bool admits(const Scalar& a) const;
  Scalar parse_literal(std::string_view text) const;
  std::string render(const Scalar& a) const;

  friend bool operator==(const Semiring& a, const Semiring& b) { return a.kind_ == b.kind_; }

 private:
  SemiringKind kind_;
};

Scalar nat_embed(const Semiring& d, std::uint64_t n);
Scalar inv_nat(const Semiring& d, std::uint64_t n);

struct Split2 {
  Scalar c[2][2];
};

Split2 split2(const Semiring& d, const Scalar& a1, const Scalar& a2, const Scalar& b1,
              const Scalar& b2);

// Dense row-major tensor; shape[i] is the length of row i of the input.
struct SplitTensor {
  std::vector<std::size_t> shape;
  std::vector<Scalar> cells;

  const Scalar& at(const std::vector<std::size_t>& index) const;
  std::size_t offset(const std::vector<std::size_t>& index) const;
};

SplitTensor split_multi(const Semiring& d, const std::vector<std::vector<Scalar>>& rows);

// Refines two decompositions a, b of one scalar into a |a| x |b| matrix with
// row sums a and column sums b.
std::vector<std::vector<Scalar>> split_matrix(const Semiring& d, const std::vector<Scalar>& a,
                                              const std::vector<Scalar>& b);

}  // namespace rlw
