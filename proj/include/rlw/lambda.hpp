#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rlw/algebraic.hpp"
#include "rlw/resource.hpp"
#include "rlw/taylor.hpp"

namespace rlw {

enum class Outcome { Definite, No, Unknown };

// Answer of a semi-decision procedure. Unknown only on fuel exhaustion.
template <class T = std::monostate>
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  T value{};
  std::uint64_t fuel_spent = 0;

  static Verdict definite(T v) { return Verdict{Outcome::Definite, std::move(v), 0}; }
  static Verdict no() { return Verdict{Outcome::No, T{}, 0}; }
  static Verdict unknown(std::uint64_t spent) { return Verdict{Outcome::Unknown, T{}, spent}; }

  bool is_definite() const { return outcome == Outcome::Definite; }
  bool is_no() const { return outcome == Outcome::No; }
  bool is_unknown() const { return outcome == Outcome::Unknown; }
};

using Judgement = Verdict<>;

inline constexpr std::uint64_t kDefaultFuel = 500;

// \xs. y N1 ... Nn, with y relative to the binders.
struct HeadNormal {
  std::vector<Symbol> binders;
  Var head;
  std::vector<Alg> args;
};

// \xs. (\y.T) A B1 ... Bn
struct HeadRedex {
  std::vector<Symbol> binders;
  Alg fn;
  Alg arg;
  std::vector<Alg> rest;
};

using HeadShape = std::variant<HeadNormal, HeadRedex>;

Alg beta_subst(const Alg& m, Symbol x, const Alg& n);

// Throws Error("NotSimple") when the spine head is 0, a scalar action or a sum.
HeadShape head_classify(const Alg& s);

// Fires the head redex of a simple term; the result is canonical.
Alg head_reduct(const Alg& s);

Alg left_reduct_alg(const Alg& m);
Alg full_reduct_alg(const Alg& m);

Verdict<Alg> normalize_alg(const Alg& m, std::uint64_t fuel = kDefaultFuel);
Judgement weak_solvable(const Alg& m, std::uint64_t fuel = kDefaultFuel);
Judgement d_determinate(const Alg& m, std::uint32_t d, std::uint64_t fuel = kDefaultFuel);
// The value is the number of left steps to the first d-determinate reduct.
Verdict<std::uint64_t> d_determinable(const Alg& m, std::uint32_t d,
                                      std::uint64_t fuel = kDefaultFuel);
Verdict<Alg> approximant(const Alg& m, std::uint32_t d, std::uint64_t fuel = kDefaultFuel);

Verdict<Scalar> nf_taylor_coeff(const Alg& m, const Term& t, std::uint64_t fuel = kDefaultFuel,
                                const Semiring& s = Semiring());
Verdict<TermSum> nf_taylor_truncated(const Alg& m, const TruncationBound& bound,
                                     std::uint64_t fuel = kDefaultFuel,
                                     const Semiring& s = Semiring());

// Truncated normal form of the Taylor expansion by head reduction, pruning
// unsolvable summands and expanding head normal forms argument-wise.
Verdict<TermSum> nf_taylor_direct(const Alg& m, const TruncationBound& bound,
                                  std::uint64_t fuel = kDefaultFuel,
                                  const Semiring& s = Semiring());

}  // namespace rlw
