#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>

#include "rlw/algebraic.hpp"
#include "rlw/resource.hpp"

namespace rlw {

struct TruncationBound {
  std::uint32_t max_size = 10;
  std::optional<std::uint32_t> max_mono_depth;

  bool admits(const Term& t) const {
    return t.size() <= max_size && (!max_mono_depth || t.mono_depth() <= *max_mono_depth);
  }
};

// Coefficient of the monomial ts in the promotion of tau.
Scalar prom_coeff(const TermSum& tau, const Bag& ts);

Scalar taylor_coeff(const Alg& m, const Term& s, const Semiring& d = Semiring());

std::set<Term, ExprLess> taylor_support(const Alg& m, const TruncationBound& bound);

TermSum taylor_truncated(const Alg& m, const TruncationBound& bound, const Semiring& d = Semiring());

// The integer m(s) with T(M)_s = 1/m(s) for pure M.
mpz_class er_multiplicity(const Term& s);

Term linear_skeleton(const Alg& m);

}  // namespace rlw
