#pragma once

#include <gmpxx.h>

#include <unordered_map>
#include <vector>

#include "rlw/resource.hpp"

namespace rlw {

// Child selectors from the root: under an abstraction 0 is the body; under an
// application 0 is the function and i+1 the i-th monomial element; at a
// monomial root i is the i-th element.
struct RedexPosition {
  std::vector<std::uint32_t> path;
  friend bool operator==(const RedexPosition&, const RedexPosition&) = default;
};

std::vector<std::pair<RedexPosition, TermSum>> one_step_reducts(const Term& e,
                                                                const Semiring& s = Semiring());
std::vector<std::pair<RedexPosition, BagSum>> one_step_reducts(const Bag& e,
                                                               const Semiring& s = Semiring());

// Memoizing normalizer; reusable across calls over one semiring.
class Normalizer {
 public:
  explicit Normalizer(Semiring s = Semiring()) : s_(s) {}

  const TermSum& term(const Term& t);
  BagSum bag(const Bag& b);
  TermSum sum(const TermSum& e);
  BagSum sum(const BagSum& e);

 private:
  Semiring s_;
  std::unordered_map<Term, TermSum, ExprHash> memo_;
};

TermSum nf(const TermSum& e);
BagSum nf(const BagSum& e);
TermSum nf(const Term& e, const Semiring& s = Semiring());

TermSum normal_restrict(const TermSum& e);
BagSum normal_restrict(const BagSum& e);

std::vector<Term> reachable_support(const Term& e);
std::vector<Bag> reachable_support(const Bag& e);

TermSum left_reduct(const TermSum& e);
BagSum left_reduct(const BagSum& e);
TermSum left_reduct(const Term& e, const Semiring& s = Semiring());
BagSum left_reduct(const Bag& e, const Semiring& s = Semiring());

TermSum full_reduct(const TermSum& e);
BagSum full_reduct(const BagSum& e);
TermSum full_reduct(const Term& e, const Semiring& s = Semiring());
BagSum full_reduct(const Bag& e, const Semiring& s = Semiring());

TermSum fpbs_reduct(std::uint32_t d, const TermSum& e);
BagSum fpbs_reduct(std::uint32_t d, const BagSum& e);
TermSum fpbs_reduct(std::uint32_t d, const Term& e, const Semiring& s = Semiring());
BagSum fpbs_reduct(std::uint32_t d, const Bag& e, const Semiring& s = Semiring());

inline constexpr std::uint32_t kDefaultParallelCap = 10;

// All eps' with e => eps', deduplicated and sorted.
std::vector<TermSum> parallel_reducts(const Term& e, std::uint32_t cap = kDefaultParallelCap,
                                      const Semiring& s = Semiring());
std::vector<BagSum> parallel_reducts(const Bag& e, std::uint32_t cap = kDefaultParallelCap,
                                     const Semiring& s = Semiring());

mpz_class growth_bound(unsigned k, unsigned l, unsigned m);

}  // namespace rlw
