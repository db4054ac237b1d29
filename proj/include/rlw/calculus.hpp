#pragma once

#include "rlw/resource.hpp"

namespace rlw {

// Partial derivative: every way of replacing one occurrence of x by u.
TermSum pdiff(const Term& e, Symbol x, const Term& u, const Semiring& s = Semiring());
BagSum pdiff(const Bag& e, Symbol x, const Term& u, const Semiring& s = Semiring());

// Iterated derivative by the monomial us: injections of its elements into
// occurrences of x. Occurrences of x inside us are never targeted.
TermSum npdiff(const Term& e, Symbol x, const Bag& us, const Semiring& s = Semiring());
BagSum npdiff(const Bag& e, Symbol x, const Bag& us, const Semiring& s = Semiring());

// Multilinear substitution: bijections between us and the occurrences of x.
TermSum lsubst(const Term& e, Symbol x, const Bag& us, const Semiring& s = Semiring());
BagSum lsubst(const Bag& e, Symbol x, const Bag& us, const Semiring& s = Semiring());

// Substitution of a sum for every occurrence of x.
TermSum subst_sum(const Term& e, Symbol x, const TermSum& sigma);
BagSum subst_sum(const Bag& e, Symbol x, const TermSum& sigma);

// Linear extensions.
TermSum pdiff(const TermSum& e, Symbol x, const Term& u);
TermSum npdiff(const TermSum& e, Symbol x, const Bag& us);
TermSum lsubst(const TermSum& e, Symbol x, const Bag& us);
BagSum lsubst(const BagSum& e, Symbol x, const Bag& us);
TermSum subst_sum(const TermSum& e, Symbol x, const TermSum& sigma);

// Firing the redex (\x.body)[arg]: body has the bound variable at index 0 and
// arg lives outside the binder.
TermSum fire_redex(const Term& body, const Bag& arg, const Semiring& s);

// Number of occurrences of x, and of the bound index at depth 0.
std::uint32_t degree(const Term& e, Symbol x);
std::uint32_t degree(const Bag& e, Symbol x);
std::uint32_t bound_degree(const Term& e, std::uint32_t index);

}  // namespace rlw
