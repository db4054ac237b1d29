#include <doctest.h>

#include "oracles.hpp"
#include "rlw/calculus.hpp"
#include "rlw/generate.hpp"
#include "rlw/syntax.hpp"
#include "rlw/verify.hpp"

using namespace rlw;

namespace {

const Semiring Q;
const Symbol x("x"), y("y"), z("z");

Term T(const char* s) { return parse_term(s); }
TermSum S(const char* s) { return parse_term_sum(s); }

}  // namespace

TEST_CASE("partial derivative") {
  Term u = T("u");
  CHECK(pdiff(T("y"), x, u).empty());
  CHECK(pdiff(T("x[x]"), x, u) == S("u[x] + x[u]"));
  CHECK(pdiff(T("x[x]"), x, u) == oracle::npdiff(T("x[x]"), x, {u}, Q));
  CHECK(pdiff(T("\\y. x"), x, u) == S("\\y. u"));
  // the binder is renamed rather than capturing
  CHECK(pdiff(T("\\y. x"), x, T("y")) == TermSum(Q, Term::abs(y, Term::var(y))));
}

TEST_CASE("iterated derivative") {
  Term e = T("\\z. x[x, z[x]]");
  CHECK(npdiff(e, x, Bag()) == TermSum(Q, e));
  CHECK(npdiff(T("y"), x, Bag({T("u")})).empty());
  TermSum r = npdiff(T("x[x]"), x, Bag({T("u"), T("v")}));
  CHECK(r == S("u[v] + v[u]"));
  CHECK(r == oracle::npdiff(T("x[x]"), x, {T("u"), T("v")}, Q));
  CHECK(npdiff(e, x, Bag({T("u"), T("v")})) == oracle::npdiff(e, x, {T("u"), T("v")}, Q));
}

TEST_CASE("multilinear substitution") {
  CHECK(lsubst(T("x"), x, Bag({T("u")})) == S("u"));
  CHECK(lsubst(T("x[x]"), x, Bag({T("t")})).empty());
  TermSum r = lsubst(T("y[x, x]"), x, Bag({T("t"), T("u")}));
  CHECK(r == S("2 * y[t, u]"));
  CHECK(r == oracle::lsubst(T("y[x, x]"), x, {T("t"), T("u")}, Q));
}

TEST_CASE("substitution of a sum") {
  BagSum r = subst_sum(parse_bag("[x, x]"), x, S("t + u"));
  CHECK(r == std::get<BagSum>(parse_resource("[t, t] + 2 * [t, u] + [u, u]")));
  Term e = T("y[x, \\z. x[z]]");
  CHECK(subst_sum(e, x, TermSum(Q)).empty());
  CHECK(subst_sum(T("y[z]"), x, S("t + u")) == TermSum(Q, T("y[z]")));
  CHECK(subst_sum(e, x, S("t + 2 * u")) == oracle::subst_sum(e, x, S("t + 2 * u")));
}

TEST_CASE("operators agree with positional oracles on random terms") {
  Generator g(3);
  std::vector<Symbol> xyz{x, y, z}, yz{y, z};
  for (int i = 0; i < 300; ++i) {
    Term e = g.term(g.between(1, 9), xyz);
    std::uint32_t n = degree(e, x);
    CHECK(n == oracle::occurrences(e, x));
    Bag s = g.bag_of(std::min<std::uint32_t>(n, 3), 3, yz);
    Bag p = g.bag_of(static_cast<std::uint32_t>(g.below(3)), 3, yz);
    CHECK(lsubst(e, x, s) == oracle::lsubst(e, x, s.elems(), Q));
    CHECK(npdiff(e, x, p) == oracle::npdiff(e, x, p.elems(), Q));
    TermSum sigma(Q);
    sigma.add(g.term(g.between(1, 3), yz), g.scalar(Q));
    sigma.add(g.term(g.between(1, 3), yz), g.scalar(Q));
    if (n <= 4) CHECK(subst_sum(e, x, sigma) == oracle::subst_sum(e, x, sigma));
  }
}

TEST_CASE("redex firing ignores free variables of the same name") {
  // (\x. x[x]) applied to [y, y]
  Term body = T("\\x. x[x]").body();
  CHECK(fire_redex(body, parse_bag("[y, y]"), Q) == S("2 * y[y]"));
  CHECK(fire_redex(body, parse_bag("[y]"), Q).empty());
}

TEST_CASE("calculus identities") {
  SuiteReport r = verify_suite("calculus");
  for (const auto& l : r.laws) {
    INFO(l.law << ": " << l.counterexample);
    CHECK(l.pass());
    CHECK(l.instances >= 300);
  }
}
