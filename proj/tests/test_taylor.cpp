#include <doctest.h>

#include "oracles.hpp"
#include "rlw/errors.hpp"
#include "rlw/generate.hpp"
#include "rlw/syntax.hpp"
#include "rlw/taylor.hpp"
#include "rlw/verify.hpp"

using namespace rlw;

namespace {

const Semiring Q;
const Semiring B(SemiringKind::Bool);

Term T(const char* s) { return parse_term(s); }
Alg A(const char* s) { return parse_algebraic(s); }
Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }

std::set<Term, ExprLess> terms(std::initializer_list<const char*> l) {
  std::set<Term, ExprLess> out;
  for (auto s : l) out.insert(T(s));
  return out;
}

}  // namespace

TEST_CASE("promotion coefficients") {
  TermSum tau = parse_term_sum("1/3 * u + 5 * v");
  CHECK(prom_coeff(tau, Bag()) == q(1));
  CHECK(prom_coeff(parse_term_sum("u"), parse_bag("[u, u]")) == q(1, 2));
  // multinomial 2!/(1!1!) times 1/2!
  CHECK(prom_coeff(tau, parse_bag("[u, v]")) == q(5, 3));
  CHECK(prom_coeff(tau, parse_bag("[u, u, v]")) == Q.mul(q(1, 18), q(5, 1)));
  CHECK(prom_coeff(tau, parse_bag("[w]")) == q(0));
}

TEST_CASE("Taylor coefficients") {
  CHECK(taylor_coeff(A("y ((\\x. x) z)"), T("y[(\\x. x)[z]]")) == q(1));
  CHECK(taylor_coeff(A("y z"), T("y[z, z]")) == q(1, 2));
  CHECK(taylor_coeff(A("0 * (x y)"), T("x[y]")) == q(0));
  CHECK(taylor_coeff(A("0 * (x y)"), T("x[]")) == q(0));
  CHECK_THROWS_AS(taylor_coeff(A("x y"), T("x[y]"), Semiring(SemiringKind::Nat)), NoFractions);

  Generator g(9);
  std::vector<Symbol> xy{Symbol("x"), Symbol("y")};
  for (int i = 0; i < 100; ++i) {
    Alg m = g.algebraic(g.between(1, 7), xy, Q);
    for (const auto& s : taylor_support(m, {8})) CHECK(taylor_coeff(m, s) == oracle::taylor_coeff(m, s, Q));
  }
}

TEST_CASE("Taylor support") {
  CHECK(taylor_support(A("x"), {5}) == terms({"x"}));
  CHECK(taylor_support(A("x y"), {3}) == terms({"x[]", "x[y]"}));
  Alg m = A("(\\x. x x) y");
  for (std::uint32_t b = 1; b <= 8; ++b) CHECK(taylor_support(Alg::scale(q(0), m), {b}) == taylor_support(m, {b}));
  // the monomial-depth bound; an empty monomial already has depth 1
  CHECK(taylor_support(A("x (y z)"), {10, 1}) == terms({"x[]"}));
  CHECK(taylor_support(A("x (y (z w))"), {10, 2}) == terms({"x[]", "x[y[]]", "x[y[], y[]]", "x[y[], y[], y[]]", "x[y[], y[], y[], y[]]"}));
}

TEST_CASE("truncated expansions") {
  TermSum t = taylor_truncated(A("(\\x. x) y"), {5});
  CHECK(t == parse_term_sum("(\\x. x)[] + (\\x. x)[y] + 1/2 * (\\x. x)[y, y]"));
  for (const auto& [s, c] : t) CHECK(c == oracle::taylor_coeff(A("(\\x. x) y"), s, Q));
  CHECK(taylor_truncated(Alg::zero(), {10}).empty());
  CHECK(taylor_truncated(A("1/2 * x"), {10}) == parse_term_sum("1/2 * x"));
}

TEST_CASE("multiplicities") {
  CHECK(er_multiplicity(T("x")) == 1);
  CHECK(er_multiplicity(T("x[y, y]")) == 2);
  CHECK(taylor_coeff(A("x y"), T("x[y, y]")) == q(1, 2));
  CHECK(er_multiplicity(T("x[y[], y[]]")) == 2);
  CHECK(taylor_coeff(A("x (y z)"), T("x[y[], y[]]")) == q(1, 2));
  CHECK(er_multiplicity(T("x[y[z, z], y[z, z]]")) == 8);
  CHECK(oracle::taylor_coeff(A("x (y z)"), T("x[y[z, z], y[z, z]]"), Q) == q(1, 8));
}

TEST_CASE("linear skeleton") {
  CHECK(linear_skeleton(A("x")) == T("x"));
  CHECK(linear_skeleton(A("(\\x. x) y")) == T("(\\x. x)[y]"));
  CHECK_THROWS_AS(linear_skeleton(A("x + y")), NotPure);
}

TEST_CASE("booleans collapse the scalar structure") {
  Alg l = parse_algebraic("x 0 + x x", B), r = parse_algebraic("x x", B);
  for (std::uint32_t b = 1; b <= 8; ++b) {
    CHECK(taylor_support(l, {b}) == taylor_support(r, {b}));
    CHECK(taylor_truncated(l, {b}, B) == taylor_truncated(r, {b}, B));
  }
  // over the rationals the two differ by the empty application
  CHECK(taylor_truncated(A("x 0 + x x"), {4}) != taylor_truncated(A("x x"), {4}));
}

TEST_CASE("uniformity and coherence suites") {
  SuiteReport r = verify_suite("taylor-uniform");
  for (const auto& l : r.laws) {
    INFO(l.law << ": " << l.counterexample);
    CHECK(l.pass());
    CHECK(l.instances > 0);
  }
}
