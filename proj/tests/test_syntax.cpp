#include <doctest.h>

#include "oracles.hpp"
#include "rlw/errors.hpp"
#include "rlw/generate.hpp"
#include "rlw/syntax.hpp"

using namespace rlw;

namespace {

Term V(const char* n) { return Term::var(Symbol(n)); }

}  // namespace

TEST_CASE("parsing resource expressions") {
  Term t = parse_term("\\x. x[x]");
  REQUIRE(t.tag() == Tag::Abs);
  CHECK(t.hint() == Symbol("x"));
  REQUIRE(t.body().tag() == Tag::App);
  CHECK(t.body().fn() == Term::bvar(0));
  CHECK(t.body().arg() == Bag({Term::bvar(0)}));

  TermSum s = parse_term_sum("y[] + 2 * y[z]");
  CHECK(s.size() == 2);
  CHECK(s.coeff(Term::app(V("y"), Bag())) == Scalar(1));
  CHECK(s.coeff(Term::app(V("y"), Bag({V("z")}))) == Scalar(2));

  CHECK_THROWS_AS(parse_term("\\x. x [y"), SyntaxError);
  CHECK_THROWS_AS(parse_term("\\x."), SyntaxError);
}

TEST_CASE("parsing algebraic terms") {
  Alg m = parse_algebraic("(\\x. x) y");
  REQUIRE(m.tag() == AlgTag::App);
  CHECK(m.fn() == Alg::abs(Symbol("x"), Alg::bvar(0)));
  CHECK(m.arg() == Alg::var(Symbol("y")));

  Alg h = parse_algebraic("1/2 * (x + 0)");
  REQUIRE(h.tag() == AlgTag::Scale);
  CHECK(h.coef() == Scalar(mpq_class(1, 2)));
  CHECK(h.body() == Alg::sum(Alg::var(Symbol("x")), Alg::zero()));

  CHECK_THROWS_AS(parse_algebraic("\\x."), SyntaxError);
  CHECK_THROWS_AS(parse_algebraic("1/2 * x", Semiring(SemiringKind::Nat)), Error);
}

TEST_CASE("rendering") {
  CHECK(render(Term::app(V("x"), Bag({V("y"), V("y")}))) == "x[y, y]");
  TermSum s;
  s.add(V("y"), Scalar(mpq_class(1, 2)));
  CHECK(render(s) == "1/2 * y");
  CHECK(render(Alg::zero()) == "0");
  CHECK(render(TermSum()) == "0");
  // fresh names avoid capture of free variables
  CHECK(render(parse_term("\\y. x[y]")) == "\\y. x[y]");
  Term captured = Term::abs(Symbol("x"), Term::app(V("x"), Bag({Term::bvar(0)})));
  CHECK(render(captured) != "\\x. x[x]");
  CHECK(parse_term(render(captured)) == captured);
}

TEST_CASE("term order") {
  CHECK(compare_terms(V("x"), V("y")) < 0);
  CHECK(compare_terms(V("x"), parse_term("\\x. x")) < 0);
  CHECK(compare_terms(parse_term("\\x. x"), parse_term("x[]")) < 0);
  Term e = parse_term("(\\x. x[y])[z]");
  CHECK(compare_terms(e, e) == 0);
  CHECK(compare_terms(e, parse_term("(\\u. u[y])[z]")) == 0);
}

TEST_CASE("canonical forms push through linear positions") {
  CHECK(canonicalize_alg(parse_algebraic("\\x. (x + y)")) == parse_algebraic("(\\x. x) + \\x. y"));
  CHECK(canonicalize_alg(parse_algebraic("(2 * x) y")) == parse_algebraic("2 * (x y)"));
  CHECK(canonicalize_alg(parse_algebraic("0 y")) == Alg::zero());
  CHECK(canonicalize_alg(parse_algebraic("\\x. 0")) == Alg::zero());
  // the argument position is not linear
  Alg arg = parse_algebraic("x (y + z)");
  CHECK(canonicalize_alg(arg) == arg);
}

TEST_CASE("metrics") {
  Metrics x = metrics(V("x"));
  CHECK(x.size == 1);
  CHECK(x.height == 1);
  CHECK(x.mono_depth == 0);

  Term t = parse_term("(\\x. x)[y]");
  Metrics a = metrics(t);
  CHECK(a.size == oracle::size(t));
  CHECK(a.size == 4);
  CHECK(a.height == oracle::height(t));
  CHECK(a.height == 2);
  CHECK(a.mono_depth == 1);

  Bag b = parse_bag("[y, \\x. x]");
  Metrics c = metrics(b);
  CHECK(c.size == oracle::size(b));
  CHECK(c.size == 3);
  CHECK(c.height == oracle::height(b));
  CHECK(c.height == 2);
  CHECK(c.mono_depth == 1);
  CHECK(metrics(parse_term("x[y[z]]")).mono_depth == 2);

  Generator g(7);
  auto pool = var_pool(3);
  for (int i = 0; i < 200; ++i) {
    Term r = g.term(g.between(1, 14), pool);
    CHECK(r.size() == oracle::size(r));
    CHECK(r.height() == oracle::height(r));
  }
}

TEST_CASE("occurrences") {
  Symbol x("x");
  OccInfo a = occ(x, V("x"));
  CHECK(a.count == 1);
  CHECK(a.depths == std::set<std::uint32_t>{1});
  OccInfo b = occ(x, V("y"));
  CHECK(b.count == 0);
  CHECK(b.depths.empty());
  OccInfo c = occ(x, parse_term("\\y. x[x]"));
  CHECK(c.count == 2);
  CHECK(c.depths == std::set<std::uint32_t>{2, 3});
}

TEST_CASE("free variables") {
  CHECK(free_vars(parse_term("\\x. x")).empty());
  CHECK(free_vars(parse_term("x[y]")) == std::set<Symbol>{Symbol("x"), Symbol("y")});
  CHECK(free_vars(parse_term("\\x. y")) == std::set<Symbol>{Symbol("y")});
}

TEST_CASE("render and parse are inverse on random input") {
  Generator g(11);
  auto pool = var_pool(3);
  const Semiring Z(SemiringKind::Int);
  for (int i = 0; i < 300; ++i) {
    Term t = g.term(g.between(1, 12), pool);
    CHECK(parse_term(render(t)) == t);
    Alg m = g.algebraic(g.between(1, 12), pool, Z);
    CHECK(parse_algebraic(render(m), Z) == m);
  }
}
