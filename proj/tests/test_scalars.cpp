#include <doctest.h>

#include "rlw/errors.hpp"
#include "rlw/generate.hpp"
#include "rlw/scalar.hpp"
#include "rlw/verify.hpp"

using namespace rlw;

namespace {

const Semiring N(SemiringKind::Nat), Z(SemiringKind::Int), Q(SemiringKind::Rat),
    QP(SemiringKind::RatNonneg), B(SemiringKind::Bool);

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }

}  // namespace

TEST_CASE("embedding of naturals") {
  CHECK(nat_embed(N, 3) == q(3));
  CHECK(nat_embed(B, 2) == q(1));
  CHECK(nat_embed(Q, 0) == q(0));
  CHECK(nat_embed(Z, 7) == q(7));
  CHECK(nat_embed(B, 0) == q(0));
}

TEST_CASE("booleans add by disjunction") {
  CHECK(B.add(q(1), q(1)) == q(1));
  CHECK(B.mul(q(1), q(0)) == q(0));
  CHECK_FALSE(B.admits(q(2)));
}

TEST_CASE("inverses of naturals") {
  CHECK(inv_nat(Q, 2) == q(1, 2));
  // 1 * embed(5) = 1 in the booleans
  CHECK(B.mul(inv_nat(B, 5), nat_embed(B, 5)) == B.one());
  CHECK(inv_nat(B, 5) == q(1));
  CHECK_THROWS_AS(inv_nat(N, 2), NoFractions);
  CHECK_THROWS_AS(inv_nat(Z, 2), NoFractions);
  CHECK(inv_nat(QP, 3) == q(1, 3));
  CHECK(Q.inv_factorial(4) == q(1, 24));
}

TEST_CASE("literals follow the semiring") {
  CHECK(Q.parse_literal("3/6") == q(1, 2));
  CHECK_THROWS(N.parse_literal("1/2"));
  CHECK_THROWS(N.parse_literal("-1"));
  CHECK(Z.parse_literal("-4") == q(-4));
  CHECK_THROWS(B.parse_literal("2"));
}

TEST_CASE("two-by-two splitting") {
  auto marg = [](const Semiring& d, const Split2& m, const Scalar& a1, const Scalar& a2, const Scalar& b1,
                 const Scalar& b2) {
    return d.add(m.c[0][0], m.c[0][1]) == a1 && d.add(m.c[1][0], m.c[1][1]) == a2 &&
           d.add(m.c[0][0], m.c[1][0]) == b1 && d.add(m.c[0][1], m.c[1][1]) == b2;
  };
  Split2 m = split2(N, q(1), q(1), q(2), q(0));
  CHECK(marg(N, m, q(1), q(1), q(2), q(0)));
  CHECK(m.c[0][0] == q(1));
  CHECK(m.c[0][1] == q(0));
  CHECK(m.c[1][0] == q(1));
  CHECK(m.c[1][1] == q(0));

  Split2 r = split2(Z, q(3), q(-1), q(1), q(1));
  CHECK(marg(Z, r, q(3), q(-1), q(1), q(1)));
  CHECK(r.c[0][0] == q(1));
  CHECK(r.c[0][1] == q(2));
  CHECK(r.c[1][0] == q(0));
  CHECK(r.c[1][1] == q(-1));

  Split2 z = split2(N, q(0), q(0), q(0), q(0));
  for (auto& row : z.c)
    for (auto& c : row) CHECK(c.is_zero());

  CHECK_THROWS_AS(split2(N, q(1), q(1), q(1), q(0)), MarginalMismatch);
}

TEST_CASE("multi-row splitting") {
  SplitTensor one = split_multi(Q, {{q(5, 2)}});
  CHECK(one.cells.size() == 1);
  CHECK(one.cells[0] == q(5, 2));

  SplitTensor t = split_multi(N, {{q(1), q(1)}, {q(2), q(0)}});
  CHECK(t.at({0, 0}) == q(1));
  CHECK(t.at({1, 0}) == q(1));
  CHECK(t.at({0, 1}) == q(0));
  CHECK(t.at({1, 1}) == q(0));

  SplitTensor s = split_multi(N, {{q(2)}, {q(2)}, {q(2)}});
  CHECK(s.cells.size() == 1);
  CHECK(s.cells[0] == q(2));

  CHECK_THROWS_AS(split_multi(N, {{q(1)}, {q(2)}}), MarginalMismatch);
}

TEST_CASE("scalar properties hold on random samples") {
  SuiteReport r = verify_suite("scalars");
  for (const auto& l : r.laws) {
    INFO(l.law << ": " << l.counterexample);
    CHECK(l.pass());
    CHECK(l.instances > 0);
  }
}
