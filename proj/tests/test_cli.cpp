#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rlw/cli.hpp"
#include "rlw/generate.hpp"
#include "rlw/syntax.hpp"
#include "rlw/taylor.hpp"

using namespace rlw;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("expand prints a json vector") {
  Out r = cli({"expand", "(\\x.x) y", "--max-size", "5"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["semiring"] == "rat");
  REQUIRE(j["entries"].size() == 3);
  CHECK(j["entries"][2]["term"] == "(\\x. x)[y, y]");
  CHECK(j["entries"][2]["coeff"] == "1/2");
}

TEST_CASE("json vectors parse back to the same sum") {
  for (const char* sr : {"rat", "qpos", "bool"}) {
    const Semiring d = Semiring::by_name(sr);
    for (const char* m : {"(\\x. x x) y", "1/2 * (x y) + x (y z)", "(\\f. \\x. f (f x)) f a"}) {
      if (std::string(sr) == "bool" && std::string(m).find('/') != std::string::npos) continue;
      Out r = cli({"expand", m, "--max-size", "7", "--semiring", sr});
      REQUIRE(r.code == 0);
      auto j = nlohmann::json::parse(r.out);
      TermSum back(d);
      for (const auto& e : j["entries"]) back.add(parse_term(e["term"].get<std::string>()), d.parse_literal(e["coeff"].get<std::string>()));
      CHECK(back == taylor_truncated(parse_algebraic(m, d), {7}, d));
    }
  }
}

TEST_CASE("Omega has an empty normalized expansion") {
  Out r = cli({"nf-taylor", "(\\x.x x)(\\x.x x)", "--max-size", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"semiring\":\"rat\",\"entries\":[]}\n");
}

TEST_CASE("approx") {
  Out r = cli({"approx", "x ((\\x.x x)(\\x.x x))", "--depth", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "x 0\n");
}

TEST_CASE("fuel exhaustion exits with 2") {
  const char* loop = "(\\x. x x x) (\\x. x x x)";
  Out r = cli({"solvable", loop, "--fuel", "5"});
  CHECK(r.code == 2);
  CHECK(r.out.find("unknown") != std::string::npos);
  setenv("RLW_FUEL", "5", 1);
  CHECK(cli({"solvable", loop}).code == 2);
  CHECK(cli({"solvable", loop, "--fuel", "0"}).code == 2);
  unsetenv("RLW_FUEL");
}

TEST_CASE("errors exit with 1") {
  CHECK(cli({"verify", "nosuch"}).code == 1);
  CHECK(cli({"verify", "nosuch"}).err.find("SuiteUnknown") != std::string::npos);
  CHECK(cli({"canon", "\\x."}).code == 1);
  CHECK(cli({"expand", "x y", "--semiring", "nat"}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({"canon", "x", "--semiring", "reals"}).code == 1);
}

TEST_CASE("inputs from a file") {
  const char* path = "cli_inputs.txt";
  {
    std::ofstream f(path);
    f << "# comment\n(\\x. x) y\n\n  x ((\\y. y) z)  # trailing\n";
  }
  Out r = cli({"normalize", "--file", path});
  CHECK(r.code == 0);
  CHECK(r.out == "y\nx z\n");
  std::remove(path);
}

TEST_CASE("other commands") {
  CHECK(cli({"canon", "\\x. (x + y)"}).out == "(\\x. x) + \\x. y\n");
  CHECK(cli({"coeff", "y z", "y[z, z]"}).out == "1/2\n");
  CHECK(cli({"nf-res", "(\\x. x[x])[y, z]", "--output", "text"}).out == "y[z] + z[y]\n");
  CHECK(cli({"reduce", "(\\x. x) ((\\y. y) z)", "--strategy", "left"}).out == "(\\y. y) z\n");
  CHECK(cli({"reduce", "(\\x. x) ((\\y. y) z)", "--strategy", "full"}).out == "z\n");
  CHECK(cli({"normalize", "(\\x. x x) (\\x. x x)"}).out == "no normal form\n");
  CHECK(cli({"solvable", "x y"}).out == "solvable\n");
  CHECK(cli({"gen", "--kind", "pure", "--size", "5", "--vars", "2", "--seed", "42"}).out ==
        cli({"gen", "--kind", "pure", "--size", "5", "--vars", "2", "--seed", "42"}).out);
}

TEST_CASE("random generation") {
  auto a = gen_random(GenKind::Pure, 5, 2, 42), b = gen_random(GenKind::Pure, 5, 2, 42);
  CHECK(std::get<Alg>(a) == std::get<Alg>(b));
  CHECK(std::get<Alg>(a).size() == 5);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Term v = std::get<Term>(gen_random(GenKind::Resource, 1, 1, s));
    CHECK(v.tag() == Tag::Var);
    Alg m = std::get<Alg>(gen_random(GenKind::Algebraic, 6, 2, s));
    CHECK(canonicalize_alg(m).canonical());
  }
}
