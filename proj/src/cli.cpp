#include "rlw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rlw/algebraic.hpp"
#include "rlw/corpus.hpp"
#include "rlw/errors.hpp"
#include "rlw/generate.hpp"
#include "rlw/lambda.hpp"
#include "rlw/reduction.hpp"
#include "rlw/syntax.hpp"
#include "rlw/taylor.hpp"
#include "rlw/verify.hpp"

namespace rlw {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0, kError = 1, kUnknown = 2;

struct Config {
  std::string semiring = "rat";
  std::uint64_t fuel = kDefaultFuel;
  std::uint32_t max_size = 10;
  std::optional<std::uint32_t> max_depth;
  std::uint64_t seed = 1;
  std::string output = "auto";
  std::uint32_t depth = 1;
  std::string strategy = "left";
  std::uint64_t steps = 1;
  std::uint32_t scale = 1;
  bool max_size_given = false;
};

class Printer {
 public:
  Printer(std::ostream& out, bool as_json, const Semiring& d) : out_(out), json_(as_json), d_(d) {}

  bool json_mode() const { return json_; }

  template <class E>
  void vector(const FinSum<E>& v) {
    if (!json_) {
      out_ << render(v) << "\n";
      return;
    }
    json j;
    j["semiring"] = std::string(d_.name());
    j["entries"] = json::array();
    for (const auto& [t, c] : v) j["entries"].push_back({{"term", render(t)}, {"coeff", d_.render(c)}});
    out_ << j.dump() << "\n";
  }

  void text(const std::string& key, const std::string& value) {
    if (json_) {
      out_ << json{{key, value}}.dump() << "\n";
    } else {
      out_ << value << "\n";
    }
  }

  int unknown(std::uint64_t spent) {
    if (json_) {
      out_ << json{{"verdict", "unknown"}, {"fuel_spent", spent}}.dump() << "\n";
    } else {
      out_ << "unknown (fuel exhausted after " << spent << " steps)\n";
    }
    return kUnknown;
  }

  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  bool json_;
  const Semiring& d_;
};

std::vector<std::string> read_inputs(const std::vector<std::string>& args, const std::string& file) {
  std::vector<std::string> out = args;
  if (file.empty()) return out;
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open '" + file + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

TruncationBound bound_of(const Config& c) { return TruncationBound{c.max_size, c.max_depth}; }

int one_input(const std::string& cmd, const std::string& src, const Config& c, const Semiring& d,
              Printer& p) {
  if (cmd == "canon") {
    p.text("term", render(canonicalize_alg(parse_algebraic(src, d))));
    return kOk;
  }
  if (cmd == "expand") {
    p.vector(taylor_truncated(parse_algebraic(src, d), bound_of(c), d));
    return kOk;
  }
  if (cmd == "nf-res") {
    ResourceValue v = parse_resource(src, d);
    if (auto* t = std::get_if<Term>(&v)) p.vector(nf(*t, d));
    if (auto* b = std::get_if<Bag>(&v)) p.vector(nf(BagSum(d, *b)));
    if (auto* s = std::get_if<TermSum>(&v)) p.vector(nf(*s));
    if (auto* s = std::get_if<BagSum>(&v)) p.vector(nf(*s));
    return kOk;
  }
  if (cmd == "nf-taylor") {
    auto v = nf_taylor_truncated(parse_algebraic(src, d), bound_of(c), c.fuel, d);
    if (v.is_unknown()) return p.unknown(v.fuel_spent);
    p.vector(v.value);
    return kOk;
  }
  if (cmd == "approx") {
    auto v = approximant(parse_algebraic(src, d), c.depth, c.fuel);
    if (v.is_unknown()) return p.unknown(v.fuel_spent);
    p.text("term", render(v.value));
    return kOk;
  }
  if (cmd == "solvable") {
    auto v = weak_solvable(parse_algebraic(src, d), c.fuel);
    if (v.is_unknown()) return p.unknown(v.fuel_spent);
    if (p.json_mode()) {
      p.raw() << json{{"verdict", v.is_definite() ? "definite" : "no"}, {"solvable", v.is_definite()}}.dump()
              << "\n";
    } else {
      p.raw() << (v.is_definite() ? "solvable" : "unsolvable") << "\n";
    }
    return kOk;
  }
  if (cmd == "normalize") {
    auto v = normalize_alg(parse_algebraic(src, d), c.fuel);
    if (v.is_unknown()) return p.unknown(v.fuel_spent);
    if (v.is_no()) {
      if (p.json_mode()) {
        p.raw() << json{{"verdict", "no"}}.dump() << "\n";
      } else {
        p.raw() << "no normal form\n";
      }
      return kOk;
    }
    p.text("term", render(v.value));
    return kOk;
  }
  if (cmd == "reduce") {
    Alg m = canonicalize_alg(parse_algebraic(src, d));
    for (std::uint64_t i = 0; i < c.steps; ++i) m = c.strategy == "full" ? full_reduct_alg(m) : left_reduct_alg(m);
    p.text("term", render(m));
    return kOk;
  }
  throw UsageError("unknown command '" + cmd + "'");
}

int coeff_cmd(const std::vector<std::string>& in, const Config& c, const Semiring& d, Printer& p) {
  if (in.size() != 2) throw UsageError("coeff expects a term and a resource term");
  Alg m = parse_algebraic(in[0], d);
  Term t = parse_term(in[1]);
  Scalar k = taylor_coeff(m, t, d);
  (void)c;
  if (p.json_mode()) {
    p.raw() << json{{"semiring", std::string(d.name())}, {"term", render(t)}, {"coeff", d.render(k)}}.dump()
            << "\n";
  } else {
    p.raw() << d.render(k) << "\n";
  }
  return kOk;
}

int verify_cmd(const std::vector<std::string>& in, const Config& c, Printer& p) {
  if (in.empty()) throw UsageError("verify expects a suite name");
  SuiteConfig sc;
  sc.seed = c.seed;
  sc.fuel = c.fuel;
  sc.scale = c.scale;
  if (c.max_size_given) sc.max_size = c.max_size;
  bool ok = true;
  for (const auto& name : in) {
    SuiteReport r = verify_suite(name, sc);
    ok = ok && r.pass();
    if (!p.json_mode()) {
      p.raw() << render_report(r);
      continue;
    }
    json j{{"suite", r.suite}, {"pass", r.pass()}, {"laws", json::array()}};
    for (const auto& l : r.laws) {
      json lj{{"law", l.law}, {"instances", l.instances}, {"failures", l.failures}, {"pass", l.pass()}};
      if (l.observation) lj["observation"] = true;
      if (!l.note.empty()) lj["note"] = l.note;
      if (!l.counterexample.empty()) lj["counterexample"] = l.counterexample;
      j["laws"].push_back(lj);
    }
    p.raw() << j.dump() << "\n";
  }
  return ok ? kOk : kError;
}

int gen_cmd(const std::string& kind, std::uint32_t size, std::uint32_t vars, const Config& c, Printer& p) {
  auto v = gen_random(gen_kind_by_name(kind), size, vars, c.seed);
  p.text("term", std::visit([](const auto& e) { return render(e); }, v));
  return kOk;
}

int corpus_cmd(Printer& p) {
  for (const auto& e : corpus()) {
    if (p.json_mode()) {
      p.raw() << json{{"name", e.name}, {"source", e.source}, {"normalizable", e.normalizable}, {"pure", e.pure}}.dump()
              << "\n";
    } else {
      p.raw() << e.name << "\t" << e.source << "\n";
    }
  }
  return kOk;
}

bool json_default(const std::string& cmd) { return cmd == "expand" || cmd == "nf-res" || cmd == "nf-taylor"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resource lambda-calculus workbench"};
  app.name("rlw");
  app.fallthrough();
  app.require_subcommand(1);

  Config c;
  if (const char* env = std::getenv("RLW_FUEL")) {
    try {
      c.fuel = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: RLW_FUEL is not a number\n";
      return kError;
    }
  }
  std::string file;
  app.add_option("--semiring", c.semiring, "nat, int, rat, qpos or bool")
      ->check(CLI::IsMember({"nat", "int", "rat", "qpos", "bool"}));
  app.add_option("--fuel", c.fuel, "step budget for semi-decisions");
  auto* ms = app.add_option("--max-size", c.max_size, "truncation size bound");
  app.add_option("--max-depth", c.max_depth, "truncation monomial-depth bound");
  app.add_option("--seed", c.seed);
  app.add_option("--output", c.output)->check(CLI::IsMember({"text", "json", "auto"}));
  app.add_option("--depth", c.depth, "approximant depth");
  app.add_option("--strategy", c.strategy)->check(CLI::IsMember({"left", "full"}));
  app.add_option("--steps", c.steps);
  app.add_option("--scale", c.scale, "multiplier for verify instance counts");
  app.add_option("--file", file, "read inputs from a file, one per line");

  std::vector<std::string> inputs;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"canon", "print the canonical form"},
      {"expand", "truncated Taylor expansion"},
      {"coeff", "one Taylor coefficient: TERM RESOURCE-TERM"},
      {"nf-res", "normal form of a resource expression or sum"},
      {"nf-taylor", "normal form of the truncated Taylor expansion"},
      {"approx", "normal approximant at --depth"},
      {"solvable", "weak solvability"},
      {"normalize", "beta normal form"},
      {"reduce", "left or full reduct, --steps times"},
      {"verify", "run verification suites"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->add_option("inputs", inputs);
  std::string kind = "pure";
  std::uint32_t size = 5, vars = 2;
  app.add_subcommand("corpus", "list the bundled terms");
  auto* gen = app.add_subcommand("gen", "random term");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"resource", "algebraic", "pure"}));
  gen->add_option("--size", size);
  gen->add_option("--vars", vars);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }
  c.max_size_given = ms->count() > 0;
  std::string cmd = app.get_subcommands().front()->get_name();

  try {
    Semiring d = Semiring::by_name(c.semiring);
    bool as_json = c.output == "json" || (c.output == "auto" && json_default(cmd));
    Printer p(out, as_json, d);
    if (cmd == "gen") return gen_cmd(kind, size, vars, c, p);
    if (cmd == "corpus") return corpus_cmd(p);
    auto in = read_inputs(inputs, file);
    if (cmd == "verify") return verify_cmd(in, c, p);
    if (cmd == "coeff") return coeff_cmd(in, c, d, p);
    if (in.empty()) throw UsageError(cmd + " expects at least one term");
    int worst = kOk;
    for (const auto& src : in) {
      int r = kError;
      try {
        r = one_input(cmd, src, c, d, p);
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
      }
      if (r == kError || worst == kError) {
        worst = kError;
      } else if (r == kUnknown) {
        worst = kUnknown;
      }
    }
    return worst;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace rlw
