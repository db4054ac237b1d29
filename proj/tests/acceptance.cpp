// One PASS/FAIL line per acceptance criterion.
// usage: acceptance <rlw binary> <golden directory>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "rlw/corpus.hpp"
#include "rlw/generate.hpp"
#include "rlw/lambda.hpp"
#include "rlw/reduction.hpp"
#include "rlw/syntax.hpp"
#include "rlw/taylor.hpp"
#include "rlw/verify.hpp"

using namespace rlw;

namespace {

const Semiring Q;

struct Check {
  bool ok = true;
  std::string detail;
};

Check fail(std::string why) { return {false, std::move(why)}; }

const LawResult* find_law(const SuiteReport& r, std::string_view prefix) {
  for (const auto& l : r.laws)
    if (l.law.rfind(prefix, 0) == 0) return &l;
  return nullptr;
}

// Requires each named law to pass with at least `min` instances.
Check laws(const SuiteReport& r, std::initializer_list<std::string_view> names, std::size_t min) {
  std::ostringstream os;
  for (auto n : names) {
    const LawResult* l = find_law(r, n);
    if (!l) return fail("missing law " + std::string(n));
    if (!l->pass()) return fail(l->law + ": " + l->counterexample);
    if (l->instances < min) return fail(l->law + ": only " + std::to_string(l->instances) + " instances");
    os << l->instances << " ";
  }
  return {true, "instances " + os.str()};
}

// ------------------------------------------------------------ criterion 1

Check uniform() {
  Generator g(1);
  std::vector<Symbol> xy{Symbol("x"), Symbol("y")};
  std::size_t checked = 0;
  for (int i = 0; i < 200; ++i) {
    Alg m = g.pure(g.between(1, 8), xy);
    for (const auto& s : taylor_support(m, {10})) {
      Scalar want(mpq_class(mpz_class(1), er_multiplicity(s)));
      if (!(taylor_coeff(m, s) == want)) return fail(render(m) + " at " + render(s));
      ++checked;
    }
  }
  return {true, "200 terms, " + std::to_string(checked) + " support elements"};
}

// ------------------------------------------------------------ criterion 2

Check commutation() {
  std::size_t n = 0, coeffs = 0;
  bool weighted = false;
  for (const auto& c : corpus()) {
    if (!c.normalizable) continue;
    Alg m = parse_algebraic(c.source);
    auto nf = normalize_alg(m);
    auto lhs = nf_taylor_truncated(m, {10});
    if (!nf.is_definite() || !lhs.is_definite()) return fail(c.name + " not definite");
    if (!(lhs.value == taylor_truncated(nf.value, {10}))) return fail(c.name);
    weighted = weighted || c.name == "weighted";
    coeffs += lhs.value.size();
    ++n;
  }
  if (n < 15 || !weighted) return fail("corpus too small");
  return {true, std::to_string(n) + " corpus terms, " + std::to_string(coeffs) + " coefficients"};
}

// ------------------------------------------------------------ criterion 3

Check omega() {
  Alg om = parse_algebraic("(\\x. x x) (\\x. x x)");
  for (std::uint32_t b = 0; b <= 12; ++b) {
    auto v = nf_taylor_truncated(om, {b});
    if (!v.is_definite() || !v.value.empty()) return fail("bound " + std::to_string(b));
  }
  if (!weak_solvable(om).is_no()) return fail("weak_solvable");
  return {true, "bounds 0..12"};
}

// ------------------------------------------------------------ criterion 4

// All normal resource terms of exactly `size`, with `binders` enclosing
// abstractions, free variables from `free`, and monomial depth <= depth.
class NormalTerms {
 public:
  explicit NormalTerms(std::vector<Symbol> free) : free_(std::move(free)) {}

  const std::vector<Term>& terms(std::uint32_t size, std::uint32_t binders, std::uint32_t depth) {
    auto key = std::make_tuple(size, binders, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Term> out;
    if (size >= 2)
      for (const auto& b : terms(size - 1, binders + 1, depth)) out.push_back(Term::abs(Symbol("v"), b));
    std::vector<Term> heads;
    for (std::uint32_t i = 0; i < binders; ++i) heads.push_back(Term::bvar(i));
    for (auto s : free_) heads.push_back(Term::var(s));
    for (const auto& h : heads) spine(h, size - 1, binders, depth, out);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Extends a neutral head by monomials until `left` size is used up.
  void spine(const Term& acc, std::uint32_t left, std::uint32_t binders, std::uint32_t depth,
             std::vector<Term>& out) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    if (depth == 0) return;
    for (std::uint32_t bs = 0; bs + 1 <= left; ++bs)
      for (const auto& b : bags(bs, binders, depth - 1))
        spine(Term::app(acc, b), left - 1 - bs, binders, depth, out);
  }

  // Multisets of normal terms with total size `size`.
  const std::vector<Bag>& bags(std::uint32_t size, std::uint32_t binders, std::uint32_t depth) {
    auto key = std::make_tuple(size, binders, depth);
    if (auto it = bag_memo_.find(key); it != bag_memo_.end()) return it->second;
    std::vector<Term> pool;
    for (std::uint32_t s = 1; s <= size; ++s)
      for (const auto& t : terms(s, binders, depth)) pool.push_back(t);
    std::vector<Bag> out;
    std::vector<Term> pick;
    std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t i, std::uint32_t left) {
      if (left == 0) {
        out.emplace_back(pick);
        return;
      }
      // the pool is sorted by size
      for (std::size_t j = i; j < pool.size() && pool[j].size() <= left; ++j) {
        pick.push_back(pool[j]);
        go(j, left - pool[j].size());
        pick.pop_back();
      }
    };
    go(0, size);
    return bag_memo_.emplace(key, std::move(out)).first->second;
  }

  std::vector<Symbol> free_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<Term>> memo_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<Bag>> bag_memo_;
};

Check approximants() {
  std::size_t exhaustive = 0, probed = 0;
  for (const char* name : {"Y_g", "x_omega"}) {
    Alg m = corpus_term(name);
    auto fvs = free_vars(m);
    std::vector<Symbol> fv(fvs.begin(), fvs.end());
    NormalTerms all(fv);
    for (std::uint32_t d = 1; d <= 3; ++d) {
      auto a = approximant(m, d);
      if (!a.is_definite()) return fail(std::string(name) + ": approximant at " + std::to_string(d));
      TruncationBound tb{10, d - 1};
      auto direct = nf_taylor_direct(m, tb);
      if (!direct.is_definite()) return fail(std::string(name) + ": head-reduction route not definite");
      std::set<Term, ExprLess> probe;
      for (const auto& [t, c] : taylor_truncated(a.value, tb)) probe.insert(t);
      for (const auto& [t, c] : direct.value) probe.insert(t);
      std::size_t hits = 0;
      for (std::uint32_t s = 1; s <= 10; ++s) {
        const auto& ts = all.terms(s, 0, d - 1);
        for (std::size_t i = 0; i < ts.size(); ++i) {
          const Term& t = ts[i];
          Scalar c = taylor_coeff(a.value, t);
          if (!(c == direct.value.coeff(t))) return fail(std::string(name) + " at " + render(t));
          hits += !c.is_zero();
          ++exhaustive;
          if (i % 97 == 0) probe.insert(t);
        }
      }
      // the enumeration must reach the whole support of both sides
      if (hits != direct.value.size() || hits != taylor_truncated(a.value, tb).size())
        return fail(std::string(name) + ": enumeration misses part of the support");
      for (const auto& t : probe) {
        auto v = nf_taylor_coeff(m, t);
        if (!v.is_definite() || !(v.value == taylor_coeff(a.value, t)))
          return fail(std::string(name) + ": nf_taylor_coeff at " + render(t));
        ++probed;
      }
    }
  }
  return {true, std::to_string(exhaustive) + " normal terms enumerated, " + std::to_string(probed) +
                    " through nf_taylor_coeff"};
}

// ------------------------------------------------------------ criterion 10

Check bool_collapse() {
  const Semiring B(SemiringKind::Bool);
  Alg l = parse_algebraic("x 0 + x x", B), r = parse_algebraic("x x", B);
  for (std::uint32_t b = 0; b <= 8; ++b)
    if (taylor_support(l, {b}) != taylor_support(r, {b})) return fail("bound " + std::to_string(b));
  return {true, "bounds 0..8"};
}

// ------------------------------------------------------------ criterion 12

Check loop() {
  Alg ml = corpus_term("M_loop");
  Alg l2 = left_reduct_alg(left_reduct_alg(canonicalize_alg(ml)));
  if (!d_determinate(l2, 1).is_no()) return fail("second left reduct is 1-determinate");
  auto k = d_determinable(ml, 1, 50);
  if (!k.is_unknown() || k.fuel_spent != 50) return fail("determinability not Unknown(50)");
  std::string s = "\\x. x";
  std::size_t n = 0;
  for (; parse_term(s).size() <= 8; s = "\\x. " + s, ++n) {
    auto v = nf_taylor_coeff(ml, parse_term(s));
    if (!v.is_definite() || !(v.value == Q.one())) return fail("coefficient at " + s);
  }
  // s1 has antecedents of size 15, so a bound of 12 would only see s0's
  TermSum brute = nf(taylor_truncated(ml, {15}));
  for (const char* t : {"\\x. x", "\\x. \\x. x"})
    if (!(brute.coeff(parse_term(t)) == Q.one())) return fail(std::string("brute force at ") + t);
  return {true, std::to_string(n) + " skeleton terms; brute force over support at size 15"};
}

// ------------------------------------------------------------ criterion 13

std::string quote(const std::string& a) {
  std::string out = "'";
  for (char c : a) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Check golden(const std::string& rlw, const std::filesystem::path& dir) {
  std::ifstream cases(dir / "cases.tsv");
  if (!cases) return fail("no cases.tsv in " + dir.string());
  auto err_path = std::filesystem::temp_directory_path() / "rlw_golden_stderr.txt";
  std::size_t n = 0;
  std::string line;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string part; std::getline(ss, part, '\t');) f.push_back(part);
    std::string cmd = "env -u RLW_FUEL " + quote(rlw);
    for (std::size_t i = 1; i < f.size(); ++i) cmd += " " + quote(f[i]);
    cmd += " 2>" + quote(err_path.string());
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return fail("cannot run " + rlw);
    std::string out;
    char buf[4096];
    for (std::size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::string err = slurp(err_path);
    if (!err.empty()) out += "[stderr]\n" + err;
    out += "[exit " + std::to_string(code) + "]\n";
    if (out != slurp(dir / (f[0] + ".out"))) return fail(f[0] + " differs");
    ++n;
  }
  std::filesystem::remove(err_path);
  return {true, std::to_string(n) + " commands"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <rlw binary> <golden directory>\n";
    return 1;
  }
  const std::string rlw = argv[1];
  const std::filesystem::path dir = argv[2];

  std::optional<SuiteReport> bounds, calculus, scalars;
  auto suite = [](std::optional<SuiteReport>& r, const char* name) -> const SuiteReport& {
    if (!r) r = verify_suite(name);
    return *r;
  };

  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"uniform coefficients of pure terms", uniform},
      {"normal form commutes with Taylor expansion on the corpus", commutation},
      {"Omega vanishes", omega},
      {"approximants converge for Y g and x Omega", approximants},
      {"size bounds for one-step, left and full reducts",
       [&] {
         return laws(suite(bounds, "reduction-bounds"),
                     {"one-step reduct size law", "left reduct size law", "full reduct size law"}, 500);
       }},
      {"diamond through the full parallel reduct",
       [&] {
         return laws(verify_suite("diamond"),
                     {"the full reduct is a parallel reduct", "every parallel reduct reaches",
                      "parallel reducts share the normal form"},
                     100);
       }},
      {"calculus identities",
       [&] {
         return laws(suite(calculus, "calculus"),
                     {"schwarz symmetry", "commutation of multilinear substitutions",
                      "taylor expansion commutes with substitution"},
                     300);
       }},
      {"growth bound properties",
       [&] {
         return laws(suite(bounds, "reduction-bounds"),
                     {"growth bound superadditivity", "growth bound dominates l", "growth bound monotonicity",
                      "growth bound closed forms"},
                     1);
       }},
      {"additive splitting marginals",
       [&] {
         return laws(suite(scalars, "scalars"),
                     {"additive splitting marginals over nat", "additive splitting marginals over qpos",
                      "additive splitting marginals over int"},
                     1000);
       }},
      {"boolean support collapse", bool_collapse},
      {"conservativity on normalizable pure terms",
       [&] { return laws(verify_suite("conservativity"), {"truncated normalized expansions agree"}, 20); }},
      {"looping example", loop},
      {"CLI golden files", [&] { return golden(rlw, dir); }},
  };

  bool all = true;
  // An optional third argument runs a single criterion.
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (argc > 3 && std::to_string(i + 1) != argv[3]) continue;
    auto t0 = std::chrono::steady_clock::now();
    Check o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::printf("%s %2zu  %-58s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
