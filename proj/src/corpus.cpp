#include "rlw/corpus.hpp"

#include "rlw/errors.hpp"
#include "rlw/syntax.hpp"

namespace rlw {

#define STEP "((\\y. \\z. z) + (\\y. \\z. \\x. y y z))"
#define OMEGA "((\\x. x x) (\\x. x x))"
#define C1 "(\\f. \\x. f x)"

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"I", "\\x. x", true, true},
      {"K", "\\x. \\y. x", true, true},
      {"S", "\\x. \\y. \\z. x z (y z)", true, true},
      {"c0", "\\f. \\x. x", true, true},
      {"c1", C1, true, true},
      {"c2", "\\f. \\x. f (f x)", true, true},
      {"c3", "\\f. \\x. f (f (f x))", true, true},
      {"omega", OMEGA, false, true},
      {"delta", "\\x. x x", true, true},
      {"delta3", "\\x. x x x", true, true},
      {"omega3", "(\\x. x x x) (\\x. x x x)", false, true},
      {"delta_y", "(\\x. x x) y", true, true},
      {"delta_I", "(\\x. x x) (\\x. x)", true, true},
      {"Y_g", "(\\f. (\\x. f (x x)) (\\x. f (x x))) (\\y. \\z. z y)", false, true},
      {"x_omega", "x " OMEGA, false, true},
      {"K_y_omega", "(\\x. \\y. x) y " OMEGA, true, true},
      {"I_y", "(\\x. x) y", true, true},
      {"I_I", "(\\x. x) (\\x. x)", true, true},
      {"K_ab", "(\\x. \\y. x) a b", true, true},
      {"K_I", "(\\x. \\y. x) (\\z. z)", true, true},
      {"SKK_y", "(\\x. \\y. \\z. x z (y z)) (\\x. \\y. x) (\\x. \\y. x) y", true, true},
      {"succ_c1", "(\\n. \\f. \\x. f (n f x)) " C1, true, true},
      {"plus_c1_c1", "(\\m. \\n. \\f. \\x. m f (n f x)) " C1 " " C1, true, true},
      {"twice_f", "(\\g. \\x. g (g x)) f", true, true},
      {"c2_f_a", "(\\f. \\x. f (f x)) f a", true, true},
      {"y", "y", true, true},
      {"y_y", "y y", true, true},
      {"a", "a", true, true},
      {"f_f_a", "f (f a)", true, true},
      {"weighted", "1/2 * ((\\x. x) y) + 1/3 * ((\\x. \\y. x) a b)", true, false},
      {"scaled_zero", "2 * ((\\x. x) y) + 0", true, false},
      {"dup_sum", "(\\x. x x) (y + z)", true, false},
      {"sum_redex", "((\\x. x) + (\\x. \\y. x)) a", true, false},
      {"zero_arg", "(\\x. x) 0", true, false},
      {"scaled_arg", "(\\x. x x) (1/2 * y)", true, false},
      {"ex_zero_app", "x 0 + x x", true, false},
      {"M_step", STEP, true, false},
      {"M_loop", STEP " " STEP " (\\x. x)", false, false},
      {"inf_y", "(\\x. y + x x) (\\x. y + x x)", false, false},
  };
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw UsageError("no corpus term named '" + std::string(name) + "'");
}

Alg corpus_term(std::string_view name) { return parse_algebraic(corpus_entry(name).source); }

}  // namespace rlw
