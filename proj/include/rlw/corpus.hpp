#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rlw/algebraic.hpp"

namespace rlw {

struct CorpusEntry {
  std::string name;
  std::string source;
  bool normalizable;
  bool pure;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(std::string_view name);
Alg corpus_term(std::string_view name);

}  // namespace rlw
