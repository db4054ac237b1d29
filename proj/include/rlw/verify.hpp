#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlw/lambda.hpp"

namespace rlw {

struct LawResult {
  std::string law;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string counterexample;
  // Observations are reported but never fail the suite.
  bool observation = false;
  std::string note;

  bool pass() const { return observation || failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<LawResult> laws;

  bool pass() const {
    for (const auto& l : laws)
      if (!l.pass()) return false;
    return true;
  }
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> max_size;
  std::uint64_t fuel = kDefaultFuel;
  // Multiplies the default instance counts.
  std::uint32_t scale = 1;
};

const std::vector<std::string>& suite_names();

// Throws SuiteUnknown for names outside suite_names().
SuiteReport verify_suite(std::string_view name, const SuiteConfig& cfg = SuiteConfig());

std::string render_report(const SuiteReport& r);

}  // namespace rlw
