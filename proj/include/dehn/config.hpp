#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace dehn {

/// Runtime budgets. Environment overrides: DEHN_WORD_BUDGET,
/// DEHN_MAX_DEPTH, DEHN_W_INDEX_CAP, DEHN_EXPLICIT_R_CAP.
struct Config {
  int max_level_depth = 4;               // deepest n in H_n / G_n
  std::uint64_t word_budget = 10'000'000;  // letters a single word may reach
  std::uint64_t w_index_cap = 20'000;    // largest N for which L(N) is computed
  std::uint64_t face_budget = 2'000'000;  // faces an explicit complex may reach
  std::map<std::string, int> explicit_caps = {{"G0", 2}, {"H1", 2}};

  static Config from_env();
};

}  // namespace dehn
