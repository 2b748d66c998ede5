#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigeo/design.hpp"
#include "bigeo/numbertheory.hpp"

namespace bigeo {

enum class PatternBranch { square, prime_power, none };

std::string to_string(PatternBranch branch);

struct PatternVerdict {
  bool holds = false;
  PatternBranch branch = PatternBranch::none;
};

// square branch:      n = 1, 2 (mod 4) and n - 1 is a perfect square
// prime-power branch: n = 0, 3 (mod 4) and n - 1 is a prime power
// No upper cap on n is applied here. Throws PreconditionError for n < 2.
PatternVerdict claim1_pattern(std::int64_t n);

// ((n^2 + n + 2)/2, n + 1, 2)
SymmetricParams biplane_params(std::int64_t n);

// ((n^2 + n + 3)/3, n + 1, 3); requires n = 0 or 2 (mod 3).
SymmetricParams triplane_params(std::int64_t n);

struct PatternRow {
  std::int64_t n = 0;
  bool pattern_holds = false;
  PatternBranch branch = PatternBranch::none;
  SymmetricParams biplane;
  BrcVerdict brc;
  bool known_exists = false;  // listed among the known biplanes

  nlohmann::json to_json() const;
};

// One row per n in [2, n_max], ascending.
std::vector<PatternRow> pattern_scan(std::int64_t n_max);

// Fixed-column table: n, pattern, branch, n', k', brc, known.
std::string render_pattern_table(const std::vector<PatternRow>& rows);

}  // namespace bigeo
