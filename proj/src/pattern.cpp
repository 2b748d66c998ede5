#include "bigeo/pattern.hpp"

#include <algorithm>
#include <cstdio>

#include "bigeo/catalog.hpp"
#include "bigeo/errors.hpp"

namespace bigeo {

std::string to_string(PatternBranch branch) {
  switch (branch) {
    case PatternBranch::square:
      return "square";
    case PatternBranch::prime_power:
      return "prime-power";
    case PatternBranch::none:
      return "none";
  }
  return "none";
}

PatternVerdict claim1_pattern(std::int64_t n) {
  if (n < 2) throw PreconditionError("claim1_pattern requires n >= 2");
  const std::int64_t residue = n % 4;
  if ((residue == 1 || residue == 2) && is_perfect_square(n - 1)) {
    return {true, PatternBranch::square};
  }
  if ((residue == 0 || residue == 3) && is_prime_power(n - 1)) {
    return {true, PatternBranch::prime_power};
  }
  return {false, PatternBranch::none};
}

SymmetricParams biplane_params(std::int64_t n) {
  if (n < 2 || n > 3'000'000'000) throw PreconditionError("biplane_params requires 2 <= n <= 3e9");
  // n^2 + n = n(n+1) is even, so the division is exact.
  return {(n * n + n + 2) / 2, n + 1, 2};
}

SymmetricParams triplane_params(std::int64_t n) {
  if (n < 2 || n > 3'000'000'000) {
    throw PreconditionError("triplane_params requires 2 <= n <= 3e9");
  }
  if ((n * n + n + 3) % 3 != 0) {
    throw PreconditionError("triplane_params: 3 does not divide n^2 + n + 3 for n = " +
                            std::to_string(n));
  }
  return {(n * n + n + 3) / 3, n + 1, 3};
}

std::vector<PatternRow> pattern_scan(std::int64_t n_max) {
  if (n_max < 2) throw PreconditionError("pattern_scan requires n_max >= 2");
  const auto& known = known_biplanes();
  std::vector<PatternRow> rows;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    PatternRow row;
    row.n = n;
    const PatternVerdict verdict = claim1_pattern(n);
    row.pattern_holds = verdict.holds;
    row.branch = verdict.branch;
    row.biplane = biplane_params(n);
    row.brc = brc_check(row.biplane.n, row.biplane.k, row.biplane.lambda);
    row.known_exists = std::find(known.begin(), known.end(), row.biplane) != known.end();
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json PatternRow::to_json() const {
  nlohmann::json brc_json{{"passes", brc.passes}, {"summary", brc.summary()}};
  if (brc.witness) brc_json["witness"] = {brc.witness->x, brc.witness->y, brc.witness->z};
  return {{"n", n},
          {"pattern", pattern_holds},
          {"branch", to_string(branch)},
          {"n_prime", biplane.n},
          {"k_prime", biplane.k},
          {"brc", std::move(brc_json)},
          {"known", known_exists}};
}

std::string render_pattern_table(const std::vector<PatternRow>& rows) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "%4s  %-7s  %-11s  %6s  %4s  %-5s  %s\n", "n", "pattern",
                "branch", "n'", "k'", "brc", "known (published list)");
  out += line;
  for (const PatternRow& row : rows) {
    std::snprintf(line, sizeof line, "%4lld  %-7s  %-11s  %6lld  %4lld  %-5s  %s\n",
                  static_cast<long long>(row.n), row.pattern_holds ? "true" : "false",
                  to_string(row.branch).c_str(), static_cast<long long>(row.biplane.n),
                  static_cast<long long>(row.biplane.k), row.brc.passes ? "pass" : "fail",
                  row.known_exists ? "yes" : "no");
    out += line;
  }
  return out;
}

}  // namespace bigeo
