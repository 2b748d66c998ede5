#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "bigeo/design.hpp"

namespace bigeo {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds time_limit{60'000};
};

enum class SearchStatus { found, exhausted_no_design, budget_exceeded };

std::string to_string(SearchStatus status);

// Every candidate point offered to a partial block is generated; it is then
// either pruned or explored. generated == explored + pruned on return.
struct SearchStats {
  std::uint64_t generated = 0;
  std::uint64_t explored = 0;
  std::uint64_t pruned = 0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::budget_exceeded;
  std::optional<Design> design;  // present iff found
  SearchStats stats;
};

// Backtracking search for a (b, n, r, k, lambda)-design.
//
// Blocks are produced in lexicographically nondecreasing order with the
// first block fixed to {0, ..., k-1}. Ordering forces the shape of the next
// block: its least point is the least point still short of r blocks, and
// its second point is the least partner of that point still short of lambda
// joint blocks. Candidates are pruned when a point would exceed r blocks or
// a pair would exceed lambda.
//
// Throws PreconditionError if the necessary conditions fail, if n < 2,
// k < 2, k > n, b < 1, or the budget is not positive.
SearchOutcome search_design(const DesignParams& params, const SearchBudget& budget = {});

}  // namespace bigeo
