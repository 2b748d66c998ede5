#include <doctest.h>

#include <algorithm>

#include "bigeo/errors.hpp"
#include "bigeo/search.hpp"

using namespace bigeo;

namespace {

void check_found(const DesignParams& params) {
  CAPTURE(params.to_string());
  const SearchOutcome outcome = search_design(params);
  REQUIRE(outcome.status == SearchStatus::found);
  REQUIRE(outcome.design);
  const auto report = verify_design(*outcome.design);
  REQUIRE(report.valid);
  CHECK(*report.params == params);
  CHECK(outcome.stats.generated == outcome.stats.explored + outcome.stats.pruned);

  const Block& first = outcome.design->block(0);
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == i);
  CHECK(std::is_sorted(outcome.design->blocks().begin(), outcome.design->blocks().end()));
}

}  // namespace

TEST_CASE("search finds the complete 3-subset design on 4 points") {
  const SearchOutcome outcome = search_design({4, 4, 3, 3, 2});
  REQUIRE(outcome.status == SearchStatus::found);
  // Unique by counting: four blocks of size 3 on 4 points with each pair
  // twice must be all four 3-subsets.
  CHECK(outcome.design->blocks() ==
        std::vector<Block>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

TEST_CASE("search finds designs for the triple-system families") {
  check_found({10, 6, 5, 3, 2});
  check_found({14, 7, 6, 3, 2});
  check_found({24, 9, 8, 3, 2});
  check_found({10, 5, 6, 3, 3});
  check_found({7, 7, 3, 3, 1});
  check_found({12, 9, 4, 3, 1});
  check_found({11, 11, 5, 5, 2});
}

TEST_CASE("search exhausts arithmetically feasible but impossible parameters") {
  // b < n violates Fisher's inequality; the necessary conditions still hold.
  const SearchOutcome outcome = search_design({8, 16, 3, 6, 1});
  CHECK(outcome.status == SearchStatus::exhausted_no_design);
  CHECK_FALSE(outcome.design);
  CHECK(outcome.stats.generated == outcome.stats.explored + outcome.stats.pruned);
}

TEST_CASE("search reports budget exhaustion instead of nonexistence") {
  SearchBudget tiny;
  tiny.max_nodes = 5;
  const SearchOutcome outcome = search_design({24, 9, 8, 3, 2}, tiny);
  CHECK(outcome.status == SearchStatus::budget_exceeded);
  CHECK_FALSE(outcome.design);
  CHECK(outcome.stats.generated <= tiny.max_nodes);
}

TEST_CASE("search is deterministic") {
  const auto first = search_design({14, 7, 6, 3, 2});
  const auto second = search_design({14, 7, 6, 3, 2});
  REQUIRE(first.design);
  CHECK(*first.design == *second.design);
  CHECK(first.stats.generated == second.stats.generated);
}

TEST_CASE("search preconditions") {
  CHECK_THROWS_AS(search_design({7, 7, 3, 3, 2}), PreconditionError);
  try {
    search_design({7, 7, 3, 3, 2});
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("r(k-1)") != std::string::npos);
  }
  SearchBudget zero;
  zero.max_nodes = 0;
  CHECK_THROWS_AS(search_design({4, 4, 3, 3, 2}, zero), PreconditionError);
  CHECK_THROWS_AS(search_design({1, 1, 1, 1, 0}), PreconditionError);
}
