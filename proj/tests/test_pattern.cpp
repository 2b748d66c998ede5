#include <doctest.h>

#include <algorithm>

#include "bigeo/catalog.hpp"
#include "bigeo/errors.hpp"
#include "bigeo/pattern.hpp"

using namespace bigeo;

TEST_CASE("claim1_pattern") {
  CHECK(claim1_pattern(5).holds);
  CHECK(claim1_pattern(5).branch == PatternBranch::square);
  CHECK_FALSE(claim1_pattern(6).holds);
  CHECK(claim1_pattern(6).branch == PatternBranch::none);
  CHECK(claim1_pattern(12).holds);
  CHECK(claim1_pattern(12).branch == PatternBranch::prime_power);
  CHECK(claim1_pattern(2).branch == PatternBranch::square);
  CHECK(claim1_pattern(3).branch == PatternBranch::prime_power);
  CHECK_THROWS_AS(claim1_pattern(1), PreconditionError);
}

TEST_CASE("claim1_pattern branches live in disjoint residue classes") {
  for (std::int64_t n = 2; n <= 2000; ++n) {
    const auto v = claim1_pattern(n);
    if (v.branch == PatternBranch::square) CHECK((n % 4 == 1 || n % 4 == 2));
    if (v.branch == PatternBranch::prime_power) CHECK((n % 4 == 0 || n % 4 == 3));
    CHECK(v.holds == (v.branch != PatternBranch::none));
  }
}

TEST_CASE("biplane and triplane parameter families") {
  CHECK(biplane_params(3) == SymmetricParams{7, 4, 2});
  CHECK(biplane_params(12) == SymmetricParams{79, 13, 2});
  CHECK(triplane_params(14) == SymmetricParams{71, 15, 3});
  CHECK(triplane_params(3) == SymmetricParams{5, 4, 3});
  CHECK_THROWS_AS(triplane_params(4), PreconditionError);
  CHECK_THROWS_AS(biplane_params(1), PreconditionError);

  for (std::int64_t n = 2; n <= 500; ++n) {
    const auto p = biplane_params(n);
    CHECK(2 * p.n == n * n + n + 2);
    // lambda (v - 1) = k (k - 1) for a symmetric design
    CHECK(p.lambda * (p.n - 1) == p.k * (p.k - 1));
  }
}

TEST_CASE("triplane family reproduces the listed triplanes for n = 0, 2 (mod 3)") {
  const auto& tri = known_triplanes();
  for (std::int64_t n : {3, 5, 6, 8, 9, 11, 14}) {
    const auto p = triplane_params(n);
    CAPTURE(n);
    CHECK(std::find(tri.begin(), tri.end(), p) != tri.end());
  }
}

TEST_CASE("pattern_scan up to 12") {
  const auto rows = pattern_scan(12);
  REQUIRE(rows.size() == 11);
  std::vector<std::int64_t> holds;
  for (const auto& row : rows) {
    if (row.pattern_holds) holds.push_back(row.n);
  }
  CHECK(holds == std::vector<std::int64_t>{2, 3, 4, 5, 8, 10, 12});

  const auto& seven = rows[5];
  CHECK(seven.n == 7);
  CHECK_FALSE(seven.pattern_holds);
  CHECK_FALSE(seven.brc.passes);

  const auto& two = rows[0];
  CHECK(two.biplane == SymmetricParams{4, 3, 2});
  CHECK(two.brc.passes);
  CHECK(two.known_exists);

  for (const auto& row : rows) {
    CAPTURE(row.n);
    CHECK(row.pattern_holds == row.known_exists);
    CHECK(row.pattern_holds == row.brc.passes);
  }
}

TEST_CASE("BRC passes in the prime-power subcase with odd point count") {
  for (std::int64_t n = 4; n <= 400; ++n) {
    if (!(n % 4 == 0 || n % 4 == 3) || !is_prime_power(n - 1)) continue;
    CAPTURE(n);
    const auto p = biplane_params(n);
    CHECK(p.n % 2 == 1);
    CHECK(ryser_applies(p.n, p.k, p.lambda));
    CHECK(brc_check(p.n, p.k, p.lambda).passes);
  }
}

TEST_CASE("pattern rows render") {
  const auto rows = pattern_scan(4);
  const std::string table = render_pattern_table(rows);
  CHECK(table.find("prime-power") != std::string::npos);
  const auto doc = rows[2].to_json();
  CHECK(doc["n"] == 4);
  CHECK(doc["n_prime"] == 11);
  CHECK(doc["k_prime"] == 5);
  CHECK(doc["brc"]["passes"] == true);
  CHECK_THROWS_AS(pattern_scan(1), PreconditionError);
}
