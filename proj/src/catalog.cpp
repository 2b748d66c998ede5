#include "bigeo/catalog.hpp"

#include <array>
#include <cstdint>

#include "bigeo/errors.hpp"

namespace bigeo {

namespace {

// Blocks written with the 1-based point names x1..xn.
Design from_one_based(std::size_t n, std::initializer_list<std::initializer_list<Point>> rows) {
  std::vector<Block> blocks;
  for (const auto& row : rows) {
    Block block;
    for (Point p : row) block.push_back(p - 1);
    blocks.push_back(std::move(block));
  }
  return Design(n, std::move(blocks));
}

// (16, 6, 2) biplane: translates of {0, e1, e2, e3, e4, e1+e2+e3+e4} in the
// elementary abelian group of order 16, whose 15 pairwise sums are the 15
// nonzero elements.
Design xor_biplane_16() {
  constexpr std::array<Point, 6> base{0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b1111};
  std::vector<Block> blocks;
  for (Point t = 0; t < 16; ++t) {
    Block block;
    for (Point d : base) block.push_back(d ^ t);
    blocks.push_back(std::move(block));
  }
  return Design(16, std::move(blocks));
}

Design all_subsets_missing_one(std::size_t n) {
  std::vector<Block> blocks;
  for (Point skip = 0; skip < n; ++skip) {
    Block block;
    for (Point p = 0; p < n; ++p) {
      if (p != skip) block.push_back(p);
    }
    blocks.push_back(std::move(block));
  }
  return Design(n, std::move(blocks));
}

CatalogEntry make_entry(std::string name, Design design, DesignParams expected,
                        std::string source) {
  const VerificationReport report = verify_design(design);
  if (!report.valid || *report.params != expected) {
    throw std::logic_error("catalog entry " + name + " does not verify as " +
                           expected.to_string());
  }
  return {std::move(name), std::move(design), expected, std::move(source)};
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> catalog = [] {
    constexpr std::array<std::int64_t, 5> qr11{1, 3, 4, 5, 9};
    constexpr std::array<std::int64_t, 3> fano{0, 1, 3};
    std::vector<CatalogEntry> out;
    out.push_back(make_entry("fig1",
                             from_one_based(6, {{1, 2, 4},
                                                {1, 2, 3},
                                                {3, 4, 5},
                                                {2, 4, 5},
                                                {2, 5, 6},
                                                {1, 5, 6},
                                                {2, 3, 6},
                                                {1, 3, 5},
                                                {1, 4, 6},
                                                {3, 4, 6}}),
                             {10, 6, 5, 3, 2}, "published block list, first figure"));
    out.push_back(make_entry("fig2",
                             from_one_based(7, {{1, 2, 4},
                                                {1, 2, 3},
                                                {3, 4, 6},
                                                {3, 4, 5},
                                                {2, 5, 6},
                                                {3, 6, 7},
                                                {1, 6, 7},
                                                {1, 4, 7},
                                                {2, 3, 7},
                                                {1, 3, 5},
                                                {2, 5, 7},
                                                {2, 4, 6},
                                                {1, 5, 6},
                                                {4, 5, 7}}),
                             {14, 7, 6, 3, 2}, "published block list, second figure"));
    out.push_back(make_entry("fig3",
                             from_one_based(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}),
                             {4, 4, 3, 3, 2}, "published block list, third figure"));
    out.push_back(make_entry("fig4",
                             from_one_based(7, {{1, 2, 3, 4},
                                                {1, 3, 5, 7},
                                                {1, 4, 5, 6},
                                                {1, 2, 6, 7},
                                                {2, 3, 5, 6},
                                                {2, 4, 5, 7},
                                                {3, 4, 6, 7}}),
                             {7, 7, 4, 4, 2}, "published block list, fourth figure"));
    out.push_back(make_entry("fano", develop_difference_set(fano, 7), {7, 7, 3, 3, 1},
                             "difference set {0,1,3} mod 7"));
    out.push_back(make_entry("biplane-11", develop_difference_set(qr11, 11), {11, 11, 5, 5, 2},
                             "difference set {1,3,4,5,9} mod 11"));
    out.push_back(make_entry("biplane-16", xor_biplane_16(), {16, 16, 6, 6, 2},
                             "external construction: difference set in (Z/2)^4"));
    out.push_back(make_entry("triplane-5", all_subsets_missing_one(5), {5, 5, 4, 4, 3},
                             "all 4-subsets of a 5-set"));
    out.push_back(make_entry("triplane-11", complement_design(develop_difference_set(qr11, 11)),
                             {11, 11, 6, 6, 3}, "complement of biplane-11"));
    return out;
  }();
  return catalog;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& entry : entries()) names.push_back(entry.name);
  return names;
}

const CatalogEntry& get_design(std::string_view name) {
  for (const auto& entry : entries()) {
    if (entry.name == name) return entry;
  }
  std::string available;
  for (const auto& entry : entries()) {
    if (!available.empty()) available += ", ";
    available += entry.name;
  }
  throw PreconditionError("unknown catalog design '" + std::string(name) +
                          "'; available: " + available);
}

const std::vector<SymmetricParams>& known_biplanes() {
  static const std::vector<SymmetricParams> list{
      {4, 3, 2}, {7, 4, 2}, {11, 5, 2}, {16, 6, 2}, {37, 9, 2}, {56, 11, 2}, {79, 13, 2},
  };
  return list;
}

const std::vector<SymmetricParams>& known_triplanes() {
  static const std::vector<SymmetricParams> list{
      {5, 4, 3}, {11, 6, 3}, {15, 7, 3}, {25, 9, 3}, {31, 10, 3}, {45, 12, 3}, {71, 15, 3},
  };
  return list;
}

}  // namespace bigeo
