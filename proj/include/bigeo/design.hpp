#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bigeo {

using Point = std::size_t;
using Block = std::vector<Point>;

// A finite point set {0, ..., n-1} together with an ordered family of blocks.
//
// Construction normalises every block to ascending order and rejects
// structural defects (empty family, empty block, repeated point, point out
// of range) with StructuralError. Repeated blocks are allowed.
//
// Optional labels give the external name of each point (e.g. "x1"); when
// absent, points print as x1..xn.
class Design {
 public:
  Design(std::size_t n_points, std::vector<Block> blocks,
         std::vector<std::string> labels = {});

  std::size_t point_count() const noexcept { return n_points_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Point p) const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::size_t n_points_;
  std::vector<Block> blocks_;
  std::vector<std::string> labels_;
};

// The 5-tuple (b, n, r, k, lambda).
struct DesignParams {
  std::int64_t b = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;

  bool symmetric() const noexcept { return b == n; }
  std::string to_string() const;

  friend auto operator<=>(const DesignParams&, const DesignParams&) = default;
};

// Parameters (n, k, lambda) of a symmetric design.
struct SymmetricParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;

  DesignParams full() const noexcept { return {n, n, k, k, lambda}; }
  std::string to_string() const;

  friend auto operator<=>(const SymmetricParams&, const SymmetricParams&) = default;
};

struct ConditionCheck {
  bool holds = false;
  std::vector<std::string> findings;  // one entry per failing identity
};

struct VerificationReport {
  bool valid = false;
  std::optional<DesignParams> params;  // present iff valid
  std::vector<std::string> violations;
};

struct IntersectionProfile {
  std::size_t max_intersection = 0;
  bool has_disjoint_pair = false;
  std::int64_t mu = 0;  // max(max_intersection, lambda)
};

// Checks block-size, replication and pair-coverage uniformity over every
// point and every unordered point pair. Throws StructuralError when the
// design has fewer than two points.
VerificationReport verify_design(const Design& design);

// b*k = n*r and r*(k-1) = lambda*(n-1).
ConditionCheck check_necessary_conditions(const DesignParams& params);

// Throws PreconditionError for designs with fewer than two blocks.
IntersectionProfile intersection_profile(const Design& design, std::int64_t lambda);

// Blocks {d + t mod m : d in residues} for t = 0..m-1. The result is not
// verified; pass it through verify_design.
Design develop_difference_set(std::span<const std::int64_t> residues, std::int64_t modulus);

// Replaces every block B by its complement S \ B. Throws StructuralError if
// some block covers every point.
Design complement_design(const Design& design);

}  // namespace bigeo
