#include "bigeo/design.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bigeo/errors.hpp"

namespace bigeo {

Design::Design(std::size_t n_points, std::vector<Block> blocks,
               std::vector<std::string> labels)
    : n_points_(n_points), blocks_(std::move(blocks)), labels_(std::move(labels)) {
  if (n_points_ == 0) throw StructuralError("design has no points");
  if (blocks_.empty()) throw StructuralError("design has no blocks");
  if (!labels_.empty()) {
    if (labels_.size() != n_points_) {
      throw StructuralError("design has " + std::to_string(n_points_) +
                            " points but " + std::to_string(labels_.size()) +
                            " labels");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw StructuralError("point labels are not distinct");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    Block& block = blocks_[i];
    if (block.empty()) throw StructuralError("block " + std::to_string(i) + " is empty");
    std::sort(block.begin(), block.end());
    if (block.back() >= n_points_) {
      throw StructuralError("block " + std::to_string(i) + " contains point index " +
                            std::to_string(block.back()) + " outside [0, " +
                            std::to_string(n_points_) + ")");
    }
    auto dup = std::adjacent_find(block.begin(), block.end());
    if (dup != block.end()) {
      throw StructuralError("block " + std::to_string(i) + " repeats point index " +
                            std::to_string(*dup));
    }
  }
}

std::string Design::label(Point p) const {
  if (p < labels_.size()) return labels_[p];
  return "x" + std::to_string(p + 1);
}

std::string DesignParams::to_string() const {
  std::ostringstream out;
  out << '(' << b << ", " << n << ", " << r << ", " << k << ", " << lambda << ')';
  return out.str();
}

std::string SymmetricParams::to_string() const {
  std::ostringstream out;
  out << '(' << n << ", " << k << ", " << lambda << ')';
  return out.str();
}

namespace {

std::string block_text(const Design& design, std::size_t i) {
  std::string text = "{";
  for (Point p : design.block(i)) {
    if (text.size() > 1) text += ", ";
    text += design.label(p);
  }
  return text + "}";
}

}  // namespace

VerificationReport verify_design(const Design& design) {
  const std::size_t n = design.point_count();
  const std::size_t b = design.block_count();
  if (n < 2) throw StructuralError("verification needs at least two points");

  VerificationReport report;
  auto& violations = report.violations;

  const std::size_t k = design.block(0).size();
  for (std::size_t i = 1; i < b; ++i) {
    if (design.block(i).size() != k) {
      violations.push_back("non-uniform block size: block 1 " + block_text(design, 0) +
                           " has " + std::to_string(k) + " points, block " +
                           std::to_string(i + 1) + " " + block_text(design, i) + " has " +
                           std::to_string(design.block(i).size()));
      break;
    }
  }
  if (k < 2) {
    violations.push_back("block size " + std::to_string(k) +
                         " < 2: pair coverage (lambda) is undefined");
  }

  std::vector<std::int64_t> replication(n, 0);
  std::vector<std::int64_t> pairs(n * n, 0);
  for (const Block& block : design.blocks()) {
    for (std::size_t a = 0; a < block.size(); ++a) {
      ++replication[block[a]];
      for (std::size_t c = a + 1; c < block.size(); ++c) ++pairs[block[a] * n + block[c]];
    }
  }

  const std::int64_t r = replication[0];
  for (Point p = 1; p < n; ++p) {
    if (replication[p] != r) {
      violations.push_back("non-uniform replication: point " + design.label(0) + " lies in " +
                           std::to_string(r) + " blocks, point " + design.label(p) +
                           " lies in " + std::to_string(replication[p]));
      break;
    }
  }

  const std::int64_t lambda = pairs[0 * n + 1];
  bool pairs_uniform = true;
  for (Point p = 0; p < n && pairs_uniform; ++p) {
    for (Point q = p + 1; q < n; ++q) {
      if (pairs[p * n + q] != lambda) {
        violations.push_back("non-uniform pair coverage: pair {" + design.label(0) + ", " +
                             design.label(1) + "} lies in " + std::to_string(lambda) +
                             " blocks, pair {" + design.label(p) + ", " + design.label(q) +
                             "} lies in " + std::to_string(pairs[p * n + q]));
        pairs_uniform = false;
        break;
      }
    }
  }

  report.valid = violations.empty();
  if (report.valid) {
    report.params = DesignParams{static_cast<std::int64_t>(b), static_cast<std::int64_t>(n), r,
                                 static_cast<std::int64_t>(k), lambda};
  }
  return report;
}

ConditionCheck check_necessary_conditions(const DesignParams& params) {
  const auto [b, n, r, k, lambda] = params;
  ConditionCheck check;
  if (b * k != n * r) {
    check.findings.push_back("bk = nr fails: " + std::to_string(b * k) +
                             " != " + std::to_string(n * r));
  }
  if (r * (k - 1) != lambda * (n - 1)) {
    check.findings.push_back("r(k-1) = lambda(n-1) fails: " + std::to_string(r * (k - 1)) +
                             " != " + std::to_string(lambda * (n - 1)));
  }
  check.holds = check.findings.empty();
  return check;
}

IntersectionProfile intersection_profile(const Design& design, std::int64_t lambda) {
  if (design.block_count() < 2) {
    throw PreconditionError("intersection profile needs at least two blocks");
  }
  IntersectionProfile profile;
  std::vector<Point> common;
  const auto& blocks = design.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      common.clear();
      std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                            blocks[j].end(), std::back_inserter(common));
      profile.max_intersection = std::max(profile.max_intersection, common.size());
      if (common.empty()) profile.has_disjoint_pair = true;
    }
  }
  profile.mu = std::max(static_cast<std::int64_t>(profile.max_intersection), lambda);
  return profile;
}

Design develop_difference_set(std::span<const std::int64_t> residues, std::int64_t modulus) {
  if (residues.empty()) throw PreconditionError("difference set is empty");
  if (modulus <= 0) throw PreconditionError("modulus must be positive");
  for (std::int64_t d : residues) {
    if (d < 0 || d >= modulus) {
      throw PreconditionError("residue " + std::to_string(d) + " outside [0, " +
                              std::to_string(modulus) + ")");
    }
  }
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(modulus));
  for (std::int64_t t = 0; t < modulus; ++t) {
    Block block;
    block.reserve(residues.size());
    for (std::int64_t d : residues) block.push_back(static_cast<Point>((d + t) % modulus));
    blocks.push_back(std::move(block));
  }
  return Design(static_cast<std::size_t>(modulus), std::move(blocks));
}

Design complement_design(const Design& design) {
  std::vector<Block> blocks;
  blocks.reserve(design.block_count());
  for (const Block& block : design.blocks()) {
    Block rest;
    for (Point p = 0; p < design.point_count(); ++p) {
      if (!std::binary_search(block.begin(), block.end(), p)) rest.push_back(p);
    }
    blocks.push_back(std::move(rest));
  }
  return Design(design.point_count(), std::move(blocks), design.labels());
}

}  // namespace bigeo
