#include "bigeo/search.hpp"

#include <numeric>

#include "bigeo/errors.hpp"

namespace bigeo {

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::exhausted_no_design:
      return "exhausted-no-design";
    case SearchStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

namespace {

class Searcher {
 public:
  Searcher(const DesignParams& params, const SearchBudget& budget)
      : n_(static_cast<std::size_t>(params.n)),
        k_(static_cast<std::size_t>(params.k)),
        b_(static_cast<std::size_t>(params.b)),
        r_(params.r),
        lambda_(params.lambda),
        budget_(budget),
        start_(std::chrono::steady_clock::now()),
        replication_(n_, 0),
        coverage_(n_ * n_, 0) {}

  SearchOutcome run() {
    blocks_.reserve(b_);
    Block first(k_);
    std::iota(first.begin(), first.end(), Point{0});
    for (Point p : first) add_point(p);
    blocks_.push_back(first);
    current_.clear();

    SearchOutcome outcome;
    const bool found = place_block();
    outcome.stats = stats_;
    if (found) {
      outcome.status = SearchStatus::found;
      outcome.design = Design(n_, blocks_);
    } else {
      outcome.status = aborted_ ? SearchStatus::budget_exceeded : SearchStatus::exhausted_no_design;
    }
    return outcome;
  }

 private:
  std::int64_t& cover(Point p, Point q) { return coverage_[p * n_ + q]; }

  void add_point(Point e) {
    ++replication_[e];
    for (Point x : current_) {
      ++cover(x, e);
      ++cover(e, x);
    }
    current_.push_back(e);
  }

  void remove_point() {
    const Point e = current_.back();
    current_.pop_back();
    --replication_[e];
    for (Point x : current_) {
      --cover(x, e);
      --cover(e, x);
    }
  }

  bool over_budget() {
    if (stats_.generated >= budget_.max_nodes) return true;
    if ((stats_.generated & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ >= budget_.time_limit) {
      return true;
    }
    return false;
  }

  // Counts `e` as a generated node; returns true if it may extend the block.
  bool admit(Point e) {
    ++stats_.generated;
    if (replication_[e] >= r_) {
      ++stats_.pruned;
      return false;
    }
    for (Point x : current_) {
      if (cover(x, e) >= lambda_) {
        ++stats_.pruned;
        return false;
      }
    }
    ++stats_.explored;
    return true;
  }

  bool place_block() {
    if (blocks_.size() == b_) return true;
    if (over_budget()) {
      aborted_ = true;
      return false;
    }

    Point least = 0;
    while (least < n_ && replication_[least] >= r_) ++least;
    if (least + k_ > n_) return false;
    Point partner = least + 1;
    while (partner < n_ && cover(least, partner) >= lambda_) ++partner;
    if (partner >= n_) return false;

    const Block& previous = blocks_.back();
    if (!admit(least)) return false;
    add_point(least);
    bool found = false;
    if (admit(partner)) {
      add_point(partner);
      const bool tight = least == previous[0] && partner == previous[1];
      found = extend(tight);
      if (!found) remove_point();
    }
    if (!found) remove_point();
    return found;
  }

  // `tight`: the partial block equals the previous block's prefix, so the
  // next point may not fall below the previous block's point at this slot.
  bool extend(bool tight) {
    const std::size_t slot = current_.size();
    if (slot == k_) {
      blocks_.push_back(current_);
      Block saved = std::move(current_);
      current_.clear();
      const bool found = place_block();
      current_ = std::move(saved);
      if (!found) blocks_.pop_back();
      return found;
    }
    const Block& previous = blocks_.back();
    Point lowest = current_.back() + 1;
    if (tight) lowest = std::max(lowest, previous[slot]);
    for (Point e = lowest; e + (k_ - slot) <= n_; ++e) {
      if (aborted_) return false;
      if (over_budget()) {
        aborted_ = true;
        return false;
      }
      if (!admit(e)) continue;
      add_point(e);
      if (extend(tight && e == previous[slot])) return true;
      remove_point();
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t b_;
  std::int64_t r_;
  std::int64_t lambda_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;

  std::vector<std::int64_t> replication_;
  std::vector<std::int64_t> coverage_;
  std::vector<Block> blocks_;
  Block current_;
  SearchStats stats_;
  bool aborted_ = false;
};

}  // namespace

SearchOutcome search_design(const DesignParams& params, const SearchBudget& budget) {
  const ConditionCheck check = check_necessary_conditions(params);
  if (!check.holds) {
    throw PreconditionError("search_design: " + params.to_string() + " " +
                            check.findings.front());
  }
  if (params.n < 2 || params.k < 2 || params.k > params.n || params.b < 1) {
    throw PreconditionError("search_design needs n >= 2, 2 <= k <= n and b >= 1");
  }
  if (budget.max_nodes == 0 || budget.time_limit.count() <= 0) {
    throw PreconditionError("search budget must be positive");
  }

  SearchOutcome outcome = Searcher(params, budget).run();
  if (outcome.design) {
    const VerificationReport report = verify_design(*outcome.design);
    if (!report.valid || *report.params != params) {
      throw std::logic_error("search produced a design that does not verify");
    }
  }
  return outcome;
}

}  // namespace bigeo
