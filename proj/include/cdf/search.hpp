#pragma once

// Backtracking completion of partial difference families, exhaustive
// small-order search, and the searches that populate the small-order
// database.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cdf/core.hpp"
#include "cdf/small_order_db.hpp"

namespace cdf {

struct SearchLimits {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  std::optional<std::chrono::milliseconds> time_budget;
  std::uint64_t seed = 0;
  bool randomize = false;  // shuffle candidate blocks at every node
};

struct SearchProblem {
  Residue v = 0;
  FamilyKind kind = FamilyKind::CDF;
  std::vector<BaseBlock> fixed;
  std::size_t add = 0;
  // Residues that must stay uncovered. Defaults to the kind's leave; for a
  // CDP without one, any leave is accepted.
  std::optional<std::vector<Residue>> target_leave;
  SearchLimits limits;
};

struct SearchStats {
  std::uint64_t nodes = 0;  // blocks placed
  std::uint64_t max_depth = 0;
  std::uint64_t restarts = 0;
  double wall_ms = 0;

  friend bool operator==(const SearchStats& a, const SearchStats& b) {
    return a.nodes == b.nodes && a.max_depth == b.max_depth && a.restarts == b.restarts;
  }
};

enum class SearchStatus { Found, ExhaustedNonexistent, BudgetExceeded };

std::string_view to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::BudgetExceeded;
  std::optional<DifferenceFamily> family;
  SearchStats stats;
  std::vector<std::string> reductions;  // reductions that a nonexistence claim rests on
};

// Depth-first completion with k = 4. Each new block is {0, d, x, y} where +-d
// is the smallest still uncovered difference class. Throws
// Error(inconsistent_problem) if the fixed blocks collide, touch the target
// leave, or the block count cannot fill the remaining classes.
SearchOutcome complete_family(const SearchProblem& problem);

// Complete enumeration of (v,4,1)-CDFs or (v,4,4,1)-CDFs with the
// translation and fail-first reductions; deterministic.
SearchOutcome exhaustive_search(Residue v, FamilyKind kind, std::uint64_t node_budget = 0);

// Reduction-free enumeration over all k-subsets of Z_v (no element fixed, no
// canonical forms, arbitrary k). Only for tiny v.
SearchOutcome reference_enumeration(Residue v, int k, FamilyKind kind, std::uint64_t node_budget = 0);

struct DbBuildOptions {
  std::uint64_t seed = 1;
  std::uint64_t base_budget = 2000;  // nodes for a Luby unit
  std::uint64_t max_restarts = 100000;
  std::function<void(const std::string&)> log;  // one structured line per event
};

// Luby sequence 1,1,2,1,1,2,4,1,1,2,... (i >= 1).
std::uint64_t luby(std::uint64_t i);

// Solves every required small order; throws Error(verification_failed)
// listing the orders left unsolved.
SmallOrderDB build_small_order_db(const DbBuildOptions& options);

}  // namespace cdf
