#pragma once

// Symbolic analysis of parameterized base blocks
//   {0, A + i, B + 2i, C + 3i},  A, B, C linear in t,  i in [lo(t), hi(t)]
// over Z_v with v linear in t. Every positive difference of such a block
// sweeps an arithmetic progression whose endpoints are linear in t; the
// report lists those progressions and decides, exactly, whether they are
// pairwise disjoint as +/- classes for every integer t >= threshold.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cdf {

struct LinearExpr {
  std::int64_t p = 0;  // coefficient of t
  std::int64_t q = 0;

  constexpr std::int64_t at(std::int64_t t) const { return p * t + q; }
  friend constexpr LinearExpr operator+(LinearExpr a, LinearExpr b) { return {a.p + b.p, a.q + b.q}; }
  friend constexpr LinearExpr operator-(LinearExpr a, LinearExpr b) { return {a.p - b.p, a.q - b.q}; }
  friend constexpr LinearExpr operator*(std::int64_t c, LinearExpr a) { return {c * a.p, c * a.q}; }
  friend constexpr bool operator==(LinearExpr, LinearExpr) = default;
};

// "43t+1", "3t", "-1", "t-2".
std::string to_string(LinearExpr e);

struct BlockForm {
  LinearExpr first;   // element A + i
  LinearExpr second;  // element B + 2i
  LinearExpr third;   // element C + 3i
  LinearExpr index_lo;
  LinearExpr index_hi;
};

// The progression [lo, hi]_step.
struct IntervalExpr {
  LinearExpr lo;
  LinearExpr hi;
  int step = 1;

  friend bool operator==(const IntervalExpr&, const IntervalExpr&) = default;
};

// "[43t+1,44t-1]" or "[31t+3,33t-1]_2".
std::string to_string(const IntervalExpr& e);

struct DifferenceEntry {
  std::size_t form = 0;
  LinearExpr base;         // difference = base + index_coeff * i
  int index_coeff = 0;     // +-1, +-2, +-3
  IntervalExpr positive;   // values as i runs over the index range
  std::optional<IntervalExpr> folded;  // v - positive, when positive > (v-1)/2
  bool empty = false;      // no values for any t >= threshold
  bool straddles = false;  // neither wholly above nor below (v-1)/2, or sign not fixed
};

// "43t+i", "35t-2-2i", "3i".
std::string difference_to_string(const DifferenceEntry& e);

struct IntervalReport {
  std::vector<DifferenceEntry> entries;  // 6 per form: A, B, C, A-B, A-C, B-C (oriented)
  bool disjoint = true;
  // First pair of entries found to share a +/- class, with a t that shows it.
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  std::optional<std::int64_t> overlap_t;
  std::vector<std::size_t> flagged;  // empty or straddling entries
};

IntervalReport interval_report(std::span<const BlockForm> forms, LinearExpr modulus, std::int64_t threshold);

}  // namespace cdf
