#pragma once

// Closed-form (v,4,1)-CDP/CDF and (v,4,4,1)-CDF constructors and the
// dispatchers that pick one for a given v.

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "cdf/core.hpp"
#include "cdf/intervals.hpp"

namespace cdf {

// (p*t + q) / den with den in {1, 2}.
struct SporadicTerm {
  std::int64_t p = 0;
  std::int64_t q = 0;
  int den = 1;

  // Throws Error(domain) if den does not divide p*t+q.
  std::int64_t at(std::int64_t t) const;
};

using SporadicBlock = std::array<SporadicTerm, 4>;

// Offsets a1 a2 a3 | b1 b2 b3 | ... | f1 f2 f3 for the six block forms
//   {0, 43t+a1+i, 31t+a2+2i, 8t+a3+3i}   {0, 23t+b1+i, 5t+b2+2i, 8t+b3+3i}
//   {0, 41t+c1+i, 25t+c2+2i, 8t+c3+3i}   {0, 35t+d1+i, 5t+d2+2i, d3+3i}
//   {0, 47t+e1+i, 19t+e2+2i, e3+3i}      {0, 21t+f1+i, 13t+f2+2i, f3+3i}
struct OffsetTable {
  int x = 0;
  std::array<std::int64_t, 18> offsets{};

  std::int64_t at(int form, int j) const { return offsets[static_cast<std::size_t>(3 * form + j)]; }
};

namespace tables {

enum class Series { OneMod72, OneMod12, FourMod12 };

// Offsets of the original Yang-Lin forms; also used for v = 72t+1.
const OffsetTable& yang_lin_offsets();
// x in 1..5 for OneMod12, 0..5 for FourMod12.
const OffsetTable& offsets(Series series, int x);
// The remaining 18+x blocks for (series, x, parity of t). x is ignored for OneMod72.
std::span<const SporadicBlock> sporadic(Series series, int x, bool t_odd);

}  // namespace tables

struct NonExistent {};

using ConstructResult = std::variant<DifferenceFamily, NonExistent>;

// Orbit representatives of a cyclic design: full-orbit base blocks, then the
// short-orbit block when v = 4 (mod 12).
struct DesignBaseBlocks {
  Residue v = 0;
  std::vector<BaseBlock> blocks;
  std::size_t short_orbits = 0;
};

using DesignResult = std::variant<DesignBaseBlocks, NonExistent>;

// The 6t-3 Yang-Lin blocks over Z_{72t+1}; t >= 1.
DifferenceFamily yang_lin_cdp(std::int64_t t);
// yang_lin_cdp(t) plus {0, 7t, 19t, 64t+1}.
DifferenceFamily extend_yang_lin(std::int64_t t);
// Closed form of the Yang-Lin leave, ascending.
std::vector<Residue> yang_lin_leave(std::int64_t t);
// The six Yang-Lin forms with their original index ranges, modulus 72t+1.
std::vector<BlockForm> yang_lin_forms();

DifferenceFamily cdf_72t_plus_1(std::int64_t t);
DifferenceFamily cdf_72t_plus_12x_plus_1(std::int64_t t, int x);
DifferenceFamily quotient_cdf_72t_plus_12x_plus_4(std::int64_t t, int x);

// Throws Error(inadmissible) for v != 1 (mod 12), Error(database_miss) when
// a small order is missing from the database.
ConstructResult construct_cdf(Residue v);
// Same for v = 4 (mod 12); exceptions 16 and 28.
ConstructResult construct_quotient_cdf(Residue v);
ConstructResult construct_family(Residue v);  // by v mod 12
DesignResult construct_design(Residue v);

bool is_known_nonexistent(Residue v);

}  // namespace cdf
