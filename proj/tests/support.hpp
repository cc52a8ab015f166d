#pragma once

// Conversions between library types and the plain rows the oracles take.

#include <span>
#include <vector>

#include "cdf/core.hpp"
#include "oracles.hpp"

namespace testsupport {

inline std::vector<cdf::BaseBlock> blocks_of(cdf::Residue v, const oracle::Blocks& rows) {
  std::vector<cdf::BaseBlock> out;
  for (const auto& r : rows) out.emplace_back(r, v);
  return out;
}

inline oracle::Blocks rows(std::span<const cdf::BaseBlock> blocks) {
  oracle::Blocks out;
  for (const auto& b : blocks) out.emplace_back(b.elements().begin(), b.elements().end());
  return out;
}

inline oracle::Blocks rows(const std::vector<cdf::BaseBlock>& blocks) { return rows(std::span(blocks)); }

inline oracle::Blocks rows(const cdf::DifferenceFamily& f) { return rows(f.blocks()); }

}  // namespace testsupport
