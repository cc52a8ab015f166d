#pragma once

// Optical orthogonal codes from difference packings.

#include <cstdint>
#include <string>
#include <vector>

#include "cdf/core.hpp"

namespace cdf {

struct Codeword {
  std::vector<Residue> support;  // ascending positions of the 1s

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

struct OpticalCode {
  Residue v = 0;
  int k = 0;
  std::vector<Codeword> codewords;
};

// One codeword per base block. Refuses families that do not verify.
OpticalCode to_code(const DifferenceFamily& family);

struct Correlation {
  std::uint64_t max = 0;
  // Maximising (x, y, r) of sum_i x_i y_{i+r}, with x != y or r != 0; ties go
  // to the least (x, y, r) under the difference method.
  std::size_t x = 0;
  std::size_t y = 0;
  Residue shift = 0;
};

// Shift-and-count over every (x, y, r); O(b^2 v k).
Correlation correlation_direct(const OpticalCode& code);
// From difference multisets: auto-correlation at r is the multiplicity of r
// in supp(x) - supp(x), cross-correlation that of r in supp(x) - supp(y).
Correlation correlation_by_differences(const OpticalCode& code);

// floor((v-1)/(k(k-1)))
std::uint64_t optimal_size(Residue v, int k);
bool is_optimal(const OpticalCode& code);

// One line of v characters '0'/'1' per codeword.
std::string to_dense_text(const OpticalCode& code);

}  // namespace cdf
