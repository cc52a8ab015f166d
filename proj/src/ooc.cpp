#include "cdf/ooc.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace cdf {

OpticalCode to_code(const DifferenceFamily& family) {
  if (auto verdict = verify_family(family); !verdict)
    throw Error(Errc::verification_failed, "family is not a difference packing: " + verdict.detail);
  OpticalCode code{family.v(), family.k(), {}};
  for (const auto& b : family.blocks()) {
    auto s = b.sorted();
    code.codewords.push_back(Codeword{{s.elements().begin(), s.elements().end()}});
  }
  return code;
}

Correlation correlation_direct(const OpticalCode& code) {
  Correlation best;
  const auto n = static_cast<std::size_t>(code.v);
  std::vector<std::uint8_t> indicator(n);
  for (std::size_t y = 0; y < code.codewords.size(); ++y) {
    std::fill(indicator.begin(), indicator.end(), 0);
    for (Residue p : code.codewords[y].support) indicator[static_cast<std::size_t>(p)] = 1;
    for (std::size_t x = 0; x < code.codewords.size(); ++x) {
      for (Residue r = 0; r < code.v; ++r) {
        if (x == y && r == 0) continue;
        // sum_i x_i y_{i+r}
        std::uint64_t sum = 0;
        for (Residue i : code.codewords[x].support) sum += indicator[static_cast<std::size_t>(mod(i + r, code.v))];
        if (sum > best.max) best = Correlation{sum, x, y, r};
      }
    }
  }
  return best;
}

Correlation correlation_by_differences(const OpticalCode& code) {
  Correlation best;
  std::unordered_map<Residue, std::uint64_t> mult;
  for (std::size_t x = 0; x < code.codewords.size(); ++x) {
    for (std::size_t y = 0; y < code.codewords.size(); ++y) {
      mult.clear();
      // x_i y_{i+r} = 1 exactly when i in supp(x) and i + r in supp(y).
      for (Residue a : code.codewords[x].support)
        for (Residue b : code.codewords[y].support) ++mult[mod(b - a, code.v)];
      for (const auto& [r, m] : mult) {
        if (x == y && r == 0) continue;
        if (m > best.max || (m == best.max && std::tie(x, y, r) < std::tie(best.x, best.y, best.shift)))
          best = Correlation{m, x, y, r};
      }
    }
  }
  return best;
}

std::uint64_t optimal_size(Residue v, int k) {
  const Residue kk = static_cast<Residue>(k) * (k - 1);
  return v < 1 ? 0 : static_cast<std::uint64_t>((v - 1) / kk);
}

bool is_optimal(const OpticalCode& code) { return code.codewords.size() == optimal_size(code.v, code.k); }

std::string to_dense_text(const OpticalCode& code) {
  std::string out;
  for (const auto& w : code.codewords) {
    std::string line(static_cast<std::size_t>(code.v), '0');
    for (Residue p : w.support) line[static_cast<std::size_t>(p)] = '1';
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace cdf
