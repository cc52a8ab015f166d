#pragma once

// Independent brute-force checks used by the tests and the acceptance
// binary. Nothing here calls the library; plain vectors and loops only.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<std::int64_t>>;

inline std::int64_t md(std::int64_t a, std::int64_t v) { return ((a % v) + v) % v; }

// Multiplicity of every residue among all ordered differences x - y, x != y.
inline std::vector<int> difference_counts(const Blocks& blocks, std::int64_t v) {
  std::vector<int> c(static_cast<std::size_t>(v), 0);
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (i != j) ++c[static_cast<std::size_t>(md(b[i] - b[j], v))];
  return c;
}

// Residues hit zero times, 0 included.
inline std::vector<std::int64_t> leave(const Blocks& blocks, std::int64_t v) {
  const auto c = difference_counts(blocks, v);
  std::vector<std::int64_t> out{0};
  for (std::int64_t d = 1; d < v; ++d)
    if (c[static_cast<std::size_t>(d)] == 0) out.push_back(d);
  return out;
}

// No nonzero residue hit twice and no residue of expected_leave hit; every
// other nonzero residue hit exactly once.
inline bool is_family_with_leave(const Blocks& blocks, std::int64_t v, const std::vector<std::int64_t>& expected_leave) {
  const auto c = difference_counts(blocks, v);
  std::set<std::int64_t> L(expected_leave.begin(), expected_leave.end());
  for (std::int64_t d = 1; d < v; ++d) {
    const int want = L.count(d) ? 0 : 1;
    if (c[static_cast<std::size_t>(d)] != want) return false;
  }
  return true;
}

inline bool is_packing(const Blocks& blocks, std::int64_t v) {
  const auto c = difference_counts(blocks, v);
  for (std::int64_t d = 1; d < v; ++d)
    if (c[static_cast<std::size_t>(d)] > 1) return false;
  return true;
}

// Every translate of every base block, with duplicate blocks (as sets) removed.
inline Blocks develop(const Blocks& base, std::int64_t v) {
  std::set<std::vector<std::int64_t>> seen;
  Blocks out;
  for (const auto& b : base)
    for (std::int64_t s = 0; s < v; ++s) {
      std::vector<std::int64_t> t;
      for (auto e : b) t.push_back(md(e + s, v));
      std::sort(t.begin(), t.end());
      if (seen.insert(t).second) out.push_back(t);
    }
  return out;
}

// Every unordered pair of Z_v in exactly one block.
inline bool pairs_exactly_once(const Blocks& design, std::int64_t v) {
  std::vector<int> seen(static_cast<std::size_t>(v * v), 0);
  for (const auto& b : design)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        auto lo = std::min(b[i], b[j]), hi = std::max(b[i], b[j]);
        if (++seen[static_cast<std::size_t>(lo * v + hi)] > 1) return false;
      }
  for (std::int64_t a = 0; a < v; ++a)
    for (std::int64_t b = a + 1; b < v; ++b)
      if (seen[static_cast<std::size_t>(a * v + b)] != 1) return false;
  return true;
}

// The block set, as a set of sorted blocks, equals its +1 translate.
inline bool translation_invariant(const Blocks& design, std::int64_t v) {
  std::set<std::vector<std::int64_t>> s;
  for (auto b : design) {
    std::sort(b.begin(), b.end());
    s.insert(b);
  }
  for (const auto& b : s) {
    std::vector<std::int64_t> t;
    for (auto e : b) t.push_back(md(e + 1, v));
    std::sort(t.begin(), t.end());
    if (!s.count(t)) return false;
  }
  return true;
}

// Max over (x, y, r), x != y or r != 0, of sum_i x_i y_{i+r} on dense 0/1 rows.
inline std::uint64_t max_correlation(const Blocks& supports, std::int64_t v) {
  std::vector<std::vector<int>> rows;
  for (const auto& s : supports) {
    std::vector<int> r(static_cast<std::size_t>(v), 0);
    for (auto p : s) r[static_cast<std::size_t>(p)] = 1;
    rows.push_back(std::move(r));
  }
  std::uint64_t best = 0;
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t y = 0; y < rows.size(); ++y)
      for (std::int64_t r = 0; r < v; ++r) {
        if (x == y && r == 0) continue;
        std::uint64_t sum = 0;
        for (std::int64_t i = 0; i < v; ++i)
          sum += static_cast<std::uint64_t>(rows[x][static_cast<std::size_t>(i)] *
                                            rows[y][static_cast<std::size_t>(md(i + r, v))]);
        best = std::max(best, sum);
      }
  return best;
}

// The leave printed for the Yang-Lin packing over Z_{72t+1}, typed directly
// from the closed form.
inline std::vector<std::int64_t> yang_lin_leave(std::int64_t t) {
  const std::int64_t v = 72 * t + 1;
  const std::int64_t pm[] = {7 * t,      8 * t,      12 * t,     15 * t,     19 * t,     27 * t,
                             8 * t + 2,  12 * t - 1, 13 * t,     16 * t,     21 * t,     23 * t - 1,
                             25 * t,     27 * t + 1, 30 * t + 1, 31 * t + 1, 35 * t - 2, 36 * t};
  std::set<std::int64_t> s{0};
  for (auto d : pm) {
    s.insert(md(d, v));
    s.insert(md(-d, v));
  }
  return {s.begin(), s.end()};
}

inline std::vector<std::int64_t> quotient_leave(std::int64_t v) { return {0, v / 4, v / 2, 3 * v / 4}; }

}  // namespace oracle
