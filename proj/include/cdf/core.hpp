#pragma once

// Modular difference arithmetic over Z_v, verification of difference
// packings/families and development of families into cyclic designs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdf {

using Residue = std::int64_t;

enum class Errc {
  invalid_block,
  domain,
  inadmissible,
  database_miss,
  verification_failed,
  inconsistent_problem,
  parse,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class FamilyKind { CDP, CDF, QuotientCDF };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_kind(std::string_view name);

// Non-negative representative of a mod v.
constexpr Residue mod(Residue a, Residue v) {
  Residue r = a % v;
  return r < 0 ? r + v : r;
}

struct DesignParams {
  Residue v = 1;
  int k = 4;
  FamilyKind kind = FamilyKind::CDP;

  // Number of base blocks forced by the kind, or nullopt for a CDP (or when
  // the divisibility condition fails).
  std::optional<std::size_t> expected_block_count() const;
  // True when the kind's divisibility conditions hold for (v, k).
  bool admissible() const;
  // The leave a family of this kind must have; empty for CDP.
  std::vector<Residue> required_leave() const;
};

// A k-subset of Z_v. Elements keep the order they were given in (the order a
// constructor prints them); comparisons go through sorted()/normalized().
class BaseBlock {
 public:
  BaseBlock() = default;
  // Reduces every element mod v; throws Error(invalid_block) on repeats.
  BaseBlock(std::vector<Residue> elements, Residue v);

  std::span<const Residue> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  Residue operator[](std::size_t i) const { return elements_[i]; }
  bool contains(Residue x) const;

  BaseBlock sorted() const;
  // Sorted and translated so the smallest element is 0.
  BaseBlock normalized(Residue v) const;
  BaseBlock translated(Residue shift, Residue v) const;

  std::string to_string() const;

  friend bool operator==(const BaseBlock&, const BaseBlock&) = default;
  friend auto operator<=>(const BaseBlock&, const BaseBlock&) = default;

 private:
  std::vector<Residue> elements_;
};

// Ordered differences x - y (mod v) over all x != y in the block; k(k-1) values.
std::vector<Residue> delta_block(const BaseBlock& block, Residue v);

// Dense multiplicity table for the multiset union of block differences.
class CoverageMap {
 public:
  explicit CoverageMap(Residue v = 1) : counts_(static_cast<std::size_t>(v), 0) {}

  void add(const BaseBlock& block);

  Residue v() const { return static_cast<Residue>(counts_.size()); }
  std::uint32_t count(Residue d) const { return counts_[static_cast<std::size_t>(d)]; }
  std::span<const std::uint32_t> counts() const { return counts_; }

  // Residues never hit, always including 0, ascending.
  std::vector<Residue> leave() const;
  // Smallest nonzero residue hit more than once.
  std::optional<Residue> first_repeat() const;
  std::uint64_t total() const;

 private:
  std::vector<std::uint32_t> counts_;
};

class DifferenceFamily {
 public:
  DifferenceFamily(DesignParams params, std::vector<BaseBlock> blocks);

  const DesignParams& params() const { return params_; }
  Residue v() const { return params_.v; }
  int k() const { return params_.k; }
  FamilyKind kind() const { return params_.kind; }
  const std::vector<BaseBlock>& blocks() const { return blocks_; }
  const CoverageMap& coverage() const { return coverage_; }
  std::vector<Residue> leave() const { return coverage_.leave(); }

  DifferenceFamily with_kind(FamilyKind kind) const;

  // Families compare as sets of normalized blocks.
  bool same_blocks_as(const DifferenceFamily& other) const;

 private:
  DesignParams params_;
  std::vector<BaseBlock> blocks_;
  CoverageMap coverage_;
};

CoverageMap coverage(const DifferenceFamily& family);

enum class VerdictReason {
  none,
  invalid_block,
  block_count,
  collision,
  leave,
  pair_uncovered,
  pair_repeated,
  not_cyclic,
};

std::string_view to_string(VerdictReason reason);

struct Verdict {
  bool valid = true;
  VerdictReason reason = VerdictReason::none;
  std::vector<Residue> witness;
  std::string detail;

  explicit operator bool() const { return valid; }

  static Verdict ok(std::string detail = {}) { return Verdict{true, VerdictReason::none, {}, std::move(detail)}; }
  static Verdict fail(VerdictReason r, std::vector<Residue> witness, std::string detail) {
    return Verdict{false, r, std::move(witness), std::move(detail)};
  }
};

// Checks collisions first, then the block count, then the leave.
Verdict verify_family(const DifferenceFamily& family);

// All distinct translates of each base block; short orbits are deduplicated.
std::vector<BaseBlock> develop_orbits(std::span<const BaseBlock> base_blocks, Residue v);

// {0, v/k, 2v/k, ...}
BaseBlock short_orbit_block(Residue v, int k);

// The full design of a verified CDF or quotient CDF (short orbit appended).
// Throws Error(verification_failed) otherwise.
std::vector<BaseBlock> develop(const DifferenceFamily& family);

// Every unordered pair covered exactly once, and the block set closed under +1.
Verdict verify_design(std::span<const BaseBlock> blocks, Residue v);

}  // namespace cdf
