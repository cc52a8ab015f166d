#include "cdf/core.hpp"

#include <algorithm>
#include <sstream>

namespace cdf {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CDP: return "cdp";
    case FamilyKind::CDF: return "cdf";
    case FamilyKind::QuotientCDF: return "quotient";
  }
  return "?";
}

std::optional<FamilyKind> parse_kind(std::string_view name) {
  if (name == "cdp") return FamilyKind::CDP;
  if (name == "cdf") return FamilyKind::CDF;
  if (name == "quotient" || name == "quotient-cdf" || name == "qcdf") return FamilyKind::QuotientCDF;
  return std::nullopt;
}

bool DesignParams::admissible() const {
  if (v < 1 || k < 2) return false;
  const Residue kk = static_cast<Residue>(k) * (k - 1);
  switch (kind) {
    case FamilyKind::CDP: return true;
    case FamilyKind::CDF: return (v - 1) % kk == 0;
    case FamilyKind::QuotientCDF: return v % k == 0 && (v - k) >= 0 && (v - k) % kk == 0;
  }
  return false;
}

std::optional<std::size_t> DesignParams::expected_block_count() const {
  if (kind == FamilyKind::CDP || !admissible()) return std::nullopt;
  const Residue kk = static_cast<Residue>(k) * (k - 1);
  if (kind == FamilyKind::CDF) return static_cast<std::size_t>((v - 1) / kk);
  return static_cast<std::size_t>((v - k) / kk);
}

std::vector<Residue> DesignParams::required_leave() const {
  switch (kind) {
    case FamilyKind::CDP: return {};
    case FamilyKind::CDF: return {0};
    case FamilyKind::QuotientCDF: {
      std::vector<Residue> out;
      if (v % k != 0) return {0};
      for (int j = 0; j < k; ++j) out.push_back(j * (v / k));
      return out;
    }
  }
  return {};
}

BaseBlock::BaseBlock(std::vector<Residue> elements, Residue v) : elements_(std::move(elements)) {
  if (v < 1) throw Error(Errc::domain, "group order must be positive");
  for (auto& e : elements_) e = mod(e, v);
  std::vector<Residue> s = elements_;
  std::sort(s.begin(), s.end());
  if (auto it = std::adjacent_find(s.begin(), s.end()); it != s.end()) {
    throw Error(Errc::invalid_block, "block " + to_string() + " repeats element " + std::to_string(*it) +
                                         " mod " + std::to_string(v));
  }
}

bool BaseBlock::contains(Residue x) const {
  return std::find(elements_.begin(), elements_.end(), x) != elements_.end();
}

BaseBlock BaseBlock::sorted() const {
  BaseBlock b = *this;
  std::sort(b.elements_.begin(), b.elements_.end());
  return b;
}

BaseBlock BaseBlock::normalized(Residue v) const {
  BaseBlock b = sorted();
  if (b.elements_.empty()) return b;
  // Pick the translate whose sorted form is lexicographically least.
  BaseBlock best = b.translated(-b.elements_.front(), v).sorted();
  for (Residue e : b.elements_) {
    BaseBlock cand = b.translated(-e, v).sorted();
    if (cand < best) best = std::move(cand);
  }
  return best;
}

BaseBlock BaseBlock::translated(Residue shift, Residue v) const {
  BaseBlock b = *this;
  for (auto& e : b.elements_) e = mod(e + shift, v);
  return b;
}

std::string BaseBlock::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

std::vector<Residue> delta_block(const BaseBlock& block, Residue v) {
  std::vector<Residue> out;
  const auto e = block.elements();
  out.reserve(e.size() * (e.size() - (e.empty() ? 0 : 1)));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j) out.push_back(mod(e[i] - e[j], v));
  return out;
}

void CoverageMap::add(const BaseBlock& block) {
  const Residue n = v();
  const auto e = block.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j) ++counts_[static_cast<std::size_t>(mod(e[i] - e[j], n))];
}

std::vector<Residue> CoverageMap::leave() const {
  std::vector<Residue> out{0};
  for (std::size_t d = 1; d < counts_.size(); ++d)
    if (counts_[d] == 0) out.push_back(static_cast<Residue>(d));
  return out;
}

std::optional<Residue> CoverageMap::first_repeat() const {
  for (std::size_t d = 1; d < counts_.size(); ++d)
    if (counts_[d] > 1) return static_cast<Residue>(d);
  return std::nullopt;
}

std::uint64_t CoverageMap::total() const {
  std::uint64_t s = 0;
  for (std::size_t d = 1; d < counts_.size(); ++d) s += counts_[d];
  return s;
}

DifferenceFamily::DifferenceFamily(DesignParams params, std::vector<BaseBlock> blocks)
    : params_(params), blocks_(std::move(blocks)), coverage_(params.v) {
  if (params_.v < 1) throw Error(Errc::domain, "group order must be positive");
  if (params_.k < 2) throw Error(Errc::domain, "block size must be at least 2");
  for (const auto& b : blocks_) {
    if (b.size() != static_cast<std::size_t>(params_.k))
      throw Error(Errc::invalid_block, "block " + b.to_string() + " does not have " + std::to_string(params_.k) +
                                           " elements");
    for (Residue e : b.elements())
      if (e < 0 || e >= params_.v)
        throw Error(Errc::invalid_block, "block " + b.to_string() + " not reduced mod " + std::to_string(params_.v));
    coverage_.add(b);
  }
}

DifferenceFamily DifferenceFamily::with_kind(FamilyKind kind) const {
  DesignParams p = params_;
  p.kind = kind;
  return DifferenceFamily(p, blocks_);
}

bool DifferenceFamily::same_blocks_as(const DifferenceFamily& other) const {
  if (v() != other.v() || blocks_.size() != other.blocks_.size()) return false;
  auto norm = [](const DifferenceFamily& f) {
    std::vector<BaseBlock> out;
    for (const auto& b : f.blocks()) out.push_back(b.normalized(f.v()));
    std::sort(out.begin(), out.end());
    return out;
  };
  return norm(*this) == norm(other);
}

CoverageMap coverage(const DifferenceFamily& family) { return family.coverage(); }

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::none: return "none";
    case VerdictReason::invalid_block: return "invalid-block";
    case VerdictReason::block_count: return "count";
    case VerdictReason::collision: return "collision";
    case VerdictReason::leave: return "leave";
    case VerdictReason::pair_uncovered: return "pair-uncovered";
    case VerdictReason::pair_repeated: return "pair-repeated";
    case VerdictReason::not_cyclic: return "not-cyclic";
  }
  return "?";
}

Verdict verify_family(const DifferenceFamily& family) {
  const auto& cov = family.coverage();
  if (auto d = cov.first_repeat()) {
    return Verdict::fail(VerdictReason::collision, {*d},
                         "difference " + std::to_string(*d) + " covered " + std::to_string(cov.count(*d)) + " times");
  }
  const auto& p = family.params();
  if (p.kind != FamilyKind::CDP) {
    auto expected = p.expected_block_count();
    if (!expected) {
      return Verdict::fail(VerdictReason::block_count, {},
                           "v=" + std::to_string(p.v) + " is not admissible for kind " + std::string(to_string(p.kind)));
    }
    if (*expected != family.blocks().size()) {
      return Verdict::fail(VerdictReason::block_count, {static_cast<Residue>(family.blocks().size())},
                           "expected " + std::to_string(*expected) + " blocks, got " +
                               std::to_string(family.blocks().size()));
    }
    const auto want = p.required_leave();
    const auto got = cov.leave();
    if (want != got) {
      std::vector<Residue> sym;
      std::set_symmetric_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(sym));
      return Verdict::fail(VerdictReason::leave, sym,
                           "leave differs from required leave at " + std::to_string(sym.front()));
    }
  }
  return Verdict::ok();
}

std::vector<BaseBlock> develop_orbits(std::span<const BaseBlock> base_blocks, Residue v) {
  std::vector<BaseBlock> out;
  for (const auto& base : base_blocks) {
    const BaseBlock start = base.sorted();
    for (Residue s = 0; s < v; ++s) {
      BaseBlock b = base.translated(s, v).sorted();
      if (s > 0 && b == start) break;  // orbit closed early: short orbit
      out.push_back(std::move(b));
    }
  }
  return out;
}

BaseBlock short_orbit_block(Residue v, int k) {
  if (v % k != 0) throw Error(Errc::domain, "short orbit needs k | v");
  std::vector<Residue> e;
  for (int j = 0; j < k; ++j) e.push_back(j * (v / k));
  return BaseBlock(std::move(e), v);
}

std::vector<BaseBlock> develop(const DifferenceFamily& family) {
  if (family.kind() == FamilyKind::CDP)
    throw Error(Errc::verification_failed, "only a CDF or quotient CDF develops into a design");
  if (auto verdict = verify_family(family); !verdict)
    throw Error(Errc::verification_failed, "family does not verify: " + verdict.detail);
  std::vector<BaseBlock> base = family.blocks();
  if (family.kind() == FamilyKind::QuotientCDF) base.push_back(short_orbit_block(family.v(), family.k()));
  return develop_orbits(base, family.v());
}

Verdict verify_design(std::span<const BaseBlock> blocks, Residue v) {
  if (v < 1) return Verdict::fail(VerdictReason::invalid_block, {}, "group order must be positive");
  const auto n = static_cast<std::size_t>(v);
  std::vector<std::uint8_t> seen(n * n, 0);
  for (const auto& b : blocks) {
    const auto e = b.elements();
    for (Residue x : e)
      if (x < 0 || x >= v) return Verdict::fail(VerdictReason::invalid_block, {x}, "element out of range");
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const auto a = static_cast<std::size_t>(std::min(e[i], e[j]));
        const auto c = static_cast<std::size_t>(std::max(e[i], e[j]));
        auto& cell = seen[a * n + c];
        if (cell < 2) ++cell;
      }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      const auto cell = seen[a * n + c];
      if (cell == 0)
        return Verdict::fail(VerdictReason::pair_uncovered, {static_cast<Residue>(a), static_cast<Residue>(c)},
                             "pair (" + std::to_string(a) + "," + std::to_string(c) + ") uncovered");
      if (cell > 1)
        return Verdict::fail(VerdictReason::pair_repeated, {static_cast<Residue>(a), static_cast<Residue>(c)},
                             "pair (" + std::to_string(a) + "," + std::to_string(c) + ") covered more than once");
    }

  std::vector<BaseBlock> sorted_blocks;
  sorted_blocks.reserve(blocks.size());
  for (const auto& b : blocks) sorted_blocks.push_back(b.sorted());
  std::sort(sorted_blocks.begin(), sorted_blocks.end());
  for (const auto& b : sorted_blocks) {
    BaseBlock next = b.translated(1, v).sorted();
    if (!std::binary_search(sorted_blocks.begin(), sorted_blocks.end(), next)) {
      std::vector<Residue> w(b.elements().begin(), b.elements().end());
      return Verdict::fail(VerdictReason::not_cyclic, w, "translate of " + b.to_string() + " by +1 is missing");
    }
  }
  return Verdict::ok(std::to_string(blocks.size()) + " blocks checked");
}

}  // namespace cdf
