#include "cdf/constructions.hpp"

#include <algorithm>

#include "cdf/small_order_db.hpp"

namespace cdf {
namespace {

// t-coefficients of the three nonzero elements of each block form.
constexpr std::array<std::array<std::int64_t, 3>, 6> kFormSlopes{{
    {43, 31, 8},
    {23, 5, 8},
    {41, 25, 8},
    {35, 5, 0},
    {47, 19, 0},
    {21, 13, 0},
}};

struct IndexRange {
  std::int64_t lo;
  std::int64_t hi;
  std::optional<std::int64_t> hole;
};

void append_parameterized(std::vector<BaseBlock>& out, std::int64_t t, Residue v, const OffsetTable& off,
                          const std::array<IndexRange, 6>& ranges) {
  for (int r = 0; r < 6; ++r) {
    const auto& slope = kFormSlopes[static_cast<std::size_t>(r)];
    const auto& range = ranges[static_cast<std::size_t>(r)];
    for (std::int64_t i = range.lo; i <= range.hi; ++i) {
      if (range.hole && *range.hole == i) continue;
      out.emplace_back(std::vector<Residue>{0, slope[0] * t + off.at(r, 0) + i, slope[1] * t + off.at(r, 1) + 2 * i,
                                            slope[2] * t + off.at(r, 2) + 3 * i},
                       v);
    }
  }
}

void append_sporadic(std::vector<BaseBlock>& out, std::int64_t t, Residue v, std::span<const SporadicBlock> rows) {
  for (const auto& row : rows) {
    std::vector<Residue> e;
    e.reserve(row.size());
    for (const auto& term : row) e.push_back(term.at(t));
    out.emplace_back(std::move(e), v);
  }
}

// 1 <= i <= t-2, i != floor(t/2)
std::array<IndexRange, 6> trimmed_ranges(std::int64_t t) {
  IndexRange r{1, t - 2, t / 2};
  return {r, r, r, r, r, r};
}

DifferenceFamily checked(DifferenceFamily fam, const char* what) {
  if (auto verdict = verify_family(fam); !verdict)
    throw Error(Errc::verification_failed, std::string(what) + " v=" + std::to_string(fam.v()) +
                                               " failed self-check: " + verdict.detail);
  return fam;
}

DifferenceFamily parameterized_family(tables::Series series, std::int64_t t, int x, Residue v, FamilyKind kind,
                                      const char* what) {
  std::vector<BaseBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(6 * t + x));
  append_parameterized(blocks, t, v, tables::offsets(series, x), trimmed_ranges(t));
  append_sporadic(blocks, t, v, tables::sporadic(series, x, t % 2 != 0));
  return checked(DifferenceFamily(DesignParams{v, 4, kind}, std::move(blocks)), what);
}

}  // namespace

std::int64_t SporadicTerm::at(std::int64_t t) const {
  const std::int64_t num = p * t + q;
  if (den != 1 && num % den != 0)
    throw Error(Errc::domain, "sporadic term (" + std::to_string(p) + "t+" + std::to_string(q) + ")/" +
                                  std::to_string(den) + " is not integral at t=" + std::to_string(t));
  return num / den;
}

DifferenceFamily yang_lin_cdp(std::int64_t t) {
  if (t < 1) throw Error(Errc::domain, "Yang-Lin packing needs t >= 1");
  const Residue v = 72 * t + 1;
  const IndexRange from1{1, t - 1, std::nullopt};
  const IndexRange from0{0, t - 1, std::nullopt};
  std::vector<BaseBlock> blocks;
  append_parameterized(blocks, t, v, tables::yang_lin_offsets(), {from1, from0, from1, from0, from0, from1});
  return checked(DifferenceFamily(DesignParams{v, 4, FamilyKind::CDP}, std::move(blocks)), "Yang-Lin packing");
}

DifferenceFamily extend_yang_lin(std::int64_t t) {
  auto base = yang_lin_cdp(t);
  std::vector<BaseBlock> blocks = base.blocks();
  blocks.emplace_back(std::vector<Residue>{0, 7 * t, 19 * t, 64 * t + 1}, base.v());
  return checked(DifferenceFamily(base.params(), std::move(blocks)), "extended Yang-Lin packing");
}

std::vector<Residue> yang_lin_leave(std::int64_t t) {
  const Residue v = 72 * t + 1;
  const std::vector<Residue> classes{7 * t,      8 * t,      12 * t,     15 * t,     19 * t,     27 * t,
                                     8 * t + 2,  12 * t - 1, 13 * t,     16 * t,     21 * t,     23 * t - 1,
                                     25 * t,     27 * t + 1, 30 * t + 1, 31 * t + 1, 35 * t - 2, 36 * t};
  std::vector<Residue> out{0};
  for (Residue d : classes) {
    out.push_back(mod(d, v));
    out.push_back(mod(-d, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BlockForm> yang_lin_forms() {
  const auto& off = tables::yang_lin_offsets();
  const LinearExpr one{0, 1}, zero{0, 0}, t_minus_1{1, -1};
  const std::array<LinearExpr, 6> lo{one, zero, one, zero, zero, one};
  std::vector<BlockForm> out;
  for (int r = 0; r < 6; ++r) {
    const auto& s = kFormSlopes[static_cast<std::size_t>(r)];
    out.push_back(BlockForm{{s[0], off.at(r, 0)}, {s[1], off.at(r, 1)}, {s[2], off.at(r, 2)},
                            lo[static_cast<std::size_t>(r)], t_minus_1});
  }
  return out;
}

DifferenceFamily cdf_72t_plus_1(std::int64_t t) {
  if (t < 3) throw Error(Errc::database_miss, "v = 72t+1 with t < 3 is served by the small-order database");
  return parameterized_family(tables::Series::OneMod72, t, 0, 72 * t + 1, FamilyKind::CDF, "CDF 72t+1");
}

DifferenceFamily cdf_72t_plus_12x_plus_1(std::int64_t t, int x) {
  if (x < 1 || x > 5) throw Error(Errc::domain, "x must be in [1,5]");
  if (t < 3) throw Error(Errc::database_miss, "v = 72t+12x+1 with t < 3 is served by the small-order database");
  return parameterized_family(tables::Series::OneMod12, t, x, 72 * t + 12 * x + 1, FamilyKind::CDF,
                              "CDF 72t+12x+1");
}

DifferenceFamily quotient_cdf_72t_plus_12x_plus_4(std::int64_t t, int x) {
  if (x < 0 || x > 5) throw Error(Errc::domain, "x must be in [0,5]");
  if (t < 3) throw Error(Errc::database_miss, "v = 72t+12x+4 with t < 3 is served by the small-order database");
  return parameterized_family(tables::Series::FourMod12, t, x, 72 * t + 12 * x + 4, FamilyKind::QuotientCDF,
                              "quotient CDF 72t+12x+4");
}

bool is_known_nonexistent(Residue v) { return v == 16 || v == 25 || v == 28; }

namespace {

DifferenceFamily from_db(Residue v, FamilyKind kind) {
  const auto* fam = default_db().find(v);
  if (!fam || fam->kind() != kind)
    throw Error(Errc::database_miss, "no " + std::string(to_string(kind)) + " for v=" + std::to_string(v) +
                                         " in the small-order database (run rebuild-db)");
  return checked(*fam, "database family");
}

}  // namespace

ConstructResult construct_cdf(Residue v) {
  if (v < 1 || v % 12 != 1)
    throw Error(Errc::inadmissible, "a (v,4,1)-CDF needs v = 1 (mod 12); got v=" + std::to_string(v));
  if (v == 25) return NonExistent{};
  if (v == 1) return DifferenceFamily(DesignParams{1, 4, FamilyKind::CDF}, {});
  if (v <= 205) return from_db(v, FamilyKind::CDF);
  const std::int64_t t = (v - 1) / 72;
  const int x = static_cast<int>(((v - 1) % 72) / 12);
  return x == 0 ? cdf_72t_plus_1(t) : cdf_72t_plus_12x_plus_1(t, x);
}

ConstructResult construct_quotient_cdf(Residue v) {
  if (v < 4 || v % 12 != 4)
    throw Error(Errc::inadmissible, "a (v,4,4,1)-CDF needs v = 4 (mod 12); got v=" + std::to_string(v));
  if (v == 16 || v == 28) return NonExistent{};
  if (v == 4) return DifferenceFamily(DesignParams{4, 4, FamilyKind::QuotientCDF}, {});
  if (v <= 208) return from_db(v, FamilyKind::QuotientCDF);
  const std::int64_t t = (v - 4) / 72;
  const int x = static_cast<int>(((v - 4) % 72) / 12);
  return quotient_cdf_72t_plus_12x_plus_4(t, x);
}

ConstructResult construct_family(Residue v) {
  if (v >= 1 && v % 12 == 1) return construct_cdf(v);
  if (v >= 4 && v % 12 == 4) return construct_quotient_cdf(v);
  throw Error(Errc::inadmissible, "a cyclic (v,4,1)-design needs v = 1 or 4 (mod 12); got v=" + std::to_string(v));
}

DesignResult construct_design(Residue v) {
  auto fam = construct_family(v);
  if (std::holds_alternative<NonExistent>(fam)) return NonExistent{};
  const auto& f = std::get<DifferenceFamily>(fam);
  DesignBaseBlocks out{v, f.blocks(), 0};
  if (f.kind() == FamilyKind::QuotientCDF) {
    out.blocks.push_back(short_orbit_block(v, 4));
    out.short_orbits = 1;
  }
  return out;
}

}  // namespace cdf
