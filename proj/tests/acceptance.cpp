// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. Every check is exact (no numeric tolerance); the
// runtime limits below are part of the criteria and are pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "cdf/constructions.hpp"
#include "cdf/intervals.hpp"
#include "cdf/ooc.hpp"
#include "cdf/search.hpp"
#include "cdf/small_order_db.hpp"
#include "oracles.hpp"
#include "printed_table.hpp"

using namespace cdf;

namespace {

constexpr double kSweepSeconds = 300;          // criterion 1
constexpr double kNonexistenceSeconds = 600;   // criterion 2, v = 28 dominates
constexpr double kTablesSeconds = 60;          // criterion 4
constexpr double kDbSeconds = 1800;            // criterion 8, per build

constexpr Residue kSweepMax = 3001;
constexpr std::int64_t kYangLinMaxT = 50;
constexpr std::int64_t kTablesMaxT = 60;
constexpr Residue kDesignMax = 500;
constexpr Residue kCodeMax = 1000;
constexpr Residue kDirectCorrelationMax = 300;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

oracle::Blocks rows(std::span<const BaseBlock> blocks) {
  oracle::Blocks out;
  for (const auto& b : blocks) out.emplace_back(b.elements().begin(), b.elements().end());
  return out;
}

struct Result {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (ok) first_failure = why;
    ok = false;
  }
};

// Library verdict and oracle verdict must agree that f is a family with the
// given leave and block count.
bool family_ok(const DifferenceFamily& f, const std::vector<Residue>& leave, std::size_t blocks) {
  return verify_family(f).valid && f.blocks().size() == blocks && f.leave() == leave &&
         oracle::is_family_with_leave(rows(f.blocks()), f.v(), leave);
}

Result criterion_sweep() {
  Result r;
  const auto t0 = Clock::now();
  std::size_t n1 = 0, n4 = 0;
  for (Residue v = 13; v <= kSweepMax; v += 12) {
    if (v == 25) {
      if (!std::holds_alternative<NonExistent>(construct_cdf(v))) r.fail("v=25 not reported nonexistent");
      continue;
    }
    const auto res = construct_cdf(v);
    if (!std::holds_alternative<DifferenceFamily>(res)) {
      r.fail("v=" + std::to_string(v) + " not constructed");
      continue;
    }
    if (!family_ok(std::get<DifferenceFamily>(res), {0}, static_cast<std::size_t>((v - 1) / 12)))
      r.fail("v=" + std::to_string(v) + " failed verification");
    ++n1;
  }
  for (Residue v : {16, 28})
    if (!std::holds_alternative<NonExistent>(construct_quotient_cdf(v)))
      r.fail("v=" + std::to_string(v) + " not reported nonexistent");
  for (Residue v = 40; v <= kSweepMax + 3; v += 12) {
    const auto res = construct_quotient_cdf(v);
    if (!std::holds_alternative<DifferenceFamily>(res)) {
      r.fail("v=" + std::to_string(v) + " not constructed");
      continue;
    }
    if (!family_ok(std::get<DifferenceFamily>(res), oracle::quotient_leave(v), static_cast<std::size_t>((v - 4) / 12)))
      r.fail("v=" + std::to_string(v) + " failed verification");
    ++n4;
  }
  const double s = seconds_since(t0);
  if (s > kSweepSeconds) r.fail("took " + std::to_string(s) + " s");
  std::ostringstream os;
  os << n1 << " CDFs (13..3001), " << n4 << " quotient CDFs (40..3004), 16/25/28 nonexistent, " << s << " s";
  r.detail = os.str();
  return r;
}

Result criterion_nonexistence() {
  Result r;
  const auto t0 = Clock::now();
  std::ostringstream os;
  for (auto [v, kind] : {std::pair{Residue{25}, FamilyKind::CDF}, std::pair{Residue{16}, FamilyKind::QuotientCDF},
                         std::pair{Residue{28}, FamilyKind::QuotientCDF}}) {
    const auto fast = exhaustive_search(v, kind);
    const auto ref = reference_enumeration(v, 4, kind);
    if (fast.status != SearchStatus::ExhaustedNonexistent) r.fail("v=" + std::to_string(v) + " exhaustive: " + std::string(to_string(fast.status)));
    if (ref.status != SearchStatus::ExhaustedNonexistent) r.fail("v=" + std::to_string(v) + " reference: " + std::string(to_string(ref.status)));
    os << "v=" << v << " nodes " << fast.stats.nodes << "/" << ref.stats.nodes << "; ";
  }
  const double s = seconds_since(t0);
  if (s > kNonexistenceSeconds) r.fail("took " + std::to_string(s) + " s");
  os << s << " s";
  r.detail = os.str();
  return r;
}

Result criterion_yang_lin() {
  Result r;
  for (std::int64_t t = 1; t <= kYangLinMaxT; ++t) {
    const Residue v = 72 * t + 1;
    const auto f = yang_lin_cdp(t);
    if (f.blocks().size() != static_cast<std::size_t>(6 * t - 3)) r.fail("t=" + std::to_string(t) + " block count");
    if (!verify_family(f).valid || !oracle::is_packing(rows(f.blocks()), v)) r.fail("t=" + std::to_string(t) + " not a packing");
    if (f.leave() != oracle::yang_lin_leave(t) || oracle::leave(rows(f.blocks()), v) != oracle::yang_lin_leave(t))
      r.fail("t=" + std::to_string(t) + " leave differs from the closed form");
    const auto e = extend_yang_lin(t);
    const std::vector<Residue> extra{0, 7 * t, 19 * t, 64 * t + 1};
    const auto& last = e.blocks().back();
    if (e.blocks().size() != f.blocks().size() + 1 ||
        std::vector<Residue>(last.elements().begin(), last.elements().end()) != extra)
      r.fail("t=" + std::to_string(t) + " extension block");
    if (!verify_family(e).valid || !oracle::is_packing(rows(e.blocks()), v)) r.fail("t=" + std::to_string(t) + " extension not a packing");
  }
  r.detail = "t=1.." + std::to_string(kYangLinMaxT) + ", 6t-3 blocks, leave = closed form, extension verifies";
  return r;
}

Result criterion_tables() {
  Result r;
  const auto t0 = Clock::now();
  std::size_t n = 0;
  auto check = [&](const DifferenceFamily& f, const std::vector<Residue>& leave, std::size_t count, const std::string& what) {
    ++n;
    if (!family_ok(f, leave, count)) r.fail(what);
  };
  for (std::int64_t t = 3; t <= kTablesMaxT; ++t) {
    const std::string ts = "t=" + std::to_string(t);
    try {
      check(cdf_72t_plus_1(t), {0}, static_cast<std::size_t>(6 * t), "72t+1 " + ts);
      for (int x = 1; x <= 5; ++x)
        check(cdf_72t_plus_12x_plus_1(t, x), {0}, static_cast<std::size_t>(6 * t + x),
              "72t+12x+1 " + ts + " x=" + std::to_string(x));
      for (int x = 0; x <= 5; ++x)
        check(quotient_cdf_72t_plus_12x_plus_4(t, x), oracle::quotient_leave(72 * t + 12 * x + 4),
              static_cast<std::size_t>(6 * t + x), "72t+12x+4 " + ts + " x=" + std::to_string(x));
    } catch (const Error& e) {
      r.fail(ts + ": " + e.what());
    }
  }
  const double s = seconds_since(t0);
  if (s > kTablesSeconds) r.fail("took " + std::to_string(s) + " s");
  r.detail = std::to_string(n) + " families, t=3.." + std::to_string(kTablesMaxT) + ", " + std::to_string(s) + " s";
  return r;
}

Result criterion_intervals() {
  Result r;
  const auto report = interval_report(yang_lin_forms(), LinearExpr{72, 1}, 1);
  if (report.entries.size() != 36) {
    r.fail(std::to_string(report.entries.size()) + " entries");
    return r;
  }
  std::size_t matched = 0;
  for (std::size_t i = 0; i < 36; ++i) {
    const auto& e = report.entries[i];
    const auto& want = printed::kYangLinTable[i];
    const std::string folded = e.folded ? to_string(*e.folded) : "";
    if (difference_to_string(e) == want.difference && to_string(e.positive) == want.positive && folded == want.folded)
      ++matched;
    else
      r.fail("row " + std::to_string(i + 1) + ": " + difference_to_string(e) + " " + to_string(e.positive) + " " + folded);
  }
  if (!report.disjoint) r.fail("not certified disjoint");
  r.detail = std::to_string(matched) + "/36 intervals verbatim, disjoint for all t >= 1: " + (report.disjoint ? "yes" : "no");
  return r;
}

Result criterion_design() {
  Result r;
  std::size_t n = 0;
  for (Residue v = 13; v <= kDesignMax; ++v) {
    if (v % 12 != 1 && v % 12 != 4) continue;
    const auto res = construct_design(v);
    if (std::holds_alternative<NonExistent>(res)) continue;
    const auto& base = std::get<DesignBaseBlocks>(res);
    const auto blocks = develop_orbits(base.blocks, v);
    const auto full = oracle::develop(rows(base.blocks), v);
    const auto expected = static_cast<std::size_t>(v * (v - 1) / 12);
    ++n;
    if (blocks.size() != expected || full.size() != expected) r.fail("v=" + std::to_string(v) + " block count");
    if (!verify_design(blocks, v).valid) r.fail("v=" + std::to_string(v) + " library design check");
    if (!oracle::pairs_exactly_once(full, v)) r.fail("v=" + std::to_string(v) + " pair coverage");
    if (!oracle::translation_invariant(full, v)) r.fail("v=" + std::to_string(v) + " +1 invariance");
  }
  r.detail = std::to_string(n) + " designs, v <= " + std::to_string(kDesignMax) + ", pairs exactly once, +1 invariant";
  return r;
}

Result criterion_ooc() {
  Result r;
  std::size_t n = 0, direct = 0;
  for (Residue v = 13; v <= kCodeMax; ++v) {
    if (v % 12 != 1 && v % 12 != 4) continue;
    const auto res = construct_family(v);
    if (std::holds_alternative<NonExistent>(res)) continue;
    const auto code = to_code(std::get<DifferenceFamily>(res));
    ++n;
    if (correlation_by_differences(code).max > 1) r.fail("v=" + std::to_string(v) + " difference method");
    if (code.codewords.size() != static_cast<std::size_t>((v - 1) / 12) || !is_optimal(code))
      r.fail("v=" + std::to_string(v) + " not optimal");
    if (v <= kDirectCorrelationMax) {
      ++direct;
      oracle::Blocks supports;
      for (const auto& w : code.codewords) supports.push_back(w.support);
      if (correlation_direct(code).max > 1 || oracle::max_correlation(supports, v) > 1)
        r.fail("v=" + std::to_string(v) + " direct shift-and-count");
    }
  }
  r.detail = std::to_string(n) + " codes, v <= " + std::to_string(kCodeMax) + ", " + std::to_string(direct) +
             " also by shift-and-count, all optimal";
  return r;
}

Result criterion_db() {
  Result r;
  auto build = [&](double& secs) {
    const auto t0 = Clock::now();
    DbBuildOptions o;
    o.seed = 1;
    std::string json;
    try {
      json = build_small_order_db(o).to_json();
    } catch (const Error& e) {
      r.fail(e.what());
    }
    secs = seconds_since(t0);
    return json;
  };
  double s1 = 0, s2 = 0;
  const auto first = build(s1);
  const auto second = build(s2);
  if (first != second) r.fail("two builds with seed 1 differ");
  if (first != embedded_db_json()) r.fail("build differs from the shipped database");
  if (s1 > kDbSeconds || s2 > kDbSeconds) r.fail("build exceeded " + std::to_string(kDbSeconds) + " s");
  std::size_t entries = 0;
  try {
    const auto db = SmallOrderDB::from_json(first);
    entries = db.size();
    if (!missing_orders(db).empty()) r.fail("orders missing from the database");
    for (const auto& [v, f] : db.entries()) {
      const auto leave = f.kind() == FamilyKind::CDF ? std::vector<Residue>{0} : oracle::quotient_leave(v);
      if (!oracle::is_family_with_leave(rows(f.blocks()), v, leave)) r.fail("v=" + std::to_string(v) + " fails the oracle");
    }
  } catch (const Error& e) {
    r.fail(std::string("reload: ") + e.what());
  }
  std::ostringstream os;
  os << entries << " entries, builds " << s1 << " s and " << s2 << " s, byte-identical, re-verified on load";
  r.detail = os.str();
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"1 existence sweep", criterion_sweep},
      {"2 nonexistence of 16, 25, 28", criterion_nonexistence},
      {"3 Yang-Lin packing", criterion_yang_lin},
      {"4 table fidelity", criterion_tables},
      {"5 interval analysis", criterion_intervals},
      {"6 design development", criterion_design},
      {"7 optical orthogonal codes", criterion_ooc},
      {"8 small-order database", criterion_db},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << r.detail;
    if (!r.ok) std::cout << " [first failure: " << r.first_failure << "]";
    std::cout << std::endl;
    failed += r.ok ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (8 - failed) << "/8" << std::endl;
  return failed ? 1 : 0;
}
