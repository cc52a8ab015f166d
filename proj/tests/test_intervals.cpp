#include <set>
#include <string>

#include "cdf/constructions.hpp"
#include "cdf/intervals.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "printed_table.hpp"

using namespace cdf;

namespace {

std::set<std::int64_t> expand(const IntervalExpr& e, std::int64_t t) {
  std::set<std::int64_t> out;
  for (auto x = e.lo.at(t); x <= e.hi.at(t); x += e.step) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("interval report reproduces the printed Yang-Lin table") {
  const auto forms = yang_lin_forms();
  const auto report = interval_report(forms, LinearExpr{72, 1}, 1);
  REQUIRE(report.entries.size() == 36);
  for (std::size_t i = 0; i < 36; ++i) {
    CAPTURE(i);
    const auto& e = report.entries[i];
    CHECK(difference_to_string(e) == printed::kYangLinTable[i].difference);
    CHECK(to_string(e.positive) == printed::kYangLinTable[i].positive);
    if (*printed::kYangLinTable[i].folded) {
      REQUIRE(e.folded.has_value());
      CHECK(to_string(*e.folded) == printed::kYangLinTable[i].folded);
    } else {
      CHECK_FALSE(e.folded.has_value());
    }
    CHECK_FALSE(e.empty);
    CHECK_FALSE(e.straddles);
  }
  CHECK(report.disjoint);
  CHECK_FALSE(report.overlap.has_value());
  CHECK(report.flagged.empty());
}

TEST_CASE("interval report single examples") {
  const auto forms = yang_lin_forms();
  const auto report = interval_report(forms, LinearExpr{72, 1}, 1);
  const auto& a = report.entries[0];
  CHECK(a.positive == IntervalExpr{{43, 1}, {44, -1}, 1});
  CHECK(*a.folded == IntervalExpr{{28, 2}, {29, 0}, 1});
  const auto& c6 = report.entries[32];
  CHECK(c6.positive == IntervalExpr{{0, 3}, {3, -3}, 3});
}

TEST_CASE("intervals match brute-force differences of the blocks") {
  // Numeric oracle: the union of the reported +-classes equals the set of
  // differences of the actual Yang-Lin blocks, for several t.
  const auto forms = yang_lin_forms();
  const auto report = interval_report(forms, LinearExpr{72, 1}, 1);
  for (std::int64_t t = 1; t <= 12; ++t) {
    const std::int64_t v = 72 * t + 1;
    std::multiset<std::int64_t> classes;
    for (const auto& e : report.entries) {
      const auto& iv = e.folded ? *e.folded : e.positive;
      for (auto x : expand(iv, t)) classes.insert(x);
    }
    oracle::Blocks blocks;
    const auto family = yang_lin_cdp(t);
    for (const auto& b : family.blocks()) blocks.emplace_back(b.elements().begin(), b.elements().end());
    const auto counts = oracle::difference_counts(blocks, v);
    std::multiset<std::int64_t> brute;
    for (std::int64_t d = 1; d <= (v - 1) / 2; ++d)
      for (int c = 0; c < counts[static_cast<std::size_t>(d)]; ++c) brute.insert(d);
    CHECK(classes == brute);
  }
}

TEST_CASE("identical forms overlap") {
  const auto forms = yang_lin_forms();
  std::vector<BlockForm> twice{forms[2], forms[2]};
  const auto report = interval_report(twice, LinearExpr{72, 1}, 1);
  CHECK_FALSE(report.disjoint);
  REQUIRE(report.overlap.has_value());
  CHECK(report.overlap_t.has_value());
}

TEST_CASE("shortened ranges used by the constructors stay disjoint") {
  // [1, t-2] as a closed range; the floor(t/2) hole only removes values.
  auto forms = yang_lin_forms();
  for (auto& f : forms) {
    f.index_lo = {0, 1};
    f.index_hi = {1, -2};
  }
  const auto report = interval_report(forms, LinearExpr{72, 1}, 3);
  CHECK(report.disjoint);
}

TEST_CASE("an interval empty for all t is flagged, not fatal") {
  BlockForm f{{1, 0}, {2, 0}, {3, 0}, {0, 5}, {0, 2}};  // i in [5, 2]
  const auto report = interval_report(std::vector<BlockForm>{f}, LinearExpr{72, 1}, 1);
  CHECK(report.entries.size() == 6);
  CHECK(report.entries[0].empty);
  CHECK_FALSE(report.flagged.empty());
}

TEST_CASE("linear expressions print the way the table does") {
  CHECK(to_string(LinearExpr{43, 1}) == "43t+1");
  CHECK(to_string(LinearExpr{3, 0}) == "3t");
  CHECK(to_string(LinearExpr{1, -2}) == "t-2");
  CHECK(to_string(LinearExpr{0, -1}) == "-1");
  CHECK(to_string(IntervalExpr{{31, 3}, {33, -1}, 2}) == "[31t+3,33t-1]_2");
}
