#include "cdf/constructions.hpp"
#include "cdf/search.hpp"
#include "cdf/small_order_db.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace cdf;
using testsupport::rows;

TEST_CASE("exhaustive search finds the least (13,4,1)-CDF") {
  auto out = exhaustive_search(13, FamilyKind::CDF);
  REQUIRE(out.status == SearchStatus::Found);
  REQUIRE(out.family->blocks().size() == 1);
  CHECK(out.family->blocks()[0].sorted() == BaseBlock({0, 1, 3, 9}, 13));

  // brute force over all 4-subsets containing 0: the lexicographically least
  // perfect difference set
  std::vector<Residue> least;
  for (Residue a = 1; a < 13 && least.empty(); ++a)
    for (Residue b = a + 1; b < 13 && least.empty(); ++b)
      for (Residue c = b + 1; c < 13 && least.empty(); ++c)
        if (oracle::is_family_with_leave({{0, a, b, c}}, 13, {0})) least = {0, a, b, c};
  CHECK(least == std::vector<Residue>{0, 1, 3, 9});
}

TEST_CASE("nonexistence of the three exceptions") {
  for (auto [v, kind] : {std::pair{Residue{25}, FamilyKind::CDF}, std::pair{Residue{16}, FamilyKind::QuotientCDF},
                         std::pair{Residue{28}, FamilyKind::QuotientCDF}}) {
    CAPTURE(v);
    auto out = exhaustive_search(v, kind);
    CHECK(out.status == SearchStatus::ExhaustedNonexistent);
    CHECK_FALSE(out.reductions.empty());
  }
}

TEST_CASE("reductions agree with the reference enumerator") {
  for (auto [v, kind] : {std::pair{Residue{13}, FamilyKind::CDF}, std::pair{Residue{16}, FamilyKind::QuotientCDF},
                         std::pair{Residue{25}, FamilyKind::CDF}, std::pair{Residue{28}, FamilyKind::QuotientCDF},
                         std::pair{Residue{37}, FamilyKind::CDF}, std::pair{Residue{40}, FamilyKind::QuotientCDF}}) {
    CAPTURE(v);
    auto fast = exhaustive_search(v, kind);
    auto ref = reference_enumeration(v, 4, kind);
    CHECK(fast.status != SearchStatus::BudgetExceeded);
    CHECK(fast.status == ref.status);
    if (ref.family) CHECK(verify_family(*ref.family).valid);
  }
}

TEST_CASE("reference enumerator handles other block sizes") {
  // (7,3,1) and (13,3,1) exist; (9,3,1) is inadmissible for a CDF
  CHECK(reference_enumeration(7, 3, FamilyKind::CDF).status == SearchStatus::Found);
  CHECK(reference_enumeration(13, 3, FamilyKind::CDF).status == SearchStatus::Found);
  CHECK_THROWS_AS(reference_enumeration(9, 3, FamilyKind::CDF), Error);
}

TEST_CASE("budget is never reported as nonexistence") {
  auto out = exhaustive_search(37, FamilyKind::CDF, 1);
  CHECK(out.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(out.family.has_value());
}

TEST_CASE("the extended Yang-Lin packing at v=73 cannot be completed") {
  SearchProblem p;
  p.v = 73;
  p.kind = FamilyKind::CDF;
  const auto ext = extend_yang_lin(1);
  p.fixed = ext.blocks();
  p.add = 2;
  auto out = complete_family(p);
  CHECK(out.status == SearchStatus::ExhaustedNonexistent);

  // Oracle: no two blocks through 0 whose differences tile the leave.
  const auto leave = oracle::leave(rows(ext), 73);
  std::set<Residue> open(leave.begin() + 1, leave.end());
  std::vector<std::vector<Residue>> fits;
  for (Residue a = 1; a < 73; ++a)
    for (Residue b = a + 1; b < 73; ++b)
      for (Residue c = b + 1; c < 73; ++c) {
        std::vector<Residue> blk{0, a, b, c};
        bool ok = true;
        std::set<Residue> seen;
        for (auto x : blk)
          for (auto y : blk)
            if (x != y) {
              const Residue d = oracle::md(x - y, 73);
              ok = ok && open.count(d) && seen.insert(d).second;
            }
        if (ok) fits.push_back(blk);
      }
  bool completable = false;
  for (std::size_t i = 0; i < fits.size() && !completable; ++i)
    for (std::size_t j = i; j < fits.size() && !completable; ++j) {
      auto all = rows(ext);
      all.push_back(fits[i]);
      all.push_back(fits[j]);
      completable = oracle::is_family_with_leave(all, 73, {0});
    }
  CHECK_FALSE(completable);
}

TEST_CASE("a complete family needs no search") {
  SearchProblem p;
  p.v = 217;
  p.kind = FamilyKind::CDF;
  p.fixed = cdf_72t_plus_1(3).blocks();
  p.add = 0;
  auto out = complete_family(p);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.family->same_blocks_as(cdf_72t_plus_1(3)));
  CHECK(out.stats.nodes == 0);
}

TEST_CASE("inconsistent problems are rejected before search") {
  SearchProblem p;
  p.v = 37;
  p.kind = FamilyKind::CDF;
  p.fixed = {BaseBlock({0, 1, 2, 4}, 37)};
  p.add = 2;
  CHECK_THROWS_AS(complete_family(p), Error);

  p.fixed = {BaseBlock({0, 1, 3, 9}, 37)};
  p.add = 5;  // too many blocks for the classes left
  CHECK_THROWS_AS(complete_family(p), Error);

  p.fixed = {};
  p.add = 3;
  p.target_leave = std::vector<Residue>{0, 5};  // not closed under negation
  CHECK_THROWS_AS(complete_family(p), Error);
}

TEST_CASE("packing search without a target leave") {
  // three blocks over Z_50 is a packing that cannot be a family
  SearchProblem p;
  p.v = 50;
  p.kind = FamilyKind::CDP;
  p.add = 3;
  auto out = complete_family(p);
  REQUIRE(out.status == SearchStatus::Found);
  CHECK(out.family->blocks().size() == 3);
  CHECK(oracle::is_packing(rows(*out.family), 50));
}

TEST_CASE("randomized search is deterministic for a seed") {
  SearchProblem p;
  p.v = 109;
  p.kind = FamilyKind::CDF;
  p.add = 9;
  p.limits.randomize = true;
  p.limits.seed = 42;
  p.limits.node_budget = 200'000;
  auto a = complete_family(p);
  auto b = complete_family(p);
  CHECK(a.status == b.status);
  CHECK(a.stats == b.stats);
  if (a.family) {
    CHECK(a.family->blocks() == b.family->blocks());
    CHECK(oracle::is_family_with_leave(rows(*a.family), 109, {0}));
  }
}

TEST_CASE("luby sequence") {
  const std::uint64_t want[] = {1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8, 1};
  for (std::uint64_t i = 1; i <= 16; ++i) CHECK(luby(i) == want[i - 1]);
}

TEST_CASE("required small orders") {
  const auto req = required_small_orders();
  std::size_t cdf = 0, quotient = 0;
  for (auto [v, kind] : req) {
    if (kind == FamilyKind::CDF) {
      CHECK(v % 12 == 1);
      CHECK(v != 25);
      CHECK((v >= 13 && v <= 205));
      ++cdf;
    } else {
      CHECK(v % 12 == 4);
      CHECK((v >= 40 && v <= 208));
      ++quotient;
    }
  }
  CHECK(cdf == 16);       // 13..205 step 12 is 17 orders, minus 25
  CHECK(quotient == 15);  // 40..208
}

TEST_CASE("embedded database is complete and re-verifies") {
  const auto db = SmallOrderDB::from_json(embedded_db_json());
  CHECK(missing_orders(db).empty());
  for (const auto& [v, f] : db.entries()) {
    CAPTURE(v);
    const auto leave = f.kind() == FamilyKind::CDF ? std::vector<Residue>{0} : oracle::quotient_leave(v);
    CHECK(oracle::is_family_with_leave(rows(f), v, leave));
  }
  CHECK(db.to_json() == std::string(embedded_db_json()));
}

TEST_CASE("database rejects tampered entries") {
  std::string bad = R"({"version": 1, "entries": [{"v": 13, "kind": "cdf", "blocks": [[0,1,2,4]]}]})";
  CHECK_THROWS_AS(SmallOrderDB::from_json(bad), Error);
  CHECK_THROWS_AS(SmallOrderDB::from_json("{not json"), Error);
  CHECK_THROWS_AS(SmallOrderDB::from_json(R"({"version": 9, "entries": []})"), Error);
}
