#pragma once

// Families for the orders below the closed-form constructions' reach,
// stored as a versioned JSON document:
//   {"version": 1, "seed": s, "entries": [{"v": 13, "kind": "cdf", "blocks": [[0,1,3,9]]}, ...]}

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdf/core.hpp"

namespace cdf {

class SmallOrderDB {
 public:
  static constexpr int kVersion = 1;

  // Throws Error(verification_failed) if the family does not verify.
  void insert(DifferenceFamily family);
  const DifferenceFamily* find(Residue v) const;
  const std::map<Residue, DifferenceFamily>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<std::uint64_t> seed;

  // One entry per line, ascending v; byte-stable for equal contents.
  std::string to_json() const;
  // Throws Error(parse) on malformed input; every entry is re-verified.
  static SmallOrderDB from_json(std::string_view text);

 private:
  std::map<Residue, DifferenceFamily> entries_;
};

// Every (v, kind) the dispatchers delegate to the database:
// v = 1 (mod 12), 13 <= v <= 205, v != 25, and v = 4 (mod 12), 40 <= v <= 208.
std::vector<std::pair<Residue, FamilyKind>> required_small_orders();

// Orders not in the database that required_small_orders() expects.
std::vector<Residue> missing_orders(const SmallOrderDB& db);

// Database compiled into the library, or the file named by $CDF_DB_PATH.
const SmallOrderDB& default_db();

// Text of the compiled-in database document.
std::string_view embedded_db_json();

}  // namespace cdf
