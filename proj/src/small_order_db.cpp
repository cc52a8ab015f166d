#include "cdf/small_order_db.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cdf {

void SmallOrderDB::insert(DifferenceFamily family) {
  if (auto verdict = verify_family(family); !verdict)
    throw Error(Errc::verification_failed,
                "database entry v=" + std::to_string(family.v()) + " does not verify: " + verdict.detail);
  const Residue v = family.v();
  entries_.insert_or_assign(v, std::move(family));
}

const DifferenceFamily* SmallOrderDB::find(Residue v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string SmallOrderDB::to_json() const {
  std::ostringstream os;
  os << "{\n  \"version\": " << kVersion << ",\n";
  if (seed) os << "  \"seed\": " << *seed << ",\n";
  os << "  \"entries\": [";
  bool first = true;
  for (const auto& [v, fam] : entries_) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : fam.blocks()) blocks.push_back(std::vector<Residue>(b.elements().begin(), b.elements().end()));
    os << (first ? "\n" : ",\n") << "    {\"v\": " << v << ", \"kind\": \"" << to_string(fam.kind())
       << "\", \"blocks\": " << blocks.dump() << "}";
    first = false;
  }
  os << "\n  ]\n}\n";
  return os.str();
}

SmallOrderDB SmallOrderDB::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("small-order database: ") + e.what());
  }
  SmallOrderDB db;
  try {
    if (doc.at("version").get<int>() != kVersion)
      throw Error(Errc::parse, "small-order database: unsupported version");
    if (doc.contains("seed")) db.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& entry : doc.at("entries")) {
      const auto v = entry.at("v").get<Residue>();
      const auto kind = parse_kind(entry.at("kind").get<std::string>());
      if (!kind) throw Error(Errc::parse, "small-order database: unknown kind for v=" + std::to_string(v));
      std::vector<BaseBlock> blocks;
      for (const auto& b : entry.at("blocks")) blocks.emplace_back(b.get<std::vector<Residue>>(), v);
      db.insert(DifferenceFamily(DesignParams{v, 4, *kind}, std::move(blocks)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("small-order database: ") + e.what());
  }
  return db;
}

std::vector<std::pair<Residue, FamilyKind>> required_small_orders() {
  std::vector<std::pair<Residue, FamilyKind>> out;
  for (Residue v = 13; v <= 205; v += 12)
    if (v != 25) out.emplace_back(v, FamilyKind::CDF);
  for (Residue v = 40; v <= 208; v += 12) out.emplace_back(v, FamilyKind::QuotientCDF);
  return out;
}

std::vector<Residue> missing_orders(const SmallOrderDB& db) {
  std::vector<Residue> out;
  for (const auto& [v, kind] : required_small_orders()) {
    const auto* fam = db.find(v);
    if (!fam || fam->kind() != kind) out.push_back(v);
  }
  return out;
}

const SmallOrderDB& default_db() {
  static const SmallOrderDB db = [] {
    if (const char* path = std::getenv("CDF_DB_PATH"); path && *path) {
      std::ifstream in(path);
      if (!in) throw Error(Errc::io, std::string("cannot open CDF_DB_PATH ") + path);
      std::stringstream ss;
      ss << in.rdbuf();
      return SmallOrderDB::from_json(ss.str());
    }
    return SmallOrderDB::from_json(embedded_db_json());
  }();
  return db;
}

}  // namespace cdf
