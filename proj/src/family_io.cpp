#include "cdf/family_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace cdf {
namespace {

std::vector<Residue> as_vector(const BaseBlock& b) { return {b.elements().begin(), b.elements().end()}; }

std::string blocks_json(const std::vector<std::vector<Residue>>& blocks) {
  std::string out = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += nlohmann::json(blocks[i]).dump();
  }
  out += blocks.empty() ? "]" : "\n  ]";
  return out;
}

Residue parse_int(std::string_view s, std::string_view what) {
  Residue value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error(Errc::parse, "bad integer '" + std::string(s) + "' in " + std::string(what));
  return value;
}

FamilyDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("malformed JSON: ") + e.what());
  }
  FamilyDocument doc;
  try {
    if (j.contains("version") && j.at("version").get<int>() != FamilyDocument::kVersion)
      throw Error(Errc::parse, "unsupported document version " + j.at("version").dump());
    doc.v = j.at("v").get<Residue>();
    doc.k = j.value("k", 4);
    const auto kind = parse_document_kind(j.at("kind").get<std::string>());
    if (!kind) throw Error(Errc::parse, "unknown kind " + j.at("kind").dump());
    doc.kind = *kind;
    doc.blocks = j.at("blocks").get<std::vector<std::vector<Residue>>>();
    if (j.contains("leave")) doc.leave = j.at("leave").get<std::vector<Residue>>();
    doc.provenance = j.value("provenance", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("bad family document: ") + e.what());
  }
  if (doc.v < 1) throw Error(Errc::parse, "v must be positive");
  return doc;
}

FamilyDocument parse_text(std::string_view text) {
  FamilyDocument doc;
  bool have_v = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream ls(line.substr(first + 1));
      std::string tok;
      while (ls >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key == "provenance") {
          // Runs to the end of the line.
          std::string rest;
          std::getline(ls, rest);
          doc.provenance = value + rest;
          while (!doc.provenance.empty() && std::isspace(static_cast<unsigned char>(doc.provenance.back())))
            doc.provenance.pop_back();
          break;
        }
        if (key == "v") {
          doc.v = parse_int(value, "header v");
          have_v = true;
        } else if (key == "k") {
          doc.k = static_cast<int>(parse_int(value, "header k"));
        } else if (key == "kind") {
          auto kind = parse_document_kind(value);
          if (!kind) throw Error(Errc::parse, "unknown kind '" + value + "'");
          doc.kind = *kind;
        }
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<Residue> block;
    std::string tok;
    while (ls >> tok) block.push_back(parse_int(tok, "block line"));
    doc.blocks.push_back(std::move(block));
  }
  if (!have_v) throw Error(Errc::parse, "text document lacks a '# v=...' header");
  if (doc.v < 1) throw Error(Errc::parse, "v must be positive");
  return doc;
}

bool is_short_orbit(const BaseBlock& b, Residue v) {
  const BaseBlock s = b.sorted();
  for (Residue e : s.elements())
    if (e != s[0] && s.translated(e - s[0], v).sorted() == s) return true;
  return false;
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::CDP: return "cdp";
    case DocumentKind::CDF: return "cdf";
    case DocumentKind::QuotientCDF: return "quotient";
    case DocumentKind::Design: return "design";
  }
  return "?";
}

std::optional<DocumentKind> parse_document_kind(std::string_view name) {
  if (name == "design") return DocumentKind::Design;
  if (auto k = parse_kind(name)) {
    switch (*k) {
      case FamilyKind::CDP: return DocumentKind::CDP;
      case FamilyKind::CDF: return DocumentKind::CDF;
      case FamilyKind::QuotientCDF: return DocumentKind::QuotientCDF;
    }
  }
  return std::nullopt;
}

FamilyDocument make_document(const DifferenceFamily& family, std::string provenance) {
  FamilyDocument doc;
  doc.v = family.v();
  doc.k = family.k();
  doc.kind = *parse_document_kind(to_string(family.kind()));
  for (const auto& b : family.blocks()) doc.blocks.push_back(as_vector(b));
  doc.leave = family.leave();
  doc.provenance = std::move(provenance);
  return doc;
}

FamilyDocument make_document(const DesignBaseBlocks& design, std::string provenance) {
  FamilyDocument doc;
  doc.v = design.v;
  doc.k = design.blocks.empty() ? 4 : static_cast<int>(design.blocks.front().size());
  doc.kind = DocumentKind::Design;
  CoverageMap cov(design.v);
  for (const auto& b : design.blocks) {
    doc.blocks.push_back(as_vector(b));
    if (!is_short_orbit(b, design.v)) cov.add(b);
  }
  doc.leave = cov.leave();
  doc.provenance = std::move(provenance);
  return doc;
}

std::vector<BaseBlock> to_base_blocks(const FamilyDocument& doc) {
  std::vector<BaseBlock> out;
  out.reserve(doc.blocks.size());
  for (const auto& b : doc.blocks) out.emplace_back(b, doc.v);
  return out;
}

DifferenceFamily to_family(const FamilyDocument& doc) {
  FamilyKind kind = FamilyKind::CDP;
  switch (doc.kind) {
    case DocumentKind::CDP: kind = FamilyKind::CDP; break;
    case DocumentKind::CDF: kind = FamilyKind::CDF; break;
    case DocumentKind::QuotientCDF: kind = FamilyKind::QuotientCDF; break;
    case DocumentKind::Design: throw Error(Errc::domain, "a design document is not a difference family");
  }
  return DifferenceFamily(DesignParams{doc.v, doc.k, kind}, to_base_blocks(doc));
}

std::string to_json(const FamilyDocument& doc) {
  std::ostringstream os;
  os << "{\n  \"version\": " << FamilyDocument::kVersion << ",\n  \"v\": " << doc.v << ",\n  \"k\": " << doc.k
     << ",\n  \"kind\": \"" << to_string(doc.kind) << "\",\n  \"blocks\": " << blocks_json(doc.blocks)
     << ",\n  \"leave\": " << nlohmann::json(doc.leave).dump()
     << ",\n  \"provenance\": " << nlohmann::json(doc.provenance).dump() << "\n}\n";
  return os.str();
}

std::string to_text(const FamilyDocument& doc) {
  std::ostringstream os;
  os << "# v=" << doc.v << " k=" << doc.k << " kind=" << to_string(doc.kind) << " blocks=" << doc.blocks.size()
     << '\n';
  if (!doc.provenance.empty()) os << "# provenance=" << doc.provenance << '\n';
  for (const auto& b : doc.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
    os << '\n';
  }
  return os.str();
}

FamilyDocument parse_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(Errc::parse, "empty document");
  return text[first] == '{' ? parse_json(text) : parse_text(text);
}

std::string code_to_json(const OpticalCode& code, std::string_view provenance) {
  std::vector<std::vector<Residue>> words;
  for (const auto& w : code.codewords) words.push_back(w.support);
  std::ostringstream os;
  os << "{\n  \"version\": 1,\n  \"v\": " << code.v << ",\n  \"k\": " << code.k
     << ",\n  \"codewords\": " << blocks_json(words) << ",\n  \"optimal\": " << (is_optimal(code) ? "true" : "false")
     << ",\n  \"provenance\": " << nlohmann::json(std::string(provenance)).dump() << "\n}\n";
  return os.str();
}

}  // namespace cdf
