#pragma once

// FamilyDocument: the on-disk form of a family or of a design's base blocks.
//
// JSON (version 1):
//   {"version": 1, "v": 13, "k": 4, "kind": "cdf",
//    "blocks": [[0,1,3,9]], "leave": [0], "provenance": "construct"}
// kind is one of cdp, cdf, quotient, design.
//
// Text: '#' header lines carrying key=value pairs (v, k, kind, provenance),
// then one block per line as whitespace-separated residues:
//   # v=13 k=4 kind=cdf
//   # provenance=construct
//   0 1 3 9

#include <string>
#include <string_view>
#include <vector>

#include "cdf/constructions.hpp"
#include "cdf/core.hpp"
#include "cdf/ooc.hpp"

namespace cdf {

enum class DocumentKind { CDP, CDF, QuotientCDF, Design };

std::string_view to_string(DocumentKind kind);
std::optional<DocumentKind> parse_document_kind(std::string_view name);

struct FamilyDocument {
  static constexpr int kVersion = 1;

  Residue v = 0;
  int k = 4;
  DocumentKind kind = DocumentKind::CDP;
  std::vector<std::vector<Residue>> blocks;  // as written; validated on use
  std::vector<Residue> leave;
  std::string provenance;

  friend bool operator==(const FamilyDocument&, const FamilyDocument&) = default;
};

FamilyDocument make_document(const DifferenceFamily& family, std::string provenance);
FamilyDocument make_document(const DesignBaseBlocks& design, std::string provenance);

// Throws Error(invalid_block) for malformed blocks, Error(domain) for a design document.
DifferenceFamily to_family(const FamilyDocument& doc);
// Base blocks of the document (any kind) without checking k.
std::vector<BaseBlock> to_base_blocks(const FamilyDocument& doc);

std::string to_json(const FamilyDocument& doc);
std::string to_text(const FamilyDocument& doc);
// Accepts either format (JSON when the first non-space character is '{').
// Throws Error(parse).
FamilyDocument parse_document(std::string_view text);

// {"version": 1, "v": .., "k": .., "codewords": [[...]], "optimal": bool, "provenance": ".."}
std::string code_to_json(const OpticalCode& code, std::string_view provenance);

}  // namespace cdf
