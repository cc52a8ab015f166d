#include <variant>

#include "cdf/constructions.hpp"
#include "cdf/family_io.hpp"
#include "doctest.h"

using namespace cdf;

TEST_CASE("JSON round trip is lossless over a sweep") {
  for (Residue v = 1; v <= 400; ++v) {
    if (v % 12 != 1 && v % 12 != 4) continue;
    if (is_known_nonexistent(v)) continue;
    CAPTURE(v);
    const auto doc = make_document(std::get<DifferenceFamily>(construct_family(v)), "construct");
    const auto back = parse_document(to_json(doc));
    CHECK(back == doc);
    CHECK(verify_family(to_family(back)).valid);

    const auto text = parse_document(to_text(doc));
    CHECK(text.v == doc.v);
    CHECK(text.kind == doc.kind);
    CHECK(text.blocks == doc.blocks);
    CHECK(text.provenance == doc.provenance);
  }
}

TEST_CASE("design documents") {
  const auto d = std::get<DesignBaseBlocks>(construct_design(220));
  const auto doc = make_document(d, "design");
  CHECK(doc.kind == DocumentKind::Design);
  CHECK(doc.blocks.size() == 19);
  CHECK(doc.leave == std::vector<Residue>{0, 55, 110, 165});
  CHECK(parse_document(to_json(doc)) == doc);
  CHECK_THROWS_AS(to_family(doc), Error);
  CHECK(to_base_blocks(doc).size() == 19);
}

TEST_CASE("text format") {
  const std::string text = "# v=13 k=4 kind=cdf\n# provenance=hand typed\n\n0 1 3 9\n";
  const auto doc = parse_document(text);
  CHECK(doc.v == 13);
  CHECK(doc.kind == DocumentKind::CDF);
  CHECK(doc.provenance == "hand typed");
  CHECK(doc.blocks == std::vector<std::vector<Residue>>{{0, 1, 3, 9}});
  CHECK(to_text(doc) == "# v=13 k=4 kind=cdf blocks=1\n# provenance=hand typed\n0 1 3 9\n");
}

TEST_CASE("malformed documents") {
  auto parse_code = [](const std::string& s) {
    try {
      parse_document(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io;  // sentinel: no error
  };
  CHECK(parse_code("") == Errc::parse);
  CHECK(parse_code("{\"v\": 13") == Errc::parse);
  CHECK(parse_code("{\"v\": 13, \"kind\": \"cdf\"}") == Errc::parse);
  CHECK(parse_code("{\"v\": 13, \"kind\": \"nope\", \"blocks\": []}") == Errc::parse);
  CHECK(parse_code("{\"version\": 2, \"v\": 13, \"kind\": \"cdf\", \"blocks\": []}") == Errc::parse);
  CHECK(parse_code("0 1 3 9\n") == Errc::parse);
  CHECK(parse_code("# v=13\n0 1 x 9\n") == Errc::parse);
  CHECK(parse_code("# v=0\n") == Errc::parse);
  // structurally fine, invalid block: caught on use
  const auto doc = parse_document("# v=13 kind=cdf\n0 1 1 9\n");
  CHECK_THROWS_AS(to_family(doc), Error);
}

TEST_CASE("code export") {
  const auto code = to_code(std::get<DifferenceFamily>(construct_cdf(13)));
  const auto json = code_to_json(code, "construct");
  CHECK(json.find("\"codewords\"") != std::string::npos);
  CHECK(json.find("\"optimal\": true") != std::string::npos);
}
