// cdftool: construct, verify, search and export cyclic (v,4,1) designs.
// Talks to the library only through the C interface.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdf/cdf.h"

namespace {

// Exit codes; stable, listed in the README.
enum Exit : int {
  kOk = 0,
  kFail = 1,
  kNonexistent = 2,
  kInadmissible = 3,
  kMalformed = 4,
  kBudget = 5,
  kIo = 6,
};

struct FamilyDeleter {
  void operator()(cdf_family* f) const { cdf_family_free(f); }
};
struct CodeDeleter {
  void operator()(cdf_code* c) const { cdf_code_free(c); }
};
using Family = std::unique_ptr<cdf_family, FamilyDeleter>;
using Code = std::unique_ptr<cdf_code, CodeDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  cdf_string_free(s);
  return out;
}

int exit_for(cdf_status s) {
  switch (s) {
    case CDF_OK: return kOk;
    case CDF_NONEXISTENT: return kNonexistent;
    case CDF_INADMISSIBLE: return kInadmissible;
    case CDF_PARSE:
    case CDF_INVALID_ARGUMENT: return kMalformed;
    case CDF_BUDGET_EXCEEDED: return kBudget;
    case CDF_IO: return kIo;
    default: return kFail;
  }
}

int report_error(const std::string& what, cdf_status s) {
  std::cerr << "error: " << what << ": " << cdf_status_name(s);
  if (*cdf_last_error()) std::cerr << ": " << cdf_last_error();
  std::cerr << '\n';
  return exit_for(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Writes to path, or stdout when path is empty.
int emit(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data)) {
    std::cerr << "error: cannot write " << path << '\n';
    return kIo;
  }
  return kOk;
}

int load_family(const std::string& path, Family& out) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << '\n';
    return kIo;
  }
  cdf_family* f = nullptr;
  if (auto s = cdf_family_parse(text.c_str(), &f); s != CDF_OK) {
    report_error("malformed family file " + path, s);
    return kMalformed;
  }
  out.reset(f);
  return kOk;
}

std::string serialize(const cdf_family* f, const std::string& format) {
  char* s = nullptr;
  const auto st = format == "text" ? cdf_family_to_text(f, &s) : cdf_family_to_json(f, &s);
  return st == CDF_OK ? take(s) : std::string{};
}

const std::map<std::string, cdf_kind> kKinds{{"auto", CDF_KIND_AUTO},       {"cdf", CDF_KIND_CDF},
                                             {"quotient", CDF_KIND_QUOTIENT}, {"design", CDF_KIND_DESIGN},
                                             {"cdp", CDF_KIND_CDP}};

std::string describe(const cdf_report& r) {
  std::ostringstream os;
  os << r.reason;
  if (r.witness_count == 1) os << " witness=" << r.witness[0];
  if (r.witness_count == 2) os << " witness=(" << r.witness[0] << "," << r.witness[1] << ")";
  if (*r.detail) os << " (" << r.detail << ")";
  return os.str();
}

// ---- construct ----

struct ConstructArgs {
  int64_t v = 0;
  std::string kind = "auto";
  std::string out;
  std::string format = "json";
};

int cmd_construct(const ConstructArgs& a) {
  if (a.v < 1) {
    std::cerr << "error: v must be positive\n";
    return kMalformed;
  }
  const bool ooc = a.kind == "ooc";
  cdf_family* raw = nullptr;
  const cdf_status s = cdf_construct(a.v, ooc ? CDF_KIND_AUTO : kKinds.at(a.kind), &raw);
  if (s == CDF_NONEXISTENT) {
    std::cerr << "v=" << a.v << ": NONEXISTENT; no cyclic (v,4,1)-design exists for v in {16, 25, 28}\n";
    return kNonexistent;
  }
  if (s == CDF_INADMISSIBLE) {
    std::cerr << "v=" << a.v << ": INADMISSIBLE for kind " << a.kind << "; need v = 1 or 4 (mod 12)\n";
    return kInadmissible;
  }
  if (s != CDF_OK) return report_error("construct " + std::to_string(a.v), s);
  Family f(raw);
  if (!ooc) return emit(a.out, serialize(f.get(), a.format));

  cdf_code* c = nullptr;
  if (auto cs = cdf_code_from_family(f.get(), &c); cs != CDF_OK) return report_error("ooc", cs);
  Code code(c);
  char* text = nullptr;
  const auto ts = a.format == "text" ? cdf_code_to_dense(code.get(), &text) : cdf_code_to_json(code.get(), &text);
  if (ts != CDF_OK) return report_error("ooc export", ts);
  return emit(a.out, take(text));
}

// ---- verify ----

struct VerifyArgs {
  std::string path;
  std::string kind;
  bool develop = false;
};

int cmd_verify(const VerifyArgs& a) {
  Family f;
  if (int rc = load_family(a.path, f)) return rc;
  if (!a.kind.empty()) {
    cdf_family* g = nullptr;
    if (auto s = cdf_family_with_kind(f.get(), kKinds.at(a.kind), &g); s != CDF_OK)
      return report_error("--kind", s);
    f.reset(g);
  }
  cdf_report r{};
  if (auto s = cdf_verify(f.get(), &r); s != CDF_OK) return report_error("verify", s);
  const std::string reason = r.reason;
  if (!r.valid) {
    std::cout << "FAIL " << describe(r) << '\n';
    return reason == "invalid-block" ? kMalformed : kFail;
  }
  std::cout << "PASS family v=" << cdf_family_v(f.get()) << " blocks=" << cdf_family_block_count(f.get()) << '\n';
  if (!a.develop) return kOk;
  if (auto s = cdf_verify_design(f.get(), &r); s != CDF_OK) return report_error("develop", s);
  if (!r.valid) {
    std::cout << "FAIL design " << describe(r) << '\n';
    return kFail;
  }
  std::cout << "PASS design, " << r.blocks_checked << " blocks checked\n";
  return kOk;
}

// ---- sweep ----

struct SweepArgs {
  int64_t vmin = 0;
  int64_t vmax = 0;
  std::string kind = "auto";
  bool develop = false;
};

int cmd_sweep(const SweepArgs& a) {
  std::size_t pass = 0, nonexistent = 0, failed = 0;
  for (int64_t v = std::max<int64_t>(a.vmin, 1); v <= a.vmax; ++v) {
    const auto r = v % 12;
    if (!(a.kind == "auto" || a.kind == "design" || (a.kind == "cdf" && r == 1) || (a.kind == "quotient" && r == 4)))
      continue;
    if (r != 1 && r != 4) continue;
    cdf_family* raw = nullptr;
    const cdf_status s = cdf_construct(v, kKinds.at(a.kind), &raw);
    if (s == CDF_NONEXISTENT) {
      std::cout << "v=" << v << " NONEXISTENT\n";
      ++nonexistent;
      continue;
    }
    if (s != CDF_OK) {
      std::cout << "v=" << v << " FAIL " << cdf_status_name(s) << ": " << cdf_last_error() << '\n';
      ++failed;
      continue;
    }
    Family f(raw);
    cdf_report rep{};
    cdf_verify(f.get(), &rep);
    if (rep.valid && a.develop) cdf_verify_design(f.get(), &rep);
    if (!rep.valid) {
      std::cout << "v=" << v << " FAIL " << describe(rep) << '\n';
      ++failed;
      continue;
    }
    std::cout << "v=" << v << " PASS blocks=" << cdf_family_block_count(f.get()) << " source=" << cdf_family_provenance(f.get()) << '\n';
    ++pass;
  }
  std::cout << "summary pass=" << pass << " nonexistent=" << nonexistent << " fail=" << failed << '\n';
  return failed ? kFail : kOk;
}

// ---- search ----

struct SearchArgs {
  int64_t v = 0;
  std::string kind = "auto";
  bool exhaustive = false;
  bool reference = false;
  std::string fixed;
  int64_t add = -1;
  uint64_t seed = 0;
  bool randomize = false;
  uint64_t budget = 0;
  std::string out;
  std::string format = "json";
};

std::string stats_line(const cdf_search_stats& st) {
  std::ostringstream os;
  os << "nodes=" << st.nodes << " max_depth=" << st.max_depth << " ms=" << st.wall_ms;
  return os.str();
}

int cmd_search(const SearchArgs& a) {
  if (a.v < 1) {
    std::cerr << "error: v must be positive\n";
    return kMalformed;
  }
  const cdf_kind kind = kKinds.at(a.kind);
  cdf_family* raw = nullptr;
  cdf_search_stats st{};
  cdf_status s;
  std::string reductions;
  if (a.exhaustive || a.reference) {
    if (a.reference) {
      s = cdf_search_reference(a.v, 4, kind, a.budget, &raw, &st);
      reductions = "none (reference enumeration over all 4-subsets)\n";
    } else {
      char* red = nullptr;
      s = cdf_search_exhaustive(a.v, kind, a.budget, &raw, &st, &red);
      reductions = take(red);
    }
  } else {
    Family fixed;
    if (!a.fixed.empty())
      if (int rc = load_family(a.fixed, fixed)) return rc;
    std::size_t add = 0;
    if (a.add >= 0) {
      add = static_cast<std::size_t>(a.add);
    } else {
      // Fill up to the kind's block count.
      const bool quotient = kind == CDF_KIND_QUOTIENT || (kind == CDF_KIND_AUTO && a.v % 12 == 4);
      const int64_t need = quotient ? (a.v - 4) / 12 : (a.v - 1) / 12;
      const int64_t have = fixed ? static_cast<int64_t>(cdf_family_block_count(fixed.get())) : 0;
      add = static_cast<std::size_t>(std::max<int64_t>(0, need - have));
    }
    s = cdf_search_complete(a.v, kind, fixed.get(), add, a.seed, a.randomize ? 1 : 0, a.budget, &raw, &st);
  }
  std::cerr << "search v=" << a.v << " status=" << cdf_status_name(s) << ' ' << stats_line(st) << '\n';
  if (s == CDF_OK) {
    Family f(raw);
    return emit(a.out, serialize(f.get(), a.format));
  }
  if (s == CDF_NONEXISTENT) {
    std::ostringstream cert;
    const std::string resolved = a.kind != "auto" ? a.kind : (a.v % 12 == 4 ? "quotient" : "cdf");
    cert << "{\n  \"v\": " << a.v << ",\n  \"kind\": \"" << resolved << "\",\n  \"status\": \"NONEXISTENT\",\n"
         << "  \"nodes\": " << st.nodes << ",\n  \"max_depth\": " << st.max_depth << ",\n  \"reductions\": [";
    std::istringstream lines(reductions);
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      std::string esc;
      for (char c : line) esc += (c == '"' || c == '\\') ? std::string{'\\', c} : std::string{c};
      cert << (first ? "\n    \"" : ",\n    \"") << esc << '"';
      first = false;
    }
    cert << (first ? "]" : "\n  ]") << "\n}\n";
    if (int rc = emit(a.out, cert.str())) return rc;
    return kNonexistent;
  }
  if (s == CDF_BUDGET_EXCEEDED) {
    std::cerr << "BUDGET_EXCEEDED\n";
    return kBudget;
  }
  return report_error("search", s);
}

// ---- rebuild-db ----

struct RebuildArgs {
  uint64_t seed = 1;
  std::string out;
  bool force = false;
};

int cmd_rebuild_db(const RebuildArgs& a) {
  if (!a.out.empty() && std::filesystem::exists(a.out) && !a.force) {
    std::cerr << "error: " << a.out << " exists; use --force to overwrite\n";
    return kIo;
  }
  char* json = nullptr;
  auto log = [](const char* line, void*) { std::cerr << line << '\n'; };
  if (auto s = cdf_db_build(a.seed, log, nullptr, &json); s != CDF_OK) return report_error("rebuild-db", s);
  const std::string doc = take(json);
  std::size_t n = 0;
  if (auto s = cdf_db_check(doc.c_str(), &n); s != CDF_OK) return report_error("rebuilt database", s);
  std::cerr << "database: " << n << " entries, all re-verified\n";
  return emit(a.out, doc);
}

// ---- yang-lin / intervals ----

int cmd_yang_lin(int64_t t, bool extended, const std::string& out, const std::string& format) {
  cdf_family* raw = nullptr;
  if (auto s = cdf_construct_yang_lin(t, extended ? 1 : 0, &raw); s != CDF_OK) return report_error("yang-lin", s);
  Family f(raw);
  return emit(out, serialize(f.get(), format));
}

int cmd_intervals() {
  char* text = nullptr;
  int disjoint = 0;
  if (auto s = cdf_yang_lin_intervals(&text, &disjoint); s != CDF_OK) return report_error("intervals", s);
  std::cout << take(text);
  return disjoint ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic (v,4,1) difference families, designs and optical orthogonal codes"};
  app.require_subcommand(1);
  int rc = kOk;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "construct and self-verify a family for v");
  construct->add_option("v", ca.v, "group order")->required();
  construct->add_option("--kind", ca.kind, "auto|cdf|quotient|design|ooc")
      ->check(CLI::IsMember({"auto", "cdf", "quotient", "design", "ooc"}));
  construct->add_option("--out", ca.out, "output path (default stdout)");
  construct->add_option("--format", ca.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  construct->callback([&] { rc = cmd_construct(ca); });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "verify a family file");
  verify->add_option("path", va.path, "family file (JSON or text)")->required();
  verify->add_option("--kind", va.kind, "override the declared kind")->check(CLI::IsMember({"cdp", "cdf", "quotient", "design"}));
  verify->add_flag("--develop", va.develop, "also develop and brute-force check the design");
  verify->callback([&] { rc = cmd_verify(va); });

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "construct and verify every admissible v in a range");
  sweep->add_option("vmin", sa.vmin)->required();
  sweep->add_option("vmax", sa.vmax)->required();
  sweep->add_option("--kind", sa.kind, "auto|cdf|quotient|design")
      ->check(CLI::IsMember({"auto", "cdf", "quotient", "design"}));
  sweep->add_flag("--develop", sa.develop, "also brute-force check each developed design");
  sweep->callback([&] { rc = cmd_sweep(sa); });

  SearchArgs sr;
  auto* search = app.add_subcommand("search", "backtracking completion or exhaustive search");
  search->add_option("v", sr.v)->required();
  search->add_option("--kind", sr.kind, "auto|cdf|quotient|cdp")->check(CLI::IsMember({"auto", "cdf", "quotient", "cdp"}));
  search->add_flag("--exhaustive", sr.exhaustive, "complete enumeration with symmetry reductions");
  search->add_flag("--reference", sr.reference, "reduction-free enumeration (tiny v only)");
  search->add_option("--fixed", sr.fixed, "family file with blocks to keep");
  search->add_option("--add", sr.add, "blocks to add (default: up to the kind's block count)");
  search->add_option("--seed", sr.seed, "seed for --randomize");
  search->add_flag("--randomize", sr.randomize, "shuffle candidates (seeded)");
  search->add_option("--budget", sr.budget, "node budget, 0 = unlimited");
  search->add_option("--out", sr.out, "output path (default stdout)");
  search->add_option("--format", sr.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  search->callback([&] { rc = cmd_search(sr); });

  RebuildArgs ra;
  auto* rebuild = app.add_subcommand("rebuild-db", "rebuild the small-order database");
  rebuild->add_option("--seed", ra.seed, "restart seed (default 1)");
  rebuild->add_option("--out", ra.out, "output path (default stdout)");
  rebuild->add_flag("--force", ra.force, "overwrite an existing --out file");
  rebuild->callback([&] { rc = cmd_rebuild_db(ra); });

  int64_t yl_t = 1;
  bool yl_ext = false;
  std::string yl_out, yl_format = "json";
  auto* yl = app.add_subcommand("yang-lin", "the 6t-3 block packing over Z_{72t+1}");
  yl->add_option("t", yl_t)->required();
  yl->add_flag("--extended", yl_ext, "add {0,7t,19t,64t+1}");
  yl->add_option("--out", yl_out, "output path (default stdout)");
  yl->add_option("--format", yl_format, "json|text")->check(CLI::IsMember({"json", "text"}));
  yl->callback([&] { rc = cmd_yang_lin(yl_t, yl_ext, yl_out, yl_format); });

  auto* intervals = app.add_subcommand("intervals", "symbolic difference intervals of the Yang-Lin forms");
  intervals->callback([&] { rc = cmd_intervals(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }
  return rc;
}
