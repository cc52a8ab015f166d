#include "cdf/cdf.h"

#include <algorithm>
#include <cstring>
#include <iterator>
#include <new>
#include <sstream>
#include <string>

#include "cdf/constructions.hpp"
#include "cdf/family_io.hpp"
#include "cdf/intervals.hpp"
#include "cdf/ooc.hpp"
#include "cdf/search.hpp"
#include "cdf/small_order_db.hpp"

struct cdf_family {
  cdf::FamilyDocument doc;
};

struct cdf_code {
  cdf::OpticalCode code;
  std::string provenance;
};

namespace {

thread_local std::string g_last_error;

cdf_status fail(cdf_status s, std::string message) {
  g_last_error = std::move(message);
  return s;
}

cdf_status status_of(cdf::Errc e) {
  switch (e) {
    case cdf::Errc::invalid_block:
    case cdf::Errc::domain: return CDF_INVALID_ARGUMENT;
    case cdf::Errc::inadmissible: return CDF_INADMISSIBLE;
    case cdf::Errc::database_miss: return CDF_DATABASE_MISS;
    case cdf::Errc::verification_failed: return CDF_VERIFICATION_FAILED;
    case cdf::Errc::inconsistent_problem: return CDF_INCONSISTENT;
    case cdf::Errc::parse: return CDF_PARSE;
    case cdf::Errc::io: return CDF_IO;
  }
  return CDF_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <class F>
cdf_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const cdf::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CDF_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CDF_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_truncated(char* dst, std::size_t cap, const std::string& src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

cdf_kind kind_of(cdf::DocumentKind k) {
  switch (k) {
    case cdf::DocumentKind::CDP: return CDF_KIND_CDP;
    case cdf::DocumentKind::CDF: return CDF_KIND_CDF;
    case cdf::DocumentKind::QuotientCDF: return CDF_KIND_QUOTIENT;
    case cdf::DocumentKind::Design: return CDF_KIND_DESIGN;
  }
  return CDF_KIND_CDP;
}

// AUTO resolves by v mod 12; DESIGN is not a family kind.
bool family_kind(cdf_kind k, int64_t v, cdf::FamilyKind& out) {
  switch (k) {
    case CDF_KIND_CDP: out = cdf::FamilyKind::CDP; return true;
    case CDF_KIND_CDF: out = cdf::FamilyKind::CDF; return true;
    case CDF_KIND_QUOTIENT: out = cdf::FamilyKind::QuotientCDF; return true;
    case CDF_KIND_AUTO:
      out = cdf::mod(v, 12) == 4 ? cdf::FamilyKind::QuotientCDF : cdf::FamilyKind::CDF;
      return true;
    case CDF_KIND_DESIGN: break;
  }
  return false;
}

cdf_family* wrap(cdf::FamilyDocument doc) { return new cdf_family{std::move(doc)}; }

cdf_family* wrap(const cdf::DifferenceFamily& f, std::string provenance) {
  return wrap(cdf::make_document(f, std::move(provenance)));
}

void fill(cdf_report* r, const cdf::Verdict& v, std::uint64_t checked) {
  std::memset(r, 0, sizeof *r);
  r->valid = v.valid ? 1 : 0;
  copy_truncated(r->reason, sizeof r->reason, std::string(cdf::to_string(v.reason)));
  r->witness_count = static_cast<int>(std::min<std::size_t>(2, v.witness.size()));
  for (int i = 0; i < r->witness_count; ++i) r->witness[i] = v.witness[static_cast<std::size_t>(i)];
  r->blocks_checked = checked;
  copy_truncated(r->detail, sizeof r->detail, v.detail);
}

void fill(cdf_search_stats* out, const cdf::SearchStats& s) {
  if (!out) return;
  *out = cdf_search_stats{s.nodes, s.max_depth, s.restarts, s.wall_ms};
}

// Splits a design document into the difference family it came from.
cdf::DifferenceFamily family_of(const cdf::FamilyDocument& doc) {
  if (doc.kind != cdf::DocumentKind::Design) return cdf::to_family(doc);
  const auto blocks = cdf::to_base_blocks(doc);
  const bool quotient = cdf::mod(doc.v, 12) == 4;
  std::vector<cdf::BaseBlock> full;
  const cdf::BaseBlock short_block =
      quotient ? cdf::short_orbit_block(doc.v, doc.k).sorted() : cdf::BaseBlock{};
  std::size_t shorts = 0;
  for (const auto& b : blocks) {
    if (quotient && b.normalized(doc.v) == short_block && shorts == 0) {
      ++shorts;
      continue;
    }
    full.push_back(b);
  }
  if (quotient && shorts == 0)
    throw cdf::Error(cdf::Errc::verification_failed, "design document lacks the short-orbit block");
  return cdf::DifferenceFamily(
      cdf::DesignParams{doc.v, doc.k, quotient ? cdf::FamilyKind::QuotientCDF : cdf::FamilyKind::CDF},
      std::move(full));
}

// Which constructor the dispatchers pick for v.
std::string construct_provenance(int64_t v) {
  const auto r = cdf::mod(v, 12);
  if ((r == 1 && v <= 205) || (r == 4 && v <= 208)) return "small_order_db";
  const int64_t base = r == 1 ? 1 : 4;
  const int64_t t = (v - base) / 72;
  const int64_t x = ((v - base) % 72) / 12;
  if (r == 4) return "quotient_cdf_72t_plus_12x_plus_4 t=" + std::to_string(t) + " x=" + std::to_string(x);
  if (x == 0) return "cdf_72t_plus_1 t=" + std::to_string(t);
  return "cdf_72t_plus_12x_plus_1 t=" + std::to_string(t) + " x=" + std::to_string(x);
}

cdf_status search_result(cdf::SearchOutcome&& outcome, std::string provenance, cdf_family** out,
                         cdf_search_stats* stats) {
  fill(stats, outcome.stats);
  switch (outcome.status) {
    case cdf::SearchStatus::Found:
      if (out) *out = wrap(*outcome.family, std::move(provenance));
      return CDF_OK;
    case cdf::SearchStatus::ExhaustedNonexistent: return fail(CDF_NONEXISTENT, "search space exhausted");
    case cdf::SearchStatus::BudgetExceeded: return fail(CDF_BUDGET_EXCEEDED, "node or time budget exceeded");
  }
  return CDF_INTERNAL;
}

}  // namespace

extern "C" {

const char* cdf_last_error(void) { return g_last_error.c_str(); }

void cdf_string_free(char* s) { delete[] s; }

const char* cdf_status_name(cdf_status status) {
  switch (status) {
    case CDF_OK: return "ok";
    case CDF_INVALID_ARGUMENT: return "invalid argument";
    case CDF_INADMISSIBLE: return "inadmissible";
    case CDF_NONEXISTENT: return "nonexistent";
    case CDF_DATABASE_MISS: return "database miss";
    case CDF_VERIFICATION_FAILED: return "verification failed";
    case CDF_INCONSISTENT: return "inconsistent problem";
    case CDF_PARSE: return "parse error";
    case CDF_IO: return "io error";
    case CDF_BUDGET_EXCEEDED: return "budget exceeded";
    case CDF_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* cdf_version(void) { return "1.0.0"; }

cdf_status cdf_family_create(int64_t v, int k, cdf_kind kind, const int64_t* blocks, size_t block_count,
                             cdf_family** out) {
  return guarded([&] {
    if (!out || (block_count && !blocks)) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    if (v < 1 || k < 2) return fail(CDF_INVALID_ARGUMENT, "need v >= 1 and k >= 2");
    cdf::FamilyDocument doc;
    doc.v = v;
    doc.k = k;
    switch (kind) {
      case CDF_KIND_CDP: doc.kind = cdf::DocumentKind::CDP; break;
      case CDF_KIND_CDF: doc.kind = cdf::DocumentKind::CDF; break;
      case CDF_KIND_QUOTIENT: doc.kind = cdf::DocumentKind::QuotientCDF; break;
      case CDF_KIND_DESIGN: doc.kind = cdf::DocumentKind::Design; break;
      case CDF_KIND_AUTO: return fail(CDF_INVALID_ARGUMENT, "AUTO is not a document kind");
    }
    for (size_t i = 0; i < block_count; ++i) {
      const int64_t* row = blocks + i * static_cast<size_t>(k);
      // Validates distinctness; stored reduced.
      cdf::BaseBlock b(std::vector<int64_t>(row, row + k), v);
      doc.blocks.emplace_back(b.elements().begin(), b.elements().end());
    }
    doc.provenance = "user";
    if (doc.kind != cdf::DocumentKind::Design) doc.leave = cdf::to_family(doc).leave();
    *out = wrap(std::move(doc));
    return CDF_OK;
  });
}

cdf_family* cdf_family_clone(const cdf_family* family) { return family ? new cdf_family(*family) : nullptr; }

cdf_status cdf_family_with_kind(const cdf_family* family, cdf_kind kind, cdf_family** out) {
  return guarded([&] {
    if (!family || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    cdf::FamilyDocument doc = family->doc;
    switch (kind) {
      case CDF_KIND_CDP: doc.kind = cdf::DocumentKind::CDP; break;
      case CDF_KIND_CDF: doc.kind = cdf::DocumentKind::CDF; break;
      case CDF_KIND_QUOTIENT: doc.kind = cdf::DocumentKind::QuotientCDF; break;
      case CDF_KIND_DESIGN: doc.kind = cdf::DocumentKind::Design; break;
      case CDF_KIND_AUTO: return fail(CDF_INVALID_ARGUMENT, "AUTO is not a document kind");
    }
    *out = wrap(std::move(doc));
    return CDF_OK;
  });
}

void cdf_family_free(cdf_family* family) { delete family; }

int64_t cdf_family_v(const cdf_family* family) { return family ? family->doc.v : 0; }
int cdf_family_k(const cdf_family* family) { return family ? family->doc.k : 0; }
cdf_kind cdf_family_kind(const cdf_family* family) {
  return family ? kind_of(family->doc.kind) : CDF_KIND_CDP;
}
size_t cdf_family_block_count(const cdf_family* family) { return family ? family->doc.blocks.size() : 0; }

cdf_status cdf_family_block(const cdf_family* family, size_t i, int64_t* out) {
  if (!family || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
  if (i >= family->doc.blocks.size()) return fail(CDF_INVALID_ARGUMENT, "block index out of range");
  const auto& b = family->doc.blocks[i];
  std::copy(b.begin(), b.end(), out);
  return CDF_OK;
}

size_t cdf_family_leave(const cdf_family* family, int64_t* out, size_t capacity) {
  if (!family) return 0;
  const auto& leave = family->doc.leave;
  if (out) std::copy_n(leave.begin(), std::min(capacity, leave.size()), out);
  return leave.size();
}

const char* cdf_family_provenance(const cdf_family* family) {
  return family ? family->doc.provenance.c_str() : "";
}

cdf_status cdf_construct(int64_t v, cdf_kind kind, cdf_family** out) {
  return guarded([&] {
    if (!out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    if (v < 1) return fail(CDF_INVALID_ARGUMENT, "v must be positive");
    if (kind == CDF_KIND_DESIGN) {
      auto r = cdf::construct_design(v);
      if (std::holds_alternative<cdf::NonExistent>(r))
        return fail(CDF_NONEXISTENT, "no cyclic (" + std::to_string(v) + ",4,1)-design exists (v in {16,25,28})");
      *out = wrap(cdf::make_document(std::get<cdf::DesignBaseBlocks>(r), "design from " + construct_provenance(v)));
      return CDF_OK;
    }
    cdf::ConstructResult r = kind == CDF_KIND_CDF        ? cdf::construct_cdf(v)
                             : kind == CDF_KIND_QUOTIENT ? cdf::construct_quotient_cdf(v)
                             : kind == CDF_KIND_AUTO     ? cdf::construct_family(v)
                                                         : throw cdf::Error(cdf::Errc::domain, "cannot construct a bare CDP");
    if (std::holds_alternative<cdf::NonExistent>(r))
      return fail(CDF_NONEXISTENT, "no cyclic (" + std::to_string(v) + ",4,1)-design exists (v in {16,25,28})");
    *out = wrap(std::get<cdf::DifferenceFamily>(r), construct_provenance(v));
    return CDF_OK;
  });
}

cdf_status cdf_construct_yang_lin(int64_t t, int extended, cdf_family** out) {
  return guarded([&] {
    if (!out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    if (t < 1) return fail(CDF_INVALID_ARGUMENT, "t must be >= 1");
    *out = extended ? wrap(cdf::extend_yang_lin(t), "extend_yang_lin t=" + std::to_string(t))
                    : wrap(cdf::yang_lin_cdp(t), "yang_lin_cdp t=" + std::to_string(t));
    return CDF_OK;
  });
}

cdf_status cdf_construct_cdf_series(int64_t t, int x, cdf_family** out) {
  return guarded([&] {
    if (!out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    if (x < 0 || x > 5) return fail(CDF_INVALID_ARGUMENT, "x must be in 0..5");
    auto f = x == 0 ? cdf::cdf_72t_plus_1(t) : cdf::cdf_72t_plus_12x_plus_1(t, x);
    *out = wrap(f, "cdf_72t_plus_12x_plus_1 t=" + std::to_string(t) + " x=" + std::to_string(x));
    return CDF_OK;
  });
}

cdf_status cdf_construct_quotient_series(int64_t t, int x, cdf_family** out) {
  return guarded([&] {
    if (!out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    if (x < 0 || x > 5) return fail(CDF_INVALID_ARGUMENT, "x must be in 0..5");
    *out = wrap(cdf::quotient_cdf_72t_plus_12x_plus_4(t, x),
                "quotient_cdf_72t_plus_12x_plus_4 t=" + std::to_string(t) + " x=" + std::to_string(x));
    return CDF_OK;
  });
}

int cdf_classify(int64_t v) {
  if (v < 1) return 0;
  if (cdf::is_known_nonexistent(v)) return 2;
  const auto r = cdf::mod(v, 12);
  return r == 1 || r == 4 ? 1 : 0;
}

cdf_status cdf_verify(const cdf_family* family, cdf_report* report) {
  return guarded([&] {
    if (!family || !report) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    cdf::Verdict verdict;
    try {
      const auto f = family_of(family->doc);
      verdict = cdf::verify_family(f);
      // A stored leave must agree with the recomputed one.
      auto declared = family->doc.leave;
      std::sort(declared.begin(), declared.end());
      const auto computed = f.leave();
      if (verdict.valid && family->doc.kind != cdf::DocumentKind::Design && !declared.empty() &&
          declared != computed) {
        std::vector<cdf::Residue> diff;
        std::set_symmetric_difference(declared.begin(), declared.end(), computed.begin(), computed.end(),
                                      std::back_inserter(diff));
        verdict = cdf::Verdict::fail(cdf::VerdictReason::leave, diff, "declared leave differs from the computed leave");
      }
    } catch (const cdf::Error& e) {
      if (e.code() != cdf::Errc::invalid_block && e.code() != cdf::Errc::verification_failed) throw;
      verdict = cdf::Verdict::fail(cdf::VerdictReason::invalid_block, {}, e.what());
    }
    fill(report, verdict, family->doc.blocks.size());
    return CDF_OK;
  });
}

cdf_status cdf_verify_design(const cdf_family* family, cdf_report* report) {
  return guarded([&] {
    if (!family || !report) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    std::vector<cdf::BaseBlock> reps;
    try {
      reps = cdf::to_base_blocks(family->doc);
    } catch (const cdf::Error& e) {
      fill(report, cdf::Verdict::fail(cdf::VerdictReason::invalid_block, {}, e.what()), 0);
      return CDF_OK;
    }
    // A quotient family develops together with its short orbit.
    if (family->doc.kind == cdf::DocumentKind::QuotientCDF)
      reps.push_back(cdf::short_orbit_block(family->doc.v, family->doc.k));
    const auto blocks = cdf::develop_orbits(reps, family->doc.v);
    fill(report, cdf::verify_design(blocks, family->doc.v), blocks.size());
    return CDF_OK;
  });
}

cdf_status cdf_family_to_json(const cdf_family* family, char** out) {
  return guarded([&] {
    if (!family || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    *out = dup_string(cdf::to_json(family->doc));
    return CDF_OK;
  });
}

cdf_status cdf_family_to_text(const cdf_family* family, char** out) {
  return guarded([&] {
    if (!family || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    *out = dup_string(cdf::to_text(family->doc));
    return CDF_OK;
  });
}

cdf_status cdf_family_parse(const char* text, cdf_family** out) {
  return guarded([&] {
    if (!text || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    *out = wrap(cdf::parse_document(text));
    return CDF_OK;
  });
}

cdf_status cdf_search_complete(int64_t v, cdf_kind kind, const cdf_family* fixed, size_t add, uint64_t seed,
                               int randomize, uint64_t node_budget, cdf_family** out, cdf_search_stats* stats) {
  return guarded([&] {
    cdf::SearchProblem p;
    p.v = v;
    if (!family_kind(kind, v, p.kind)) return fail(CDF_INVALID_ARGUMENT, "search kind must be CDP, CDF, QUOTIENT or AUTO");
    if (fixed) {
      if (fixed->doc.v != v) return fail(CDF_INVALID_ARGUMENT, "fixed blocks are over a different v");
      p.fixed = cdf::to_base_blocks(fixed->doc);
    }
    p.add = add;
    p.limits.seed = seed;
    p.limits.randomize = randomize != 0;
    p.limits.node_budget = node_budget;
    return search_result(cdf::complete_family(p), "search seed=" + std::to_string(seed), out, stats);
  });
}

cdf_status cdf_search_exhaustive(int64_t v, cdf_kind kind, uint64_t node_budget, cdf_family** out,
                                 cdf_search_stats* stats, char** reductions) {
  return guarded([&] {
    cdf::FamilyKind fk;
    if (!family_kind(kind, v, fk) || fk == cdf::FamilyKind::CDP)
      return fail(CDF_INVALID_ARGUMENT, "exhaustive search needs kind CDF, QUOTIENT or AUTO");
    auto outcome = cdf::exhaustive_search(v, fk, node_budget);
    if (reductions) {
      std::string joined;
      for (const auto& r : outcome.reductions) joined += r + "\n";
      *reductions = dup_string(joined);
    }
    return search_result(std::move(outcome), "exhaustive_search", out, stats);
  });
}

cdf_status cdf_search_reference(int64_t v, int k, cdf_kind kind, uint64_t node_budget, cdf_family** out,
                                cdf_search_stats* stats) {
  return guarded([&] {
    cdf::FamilyKind fk;
    if (!family_kind(kind, v, fk) || fk == cdf::FamilyKind::CDP)
      return fail(CDF_INVALID_ARGUMENT, "reference enumeration needs kind CDF, QUOTIENT or AUTO");
    return search_result(cdf::reference_enumeration(v, k, fk, node_budget), "reference_enumeration", out, stats);
  });
}

cdf_status cdf_db_build(uint64_t seed, cdf_log_fn log, void* user, char** out) {
  return guarded([&] {
    if (!out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    cdf::DbBuildOptions options;
    options.seed = seed;
    if (log) options.log = [&](const std::string& line) { log(line.c_str(), user); };
    *out = dup_string(cdf::build_small_order_db(options).to_json());
    return CDF_OK;
  });
}

cdf_status cdf_db_check(const char* json, size_t* entries) {
  return guarded([&] {
    if (!json) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    auto db = cdf::SmallOrderDB::from_json(json);
    if (entries) *entries = db.size();
    const auto missing = cdf::missing_orders(db);
    if (!missing.empty()) {
      std::string list;
      for (auto v : missing) list += (list.empty() ? "" : ",") + std::to_string(v);
      return fail(CDF_DATABASE_MISS, "database lacks v: " + list);
    }
    return CDF_OK;
  });
}

cdf_status cdf_code_from_family(const cdf_family* family, cdf_code** out) {
  return guarded([&] {
    if (!family || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    *out = new cdf_code{cdf::to_code(family_of(family->doc)), family->doc.provenance};
    return CDF_OK;
  });
}

void cdf_code_free(cdf_code* code) { delete code; }

size_t cdf_code_size(const cdf_code* code) { return code ? code->code.codewords.size() : 0; }

cdf_status cdf_code_correlation(const cdf_code* code, int direct, cdf_correlation* out) {
  return guarded([&] {
    if (!code || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    const auto c = direct ? cdf::correlation_direct(code->code) : cdf::correlation_by_differences(code->code);
    *out = cdf_correlation{c.max, c.x, c.y, c.shift};
    return CDF_OK;
  });
}

int cdf_code_is_optimal(const cdf_code* code) { return code && cdf::is_optimal(code->code) ? 1 : 0; }

cdf_status cdf_code_to_json(const cdf_code* code, char** out) {
  return guarded([&] {
    if (!code || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    *out = dup_string(cdf::code_to_json(code->code, code->provenance));
    return CDF_OK;
  });
}

cdf_status cdf_code_to_dense(const cdf_code* code, char** out) {
  return guarded([&] {
    if (!code || !out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    *out = dup_string(cdf::to_dense_text(code->code));
    return CDF_OK;
  });
}

cdf_status cdf_yang_lin_intervals(char** out, int* disjoint) {
  return guarded([&] {
    if (!out) return fail(CDF_INVALID_ARGUMENT, "null pointer");
    const auto forms = cdf::yang_lin_forms();
    const auto report = cdf::interval_report(forms, cdf::LinearExpr{72, 1}, 1);
    std::ostringstream os;
    for (const auto& e : report.entries) {
      os << "F" << e.form + 1 << "  " << cdf::difference_to_string(e) << "  " << cdf::to_string(e.positive);
      if (e.folded) os << "  -> -" << cdf::to_string(*e.folded);
      if (e.empty) os << "  (empty)";
      os << '\n';
    }
    os << (report.disjoint ? "disjoint for all t >= 1\n" : "NOT disjoint\n");
    if (report.overlap)
      os << "overlap: entries " << report.overlap->first << " and " << report.overlap->second
         << (report.overlap_t ? " at t=" + std::to_string(*report.overlap_t) : std::string{}) << '\n';
    if (disjoint) *disjoint = report.disjoint ? 1 : 0;
    *out = dup_string(os.str());
    return CDF_OK;
  });
}

}  // extern "C"
