#ifndef CDF_CDF_H
#define CDF_CDF_H

/* C interface to the cyclic difference family library.
 *
 * Objects are opaque handles released with the matching *_free call.
 * Functions returning cdf_status store a message retrievable with
 * cdf_last_error() (per thread) when they fail. Strings handed out by the
 * library are released with cdf_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CDF_API __declspec(dllexport)
#elif defined(CDF_BUILDING_LIBRARY)
#define CDF_API __attribute__((visibility("default")))
#else
#define CDF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CDF_OK = 0,
  CDF_INVALID_ARGUMENT = 1, /* bad block, bad k, null pointer, out-of-range parameter */
  CDF_INADMISSIBLE = 2,     /* v in the wrong residue class for the requested kind */
  CDF_NONEXISTENT = 3,      /* v in {16, 25, 28} */
  CDF_DATABASE_MISS = 4,
  CDF_VERIFICATION_FAILED = 5,
  CDF_INCONSISTENT = 6, /* search problem rejected before searching */
  CDF_PARSE = 7,
  CDF_IO = 8,
  CDF_BUDGET_EXCEEDED = 9,
  CDF_INTERNAL = 10
} cdf_status;

typedef enum {
  CDF_KIND_CDP = 0,
  CDF_KIND_CDF = 1,
  CDF_KIND_QUOTIENT = 2,
  CDF_KIND_DESIGN = 3, /* orbit representatives, short orbit included */
  CDF_KIND_AUTO = 4    /* construct: by v mod 12; search: by v mod 12 */
} cdf_kind;

typedef struct cdf_family cdf_family;
typedef struct cdf_code cdf_code;

CDF_API const char* cdf_last_error(void);
CDF_API void cdf_string_free(char* s);
CDF_API const char* cdf_status_name(cdf_status status);
CDF_API const char* cdf_version(void);

/* ---- families ---- */

/* blocks: block_count * k residues, row-major. Residues are reduced mod v.
 * kind may be CDP, CDF, QUOTIENT or DESIGN. No verification beyond block
 * well-formedness. */
CDF_API cdf_status cdf_family_create(int64_t v, int k, cdf_kind kind, const int64_t* blocks, size_t block_count,
                                     cdf_family** out);
CDF_API cdf_family* cdf_family_clone(const cdf_family* family);
/* Copy with a different declared kind (CDP, CDF, QUOTIENT or DESIGN). */
CDF_API cdf_status cdf_family_with_kind(const cdf_family* family, cdf_kind kind, cdf_family** out);
CDF_API void cdf_family_free(cdf_family* family);

CDF_API int64_t cdf_family_v(const cdf_family* family);
CDF_API int cdf_family_k(const cdf_family* family);
CDF_API cdf_kind cdf_family_kind(const cdf_family* family);
CDF_API size_t cdf_family_block_count(const cdf_family* family);
/* Copies block i (k residues, as stored) into out. */
CDF_API cdf_status cdf_family_block(const cdf_family* family, size_t i, int64_t* out);
/* Writes up to capacity leave residues; returns the full leave size. */
CDF_API size_t cdf_family_leave(const cdf_family* family, int64_t* out, size_t capacity);
CDF_API const char* cdf_family_provenance(const cdf_family* family);

/* ---- constructions ---- */

/* kind: AUTO, CDF, QUOTIENT or DESIGN. NONEXISTENT for v in {16, 25, 28}. */
CDF_API cdf_status cdf_construct(int64_t v, cdf_kind kind, cdf_family** out);
CDF_API cdf_status cdf_construct_yang_lin(int64_t t, int extended, cdf_family** out);
/* v = 72t+12x+1 (x in 0..5, x = 0 is the 72t+1 series) for t >= 3. */
CDF_API cdf_status cdf_construct_cdf_series(int64_t t, int x, cdf_family** out);
/* v = 72t+12x+4, x in 0..5, t >= 3. */
CDF_API cdf_status cdf_construct_quotient_series(int64_t t, int x, cdf_family** out);

/* 0 inadmissible, 1 constructible, 2 known nonexistent. */
CDF_API int cdf_classify(int64_t v);

/* ---- verification ---- */

typedef struct {
  int valid;
  char reason[32]; /* "none", "collision", "count", "leave", "pair-uncovered", ... */
  int64_t witness[2];
  int witness_count;
  uint64_t blocks_checked;
  char detail[256];
} cdf_report;

/* Difference-family check against the document's kind; a DESIGN document is
 * checked as its full-orbit part with the quotient leave. */
CDF_API cdf_status cdf_verify(const cdf_family* family, cdf_report* report);
/* Develops the orbit representatives and brute-forces pair coverage and +1
 * invariance. */
CDF_API cdf_status cdf_verify_design(const cdf_family* family, cdf_report* report);

/* ---- serialization ---- */

CDF_API cdf_status cdf_family_to_json(const cdf_family* family, char** out);
CDF_API cdf_status cdf_family_to_text(const cdf_family* family, char** out);
/* JSON or text, detected from the first non-space character. */
CDF_API cdf_status cdf_family_parse(const char* text, cdf_family** out);

/* ---- search ---- */

typedef struct {
  uint64_t nodes;
  uint64_t max_depth;
  uint64_t restarts;
  double wall_ms;
} cdf_search_stats;

/* Completes fixed (may be null) with add more blocks. kind CDP, CDF or
 * QUOTIENT (AUTO picks by v mod 12). Found: CDF_OK and *out set. Exhausted:
 * CDF_NONEXISTENT. Budget: CDF_BUDGET_EXCEEDED. node_budget 0 = unlimited. */
CDF_API cdf_status cdf_search_complete(int64_t v, cdf_kind kind, const cdf_family* fixed, size_t add,
                                       uint64_t seed, int randomize, uint64_t node_budget, cdf_family** out,
                                       cdf_search_stats* stats);
CDF_API cdf_status cdf_search_exhaustive(int64_t v, cdf_kind kind, uint64_t node_budget, cdf_family** out,
                                         cdf_search_stats* stats, char** reductions);
/* Reduction-free enumeration over all k-subsets. */
CDF_API cdf_status cdf_search_reference(int64_t v, int k, cdf_kind kind, uint64_t node_budget, cdf_family** out,
                                        cdf_search_stats* stats);

typedef void (*cdf_log_fn)(const char* line, void* user);
/* Builds the small-order database; *out receives its JSON document. */
CDF_API cdf_status cdf_db_build(uint64_t seed, cdf_log_fn log, void* user, char** out);
/* Parses and re-verifies a database document; *entries receives its size. */
CDF_API cdf_status cdf_db_check(const char* json, size_t* entries);

/* ---- optical orthogonal codes ---- */

/* Accepts CDP, CDF and QUOTIENT families (a DESIGN document's short-orbit
 * block is dropped). Refuses families that do not verify. */
CDF_API cdf_status cdf_code_from_family(const cdf_family* family, cdf_code** out);
CDF_API void cdf_code_free(cdf_code* code);
CDF_API size_t cdf_code_size(const cdf_code* code);

typedef struct {
  uint64_t max;
  size_t x;
  size_t y;
  int64_t shift;
} cdf_correlation;

CDF_API cdf_status cdf_code_correlation(const cdf_code* code, int direct, cdf_correlation* out);
CDF_API int cdf_code_is_optimal(const cdf_code* code);
CDF_API cdf_status cdf_code_to_json(const cdf_code* code, char** out);
CDF_API cdf_status cdf_code_to_dense(const cdf_code* code, char** out);

/* ---- symbolic interval report ---- */

/* Table of differences of the Yang-Lin forms with index range [1,t-1],
 * [0,t-1] as printed; *disjoint set to the certified verdict. */
CDF_API cdf_status cdf_yang_lin_intervals(char** out, int* disjoint);

#ifdef __cplusplus
}
#endif

#endif
