/* C interface to the nrprop library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Every fallible function returns an nrp_status; NRP_OK is zero. A short
 * human-readable description of the most recent failure on the calling
 * thread is available from nrp_last_error(). Strings returned through
 * char** out-parameters are owned by the caller and must be released with
 * nrp_string_free().
 */
#ifndef NRPROP_H
#define NRPROP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nrp_status {
  NRP_OK = 0,
  NRP_ERR_INVALID_ARGUMENT,
  NRP_ERR_LENGTH_MISMATCH,
  NRP_ERR_DEGENERATE_CODE,
  NRP_ERR_NOT_REDUCED,
  NRP_ERR_SPAN_NOT_AMBIENT,
  NRP_ERR_COSET_SYSTEM,
  NRP_ERR_VERIFICATION_FAILED,
  NRP_ERR_IO,
  NRP_ERR_MISSING_CACHE,
  NRP_ERR_UNKNOWN_NAME,
  NRP_ERR_TIER_LOCKED,
  NRP_ERR_INTERNAL
} nrp_status;

const char* nrp_status_name(nrp_status s);
const char* nrp_last_error(void);
void nrp_string_free(char* s);

/* ---- binary codes ----------------------------------------------------- */

typedef struct nrp_code nrp_code;

/* name: "nr", "h16", or "rm" (with parameters r, m; ignored otherwise). */
nrp_status nrp_code_construct(const char* name, int r, int m, nrp_code** out);
nrp_status nrp_code_load(const char* path, nrp_code** out);
nrp_status nrp_code_save(const nrp_code* c, const char* path);
void nrp_code_free(nrp_code* c);

int nrp_code_length(const nrp_code* c);
size_t nrp_code_size(const nrp_code* c);
nrp_status nrp_code_min_distance(const nrp_code* c, int* out);
nrp_status nrp_code_span(const nrp_code* c, nrp_code** out, int* dimension);
nrp_status nrp_code_kernel(const nrp_code* c, nrp_code** out);
/* word: string of n characters over {0,1} in coordinate order. */
nrp_status nrp_code_translate(const nrp_code* c, const char* word, nrp_code** out);

/* ---- Z4 codes ---------------------------------------------------------- */

typedef struct nrp_z4code nrp_z4code;

nrp_status nrp_octacode(nrp_z4code** out);
nrp_status nrp_z4_save(const nrp_z4code* c, const char* path);
nrp_status nrp_z4_gray_image(const nrp_z4code* c, nrp_code** out);
size_t nrp_z4_size(const nrp_z4code* c);
void nrp_z4_free(nrp_z4code* c);

/* ---- propelinear structures -------------------------------------------- */

typedef struct nrp_structure nrp_structure;

/* The Z4-linear structure on the canonical Nordstrom-Robinson code. */
nrp_status nrp_structure_z4_nr(nrp_structure** out);
nrp_status nrp_structure_load(const char* path, nrp_structure** out);
nrp_status nrp_structure_save(const nrp_structure* s, const char* path);
void nrp_structure_free(nrp_structure* s);

size_t nrp_structure_order(const nrp_structure* s);
nrp_status nrp_structure_validate(const nrp_structure* s, int* valid, char** diagnostic);
nrp_status nrp_structure_is_normalized(const nrp_structure* s, int* normalized);
nrp_status nrp_structure_distinct_perms(const nrp_structure* s, size_t* count);
/* JSON: {"pairs": [[order, centralizer, multiplicity], ...]} */
nrp_status nrp_structure_fingerprint(const nrp_structure* s, char** json);
/* result: 1 isomorphic, 0 not, -1 undecided within budget. */
nrp_status nrp_structures_isomorphic(const nrp_structure* a, const nrp_structure* b,
                                     uint64_t node_budget, int* result);

/* ---- task-level entry points ------------------------------------------- */

/* Partitions of H16 into translates of the canonical Nordstrom-Robinson
 * code. Writes one partition file per partition plus the base code into
 * out_dir when non-NULL. JSON reports counts and class sizes. */
nrp_status nrp_partitions(const char* out_dir, int verify, char** json);

/* Full conjugacy classification of the regular structures on the
 * Nordstrom-Robinson code. Long-running; checkpoints per level are kept in
 * cache_dir and reused. */
nrp_status nrp_enumerate_structures(const char* cache_dir, int jobs, char** json);

/* Narrow extensions to H16. structure_path selects a single source; pass
 * NULL with all_sources nonzero to extend every enumerated class
 * representative (requires the enumeration cache). */
nrp_status nrp_extend(const char* structure_path, int all_sources, const char* cache_dir,
                      int jobs, char** json);

/* kind: "partitions", "structures", or "extensions". */
nrp_status nrp_report(const char* kind, const char* cache_dir, char** json);

/* tier: "fast", "medium", or "long"; cumulative includes lower tiers.
 * JSON lists one entry per check; *passed is 1 iff all checks passed. */
nrp_status nrp_verify(const char* tier, int cumulative, const char* cache_dir, int jobs,
                      uint32_t seed, char** json, int* passed);

/* Progress lines ("level 3: 57 classes", ...) for long-running calls on
 * this thread; pass NULL to silence. */
typedef void (*nrp_progress_fn)(const char* message, void* user);
void nrp_set_progress(nrp_progress_fn fn, void* user);

#ifdef __cplusplus
}
#endif

#endif /* NRPROP_H */
