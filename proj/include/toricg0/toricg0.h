/*
 * toricg0: Grothendieck-group and Chow-group invariants of affine simplicial
 * toric varieties, computed exactly from cone generators.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a toric_status; on
 * failure toric_last_error() describes the problem (thread-local, valid until
 * the next failing call on the same thread) and out-parameters are left
 * zeroed. Strings returned through char** out-parameters are heap-allocated
 * and must be released with toric_string_free(). Integers cross the boundary
 * as decimal strings.
 */
#ifndef TORICG0_H
#define TORICG0_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TORICG0_BUILDING)
#define TORICG0_API __declspec(dllexport)
#else
#define TORICG0_API __declspec(dllimport)
#endif
#elif defined(__GNUC__)
#define TORICG0_API __attribute__((visibility("default")))
#else
#define TORICG0_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum toric_status {
  TORIC_OK = 0,
  TORIC_E_INVALID_ARGUMENT = 1,
  TORIC_E_PARSE = 2,
  TORIC_E_WRONG_COUNT = 3,
  TORIC_E_ZERO_GENERATOR = 4,
  TORIC_E_DEPENDENT_GENERATORS = 5,
  TORIC_E_WRONG_DIMENSION = 6,
  TORIC_E_OUT_OF_RANGE = 7,
  TORIC_E_NOT_UNIMODULAR = 8,
  TORIC_E_NOT_PRIMITIVE = 9,
  TORIC_E_INFINITE_GROUP = 10,
  TORIC_E_TOO_LARGE = 11,
  TORIC_E_INVARIANT_VIOLATION = 12,
  TORIC_E_NO_MEMORY = 13,
  TORIC_E_INTERNAL = 14
} toric_status;

typedef struct toric_cone toric_cone;
typedef struct toric_group toric_group;
typedef struct toric_matrix toric_matrix;

TORICG0_API const char* toric_version(void);
TORICG0_API const char* toric_status_name(toric_status status);
TORICG0_API const char* toric_last_error(void);
TORICG0_API void toric_string_free(char* s);

/* Cones. `text` is either "x1,y1;x2,y2" or a JSON object with a "generators"
 * array. toric_cone_create takes n*n entries, generator-major. */
TORICG0_API toric_status toric_cone_parse(const char* text, toric_cone** out);
TORICG0_API toric_status toric_cone_create(size_t n, const int64_t* entries, toric_cone** out);
TORICG0_API void toric_cone_free(toric_cone* cone);
TORICG0_API toric_status toric_cone_dim(const toric_cone* cone, size_t* out);
TORICG0_API toric_status toric_cone_delta(const toric_cone* cone, char** out);
/* {"generators": [...], "label": ...} exactly as given, before primitivization. */
TORICG0_API toric_status toric_cone_inputs_json(const toric_cone* cone, char** out);

/* Groups. */
TORICG0_API toric_status toric_cone_class_group(const toric_cone* cone, toric_group** out);
TORICG0_API toric_status toric_cone_chow_group(const toric_cone* cone, size_t codim,
                                               toric_group** out);
TORICG0_API void toric_group_free(toric_group* group);
TORICG0_API toric_status toric_group_free_rank(const toric_group* group, size_t* out);
TORICG0_API toric_status toric_group_torsion_count(const toric_group* group, size_t* out);
TORICG0_API toric_status toric_group_torsion_at(const toric_group* group, size_t index,
                                                char** out);
/* TORIC_E_INFINITE_GROUP when the free rank is positive. */
TORICG0_API toric_status toric_group_order(const toric_group* group, char** out);
/* "0", "C21", "C2×C4" (UTF-8), "Z", ... */
TORICG0_API toric_status toric_group_render(const toric_group* group, char** out);

/* Matrices, for the Smith normal form dump. Same inline syntax as cones,
 * or a JSON object with a "matrix" array. */
TORICG0_API toric_status toric_matrix_parse(const char* text, toric_matrix** out);
TORICG0_API void toric_matrix_free(toric_matrix* matrix);

/* Structured reports, each a JSON object. */
TORICG0_API toric_status toric_analyze_json(const toric_cone* cone, char** out);
TORICG0_API toric_status toric_normalize_json(const toric_cone* cone, char** out);
/* codim < 0 reports every codimension 0..n. */
TORICG0_API toric_status toric_chow_json(const toric_cone* cone, int codim, char** out);
TORICG0_API toric_status toric_g0_json(const toric_cone* cone, char** out);
TORICG0_API toric_status toric_snf_json(const toric_matrix* matrix, char** out);
/* *all_match is set to 1 when every reference row is reproduced. */
TORICG0_API toric_status toric_table_json(char** out, int* all_match);
/* threads = 0 uses the hardware concurrency; the report does not depend on
 * it. *implementation_bug is set to 1 when |A^1| != |delta| in dims 2-3. */
TORICG0_API toric_status toric_conjecture_json(size_t dim, size_t trials, int64_t bound,
                                               uint64_t seed, unsigned threads, char** out,
                                               int* implementation_bug);

#ifdef __cplusplus
}
#endif

#endif /* TORICG0_H */
