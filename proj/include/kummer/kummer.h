/*
 * C interface to the kummer cone library.
 *
 * Handles are opaque. Every fallible call returns a km_status; on failure
 * km_last_error() describes the most recent error on the calling thread.
 * Strings handed out by the library are released with km_string_free, and
 * documents with km_document_destroy.
 */
#ifndef KUMMER_KUMMER_H
#define KUMMER_KUMMER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KM_BUILDING_LIBRARY)
#    define KM_API __declspec(dllexport)
#  else
#    define KM_API __declspec(dllimport)
#  endif
#else
#  define KM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum km_status {
  KM_OK = 0,
  KM_ERR_INVALID_ARGUMENT = 1,
  KM_ERR_TRIVIAL_PELL = 2,
  KM_ERR_INTEGRITY = 3,
  KM_ERR_NOT_ORTHOGONAL = 4,
  KM_ERR_DEGENERATE_WALL = 5,
  KM_ERR_VERTICAL_WALL = 6,
  KM_ERR_UNSUPPORTED_NEF = 7,
  KM_ERR_INCOMPLETE = 8,
  KM_ERR_INTERNAL = 9,
  KM_ERR_OUT_OF_MEMORY = 10
} km_status;

typedef enum km_format {
  KM_FORMAT_TEXT = 0,
  KM_FORMAT_JSON = 1,
  KM_FORMAT_CSV = 2
} km_format;

typedef enum km_cone_selection {
  KM_CONE_AUTO = 0, /* nef and movable for l = 3, movable otherwise */
  KM_CONE_NEF = 1,
  KM_CONE_MOVABLE = 2,
  KM_CONE_BOTH = 3
} km_cone_selection;

/* Surface data: H^2 = 2n, Km^{l-1}(A). */
typedef struct km_surface km_surface;

/* A rendered query result. */
typedef struct km_document km_document;

typedef struct km_verify_options {
  int64_t n_first;
  int64_t n_last;
  const int64_t* l_values;
  size_t l_count;
  int64_t bound; /* enumeration box for the oracle, 0 = default */
  uint32_t jobs; /* worker threads, 0 or 1 = sequential */
} km_verify_options;

KM_API const char* km_version(void);
KM_API const char* km_status_name(km_status status);
KM_API const char* km_last_error(void);

KM_API km_status km_surface_create(int64_t n, int64_t l, km_surface** out);
KM_API void km_surface_destroy(km_surface* surface);
KM_API int64_t km_surface_n(const km_surface* surface);
KM_API int64_t km_surface_l(const km_surface* surface);

KM_API km_status km_surface_is_trivial_pell(const km_surface* surface,
                                            int* out);
/* k-th solution (X_k, Y_k) of l*Y^2 - n*X^2 = l as decimal strings. */
KM_API km_status km_surface_pell_solution(const km_surface* surface,
                                          uint32_t k, char** x, char** y);
/* Boundary slopes Q of h - Q*delta as "p/q". Nef requires l = 3. */
KM_API km_status km_surface_nef_slope(const km_surface* surface,
                                      char** slope);
KM_API km_status km_surface_movable_slope(const km_surface* surface,
                                          char** slope);
KM_API void km_string_free(char* s);

KM_API km_status km_cone(const km_surface* surface, km_cone_selection which,
                         km_format format, km_document** out);
KM_API km_status km_chambers(const km_surface* surface, int end_a_is_z,
                             km_format format, km_document** out);
KM_API km_status km_walls(const km_surface* surface, uint32_t count,
                          km_format format, km_document** out);
KM_API km_status km_pell(const km_surface* surface, uint32_t count,
                         km_format format, km_document** out);
KM_API km_status km_table(int64_t n_first, int64_t n_last, km_format format,
                          km_document** out);
KM_API km_status km_verify(const km_verify_options* options,
                           km_format format, km_document** out);

KM_API const char* km_document_text(const km_document* doc);
KM_API size_t km_document_size(const km_document* doc);
/* 1 when every verdict in the document passed (always 1 outside verify). */
KM_API int km_document_passed(const km_document* doc);
KM_API void km_document_destroy(km_document* doc);

#ifdef __cplusplus
}
#endif

#endif /* KUMMER_KUMMER_H */
