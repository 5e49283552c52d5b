/* SPDX-License-Identifier: Apache-2.0 */
#ifndef OPSLICER_OPSLICER_H
#define OPSLICER_OPSLICER_H

#include <stddef.h>

#if defined(_WIN32)
#define OS_API __declspec(dllexport)
#else
#define OS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handle to a globular or symmetric presentation. */
typedef struct os_presentation os_presentation;

typedef enum os_status {
  OS_OK = 0,
  OS_ERR_PARSE = 1,    /* malformed text; message carries line and column */
  OS_ERR_DOMAIN = 2,   /* well-formed input violating a precondition */
  OS_ERR_BOUNDARY = 3, /* incompatible pasting-diagram boundaries */
  OS_ERR_NOT_FOUND = 4,
  OS_ERR_ARGUMENT = 5, /* null pointer or wrong presentation kind */
  OS_ERR_INTERNAL = 6
} os_status;

typedef struct os_budget {
  size_t max_arity;
  size_t max_tree_nodes;
  size_t max_rewrite_depth;
  size_t max_frontier;
  size_t closure_slack;
} os_budget;

/* Message of the last failed call on this thread; never NULL. */
OS_API const char* os_last_error(void);
/* Releases strings returned through char** out-parameters. */
OS_API void os_string_free(char* s);

/* Reads a DSL file, or a catalog entry when the argument is "catalog:KEY". */
OS_API os_status os_presentation_load(const char* source, os_presentation** out);
/* Parses DSL text; the header line decides between the two kinds. */
OS_API os_status os_presentation_parse(const char* text, os_presentation** out);
OS_API void os_presentation_free(os_presentation* p);
OS_API int os_presentation_is_symmetric(const os_presentation* p);
/* Canonical DSL text, or JSON when json is non-zero. */
OS_API os_status os_presentation_print(const os_presentation* p, int json, char** out);

/* *ok is 1 when every declaration is well formed. */
OS_API os_status os_validate(const os_presentation* p, int json, int* ok, char** report);
/* k-th slice of a globular presentation. */
OS_API os_status os_slice(const os_presentation* p, size_t k, os_presentation** out);
/* *plain is 1 when every relation of a symmetric presentation is twist free. */
OS_API os_status os_check_plain(const os_presentation* p, int* plain);

/* Library defaults, overridden by OPERAD_SLICER_BUDGET="nodes,depth,frontier". */
OS_API os_status os_default_budget(os_budget* out);
OS_API os_status os_enumerate(const os_presentation* p, size_t arity, const os_budget* b,
                              int json, char** out);
OS_API os_status os_classes(const os_presentation* p, size_t arity, const os_budget* b,
                            int json, char** out);
/* Proves each lemma lhs = rhs in order, then lhs = rhs using the lemmas.
   *found is 0 when a search gives up within the budget. */
OS_API os_status os_prove(const os_presentation* p, const char* lhs, const char* rhs,
                          const char* const* lemma_lhs, const char* const* lemma_rhs,
                          size_t lemma_count, const os_budget* b, int json, int* found,
                          char** out);

/* Pasting-diagram shape of a term of a globular presentation. */
OS_API os_status os_shape(const os_presentation* p, const char* term, int json, char** out);
/* Twist permutation and erasure image of a dimension-k term. */
OS_API os_status os_twist(const os_presentation* p, size_t k, const char* term, int json,
                          char** out);

OS_API os_status os_catalog_list(int json, char** out);
/* Key, provenance and text of an entry. */
OS_API os_status os_catalog_show(const char* key, int json, char** out);
/* Canonical DSL text of an entry. */
OS_API os_status os_catalog_export(const char* key, char** out);

#ifdef __cplusplus
}
#endif

#endif /* OPSLICER_OPSLICER_H */
