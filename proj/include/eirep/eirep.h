#ifndef EIREP_EIREP_H
#define EIREP_EIREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EIREP_API __declspec(dllexport)
#else
#define EIREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eirep_status {
  EIREP_OK = 0,
  EIREP_ERR_ARGUMENT = 1,     /* null handle or out-of-range index */
  EIREP_ERR_IO = 2,           /* file could not be read or written */
  EIREP_ERR_PARSE = 3,        /* malformed document; see eirep_last_error_line */
  EIREP_ERR_INPUT = 4,        /* inconsistent input */
  EIREP_ERR_STRUCTURAL = 5,   /* category or biset axioms fail */
  EIREP_ERR_PRECONDITION = 6, /* documented precondition does not hold */
  EIREP_ERR_FIELD = 7,        /* field does not split the groups */
  EIREP_ERR_RESOURCE = 8,     /* size budget exceeded */
  EIREP_ERR_CONSISTENCY = 9,  /* two results that must agree did not */
  EIREP_ERR_INTERNAL = 10
} eirep_status;

typedef enum eirep_outcome { EIREP_FINITE = 0, EIREP_INFINITE = 1, EIREP_UNKNOWN = 2 } eirep_outcome;

typedef struct eirep_category eirep_category;
typedef struct eirep_subcategory eirep_subcategory;
typedef struct eirep_rep eirep_rep;
typedef struct eirep_verdict eirep_verdict;
typedef struct eirep_quiver eirep_quiver;

EIREP_API const char* eirep_version(void);

/* Message of the last failed call on this thread; empty after a successful call. */
EIREP_API const char* eirep_last_error(void);
/* 1-based location of the last parse error on this thread, 0 when unknown. */
EIREP_API size_t eirep_last_error_line(void);
EIREP_API size_t eirep_last_error_column(void);

/* Strings returned through char** are owned by the caller. */
EIREP_API void eirep_string_free(char* s);

/* Categories */
EIREP_API eirep_status eirep_category_load(const char* path, eirep_category** out);
EIREP_API eirep_status eirep_category_parse(const char* json_text, eirep_category** out);
EIREP_API void eirep_category_free(eirep_category* c);
EIREP_API size_t eirep_category_object_count(const eirep_category* c);
EIREP_API size_t eirep_category_morphism_count(const eirep_category* c);
/* The returned name lives as long as the category. */
EIREP_API const char* eirep_category_object_name(const eirep_category* c, size_t object);
/* Structural report as JSON: {"ok", "problems", "notes"}; *ok is 1 when every check passes. */
EIREP_API eirep_status eirep_category_validate(const eirep_category* c, int* ok, char** report_json);
/* Human-readable summary: groups, hom sizes, underlying quiver. */
EIREP_API eirep_status eirep_category_info(const eirep_category* c, char** text);

/* Decider. p is 0 or a prime. */
EIREP_API eirep_status eirep_decide(const eirep_category* c, uint32_t p, int extended, uint64_t seed,
                                    eirep_verdict** out);
EIREP_API void eirep_verdict_free(eirep_verdict* v);
EIREP_API eirep_outcome eirep_verdict_outcome(const eirep_verdict* v);
EIREP_API eirep_status eirep_verdict_json(const eirep_verdict* v, char** json_text);
EIREP_API eirep_status eirep_verdict_text(const eirep_verdict* v, char** text);
/* Parses a verdict document back; fails with EIREP_ERR_PARSE on malformed input. */
EIREP_API eirep_status eirep_verdict_parse(const char* json_text, eirep_verdict** out);
EIREP_API int eirep_verdict_equal(const eirep_verdict* a, const eirep_verdict* b);

/* Ordinary quiver over GF(ell); ell = 0 selects the smallest splitting prime not dividing any group order. */
EIREP_API eirep_status eirep_ordinary_quiver(const eirep_category* c, uint32_t ell, uint64_t seed, eirep_quiver** out);
EIREP_API void eirep_quiver_free(eirep_quiver* q);
EIREP_API size_t eirep_quiver_vertex_count(const eirep_quiver* q);
/* Arrows counted with multiplicity. */
EIREP_API size_t eirep_quiver_arrow_count(const eirep_quiver* q);
EIREP_API eirep_status eirep_quiver_text(const eirep_quiver* q, char** text);
EIREP_API eirep_status eirep_quiver_edge_list(const eirep_quiver* q, char** text);

/* Subcategories and representations */
EIREP_API eirep_status eirep_subcategory_load(const eirep_category* c, const char* path, eirep_subcategory** out);
EIREP_API void eirep_subcategory_free(eirep_subcategory* d);
/* A representation of the subcategory d, read from a representation document. */
EIREP_API eirep_status eirep_rep_load(const eirep_subcategory* d, const char* path, eirep_rep** out);
EIREP_API void eirep_rep_free(eirep_rep* r);
/* Induction along d; the result is a representation of the ambient category. */
EIREP_API eirep_status eirep_induce(const eirep_rep* r, const eirep_subcategory* d, eirep_rep** out);
/* Restriction of a representation of the ambient category to d. */
EIREP_API eirep_status eirep_restrict(const eirep_rep* r, const eirep_subcategory* d, eirep_rep** out);
EIREP_API size_t eirep_rep_object_count(const eirep_rep* r);
EIREP_API size_t eirep_rep_dim(const eirep_rep* r, size_t object);
/* Writes *iso = 1 when a and b are isomorphic representations of the same category. */
EIREP_API eirep_status eirep_rep_isomorphic(const eirep_rep* a, const eirep_rep* b, uint64_t seed, int* iso);
/* Dimensions as "x:1 y:0" followed by the matrix of every non-identity morphism. */
EIREP_API eirep_status eirep_rep_text(const eirep_rep* r, char** text);
EIREP_API eirep_status eirep_rep_json(const eirep_rep* r, char** json_text);

#ifdef __cplusplus
}
#endif

#endif
