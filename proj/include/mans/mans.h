/* mans.h -- C interface to the monotone-Apery numerical semigroup library.
 *
 * Handles are opaque; every fallible call returns a mans_status and writes
 * its result through out-pointers. Array getters follow a two-call pattern:
 * pass out = NULL (or a too-small capacity) to learn the required length
 * through *count. Strings returned through char** are heap-allocated and
 * must be released with mans_string_free().
 *
 * A human-readable description of the most recent failure on the calling
 * thread is available from mans_last_error().
 */

#ifndef MANS_H
#define MANS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mans_status {
  MANS_OK = 0,
  MANS_ERR_INVALID_ARGUMENT = 1,
  MANS_ERR_EMPTY_INPUT = 2,
  MANS_ERR_GCD_NOT_ONE = 3,
  MANS_ERR_OVERFLOW = 4,
  MANS_ERR_MODULUS_NOT_IN_SEMIGROUP = 5,
  MANS_ERR_UNDEFINED_FOR_NATURALS = 6,
  MANS_ERR_NOT_EMBEDDING_DIM_3 = 7,
  MANS_ERR_NOT_MANS = 8,
  MANS_ERR_INVALID_PARAMS = 9,
  MANS_ERR_NOT_SUITABLY_MONOTONE = 10,
  MANS_ERR_IS_ROOT = 11,
  MANS_ERR_SEARCH_SPACE_TOO_LARGE = 12,
  MANS_ERR_FORMULA_MISMATCH = 13,
  MANS_ERR_BUFFER_TOO_SMALL = 14,
  MANS_ERR_UNKNOWN_SUITE = 15,
  MANS_ERR_INTERNAL = 16
} mans_status;

typedef enum mans_irreducibility {
  MANS_IRR_SYMMETRIC = 0,
  MANS_IRR_PSEUDO_SYMMETRIC = 1,
  MANS_IRR_NEITHER = 2
} mans_irreducibility;

/* A numerical semigroup, stored as its minimal generating set. */
typedef struct mans_semigroup mans_semigroup;

/* The rooted tree of all monotone-Apery semigroups with fixed multiplicity
 * and ratio. */
typedef struct mans_tree mans_tree;

typedef struct mans_profile {
  int64_t multiplicity;
  int64_t ratio;          /* 0 when there is a single minimal generator */
  int64_t max_generator;
  int64_t embedding_dim;
  int64_t frobenius;      /* -1 for the full set of non-negative integers */
  int64_t genus;
  int64_t type_count;     /* size of the pseudo-Frobenius set */
  int is_mans;
  int irreducibility;     /* mans_irreducibility */
} mans_profile;

typedef struct mans_check_report {
  int is_mans;
  int has_failing_index;
  int64_t failing_index;      /* least i with w(i) >= w(i+1) */
  int has_ratio_coefficient;
  int64_t ratio_coefficient;  /* a with ratio = a * multiplicity + 1 */
} mans_check_report;

/* Parameters (m, a, b, t) of the three-generator family <m, am+1, bm+t>,
 * with the derived quotient q and remainder r of (m-1)/t. */
typedef struct mans_e3_params {
  int64_t m;
  int64_t a;
  int64_t b;
  int64_t t;
  int64_t q;
  int64_t r;
} mans_e3_params;

typedef struct mans_verify_result {
  uint64_t cases;
  uint64_t mismatches;
  uint64_t skipped;
  char first_counterexample[240]; /* empty string when everything matched */
} mans_verify_result;

const char* mans_status_name(mans_status status);
const char* mans_last_error(void);

/* --- semigroups ---------------------------------------------------------- */

/* Reduces `values` (count >= 1, positive, gcd 1) to the minimal generating
 * set of the semigroup they span. */
mans_status mans_semigroup_create(const int64_t* values, size_t count,
                                  mans_semigroup** out);
void mans_semigroup_destroy(mans_semigroup* s);

size_t mans_semigroup_generator_count(const mans_semigroup* s);
mans_status mans_semigroup_generators(const mans_semigroup* s, int64_t* out,
                                      size_t capacity, size_t* count);

mans_status mans_semigroup_profile(const mans_semigroup* s, mans_profile* out);
mans_status mans_semigroup_contains(const mans_semigroup* s, int64_t x, int* out);
mans_status mans_semigroup_frobenius(const mans_semigroup* s, int64_t* out);
mans_status mans_semigroup_genus(const mans_semigroup* s, int64_t* out);
mans_status mans_semigroup_pseudo_frobenius(const mans_semigroup* s, int64_t* out,
                                            size_t capacity, size_t* count);
mans_status mans_semigroup_type(const mans_semigroup* s, int64_t* out);
mans_status mans_semigroup_irreducibility(const mans_semigroup* s, int* out);

/* Apery set with respect to `modulus`, which must be a nonzero member; the
 * table always has exactly `modulus` entries. */
mans_status mans_semigroup_apery(const mans_semigroup* s, int64_t modulus,
                                 int64_t* out, size_t capacity, size_t* count);

/* --- monotone Apery checks ----------------------------------------------- */

mans_status mans_semigroup_check_monotone(const mans_semigroup* s,
                                          mans_check_report* out);
mans_status mans_semigroup_check_monotone_recursive(const mans_semigroup* s,
                                                    int* out);
mans_status mans_semigroup_residues_monotone(const mans_semigroup* s, int* out);

/* --- the three-generator family ------------------------------------------ */

mans_status mans_e3_params_of(const mans_semigroup* s, mans_e3_params* out);
mans_status mans_e3_params_make(int64_t m, int64_t a, int64_t b, int64_t t,
                                mans_e3_params* out);
mans_status mans_e3_expand(const mans_e3_params* p, mans_semigroup** out);
mans_status mans_e3_apery(const mans_e3_params* p, int64_t* out,
                          size_t capacity, size_t* count);
mans_status mans_e3_frobenius(const mans_e3_params* p, int64_t* out);
mans_status mans_e3_genus(const mans_e3_params* p, int64_t* out);
mans_status mans_e3_pseudo_frobenius(const mans_e3_params* p, int64_t* out,
                                     size_t capacity, size_t* count);
mans_status mans_e3_is_symmetric(const mans_e3_params* p, int* out);
mans_status mans_e3_is_pseudo_symmetric(const mans_e3_params* p, int* out);

/* Incremental Apery update: `w` is the table of some monotone-Apery
 * semigroup at its multiplicity (`count` entries, count == modulus), and
 * n_new must be suitably monotone for it. Writes `count` entries to `out`,
 * the table of the extended semigroup. */
mans_status mans_apery_extend(const int64_t* w, size_t count, int64_t n_new,
                              int64_t* out);

/* --- tree navigation ------------------------------------------------------ */

mans_status mans_semigroup_suitably_monotone(const mans_semigroup* s,
                                             int64_t* out, size_t capacity,
                                             size_t* count);
mans_status mans_semigroup_child_count(const mans_semigroup* s, int64_t* out);
mans_status mans_semigroup_parent(const mans_semigroup* s, mans_semigroup** out);

/* Breadth-first materialization of the family with multiplicity m and ratio
 * r. A ratio outside the class 1 (mod m) gives an empty tree, not an error.
 * Pass max_depth < 0 for no depth cap. */
mans_status mans_tree_build(int64_t m, int64_t r, int64_t max_depth,
                            mans_tree** out);
void mans_tree_destroy(mans_tree* t);

size_t mans_tree_size(const mans_tree* t);
int64_t mans_tree_multiplicity(const mans_tree* t);
int64_t mans_tree_ratio(const mans_tree* t);
mans_status mans_tree_node_generators(const mans_tree* t, size_t node,
                                      int64_t* out, size_t capacity,
                                      size_t* count);
/* Writes -1 for the root. */
mans_status mans_tree_node_parent(const mans_tree* t, size_t node, int64_t* out);
mans_status mans_tree_node_children(const mans_tree* t, size_t node,
                                    int64_t* out, size_t capacity,
                                    size_t* count);
mans_status mans_tree_node_depth(const mans_tree* t, size_t node, int64_t* out);

mans_status mans_tree_export_dot(const mans_tree* t, char** out);
mans_status mans_tree_export_json(const mans_tree* t, char** out);
void mans_string_free(char* s);

/* --- verification sweeps -------------------------------------------------- */

/* Runs one of the formula-vs-oracle suites: "e3-formulas", "pf", "tree", or
 * "apery-extend". max_gaps <= 0 selects the default oracle limit of 24;
 * family sweeps count oversized (m,r) pairs in `skipped` instead of
 * failing. */
mans_status mans_verify_run(const char* suite, int64_t max_m, int64_t max_a,
                            int64_t max_gaps, mans_verify_result* out);

#ifdef __cplusplus
}
#endif

#endif /* MANS_H */
