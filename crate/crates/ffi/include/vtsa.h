#ifndef VTSA_H
#define VTSA_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define VTSA_OK 0

#define VTSA_ERR_NULL_POINTER 1

#define VTSA_ERR_INVALID_ARGUMENT 2

#define VTSA_ERR_PARSE 3

#define VTSA_ERR_PRECONDITION 4

#define VTSA_ERR_RESOURCE 5

#define VTSA_ERR_ASSERTION 6

#define VTSA_ERR_IO 7

#define VTSA_ERR_BUFFER_TOO_SMALL 8

#define VTSA_ERR_PANIC 9

#define VTSA_OUTCOME_BOUNDED 0

#define VTSA_OUTCOME_REDUCED_QP 1

#define VTSA_OUTCOME_REDUCED_BIQP 2

#define VTSA_OUTCOME_UNCLASSIFIED 3

#define VTSA_CMP_LESS_OR_EQUAL 0

#define VTSA_CMP_GREATER 1

#define VTSA_CMP_UNDECIDED 2

// A simple graph.
typedef struct VtsaGraph VtsaGraph;

// A permutation group.
typedef struct VtsaGroup VtsaGroup;

// A validated graph-group pair.
typedef struct VtsaPair VtsaPair;

// The result of running the reduction on a pair.
typedef struct VtsaReduction VtsaReduction;

// Structural profile of the group of a pair.
typedef struct VtsaProfile {
  bool quasiprimitive;
  bool biquasiprimitive;
  bool semiprimitive;
  size_t max_normal_orbits;
} VtsaProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version string of the library, statically allocated.
const char *vtsa_version(void);

// Copies the last error message raised on this thread.
//
// # Safety
// `buf` must be null or valid for `len` bytes; `needed` must be null or valid.
int32_t vtsa_last_error_message(char *buf, size_t len, size_t *needed);

// Seeds the randomised phase of group computations. Results do not depend on it.
void vtsa_set_seed(uint64_t seed);

// Builds a group of the given degree from `count` generators laid out
// consecutively in `images`, each as `degree` point images.
//
// # Safety
// `images` must hold `degree * count` values; `out` must be valid.
int32_t vtsa_group_from_images(size_t degree,
                               const uint32_t *images,
                               size_t count,
                               struct VtsaGroup **out);

// Parses a group in the text format used by `.group` files.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be valid.
int32_t vtsa_group_parse(const char *src, struct VtsaGroup **out);

// # Safety
// `group` must be null or a handle from this library, not yet freed.
void vtsa_group_free(struct VtsaGroup *group);

// # Safety
// Pointers must be valid.
int32_t vtsa_group_degree(const struct VtsaGroup *group, size_t *out);

// Group order as a decimal string.
//
// # Safety
// `group` must be valid; `buf` must be null or valid for `len` bytes.
int32_t vtsa_group_order(const struct VtsaGroup *group, char *buf, size_t len, size_t *needed);

// Whether the permutation with images `images[0..degree]` lies in the group.
//
// # Safety
// `images` must hold the group's degree many values.
int32_t vtsa_group_contains(const struct VtsaGroup *group, const uint32_t *images, bool *out);

// Builds an undirected graph on `n` vertices from `count` edges given as
// consecutive vertex pairs in `edges`.
//
// # Safety
// `edges` must hold `2 * count` values; `out` must be valid.
int32_t vtsa_graph_from_edges(size_t n,
                              const uint32_t *edges,
                              size_t count,
                              struct VtsaGraph **out);

// Parses a graph in the text format used by `.graph` files.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be valid.
int32_t vtsa_graph_parse(const char *src, struct VtsaGraph **out);

// # Safety
// `graph` must be null or a handle from this library, not yet freed.
void vtsa_graph_free(struct VtsaGraph *graph);

// # Safety
// Pointers must be valid.
int32_t vtsa_graph_order(const struct VtsaGraph *graph, size_t *out);

// Validates a pair. The graph and group are copied, so the caller still owns
// and frees its handles.
//
// # Safety
// Pointers must be valid.
int32_t vtsa_pair_new(const struct VtsaGraph *graph,
                      const struct VtsaGroup *group,
                      size_t d,
                      struct VtsaPair **out);

// Reads and validates a `.pair` file.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be valid.
int32_t vtsa_pair_read(const char *path, struct VtsaPair **out);

// Builds a catalogue example. `keys` and `values` give `count` integer
// parameters such as `n` or `k`; pass zero for the defaults.
//
// # Safety
// `name` must be a NUL-terminated string; `keys` and `values` must hold
// `count` entries; `out` must be valid.
int32_t vtsa_example(const char *name,
                     const char *const *keys,
                     const uint64_t *values,
                     size_t count,
                     struct VtsaPair **out);

// # Safety
// `pair` must be null or a handle from this library, not yet freed.
void vtsa_pair_free(struct VtsaPair *pair);

// Number of vertices.
//
// # Safety
// Pointers must be valid.
int32_t vtsa_pair_vertices(const struct VtsaPair *pair, size_t *out);

// Valency of the graph.
//
// # Safety
// Pointers must be valid.
int32_t vtsa_pair_valency(const struct VtsaPair *pair, size_t *out);

// A copy of the pair's group.
//
// # Safety
// Pointers must be valid.
int32_t vtsa_pair_group(const struct VtsaPair *pair, struct VtsaGroup **out);

// # Safety
// Pointers must be valid.
int32_t vtsa_pair_profile(const struct VtsaPair *pair, struct VtsaProfile *out);

// Local action at `vertex` as a JSON object.
//
// # Safety
// `pair` must be valid; `buf` must be null or valid for `len` bytes.
int32_t vtsa_pair_local_json(const struct VtsaPair *pair,
                             uint32_t vertex,
                             char *buf,
                             size_t len,
                             size_t *needed);

// Runs the reduction appropriate to the pair's profile.
//
// # Safety
// Pointers must be valid.
int32_t vtsa_pair_reduce(const struct VtsaPair *pair, struct VtsaReduction **out);

// # Safety
// `reduction` must be null or a handle from this library, not yet freed.
void vtsa_reduction_free(struct VtsaReduction *reduction);

// One of the `VTSA_OUTCOME_*` values.
//
// # Safety
// Pointers must be valid.
int32_t vtsa_reduction_outcome(const struct VtsaReduction *reduction, int32_t *out);

// Name of the route the reduction took.
//
// # Safety
// `reduction` must be valid; `buf` must be null or valid for `len` bytes.
int32_t vtsa_reduction_route(const struct VtsaReduction *reduction,
                             char *buf,
                             size_t len,
                             size_t *needed);

// Route, outcome and check trace as a JSON object.
//
// # Safety
// `reduction` must be valid; `buf` must be null or valid for `len` bytes.
int32_t vtsa_reduction_json(const struct VtsaReduction *reduction,
                            char *buf,
                            size_t len,
                            size_t *needed);

// The `index`-th reduced pair: one for a quasiprimitive reduction, two for a
// bi-quasiprimitive one.
//
// # Safety
// Pointers must be valid.
int32_t vtsa_reduction_pair(const struct VtsaReduction *reduction,
                            size_t index,
                            struct VtsaPair **out);

// Compares a bound expression against a decimal integer. Writes one of the
// `VTSA_CMP_*` values.
//
// # Safety
// `expr` and `value` must be NUL-terminated strings; `out` must be valid.
int32_t vtsa_bound_compare(const char *expr, const char *value, int32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VTSA_H */
