#ifndef MONOIDEAL_H
#define MONOIDEAL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a call. The first four values match the command-line exit
 * codes.
 */
typedef enum MiStatus {
  MI_STATUS_OK = 0,
  MI_STATUS_NEGATIVE = 1,
  MI_STATUS_INPUT_ERROR = 2,
  MI_STATUS_BUDGET_EXCEEDED = 3,
  MI_STATUS_NULL_POINTER = 4,
  MI_STATUS_PANIC = 5,
} MiStatus;

/**
 * A parsed monomial file: alphabet, antichain and ordering.
 */
typedef struct MiProblem MiProblem;

/**
 * A parsed graph with its set `T`.
 */
typedef struct MiTGraph MiTGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call on the same thread.
 */
const char *mi_last_error_message(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` is null or came from this library and was not freed before.
 */
void mi_string_free(char *s);

/**
 * Parses a monomial file. The ordering is the file's order line, or index
 * order when absent. Non-minimal members are dropped.
 *
 * # Safety
 * `src` is a NUL-terminated string and `out` is writable.
 */
enum MiStatus mi_problem_parse(const char *src, struct MiProblem **out);

/**
 * # Safety
 * `p` is null or came from [`mi_problem_parse`] and was not freed before.
 */
void mi_problem_free(struct MiProblem *p);

/**
 * Number of letters.
 *
 * # Safety
 * `p` is a live problem handle and `out` is writable.
 */
enum MiStatus mi_problem_letter_count(const struct MiProblem *p, uintptr_t *out);

/**
 * Replaces the ordering, given as letter names (e.g. "b a c").
 *
 * # Safety
 * `p` is a live problem handle and `order` a NUL-terminated string.
 */
enum MiStatus mi_problem_set_order(struct MiProblem *p, const char *order);

/**
 * Finite generation of the sorted-word ideal under the problem's
 * ordering. Returns `MI_STATUS_OK` when finite and `MI_STATUS_NEGATIVE` when not.
 *
 * # Safety
 * `p` is a live problem handle.
 */
enum MiStatus mi_check_fg(const struct MiProblem *p);

/**
 * Searches for a cool ordering. On `MI_STATUS_OK`, when `order_out` is non-null,
 * the ordering is written there as `letter_count` letter indices, smallest
 * first. Returns `MI_STATUS_NEGATIVE` when no ordering is cool.
 *
 * # Safety
 * `p` is a live problem handle; `order_out` is null or has room for
 * `letter_count` values.
 */
enum MiStatus mi_find_cool(const struct MiProblem *p, uintptr_t *order_out);

/**
 * Whether every ordering is cool.
 *
 * # Safety
 * `p` is a live problem handle.
 */
enum MiStatus mi_all_orderings_cool(const struct MiProblem *p);

/**
 * Finite generation of the full preimage in the free monoid.
 *
 * # Safety
 * `p` is a live problem handle.
 */
enum MiStatus mi_preimage_fg(const struct MiProblem *p);

/**
 * Minimal generators under the problem's ordering as a JSON array of
 * words. Returns `MI_STATUS_NEGATIVE` (and writes nothing) when the ideal is not
 * finitely generated.
 *
 * # Safety
 * `p` is a live problem handle and `out` is writable.
 */
enum MiStatus mi_generators_json(const struct MiProblem *p, char **out);

/**
 * Parses a graph in `p tgraph` format.
 *
 * # Safety
 * `src` is a NUL-terminated string and `out` is writable.
 */
enum MiStatus mi_tgraph_parse(const char *src, struct MiTGraph **out);

/**
 * # Safety
 * `g` is null or came from [`mi_tgraph_parse`] and was not freed before.
 */
void mi_tgraph_free(struct MiTGraph *g);

/**
 * Whether the graph has an acyclic orientation transitive at every vertex
 * of `T`.
 *
 * # Safety
 * `g` is a live graph handle.
 */
enum MiStatus mi_tgraph_has_t_orientation(const struct MiTGraph *g);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MONOIDEAL_H */
