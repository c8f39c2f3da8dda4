#ifndef CUBENET_H
#define CUBENET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Number of entries written by [`cubenet_network_census`].
 */
#define CUBENET_LINK_KIND_COUNT 7

/**
 * Link kinds in census order.
 */
typedef enum CubenetLinkKind {
  CUBENET_LINK_KIND_UNIT = 0,
  CUBENET_LINK_KIND_PLANAR_DIAGONAL = 1,
  CUBENET_LINK_KIND_SPATIAL_DIAGONAL = 2,
  CUBENET_LINK_KIND_LONG_PLANAR_DIAGONAL = 3,
  CUBENET_LINK_KIND_LONG_SPATIAL_DIAGONAL = 4,
  CUBENET_LINK_KIND_LONG_EDGE = 5,
  CUBENET_LINK_KIND_OTHER = 6,
} CubenetLinkKind;

/**
 * Result code of every fallible call.
 */
typedef enum CubenetStatus {
  CUBENET_STATUS_OK = 0,
  CUBENET_STATUS_NULL_POINTER = 1,
  CUBENET_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input: selector, JSON, or a violated problem constraint.
   */
  CUBENET_STATUS_INVALID_INPUT = 3,
  /**
   * The requested network exceeds the node cap.
   */
  CUBENET_STATUS_SIZE_LIMIT = 4,
  CUBENET_STATUS_PRECONDITION = 5,
  CUBENET_STATUS_OUT_OF_RANGE = 6,
  CUBENET_STATUS_INTERNAL = 7,
} CubenetStatus;

/**
 * Opaque result of a pairwise congestion sweep.
 */
typedef struct CubenetCongestion CubenetCongestion;

/**
 * Opaque complete network.
 */
typedef struct CubenetNetwork CubenetNetwork;

typedef struct CubenetCongestionCounts {
  size_t point_events;
  size_t line_events;
  size_t full_events;
  size_t point_coordinates;
  size_t links_total;
  size_t links_congested;
  size_t external_events;
  size_t full_nodes;
} CubenetCongestionCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *cubenet_last_error(void);

/**
 * Library version, statically allocated.
 */
const char *cubenet_version(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void cubenet_string_free(char *s);

/**
 * Builds the network named by `selector` (for example `cube` or
 * `lattice:3,3,3`). A `node_cap` of 0 selects the default cap.
 *
 * # Safety
 * `selector` must be a nul-terminated string; `out` must be writable.
 */
enum CubenetStatus cubenet_network_build(const char *selector,
                                         size_t node_cap,
                                         struct CubenetNetwork **out);

/**
 * Parses a network JSON document.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum CubenetStatus cubenet_network_from_json(const char *json, struct CubenetNetwork **out);

/**
 * # Safety
 * `net` must come from this library and not have been freed. Null is ignored.
 */
void cubenet_network_free(struct CubenetNetwork *net);

/**
 * # Safety
 * `net` must be a live handle; `out` must be writable.
 */
enum CubenetStatus cubenet_network_node_count(const struct CubenetNetwork *net, size_t *out);

/**
 * # Safety
 * `net` must be a live handle; `out` must be writable.
 */
enum CubenetStatus cubenet_network_link_count(const struct CubenetNetwork *net, size_t *out);

/**
 * Writes the lattice coordinates of node `index` into `out[0..3]`.
 *
 * # Safety
 * `net` must be a live handle; `out` must point to three writable values.
 */
enum CubenetStatus cubenet_network_node(const struct CubenetNetwork *net,
                                        size_t index,
                                        int64_t *out);

/**
 * Writes the endpoint node indices and the kind of link `index`.
 *
 * # Safety
 * `net` must be a live handle; the out-pointers must be writable.
 */
enum CubenetStatus cubenet_network_link(const struct CubenetNetwork *net,
                                        size_t index,
                                        size_t *out_a,
                                        size_t *out_b,
                                        enum CubenetLinkKind *out_kind);

/**
 * Writes link counts per kind, indexed by [`CubenetLinkKind`].
 *
 * # Safety
 * `net` must be a live handle; `counts` must point to `len` writable values.
 */
enum CubenetStatus cubenet_network_census(const struct CubenetNetwork *net,
                                          size_t *counts,
                                          size_t len);

/**
 * Serializes the network as JSON. Free the result with
 * [`cubenet_string_free`].
 *
 * # Safety
 * `net` must be a live handle; `out` must be writable.
 */
enum CubenetStatus cubenet_network_to_json(const struct CubenetNetwork *net, char **out);

/**
 * Classifies every link pair of `net`.
 *
 * # Safety
 * `net` must be a live handle; `out` must be writable.
 */
enum CubenetStatus cubenet_congestion_analyze(const struct CubenetNetwork *net,
                                              struct CubenetCongestion **out);

/**
 * # Safety
 * `c` must come from this library and not have been freed. Null is ignored.
 */
void cubenet_congestion_free(struct CubenetCongestion *c);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum CubenetStatus cubenet_congestion_counts(const struct CubenetCongestion *c,
                                             struct CubenetCongestionCounts *out);

/**
 * Summary JSON of the sweep, as written by the `congestion` command.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum CubenetStatus cubenet_congestion_summary_json(const struct CubenetCongestion *c, char **out);

/**
 * One CSV row per congestion event.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum CubenetStatus cubenet_congestion_events_csv(const struct CubenetCongestion *c, char **out);

/**
 * Best response of one player problem given as JSON.
 *
 * # Safety
 * `problem_json` must be a nul-terminated string; `out` must be writable.
 */
enum CubenetStatus cubenet_best_response_json(const char *problem_json, char **out);

/**
 * Kuhn-Tucker report of an allocation (`{"x_self": .., "x": [..]}`).
 *
 * # Safety
 * Both inputs must be nul-terminated strings; `out` must be writable.
 */
enum CubenetStatus cubenet_kt_verify_json(const char *problem_json,
                                          const char *allocation_json,
                                          char **out);

/**
 * Seeded uniform draw among the best responses.
 *
 * # Safety
 * `problem_json` must be a nul-terminated string; `out` must be writable.
 */
enum CubenetStatus cubenet_sample_best_response_json(const char *problem_json,
                                                     uint64_t seed,
                                                     char **out);

/**
 * Runs the published-count checks. `out_pass` receives the overall
 * verdict; `out_json`, when not null, receives the full report.
 *
 * # Safety
 * `out_pass` must be writable; `out_json` must be writable or null.
 */
enum CubenetStatus cubenet_verify_paper(bool *out_pass, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBENET_H */
