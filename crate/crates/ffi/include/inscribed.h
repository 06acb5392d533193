#ifndef INSCRIBED_H
#define INSCRIBED_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum InscribedStatus {
  INSCRIBED_STATUS_OK = 0,
  INSCRIBED_STATUS_NULL_POINTER = 1,
  INSCRIBED_STATUS_INVALID_INPUT = 2,
  INSCRIBED_STATUS_SEARCH_FAILURE = 3,
  INSCRIBED_STATUS_INTERNAL = 5,
} InscribedStatus;

/**
 * A point configuration, optionally inscribed with a marked pole.
 */
typedef struct InscribedConfig InscribedConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call into this library on the same thread.
 */
const char *inscribed_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be NULL.
 */
void inscribed_string_free(char *s);

/**
 * Parses a `point_configuration` artifact, validating it.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum InscribedStatus inscribed_config_from_json(const char *json, struct InscribedConfig **out);

/**
 * # Safety
 * `cfg` must come from this library or be NULL; it must not be used after.
 */
void inscribed_config_free(struct InscribedConfig *cfg);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum InscribedStatus inscribed_config_to_json(const struct InscribedConfig *cfg, char **out);

/**
 * # Safety
 * `cfg` must be a live handle and the outputs writable.
 */
enum InscribedStatus inscribed_config_shape(const struct InscribedConfig *cfg,
                                            size_t *len,
                                            size_t *dim);

/**
 * Sign of `det[(p_1,1), …, (p_{d+1},1)]` for the 1-based `labels`.
 *
 * # Safety
 * `labels` must point to `count` values; `out` must be writable.
 */
enum InscribedStatus inscribed_orientation(const struct InscribedConfig *cfg,
                                           const size_t *labels,
                                           size_t count,
                                           int32_t *out);

/**
 * Position of the last of `d+2` labelled points relative to the sphere
 * through the others: +1 outside, 0 on, −1 inside.
 *
 * # Safety
 * `labels` must point to `count` values; `out` must be writable.
 */
enum InscribedStatus inscribed_in_sphere(const struct InscribedConfig *cfg,
                                         const size_t *labels,
                                         size_t count,
                                         int32_t *out);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum InscribedStatus inscribed_is_neighborly(const struct InscribedConfig *cfg, bool *out);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum InscribedStatus inscribed_is_inscribed(const struct InscribedConfig *cfg, bool *out);

/**
 * `face_lattice` artifact of the convex hull.
 *
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum InscribedStatus inscribed_facets_json(const struct InscribedConfig *cfg, char **out);

/**
 * `subdivision` artifact of the Delaunay subdivision.
 *
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum InscribedStatus inscribed_delaunay_json(const struct InscribedConfig *cfg,
                                             bool strict_boundary,
                                             char **out);

/**
 * Lexicographic lifting; `signs` is a string over `+` and `-` of length
 * `n − d`.
 *
 * # Safety
 * `cfg` must be a live handle, `signs` NUL-terminated, `out` writable.
 */
enum InscribedStatus inscribed_lex_lift(const struct InscribedConfig *cfg,
                                        const char *signs,
                                        bool delaunay,
                                        struct InscribedConfig **out);

/**
 * Neighborly configuration of `2d+8` points in `R^{2d+4}` from `d+4`
 * points in `R^d`.
 *
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum InscribedStatus inscribed_kortenkamp(const struct InscribedConfig *cfg,
                                          uint64_t budget,
                                          uint64_t seed,
                                          struct InscribedConfig **out);

/**
 * Inscribed neighborly polytope with `2n+2` vertices in `R^{2n−2}` from `n`
 * points in `R^{n−4}`; the pole is marked.
 *
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum InscribedStatus inscribed_neighborly_pipeline(const struct InscribedConfig *cfg,
                                                   uint64_t seed,
                                                   uint64_t budget,
                                                   struct InscribedConfig **out);

/**
 * Number of distinct real roots of `f_m`.
 *
 * # Safety
 * `out` must be writable.
 */
enum InscribedStatus inscribed_fm_root_count(size_t m, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INSCRIBED_H */
