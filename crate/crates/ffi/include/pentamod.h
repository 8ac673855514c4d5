#ifndef PENTAMOD_H
#define PENTAMOD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PentamodStatus {
  PENTAMOD_STATUS_OK = 0,
  PENTAMOD_STATUS_NULL_POINTER = 1,
  PENTAMOD_STATUS_UNSUPPORTED_SOLID = 2,
  PENTAMOD_STATUS_INVALID_ARGUMENT = 3,
  PENTAMOD_STATUS_OUT_OF_RANGE = 4,
  PENTAMOD_STATUS_DEGENERATE = 5,
  PENTAMOD_STATUS_PANIC = 6,
} PentamodStatus;

typedef enum PentamodChart {
  PENTAMOD_CHART_A = 0,
  PENTAMOD_CHART_B = 1,
  PENTAMOD_CHART_M = 2,
} PentamodChart;

typedef enum PentamodCurve {
  PENTAMOD_CURVE_GAMMA_A = 0,
  PENTAMOD_CURVE_GAMMA_B = 1,
  PENTAMOD_CURVE_GAMMA_C_IN_A = 2,
  PENTAMOD_CURVE_GAMMA_C_IN_B = 3,
} PentamodCurve;

/**
 * Opaque handle for one of the three solids.
 */
typedef struct PentamodSolid PentamodSolid;

typedef struct PentamodConstants {
  uint32_t n;
  uint32_t faces;
  double d_ab;
  double d_am;
  double d_bm;
  double lambda_a;
  double lambda_b;
  double lambda_c;
} PentamodConstants;

typedef struct PentamodMembership {
  bool analytic;
  bool oracle;
  /**
   * Region index, or 0 when the point lies on a dividing circle.
   */
  uint32_t region;
} PentamodMembership;

typedef struct PentamodAreas {
  double a1;
  double a2;
  double a3;
  double a7;
  double a4;
  double a5;
  double a8;
  double a13;
  double total;
  double total_over_pi;
  double fraction_of_sphere;
} PentamodAreas;

typedef struct PentamodCurvePoint {
  double theta;
  double r;
  /**
   * Chart coordinate.
   */
  double x;
  double y;
  /**
   * Point on the unit sphere, in world coordinates.
   */
  double xi[3];
} PentamodCurvePoint;

typedef struct PentamodMonteCarlo {
  uint64_t samples;
  uint64_t hits;
  double estimate;
  double std_error;
} PentamodMonteCarlo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a NUL-terminated string with static lifetime.
 */
const char *pentamod_version(void);

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated, truncated to `len`).
 * Returns the full message length in bytes, excluding the terminator.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes.
 */
size_t pentamod_last_error_message(char *buf, size_t len);

/**
 * Creates a handle for n ∈ {3, 4, 5}. Free it with `pentamod_solid_free`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum PentamodStatus pentamod_solid_new(uint32_t n, struct PentamodSolid **out);

/**
 * # Safety
 * `solid` must be null or a handle from `pentamod_solid_new` that was not freed before.
 */
void pentamod_solid_free(struct PentamodSolid *solid);

/**
 * # Safety
 * `solid` must be a live handle; `out` must be valid for writes.
 */
enum PentamodStatus pentamod_constants(const struct PentamodSolid *solid,
                                       struct PentamodConstants *out);

/**
 * Membership of the anchor at chart coordinate x + iy, by the analytic predicate and by
 * building the pentagon.
 *
 * # Safety
 * `solid` must be a live handle; `out` must be valid for writes.
 */
enum PentamodStatus pentamod_check(const struct PentamodSolid *solid,
                                   enum PentamodChart chart,
                                   double x,
                                   double y,
                                   struct PentamodMembership *out);

/**
 * # Safety
 * `solid` must be a live handle; `out` must be valid for writes.
 */
enum PentamodStatus pentamod_areas(const struct PentamodSolid *solid, struct PentamodAreas *out);

/**
 * Point of a boundary curve at chart angle `theta`, in the curve's own chart.
 *
 * # Safety
 * `solid` must be a live handle; `out` must be valid for writes.
 */
enum PentamodStatus pentamod_gamma_point(const struct PentamodSolid *solid,
                                         enum PentamodCurve curve,
                                         double theta,
                                         struct PentamodCurvePoint *out);

/**
 * Monte Carlo area of the moduli; `samples` must be at least 1000.
 *
 * # Safety
 * `solid` must be a live handle; `out` must be valid for writes.
 */
enum PentamodStatus pentamod_monte_carlo(const struct PentamodSolid *solid,
                                         uint64_t samples,
                                         uint64_t seed,
                                         struct PentamodMonteCarlo *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PENTAMOD_H */
