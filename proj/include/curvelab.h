/* C interface to the curve library. All strings returned through char** are
 * heap-allocated and released with cl_string_free. Handles are opaque and
 * released with their *_free function; passing NULL to a free function is a
 * no-op. On failure a function returns a nonzero status and
 * cl_last_error() describes it (per thread). */
#ifndef CURVELAB_H
#define CURVELAB_H

#include <stdint.h>

#if defined(_WIN32)
#define CURVELAB_API __declspec(dllexport)
#else
#define CURVELAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_INVALID_ARGUMENT = 1,
  CL_ERR_RING_MISMATCH = 2,
  CL_ERR_NOT_HOMOGENEOUS = 3,
  CL_ERR_RESOURCE_LIMIT = 4,
  CL_ERR_CONSTRUCTION_FAILURE = 5,
  CL_ERR_PARSE = 6,
  CL_ERR_NOT_A_CURVE = 7,
  CL_ERR_INTERNAL = 8,
  CL_ERR_UNKNOWN = 9
} cl_status;

typedef struct cl_ideal cl_ideal;
typedef struct cl_curve cl_curve;

CURVELAB_API const char* cl_version(void);
CURVELAB_API const char* cl_last_error(void);
CURVELAB_API const char* cl_status_name(cl_status status);
CURVELAB_API void cl_string_free(char* s);

/* 32003 unless CURVELAB_CHAR names another prime. */
CURVELAB_API cl_status cl_default_characteristic(uint32_t* out);

/* Ideal text: one generator per line in x, y, z, t; '#' starts a comment. */
CURVELAB_API cl_status cl_ideal_parse(const char* text, uint32_t characteristic, cl_ideal** out);
CURVELAB_API cl_status cl_ideal_text(const cl_ideal* ideal, const char* header, char** out);
CURVELAB_API void cl_ideal_free(cl_ideal* ideal);

typedef struct cl_construct_params {
  const char* kind; /* "set", "extremal", "subextremal" */
  int d;
  int g;
  int b;
  int has_b;
  int ci;
  uint64_t seed;
  uint32_t characteristic; /* 0: default */
} cl_construct_params;

/* Fails with CL_ERR_CONSTRUCTION_FAILURE (message names the certificate) when
 * no draw passes its certificates. */
CURVELAB_API cl_status cl_construct(const cl_construct_params* params, cl_curve** out);
/* Wraps an arbitrary ideal; a non-saturated ideal is saturated and the
 * report carries a notice. `seed` drives the plane sampling of the analysis. */
CURVELAB_API cl_status cl_curve_from_ideal(const cl_ideal* ideal, uint64_t seed, cl_curve** out);
CURVELAB_API cl_status cl_curve_ideal(const cl_curve* curve, cl_ideal** out);
/* JSON report (schema_version 1). all_pass may be NULL. */
CURVELAB_API cl_status cl_curve_report(const cl_curve* curve, char** json, int* all_pass);
CURVELAB_API void cl_curve_free(cl_curve* curve);

/* Closed-form tables for (d, g[, b]) as JSON. */
CURVELAB_API cl_status cl_formulas(int d, int g, int has_b, int b, char** json);

/* suite: "formulas", "paper" or "kernel". Genus bounds apply when has_g. */
CURVELAB_API cl_status cl_verify(const char* suite, int d_lo, int d_hi, int has_g, int g_lo, int g_hi,
                                 uint64_t seed, uint32_t characteristic, char** json, int64_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* CURVELAB_H */
