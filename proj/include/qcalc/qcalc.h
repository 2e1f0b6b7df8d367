// Copyright 2026 The qcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCALC_QCALC_H
#define QCALC_QCALC_H

/*
 * C interface to the qcalc library: calculus on discretized chord-arc sets.
 *
 * Objects are opaque handles created by qcalc_*_build / qcalc_*_parse /
 * qcalc_*_load and released with the matching qcalc_*_free. Every fallible
 * call returns a qcalc_status; on failure qcalc_last_error() describes the
 * problem (per thread, valid until the next call on that thread).
 *
 * Verification calls produce a qcalc_report: a JSON document with a
 * "status" of "pass" or "fail", optionally a CSV attachment. A failed
 * verification is still QCALC_OK; only usage and input problems are errors.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QCALC_BUILDING_LIBRARY)
#    define QCALC_API __declspec(dllexport)
#  else
#    define QCALC_API __declspec(dllimport)
#  endif
#else
#  define QCALC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcalc_status {
    QCALC_OK = 0,
    QCALC_ERR_INVALID_ARGUMENT = 1,
    QCALC_ERR_PARSE = 2,
    QCALC_ERR_RESOURCE_LIMIT = 3,
    QCALC_ERR_DISCONNECTED = 4,
    QCALC_ERR_UNDERDETERMINED = 5,
    QCALC_ERR_UNDERSAMPLED = 6,
    QCALC_ERR_SET_MISMATCH = 7,
    QCALC_ERR_INTERNAL = 8
} qcalc_status;

typedef enum qcalc_side { QCALC_SIDE_LEFT = 0, QCALC_SIDE_RIGHT = 1, QCALC_SIDE_EITHER = 2 } qcalc_side;

typedef struct qcalc_set qcalc_set;
typedef struct qcalc_field qcalc_field;         /* real or complex scalar field */
typedef struct qcalc_covectors qcalc_covectors; /* real or complex-linear covector field */
typedef struct qcalc_report qcalc_report;

/* Named tolerances. Defaults come from qcalc_tolerances_default. */
typedef struct qcalc_tolerances {
    double absolute;     /* "abs": comparisons in every verification, 1e-9 */
    double validate;     /* "validate": relative edge/duplicate checks, 1e-12 */
    double monogenic;    /* "monogenic": Dirac defect, 1e-12 */
    double flat;         /* "flat": flatness / determined-subspace slack, 1e-6 */
    double rank;         /* "rank": relative singular value treated as zero, 1e-12 */
    double ftc;          /* "ftc": FTC residual pass threshold, 1e-12 */
    double curvature;    /* "curvature": C in the C h^2 graph-derivative bound, 1 */
    double decay;        /* "decay": Whitney smallest-bucket constant, 1 */
} qcalc_tolerances;

QCALC_API const char* qcalc_version(void);
QCALC_API const char* qcalc_status_string(qcalc_status status);
QCALC_API const char* qcalc_last_error(void);

QCALC_API void qcalc_tolerances_default(qcalc_tolerances* tol);
/* Unknown names yield QCALC_ERR_INVALID_ARGUMENT. */
QCALC_API qcalc_status qcalc_tolerances_set(qcalc_tolerances* tol, const char* name, double value);

/* Strings returned through char** belong to the caller. */
QCALC_API void qcalc_string_free(char* text);

/* ---- sets ---------------------------------------------------------------- */

QCALC_API qcalc_status qcalc_set_build_polyline(const double* coords, size_t point_count, size_t dim,
                                                qcalc_set** out);
/* cap == 0 selects the default level cap (gasket 8, carpet 5). */
QCALC_API qcalc_status qcalc_set_build_gasket(unsigned level, unsigned cap, qcalc_set** out);
QCALC_API qcalc_status qcalc_set_build_carpet(unsigned level, unsigned cap, qcalc_set** out);
QCALC_API qcalc_status qcalc_set_build_graph(const double* slopes, size_t slope_count, double grid_step,
                                             double span_lo, double span_hi, qcalc_set** out);
QCALC_API qcalc_status qcalc_set_build_dumbbell(double bubble_radius, double neck_width, double step,
                                                qcalc_set** out);
QCALC_API qcalc_status qcalc_set_parse(const char* json, qcalc_set** out);
QCALC_API qcalc_status qcalc_set_load(const char* path, qcalc_set** out);
QCALC_API qcalc_status qcalc_set_serialize(const qcalc_set* set, char** json);
QCALC_API size_t qcalc_set_point_count(const qcalc_set* set);
QCALC_API size_t qcalc_set_edge_count(const qcalc_set* set);
QCALC_API size_t qcalc_set_ambient_dim(const qcalc_set* set);
/* Copies point i into coords[0..dim). */
QCALC_API qcalc_status qcalc_set_point(const qcalc_set* set, size_t i, double* coords);
/* Writes the 16-hex-digit identity that fields refer to (17 bytes incl. NUL). */
QCALC_API qcalc_status qcalc_set_fingerprint(const qcalc_set* set, char* buffer, size_t size);
QCALC_API qcalc_status qcalc_set_validate(const qcalc_set* set, const qcalc_tolerances* tol,
                                          qcalc_report** out);
QCALC_API void qcalc_set_free(qcalc_set* set);

/* ---- fields -------------------------------------------------------------- */

QCALC_API qcalc_status qcalc_field_from_values(const qcalc_set* set, const double* values, qcalc_field** out);
/* values holds (re, im) pairs, one per point. */
QCALC_API qcalc_status qcalc_field_from_complex(const qcalc_set* set, const double* values, qcalc_field** out);
QCALC_API qcalc_status qcalc_field_parse(const char* json, qcalc_field** out);
QCALC_API qcalc_status qcalc_field_load(const char* path, qcalc_field** out);
QCALC_API qcalc_status qcalc_field_serialize(const qcalc_field* field, char** json);
QCALC_API int qcalc_field_is_complex(const qcalc_field* field);
QCALC_API size_t qcalc_field_size(const qcalc_field* field);
/* Real part for complex fields. */
QCALC_API double qcalc_field_value(const qcalc_field* field, size_t i);
QCALC_API void qcalc_field_free(qcalc_field* field);

/* covectors: point_count * ambient_dim entries, row per point. */
QCALC_API qcalc_status qcalc_covectors_from_values(const qcalc_set* set, const double* covectors,
                                                   qcalc_covectors** out);
/* values holds (re, im) pairs: A(x) acts on R^2 = C by multiplication. */
QCALC_API qcalc_status qcalc_covectors_from_complex(const qcalc_set* set, const double* values,
                                                    qcalc_covectors** out);
QCALC_API qcalc_status qcalc_covectors_parse(const char* json, qcalc_covectors** out);
QCALC_API qcalc_status qcalc_covectors_load(const char* path, qcalc_covectors** out);
QCALC_API qcalc_status qcalc_covectors_serialize(const qcalc_covectors* covectors, char** json);
QCALC_API void qcalc_covectors_free(qcalc_covectors* covectors);

/* ---- metric -------------------------------------------------------------- */

/* exhaustive != 0 scans all pairs; otherwise pair_budget random pairs from seed. */
QCALC_API qcalc_status qcalc_k_estimate(const qcalc_set* set, int exhaustive, uint64_t pair_budget,
                                        uint64_t seed, qcalc_report** out);
QCALC_API qcalc_status qcalc_geodesic(const qcalc_set* set, size_t i, size_t j, double* distance,
                                      qcalc_report** out);
/* radius <= 0 selects twice the longest edge; k <= 0 selects the exhaustive k_hat;
 * local_constant < 0 selects the measured local constant. */
QCALC_API qcalc_status qcalc_local_to_global(const qcalc_set* set, const qcalc_field* f, double radius,
                                             double local_constant, double k, const qcalc_tolerances* tol,
                                             qcalc_report** out);

/* ---- calculus ------------------------------------------------------------ */

/* Integrates A along the shortest path from `from` to `to` and compares with f.
 * midpoint_subdivisions == 0 uses the trapezoid rule. */
QCALC_API qcalc_status qcalc_ftc(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a,
                                 size_t from, size_t to, unsigned midpoint_subdivisions,
                                 const qcalc_tolerances* tol, qcalc_report** out);
/* Integral of A around the closed vertex chain (first == last). */
QCALC_API qcalc_status qcalc_loop_defect(const qcalc_set* set, const qcalc_covectors* a,
                                         const size_t* cycle, size_t cycle_length, double* defect);
/* On success *field receives the reconstructed field (may be NULL if unwanted). */
QCALC_API qcalc_status qcalc_reconstruct(const qcalc_set* set, const qcalc_covectors* a, size_t basepoint,
                                         double base_value, const qcalc_tolerances* tol, qcalc_report** out,
                                         qcalc_field** field);
/* k <= 0 selects the exhaustive k_hat. With with_csv != 0 the report carries
 * one CSV row per unordered pair (the orientation with the larger excess). */
QCALC_API qcalc_status qcalc_remainder_check(const qcalc_set* set, const qcalc_field* f,
                                             const qcalc_covectors* a, double k, size_t max_listed,
                                             int with_csv, const qcalc_tolerances* tol, qcalc_report** out);
QCALC_API qcalc_status qcalc_holder_fit(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a,
                                        double k, qcalc_report** out);
QCALC_API qcalc_status qcalc_affine_rigidity(const qcalc_set* set, const qcalc_field* f,
                                             const qcalc_covectors* a, const qcalc_tolerances* tol,
                                             qcalc_report** out);

/* ---- whitney ------------------------------------------------------------- */

/* max_buckets == 0 keeps every populated bucket. */
QCALC_API qcalc_status qcalc_whitney(const qcalc_set* set, const qcalc_field* f, const qcalc_covectors* a,
                                     size_t max_buckets, const qcalc_tolerances* tol, qcalc_report** out);
/* f may be NULL; then only the flatness spectrum is reported. */
QCALC_API qcalc_status qcalc_flatness(const qcalc_set* set, const qcalc_field* f, size_t index, double radius,
                                      const qcalc_tolerances* tol, qcalc_report** out);

/* ---- clifford ------------------------------------------------------------ */

/* columns_json: {"dim":n,"columns":[{"dim":n,"coeffs":[...]}, ...]} */
QCALC_API qcalc_status qcalc_clifford_check(const char* columns_json, qcalc_side side,
                                            const qcalc_tolerances* tol, qcalc_report** out);
/* partial_json lists c_1..c_{n-1}; side must be LEFT or RIGHT. */
QCALC_API qcalc_status qcalc_clifford_complete(const char* partial_json, size_t dim, qcalc_side side,
                                               const qcalc_tolerances* tol, qcalc_report** out);
QCALC_API qcalc_status qcalc_clifford_dimension(size_t dim, size_t* dimension, qcalc_report** out);
/* Multivector product of two {"dim","coeffs"} documents. */
QCALC_API qcalc_status qcalc_clifford_product(const char* a_json, const char* b_json, char** product_json);
QCALC_API qcalc_status qcalc_graph_derivative(const qcalc_set* set, const qcalc_field* f,
                                              const qcalc_covectors* a, const qcalc_tolerances* tol,
                                              qcalc_report** out);

/* ---- reports ------------------------------------------------------------- */

QCALC_API const char* qcalc_report_json(const qcalc_report* report);
/* NULL when the report has no CSV attachment. */
QCALC_API const char* qcalc_report_csv(const qcalc_report* report);
QCALC_API int qcalc_report_passed(const qcalc_report* report);
QCALC_API void qcalc_report_free(qcalc_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCALC_QCALC_H */
