// Copyright 2026 The subsys Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the subsys library.
 *
 * Objects are opaque handles created by subsys_*_create / producer functions
 * and released with the matching *_destroy. Every fallible call returns a
 * subsys_status; on failure subsys_last_error() describes the problem (per
 * thread, valid until the next failing call on that thread). Strings returned
 * as `const char *` are owned by the handle they came from.
 *
 * Coordinates in text are one-based. Bit strings are printed with bit 0 first.
 */
#ifndef SUBSYS_SUBSYS_H
#define SUBSYS_SUBSYS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SUBSYS_BUILDING_LIBRARY)
#define SUBSYS_API __declspec(dllexport)
#else
#define SUBSYS_API __declspec(dllimport)
#endif
#else
#define SUBSYS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subsys_status {
    SUBSYS_OK = 0,
    SUBSYS_ERR_INVALID_ARGUMENT = 1,
    SUBSYS_ERR_PARSE = 2,
    SUBSYS_ERR_UNSUPPORTED = 3,
    SUBSYS_ERR_INFEASIBLE = 4,
    SUBSYS_ERR_BUFFER_TOO_SMALL = 5,
    SUBSYS_ERR_INTERNAL = 6
} subsys_status;

typedef enum subsys_class_tag {
    SUBSYS_CLASS_GAUGE = 0,
    SUBSYS_CLASS_LOGICAL_X = 1,
    SUBSYS_CLASS_LOGICAL_Y = 2,
    SUBSYS_CLASS_LOGICAL_Z = 3,
    SUBSYS_CLASS_DETECTABLE = 4
} subsys_class_tag;

typedef struct subsys_code subsys_code;
typedef struct subsys_pauli subsys_pauli;
typedef struct subsys_decode_result subsys_decode_result;
typedef struct subsys_scan subsys_scan;
typedef struct subsys_spectrum subsys_spectrum;
typedef struct subsys_ising_run subsys_ising_run;
typedef struct subsys_bifurcation subsys_bifurcation;

SUBSYS_API const char *subsys_version(void);
SUBSYS_API const char *subsys_last_error(void);
SUBSYS_API const char *subsys_status_name(subsys_status status);

/* ---- codes ---- */

typedef struct subsys_code_info {
    int dimension;
    size_t n;
    size_t num_sites;
    size_t num_stabilizer_generators;
    size_t num_gauge_generators;
} subsys_code_info;

SUBSYS_API subsys_status subsys_code_create(int dimension, size_t n, subsys_code **out);
SUBSYS_API void subsys_code_destroy(subsys_code *code);
SUBSYS_API subsys_status subsys_code_get_info(const subsys_code *code, subsys_code_info *out);
/* X-type generators come first (indices 0..n-2), then Z-type. */
SUBSYS_API subsys_status subsys_code_stabilizer(const subsys_code *code, size_t index, subsys_pauli **out);
SUBSYS_API subsys_status subsys_code_gauge_generator(const subsys_code *code, size_t index, subsys_pauli **out);
/* which is 'X', 'Y' or 'Z'. */
SUBSYS_API subsys_status subsys_code_logical(const subsys_code *code, char which, subsys_pauli **out);

/* ---- Pauli operators ---- */

/* Dense token string, e.g. "-i XYZ". */
SUBSYS_API subsys_status subsys_pauli_parse(const char *text, subsys_pauli **out);
/* Dense string or clause list such as "Z at (2,2), X at (1,3)". */
SUBSYS_API subsys_status subsys_pauli_parse_for_code(const subsys_code *code, const char *text, subsys_pauli **out);
SUBSYS_API void subsys_pauli_destroy(subsys_pauli *p);
SUBSYS_API size_t subsys_pauli_num_sites(const subsys_pauli *p);
SUBSYS_API size_t subsys_pauli_weight(const subsys_pauli *p);
SUBSYS_API subsys_status subsys_pauli_mul(const subsys_pauli *p, const subsys_pauli *q, subsys_pauli **out);
SUBSYS_API subsys_status subsys_pauli_commutes(const subsys_pauli *p, const subsys_pauli *q, int *out);
/* Writes a NUL-terminated string. *length receives the string length (not
 * counting NUL) even when the buffer is too small. */
SUBSYS_API subsys_status subsys_pauli_format(const subsys_pauli *p, char *buffer, size_t capacity, size_t *length);
SUBSYS_API subsys_status subsys_pauli_format_sparse(
    const subsys_code *code, const subsys_pauli *p, char *buffer, size_t capacity, size_t *length);

/* ---- classification and decoding ---- */

SUBSYS_API const char *subsys_class_tag_name(subsys_class_tag tag);
/* syndrome_buffer (optional) receives "sx|sz". */
SUBSYS_API subsys_status subsys_classify(
    const subsys_code *code,
    const subsys_pauli *p,
    subsys_class_tag *tag,
    char *syndrome_buffer,
    size_t capacity,
    size_t *length);

SUBSYS_API subsys_status subsys_decode(const subsys_code *code, const subsys_pauli *error, subsys_decode_result **out);
SUBSYS_API void subsys_decode_result_destroy(subsys_decode_result *result);
SUBSYS_API const char *subsys_decode_result_syndrome(const subsys_decode_result *result);
SUBSYS_API const char *subsys_decode_result_inferred_e(const subsys_decode_result *result);
SUBSYS_API const char *subsys_decode_result_inferred_f(const subsys_decode_result *result);
SUBSYS_API const char *subsys_decode_result_correction(const subsys_decode_result *result);
SUBSYS_API const char *subsys_decode_result_correction_dense(const subsys_decode_result *result);
SUBSYS_API subsys_class_tag subsys_decode_result_residual(const subsys_decode_result *result);

SUBSYS_API subsys_status subsys_analytic_failure_prob(const subsys_code *code, double p_flip, double *out);

/* ---- Monte Carlo ---- */

typedef enum subsys_noise_kind { SUBSYS_NOISE_INDEPENDENT_XZ = 0, SUBSYS_NOISE_DEPOLARIZING = 1 } subsys_noise_kind;

typedef struct subsys_noise_model {
    subsys_noise_kind kind;
    double px; /* independent_xz */
    double pz; /* independent_xz */
    double p;  /* depolarizing */
} subsys_noise_model;

typedef struct subsys_trial_stats {
    uint64_t trials;
    uint64_t seed;
    uint64_t count_gauge;
    uint64_t count_lx;
    uint64_t count_ly;
    uint64_t count_lz;
    double failure_rate;
    double ci_low;
    double ci_high;
} subsys_trial_stats;

typedef struct subsys_scan_record {
    int dimension;
    size_t n;
    double p_x;
    double p_z;
    subsys_trial_stats stats;
} subsys_scan_record;

/* threads == 0 uses every hardware thread; results do not depend on it. */
SUBSYS_API subsys_status subsys_run_trials(
    const subsys_code *code,
    const subsys_noise_model *model,
    uint64_t trials,
    uint64_t seed,
    unsigned threads,
    subsys_trial_stats *out);

/* noise is "z", "x", "xz" or "depolarizing". */
SUBSYS_API subsys_status subsys_threshold_scan(
    int dimension,
    const size_t *n_list,
    size_t n_count,
    const double *p_list,
    size_t p_count,
    const char *noise,
    uint64_t trials,
    uint64_t seed,
    unsigned threads,
    subsys_scan **out);
SUBSYS_API void subsys_scan_destroy(subsys_scan *scan);
SUBSYS_API size_t subsys_scan_size(const subsys_scan *scan);
SUBSYS_API subsys_status subsys_scan_get(const subsys_scan *scan, size_t index, subsys_scan_record *out);
SUBSYS_API const char *subsys_scan_csv(const subsys_scan *scan);

/* ---- Hamiltonians ---- */

typedef struct subsys_mean_field_params {
    double c_xx;
    double c_xy;
    double c_zy;
    double c_zz;
} subsys_mean_field_params;

typedef struct subsys_spectrum_summary {
    size_t hilbert_dimension;
    size_t num_levels;
    double ground_energy;
    size_t ground_multiplicity;
    int all_multiplicities_even;
    int sectors_match_full_spectrum;
    /* Ground energy attained in the sector with every stabilizer at +1. */
    int ground_in_trivial_sector;
} subsys_spectrum_summary;

SUBSYS_API subsys_status subsys_diagonalize(const subsys_code *code, double lambda, subsys_spectrum **out);
SUBSYS_API void subsys_spectrum_destroy(subsys_spectrum *spectrum);
SUBSYS_API subsys_status subsys_spectrum_get_summary(const subsys_spectrum *spectrum, subsys_spectrum_summary *out);
SUBSYS_API subsys_status subsys_spectrum_level(
    const subsys_spectrum *spectrum, size_t index, double *value, size_t *multiplicity);
SUBSYS_API const char *subsys_spectrum_json(const subsys_spectrum *spectrum);

SUBSYS_API subsys_status subsys_mean_field_delta_e(
    const subsys_code *code,
    double lambda,
    const subsys_mean_field_params *params,
    const subsys_pauli *error,
    double *out);

/* ---- thermal dynamics ---- */

SUBSYS_API subsys_status subsys_ising_simulate(
    int dimensionality, size_t L, double J, double T, size_t sweeps, uint64_t seed, subsys_ising_run **out);
SUBSYS_API void subsys_ising_run_destroy(subsys_ising_run *run);
SUBSYS_API size_t subsys_ising_run_length(const subsys_ising_run *run);
SUBSYS_API const double *subsys_ising_run_magnetization(const subsys_ising_run *run);
SUBSYS_API const char *subsys_ising_run_csv(const subsys_ising_run *run);

typedef struct subsys_meanfield_run {
    size_t n;
    subsys_mean_field_params params;
    double lambda;
    size_t equilibration_sweeps;
    size_t num_samples;
    size_t sample_every;
    uint64_t seed;
} subsys_meanfield_run;

typedef struct subsys_bifurcation_record {
    size_t n;
    double lambda;
    double c_zy;
    double c_zz;
    double temperature;
    int encoded;
    size_t samples;
    double order_parameter;
    double standard_error;
    uint64_t seed;
} subsys_bifurcation_record;

SUBSYS_API subsys_status subsys_meanfield_order_parameter(
    const subsys_meanfield_run *run, double T, int encoded_value, double *mean, double *standard_error);
SUBSYS_API subsys_status subsys_bifurcation_scan(
    const subsys_meanfield_run *run, const double *temperatures, size_t count, subsys_bifurcation **out);
SUBSYS_API void subsys_bifurcation_destroy(subsys_bifurcation *scan);
SUBSYS_API size_t subsys_bifurcation_size(const subsys_bifurcation *scan);
SUBSYS_API subsys_status subsys_bifurcation_get(
    const subsys_bifurcation *scan, size_t index, subsys_bifurcation_record *out);
SUBSYS_API const char *subsys_bifurcation_csv(const subsys_bifurcation *scan);

#ifdef __cplusplus
}
#endif

#endif
