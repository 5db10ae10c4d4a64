#ifndef FATPOINTS_FATPOINTS_H
#define FATPOINTS_FATPOINTS_H

/*
 * C interface to the fat point library. All handles are opaque and owned
 * by the caller once returned; release them with the matching *_free.
 * Functions returning fp_status leave a message for fp_last_error() on
 * failure (thread-local, valid until the next failing call on the thread).
 *
 * Classes are arrays of FP_RANK coefficients (a0, a1, ..., a6) meaning
 * a0 E0 + a1 E1 + ... + a6 E6, the same rows the CLI prints:
 * "3 -1 0 -2 -1 -1 0" is 3E0 - E1 - 2E3 - E4 - E5.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(FATPOINTS_BUILDING_LIBRARY)
#define FP_API __attribute__((visibility("default")))
#else
#define FP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define FP_RANK 7
#define FP_POINTS 6

typedef int64_t fp_coeff;

typedef enum fp_status {
  FP_OK = 0,
  FP_ERR_INVALID_ARGUMENT = 1,
  FP_ERR_PARSE = 2,
  FP_ERR_UNSUPPORTED = 3,
  FP_ERR_OVERFLOW = 4,
  FP_ERR_CAP_EXCEEDED = 5,
  FP_ERR_INTERNAL = 6,
  FP_ERR_NULL_ARGUMENT = 7
} fp_status;

typedef enum fp_cert_status {
  FP_CERT_SURJECTIVE = 0,
  FP_CERT_INJECTIVE = 1,
  FP_CERT_MAXIMAL_RANK = 2,
  FP_CERT_INCONCLUSIVE = 3
} fp_cert_status;

typedef struct fp_config fp_config;
typedef struct fp_class_list fp_class_list;
typedef struct fp_resolution fp_resolution;
typedef struct fp_report fp_report;

FP_API const char* fp_last_error(void);
FP_API const char* fp_status_name(fp_status status);
FP_API const char* fp_cert_status_name(fp_cert_status status);

/* ---- configurations ---------------------------------------------------- */

/* {"kind":"distinct","collinear":[[1,2,3]],"six_on_conic":false},
 * {"kind":"dynkin","type":"4A1"} or {"kind":"nodal","roots":[[...7 ints]]}. */
FP_API fp_status fp_config_from_json(const char* json, fp_config** out);
FP_API fp_status fp_config_from_file(const char* path, fp_config** out);
/* Fixture point sets "i", "ii", "iii", "iv", "general", "conic". The
 * configuration keeps the coordinates for the oracle. */
FP_API fp_status fp_config_from_case(const char* name, fp_config** out);
FP_API void fp_config_free(fp_config* config);

/* "distinct" or the Dynkin type name; owned by the configuration. */
FP_API const char* fp_config_type_name(const fp_config* config);
FP_API int fp_config_is_distinct(const fp_config* config);
FP_API int fp_config_has_points(const fp_config* config);
FP_API int fp_config_anticanonical_nef(const fp_config* config);

/* ---- class lists ------------------------------------------------------- */

FP_API size_t fp_class_list_size(const fp_class_list* list);
FP_API fp_status fp_class_list_get(const fp_class_list* list, size_t index, fp_coeff out[FP_RANK]);
FP_API void fp_class_list_free(fp_class_list* list);

FP_API fp_status fp_neg(const fp_config* config, fp_class_list** out);
/* raw != 0 returns the list before paring. */
FP_API fp_status fp_nef_generators(const fp_config* config, int raw, fp_class_list** out);
/* Nef members of the orbit of E0. */
FP_API fp_status fp_e0_classes(const fp_config* config, fp_class_list** out);
FP_API fp_status fp_orbit(const fp_coeff seed[FP_RANK], fp_class_list** out);

/* ---- single classes ---------------------------------------------------- */

FP_API fp_status fp_parse_class(const char* text, fp_coeff out[FP_RANK]);
/* Writes the display row, NUL-terminated; fails if it does not fit. */
FP_API fp_status fp_format_class(const fp_coeff cls[FP_RANK], char* buffer, size_t size);
FP_API fp_status fp_h0(const fp_config* config, const fp_coeff cls[FP_RANK], fp_coeff* out);
FP_API fp_status fp_is_nef(const fp_config* config, const fp_coeff cls[FP_RANK], int* out);

/* ---- Dynkin catalog ---------------------------------------------------- */

FP_API size_t fp_catalog_size(void);
FP_API const char* fp_catalog_name(size_t index);
FP_API fp_status fp_catalog_roots(size_t index, fp_class_list** out);

/* ---- Hilbert function and Betti numbers -------------------------------- */

/* Computes h_Z(t) for 0 <= t <= max(t_max, sigma + 3) and the Betti table. */
FP_API fp_status fp_resolve(const fp_config* config, const fp_coeff mult[FP_POINTS], fp_coeff t_max,
                            fp_resolution** out);
FP_API void fp_resolution_free(fp_resolution* res);

/* Multiplicities after moving weight along infinitely near points. */
FP_API void fp_resolution_multiplicities(const fp_resolution* res, fp_coeff out[FP_POINTS]);
FP_API fp_coeff fp_resolution_alpha(const fp_resolution* res);
FP_API fp_coeff fp_resolution_tau(const fp_resolution* res);
FP_API fp_coeff fp_resolution_sigma(const fp_resolution* res);
/* Degrees 0 .. fp_resolution_max_degree() have h, t and s available. */
FP_API fp_coeff fp_resolution_max_degree(const fp_resolution* res);
FP_API fp_coeff fp_resolution_hilbert(const fp_resolution* res, fp_coeff t);
FP_API fp_coeff fp_resolution_generators(const fp_resolution* res, fp_coeff t);
FP_API fp_coeff fp_resolution_syzygies(const fp_resolution* res, fp_coeff t);
/* "R[-6] + R[-7] + R[-8]^3 + R[-10]^2"; owned by the resolution. */
FP_API const char* fp_resolution_f0(const fp_resolution* res);
FP_API const char* fp_resolution_f1(const fp_resolution* res);

/* ---- maximal-rank verification ----------------------------------------- */

typedef struct fp_entry {
  fp_coeff cls[FP_RANK];
  int level; /* 0: nef generator; i: member of the i-th chain level */
  fp_cert_status status;
  const char* reason; /* owned by the report */
  const char* detail;
} fp_entry;

typedef struct fp_tail {
  fp_coeff base[FP_RANK];
  fp_coeff step[FP_RANK];
  fp_coeff offset;
  int covered;
  const char* rule; /* empty when not covered */
} fp_tail;

typedef struct fp_frame_summary {
  fp_coeff head[FP_RANK]; /* the line class of this frame */
  size_t raw_count;
  size_t pared_count;
  size_t gamma_count;
  size_t depth; /* number of chain levels */
  int stabilized;
  int stab_j;
  int stab_k;
  const char* stab_failure;
  size_t inconclusive;
} fp_frame_summary;

/* all_e0 != 0 checks every frame; threads = 0 uses all cores. Fixture
 * configurations pass their coordinates to the identity frame. */
FP_API fp_status fp_verify(const fp_config* config, int all_e0, int depth, unsigned threads, fp_report** out);
FP_API void fp_report_free(fp_report* report);

FP_API size_t fp_report_inconclusive(const fp_report* report);
FP_API size_t fp_report_frame_count(const fp_report* report);
FP_API fp_status fp_report_frame(const fp_report* report, size_t frame, fp_frame_summary* out);
FP_API fp_status fp_report_chain_size(const fp_report* report, size_t frame, size_t level, size_t* out);
FP_API fp_status fp_report_frame_neg(const fp_report* report, size_t frame, fp_class_list** out);
FP_API size_t fp_report_entry_count(const fp_report* report, size_t frame);
FP_API fp_status fp_report_entry(const fp_report* report, size_t frame, size_t index, fp_entry* out);
FP_API size_t fp_report_tail_count(const fp_report* report, size_t frame);
FP_API fp_status fp_report_tail(const fp_report* report, size_t frame, size_t index, fp_tail* out);

/* ---- explicit-coordinate oracle ---------------------------------------- */

typedef struct fp_oracle_result {
  fp_coeff dim;      /* dim I(Z)_t */
  fp_coeff dim_next; /* dim I(Z)_{t+1} */
  fp_coeff rank;     /* rank of I(Z)_t (x) R_1 -> I(Z)_{t+1} */
  fp_coeff ker;
  fp_coeff cok;
} fp_oracle_result;

/* Needs a configuration built by fp_config_from_case. */
FP_API fp_status fp_oracle(const fp_config* config, const fp_coeff mult[FP_POINTS], fp_coeff t,
                           fp_oracle_result* out);

#ifdef __cplusplus
}
#endif

#endif
