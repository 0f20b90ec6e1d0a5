/*
 * fracspec C API.
 *
 * Fourier power spectra of real sequences at an integer period l and its
 * fractional periods l/k, computed by folding the sequence modulo l.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions returning fracspec_status leave a
 * thread-local message retrievable with fracspec_last_error() on failure.
 * Strings returned through char** are heap-allocated and released with
 * fracspec_string_free().
 */
#ifndef FRACSPEC_FRACSPEC_H
#define FRACSPEC_FRACSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FRACSPEC_BUILDING)
#    define FRACSPEC_API __declspec(dllexport)
#  else
#    define FRACSPEC_API __declspec(dllimport)
#  endif
#else
#  define FRACSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fracspec_status {
  FRACSPEC_OK = 0,
  FRACSPEC_ERR_INVALID_ARGUMENT = 1,
  FRACSPEC_ERR_PARSE = 2,
  FRACSPEC_ERR_IO = 3,
  /* A computed value violated a mathematical invariant. Indicates a bug. */
  FRACSPEC_ERR_INTERNAL = 4,
  FRACSPEC_ERR_OUT_OF_MEMORY = 5
} fracspec_status;

typedef enum fracspec_format { FRACSPEC_FORMAT_CSV = 0, FRACSPEC_FORMAT_JSON = 1 } fracspec_format;

typedef enum fracspec_unknown_policy {
  FRACSPEC_UNKNOWN_ZERO = 0,
  FRACSPEC_UNKNOWN_ERROR = 1,
  FRACSPEC_UNKNOWN_SKIP = 2
} fracspec_unknown_policy;

typedef struct fracspec_sequence fracspec_sequence;
typedef struct fracspec_spectrum fracspec_spectrum;
typedef struct fracspec_scan fracspec_scan;
typedef struct fracspec_bench fracspec_bench;

FRACSPEC_API const char* fracspec_version(void);
FRACSPEC_API const char* fracspec_last_error(void);
FRACSPEC_API void fracspec_string_free(char* s);

/* ---- sequences ---------------------------------------------------------- */

typedef struct fracspec_load_options {
  /* "none" (numeric file), "hydropathy", "indicator:<A|C|G|T>" or
     "table:<path>". NULL means "none". */
  const char* mapping;
  fracspec_unknown_policy unknown;
  int center;    /* nonzero: subtract the mean after mapping */
  size_t record; /* 0-based FASTA record index */
} fracspec_load_options;

FRACSPEC_API void fracspec_load_options_init(fracspec_load_options* options);

FRACSPEC_API fracspec_status fracspec_sequence_from_samples(const double* samples, size_t count, const char* label,
                                                            fracspec_sequence** out);
FRACSPEC_API fracspec_status fracspec_sequence_load(const char* path, const fracspec_load_options* options,
                                                    fracspec_sequence** out);
FRACSPEC_API void fracspec_sequence_free(fracspec_sequence* seq);
FRACSPEC_API size_t fracspec_sequence_length(const fracspec_sequence* seq);
/* Borrowed; valid while seq lives. */
FRACSPEC_API const double* fracspec_sequence_samples(const fracspec_sequence* seq);
FRACSPEC_API const char* fracspec_sequence_label(const fracspec_sequence* seq);
FRACSPEC_API const char* fracspec_sequence_mapping(const fracspec_sequence* seq);

/* ---- spectra ------------------------------------------------------------ */

typedef struct fracspec_spectrum_info {
  int modulus;
  size_t count; /* floor(l/2) */
  size_t source_length;
  size_t padded_length;
  size_t folds;
  int peak_k;
  double peak_power;
} fracspec_spectrum_info;

FRACSPEC_API fracspec_status fracspec_spectrum_compute(const fracspec_sequence* seq, int modulus,
                                                       fracspec_spectrum** out);
FRACSPEC_API void fracspec_spectrum_free(fracspec_spectrum* spectrum);
FRACSPEC_API fracspec_status fracspec_spectrum_get_info(const fracspec_spectrum* spectrum,
                                                        fracspec_spectrum_info* out);
/* FPS(l/k) for 1 <= k <= l-1. */
FRACSPEC_API fracspec_status fracspec_spectrum_power(const fracspec_spectrum* spectrum, int k, double* out);
/* expand != 0 renders k = 1..l-1 instead of 1..floor(l/2). */
FRACSPEC_API fracspec_status fracspec_spectrum_render(const fracspec_spectrum* spectrum, fracspec_format format,
                                                      int expand, char** out);
FRACSPEC_API fracspec_status fracspec_spectrum_render_svg(const fracspec_spectrum* spectrum, char** out);

/* ---- scans -------------------------------------------------------------- */

FRACSPEC_API fracspec_status fracspec_scan_compute(const fracspec_sequence* seq, int l_min, int l_max,
                                                   unsigned threads, fracspec_scan** out);
FRACSPEC_API void fracspec_scan_free(fracspec_scan* scan);
FRACSPEC_API size_t fracspec_scan_count(const fracspec_scan* scan);
/* Borrowed; valid while scan lives. NULL if index is out of range. */
FRACSPEC_API const fracspec_spectrum* fracspec_scan_at(const fracspec_scan* scan, size_t index);
/* 1 if every FPS in the scan is exactly zero. */
FRACSPEC_API int fracspec_scan_all_zero(const fracspec_scan* scan);
FRACSPEC_API fracspec_status fracspec_scan_render(const fracspec_scan* scan, fracspec_format format, size_t top,
                                                  char** out);

/* ---- verification ------------------------------------------------------- */

typedef struct fracspec_verify_result {
  int modulus;
  int k;
  double fast;
  double oracle;
  double abs_error;
  double rel_error; /* abs_error / max(1, |oracle|) */
  int passed;       /* rel_error <= 1e-6 */
} fracspec_verify_result;

FRACSPEC_API fracspec_status fracspec_verify(const fracspec_sequence* seq, int modulus, int k,
                                             fracspec_verify_result* out);
FRACSPEC_API fracspec_status fracspec_verify_render(const fracspec_verify_result* result, fracspec_format format,
                                                    char** out);

/* ---- benchmark ---------------------------------------------------------- */

typedef struct fracspec_bench_options {
  const size_t* lengths;
  size_t length_count;
  const int* moduli;
  size_t modulus_count;
  int repeats; /* >= 3 */
  uint64_t seed;
} fracspec_bench_options;

typedef struct fracspec_bench_record {
  size_t m;
  int modulus;
  const char* method; /* borrowed: "naive" or "folded" */
  uint64_t trig_count;
  uint64_t madd_count;
  int64_t ns_median;
  int64_t ns_min;
  int64_t ns_max;
  double checksum;
} fracspec_bench_record;

FRACSPEC_API fracspec_status fracspec_bench_run(const fracspec_bench_options* options, fracspec_bench** out);
FRACSPEC_API void fracspec_bench_free(fracspec_bench* bench);
FRACSPEC_API size_t fracspec_bench_count(const fracspec_bench* bench);
FRACSPEC_API fracspec_status fracspec_bench_get(const fracspec_bench* bench, size_t index, fracspec_bench_record* out);
FRACSPEC_API fracspec_status fracspec_bench_render_csv(const fracspec_bench* bench, char** out);

/* ---- output ------------------------------------------------------------- */

/* Writes via a temporary file and rename; no partial file on failure. */
FRACSPEC_API fracspec_status fracspec_write_file(const char* path, const char* data, size_t size);

#ifdef __cplusplus
}
#endif

#endif /* FRACSPEC_FRACSPEC_H */
