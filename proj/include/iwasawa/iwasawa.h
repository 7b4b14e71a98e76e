#ifndef IWASAWA_IWASAWA_H
#define IWASAWA_IWASAWA_H

/*
 * C interface to the exact Iwasawa decomposition library.
 *
 * Every fallible call returns an iw_status. On failure the thread-local
 * message from iw_last_error() names the error ("NotSpecialLinear: ...").
 * Strings handed out through char** parameters are owned by the caller and
 * released with iw_string_free; handles are released with their *_free call.
 * Matrix indices are 0-based here; JSON output uses 1-based column labels.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IWASAWA_BUILDING)
#    define IW_API __declspec(dllexport)
#  else
#    define IW_API __declspec(dllimport)
#  endif
#else
#  define IW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iw_status {
  IW_OK = 0,
  IW_ERR_NON_PRIME = 1,
  IW_ERR_INDEX_OUT_OF_RANGE = 2,
  IW_ERR_DIMENSION_MISMATCH = 3,
  IW_ERR_SINGULAR_MATRIX = 4,
  IW_ERR_ZERO_PIVOT = 5,
  IW_ERR_NOT_SPECIAL_LINEAR = 6,
  IW_ERR_INVALID_FAMILY_PARAMS = 7,
  IW_ERR_PRECISION_LOSS = 8,
  IW_ERR_ZERO_VECTOR = 9,
  IW_ERR_PARSE = 10,
  IW_ERR_INVALID_ARGUMENT = 11,
  IW_ERR_INTERNAL = 12
} iw_status;

typedef enum iw_format { IW_FORMAT_JSON = 0, IW_FORMAT_CSV = 1 } iw_format;

typedef struct iw_matrix iw_matrix;
typedef struct iw_padic iw_padic;
typedef struct iw_real iw_real;

/* "NotSpecialLinear", "ParseError", ...; "Ok" for IW_OK. Static storage. */
IW_API const char* iw_status_name(iw_status status);
/* Message of the most recent failure on this thread; "" if none. */
IW_API const char* iw_last_error(void);
IW_API void iw_string_free(char* s);

/* ---- matrices ---- */

/* JSON object/array or inline "1,2;3,4". *decimal_converted (optional) is set
 * to 1 when decimal entries were converted exactly. */
IW_API iw_status iw_matrix_parse(const char* text, iw_matrix** out, int* decimal_converted);
IW_API iw_status iw_matrix_identity(size_t n, iw_matrix** out);
/* Random element of SL(n, Z) built from unit triangulars and signed
 * permutations; deterministic in seed. */
IW_API iw_status iw_matrix_random_sl(size_t n, uint64_t seed, iw_matrix** out);
IW_API size_t iw_matrix_rows(const iw_matrix* m);
IW_API size_t iw_matrix_cols(const iw_matrix* m);
IW_API iw_status iw_matrix_entry(const iw_matrix* m, size_t i, size_t j, char** out);
IW_API iw_status iw_matrix_to_json(const iw_matrix* m, int pretty, char** out);
IW_API iw_status iw_matrix_minor(const iw_matrix* m, const size_t* rows, const size_t* cols, size_t k, char** out);
IW_API void iw_matrix_free(iw_matrix* m);

/* ---- scalars ---- */

IW_API int iw_is_prime(uint64_t n);
/* *is_infinite = 1 for zero, otherwise *value holds v_p(x). */
IW_API iw_status iw_padic_valuation(const char* rational, uint64_t p, long* value, int* is_infinite);

/* ---- p-adic decomposition ---- */

IW_API iw_status iw_padic_decompose(const iw_matrix* m, uint64_t p, iw_padic** out);
IW_API iw_status iw_padic_from_json(const char* json, iw_padic** out);
IW_API iw_status iw_padic_to_json(const iw_padic* dec, int pretty, char** out);
/* x: unit upper over Z_p, y: diagonal over Z_p^x with det 1. */
IW_API iw_status iw_padic_apply_family(const iw_padic* dec, const iw_matrix* x, const iw_matrix* y, iw_padic** out);
/* Never fails on malformed decompositions; *all_pass reports the verdict and
 * report_json (optional) the itemized checks. */
IW_API iw_status iw_padic_verify(const iw_padic* dec, int* all_pass, char** report_json);
/* JSON array: entry k-1 is v_p(y_k) from the closed-form minor formula. */
IW_API iw_status iw_dilaton_valuations(const iw_matrix* m, uint64_t p, char** out);
IW_API void iw_padic_free(iw_padic* dec);

/* ---- real decomposition ---- */

IW_API iw_status iw_real_decompose(const iw_matrix* m, iw_real** out);
IW_API iw_status iw_real_from_json(const char* json, iw_real** out);
IW_API iw_status iw_real_to_json(const iw_real* dec, int pretty, char** out);
IW_API iw_status iw_real_verify(const iw_real* dec, int* all_pass, char** report_json);
IW_API void iw_real_free(iw_real* dec);

/* ---- norms and identities ---- */

/* order 0 emits every order 1..n-1 as a JSON array. */
IW_API iw_status iw_pluecker_json(const iw_matrix* m, size_t order, int pretty, char** out);
/* places: comma separated, e.g. "2,3,inf". */
IW_API iw_status iw_dilaton_norms(const iw_matrix* m, const char* places, iw_format format, int pretty, char** out);
IW_API iw_status iw_verify_identities(const size_t* sizes, size_t n_sizes, size_t trials, uint64_t seed, int pretty,
                                      int* all_pass, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* IWASAWA_IWASAWA_H */
