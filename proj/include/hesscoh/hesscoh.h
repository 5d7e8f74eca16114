#ifndef HESSCOH_H
#define HESSCOH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define HC_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define HC_API __attribute__((visibility("default")))
#else
#  define HC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hc_session hc_session;

typedef enum hc_status {
  HC_OK = 0,
  HC_CHECK_FAILED = 1,
  HC_RESOURCE_LIMIT = 2,
  HC_INVALID_ARGUMENT = 3,
  HC_DIMENSION_MISMATCH = 4,
  HC_NOT_ZERO_DIMENSIONAL = 5,
  HC_IO_ERROR = 6,
  HC_INTERNAL = 7
} hc_status;

typedef enum hc_format { HC_FORMAT_TEXT = 0, HC_FORMAT_JSON = 1, HC_FORMAT_LATEX = 2 } hc_format;

typedef enum hc_mode { HC_MODE_EQUIVARIANT = 0, HC_MODE_ORDINARY = 1 } hc_mode;

/* Sessions hold settings, the last output and the last error message.
   A session must not be used from two threads at once. */
HC_API hc_session* hc_session_new(void);
HC_API void hc_session_free(hc_session* session);

HC_API hc_status hc_session_set_format(hc_session* session, hc_format format);
HC_API hc_status hc_session_set_mode(hc_session* session, hc_mode mode);
/* Largest n for fixed-point enumeration over S_n and for enumerating
   Hessenberg functions. */
HC_API hc_status hc_session_set_caps(hc_session* session, int fixed_point_cap, int enumeration_cap);
HC_API hc_status hc_session_set_pair_budget(hc_session* session, size_t budget);
HC_API hc_status hc_session_set_jobs(hc_session* session, int jobs);
/* Sweep limits for verify: symbolic checks and Groebner-backed checks. */
HC_API hc_status hc_session_set_n_max(hc_session* session, int symbolic, int groebner);
/* NULL or "" disables the on-disk Groebner cache. */
HC_API hc_status hc_session_set_cache_dir(hc_session* session, const char* dir);
HC_API hc_status hc_session_set_timing(hc_session* session, int enabled);

/* Valid until the next call on the same session. */
HC_API const char* hc_output(const hc_session* session);
HC_API const char* hc_last_error(const hc_session* session);

HC_API hc_status hc_present(hc_session* session, const int* h, size_t n);
HC_API hc_status hc_generators(hc_session* session, int n);
HC_API hc_status hc_fixed_points(hc_session* session, const int* h, size_t n);
HC_API hc_status hc_enumerate(hc_session* session, int n);
HC_API hc_status hc_hilbert(hc_session* session, const int* h, size_t n);
/* Runs the named suites ("all" for every one). The report is written to
   the output even when a check fails, in which case HC_CHECK_FAILED is
   returned. */
HC_API hc_status hc_verify(hc_session* session, const char* const* suites, size_t count);

/* dim of the ordinary quotient Q[x]/I(h) at t = 0. */
HC_API hc_status hc_quotient_dimension(hc_session* session, const int* h, size_t n, int64_t* out);

/* 0 pass, 1 check failure, 2 resource limit, 64 usage or invalid input,
   70 internal error. */
HC_API int hc_status_exit_code(hc_status status);
HC_API const char* hc_status_name(hc_status status);
HC_API const char* hc_version(void);

#ifdef __cplusplus
}
#endif

#endif
