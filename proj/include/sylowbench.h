/* C interface to the sylowbench engines. Every function returns a status;
 * on failure swb_last_error() describes the problem (per thread). Strings
 * handed out by the library are released with swb_string_free. */
#ifndef SYLOWBENCH_H
#define SYLOWBENCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(SWB_BUILDING_LIBRARY)
#define SWB_API __attribute__((visibility("default")))
#else
#define SWB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swb_status {
  SWB_OK = 0,
  SWB_ERR_ARGUMENT = 1,      /* null pointer or invalid argument */
  SWB_ERR_PARSE = 2,         /* malformed cycle notation */
  SWB_ERR_DEGREE = 3,        /* degree mismatch */
  SWB_ERR_CAP = 4,           /* element cap exceeded */
  SWB_ERR_ORBIT_CAP = 5,     /* orbit cap exceeded */
  SWB_ERR_INDEX_CAP = 6,     /* coset index above the degree cap */
  SWB_ERR_NOT_SUBGROUP = 7,
  SWB_ERR_PRECONDITION = 8,
  SWB_ERR_USAGE = 9,         /* bad group reference, suite name, ... */
  SWB_ERR_IO = 10,
  SWB_ERR_CATALOG = 11,      /* catalog or list file syntax */
  SWB_ERR_INTERNAL = 12
} swb_status;

typedef struct swb_group swb_group;

typedef struct swb_caps {
  uint64_t elements;
  uint64_t orbit;
  uint64_t degree;
  uint64_t regular;
  uint64_t subgroup_search;
} swb_caps;

typedef enum swb_method { SWB_BRUTE_FORCE = 0, SWB_ORBIT_STABILIZER = 1 } swb_method;

typedef struct swb_sylow_report {
  uint64_t p;
  uint64_t sylow_order;
  uint64_t count;
  uint64_t normalizer_order;
  uint64_t p_core_order;
  uint64_t action_kernel_order;
  swb_method normalizer_method;
} swb_sylow_report;

typedef enum swb_frobenius_class { SWB_CLASS_ONE = 0, SWB_CLASS_ONE_PLUS_P = 1, SWB_CLASS_OTHER = 2 } swb_frobenius_class;

typedef enum swb_verdict { SWB_CONTRADICTION = 0, SWB_UNRESOLVED = 1, SWB_INAPPLICABLE = 2 } swb_verdict;

typedef struct swb_report_options {
  int tsv;
  swb_caps caps;
  unsigned threads; /* 0: one per hardware thread */
} swb_report_options;

SWB_API const char* swb_version(void);
SWB_API const char* swb_status_name(swb_status status);
/* Message for the last failing call on this thread; "" if none. */
SWB_API const char* swb_last_error(void);
SWB_API void swb_string_free(char* s);
SWB_API void swb_caps_default(swb_caps* out);
SWB_API void swb_report_options_default(swb_report_options* out);

/* Groups. `ref` is builtin:<spec> or file:<path>:<name>. */
SWB_API swb_status swb_group_from_ref(const char* ref, swb_group** out);
SWB_API swb_status swb_group_from_generators(size_t degree, const char* const* generators, size_t count,
                                             swb_group** out);
SWB_API void swb_group_free(swb_group* g);
SWB_API swb_status swb_group_degree(const swb_group* g, size_t* out);
SWB_API swb_status swb_group_order(const swb_group* g, uint64_t* out);
SWB_API swb_status swb_group_contains(const swb_group* g, const char* perm, int* out);

/* Canonical cycle notation of `text` read at the given degree. */
SWB_API swb_status swb_perm_normalize(const char* text, size_t degree, char** out);

SWB_API swb_status swb_count_sylow(const swb_group* g, uint64_t p, const swb_caps* caps, swb_sylow_report* out);

/* Arithmetic filters. */
SWB_API swb_status swb_legendre_valuation(uint64_t n, uint64_t p, uint64_t* out);
SWB_API swb_status swb_phall_solvable(uint64_t n, uint64_t p, int* out);
SWB_API swb_status swb_mhall_product(uint64_t n, uint64_t p, const uint64_t* extra, size_t extra_count, int* out);
SWB_API swb_status swb_frobenius_filter(uint64_t n, uint64_t p, swb_frobenius_class* out);

/* Derivation for (p, n); `trace` may be null. */
SWB_API swb_status swb_prove(uint64_t p, uint64_t n, swb_verdict* verdict, char** trace);

/* Text reports; *exit_status is 0 when every check passed and 1 otherwise.
 * `options` may be null for the defaults. */
SWB_API swb_status swb_report_info(const char* ref, const swb_report_options* options, int* exit_status, char** text);
SWB_API swb_status swb_report_sylow(const char* ref, uint64_t p, const swb_report_options* options, int* exit_status,
                                    char** text);
SWB_API swb_status swb_report_lemmas(const char* suite, uint64_t max_order, const swb_report_options* options,
                                     int* exit_status, char** text);
/* `extra_path` (nullable) names a file of extra admissible parts. */
SWB_API swb_status swb_report_scan(uint64_t p, uint64_t max_n, const char* extra_path,
                                   const swb_report_options* options, int* exit_status, char** text);
SWB_API swb_status swb_report_prove(uint64_t p, uint64_t n, const swb_report_options* options, int* exit_status,
                                    char** text);
SWB_API swb_status swb_report_selftest(const swb_report_options* options, int* exit_status, char** text);

#ifdef __cplusplus
}
#endif

#endif
