#ifndef ARITYGAP_ARITYGAP_H
#define ARITYGAP_ARITYGAP_H

/* C interface to the aritygap library. Every call returns an ag_status; on
 * failure ag_last_error() describes it (per thread). Strings handed out by
 * the library are released with ag_string_free. Slots are 0-based. */

#include <stddef.h>
#include <stdint.h>

#if defined(AG_BUILDING_LIBRARY)
#define AG_API __attribute__((visibility("default")))
#else
#define AG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ag_status {
  AG_OK = 0,
  AG_ERR_INVALID_ARGUMENT = 1,
  AG_ERR_PARSE = 2,
  AG_ERR_UNSUPPORTED_ARITY = 3,
  AG_ERR_UNSUPPORTED_CODOMAIN = 4,
  AG_ERR_UNSUPPORTED_DOMAIN = 5,
  AG_ERR_GAP_UNDEFINED = 6,
  AG_ERR_NO_SUCH_SUPPORT = 7,
  AG_ERR_ORACLE_INFEASIBLE = 8,
  AG_ERR_INTERNAL = 9
} ag_status;

typedef enum ag_classify_mode {
  AG_CLASSIFY_GENERAL = 0,
  AG_CLASSIFY_BOOLEAN = 1,
  AG_CLASSIFY_PSEUDO_BOOLEAN = 2
} ag_classify_mode;

typedef struct ag_function ag_function;
typedef struct ag_reader ag_reader;
typedef struct ag_enumerator ag_enumerator;
typedef struct ag_report ag_report;

AG_API const char* ag_version(void);
AG_API const char* ag_last_error(void);
/* Stable kebab-case name, e.g. "gap-undefined". */
AG_API const char* ag_status_name(ag_status status);
AG_API void ag_string_free(char* s);

/* Tables examined before an oracle or sweep gives up. */
AG_API uint64_t ag_default_budget(void);

/* ---- functions ---- */

AG_API ag_status ag_function_create(uint32_t k, uint32_t n, uint32_t b,
                                    const uint32_t* table, size_t len,
                                    ag_function** out);
AG_API ag_status ag_function_parse(const char* text, ag_function** out);
AG_API ag_status ag_function_clone(const ag_function* f, ag_function** out);
AG_API void ag_function_free(ag_function* f);

AG_API ag_status ag_function_shape(const ag_function* f, uint32_t* k, uint32_t* n,
                                   uint32_t* b);
AG_API size_t ag_function_size(const ag_function* f);
/* Copies the table; len must be ag_function_size(f). */
AG_API ag_status ag_function_table(const ag_function* f, uint32_t* out, size_t len);
AG_API ag_status ag_function_render(const ag_function* f, int single_line, char** out);

/* Reads consecutive functions; *out is NULL at end of input. */
AG_API ag_status ag_reader_create(const char* text, size_t len, ag_reader** out);
AG_API ag_status ag_reader_next(ag_reader* reader, ag_function** out);
AG_API void ag_reader_free(ag_reader* reader);

/* ---- analysis ---- */

AG_API ag_status ag_essential_arity(const ag_function* f, size_t* out);
AG_API ag_status ag_is_essential(const ag_function* f, size_t slot, int* out);
AG_API ag_status ag_quasi_arity(const ag_function* f, size_t* out);
AG_API ag_status ag_arity_gap(const ag_function* f, size_t* out);
/* `ess=E qa=Q essl=L gap=G pair=I,J` with 1-based slots. */
AG_API ag_status ag_analyze(const ag_function* f, char** out);
/* gap and rendered may each be NULL. */
AG_API ag_status ag_classify(const ag_function* f, ag_classify_mode mode, size_t* gap,
                             char** rendered);
AG_API ag_status ag_oddsupp_check(const ag_function* f, int restricted, int* determined,
                                  char** rendered);

/* ---- minors ---- */

AG_API ag_status ag_identification_minor(const ag_function* f, size_t i, size_t j,
                                         ag_function** out);
/* sigma has f's arity entries, each < target_arity. */
AG_API ag_status ag_simple_minor(const ag_function* f, uint32_t target_arity,
                                 const size_t* sigma, size_t len, ag_function** out);
AG_API ag_status ag_diagonal(const ag_function* f, ag_function** out);

/* ---- oracles ---- */

AG_API ag_status ag_oracle_gap(const ag_function* f, size_t* out);
AG_API ag_status ag_oracle_quasi_arity(const ag_function* f, uint64_t budget, size_t* out);

/* ---- generators ---- */

AG_API ag_status ag_gen_salomaa(uint32_t k, ag_function** out);
AG_API ag_status ag_gen_quasi(uint32_t k, uint32_t n, uint32_t b, uint32_t m,
                              uint64_t seed, ag_function** out);
AG_API ag_status ag_gen_oddsupp(uint32_t k, uint32_t n, uint32_t b, uint64_t seed,
                                ag_function** out);

/* ---- enumeration ---- */

/* filters: "gap=G", "qa=M", "ess=E" or "full"; all must hold. */
AG_API ag_status ag_enumerator_create(uint32_t k, uint32_t n, uint32_t b,
                                      const char* const* filters, size_t filter_count,
                                      unsigned jobs, ag_enumerator** out);
AG_API ag_status ag_enumerator_next(ag_enumerator* e, ag_function** out);
AG_API void ag_enumerator_free(ag_enumerator* e);

/* ---- verification ---- */

typedef struct ag_verify_options {
  const char* theorem;
  uint32_t k, n, b;
  int exhaustive;
  uint64_t samples;
  uint64_t seed;
  uint64_t witnesses;
  unsigned jobs;
  uint64_t budget;
} ag_verify_options;

/* Sampled mode, 1000 samples, seed 0, 200 witnesses, 1 job, default budget. */
AG_API void ag_verify_options_init(ag_verify_options* options);
AG_API ag_status ag_verify(const ag_verify_options* options, ag_report** out);
AG_API uint64_t ag_report_checked(const ag_report* r);
AG_API uint64_t ag_report_failures(const ag_report* r);
AG_API double ag_report_seconds(const ag_report* r);
AG_API ag_status ag_report_render(const ag_report* r, char** out);
AG_API void ag_report_free(ag_report* r);

#ifdef __cplusplus
}
#endif

#endif
