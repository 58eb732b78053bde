#ifndef SKEWSPEC_SKEWSPEC_H
#define SKEWSPEC_SKEWSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SKEWSPEC_BUILDING)
#    define SKEWSPEC_API __declspec(dllexport)
#  else
#    define SKEWSPEC_API __declspec(dllimport)
#  endif
#else
#  define SKEWSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as CLI exit codes. */
typedef enum skewspec_status {
  SKEWSPEC_OK = 0,
  SKEWSPEC_CHECK_FAILED = 1,     /* verify or oracle found a failing check */
  SKEWSPEC_E_INPUT = 2,          /* parse error, bad argument, not a skew-adjacency matrix */
  SKEWSPEC_E_NOT_CONTROLLABLE = 3,
  SKEWSPEC_E_OUT_OF_FAMILY = 4,
  SKEWSPEC_E_CAPABILITY = 5,     /* outside supported limits */
  SKEWSPEC_E_INTERNAL = 6
} skewspec_status;

enum { SKEWSPEC_FLAG_TIMING = 1u };

typedef struct skewspec_graph skewspec_graph;

SKEWSPEC_API const char* skewspec_version(void);

/* Message for the last failing call on this thread; empty after success. */
SKEWSPEC_API const char* skewspec_last_error(void);

/* Frees any string returned through a char** out parameter. */
SKEWSPEC_API void skewspec_string_free(char* s);

/* Accepts the pair code "n:<code>" or a JSON document. */
SKEWSPEC_API skewspec_status skewspec_graph_parse(const char* text, skewspec_graph** out);
SKEWSPEC_API void skewspec_graph_free(skewspec_graph* g);
SKEWSPEC_API skewspec_status skewspec_graph_order(const skewspec_graph* g, size_t* out);
SKEWSPEC_API skewspec_status skewspec_graph_code(const skewspec_graph* g, char** out);

/* Family verdict, SNF, Q0 and obstructions as JSON. */
SKEWSPEC_API skewspec_status skewspec_analyze(const skewspec_graph* g, unsigned flags, char** json_out);

/* Full mate report as JSON; dot_out may be NULL. Out-of-family graphs still
   produce the document and return SKEWSPEC_E_OUT_OF_FAMILY. */
SKEWSPEC_API skewspec_status skewspec_mates(const skewspec_graph* g, unsigned flags, char** json_out,
                                            char** dot_out);

/* Audit listing; SKEWSPEC_CHECK_FAILED when any check fails. */
SKEWSPEC_API skewspec_status skewspec_verify(const skewspec_graph* g, char** text_out);

/* CSV of random graphs; threads = 0 uses the default worker count. */
SKEWSPEC_API skewspec_status skewspec_survey(unsigned n, uint64_t count, uint64_t seed, unsigned threads,
                                             char** csv_out);

/* Exhaustive comparison for n <= 5 as JSON; SKEWSPEC_CHECK_FAILED on any mismatch. */
SKEWSPEC_API skewspec_status skewspec_oracle(unsigned n, unsigned threads, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
