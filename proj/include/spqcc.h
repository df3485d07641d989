/* C interface to the exact verification engine for quantized symplectic
 * conjugacy classes with two symplectic blocks in the stabilizer.
 *
 * Usage: create a verifier, configure it with string key/value pairs, run it,
 * then read the per-suite JSON reports and the summary.  Returned strings are
 * owned by the verifier; a report-JSON pointer stays valid until the next
 * report-JSON call, everything else until the next run or free.
 */
#ifndef SPQCC_H
#define SPQCC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct spq_verifier spq_verifier;

typedef enum {
  SPQ_OK = 0,
  SPQ_ERR_INVALID = 1,       /* bad argument or configuration */
  SPQ_ERR_UNSUPPORTED = 2,   /* operation not defined for this configuration */
  SPQ_ERR_DEPTH = 3,         /* truncation depth exceeded */
  SPQ_ERR_RESOURCE = 4,      /* height bound exceeded */
  SPQ_ERR_MALFORMED = 5,     /* malformed scalar input */
  SPQ_ERR_LIMIT = 6,         /* classical limit undefined (pole at q = 1) */
  SPQ_ERR_CONSTRUCTION = 7,  /* internal construction failure */
  SPQ_ERR_RESEED = 8,        /* degenerate specialization, pick another seed */
  SPQ_ERR_INTERNAL = 9
} spq_status;

/* run outcome after spq_verifier_run */
#define SPQ_RUN_PASS 0
#define SPQ_RUN_FAIL 1
#define SPQ_RUN_INCONCLUSIVE 2

spq_verifier* spq_verifier_new(void);
void spq_verifier_free(spq_verifier* v);

/* Keys: "n", "depth", "seed" (integers); "blocks" ("n1,..,nl;m,p");
 * "suites" (comma-separated suite names or "all"); "symbolic-z",
 * "generic-lambda" ("0"/"1"); "gl-eigs" ("value:mult,...").  */
spq_status spq_verifier_configure(spq_verifier* v, const char* key, const char* value);

spq_status spq_verifier_run(spq_verifier* v);

/* SPQ_RUN_* outcome of the last run. */
int spq_verifier_outcome(const spq_verifier* v);

size_t spq_verifier_report_count(const spq_verifier* v);
const char* spq_verifier_report_suite(const spq_verifier* v, size_t index);
const char* spq_verifier_report_json(const spq_verifier* v, size_t index);
const char* spq_verifier_summary(const spq_verifier* v);

/* Message for the last error (empty string if none). */
const char* spq_verifier_last_error(const spq_verifier* v);

/* Names of all suites, comma separated. */
const char* spq_suite_names(void);

const char* spq_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SPQCC_H */
