#ifndef ORBIQUOT_H
#define ORBIQUOT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Analysis calls mirror the CLI exit semantics: OQ_OK for a
 * clean run, OQ_FAIL when the matrix is not admissible or a verification
 * suite fails. Negative-free, stable values. */
#define OQ_OK 0
#define OQ_FAIL 1
#define OQ_EUSAGE 2
#define OQ_EPARSE 3
#define OQ_ESHAPE 4
#define OQ_EINTERNAL 5

typedef struct oq_matrix oq_matrix;

typedef struct oq_options {
  double tol;         /* solver tolerance, default 1e-10 */
  int seeds;          /* seeded solver runs for "sample", default 8 */
  int max_iter;       /* solver iteration cap, default 500 */
  uint64_t seed;      /* base seed, default 1 */
  int json;           /* 0 = text report, 1 = JSON report */
} oq_options;

oq_options oq_default_options(void);

/* Parses a 3x4 or 2x3 integer matrix; rows separated by ';' or newlines.
 * On success stores a handle in *out. On failure returns OQ_EPARSE or
 * OQ_ESHAPE and, if err is non-null, stores a message (free with
 * oq_string_free). */
int oq_matrix_parse(const char* text, oq_matrix** out, char** err);
void oq_matrix_free(oq_matrix* m);

/* 3 for the 3x4 case, 2 for the 2x3 case. */
int oq_matrix_torus_rank(const oq_matrix* m);

/* Each call renders one newline-terminated report document into *out
 * (free with oq_string_free) and returns a status code. */
int oq_run_check(const oq_matrix* m, const oq_options* opts, char** out,
                 char** err);
int oq_run_catalog(const oq_matrix* m, const oq_options* opts, char** out,
                   char** err);
int oq_run_sample(const oq_matrix* m, const oq_options* opts, char** out,
                  char** err);
int oq_run_verify(const oq_options* opts, char** out, char** err);

void oq_string_free(char* s);
const char* oq_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ORBIQUOT_H */
