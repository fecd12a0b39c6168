#ifndef TABLEAUX_TABLEAUX_H
#define TABLEAUX_TABLEAUX_H

/* Exact tableaux, Spencer cohomology, tableaux over Lie algebras and their
 * Pfaffian systems. Handles are opaque; every fallible call returns a
 * tbx_status and leaves a message in tbx_last_error() (per thread). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TBX_API __attribute__((visibility("default")))
#else
#define TBX_API
#endif

typedef enum tbx_status {
  TBX_OK = 0,
  TBX_ERR_INVALID_ARGUMENT,
  TBX_ERR_PARSE,
  TBX_ERR_DIMENSION_MISMATCH,
  TBX_ERR_UNKNOWN_NAME,
  TBX_ERR_GENERICITY_UNSTABLE,
  TBX_ERR_JACOBI_VIOLATION,
  TBX_ERR_NOT_COMPLEMENTARY,
  TBX_ERR_NOT_ABELIAN,
  TBX_ERR_NOT_IN_DECOMPOSITION,
  TBX_ERR_NOT_SEMISIMPLE,
  TBX_ERR_NOT_INVOLUTIVE,
  TBX_ERR_NOT_CARTAN,
  TBX_ERR_NOT_CERTIFIED,
  TBX_ERR_INTERNAL
} tbx_status;

typedef enum tbx_mode {
  TBX_MODE_FROM_INPUT = 0,
  TBX_MODE_INVOLUTIVE = 1,
  TBX_MODE_TWO_ACYCLIC = 2
} tbx_mode;

typedef struct tbx_options {
  uint64_t seed;
  uint32_t trials;
  int64_t entry_bound;
  int32_t q_max;
  int32_t h_max;
  int32_t force;
  tbx_mode mode;
} tbx_options;

typedef struct tbx_tableau tbx_tableau;
typedef struct tbx_lie_tableau tbx_lie_tableau;
typedef struct tbx_report tbx_report;

TBX_API const char* tbx_version(void);
TBX_API const char* tbx_status_name(tbx_status status);
TBX_API const char* tbx_last_error(void);

/* seed 1, trials 5, entry_bound 10, q_max 4, h_max 4, no force. */
TBX_API void tbx_options_default(tbx_options* opts);

/* Inputs are JSON text. A tableau may also be read from the "tableau" block
 * of a lie-tableau bundle. */
TBX_API tbx_status tbx_tableau_from_json(const char* json, tbx_tableau** out);
TBX_API void tbx_tableau_free(tbx_tableau* t);
TBX_API size_t tbx_tableau_dim(const tbx_tableau* t);
/* Writes up to `cap` characters s_1..s_n; *count receives n. */
TBX_API tbx_status tbx_tableau_characters(const tbx_tableau* t, const tbx_options* opts,
                                          size_t* s_out, size_t cap, size_t* count);

TBX_API tbx_status tbx_lie_tableau_from_json(const char* json, tbx_lie_tableau** out);
TBX_API tbx_status tbx_lie_tableau_from_catalog(const char* name, tbx_lie_tableau** out);
TBX_API void tbx_lie_tableau_free(tbx_lie_tableau* lt);

/* Bundle JSON of a catalog entry, including its expectations. Free with
 * tbx_string_free. */
TBX_API tbx_status tbx_catalog_export(const char* name, char** json_out);
TBX_API void tbx_string_free(char* s);

/* Reports. A report is produced even when the mathematics answers "no";
 * tbx_report_verified then returns 0. */
TBX_API tbx_status tbx_report_tableau_characters(const tbx_tableau* t, const tbx_options* opts,
                                                 tbx_report** out);
TBX_API tbx_status tbx_report_tableau_prolong(const tbx_tableau* t, const tbx_options* opts,
                                              tbx_report** out);
TBX_API tbx_status tbx_report_tableau_cartan_test(const tbx_tableau* t, const tbx_options* opts,
                                                  tbx_report** out);
TBX_API tbx_status tbx_report_tableau_cohomology(const tbx_tableau* t, const tbx_options* opts,
                                                 tbx_report** out);
TBX_API tbx_status tbx_report_lie_validate(const char* json, const tbx_options* opts,
                                           tbx_report** out);
TBX_API tbx_status tbx_report_certify(const tbx_lie_tableau* lt, const tbx_options* opts,
                                      tbx_report** out);
TBX_API tbx_status tbx_report_pds_build(const tbx_lie_tableau* lt, const tbx_options* opts,
                                        tbx_report** out);
TBX_API tbx_status tbx_report_pds_verify(const tbx_lie_tableau* lt, const tbx_options* opts,
                                         tbx_report** out);
TBX_API tbx_status tbx_report_pds_tower(const tbx_lie_tableau* lt, const tbx_options* opts,
                                        tbx_report** out);
TBX_API tbx_status tbx_report_gg0_export(const tbx_lie_tableau* lt, const tbx_options* opts,
                                         tbx_report** out);
TBX_API tbx_status tbx_report_catalog_list(const tbx_options* opts, tbx_report** out);
TBX_API tbx_status tbx_report_catalog_show(const char* name, const tbx_options* opts,
                                           tbx_report** out);
/* name == NULL verifies every entry. */
TBX_API tbx_status tbx_report_catalog_verify(const char* name, const tbx_options* opts,
                                             tbx_report** out);

TBX_API int tbx_report_verified(const tbx_report* r);
TBX_API const char* tbx_report_json(const tbx_report* r);
TBX_API const char* tbx_report_text(const tbx_report* r);
TBX_API void tbx_report_free(tbx_report* r);

#ifdef __cplusplus
}
#endif

#endif
