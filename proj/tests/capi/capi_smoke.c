/* Uses only the public C header and the shared library. */

#include <stdio.h>
#include <string.h>

#include "tableaux/tableaux.h"

static int failures = 0;

#define CHECK(cond)                                        \
  do {                                                     \
    if (!(cond)) {                                         \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                          \
    }                                                      \
  } while (0)

static const char* cr =
    "{\"n\": 2, \"s\": 2, \"generators\": [[[\"1\",\"0\"],[\"0\",\"1\"]],"
    " [[\"0\",\"1\"],[\"-1\",\"0\"]]]}";

int main(void) {
  tbx_options opts;
  tbx_tableau* t = NULL;
  tbx_lie_tableau* lt = NULL;
  tbx_report* r = NULL;
  size_t s[4] = {0, 0, 0, 0};
  size_t count = 0;
  char* json = NULL;

  tbx_options_default(&opts);
  CHECK(opts.seed == 1 && opts.trials == 5 && opts.q_max == 4 && opts.h_max == 4);
  CHECK(strlen(tbx_version()) > 0);

  CHECK(tbx_tableau_from_json(cr, &t) == TBX_OK);
  CHECK(tbx_tableau_dim(t) == 2);
  CHECK(tbx_tableau_characters(t, &opts, s, 4, &count) == TBX_OK);
  CHECK(count == 2 && s[0] == 2 && s[1] == 0);
  CHECK(tbx_report_tableau_cartan_test(t, &opts, &r) == TBX_OK);
  CHECK(tbx_report_verified(r) == 1);
  CHECK(strstr(tbx_report_json(r), "\"involutive\": true") != NULL);
  tbx_report_free(r);
  tbx_tableau_free(t);

  CHECK(tbx_tableau_from_json("{\"n\": 2}", &t) == TBX_ERR_PARSE);
  CHECK(t == NULL);
  CHECK(strstr(tbx_last_error(), "\"s\"") != NULL);
  CHECK(tbx_tableau_from_json(NULL, &t) == TBX_ERR_INVALID_ARGUMENT);

  CHECK(tbx_lie_tableau_from_catalog("so3_broken", &lt) == TBX_OK);
  CHECK(tbx_report_certify(lt, &opts, &r) == TBX_OK);
  CHECK(tbx_report_verified(r) == 0);
  tbx_report_free(r);
  CHECK(tbx_report_pds_build(lt, &opts, &r) == TBX_ERR_NOT_CERTIFIED);
  opts.force = 1;
  CHECK(tbx_report_pds_build(lt, &opts, &r) == TBX_OK);
  CHECK(tbx_report_verified(r) == 0);
  tbx_report_free(r);
  opts.force = 0;
  tbx_lie_tableau_free(lt);

  CHECK(tbx_catalog_export("so41_willmore", &json) == TBX_OK);
  CHECK(tbx_lie_tableau_from_json(json, &lt) == TBX_OK);
  tbx_string_free(json);
  CHECK(tbx_report_pds_verify(lt, &opts, &r) == TBX_OK);
  CHECK(tbx_report_verified(r) == 1);
  CHECK(strstr(tbx_report_text(r), "s0: 8") != NULL);
  tbx_report_free(r);
  tbx_lie_tableau_free(lt);

  CHECK(tbx_lie_tableau_from_catalog("nope", &lt) == TBX_ERR_UNKNOWN_NAME);
  CHECK(strcmp(tbx_status_name(TBX_ERR_NOT_CARTAN), "not_cartan") == 0);

  if (failures == 0) printf("capi smoke: ok\n");
  return failures == 0 ? 0 : 1;
}
