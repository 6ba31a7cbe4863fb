/* C-only client of the shared library */
#include <stdio.h>
#include <string.h>

#include "qss/qss.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

int main(void)
{
    qss_job* job = qss_job_new();
    EXPECT(job != NULL);

    EXPECT(qss_job_parse(job, "preset: 2E6sc\nformat: tsv\n") == QSS_OK);
    EXPECT(qss_job_run(job) == QSS_OK);
    EXPECT(strstr(qss_job_output(job), "A3xA1\tZ/4") != NULL);
    EXPECT(strcmp(qss_job_error(job), "") == 0);

    EXPECT(qss_job_set(job, "mode", "nonsense") == QSS_PARSE_ERROR);
    EXPECT(strstr(qss_job_error(job), "nonsense") != NULL);
    EXPECT(qss_exit_code(QSS_PARSE_ERROR) == 1);

    EXPECT(qss_job_parse(job, "preset: SL3\np: 4\n") == QSS_OK);
    EXPECT(qss_job_run(job) == QSS_BAD_CHARACTERISTIC);
    EXPECT(strcmp(qss_status_name(QSS_BAD_CHARACTERISTIC), "BadCharacteristic") == 0);

    EXPECT(qss_job_parse(job, "preset: SL3\nmode: oracle-check\noracle_bound: 2\n") == QSS_OK);
    qss_status s = qss_job_run(job);
    EXPECT(s == QSS_ORACLE_MISMATCH);
    EXPECT(qss_exit_code(s) == 2);
    EXPECT(qss_exit_code(QSS_INCONSISTENT) == 2);

    EXPECT(qss_job_parse(job, "preset: G2\n") == QSS_OK);
    EXPECT(strstr(qss_job_canonical(job), "preset: G2\n") != NULL);

    EXPECT(qss_job_run(NULL) == QSS_NULL_HANDLE);
    EXPECT(strcmp(qss_job_output(NULL), "") == 0);
    qss_job_free(job);
    qss_job_free(NULL);

    printf("%s\n", failures ? "FAILED" : "ok");
    return failures != 0;
}
