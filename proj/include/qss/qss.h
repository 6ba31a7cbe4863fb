#ifndef QSS_H
#define QSS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qss_job qss_job;

typedef enum {
    QSS_OK = 0,
    QSS_NOT_FINITE,
    QSS_NOT_CONTAINED,
    QSS_BAD_CHARACTERISTIC,
    QSS_INVALID_LATTICE,
    QSS_NOT_CRYSTALLOGRAPHIC,
    QSS_CAP_EXCEEDED,
    QSS_NOT_STABLE,
    QSS_NOT_INTEGRAL,
    QSS_INFINITE_ORDER,
    QSS_NOT_SEMISIMPLE,
    QSS_NOT_IN_SPAN,
    QSS_PARSE_ERROR,
    QSS_INVALID_ARGUMENT,
    QSS_INCONSISTENT,
    QSS_ORACLE_MISMATCH,
    QSS_NULL_HANDLE,
    QSS_INTERNAL
} qss_status;

const char* qss_version(void);
const char* qss_status_name(qss_status s);
/* 0 success, 1 validation error, 2 internal inconsistency */
int qss_exit_code(qss_status s);

qss_job* qss_job_new(void);
void qss_job_free(qss_job* job);

/* "key: value" lines; replaces the whole job */
qss_status qss_job_parse(qss_job* job, const char* text);
/* one key on top of the current job */
qss_status qss_job_set(qss_job* job, const char* key, const char* value);
/* canonical text of the job; valid until the next call on `job` */
const char* qss_job_canonical(qss_job* job);

qss_status qss_job_run(qss_job* job);
/* table from the last run, or "" */
const char* qss_job_output(const qss_job* job);
/* message of the last failure, or "" */
const char* qss_job_error(const qss_job* job);

#ifdef __cplusplus
}
#endif

#endif
