#include "qss/qss.h"

#include <new>
#include <string>

#include "qss/jobspec.hpp"

struct qss_job {
    qss::JobSpec spec;
    std::string output, error, canonical;
};

namespace {

qss_status from_code(qss::ErrorCode c)
{
    return static_cast<qss_status>(static_cast<int>(c) + 1);
}

template <class F>
qss_status guarded(qss_job* job, F&& f)
{
    if (!job) return QSS_NULL_HANDLE;
    job->error.clear();
    try {
        return f();
    } catch (const qss::Error& e) {
        job->error = e.what();
        return from_code(e.code());
    } catch (const std::bad_alloc&) {
        job->error = "out of memory";
        return QSS_INTERNAL;
    } catch (const std::exception& e) {
        job->error = e.what();
        return QSS_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* qss_version(void) { return "1.0.0"; }

const char* qss_status_name(qss_status s)
{
    switch (s) {
    case QSS_OK: return "OK";
    case QSS_ORACLE_MISMATCH: return "OracleMismatch";
    case QSS_NULL_HANDLE: return "NullHandle";
    case QSS_INTERNAL: return "Internal";
    default: break;
    }
    if (s > QSS_OK && s <= QSS_INCONSISTENT) return qss::error_name(static_cast<qss::ErrorCode>(s - 1));
    return "Unknown";
}

int qss_exit_code(qss_status s)
{
    switch (s) {
    case QSS_OK: return 0;
    case QSS_INCONSISTENT:
    case QSS_ORACLE_MISMATCH:
    case QSS_INTERNAL: return 2;
    default: return 1;
    }
}

qss_job* qss_job_new(void) { return new (std::nothrow) qss_job(); }

void qss_job_free(qss_job* job) { delete job; }

qss_status qss_job_parse(qss_job* job, const char* text)
{
    return guarded(job, [&] {
        if (!text) throw qss::Error(qss::ErrorCode::InvalidArgument, "null text");
        job->spec = qss::parse_spec(text);
        return QSS_OK;
    });
}

qss_status qss_job_set(qss_job* job, const char* key, const char* value)
{
    return guarded(job, [&] {
        if (!key || !value) throw qss::Error(qss::ErrorCode::InvalidArgument, "null key or value");
        qss::set_key(job->spec, key, value);
        return QSS_OK;
    });
}

const char* qss_job_canonical(qss_job* job)
{
    if (!job) return "";
    job->canonical = qss::serialize(job->spec);
    return job->canonical.c_str();
}

qss_status qss_job_run(qss_job* job)
{
    return guarded(job, [&] {
        job->output.clear();
        qss::JobResult r = qss::run_job(job->spec);
        job->output = r.output;
        if (r.mismatch) {
            job->error = "oracle and enumeration disagree";
            return QSS_ORACLE_MISMATCH;
        }
        return QSS_OK;
    });
}

const char* qss_job_output(const qss_job* job) { return job ? job->output.c_str() : ""; }

const char* qss_job_error(const qss_job* job) { return job ? job->error.c_str() : ""; }

} // extern "C"
