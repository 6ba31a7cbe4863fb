#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "qss/qss.h"

namespace {

struct JobHandle {
    qss_job* job = qss_job_new();
    ~JobHandle() { qss_job_free(job); }
};

int report(qss_job* job, qss_status s)
{
    std::fprintf(stderr, "error: %s\n", qss_job_error(job));
    return qss_exit_code(s);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quasi-semisimple classes of disconnected reductive groups"};
    std::string preset, datum_file, twist, mode, lambda, format;
    std::optional<long> p, oracle_bound, weyl_cap, rank;
    bool canonical = false;
    app.add_option("--preset", preset, "preset datum, e.g. 2E6sc, GL, SO8, 3D4sc");
    app.add_option("--datum-file", datum_file, "job file with 'key: value' lines");
    app.add_option("--twist", twist, "identity, flip, triality or a matrix '1 0; 0 1'");
    app.add_option("--p", p, "characteristic, 0 or a prime");
    app.add_option("--mode", mode, "info, alcove, quasi-central, isolated, quasi-isolated, classify, oracle-check");
    app.add_option("--lambda", lambda, "point for classify: '1/2*w1 + 1/3*c2', '(1/2,0)' or 'Y(1/4,0,-1/4)'");
    app.add_option("--format", format, "pretty or tsv");
    app.add_option("--oracle-bound", oracle_bound, "denominator bound for oracle-check (0: default)");
    app.add_option("--weyl-cap", weyl_cap, "largest W^sigma the oracle enumerates");
    app.add_option("--rank", rank, "n for bare family presets (GL, SL, PGL, SO, Spin, PSO)");
    app.add_flag("--canonical", canonical, "print the canonical job text and stop");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    JobHandle h;
    if (!h.job) {
        std::fprintf(stderr, "error: out of memory\n");
        return 2;
    }
    if (!datum_file.empty()) {
        std::ifstream in(datum_file);
        if (!in) {
            std::fprintf(stderr, "error: cannot read %s\n", datum_file.c_str());
            return 1;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        qss_status s = qss_job_parse(h.job, ss.str().c_str());
        if (s != QSS_OK) return report(h.job, s);
    }
    auto set = [&](const char* key, const std::string& v) {
        qss_status s = qss_job_set(h.job, key, v.c_str());
        return s == QSS_OK ? 0 : report(h.job, s);
    };
    int rc = 0;
    if (!rc && !preset.empty()) rc = set("preset", preset);
    if (!rc && rank) rc = set("rank", std::to_string(*rank));
    if (!rc && !twist.empty()) rc = set("twist", twist);
    if (!rc && p) rc = set("p", std::to_string(*p));
    if (!rc && !mode.empty()) rc = set("mode", mode);
    if (!rc && !lambda.empty()) rc = set("lambda", lambda);
    if (!rc && !format.empty()) rc = set("format", format);
    if (!rc && oracle_bound) rc = set("oracle_bound", std::to_string(*oracle_bound));
    if (!rc && weyl_cap) rc = set("weyl_cap", std::to_string(*weyl_cap));
    if (rc) return rc;

    if (canonical) {
        std::fputs(qss_job_canonical(h.job), stdout);
        return 0;
    }
    qss_status s = qss_job_run(h.job);
    std::fputs(qss_job_output(h.job), stdout);
    if (s != QSS_OK) return report(h.job, s);
    return 0;
}
