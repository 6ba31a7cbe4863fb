#pragma once

// Line-oriented "key: value" job descriptions and their execution.

#include <optional>
#include <string>
#include <vector>

#include "qss/oracle.hpp"

namespace qss {

enum class Mode { Info, Alcove, QuasiCentral, Isolated, QuasiIsolated, Classify, OracleCheck };
enum class Format { Pretty, Tsv };

const char* mode_name(Mode m);
const char* format_name(Format f);

struct JobSpec {
    // datum: a preset, a Cartan type with X-lattice generators, or explicit simple roots/coroots
    std::string preset;
    int rank = 0;                      // rank for bare family presets ("GL"), else the ambient rank
    std::string type;                  // "E6", "A1xA1"
    std::string isogeny;               // sc, ad or custom (x_generators); default sc
    std::vector<RatVec> x_generators;  // X / Q generators in fundamental-weight coordinates
    std::optional<IntMatrix> roots, coroots;
    // twist: a name or an explicit matrix on X
    std::string twist;
    std::optional<IntMatrix> twist_matrix;
    long p = 0;
    Mode mode = Mode::QuasiIsolated;
    std::string lambda;
    Format format = Format::Pretty;
    long oracle_bound = 0;
    std::size_t weyl_cap = 100000;

    bool operator==(const JobSpec& o) const;
};

// ParseError with "line N" and the key in the message
JobSpec parse_spec(const std::string& text);
// canonical form: fixed key order, defaults included
std::string serialize(const JobSpec& s);
// applies one key; `where` prefixes parse errors
void set_key(JobSpec& s, const std::string& key, const std::string& value, const std::string& where = "");

RootDatum spec_datum(const JobSpec& s);
Twist spec_twist(const JobSpec& s);

// "1/2*w1 + 1/3*w2" over fundamental coweights (w), simple coroots of Phi_sigma (c)
// or simple coroots of the datum (a); "(1/2, 0)" in the Y_sigma basis; "Y(1/4, 0, -1/4)" in Y (x) Q.
// Result: coroot coordinates of Phi_sigma.
RatVec parse_lambda(const Classifier& c, const std::string& text);

struct JobResult {
    std::string output;
    bool mismatch = false;   // oracle disagreement
};

JobResult run_job(const JobSpec& s);

} // namespace qss
