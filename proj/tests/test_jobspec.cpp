#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "qss/jobspec.hpp"

using namespace qss;

namespace {
ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error");
    return ErrorCode::Inconsistent;
}
} // namespace

TEST_CASE("preset line and defaults")
{
    JobSpec s = parse_spec("preset: 2E6sc\n");
    CHECK(s.preset == "2E6sc");
    CHECK(s.mode == Mode::QuasiIsolated);
    Twist tw = spec_twist(s);
    CHECK(tw.order() == 2);
    CHECK(tw.datum().cartan_type().to_string() == "E6");
}

TEST_CASE("explicit A1 datum")
{
    JobSpec s = parse_spec("# A1 by hand\nrank: 1\nsimple_roots: 2\nsimple_coroots: 1\nmode: info\n");
    RootDatum d = spec_datum(s);
    CHECK(d.rank() == 1);
    CHECK(d.roots().size() == 2);
    CHECK(d.cartan_type().to_string() == "A1");
}

TEST_CASE("type with lattice generators")
{
    JobSpec s = parse_spec("type: A3\nx_generators: 2 0 0\n");
    RootDatum d = spec_datum(s);
    CHECK(fundamental_group(d).to_string() == "Z/2");
    CHECK(fundamental_group(spec_datum(parse_spec("type: A3\nisogeny: ad\n"))).to_string() == "Z/4");
    CHECK(fundamental_group(spec_datum(parse_spec("type: A3\n"))).trivial());
}

TEST_CASE("garbage is rejected with a location")
{
    CHECK(code_of([] { parse_spec("this is not a spec"); }) == ErrorCode::ParseError);
    try {
        parse_spec("preset: G2\np: two\n");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("p") != std::string::npos);
    }
    CHECK(code_of([] { parse_spec("preset: G2\npreset: F4\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_spec("colour: red\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_spec("mode: everything\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_spec("simple_roots: 2 1; 1\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { spec_datum(parse_spec("mode: info\n")); }) == ErrorCode::ParseError);
    CHECK(code_of([] { spec_datum(parse_spec("preset: G2\ntype: G2\n")); }) == ErrorCode::ParseError);
}

TEST_CASE("serialize round-trips")
{
    const char* texts[] = {
        "preset: 2E6sc\n",
        "preset: GL\nrank: 5\ntwist: flip\nmode: classify\nlambda: Y(1/4,0,0,0,-1/4)\nformat: tsv\n",
        "type: A3\nx_generators: 2 0 0\ntwist: flip\np: 3\noracle_bound: 12\nweyl_cap: 500\n",
        "rank: 2\nsimple_roots: [1 -1]\nsimple_coroots: [1 -1]\ntwist: 0 1; 1 0\nmode: oracle-check\n",
    };
    for (const char* t : texts) {
        CAPTURE(t);
        JobSpec s = parse_spec(t);
        std::string c = serialize(s);
        CHECK(parse_spec(c) == s);
        CHECK(serialize(parse_spec(c)) == c);
    }
}

TEST_CASE("lambda forms agree")
{
    Classifier c(spec_twist(parse_spec("preset: G2\n")));
    RatVec a = parse_lambda(c, "1/2*w1");
    RatVec b = parse_lambda(c, "c1 + 3/2*c2");
    CHECK(a == b);
    RatVec y = parse_lambda(c, "Y(1, 3/2)");
    CHECK(y == b);
    CHECK(parse_lambda(c, "0") == RatVec(2));
    CHECK(parse_lambda(c, "") == RatVec(2));
    CHECK(parse_lambda(c, "-c1 + c2") == RatVec{Rat(-1), Rat(1)});
    CHECK(code_of([&] { parse_lambda(c, "1/2*z1"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_lambda(c, "w3"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_lambda(c, "(1,2,3)"); }) == ErrorCode::ParseError);

    Classifier gl(spec_twist(parse_spec("preset: GL5\ntwist: flip\n")));
    CHECK(code_of([&] { parse_lambda(gl, "Y(1/4,0,0,0,0)"); }) == ErrorCode::NotStable);
    RatVec t1 = parse_lambda(gl, "Y(1/4,0,0,0,-1/4)");
    RatVec viay = parse_lambda(gl, "(" + to_string(gl.lattices().Y_sigma.coordinates({Rat(1, 4), 0, 0, 0, Rat(-1, 4)}))
                                            .substr(1));
    CHECK(t1 == viay);
}

TEST_CASE("run_job tables")
{
    JobResult r = run_job(parse_spec("preset: 3D4sc\nformat: tsv\n"));
    CHECK_FALSE(r.mismatch);
    // notes, header, three rows
    std::size_t lines = std::count(r.output.begin(), r.output.end(), '\n');
    CHECK(lines == 2 + 1 + 3);
    CHECK(r.output.find("lambda_coroots\tlambda_affine\tsigma_t_type\tpi1_invariants\ta_t_order\tts_tso_order\t"
                        "isolated\tquasi_isolated\tquasi_central\n") != std::string::npos);
    CHECK(run_job(parse_spec("preset: 3D4sc\nformat: tsv\n")).output == r.output);

    JobResult gl5 = run_job(parse_spec("preset: GL5\ntwist: flip\nmode: classify\nlambda: Y(1/4,0,0,0,-1/4)\n"));
    CHECK(gl5.output.find("at input: {pi(a1+a2), pi(a2+a3)}") != std::string::npos);

    JobResult bad = run_job(parse_spec("preset: SL3\nmode: oracle-check\noracle_bound: 2\n"));
    CHECK(bad.mismatch);
    CHECK_FALSE(run_job(parse_spec("preset: SL3\nmode: oracle-check\noracle_bound: 6\n")).mismatch);
}

TEST_CASE("pretty tables carry the tsv content")
{
    for (const char* m : {"info", "alcove", "quasi-central", "isolated", "quasi-isolated"}) {
        CAPTURE(m);
        std::string base = std::string("preset: PSO8\ntwist: flip\nmode: ") + m + "\n";
        std::string tsv = run_job(parse_spec(base + "format: tsv\n")).output;
        std::string pretty = run_job(parse_spec(base + "format: pretty\n")).output;
        // every tsv cell appears on the matching pretty line
        std::istringstream ts(tsv), ps(pretty);
        std::string tl, pl;
        while (std::getline(ts, tl)) {
            REQUIRE(std::getline(ps, pl));
            if (pl.find("--") == 0) REQUIRE(std::getline(ps, pl));
            if (tl[0] == '#') {
                CHECK(tl == pl);
                continue;
            }
            std::istringstream cells(tl);
            std::string cell;
            std::size_t pos = 0;
            while (std::getline(cells, cell, '\t')) {
                std::size_t at = pl.find(cell, pos);
                CHECK(at != std::string::npos);
                pos = at + cell.size();
            }
        }
    }
}
