#include <doctest.h>

#include <algorithm>
#include <set>

#include "qss/classify.hpp"

using namespace qss;

namespace {
Classifier make(const std::string& preset, const std::string& twist = "", long p = 0)
{
    RootDatum d = preset_datum(preset);
    std::string t = twist.empty() ? preset_default_twist(preset) : twist;
    return Classifier(attach_twist(d, named_twist(d, t), p));
}
RatVec Q(std::initializer_list<Rat> v) { return RatVec(v); }
std::multiset<std::string> types(const std::vector<ClassReport>& rs)
{
    std::multiset<std::string> out;
    for (const auto& r : rs) out.insert(r.sigma_t_type.to_string() + " " + r.pi1.to_string());
    return out;
}
} // namespace

TEST_CASE("2E6 sc quasi-isolated classes")
{
    Classifier c = make("2E6sc");
    auto rs = c.enumerate_quasi_isolated();
    REQUIRE(rs.size() == 5);
    CHECK(types(rs) == std::multiset<std::string>{"F4 1", "C4 Z/2", "B3xA1 Z/2", "A2xA2 Z/3", "A3xA1 Z/4"});
    for (const auto& r : rs) {
        CHECK(r.isolated);
        CHECK(r.ts_tso.trivial());
    }
    CHECK(rs[0].quasi_central);
    CHECK(rs[0].lambda_ambient == RatVec(6));
    // simple-coroot coordinates of the table representatives
    std::vector<RatVec> table{Q({0, 0, 0, 0, 0, 0}), Q({0, 0, 0, Rat(1, 2), 0, 0}),
                              Q({0, Rat(1, 2), Rat(1, 4), 0, Rat(1, 4), 0}), Q({0, Rat(2, 3), 0, Rat(1, 3), 0, 0}),
                              Q({0, Rat(3, 4), 0, Rat(1, 2), 0, 0})};
    std::set<RatVec> seen, expect;
    for (const auto& r : rs) expect.insert(r.lambda);
    for (const auto& x : table) seen.insert(c.report(c.phi().to_coords(x)).lambda);
    CHECK(seen == expect);
    CHECK(c.report(c.phi().to_coords(table[1])).sigma_t_type.to_string() == "C4");
    CHECK(c.report(c.phi().to_coords(table[1])).phi_t_type.to_string() == "B4");
}

TEST_CASE("3D4 sc quasi-isolated classes")
{
    Classifier c = make("3D4sc");
    auto rs = c.enumerate_quasi_isolated();
    REQUIRE(rs.size() == 3);
    CHECK(types(rs) == std::multiset<std::string>{"G2 1", "A2 Z/3", "A1xA1 Z/2"});
    // half and two thirds of the coroot of the central node
    ClassReport half = c.report(c.phi().to_coords(Q({0, Rat(1, 2), 0, 0})));
    ClassReport third = c.report(c.phi().to_coords(Q({0, Rat(2, 3), 0, 0})));
    CHECK(half.sigma_t_type.to_string() == "A1xA1");
    CHECK(half.pi1.to_string() == "Z/2");
    CHECK(third.sigma_t_type.to_string() == "A2");
    CHECK(third.pi1.to_string() == "Z/3");
    CHECK(half.S_t.size() == 2);
}

TEST_CASE("GL2 outer class is quasi-isolated but not isolated")
{
    Classifier c = make("GL2", "flip");
    ClassReport r = c.report(c.phi().to_coords(Q({Rat(1, 4), Rat(-1, 4)})));
    CHECK(r.A_t.size() == 2);
    CHECK(r.w0_order == 1);
    CHECK(r.w_order == 2);
    CHECK(r.quasi_isolated);
    CHECK_FALSE(r.isolated);
    CHECK(c.enumerate_quasi_isolated().size() == 2);
    CHECK(c.enumerate_isolated().size() == 1);
}

TEST_CASE("GL5 remark labels at the unreduced point")
{
    Classifier c = make("GL5", "flip");
    auto l = c.sigma_t_labels(c.phi().to_coords(Q({Rat(1, 4), 0, 0, 0, Rat(-1, 4)})));
    std::sort(l.begin(), l.end());
    CHECK(l == std::vector<std::string>{"pi(a1+a2)", "pi(a2+a3)"});
    ClassReport r = c.report(c.phi().to_coords(Q({Rat(1, 4), 0, 0, 0, Rat(-1, 4)})));
    CHECK(r.sigma_t_type.to_string() == "A1xA1");
}

TEST_CASE("type A and D spot checks")
{
    CHECK(make("SL4", "flip").enumerate_isolated().size() == 3);
    CHECK(make("SL4", "flip", 2).enumerate_quasi_isolated().size() == 1);
    auto so8 = make("SO8", "flip").enumerate_quasi_isolated();
    CHECK(types(so8) == std::multiset<std::string>{"B3 Z/2", "B3 Z/2", "C2xA1 Z/2xZ/2", "C2xA1 Z/2xZ/2"});
    for (const auto& r : so8) CHECK(r.ts_tso.to_string() == "Z/2");
    auto pso8 = make("PSO8", "flip").enumerate_quasi_isolated();
    REQUIRE(pso8.size() == 4);
    std::size_t non_isolated = 0;
    for (const auto& r : pso8)
        if (!r.isolated) {
            ++non_isolated;
            CHECK(r.A_t.size() == 2);
        }
    CHECK(non_isolated == 2);
}

TEST_CASE("reports are canonical and sorted")
{
    Classifier c = make("G2", "identity");
    auto rs = c.enumerate_quasi_isolated();
    CHECK(std::is_sorted(rs.begin(), rs.end(), report_less));
    for (const auto& r : rs) {
        ClassReport again = c.report(r.lambda);
        CHECK(again.lambda == r.lambda);
        CHECK(again.affine == r.affine);
    }
    // shifting by a coroot does not change the class
    ClassReport a = c.report(Q({Rat(1, 2), 1}));
    ClassReport b = c.report(Q({Rat(3, 2), 1}));
    CHECK(a.lambda == b.lambda);
}
