#include <doctest.h>

#include <functional>
#include <set>

#include "qss/oracle.hpp"

using namespace qss;

namespace {
Twist make(const std::string& preset, const std::string& twist = "", long p = 0)
{
    RootDatum d = preset_datum(preset);
    std::string t = twist.empty() ? preset_default_twist(preset) : twist;
    if (t.empty()) t = "identity";
    return attach_twist(d, named_twist(d, t), p);
}
RatVec Q(std::initializer_list<Rat> v) { return RatVec(v); }

std::set<IntMatrix> closure(const std::vector<IntMatrix>& gens, std::size_t n)
{
    std::set<IntMatrix> seen{IntMatrix::identity(n)};
    std::vector<IntMatrix> todo{IntMatrix::identity(n)};
    while (!todo.empty()) {
        IntMatrix w = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            IntMatrix h = g * w;
            if (seen.insert(h).second) todo.push_back(h);
        }
    }
    return seen;
}

// inverse of an element of finite order
IntMatrix inverse_of(const IntMatrix& w)
{
    IntMatrix p = w, prev = IntMatrix::identity(w.rows());
    while (!(p == IntMatrix::identity(w.rows()))) {
        prev = p;
        p = p * w;
    }
    return prev;
}

// literal test: some conjugate of a proper standard parabolic contains `sub`
bool in_proper_parabolic(const Oracle& o, const std::vector<std::size_t>& sub)
{
    std::size_t l = o.rank();
    const auto& gens = o.generators();
    for (unsigned mask = 0; mask + 1 < (1u << gens.size()); ++mask) {
        std::vector<IntMatrix> g;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask >> i & 1) g.push_back(gens[i]);
        std::set<IntMatrix> P = closure(g, l);
        for (const auto& w : o.weyl()) {
            IntMatrix wi = inverse_of(w);
            bool all = true;
            for (auto k : sub)
                if (!P.count(wi * o.weyl()[k] * w)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    }
    return false;
}
} // namespace

TEST_CASE("3D4 brute force, N = 6")
{
    Oracle o(make("3D4sc"), 100000);
    CHECK(o.weyl().size() == 12);
    CHECK(o.minimal_bound() == 6);
    auto cls = o.brute_classes(6);
    REQUIRE(cls.size() == 3);
    std::set<RatVec> amb;
    for (const auto& c : cls) amb.insert(c.ambient);
    Classifier cl(make("3D4sc"));
    std::set<RatVec> expect;
    for (const auto& x : {Q({0, 0, 0, 0}), Q({0, Rat(1, 2), 0, 0}), Q({0, Rat(2, 3), 0, 0})}) {
        RatVec y = o.coordinates(x);
        for (const auto& c : cls)
            if (o.equivalent(c.lambda, y)) expect.insert(c.ambient);
    }
    CHECK(expect == amb);
}

TEST_CASE("SL4 flip isolated classes")
{
    Oracle o(make("SL4", "flip"), 100000);
    std::size_t iso = 0;
    for (const auto& c : o.brute_classes(2 * o.minimal_bound())) iso += c.isolated;
    CHECK(iso == 3);
}

TEST_CASE("PGL2 trivial twist")
{
    Oracle o(make("PGL2"), 100000);
    auto cls = o.brute_classes(o.minimal_bound());
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].lambda == Q({0}));
    CHECK(cls[1].lambda == Q({Rat(1, 2)}));
    CHECK(cls[1].w_order == 2);
    CHECK(cls[1].w0_order == 1);
    CHECK_FALSE(cls[1].isolated);
    CHECK(cls[1].quasi_isolated);
}

TEST_CASE("cross-check agrees on 2E6 and detects corrupted marks")
{
    Classifier c(make("2E6sc"));
    CHECK(cross_check(c, {}).empty());
    OracleConfig bad;
    bad.corrupt_marks = true;
    CHECK_FALSE(cross_check(c, bad).empty());
    CHECK_FALSE(cross_check(Classifier(make("3D4sc")), bad).empty());
}

TEST_CASE("oracle configuration errors")
{
    Oracle o(make("G2"), 100000);
    CHECK_THROWS_AS(o.brute_classes(o.minimal_bound() - 1), Error);
    CHECK_THROWS_AS(Oracle(make("F4"), 100), Error);
    CHECK_THROWS_AS(Oracle(make("GL3"), 100000), Error);
}

TEST_CASE("fixed-space criterion matches parabolic containment in rank 2")
{
    for (const char* name : {"SL3", "PGL3", "B2sc", "B2ad", "G2", "SO4"}) {
        CAPTURE(name);
        Oracle o(make(name), 100000);
        for (const auto& x : o.sweep(12)) {
            auto st = o.stabilizer(x);
            auto st0 = o.reflection_stabilizer(x);
            CHECK(o.fixed_space_zero(st) == !in_proper_parabolic(o, st));
            CHECK(o.fixed_space_zero(st0) == !in_proper_parabolic(o, st0));
        }
    }
}

TEST_CASE("class count is monotone in N and stable past the bound")
{
    for (const char* name : {"SL3", "PGL3", "SL4", "B2sc", "G2", "SO8", "2E6sc", "3D4sc"}) {
        CAPTURE(name);
        Twist tw = make(name, std::string(name) == "SL4" || std::string(name) == "SO8" ? "flip" : "");
        Oracle o(tw, 100000);
        long n0 = o.minimal_bound();
        long stable = n0 * o.coweight_index().get_si();
        std::size_t prev = 0, at_stable = o.brute_classes(stable).size();
        for (long N = n0; N <= 2 * stable; ++N) {
            std::size_t k = o.brute_classes(N).size();
            CHECK(k >= prev);
            if (N >= stable) CHECK(k == at_stable);
            prev = k;
        }
    }
}

TEST_CASE("literal bound misses the SL3 vertices")
{
    Oracle o(make("SL3"), 100000);
    CHECK(o.minimal_bound() == 1);
    CHECK(o.coweight_index() == 3);
    CHECK(o.brute_classes(2).size() == 1);
    CHECK(o.brute_classes(3).size() == 3);
}
