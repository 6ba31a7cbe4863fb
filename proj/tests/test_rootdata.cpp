#include <doctest.h>

#include "qss/rootdata.hpp"

using namespace qss;

TEST_CASE("Cartan classification")
{
    for (auto t : {"A1", "A5", "B3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2", "B3xA1", "A2xA2"}) {
        CartanType ct = CartanType::parse(t);
        CHECK(classify_cartan(cartan_matrix(ct)) == ct);
    }
    CHECK(CartanType::parse("B2").normalized().to_string() == "C2");
    CHECK(CartanType::parse("D3").normalized().to_string() == "A3");
    CHECK(CartanType::parse("B3").dual().to_string() == "C3");
    CHECK(CartanType::parse("A1xB3").to_string() == "B3xA1");
    CHECK(CartanType::parse("E8").weyl_order() == 696729600);
    CHECK(CartanType::parse("F4").positive_roots() == 24);
    CHECK_THROWS_AS(CartanType::parse("Q3"), Error);
}

TEST_CASE("rank-2 naming follows the first node")
{
    // first node long: C2
    IntMatrix c = cartan_matrix('B', 2);
    CHECK(classify_cartan(c).to_string() == "C2");
    CHECK(classify_cartan(c.transpose()).to_string() == "B2");
}

TEST_CASE("non-crystallographic input")
{
    IntMatrix c(2, 2);
    c(0, 0) = c(1, 1) = 2;
    c(0, 1) = -2;
    c(1, 0) = -2;
    CHECK_THROWS_AS(classify_cartan(c), Error);
    c(1, 0) = 0;
    CHECK_THROWS_AS(classify_cartan(c), Error);
}

TEST_CASE("root counts and highest roots")
{
    struct Case {
        const char* t;
        std::size_t npos;
        std::vector<int> marks;
    };
    for (const Case& k : std::vector<Case>{{"A3", 6, {1, 1, 1}},
                                           {"B3", 9, {1, 2, 2}},
                                           {"C3", 9, {2, 2, 1}},
                                           {"D4", 12, {1, 2, 1, 1}},
                                           {"E6", 36, {1, 2, 2, 3, 2, 1}},
                                           {"F4", 24, {2, 3, 4, 2}},
                                           {"G2", 6, {3, 2}}}) {
        RootDatum d = build_datum(CartanType::parse(k.t), IsogenySpec{});
        CHECK(d.num_positive() == k.npos);
        auto h = highest_roots(d);
        REQUIRE(h.size() == 1);
        IntVec marks;
        for (int m : k.marks) marks.push_back(m);
        CHECK(d.root_coefficients()[h[0]] == marks);
    }
}

TEST_CASE("isogenies and fundamental groups")
{
    CHECK(fundamental_group(preset_datum("SL4")).trivial());
    CHECK(fundamental_group(preset_datum("PGL4")).to_string() == "Z/4");
    CHECK(fundamental_group(preset_datum("SL6/2")).to_string() == "Z/2");
    CHECK(fundamental_group(preset_datum("SO8")).to_string() == "Z/2");
    CHECK(fundamental_group(preset_datum("PSO8")).to_string() == "Z/2xZ/2");
    CHECK(fundamental_group(preset_datum("E6ad")).to_string() == "Z/3");
    CHECK(preset_datum("GL", 5).rank() == 5);
    CHECK(preset_datum("GL5").semisimple_rank() == 4);
    CHECK(preset_datum("SO", 4).label() == "SO8");
    CHECK(preset_default_twist("3D4sc") == "triality");
    CHECK(preset_datum("3D4sc").cartan_type().to_string() == "D4");
    CHECK_THROWS_AS(preset_datum("SL6/4"), Error);
    CHECK_THROWS_AS(preset_datum("XY"), Error);
}

TEST_CASE("coroots pair to 2 with their roots")
{
    RootDatum d = preset_datum("SO10");
    for (std::size_t i = 0; i < d.roots().size(); ++i) CHECK(dot(d.roots()[i], d.coroots()[i]) == 2);
    RootDatum g = build_datum(CartanType::parse("G2"), IsogenySpec{});
    for (std::size_t i = 0; i < g.roots().size(); ++i) CHECK(dot(g.roots()[i], g.coroots()[i]) == 2);
}

TEST_CASE("Weyl groups")
{
    CHECK(weyl_group(preset_datum("GL4"), 100).elements.size() == 24);
    CHECK(weyl_group(build_datum(CartanType::parse("B3"), IsogenySpec{}), 100).elements.size() == 48);
    CHECK_THROWS_AS(weyl_group(preset_datum("E6sc"), 1000), Error);
}

TEST_CASE("fundamental weights and coweights are dual")
{
    RootDatum d = preset_datum("SL6/2");
    auto w = fundamental_weights(d);
    auto cw = fundamental_coweights(d);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            CHECK(dot(cw[i], to_rat(d.simple_roots().row(j))) == (i == j ? 1 : 0));
            CHECK(dot(w[j], to_rat(d.simple_coroots().row(i))) == (i == j ? 1 : 0));
        }
}
