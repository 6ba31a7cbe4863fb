#include <doctest.h>

#include "qss/lattice.hpp"

using namespace qss;

namespace {
IntMatrix M(std::vector<std::vector<int>> rows)
{
    std::vector<IntVec> r;
    for (auto& row : rows) {
        IntVec v;
        for (int x : row) v.push_back(x);
        r.push_back(v);
    }
    return IntMatrix::from_rows(r);
}
IntVec V(std::vector<int> xs)
{
    IntVec v;
    for (int x : xs) v.push_back(x);
    return v;
}
} // namespace

TEST_CASE("smith normal form")
{
    IntMatrix m = M({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.S);
    REQUIRE(s.factors.size() == 3);
    CHECK(s.factors[0] == 2);
    CHECK(s.factors[1] == 6);
    CHECK(s.factors[2] == 12);
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
}

TEST_CASE("snf of a rank-deficient matrix")
{
    IntMatrix m = M({{1, 2}, {2, 4}, {3, 6}});
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.S);
    CHECK(s.rank() == 1);
}

TEST_CASE("finite abelian group normalization")
{
    FiniteAbelianGroup g({Int(4), Int(6)});
    CHECK(g.to_string() == "Z/2xZ/12");
    CHECK(g.order() == 24);
    CHECK(g.exponent() == 12);
    CHECK(FiniteAbelianGroup({Int(1)}).trivial());
    CHECK(pprime_part(g, 2).to_string() == "Z/3");
    CHECK(pprime_part(g, 3).to_string() == "Z/2xZ/4");
    CHECK(pprime_part(Int(24), 2) == 3);
}

TEST_CASE("characteristic")
{
    CHECK_NOTHROW(check_characteristic(0));
    CHECK_NOTHROW(check_characteristic(7));
    CHECK_THROWS_AS(check_characteristic(4), Error);
    CHECK_THROWS_AS(check_characteristic(1), Error);
}

TEST_CASE("sublattices and quotients")
{
    Sublattice a(2, {V({2, 0}), V({0, 3})});
    Sublattice full = Sublattice::full(2);
    CHECK(quotient_group(a, full).to_string() == "Z/6");
    CHECK(full.contains(a));
    CHECK(!a.contains(full));
    CHECK(a.contains(V({4, -3})));
    CHECK(!a.contains(V({1, 0})));
    CHECK(saturation(a) == full);
    CHECK_THROWS_AS(quotient_group(full, a), Error);
    Sublattice line(2, {V({1, 0})});
    CHECK_THROWS_AS(quotient_group(line, full), Error);

    Sublattice b(2, {V({3, 0}), V({0, 1})});
    CHECK(intersection(a, b) == Sublattice(2, {V({6, 0}), V({0, 3})}));
    CHECK(sum(a, b) == full);
}

TEST_CASE("kernel and image")
{
    IntMatrix m = M({{1, 1, 1}});
    auto k = kernel_lattice(m);
    CHECK(k.rank() == 2);
    CHECK(saturation(k) == k);
    auto im = image_lattice(M({{2, 0}, {0, 2}}));
    CHECK(torsion_of_quotient(im).to_string() == "Z/2xZ/2");
    auto im2 = image_lattice(M({{2}, {0}}));
    CHECK(torsion_of_quotient(im2).to_string() == "Z/2");
}

TEST_CASE("rational lattices")
{
    RatVec h{Rat(1, 2), Rat(1, 2)};
    RatLattice l(2, {h, RatVec{Rat(1), Rat(-1)}});
    CHECK(l.denominator() == 2);
    CHECK(l.contains(RatVec{Rat(1), Rat(1)}));
    CHECK(!l.contains(RatVec{Rat(1), Rat(0)}));
    CHECK(!l.contains(RatVec{Rat(1, 2), Rat(0)}));
    CHECK(l.order_of(RatVec{Rat(1, 4), Rat(1, 4)}) == 2);
    auto c = l.coordinates(RatVec{Rat(3, 2), Rat(-1, 2)});
    CHECK(is_integral(c));
    CHECK_THROWS_AS(RatLattice(2, {h}).coordinates(RatVec{Rat(1), Rat(0)}), Error);
    auto m = membership(RatVec{Rat(2), Rat(3)}, Sublattice(2, {V({1, 0}), V({0, 3})}));
    REQUIRE(m);
}

TEST_CASE("rational linear algebra")
{
    RatMatrix a = to_rat(M({{2, -1}, {-1, 2}}));
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK((*inv)(0, 0) == Rat(2, 3));
    CHECK(rank(to_rat(M({{1, 2}, {2, 4}}))) == 1);
    CHECK(nullspace(to_rat(M({{1, 2}, {2, 4}}))).size() == 1);
    CHECK(!inverse(to_rat(M({{1, 2}, {2, 4}}))));
    CHECK(det(M({{2, -1}, {-1, 2}})) == 3);
    CHECK_THROWS_AS(to_int(RatVec{Rat(1, 2)}), Error);
}
