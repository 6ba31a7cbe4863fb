#include <doctest.h>

#include "qss/twist.hpp"

using namespace qss;

namespace {
Twist make(const std::string& preset, const std::string& twist, long p = 0, int rank = 0)
{
    RootDatum d = preset_datum(preset, rank);
    return attach_twist(d, named_twist(d, twist), p);
}
RatVec Q(std::vector<Rat> v) { return v; }
std::vector<std::string> labels(const Twist& tw, const SigmaSystem& s)
{
    std::vector<std::string> out;
    for (auto o : s.orbits) out.push_back(tw.orbit_label(o));
    return out;
}
} // namespace

TEST_CASE("A2 flip has one special orbit of simple roots")
{
    Twist tw = make("A2sc", "flip");
    CHECK(tw.order() == 2);
    const Orbit& o = tw.orbits()[tw.orbit_of(0)];
    CHECK(o.roots.size() == 2);
    CHECK(o.special);
    CHECK(o.c_value == -1);
    CHECK(tw.orbits()[tw.orbit_of(2)].cospecial);   // a1+a2
    Twist tw2 = make("A2sc", "flip", 2);
    CHECK(tw2.orbits()[tw2.orbit_of(0)].c_value == 1);
}

TEST_CASE("A3 flip orbits")
{
    Twist tw = make("A3sc", "flip");
    CHECK(tw.simple_orbits().size() == 2);
    CHECK(tw.orbit_of(0) == tw.orbit_of(2));
    CHECK(tw.orbit_of(0) != tw.orbit_of(1));
    CHECK(!tw.has_special());
}

TEST_CASE("twist validation")
{
    RootDatum so8 = preset_datum("SO8");
    CHECK_THROWS_AS(named_twist(so8, "triality"), Error);
    try {
        named_twist(so8, "triality");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotIntegral);
    }
    RootDatum a2 = preset_datum("A2sc");
    IntMatrix bad = IntMatrix::identity(2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(attach_twist(a2, bad, 0), Error);
    CHECK_THROWS_AS(attach_twist(a2, IntMatrix::identity(2), 4), Error);
    CHECK_THROWS_AS(named_twist(preset_datum("B3sc"), "flip"), Error);
    // -1 maps roots to roots but not simple roots to simple roots
    IntMatrix neg = IntMatrix::identity(2);
    neg(0, 0) = neg(1, 1) = -1;
    try {
        attach_twist(a2, neg, 0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotStable);
    }
}

TEST_CASE("twisted lattices")
{
    Twist tw = make("A3sc", "flip");
    auto tl = twisted_lattices(tw);
    RatVec pa1 = tw.pi_X(to_rat(tw.datum().roots()[0]));
    CHECK(tl.X_sigma.contains(pa1));
    CHECK(tw.pi_X(pa1) == pa1);

    Twist id = make("GL3", "identity");
    auto tid = twisted_lattices(id);
    CHECK(tid.X_sigma == RatLattice(3, {Q({1, 0, 0}), Q({0, 1, 0}), Q({0, 0, 1})}));

    Twist gl2 = make("GL2", "flip");
    auto t2 = twisted_lattices(gl2);
    CHECK(t2.Y_sigma == RatLattice(2, {Q({Rat(1, 2), Rat(-1, 2)})}));
}

TEST_CASE("Sigma_sigma types")
{
    CHECK(sigma_system(make("GL5", "flip")).type.normalized().to_string() == "C2");
    CHECK(sigma_system(make("3D4sc", "triality")).type.to_string() == "G2");
    CHECK(sigma_system(make("2E6sc", "flip")).type.to_string() == "F4");
    CHECK(sigma_system(make("A2sc", "flip", 2)).type.normalized().to_string() == "A1");
    CHECK(sigma_system(make("SO8", "flip")).type.normalized().to_string() == "B3");
    CHECK(sigma_system(make("A3sc", "flip")).type.normalized().to_string() == "C2");
}

TEST_CASE("GL5 remark: Sigma_{t sigma} at t = diag(i,1,1,1,-i)")
{
    Twist tw = make("GL5", "flip");
    RatVec lam = Q({Rat(1, 4), 0, 0, 0, Rat(-1, 4)});
    auto s = sigma_t_system(tw, lam);
    CHECK(s.type.to_string() == "A1xA1");
    auto l = labels(tw, s);
    std::sort(l.begin(), l.end());
    CHECK(l == std::vector<std::string>{"pi(a1+a2)", "pi(a2+a3)"});
    CHECK(sigma_t_system(tw, RatVec(5)).type == sigma_system(tw).type);
    CHECK_THROWS_AS(sigma_t_system(tw, Q({Rat(1, 4), 0, 0, 0, 0})), Error);
}

TEST_CASE("D4 triality alcove vertices give G2, A1xA1, A2")
{
    Twist tw = make("3D4sc", "triality");
    RootDatum d = tw.datum();
    // alpha^vee = (a1v+a3v+a4v)/3, beta^vee = a2v
    RatVec av(4), bv = to_rat(d.simple_coroots().row(1));
    for (int i : {0, 2, 3})
        for (int k = 0; k < 4; ++k) av[k] += Rat(d.simple_coroots()(i, k)) / 3;
    auto at = [&](Rat a, Rat b) {
        RatVec v(4);
        for (int k = 0; k < 4; ++k) v[k] = a * av[k] + b * bv[k];
        return sigma_t_system(tw, v).type.to_string();
    };
    CHECK(at(0, 0) == "G2");
    CHECK(at(1, Rat(1, 2)) == "A1xA1");
    CHECK(at(1, Rat(2, 3)) == "A2");
}

TEST_CASE("component group Ts/Tso")
{
    CHECK(component_group_Ts(make("A3sc", "flip")).trivial());
    CHECK(component_group_Ts(make("E6ad", "flip")).trivial());
    for (int r : {2, 3, 4, 5}) CHECK(component_group_Ts(make("SO", "flip", 0, r)).to_string() == "Z/2");
    CHECK(component_group_Ts(make("SO8", "flip", 2)).trivial());
    CHECK(component_group_Ts(make("SL6/2", "flip")).trivial());   // d does not divide r
    CHECK(component_group_Ts(make("SL8/2", "flip")).to_string() == "Z/2");
    CHECK(component_group_Ts(make("SL8/4", "flip")).to_string() == "Z/2");
    for (auto pr : {"SO8", "SL6/2", "3D4sc", "2E6sc", "GL4"}) {
        RootDatum d = preset_datum(pr);
        Twist tw = attach_twist(d, named_twist(d, preset_default_twist(pr).empty() ? "flip" : preset_default_twist(pr)), 0);
        FiniteAbelianGroup g = component_group_Ts(tw);
        for (const auto& f : g.invariants()) {
            Int rem = Int(tw.order()) % f;
            CHECK(rem == 0);
        }
    }
}

TEST_CASE("semisimplicity of the fixed points")
{
    CHECK(is_semisimple_fixed(make("GL4", "flip")));
    CHECK(!is_semisimple_fixed(make("GL4", "identity")));
    CHECK(is_semisimple_fixed(make("E6sc", "flip")));
}

TEST_CASE("Sigma fundamental groups per isogeny")
{
    // A_{2r} sc with flip: Sigma_sigma of type C_r ... sc-ness read off as trivial pi_1
    Twist a4 = make("A4sc", "flip");
    CHECK(sigma_fundamental_group(a4, sigma_system(a4)).trivial());
    Twist e6 = make("E6ad", "flip");
    CHECK(sigma_fundamental_group(e6, sigma_system(e6)).trivial());
    Twist so = make("SO10", "flip");
    CHECK(sigma_fundamental_group(so, sigma_system(so)).to_string() == "Z/2");
}
