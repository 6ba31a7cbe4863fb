#pragma once

#include <string>
#include <vector>

#include "qss/rootdata.hpp"

namespace qss {

struct Orbit {
    std::vector<std::size_t> roots;   // root indices in the order phi visits them
    bool positive = true;
    bool special = false;    // contains a, b with a+b a root
    bool cospecial = false;  // orbit of such a sum
    int c_value = 1;
};

class Twist {
public:
    Twist() = default;
    // validates phi; see attach_twist
    Twist(const RootDatum& d, const IntMatrix& phi, long p);

    const RootDatum& datum() const { return d_; }
    const IntMatrix& phi() const { return phi_; }
    // inverse transpose of phi, acting on Y
    const IntMatrix& phi_dual() const { return phid_; }
    long p() const { return p_; }
    int order() const { return n_; }

    const std::vector<std::size_t>& root_perm() const { return perm_; }
    const std::vector<Orbit>& orbits() const { return orbits_; }
    std::size_t orbit_of(std::size_t root) const { return orbit_of_[root]; }
    // orbits meeting the simple roots, by smallest simple index
    const std::vector<std::size_t>& simple_orbits() const { return simple_orbits_; }
    // simple-root permutation induced by phi
    std::vector<std::size_t> simple_perm() const;
    bool has_special() const;

    RatVec pi_X(const RatVec& x) const;
    RatVec pi_Y(const RatVec& y) const;
    IntVec orbit_sum(std::size_t o) const;          // sum of the roots of o, in X
    IntVec orbit_coroot_sum(std::size_t o) const;   // sum of their coroots, in Y
    // "pi(a1+a2)" with the lexicographically largest coefficient vector of the orbit
    std::string orbit_label(std::size_t o) const;

private:
    RootDatum d_;
    IntMatrix phi_, phid_;
    long p_ = 0;
    int n_ = 1;
    std::vector<std::size_t> perm_, orbit_of_, simple_orbits_;
    std::vector<Orbit> orbits_;
};

// Errors: NotStable, NotIntegral, InfiniteOrder, BadCharacteristic.
Twist attach_twist(const RootDatum& d, const IntMatrix& phi, long p);

// "identity", a preset twist ("flip" of GL_n / SO_2n), or a diagram automorphism
// ("flip", "triality") extended by the identity on the radical.
IntMatrix named_twist(const RootDatum& d, const std::string& name);

std::string root_label(const IntVec& coeffs);   // "a1+2a2"

struct TwistedLattices {
    RatLattice X_sigma;   // pi(X)
    RatLattice Y_sigma;   // pi(Y)
    Sublattice X_fix;     // X^sigma
    Sublattice Y_fix;     // Y^sigma
};

// Inconsistent if either duality fails.
TwistedLattices twisted_lattices(const Twist& tw);

// Sigma_sigma or Sigma_{t sigma}: positive roots only.
struct SigmaSystem {
    std::vector<std::size_t> orbits;   // one positive orbit per root
    std::vector<RatVec> roots;         // pi(alpha) in X (x) Q
    std::vector<IntVec> coroots;       // orbit coroot sum, doubled for special orbits
    std::vector<std::size_t> simple;   // indices into roots
    IntMatrix cartan;                  // on the simple roots
    CartanType type;
};

SigmaSystem sigma_system(const Twist& tw);
// lambda: sigma-invariant vector of Y (x) Q
SigmaSystem sigma_t_system(const Twist& tw, const RatVec& lambda);

// (Y^sigma cap Q Sigma^vee) / Z Sigma^vee
FiniteAbelianGroup sigma_fundamental_group(const Twist& tw, const SigmaSystem& s);
// p'-exponent of the torsion of X_sigma / Z Sigma
Int sigma_az_exponent(const Twist& tw, const TwistedLattices& tl, const SigmaSystem& s);

// p'-part of Ker(1+phi+...+phi^{n-1} | X) / (phi-1)X
FiniteAbelianGroup component_group_Ts(const Twist& tw);
bool is_semisimple_fixed(const Twist& tw);

} // namespace qss
