#pragma once

#include <vector>

#include "qss/twist.hpp"

namespace qss {

// Phi_sigma, the parameter-side root system. Vectors of Q Phi_sigma^vee are
// handled in simple-coroot coordinates ("coroot coordinates").
struct PhiSystem {
    std::vector<std::size_t> orbits;   // positive orbits that are not cospecial
    std::vector<IntVec> roots;         // orbit sum, doubled for special orbits (X^sigma)
    std::vector<RatVec> coroots;       // pi(alpha^vee) (Y_sigma)
    std::vector<std::size_t> simple;   // indices of Delta_sigma, in simple-orbit order
    IntMatrix cartan;                  // <coroot_s, root_t> on Delta_sigma
    CartanType type;
    // sc datum of the Cartan matrix: coroots e_s, roots the columns of `cartan`
    RootDatum R;
    std::vector<RatVec> coweights;     // fundamental coweights, Y (x) Q

    std::size_t rank() const { return simple.size(); }
    RatVec to_ambient(const RatVec& coords) const;
    // NotInSpan outside Q Phi^vee
    RatVec to_coords(const RatVec& ambient) const;
    std::vector<std::string> simple_labels;   // orbit labels of Delta_sigma
};

PhiSystem phi_system(const Twist& tw);

struct AlcoveComponent {
    std::vector<std::size_t> nodes;   // finite nodes
    std::size_t affine_node = 0;
    std::size_t highest = 0;          // index into R.roots()
    std::vector<std::size_t> J;       // finite nodes with mark 1
};

struct AlcoveData {
    std::size_t ell = 0;                // finite nodes 0..ell-1, then one affine node per component
    std::vector<AlcoveComponent> comps;
    std::vector<std::size_t> component_of;   // per node
    std::vector<Int> marks;                  // per node, 1 on affine nodes
    std::vector<RatVec> vertices;            // per node, coroot coordinates
    std::vector<RatVec> coweights;           // per finite node, coroot coordinates
    IntMatrix cartan;
    RatLattice Y;                            // Y_sigma in coroot coordinates
    long p = 0;
    std::vector<bool> admissible;            // per node: p-prime vertex
    // finite nodes whose vertex is p-prime modulo Y_sigma but not modulo Z Phi^vee, or the reverse
    std::vector<std::size_t> admissibility_divergent;
    RootDatum R;

    // A_{R(sigma)}: node permutations (identity first) and the affine maps x -> Z x + shift
    std::vector<std::vector<std::size_t>> A;
    std::vector<IntMatrix> A_linear;
    std::vector<RatVec> A_shift;

    std::size_t nodes() const { return ell + comps.size(); }
    // alpha_t(x) for the finite nodes
    RatVec evaluate(const RatVec& x) const;
    RatVec affine_coordinates(const RatVec& x) const;
    RatVec from_affine(const RatVec& coords) const;
    bool in_closed_alcove(const RatVec& x) const;
    // least m with m x in Y_sigma
    Int denominator(const RatVec& x) const { return Y.order_of(x); }
    bool p_admissible(const RatVec& x) const;
};

// NotSemisimple unless Q Phi^vee = Y_sigma (x) Q.
AlcoveData alcove_data(const Twist& tw, const PhiSystem& ps);

// longest element of the parabolic subgroup on `nodes`, acting on coroot coordinates
IntMatrix longest_element(const RootDatum& R, const std::vector<std::size_t>& nodes);

FiniteAbelianGroup a_R_sigma_group(const AlcoveData& ad);   // (Y_sigma cap Q Phi^vee)/Q(Phi^vee) by SNF

// closed-alcove representative, then lexicographically least affine coordinates under A_{R(sigma)}
RatVec reduce_to_alcove(const AlcoveData& ad, const RatVec& x);
// orbit representatives of A_{R(sigma)} on products of {0} and the minuscule coweights, p-filtered
std::vector<RatVec> quasi_central_points(const AlcoveData& ad);

// P(Phi_sigma) = P^sigma
bool weight_lattice_matches(const Twist& tw, const PhiSystem& ps);
// every class of P^sigma/Q^sigma contains a sigma-stable minuscule weight (or 0)
bool minuscule_classes_cover(const Twist& tw);

} // namespace qss
