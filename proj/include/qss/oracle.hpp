#pragma once

#include <string>
#include <vector>

#include "qss/classify.hpp"

namespace qss {

struct OracleConfig {
    long N = 0;                     // 0: lcm(marks) * |A_R(sigma)| * 2
    std::size_t weyl_cap = 100000;
    bool corrupt_marks = false;     // fault injection for self-tests
};

struct BruteClass {
    RatVec lambda;      // Y_sigma coordinates
    RatVec ambient;     // Y (x) Q
    bool isolated = false;
    bool quasi_isolated = false;
    Int w_order, w0_order;
};

// Brute force over W^sigma and a grid of alcove points. Shares only the twist
// (orbits, pi, lattices) with the classify module.
class Oracle {
public:
    Oracle(const Twist& tw, std::size_t weyl_cap, bool corrupt_marks = false);

    std::size_t rank() const { return l_; }
    const std::vector<IntMatrix>& weyl() const { return W_; }   // W^sigma on Y_sigma coordinates
    const std::vector<IntMatrix>& generators() const { return gens_; }   // one per simple orbit
    const std::vector<Int>& marks() const { return marks_; }
    Int a_r_order() const { return a_r_; }
    Int coweight_index() const { return pq_; }   // |P(Phi_sigma^vee) / Y_sigma|
    long minimal_bound() const;                  // lcm(marks) * |A_R(sigma)|

    RatVec coordinates(const RatVec& ambient) const;
    RatVec ambient(const RatVec& coords) const;

    // alcove points v/d with v in Y_sigma, d <= N, gcd(d, p) = 1
    std::vector<RatVec> sweep(long N) const;
    // W(t sigma): w lambda - lambda in Y_sigma; W0: ... in Q(Phi^vee)
    std::vector<std::size_t> stabilizer(const RatVec& lambda) const;
    std::vector<std::size_t> reflection_stabilizer(const RatVec& lambda) const;
    bool fixed_space_zero(const std::vector<std::size_t>& elements) const;
    // some w with w a - b in Y_sigma
    bool equivalent(const RatVec& a, const RatVec& b) const;

    BruteClass classify_point(const RatVec& lambda) const;
    std::vector<BruteClass> brute_classes(long N) const;

private:
    bool in_lattice(const IntVec& v, const Int& den, bool coroot_lattice) const;
    std::vector<std::size_t> reflection_part(const RatVec& lambda, const std::vector<std::size_t>& st) const;

    Twist tw_;
    std::size_t l_ = 0;
    std::vector<RatVec> basis_;           // Y_sigma basis, ambient
    RatLattice ylat_;
    std::vector<IntMatrix> W_, gens_;
    std::vector<long> Wl_;                // W_ entries, row-major
    std::vector<RatVec> forms_;           // simple roots of Phi_sigma as forms on coordinates
    std::vector<std::vector<std::size_t>> comps_;
    std::vector<Int> marks_;
    std::vector<RatVec> coweights_;       // coordinates
    Sublattice qcoroot_;                  // Q(Phi^vee) in coordinates
    std::vector<std::vector<long>> qchar_;   // characters of Z^l / Q(Phi^vee)
    std::vector<long> qmod_;
    Int a_r_ = 1, pq_ = 1;
};

// empty when brute force and enumerate_quasi_isolated agree
std::vector<std::string> cross_check(const Classifier& c, const OracleConfig& cfg);

} // namespace qss
