#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qss/lattice.hpp"

namespace qss {

// Cartan matrices follow C(i,j) = <alpha_i^vee, alpha_j> with Bourbaki node labels.
IntMatrix cartan_matrix(char letter, int rank);

struct CartanComponent {
    char letter = 'A';
    int rank = 0;
    // nodes[k] = input index playing the role of Bourbaki node k+1
    std::vector<int> nodes;
};

class CartanType {
public:
    CartanType() = default;
    explicit CartanType(std::vector<std::pair<char, int>> comps);
    static CartanType parse(const std::string& s);   // "B3xA1", "1" for the empty type

    const std::vector<std::pair<char, int>>& components() const { return comps_; }
    int rank() const;
    Int weyl_order() const;
    int positive_roots() const;
    std::string to_string() const;
    // isomorphism class of the root system: B2=C2, B1=C1=A1, D3=A3, D2=A1xA1
    CartanType normalized() const;
    // swaps B and C (the type of the dual root system)
    CartanType dual() const;

    bool operator==(const CartanType& o) const { return comps_ == o.comps_; }
    bool operator!=(const CartanType& o) const { return !(*this == o); }
    bool operator<(const CartanType& o) const { return comps_ < o.comps_; }

private:
    std::vector<std::pair<char, int>> comps_;   // canonical order: rank descending, then letter
};

IntMatrix cartan_matrix(const CartanType& t);
Int weyl_order(char letter, int rank);
int coxeter_number(char letter, int rank);

// Components with Bourbaki labelling, canonically ordered; NotCrystallographic when unrecognized.
std::vector<CartanComponent> classify_components(const IntMatrix& cartan);
CartanType classify_cartan(const IntMatrix& cartan);

// Root datum with X = Z^r, Y = Z^r and the dot product as pairing.
class RootDatum {
public:
    RootDatum() = default;
    // rows of simple_roots / simple_coroots are vectors in X / Y
    RootDatum(const IntMatrix& simple_roots, const IntMatrix& simple_coroots, std::string label = "");

    std::size_t rank() const { return r_; }
    std::size_t semisimple_rank() const { return l_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    // roots[0..l) are simple; the positive roots precede their negatives
    const std::vector<IntVec>& roots() const { return roots_; }
    const std::vector<IntVec>& coroots() const { return coroots_; }
    // coefficients of roots[i] in the simple roots
    const std::vector<IntVec>& root_coefficients() const { return coeffs_; }
    std::size_t num_positive() const { return npos_; }
    bool is_positive(std::size_t i) const { return i < npos_; }
    std::size_t negative_of(std::size_t i) const { return i < npos_ ? i + npos_ : i - npos_; }
    // -1 when v is not a root
    int root_index(const IntVec& v) const;

    const IntMatrix& simple_roots() const { return sroots_; }
    const IntMatrix& simple_coroots() const { return scoroots_; }
    const IntMatrix& cartan() const { return cartan_; }
    CartanType cartan_type() const;
    const std::vector<CartanComponent>& components() const { return comps_; }
    bool semisimple() const { return l_ == r_; }

    // reflection matrices, acting on column vectors
    IntMatrix reflection_on_X(std::size_t simple) const;
    IntMatrix reflection_on_Y(std::size_t simple) const;

    // twists registered by a preset, e.g. the outer automorphism of GL_n
    std::map<std::string, IntMatrix> preset_twists;

private:
    std::size_t r_ = 0, l_ = 0, npos_ = 0;
    std::string label_;
    IntMatrix sroots_, scoroots_, cartan_;
    std::vector<CartanComponent> comps_;
    std::vector<IntVec> roots_, coroots_, coeffs_;
    std::map<IntVec, int> index_;
};

struct IsogenySpec {
    enum Kind { SimplyConnected, Adjoint, Intermediate };
    Kind kind = SimplyConnected;
    // generators of X modulo Q, in fundamental-weight coordinates
    std::vector<RatVec> generators;
};

RootDatum build_datum(const CartanType& type, const IsogenySpec& iso);
// GL5, SL4, PGL3, SL6/2, Spin8, SO8, PSO8, A3sc, E6ad, F4, 2E6sc, 3D4sc ...
// `rank` supplies n for bare family names ("GL", "SO", ...), else 0.
RootDatum preset_datum(const std::string& name, int rank = 0);
// twist implied by the preset name ("flip" for 2E6sc, "triality" for 3D4sc), else empty
std::string preset_default_twist(const std::string& name);

// highest root index per irreducible component, components in classify order
std::vector<std::size_t> highest_roots(const RootDatum& d);
// fundamental weights in Q Sigma (X coords) and coweights in Q Sigma^vee (Y coords)
std::vector<RatVec> fundamental_weights(const RootDatum& d);
std::vector<RatVec> fundamental_coweights(const RootDatum& d);
// (Y cap Q Sigma^vee) / Z Sigma^vee
FiniteAbelianGroup fundamental_group(const RootDatum& d);

struct WeylGroup {
    std::vector<IntMatrix> generators;
    std::vector<IntMatrix> elements;   // breadth-first from the identity
};
// Weyl group acting on Y; CapExceeded once more than `cap` elements appear
WeylGroup weyl_group(const RootDatum& d, std::size_t cap);

std::string serialize(const RootDatum& d);

} // namespace qss
