#pragma once

#include <string>
#include <vector>

#include "qss/affine.hpp"

namespace qss {

struct ClassReport {
    RatVec lambda;            // canonical alcove point, coroot coordinates of Phi_sigma
    RatVec lambda_ambient;    // the same point in Y (x) Q
    RatVec affine;            // affine coordinates, finite nodes then affine nodes
    Int denominator;          // order modulo Y_sigma
    std::vector<std::size_t> S_t;   // nodes whose coordinate vanishes
    CartanType phi_t_type;
    CartanType sigma_t_type;
    std::vector<std::string> sigma_t_positive;   // at the canonical point
    std::vector<std::size_t> A_t;                // indices into AlcoveData::A
    Int w0_order, w_order;
    bool isolated = false, quasi_isolated = false, quasi_central = false;
    FiniteAbelianGroup pi1;
    Int az_exponent;
    FiniteAbelianGroup ts_tso;
};

class Classifier {
public:
    explicit Classifier(const Twist& tw);

    const Twist& twist() const { return tw_; }
    const PhiSystem& phi() const { return ps_; }
    const AlcoveData& alcove() const { return ad_; }
    const TwistedLattices& lattices() const { return tl_; }
    const SigmaSystem& sigma() const { return sigma_; }
    Int weyl_sigma_order() const { return ps_.type.weyl_order(); }

    // lambda in coroot coordinates; reduced to the alcove first
    ClassReport report(const RatVec& lambda) const;
    // Sigma_{t sigma}^+ labels at lambda itself, no reduction
    std::vector<std::string> sigma_t_labels(const RatVec& lambda) const;

    // walls through an alcove point and the type they generate
    std::vector<std::size_t> walls(const RatVec& affine) const;
    CartanType wall_type(const std::vector<std::size_t>& nodes) const;
    // A_{R(sigma)} elements fixing the affine coordinates
    std::vector<std::size_t> stabilizer(const RatVec& affine) const;
    bool transitive_on_missing(const RatVec& affine, const std::vector<std::size_t>& group) const;

    std::vector<ClassReport> enumerate_isolated() const;
    std::vector<ClassReport> enumerate_quasi_isolated() const;

private:
    std::vector<ClassReport> finish(const std::vector<RatVec>& points) const;

    Twist tw_;
    PhiSystem ps_;
    AlcoveData ad_;
    TwistedLattices tl_;
    SigmaSystem sigma_;
    FiniteAbelianGroup ts_;
    // extended diagram: linear forms (coroot coordinates) and coroots per node
    std::vector<RatVec> node_root_, node_coroot_;
};

// ordering of enumerated classes: denominator, then affine coordinates
bool report_less(const ClassReport& a, const ClassReport& b);

} // namespace qss
