#include "qss/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qss {

Classifier::Classifier(const Twist& tw)
    : tw_(tw), ps_(phi_system(tw)), ad_(alcove_data(tw_, ps_)), tl_(twisted_lattices(tw_)), sigma_(sigma_system(tw_)),
      ts_(component_group_Ts(tw_))
{
    std::size_t l = ad_.ell;
    for (std::size_t s = 0; s < l; ++s) {
        RatVec f(l), e(l);
        for (std::size_t j = 0; j < l; ++j) f[j] = ps_.cartan(j, s);
        e[s] = 1;
        node_root_.push_back(f);
        node_coroot_.push_back(e);
    }
    for (const auto& c : ad_.comps) {
        RatVec f(l), h(l);
        for (std::size_t j = 0; j < l; ++j) {
            for (auto t : c.nodes) f[j] -= Rat(Int(ad_.marks[t] * ps_.cartan(j, t)));
            h[j] = -Rat(ad_.R.coroots()[c.highest][j]);
        }
        node_root_.push_back(f);
        node_coroot_.push_back(h);
    }
}

std::vector<std::size_t> Classifier::walls(const RatVec& affine) const
{
    std::vector<std::size_t> s;
    for (std::size_t t = 0; t < affine.size(); ++t)
        if (affine[t] == 0) s.push_back(t);
    return s;
}

CartanType Classifier::wall_type(const std::vector<std::size_t>& nodes) const
{
    IntMatrix k(nodes.size(), nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b)
            k(a, b) = to_int(RatVec{dot(node_coroot_[nodes[a]], node_root_[nodes[b]])})[0];
    return classify_cartan(k);
}

std::vector<std::size_t> Classifier::stabilizer(const RatVec& c) const
{
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < ad_.A.size(); ++a) {
        bool fixes = true;
        for (std::size_t t = 0; t < c.size() && fixes; ++t) fixes = c[ad_.A[a][t]] == c[t];
        if (fixes) out.push_back(a);
    }
    return out;
}

bool Classifier::transitive_on_missing(const RatVec& c, const std::vector<std::size_t>& group) const
{
    for (const auto& comp : ad_.comps) {
        std::vector<std::size_t> local = comp.nodes;
        local.push_back(comp.affine_node);
        std::set<std::size_t> missing, orbit;
        for (auto t : local)
            if (c[t] != 0) missing.insert(t);
        if (missing.empty()) continue;
        for (auto a : group) orbit.insert(ad_.A[a][*missing.begin()]);
        if (orbit != missing) return false;
    }
    return true;
}

std::vector<std::string> Classifier::sigma_t_labels(const RatVec& lambda) const
{
    SigmaSystem s = sigma_t_system(tw_, ps_.to_ambient(lambda));
    std::vector<std::string> out;
    for (auto o : s.orbits) out.push_back(tw_.orbit_label(o));
    return out;
}

ClassReport Classifier::report(const RatVec& lambda) const
{
    ClassReport r;
    r.lambda = reduce_to_alcove(ad_, lambda);
    r.affine = ad_.affine_coordinates(r.lambda);
    r.lambda_ambient = ps_.to_ambient(r.lambda);
    if (r.lambda_ambient.empty()) r.lambda_ambient = RatVec(tw_.datum().rank());
    r.denominator = ad_.denominator(r.lambda);
    r.S_t = walls(r.affine);
    r.phi_t_type = wall_type(r.S_t).normalized();
    r.w0_order = r.phi_t_type.weyl_order();

    std::size_t integral = 0;
    for (std::size_t i = 0; i < ad_.R.num_positive(); ++i)
        if (dot(to_rat(ad_.R.roots()[i]), r.lambda).get_den() == 1) ++integral;
    if (integral != static_cast<std::size_t>(r.phi_t_type.positive_roots()))
        throw Error(ErrorCode::Inconsistent, "walls through lambda do not generate Phi_{t sigma}");

    r.A_t = stabilizer(r.affine);
    r.isolated = r.S_t.size() == ad_.ell;
    r.quasi_isolated = transitive_on_missing(r.affine, r.A_t);
    r.quasi_central = r.w0_order == weyl_sigma_order();
    r.w_order = r.w0_order * static_cast<long>(r.A_t.size());

    SigmaSystem st = sigma_t_system(tw_, r.lambda_ambient);
    r.sigma_t_type = st.type.normalized();
    for (auto o : st.orbits) r.sigma_t_positive.push_back(tw_.orbit_label(o));
    if (r.sigma_t_type.weyl_order() != r.w0_order)
        throw Error(ErrorCode::Inconsistent, "Sigma_{t sigma} and Phi_{t sigma} have different Weyl groups");
    if (r.isolated != (r.sigma_t_type.rank() == sigma_.type.rank()))
        throw Error(ErrorCode::Inconsistent, "isolated flag disagrees with the rank of Sigma_{t sigma}");
    if (r.isolated && !r.quasi_isolated) throw Error(ErrorCode::Inconsistent, "isolated point not quasi-isolated");
    r.pi1 = sigma_fundamental_group(tw_, st);
    r.az_exponent = sigma_az_exponent(tw_, tl_, st);
    r.ts_tso = ts_;
    return r;
}

bool report_less(const ClassReport& a, const ClassReport& b)
{
    if (a.denominator != b.denominator) return a.denominator < b.denominator;
    return a.affine < b.affine;
}

std::vector<ClassReport> Classifier::finish(const std::vector<RatVec>& points) const
{
    std::vector<ClassReport> out;
    for (const auto& x : points) out.push_back(report(x));
    std::sort(out.begin(), out.end(), report_less);
    return out;
}

namespace {

void product(const std::vector<std::vector<RatVec>>& per_comp, const std::function<void(const std::vector<RatVec>&)>& f)
{
    std::vector<RatVec> pick(per_comp.size());
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == per_comp.size()) {
            f(pick);
            return;
        }
        for (const auto& c : per_comp[i]) {
            pick[i] = c;
            go(i + 1);
        }
    };
    go(0);
}

} // namespace

std::vector<ClassReport> Classifier::enumerate_isolated() const
{
    std::size_t n = ad_.nodes();
    std::vector<std::vector<RatVec>> per_comp;
    for (const auto& comp : ad_.comps) {
        std::vector<RatVec> opts;
        std::vector<std::size_t> local = comp.nodes;
        local.push_back(comp.affine_node);
        for (auto t : local) {
            if (!ad_.admissible[t]) continue;
            RatVec c(n);
            c[t] = 1;
            opts.push_back(c);
        }
        per_comp.push_back(opts);
    }
    std::set<RatVec> pts;
    product(per_comp, [&](const std::vector<RatVec>& pick) {
        RatVec c(n);
        for (const auto& v : pick)
            for (std::size_t t = 0; t < n; ++t) c[t] += v[t];
        RatVec x = ad_.from_affine(c);
        if (ad_.p_admissible(x)) pts.insert(reduce_to_alcove(ad_, x));
    });
    return finish(std::vector<RatVec>(pts.begin(), pts.end()));
}

std::vector<ClassReport> Classifier::enumerate_quasi_isolated() const
{
    std::size_t n = ad_.nodes();
    std::vector<std::vector<RatVec>> per_comp;
    for (const auto& comp : ad_.comps) {
        std::vector<std::size_t> local;
        for (auto t : comp.nodes)
            if (ad_.admissible[t]) local.push_back(t);
        local.push_back(comp.affine_node);
        std::vector<RatVec> opts;
        for (unsigned long mask = 1; mask < (1ul << local.size()); ++mask) {
            std::vector<std::size_t> omega;
            for (std::size_t k = 0; k < local.size(); ++k)
                if (mask >> k & 1) omega.push_back(local[k]);
            bool equal_marks = std::all_of(omega.begin(), omega.end(), [&](std::size_t t) { return ad_.marks[t] == ad_.marks[omega[0]]; });
            if (!equal_marks) continue;
            RatVec c(n);
            for (auto t : omega) c[t] = Rat(1, static_cast<long>(omega.size()));
            opts.push_back(c);
        }
        per_comp.push_back(opts);
    }
    std::set<RatVec> pts;
    product(per_comp, [&](const std::vector<RatVec>& pick) {
        RatVec c(n);
        for (const auto& v : pick)
            for (std::size_t t = 0; t < n; ++t) c[t] += v[t];
        if (!transitive_on_missing(c, stabilizer(c))) return;
        RatVec x = ad_.from_affine(c);
        if (ad_.p_admissible(x)) pts.insert(reduce_to_alcove(ad_, x));
    });
    std::vector<ClassReport> out = finish(std::vector<RatVec>(pts.begin(), pts.end()));
    for (const auto& r : out)
        if (!r.quasi_isolated) throw Error(ErrorCode::Inconsistent, "enumerated point is not quasi-isolated");
    return out;
}

} // namespace qss
