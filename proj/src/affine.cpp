#include "qss/affine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace qss {

namespace {

RatVec scaled(const RatVec& v, const Rat& k)
{
    RatVec out = v;
    for (auto& x : out) x *= k;
    return out;
}

void add_to(RatVec& a, const RatVec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

// every combination of one option per slot; option -1 means "none"
void for_each_choice(const std::vector<std::vector<int>>& options, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> pick(options.size());
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == options.size()) {
            f(pick);
            return;
        }
        for (int o : options[i]) {
            pick[i] = o;
            go(i + 1);
        }
    };
    go(0);
}

} // namespace

RatVec PhiSystem::to_ambient(const RatVec& c) const
{
    if (coroots.empty()) return {};
    RatVec out(coroots.front().size());
    for (std::size_t s = 0; s < simple.size(); ++s) add_to(out, scaled(coroots[simple[s]], c[s]));
    return out;
}

RatVec PhiSystem::to_coords(const RatVec& v) const
{
    if (simple.empty()) {
        for (const auto& x : v)
            if (x != 0) throw Error(ErrorCode::NotInSpan, "vector outside Q Phi^vee (empty system)");
        return {};
    }
    std::vector<RatVec> cols;
    for (auto s : simple) cols.push_back(coroots[s]);
    auto x = solve(RatMatrix::from_cols(cols), v);
    if (!x) throw Error(ErrorCode::NotInSpan, to_string(v) + " is outside Q Phi_sigma^vee");
    return *x;
}

PhiSystem phi_system(const Twist& tw)
{
    PhiSystem ps;
    const RootDatum& d = tw.datum();
    std::vector<std::size_t> pos_of(tw.orbits().size(), static_cast<std::size_t>(-1));
    for (std::size_t o = 0; o < tw.orbits().size(); ++o) {
        const Orbit& ob = tw.orbits()[o];
        if (!ob.positive || ob.cospecial) continue;
        IntVec root = tw.orbit_sum(o);
        if (ob.special)
            for (auto& x : root) x *= 2;
        pos_of[o] = ps.orbits.size();
        ps.orbits.push_back(o);
        ps.roots.push_back(root);
        ps.coroots.push_back(tw.pi_Y(to_rat(d.coroots()[ob.roots[0]])));
    }
    for (auto o : tw.simple_orbits()) {
        if (pos_of[o] == static_cast<std::size_t>(-1)) throw Error(ErrorCode::Inconsistent, "simple orbit is cospecial");
        ps.simple.push_back(pos_of[o]);
        ps.simple_labels.push_back(tw.orbit_label(o));
    }
    std::size_t l = ps.simple.size();
    ps.cartan = IntMatrix(l, l);
    for (std::size_t s = 0; s < l; ++s)
        for (std::size_t t = 0; t < l; ++t) {
            Rat v = dot(ps.coroots[ps.simple[s]], to_rat(ps.roots[ps.simple[t]]));
            if (v.get_den() != 1) throw Error(ErrorCode::Inconsistent, "non-integral pairing in Phi_sigma");
            ps.cartan(s, t) = v.get_num();
        }
    for (std::size_t i = 0; i < ps.roots.size(); ++i)
        if (dot(ps.coroots[i], to_rat(ps.roots[i])) != 2) throw Error(ErrorCode::Inconsistent, "Phi_sigma coroot does not pair to 2");
    ps.R = RootDatum(ps.cartan.transpose(), IntMatrix::identity(l), "R(sigma)");
    ps.type = ps.R.cartan_type();
    if (ps.R.num_positive() != ps.roots.size())
        throw Error(ErrorCode::Inconsistent, "Phi_sigma has " + std::to_string(ps.roots.size()) + " positive roots, its Cartan matrix " +
                                                 std::to_string(ps.R.num_positive()));
    if (l == 0) return ps;

    RatMatrix ci = *inverse(to_rat(ps.cartan));
    for (std::size_t s = 0; s < l; ++s) ps.coweights.push_back(ps.to_ambient(ci.row(s)));
    // cross-check against pi of the coweights of Sigma
    auto cw = fundamental_coweights(d);
    for (std::size_t s = 0; s < l; ++s) {
        const Orbit& ob = tw.orbits()[tw.simple_orbits()[s]];
        std::size_t i = *std::min_element(ob.roots.begin(), ob.roots.end());
        RatVec expect = tw.pi_Y(cw[i]);
        if (ob.special) expect = scaled(expect, Rat(1, 2));
        if (!(expect == ps.coweights[s])) throw Error(ErrorCode::Inconsistent, "fundamental coweight of Phi_sigma disagrees with pi");
    }
    return ps;
}

// ------------------------------------------------------------------- alcove

RatVec AlcoveData::evaluate(const RatVec& x) const
{
    RatVec a(ell);
    for (std::size_t t = 0; t < ell; ++t)
        for (std::size_t j = 0; j < ell; ++j) a[t] += x[j] * cartan(j, t);
    return a;
}

RatVec AlcoveData::affine_coordinates(const RatVec& x) const
{
    RatVec a = evaluate(x), c(nodes());
    for (std::size_t t = 0; t < ell; ++t) c[t] = Rat(marks[t]) * a[t];
    for (std::size_t i = 0; i < comps.size(); ++i) {
        Rat s = 1;
        for (auto t : comps[i].nodes) s -= c[t];
        c[comps[i].affine_node] = s;
    }
    return c;
}

RatVec AlcoveData::from_affine(const RatVec& c) const
{
    RatVec x(ell);
    for (std::size_t s = 0; s < ell; ++s) add_to(x, scaled(coweights[s], c[s] / Rat(marks[s])));
    return x;
}

bool AlcoveData::in_closed_alcove(const RatVec& x) const
{
    for (const auto& c : affine_coordinates(x))
        if (c < 0) return false;
    return true;
}

bool AlcoveData::p_admissible(const RatVec& x) const
{
    if (p == 0) return true;
    return denominator(x) % p != 0;
}

IntMatrix longest_element(const RootDatum& R, const std::vector<std::size_t>& nodes)
{
    std::size_t l = R.semisimple_rank();
    IntMatrix w = IntMatrix::identity(R.rank());
    if (nodes.empty()) return w;
    // a regular point of the parabolic chamber, in coroot coordinates
    RatMatrix ci = *inverse(to_rat(R.cartan()));
    RatVec x(l);
    for (auto j : nodes) add_to(x, ci.row(j));
    for (;;) {
        RatVec y = to_rat(w) * x;
        bool moved = false;
        for (auto j : nodes) {
            Rat a = 0;
            for (std::size_t k = 0; k < l; ++k) a += y[k] * R.cartan()(k, j);
            if (a > 0) {
                w = R.reflection_on_Y(j) * w;
                moved = true;
                break;
            }
        }
        if (!moved) return w;
    }
}

AlcoveData alcove_data(const Twist& tw, const PhiSystem& ps)
{
    AlcoveData ad;
    ad.ell = ps.rank();
    ad.cartan = ps.cartan;
    ad.p = tw.p();
    ad.R = ps.R;
    std::size_t l = ad.ell;

    TwistedLattices tl = twisted_lattices(tw);
    if (tl.Y_sigma.rank() != l) throw Error(ErrorCode::NotSemisimple, "Q Phi_sigma^vee is smaller than Y_sigma (x) Q");
    std::vector<RatVec> ycoords;
    for (const auto& b : tl.Y_sigma.basis()) {
        try {
            ycoords.push_back(ps.to_coords(b));
        } catch (const Error&) {
            throw Error(ErrorCode::NotSemisimple, "Y_sigma is not spanned by Phi_sigma^vee");
        }
    }
    ad.Y = RatLattice(l, ycoords);
    for (std::size_t s = 0; s < l; ++s) {
        IntVec e(l);
        e[s] = 1;
        if (!ad.Y.contains(to_rat(e))) throw Error(ErrorCode::Inconsistent, "simple coroot of Phi_sigma outside Y_sigma");
    }
    if (l == 0) {
        ad.A = {{}};
        ad.A_linear = {IntMatrix()};
        ad.A_shift = {RatVec()};
        return ad;
    }

    RatMatrix ci = *inverse(to_rat(ps.cartan));
    for (std::size_t s = 0; s < l; ++s) ad.coweights.push_back(ci.row(s));
    auto highest = highest_roots(ps.R);
    const auto& rc = ps.R.components();
    ad.marks.assign(l + rc.size(), Int(1));
    ad.component_of.assign(l + rc.size(), 0);
    ad.vertices.assign(l + rc.size(), RatVec(l));
    for (std::size_t i = 0; i < rc.size(); ++i) {
        AlcoveComponent c;
        for (int n : rc[i].nodes) c.nodes.push_back(n);
        c.affine_node = l + i;
        c.highest = highest[i];
        const IntVec& m = ps.R.root_coefficients()[c.highest];
        for (auto t : c.nodes) {
            ad.marks[t] = m[t];
            ad.component_of[t] = i;
            ad.vertices[t] = scaled(ad.coweights[t], Rat(1) / Rat(m[t]));
            if (m[t] == 1) c.J.push_back(t);
        }
        ad.component_of[l + i] = i;
        ad.comps.push_back(c);
    }
    ad.admissible.assign(ad.nodes(), true);
    for (std::size_t t = 0; t < l; ++t) {
        ad.admissible[t] = ad.p_admissible(ad.vertices[t]);
        bool coroot_reading = ad.p == 0 || lcm_of_denominators(ad.vertices[t]) % ad.p != 0;
        if (coroot_reading != ad.admissible[t]) ad.admissibility_divergent.push_back(t);
    }

    // marks identity, checked on the actual roots of Phi_sigma
    for (const auto& c : ad.comps) {
        IntVec sum(ps.roots.front().size());
        for (auto t : c.nodes)
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += ad.marks[t] * ps.roots[ps.simple[t]][k];
        if (std::find(ps.roots.begin(), ps.roots.end(), sum) == ps.roots.end())
            throw Error(ErrorCode::Inconsistent, "marks do not reproduce a root of Phi_sigma");
        for (auto t : c.nodes) {
            RatVec a = ad.evaluate(ad.vertices[t]);
            Rat top = 0;
            for (auto u : c.nodes) top += Rat(ad.marks[u]) * a[u];
            if (top != 1) throw Error(ErrorCode::Inconsistent, "alcove vertex off the affine wall");
            for (const auto& v : a)
                if (v < 0) throw Error(ErrorCode::Inconsistent, "alcove vertex outside the chamber");
        }
    }

    // gamma_s = z_s + coweight_s as node permutations, per component
    std::vector<std::vector<int>> options(ad.comps.size());
    std::vector<std::map<int, std::vector<std::size_t>>> gamma_perm(ad.comps.size());
    std::vector<std::map<int, IntMatrix>> gamma_lin(ad.comps.size());
    for (std::size_t i = 0; i < ad.comps.size(); ++i) {
        const auto& c = ad.comps[i];
        options[i].push_back(-1);
        IntMatrix wS = longest_element(ps.R, c.nodes);
        std::vector<std::size_t> local = c.nodes;
        local.push_back(c.affine_node);
        for (auto s : c.J) {
            std::vector<std::size_t> rest;
            for (auto t : c.nodes)
                if (t != s) rest.push_back(t);
            IntMatrix z = longest_element(ps.R, rest) * wS;
            std::vector<std::size_t> perm(ad.nodes());
            for (std::size_t t = 0; t < ad.nodes(); ++t) perm[t] = t;
            for (auto t : local) {
                RatVec img = to_rat(z) * ad.vertices[t];
                add_to(img, ad.coweights[s]);
                auto it = std::find_if(local.begin(), local.end(), [&](std::size_t u) { return ad.vertices[u] == img; });
                if (it == local.end()) throw Error(ErrorCode::Inconsistent, "gamma_s does not permute the alcove vertices");
                perm[t] = *it;
            }
            options[i].push_back(static_cast<int>(s));
            gamma_perm[i][s] = perm;
            gamma_lin[i][s] = z;
        }
        // {id} and the gamma_s close up into a group of order |J_i|+1
        std::set<std::vector<std::size_t>> g;
        std::vector<std::size_t> id(ad.nodes());
        for (std::size_t t = 0; t < id.size(); ++t) id[t] = t;
        g.insert(id);
        for (auto& [s, pm] : gamma_perm[i]) g.insert(pm);
        for (const auto& a : g)
            for (const auto& b : g) {
                std::vector<std::size_t> ab(id.size());
                for (std::size_t t = 0; t < id.size(); ++t) ab[t] = a[b[t]];
                if (!g.count(ab)) throw Error(ErrorCode::Inconsistent, "diagram automorphisms z_s do not form a group");
            }
        if (g.size() != c.J.size() + 1) throw Error(ErrorCode::Inconsistent, "z_s group has the wrong order");
    }

    for_each_choice(options, [&](const std::vector<int>& pick) {
        RatVec shift(l);
        IntMatrix lin = IntMatrix::identity(l);
        std::vector<std::size_t> perm(ad.nodes());
        for (std::size_t t = 0; t < perm.size(); ++t) perm[t] = t;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            if (pick[i] < 0) continue;
            add_to(shift, ad.coweights[pick[i]]);
            lin = gamma_lin[i][pick[i]] * lin;
            const auto& pm = gamma_perm[i][pick[i]];
            for (auto t : ad.comps[i].nodes) perm[t] = pm[t];
            perm[ad.comps[i].affine_node] = pm[ad.comps[i].affine_node];
        }
        if (!ad.Y.contains(shift)) return;
        ad.A.push_back(perm);
        ad.A_linear.push_back(lin);
        ad.A_shift.push_back(shift);
    });

    Int bound = 1;
    for (const auto& c : ad.comps) bound *= static_cast<long>(c.J.size() + 1);
    Int order = a_R_sigma_group(ad).order();
    if (order != static_cast<long>(ad.A.size()))
        throw Error(ErrorCode::Inconsistent, "|A_R(sigma)| = " + std::to_string(ad.A.size()) + " from the diagram but " +
                                                 order.get_str() + " from the lattice");
    if (bound % order != 0) throw Error(ErrorCode::Inconsistent, "|A_R(sigma)| does not divide the product of |J_i|+1");
    return ad;
}

FiniteAbelianGroup a_R_sigma_group(const AlcoveData& ad)
{
    std::vector<IntVec> g;
    for (std::size_t s = 0; s < ad.ell; ++s) {
        IntVec e(ad.ell);
        e[s] = ad.Y.denominator();
        g.push_back(e);
    }
    return quotient_group(Sublattice(ad.ell, g), ad.Y.numerator());
}

RatVec reduce_to_alcove(const AlcoveData& ad, const RatVec& x0)
{
    if (x0.size() != ad.ell) throw Error(ErrorCode::InvalidArgument, "point has the wrong length");
    if (ad.ell == 0) return x0;
    RatVec x = x0;
    for (;;) {
        RatVec a = ad.evaluate(x);
        auto neg = std::find_if(a.begin(), a.end(), [](const Rat& v) { return v < 0; });
        if (neg != a.end()) {
            x[neg - a.begin()] -= *neg;
            continue;
        }
        bool moved = false;
        for (const auto& c : ad.comps) {
            Rat top = 0;
            for (auto t : c.nodes) top += Rat(ad.marks[t]) * a[t];
            if (top > 1) {
                const IntVec& h = ad.R.coroots()[c.highest];
                for (std::size_t k = 0; k < ad.ell; ++k) x[k] -= (top - 1) * Rat(h[k]);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    RatVec c = ad.affine_coordinates(x), best = c;
    for (const auto& perm : ad.A) {
        RatVec img(c.size());
        for (std::size_t t = 0; t < c.size(); ++t) img[perm[t]] = c[t];
        if (img < best) best = img;
    }
    return ad.from_affine(best);
}

std::vector<RatVec> quasi_central_points(const AlcoveData& ad)
{
    std::vector<std::vector<int>> options;
    for (const auto& c : ad.comps) {
        std::vector<int> o{-1};
        for (auto s : c.J) o.push_back(static_cast<int>(s));
        options.push_back(o);
    }
    std::set<RatVec> pts;
    for_each_choice(options, [&](const std::vector<int>& pick) {
        RatVec x(ad.ell);
        for (int s : pick)
            if (s >= 0) add_to(x, ad.coweights[s]);
        if (ad.p_admissible(x)) pts.insert(reduce_to_alcove(ad, x));
    });
    return std::vector<RatVec>(pts.begin(), pts.end());
}

namespace {

// P^sigma as orbit sums of fundamental weights of Sigma
std::vector<RatVec> fixed_weights(const Twist& tw)
{
    auto fw = fundamental_weights(tw.datum());
    auto perm = tw.simple_perm();
    std::vector<RatVec> out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        RatVec s(tw.datum().rank());
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            add_to(s, fw[j]);
        }
        out.push_back(s);
    }
    return out;
}

} // namespace

bool weight_lattice_matches(const Twist& tw, const PhiSystem& ps)
{
    std::size_t r = tw.datum().rank(), l = ps.rank();
    if (l == 0) return tw.datum().semisimple_rank() == 0;
    RatMatrix ci = *inverse(to_rat(ps.cartan));
    std::vector<RatVec> omega;
    for (std::size_t s = 0; s < l; ++s) {
        RatVec w(r);
        for (std::size_t k = 0; k < l; ++k) add_to(w, scaled(to_rat(ps.roots[ps.simple[k]]), ci(k, s)));
        omega.push_back(w);
    }
    return RatLattice(r, omega) == RatLattice(r, fixed_weights(tw));
}

bool minuscule_classes_cover(const Twist& tw)
{
    const RootDatum& d = tw.datum();
    std::size_t r = d.rank();
    if (d.semisimple_rank() == 0) return true;
    auto perm = tw.simple_perm();
    std::vector<RatVec> qgen;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        RatVec s(r);
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            add_to(s, to_rat(d.roots()[j]));
        }
        qgen.push_back(s);
    }
    RatLattice P(r, fixed_weights(tw)), Q(r, qgen);
    std::vector<IntVec> qc;
    for (const auto& b : Q.basis()) qc.push_back(to_int(P.coordinates(b)));
    Int index = quotient_group(Sublattice(P.rank(), qc), Sublattice::full(P.rank())).order();

    auto fw = fundamental_weights(d);
    // minuscule weights: mark 1 in the highest coroot
    RootDatum dual(d.simple_coroots(), d.simple_roots());
    auto hi = highest_roots(dual);
    std::vector<std::vector<int>> options;
    for (std::size_t i = 0; i < dual.components().size(); ++i) {
        std::vector<int> o{-1};
        for (int n : dual.components()[i].nodes)
            if (dual.root_coefficients()[hi[i]][n] == 1) o.push_back(n);
        options.push_back(o);
    }
    std::vector<RatVec> reps;
    for_each_choice(options, [&](const std::vector<int>& pick) {
        RatVec w(r);
        for (int n : pick)
            if (n >= 0) add_to(w, fw[n]);
        if (!(to_rat(tw.phi()) * w == w)) return;
        for (const auto& u : reps) {
            RatVec diff = w;
            for (std::size_t k = 0; k < r; ++k) diff[k] -= u[k];
            if (Q.contains(diff)) return;
        }
        reps.push_back(w);
    });
    return Int(static_cast<long>(reps.size())) == index;
}

} // namespace qss
