#include "qss/twist.hpp"

#include <algorithm>
#include <map>

namespace qss {

namespace {

constexpr int kMaxOrder = 1000;

IntVec unit(std::size_t n, std::size_t i)
{
    IntVec e(n);
    e[i] = 1;
    return e;
}

RatVec average(const std::vector<IntMatrix>& powers, const RatVec& x)
{
    RatVec out(x.size());
    for (const auto& m : powers) {
        RatVec y = to_rat(m) * x;
        for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
    }
    for (auto& v : out) v /= Rat(static_cast<long>(powers.size()));
    return out;
}

std::vector<IntMatrix> powers_of(const IntMatrix& m, int n)
{
    std::vector<IntMatrix> p{IntMatrix::identity(m.rows())};
    for (int k = 1; k < n; ++k) p.push_back(m * p.back());
    return p;
}

} // namespace

std::string root_label(const IntVec& c)
{
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (c[i] < 0) s += "-";
        else if (!s.empty()) s += "+";
        Int a = abs(c[i]);
        if (a != 1) s += a.get_str();
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

Twist::Twist(const RootDatum& d, const IntMatrix& phi, long p) : d_(d), phi_(phi), p_(p)
{
    check_characteristic(p);
    std::size_t r = d.rank();
    if (phi.rows() != r || phi.cols() != r)
        throw Error(ErrorCode::InvalidArgument, "twist matrix must be " + std::to_string(r) + "x" + std::to_string(r));
    Int dt = det(phi);
    if (dt != 1 && dt != -1) throw Error(ErrorCode::NotIntegral, "twist does not preserve X (det " + dt.get_str() + ")");

    const auto& roots = d.roots();
    perm_.resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        int j = d.root_index(phi * roots[i]);
        if (j < 0) throw Error(ErrorCode::NotStable, "twist maps root " + to_string(roots[i]) + " outside the roots");
        perm_[i] = j;
    }
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
        if (perm_[i] >= d.semisimple_rank()) throw Error(ErrorCode::NotStable, "twist does not permute the simple roots");

    IntMatrix id = IntMatrix::identity(r), pw = phi;
    n_ = 1;
    while (!(pw == id)) {
        if (++n_ > kMaxOrder) throw Error(ErrorCode::InfiniteOrder, "twist has no finite order up to " + std::to_string(kMaxOrder));
        pw = phi * pw;
    }
    phid_ = to_int(*inverse(to_rat(phi))).transpose();
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (!(phid_ * d.coroots()[i] == d.coroots()[perm_[i]]))
            throw Error(ErrorCode::NotStable, "dual twist does not permute the coroots compatibly");

    orbit_of_.assign(roots.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (orbit_of_[i] != static_cast<std::size_t>(-1)) continue;
        Orbit o;
        o.positive = d.is_positive(i);
        for (std::size_t j = i; orbit_of_[j] == static_cast<std::size_t>(-1); j = perm_[j]) {
            orbit_of_[j] = orbits_.size();
            o.roots.push_back(j);
        }
        orbits_.push_back(o);
    }
    for (auto& o : orbits_)
        for (auto a : o.roots)
            for (auto b : o.roots) {
                if (a == b) continue;
                IntVec s = roots[a];
                for (std::size_t k = 0; k < r; ++k) s[k] += roots[b][k];
                int k = d.root_index(s);
                if (k >= 0) {
                    o.special = true;
                    orbits_[orbit_of_[k]].cospecial = true;
                }
            }
    for (auto& o : orbits_) o.c_value = (o.special && p_ != 2) ? -1 : 1;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
        std::size_t o = orbit_of_[i];
        if (std::find(simple_orbits_.begin(), simple_orbits_.end(), o) == simple_orbits_.end()) simple_orbits_.push_back(o);
    }
}

std::vector<std::size_t> Twist::simple_perm() const
{
    return std::vector<std::size_t>(perm_.begin(), perm_.begin() + d_.semisimple_rank());
}

bool Twist::has_special() const
{
    return std::any_of(orbits_.begin(), orbits_.end(), [](const Orbit& o) { return o.special; });
}

RatVec Twist::pi_X(const RatVec& x) const { return average(powers_of(phi_, n_), x); }
RatVec Twist::pi_Y(const RatVec& y) const { return average(powers_of(phid_, n_), y); }

IntVec Twist::orbit_sum(std::size_t o) const
{
    IntVec s(d_.rank());
    for (auto i : orbits_[o].roots)
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += d_.roots()[i][k];
    return s;
}

IntVec Twist::orbit_coroot_sum(std::size_t o) const
{
    IntVec s(d_.rank());
    for (auto i : orbits_[o].roots)
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += d_.coroots()[i][k];
    return s;
}

std::string Twist::orbit_label(std::size_t o) const
{
    IntVec best;
    for (auto i : orbits_[o].roots)
        if (best.empty() || d_.root_coefficients()[i] > best) best = d_.root_coefficients()[i];
    return "pi(" + root_label(best) + ")";
}

Twist attach_twist(const RootDatum& d, const IntMatrix& phi, long p) { return Twist(d, phi, p); }

IntMatrix named_twist(const RootDatum& d, const std::string& name)
{
    std::size_t r = d.rank(), l = d.semisimple_rank();
    if (name.empty() || name == "identity" || name == "trivial" || name == "none") return IntMatrix::identity(r);
    auto it = d.preset_twists.find(name);
    if (it != d.preset_twists.end()) return it->second;
    if (name != "flip" && name != "triality") throw Error(ErrorCode::ParseError, "unknown twist '" + name + "'");

    std::vector<std::size_t> perm(l);
    for (std::size_t i = 0; i < l; ++i) perm[i] = i;
    bool moved = false;
    for (const auto& c : d.components()) {
        const auto& v = c.nodes;
        int n = c.rank;
        if (name == "flip") {
            if (c.letter == 'A' && n >= 2) {
                for (int k = 0; k < n; ++k) perm[v[k]] = v[n - 1 - k];
                moved = true;
            } else if (c.letter == 'D' && n >= 4) {
                std::swap(perm[v[n - 2]], perm[v[n - 1]]);
                moved = true;
            } else if (c.letter == 'E' && n == 6) {
                std::swap(perm[v[0]], perm[v[5]]);
                std::swap(perm[v[2]], perm[v[4]]);
                moved = true;
            }
        } else if (c.letter == 'D' && n == 4) {
            perm[v[0]] = v[2];
            perm[v[2]] = v[3];
            perm[v[3]] = v[0];
            moved = true;
        }
    }
    if (!moved) throw Error(ErrorCode::InvalidArgument, "datum " + d.label() + " has no '" + name + "' diagram automorphism");

    // phi(alpha_i) = alpha_perm(i), identity on the radical
    RatMatrix cor = to_rat(d.simple_coroots());
    std::vector<RatVec> src, dst;
    for (std::size_t i = 0; i < l; ++i) {
        src.push_back(to_rat(d.simple_roots().row(i)));
        dst.push_back(to_rat(d.simple_roots().row(perm[i])));
    }
    for (const auto& v : nullspace(cor)) {
        src.push_back(v);
        dst.push_back(v);
    }
    RatMatrix m = RatMatrix::from_cols(src), t = RatMatrix::from_cols(dst);
    RatMatrix phi = t * *inverse(m);
    for (const auto& x : phi.data())
        if (x.get_den() != 1)
            throw Error(ErrorCode::NotIntegral, "'" + name + "' does not preserve the lattice X of " + d.label());
    return to_int(phi);
}

TwistedLattices twisted_lattices(const Twist& tw)
{
    std::size_t r = tw.datum().rank();
    std::vector<RatVec> gx, gy;
    for (std::size_t i = 0; i < r; ++i) {
        gx.push_back(tw.pi_X(to_rat(unit(r, i))));
        gy.push_back(tw.pi_Y(to_rat(unit(r, i))));
    }
    TwistedLattices tl{RatLattice(r, gx), RatLattice(r, gy), kernel_lattice(tw.phi() - IntMatrix::identity(r)),
                       kernel_lattice(tw.phi_dual() - IntMatrix::identity(r))};
    auto unimodular = [](const std::vector<RatVec>& a, const std::vector<IntVec>& b) {
        if (a.size() != b.size()) return false;
        if (a.empty()) return true;
        IntMatrix g(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                Rat v = dot(a[i], to_rat(b[j]));
                if (v.get_den() != 1) return false;
                g(i, j) = v.get_num();
            }
        Int dt = det(g);
        return dt == 1 || dt == -1;
    };
    if (!unimodular(tl.X_sigma.basis(), tl.Y_fix.basis()))
        throw Error(ErrorCode::Inconsistent, "X_sigma and Y^sigma are not in perfect duality");
    if (!unimodular(tl.Y_sigma.basis(), tl.X_fix.basis()))
        throw Error(ErrorCode::Inconsistent, "Y_sigma and X^sigma are not in perfect duality");
    return tl;
}

namespace {

SigmaSystem finish_system(const Twist& tw, std::vector<std::size_t> orbits)
{
    SigmaSystem s;
    const RootDatum& d = tw.datum();
    std::map<RatVec, std::size_t> index;
    for (auto o : orbits) {
        const Orbit& ob = tw.orbits()[o];
        RatVec root = tw.pi_X(to_rat(d.roots()[ob.roots[0]]));
        IntVec co = tw.orbit_coroot_sum(o);
        if (ob.special)
            for (auto& x : co) x *= 2;
        index[root] = s.roots.size();
        s.orbits.push_back(o);
        s.roots.push_back(root);
        s.coroots.push_back(co);
    }
    std::vector<bool> composite(s.roots.size(), false);
    for (std::size_t i = 0; i < s.roots.size(); ++i)
        for (std::size_t j = i; j < s.roots.size(); ++j) {
            RatVec v = s.roots[i];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += s.roots[j][k];
            auto it = index.find(v);
            if (it != index.end()) composite[it->second] = true;
        }
    for (std::size_t i = 0; i < s.roots.size(); ++i)
        if (!composite[i]) s.simple.push_back(i);
    std::size_t k = s.simple.size();
    s.cartan = IntMatrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rat v = dot(to_rat(s.coroots[s.simple[i]]), s.roots[s.simple[j]]);
            if (v.get_den() != 1) throw Error(ErrorCode::Inconsistent, "non-integral Cartan entry in twisted system");
            s.cartan(i, j) = v.get_num();
        }
    s.type = classify_cartan(s.cartan);
    if (static_cast<std::size_t>(s.type.positive_roots()) != s.roots.size())
        throw Error(ErrorCode::Inconsistent, "twisted system has " + std::to_string(s.roots.size()) +
                                                 " positive roots but type " + s.type.to_string());
    return s;
}

} // namespace

SigmaSystem sigma_system(const Twist& tw)
{
    std::vector<std::size_t> orbits;
    for (std::size_t o = 0; o < tw.orbits().size(); ++o) {
        const Orbit& ob = tw.orbits()[o];
        if (ob.positive && !ob.special) orbits.push_back(o);
    }
    return finish_system(tw, orbits);
}

SigmaSystem sigma_t_system(const Twist& tw, const RatVec& lambda)
{
    if (lambda.size() != tw.datum().rank()) throw Error(ErrorCode::InvalidArgument, "lambda has the wrong length");
    if (!(to_rat(tw.phi_dual()) * lambda == lambda)) throw Error(ErrorCode::InvalidArgument, "lambda is not sigma-invariant");
    std::vector<std::size_t> orbits;
    for (std::size_t o = 0; o < tw.orbits().size(); ++o) {
        const Orbit& ob = tw.orbits()[o];
        if (!ob.positive) continue;
        Rat v = dot(to_rat(tw.orbit_sum(o)), lambda);
        if (ob.special) {
            if (tw.p() == 2) continue;
            Rat w = 2 * v;
            if (w.get_den() == 1 && w.get_num() % 2 != 0) orbits.push_back(o);
        } else if (v.get_den() == 1) {
            orbits.push_back(o);
        }
    }
    return finish_system(tw, orbits);
}

FiniteAbelianGroup sigma_fundamental_group(const Twist& tw, const SigmaSystem& s)
{
    Sublattice q(tw.datum().rank(), s.coroots);
    return quotient_group(q, saturation(q));
}

Int sigma_az_exponent(const Twist& tw, const TwistedLattices& tl, const SigmaSystem& s)
{
    std::vector<IntVec> coords;
    for (const auto& r : s.roots) coords.push_back(to_int(tl.X_sigma.coordinates(r)));
    Sublattice l(tl.X_sigma.rank(), coords);
    return pprime_part(torsion_of_quotient(l).exponent(), tw.p());
}

FiniteAbelianGroup component_group_Ts(const Twist& tw)
{
    std::size_t r = tw.datum().rank();
    IntMatrix norm(r, r), pw = IntMatrix::identity(r);
    for (int k = 0; k < tw.order(); ++k) {
        norm = norm + pw;
        pw = tw.phi() * pw;
    }
    Sublattice ker = kernel_lattice(norm);
    Sublattice im = image_lattice(tw.phi() - IntMatrix::identity(r));
    return pprime_part(quotient_group(im, ker), tw.p());
}

bool is_semisimple_fixed(const Twist& tw)
{
    SigmaSystem s = sigma_system(tw);
    std::size_t r = tw.datum().rank();
    std::size_t rk = s.coroots.empty() ? 0 : rank(to_rat(IntMatrix::from_rows(s.coroots)));
    return rk == kernel_lattice(tw.phi_dual() - IntMatrix::identity(r)).rank();
}

} // namespace qss
