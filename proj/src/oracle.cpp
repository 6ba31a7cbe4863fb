#include "qss/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace qss {

namespace {

// longest element of the parabolic subgroup on `nodes`, acting on Y
IntMatrix ambient_longest(const RootDatum& d, const std::vector<std::size_t>& nodes)
{
    std::vector<RatVec> cw = fundamental_coweights(d);
    RatVec x(d.rank());
    for (auto j : nodes)
        for (std::size_t i = 0; i < d.rank(); ++i) x[i] += cw[j][i];
    IntMatrix w = IntMatrix::identity(d.rank());
    for (;;) {
        RatVec wx = to_rat(w) * x;
        bool moved = false;
        for (auto j : nodes) {
            if (dot(wx, to_rat(d.simple_roots().row(j))) > 0) {
                w = d.reflection_on_Y(j) * w;
                moved = true;
                break;
            }
        }
        if (!moved) return w;
    }
}

Int lcm(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Int(a / g * b);
}

} // namespace

Oracle::Oracle(const Twist& tw, std::size_t weyl_cap, bool corrupt_marks) : tw_(tw)
{
    const RootDatum& d = tw.datum();
    TwistedLattices tl = twisted_lattices(tw);
    ylat_ = tl.Y_sigma;
    basis_ = ylat_.basis();
    l_ = basis_.size();
    const auto& so = tw.simple_orbits();
    if (so.size() != l_) throw Error(ErrorCode::NotSemisimple, "Y_sigma has larger rank than Phi_sigma");

    // W^sigma: generated by the longest elements of the orbit parabolics
    std::vector<IntMatrix>& gens = gens_;
    for (auto o : so) {
        IntMatrix w = ambient_longest(d, tw.orbits()[o].roots);
        IntMatrix m(l_, l_);
        for (std::size_t j = 0; j < l_; ++j) {
            IntVec c = to_int(coordinates(to_rat(w) * basis_[j]));
            for (std::size_t i = 0; i < l_; ++i) m(i, j) = c[i];
        }
        gens.push_back(m);
    }
    std::set<IntMatrix> seen{IntMatrix::identity(l_)};
    W_.push_back(IntMatrix::identity(l_));
    for (std::size_t k = 0; k < W_.size(); ++k) {
        for (const auto& g : gens) {
            IntMatrix h = g * W_[k];
            if (seen.insert(h).second) {
                W_.push_back(h);
                if (W_.size() > weyl_cap) throw Error(ErrorCode::CapExceeded, "W^sigma larger than the cap");
            }
        }
    }
    for (const auto& w : W_)
        for (const auto& x : w.data()) Wl_.push_back(x.get_si());

    // roots of Phi_sigma, as forms on coordinates
    std::vector<IntVec> roots;       // in X
    std::vector<RatVec> coroots;     // coordinates
    std::map<std::size_t, std::size_t> simple_index;
    for (std::size_t o = 0; o < tw.orbits().size(); ++o) {
        const Orbit& orb = tw.orbits()[o];
        if (!orb.positive || orb.cospecial) continue;
        IntVec r = tw.orbit_sum(o);
        if (orb.special)
            for (auto& x : r) x *= 2;
        auto it = std::find(so.begin(), so.end(), o);
        if (it != so.end()) simple_index[roots.size()] = static_cast<std::size_t>(it - so.begin());
        roots.push_back(r);
        coroots.push_back(coordinates(tw.pi_Y(to_rat(d.coroots()[orb.roots[0]]))));
    }
    std::vector<std::size_t> simple(l_);
    for (auto [k, s] : simple_index) simple[s] = k;
    for (auto k : simple) {
        RatVec f(l_);
        for (std::size_t j = 0; j < l_; ++j) f[j] = dot(to_rat(roots[k]), basis_[j]);
        forms_.push_back(f);
    }
    std::vector<IntVec> qgen;
    for (const auto& c : coroots) qgen.push_back(to_int(c));
    qcoroot_ = Sublattice(l_, qgen);
    a_r_ = quotient_group(qcoroot_, Sublattice::full(l_)).order();
    {
        // x in Q(Phi^vee) iff (x V)_i = 0 mod d_i
        SmithDecomposition snf = smith_normal_form(qcoroot_.basis_matrix());
        for (std::size_t i = 0; i < snf.factors.size(); ++i) {
            if (snf.factors[i] == 1) continue;
            std::vector<long> col;
            for (std::size_t j = 0; j < l_; ++j) col.push_back(snf.V(j, i).get_si());
            qchar_.push_back(col);
            qmod_.push_back(snf.factors[i].get_si());
        }
    }

    // fundamental coweights: forms_ x = e_s
    RatMatrix F = RatMatrix::from_rows(forms_, l_);
    auto Finv = inverse(F);
    if (!Finv) throw Error(ErrorCode::Inconsistent, "simple roots of Phi_sigma are dependent");
    for (std::size_t s = 0; s < l_; ++s) coweights_.push_back(Finv->col(s));
    std::vector<IntVec> pgen;
    Int den = 1;
    for (const auto& w : coweights_) den = lcm(den, lcm_of_denominators(w));
    for (const auto& w : coweights_) {
        IntVec v(l_);
        for (std::size_t i = 0; i < l_; ++i) v[i] = Int(w[i] * den);
        pgen.push_back(v);
    }
    {
        std::vector<IntVec> ys;
        for (std::size_t i = 0; i < l_; ++i) {
            IntVec e(l_);
            e[i] = den;
            ys.push_back(e);
        }
        pq_ = quotient_group(Sublattice(l_, ys), Sublattice(l_, pgen)).order();
    }

    // components and highest roots by height
    std::vector<std::size_t> comp(l_, l_);
    for (std::size_t s = 0; s < l_; ++s) {
        if (comp[s] != l_) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = comps_.size();
        comps_.push_back({});
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            comps_.back().push_back(a);
            for (std::size_t b = 0; b < l_; ++b)
                if (comp[b] == l_ && dot(coroots[simple[a]], forms_[b]) != 0) {
                    comp[b] = comp[s];
                    stack.push_back(b);
                }
        }
        std::sort(comps_.back().begin(), comps_.back().end());
    }
    marks_.assign(l_, 0);
    RatMatrix S(d.rank(), l_);
    for (std::size_t s = 0; s < l_; ++s)
        for (std::size_t i = 0; i < d.rank(); ++i) S(i, s) = roots[simple[s]][i];
    for (const auto& c : comps_) {
        Int best = -1;
        IntVec best_coeffs;
        for (const auto& r : roots) {
            auto x = solve(S, to_rat(r));
            if (!x) throw Error(ErrorCode::Inconsistent, "root outside the span of Delta_sigma");
            IntVec co = to_int(*x);
            bool inside = true;
            Int h = 0;
            for (std::size_t s = 0; s < l_; ++s) {
                if (co[s] != 0 && comp[s] != comp[c[0]]) inside = false;
                h += co[s];
            }
            if (inside && h > best) {
                best = h;
                best_coeffs = co;
            }
        }
        for (auto s : c) marks_[s] = best_coeffs[s];
    }
    if (corrupt_marks && l_ > 0) marks_[0] += 1;
}

long Oracle::minimal_bound() const
{
    Int m = 1;
    for (const auto& n : marks_) m = lcm(m, n);
    return Int(m * a_r_).get_si();
}

RatVec Oracle::coordinates(const RatVec& ambient) const { return ylat_.coordinates(ambient); }

RatVec Oracle::ambient(const RatVec& c) const
{
    RatVec v(tw_.datum().rank());
    for (std::size_t j = 0; j < l_; ++j)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[j] * basis_[j][i];
    return v;
}

std::vector<RatVec> Oracle::sweep(long N) const
{
    std::vector<RatVec> pts;
    long p = tw_.p();
    for (long d = 1; d <= N; ++d) {
        // k_s >= 0 with sum over each component of n_s k_s <= d
        std::vector<long> k(l_, 0);
        std::function<void(std::size_t, std::size_t, long)> go = [&](std::size_t ci, std::size_t pos, long left) {
            if (ci == comps_.size()) {
                long g = d;
                for (auto v : k) g = std::gcd(g, v);
                if (g != 1) return;   // same point as on the grid of d / g
                RatVec x(l_);
                for (std::size_t s = 0; s < l_; ++s)
                    for (std::size_t i = 0; i < l_; ++i) x[i] += Rat(k[s], d) * coweights_[s][i];
                for (auto& q : x) q.canonicalize();
                // least m with m x in Y_sigma; x = v/m is swept iff m <= N and p does not divide m
                Int m = lcm_of_denominators(x);
                if (m <= N && (p == 0 || Int(m % p) != 0)) pts.push_back(x);
                return;
            }
            const auto& c = comps_[ci];
            if (pos == c.size()) {
                go(ci + 1, 0, d);
                return;
            }
            std::size_t s = c[pos];
            long n = marks_[s].get_si();
            for (long v = 0; v * n <= left; ++v) {
                k[s] = v;
                go(ci, pos + 1, left - v * n);
            }
            k[s] = 0;
        };
        go(0, 0, d);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool Oracle::in_lattice(const IntVec& v, const Int& den, bool coroot_lattice) const
{
    if (!coroot_lattice) {
        for (const auto& x : v)
            if (Int(x % den) != 0) return false;
        return true;
    }
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i], den);
    for (auto& q : r) q.canonicalize();
    return membership(r, qcoroot_).has_value();
}

namespace {

void scaled(const RatVec& lam, IntVec& mu, Int& den)
{
    den = lcm_of_denominators(lam);
    mu.assign(lam.size(), 0);
    for (std::size_t i = 0; i < lam.size(); ++i) mu[i] = Int(lam[i] * den);
}

} // namespace

std::vector<std::size_t> Oracle::stabilizer(const RatVec& lam) const
{
    IntVec mu;
    Int den;
    scaled(lam, mu, den);
    std::vector<std::size_t> out;
    if (!den.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "denominator too large");
    long dl = den.get_si();
    std::vector<long> m(l_);
    for (std::size_t i = 0; i < l_; ++i) m[i] = Int(mu[i] % den).get_si();
    for (std::size_t k = 0; k < W_.size(); ++k) {
        const long* w = &Wl_[k * l_ * l_];
        bool ok = true;
        for (std::size_t i = 0; i < l_ && ok; ++i) {
            long v = -m[i];
            for (std::size_t j = 0; j < l_; ++j) v += w[i * l_ + j] * m[j];
            ok = v % dl == 0;
        }
        if (ok) out.push_back(k);
    }
    return out;
}

std::vector<std::size_t> Oracle::reflection_stabilizer(const RatVec& lam) const
{
    return reflection_part(lam, stabilizer(lam));
}

std::vector<std::size_t> Oracle::reflection_part(const RatVec& lam, const std::vector<std::size_t>& st) const
{
    IntVec mu;
    Int den;
    scaled(lam, mu, den);
    long dl = den.get_si();
    std::vector<long> m(l_);
    for (std::size_t i = 0; i < l_; ++i) m[i] = mu[i].get_si();
    std::vector<std::size_t> out;
    std::vector<long> v(l_);
    for (auto k : st) {
        const long* w = &Wl_[k * l_ * l_];
        for (std::size_t i = 0; i < l_; ++i) {
            long x = -m[i];
            for (std::size_t j = 0; j < l_; ++j) x += w[i * l_ + j] * m[j];
            v[i] = x / dl;
        }
        bool ok = true;
        for (std::size_t c = 0; c < qchar_.size() && ok; ++c) {
            long x = 0;
            for (std::size_t j = 0; j < l_; ++j) x += v[j] * qchar_[c][j];
            ok = x % qmod_[c] == 0;
        }
        if (ok) out.push_back(k);
    }
    return out;
}

bool Oracle::fixed_space_zero(const std::vector<std::size_t>& elements) const
{
    // common fixed space, intersected one element at a time
    std::vector<RatVec> F;
    for (std::size_t i = 0; i < l_; ++i) {
        RatVec e(l_);
        e[i] = 1;
        F.push_back(e);
    }
    for (auto k : elements) {
        if (F.empty()) break;
        bool fixes = true;
        for (std::size_t a = 0; a < F.size() && fixes; ++a) fixes = to_rat(W_[k]) * F[a] == F[a];
        if (fixes) continue;
        RatMatrix M = to_rat(W_[k] - IntMatrix::identity(l_)) * RatMatrix::from_cols(F, l_);
        std::vector<RatVec> ker = nullspace(M);
        std::vector<RatVec> next;
        for (const auto& c : ker) {
            RatVec v(l_);
            for (std::size_t j = 0; j < F.size(); ++j)
                for (std::size_t i = 0; i < l_; ++i) v[i] += c[j] * F[j][i];
            next.push_back(v);
        }
        F = next;
    }
    return F.empty();
}

bool Oracle::equivalent(const RatVec& a, const RatVec& b) const
{
    Int den = lcm(lcm_of_denominators(a), lcm_of_denominators(b));
    IntVec ma(l_), mb(l_);
    for (std::size_t i = 0; i < l_; ++i) {
        ma[i] = Int(a[i] * den);
        mb[i] = Int(b[i] * den);
    }
    for (const auto& w : W_) {
        IntVec v = w * ma;
        for (std::size_t i = 0; i < l_; ++i) v[i] -= mb[i];
        if (in_lattice(v, den, false)) return true;
    }
    return false;
}

BruteClass Oracle::classify_point(const RatVec& lam) const
{
    BruteClass c;
    c.lambda = lam;
    c.ambient = ambient(lam);
    std::vector<std::size_t> st = stabilizer(lam), st0 = reflection_part(lam, st);
    c.w_order = static_cast<long>(st.size());
    c.w0_order = static_cast<long>(st0.size());
    c.quasi_isolated = fixed_space_zero(st);
    c.isolated = fixed_space_zero(st0);
    return c;
}

std::vector<BruteClass> Oracle::brute_classes(long N) const
{
    if (N < minimal_bound())
        throw Error(ErrorCode::InvalidArgument, "denominator bound below lcm(marks) * |A_R(sigma)|");
    std::vector<BruteClass> out;
    for (const auto& x : sweep(N)) {
        if (!fixed_space_zero(stabilizer(x))) continue;
        BruteClass c = classify_point(x);
        bool dup = false;
        for (const auto& o : out)
            if (o.lambda.size() == x.size() && equivalent(o.lambda, x)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(c);
    }
    return out;
}

std::vector<std::string> cross_check(const Classifier& cl, const OracleConfig& cfg)
{
    Oracle o(cl.twist(), cfg.weyl_cap, cfg.corrupt_marks);
    long N = cfg.N ? cfg.N : 2 * o.minimal_bound();
    std::vector<BruteClass> brute = o.brute_classes(N);
    std::vector<ClassReport> fast = cl.enumerate_quasi_isolated();
    std::vector<std::string> out;
    std::vector<bool> used(brute.size(), false);
    for (const auto& r : fast) {
        RatVec x = o.coordinates(r.lambda_ambient);
        std::string tag = "lambda=" + to_string(r.lambda_ambient);
        std::size_t hit = brute.size();
        for (std::size_t i = 0; i < brute.size(); ++i)
            if (!used[i] && o.equivalent(brute[i].lambda, x)) {
                hit = i;
                break;
            }
        if (hit == brute.size()) {
            out.push_back(tag + ": not found by brute force");
            continue;
        }
        used[hit] = true;
        const BruteClass& b = brute[hit];
        if (b.isolated != r.isolated) out.push_back(tag + ": isolated flag differs");
        if (b.w_order != r.w_order)
            out.push_back(tag + ": |W(t sigma)| " + b.w_order.get_str() + " vs " + r.w_order.get_str());
        if (b.w0_order != r.w0_order)
            out.push_back(tag + ": |W0(t sigma)| " + b.w0_order.get_str() + " vs " + r.w0_order.get_str());
    }
    for (std::size_t i = 0; i < brute.size(); ++i)
        if (!used[i]) out.push_back("lambda=" + to_string(brute[i].ambient) + ": missed by enumeration");
    return out;
}

} // namespace qss
