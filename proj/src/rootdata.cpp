#include "qss/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <regex>
#include <set>

namespace qss {

IntMatrix cartan_matrix(char letter, int n)
{
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative rank");
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    auto bond = [&](int i, int j, int cij, int cji) {   // 1-based labels
        c(i - 1, j - 1) = cij;
        c(j - 1, i - 1) = cji;
    };
    switch (letter) {
    case 'A':
        for (int i = 1; i < n; ++i) bond(i, i + 1, -1, -1);
        break;
    case 'B':
    case 'C':
        for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
        if (n >= 2) {
            if (letter == 'B') bond(n - 1, n, -1, -2);
            else bond(n - 1, n, -2, -1);
        }
        break;
    case 'D':
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "D needs rank >= 2");
        for (int i = 1; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
        if (n >= 3) bond(n - 2, n, -1, -1);
        if (n >= 3) bond(n - 2, n - 1, -1, -1);
        break;
    case 'E':
        if (n < 6 || n > 8) throw Error(ErrorCode::InvalidArgument, "E needs rank 6..8");
        bond(1, 3, -1, -1);
        bond(2, 4, -1, -1);
        for (int i = 3; i < n; ++i) bond(i, i + 1, -1, -1);
        break;
    case 'F':
        if (n != 4) throw Error(ErrorCode::InvalidArgument, "F needs rank 4");
        bond(1, 2, -1, -1);
        bond(2, 3, -1, -2);
        bond(3, 4, -1, -1);
        break;
    case 'G':
        if (n != 2) throw Error(ErrorCode::InvalidArgument, "G needs rank 2");
        bond(1, 2, -3, -1);
        break;
    default:
        throw Error(ErrorCode::InvalidArgument, std::string("unknown Cartan family ") + letter);
    }
    return c;
}

Int weyl_order(char letter, int n)
{
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    switch (letter) {
    case 'A': return f * (n + 1);
    case 'B':
    case 'C': return (Int(1) << n) * f;
    case 'D': return n == 0 ? Int(1) : (Int(1) << (n - 1)) * f;
    case 'E': return n == 6 ? Int(51840) : n == 7 ? Int(2903040) : Int(696729600);
    case 'F': return 1152;
    case 'G': return 12;
    }
    return 1;
}

int coxeter_number(char letter, int n)
{
    switch (letter) {
    case 'A': return n + 1;
    case 'B':
    case 'C': return 2 * n;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 12;
    case 'G': return 6;
    }
    return 0;
}

// ---------------------------------------------------------------- CartanType

namespace {

void canonical_sort(std::vector<std::pair<char, int>>& c)
{
    std::stable_sort(c.begin(), c.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
}

} // namespace

CartanType::CartanType(std::vector<std::pair<char, int>> comps) : comps_(std::move(comps))
{
    comps_.erase(std::remove_if(comps_.begin(), comps_.end(), [](const auto& c) { return c.second == 0; }), comps_.end());
    canonical_sort(comps_);
}

CartanType CartanType::parse(const std::string& s)
{
    std::vector<std::pair<char, int>> comps;
    if (s.empty() || s == "1") return CartanType();
    std::regex part("([ABCDEFG])([0-9]+)");
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('x', pos);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(pos, end - pos);
        std::smatch m;
        if (!std::regex_match(tok, m, part)) throw Error(ErrorCode::ParseError, "bad Cartan type component '" + tok + "'");
        comps.emplace_back(m[1].str()[0], std::stoi(m[2].str()));
        pos = end + 1;
    }
    return CartanType(comps);
}

int CartanType::rank() const
{
    int r = 0;
    for (const auto& c : comps_) r += c.second;
    return r;
}

Int CartanType::weyl_order() const
{
    Int o = 1;
    for (const auto& c : comps_) o *= qss::weyl_order(c.first, c.second);
    return o;
}

int CartanType::positive_roots() const
{
    int n = 0;
    for (const auto& c : comps_) n += c.second * coxeter_number(c.first, c.second) / 2;
    return n;
}

std::string CartanType::to_string() const
{
    if (comps_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        s += (i ? "x" : "") + std::string(1, comps_[i].first) + std::to_string(comps_[i].second);
    return s;
}

CartanType CartanType::normalized() const
{
    std::vector<std::pair<char, int>> out;
    for (auto [l, n] : comps_) {
        if ((l == 'B' || l == 'C') && n == 1) out.emplace_back('A', 1);
        else if (l == 'B' && n == 2) out.emplace_back('C', 2);
        else if (l == 'D' && n == 2) {
            out.emplace_back('A', 1);
            out.emplace_back('A', 1);
        } else if (l == 'D' && n == 3) out.emplace_back('A', 3);
        else if (l == 'D' && n == 1) continue;
        else out.emplace_back(l, n);
    }
    return CartanType(out);
}

CartanType CartanType::dual() const
{
    std::vector<std::pair<char, int>> out;
    for (auto [l, n] : comps_) out.emplace_back(l == 'B' ? 'C' : l == 'C' ? 'B' : l, n);
    return CartanType(out);
}

IntMatrix cartan_matrix(const CartanType& t)
{
    IntMatrix c(t.rank(), t.rank());
    std::size_t off = 0;
    for (auto [l, n] : t.components()) {
        IntMatrix b = cartan_matrix(l, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c(off + i, off + j) = b(i, j);
        off += n;
    }
    return c;
}

// ------------------------------------------------------------ classification

namespace {

// bijection f with m(i,j) = ref(f[i], f[j]); empty when none
std::vector<int> match_cartan(const IntMatrix& m, const std::vector<int>& nodes, const IntMatrix& ref)
{
    int k = nodes.size();
    std::vector<int> f(k, -1), used(k, 0);
    std::vector<int> deg_m(k, 0), deg_r(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) {
                if (m(nodes[i], nodes[j]) != 0) ++deg_m[i];
                if (ref(i, j) != 0) ++deg_r[i];
            }
    std::function<bool(int)> go = [&](int i) -> bool {
        if (i == k) return true;
        for (int c = 0; c < k; ++c) {
            if (used[c] || deg_m[i] != deg_r[c]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = m(nodes[i], nodes[j]) == ref(c, f[j]) && m(nodes[j], nodes[i]) == ref(f[j], c);
            if (!ok) continue;
            f[i] = c;
            used[c] = 1;
            if (go(i + 1)) return true;
            used[c] = 0;
        }
        return false;
    };
    if (!go(0)) return {};
    return f;
}

} // namespace

std::vector<CartanComponent> classify_components(const IntMatrix& c)
{
    int n = c.rows();
    if (c.cols() != c.rows()) throw Error(ErrorCode::NotCrystallographic, "Cartan matrix not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && c(i, j) != 2) throw Error(ErrorCode::NotCrystallographic, "diagonal entry not 2");
            if (i != j && (c(i, j) > 0 || ((c(i, j) == 0) != (c(j, i) == 0))))
                throw Error(ErrorCode::NotCrystallographic, "invalid off-diagonal entries");
        }
    // connected components
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> part{s};
        comp[s] = parts.size();
        for (std::size_t q = 0; q < part.size(); ++q)
            for (int j = 0; j < n; ++j)
                if (comp[j] < 0 && c(part[q], j) != 0) {
                    comp[j] = parts.size();
                    part.push_back(j);
                }
        std::sort(part.begin(), part.end());
        parts.push_back(part);
    }
    std::vector<CartanComponent> out;
    for (const auto& part : parts) {
        int k = part.size();
        std::vector<std::pair<char, int>> cands;
        if (k == 1) cands = {{'A', 1}};
        else if (k == 2) {
            int a = Int(abs(c(part[0], part[1]))).get_si(), b = Int(abs(c(part[1], part[0]))).get_si();
            if (a * b == 1) cands = {{'A', 2}};
            else if (a * b == 2) cands = {{a < b ? 'C' : 'B', 2}};
            else if (a * b == 3) cands = {{'G', 2}};
        } else {
            cands = {{'A', k}, {'B', k}, {'C', k}};
            if (k >= 4) cands.push_back({'D', k});
            if (k >= 6 && k <= 8) cands.push_back({'E', k});
            if (k == 4) cands.push_back({'F', 4});
        }
        bool found = false;
        for (auto [l, r] : cands) {
            auto f = match_cartan(c, part, cartan_matrix(l, r));
            if (f.empty()) continue;
            CartanComponent cc;
            cc.letter = l;
            cc.rank = r;
            cc.nodes.assign(k, -1);
            for (int i = 0; i < k; ++i) cc.nodes[f[i]] = part[i];
            out.push_back(cc);
            found = true;
            break;
        }
        if (!found) throw Error(ErrorCode::NotCrystallographic, "component matches no finite type");
    }
    std::stable_sort(out.begin(), out.end(), [](const CartanComponent& a, const CartanComponent& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.letter < b.letter;
    });
    return out;
}

CartanType classify_cartan(const IntMatrix& c)
{
    std::vector<std::pair<char, int>> t;
    for (const auto& cc : classify_components(c)) t.emplace_back(cc.letter, cc.rank);
    return CartanType(t);
}

// ----------------------------------------------------------------- RootDatum

RootDatum::RootDatum(const IntMatrix& sr, const IntMatrix& scr, std::string label)
    : r_(sr.cols()), l_(sr.rows()), label_(std::move(label)), sroots_(sr), scoroots_(scr)
{
    if (scr.rows() != l_ || scr.cols() != r_)
        throw Error(ErrorCode::InvalidArgument, "simple roots and coroots have different shapes");
    cartan_ = scr * sr.transpose();
    comps_ = classify_components(cartan_);

    // positive roots by closure under simple reflections, with coroots alongside
    std::vector<IntVec> pc, pd;
    std::set<IntVec> seen;
    for (std::size_t i = 0; i < l_; ++i) {
        IntVec e(l_);
        e[i] = 1;
        pc.push_back(e);
        pd.push_back(e);
        seen.insert(e);
    }
    for (std::size_t q = 0; q < pc.size(); ++q) {
        for (std::size_t i = 0; i < l_; ++i) {
            Int k = 0, kv = 0;
            for (std::size_t j = 0; j < l_; ++j) {
                k += pc[q][j] * cartan_(i, j);
                kv += pd[q][j] * cartan_(j, i);
            }
            if (k == 0) continue;
            IntVec c = pc[q];
            c[i] -= k;
            bool pos = std::all_of(c.begin(), c.end(), [](const Int& x) { return x >= 0; });
            if (!pos || seen.count(c)) continue;
            IntVec d = pd[q];
            d[i] -= kv;
            seen.insert(c);
            pc.push_back(c);
            pd.push_back(d);
        }
    }
    std::vector<std::size_t> ord(pc.size());
    std::iota(ord.begin(), ord.end(), 0);
    auto height = [&](std::size_t i) {
        Int h = 0;
        for (const auto& x : pc[i]) h += x;
        return h;
    };
    std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
        Int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return pc[a] > pc[b];
    });
    npos_ = pc.size();
    auto lin = [&](const IntVec& c, const IntMatrix& m) {
        IntVec v(r_);
        for (std::size_t j = 0; j < l_; ++j)
            for (std::size_t k = 0; k < r_; ++k) v[k] += c[j] * m(j, k);
        return v;
    };
    for (int sign : {1, -1})
        for (auto i : ord) {
            IntVec c = pc[i], d = pd[i];
            if (sign < 0) {
                for (auto& x : c) x = -x;
                for (auto& x : d) x = -x;
            }
            coeffs_.push_back(c);
            roots_.push_back(lin(c, sroots_));
            coroots_.push_back(lin(d, scoroots_));
        }
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (index_.count(roots_[i])) throw Error(ErrorCode::InvalidArgument, "simple roots are not independent");
        index_[roots_[i]] = i;
    }
}

int RootDatum::root_index(const IntVec& v) const
{
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

CartanType RootDatum::cartan_type() const
{
    std::vector<std::pair<char, int>> t;
    for (const auto& c : comps_) t.emplace_back(c.letter, c.rank);
    return CartanType(t);
}

IntMatrix RootDatum::reflection_on_X(std::size_t s) const
{
    IntMatrix m = IntMatrix::identity(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) m(i, j) -= sroots_(s, i) * scoroots_(s, j);
    return m;
}

IntMatrix RootDatum::reflection_on_Y(std::size_t s) const
{
    IntMatrix m = IntMatrix::identity(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) m(i, j) -= scoroots_(s, i) * sroots_(s, j);
    return m;
}

// ------------------------------------------------------------------ builders

RootDatum build_datum(const CartanType& type, const IsogenySpec& iso)
{
    IntMatrix c = cartan_matrix(type);
    std::size_t n = c.rows();
    IntMatrix b = IntMatrix::identity(n);   // columns: basis of X in weight coordinates
    if (iso.kind == IsogenySpec::Adjoint) b = c;
    else if (iso.kind == IsogenySpec::Intermediate) {
        std::vector<IntVec> gens;
        for (std::size_t j = 0; j < n; ++j) gens.push_back(c.col(j));
        for (const auto& g : iso.generators) {
            if (g.size() != n) throw Error(ErrorCode::InvalidLattice, "generator of wrong length");
            if (!is_integral(g)) throw Error(ErrorCode::InvalidLattice, "generator " + to_string(g) + " is not in P");
            gens.push_back(to_int(g));
        }
        Sublattice x(n, gens);
        b = x.basis_matrix().transpose();
    }
    auto binv = inverse(to_rat(b));
    IntMatrix sr = to_int(*binv * to_rat(c)).transpose();
    RootDatum d(sr, b, type.to_string());
    return d;
}

namespace {

RootDatum gl_datum(int n)
{
    IntMatrix sr(n - 1, n);
    for (int i = 0; i + 1 < n; ++i) {
        sr(i, i) = 1;
        sr(i, i + 1) = -1;
    }
    RootDatum d(sr, sr, "GL" + std::to_string(n));
    IntMatrix flip(n, n);
    for (int i = 0; i < n; ++i) flip(n - 1 - i, i) = -1;
    d.preset_twists["flip"] = flip;
    return d;
}

RootDatum so_datum(int n)
{
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "SO_2n needs n >= 2");
    IntMatrix sr(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        sr(i, i) = 1;
        sr(i, i + 1) = -1;
    }
    sr(n - 1, n - 2) = 1;
    sr(n - 1, n - 1) = 1;
    RootDatum d(sr, sr, "SO" + std::to_string(2 * n));
    IntMatrix flip = IntMatrix::identity(n);
    flip(n - 1, n - 1) = -1;
    d.preset_twists["flip"] = flip;
    return d;
}

} // namespace

std::string preset_default_twist(const std::string& name)
{
    if (!name.empty() && name[0] == '2' && name.size() > 1 && std::isalpha(name[1])) return "flip";
    if (!name.empty() && name[0] == '3' && name.size() > 1 && std::isalpha(name[1])) return "triality";
    return "";
}

RootDatum preset_datum(const std::string& name_in, int rank)
{
    std::string name = name_in;
    if (!preset_default_twist(name).empty()) name = name.substr(1);
    std::smatch m;
    auto num = [&](const std::string& s) {
        if (!s.empty()) return std::stoi(s);
        if (rank <= 0) throw Error(ErrorCode::InvalidArgument, "preset " + name_in + " needs a rank");
        return rank;
    };
    RootDatum d;
    if (std::regex_match(name, m, std::regex("GL([0-9]*)"))) {
        int n = num(m[1]);
        if (n < 1) throw Error(ErrorCode::InvalidArgument, "GL_n needs n >= 1");
        d = gl_datum(n);
    } else if (std::regex_match(name, m, std::regex("SL([0-9]*)"))) {
        int n = num(m[1]);
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "SL_n needs n >= 2");
        IsogenySpec iso;
        iso.kind = IsogenySpec::SimplyConnected;
        d = build_datum(CartanType({{'A', n - 1}}), iso);
        d.set_label("SL" + std::to_string(n));
    } else if (std::regex_match(name, m, std::regex("PGL([0-9]*)"))) {
        int n = num(m[1]);
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "PGL_n needs n >= 2");
        IsogenySpec iso;
        iso.kind = IsogenySpec::Adjoint;
        d = build_datum(CartanType({{'A', n - 1}}), iso);
        d.set_label("PGL" + std::to_string(n));
    } else if (std::regex_match(name, m, std::regex("SL([0-9]+)/(?:mu)?([0-9]+)"))) {
        int n = std::stoi(m[1]), dd = std::stoi(m[2]);
        if (n < 2 || dd < 1 || n % dd != 0) throw Error(ErrorCode::InvalidLattice, "SL_n/mu_d needs d | n");
        IsogenySpec iso;
        iso.kind = IsogenySpec::Intermediate;
        RatVec g(n - 1);
        g[0] = dd;
        iso.generators.push_back(g);
        d = build_datum(CartanType({{'A', n - 1}}), iso);
        d.set_label("SL" + std::to_string(n) + "/" + std::to_string(dd));
    } else if (std::regex_match(name, m, std::regex("(Spin|PSO|SO)([0-9]*)"))) {
        int n = m[2].str().empty() ? num("") : num(m[2]) / 2;
        if (!m[2].str().empty() && num(m[2]) % 2) throw Error(ErrorCode::InvalidArgument, "only even orthogonal groups");
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "orthogonal preset needs n >= 2");
        std::string kind = m[1];
        if (kind == "SO") d = so_datum(n);
        else {
            IsogenySpec iso;
            iso.kind = kind == "Spin" ? IsogenySpec::SimplyConnected : IsogenySpec::Adjoint;
            d = build_datum(CartanType({{'D', n}}), iso);
            d.set_label(kind + std::to_string(2 * n));
        }
    } else if (std::regex_match(name, m, std::regex("([ABCDEFG])([0-9]+)(sc|ad)?"))) {
        IsogenySpec iso;
        iso.kind = m[3] == "ad" ? IsogenySpec::Adjoint : IsogenySpec::SimplyConnected;
        d = build_datum(CartanType({{m[1].str()[0], std::stoi(m[2])}}), iso);
        d.set_label(name_in);
    } else {
        throw Error(ErrorCode::ParseError, "unknown preset '" + name_in + "'");
    }
    if (!preset_default_twist(name_in).empty()) d.set_label(name_in);
    return d;
}

// ------------------------------------------------------------------- queries

std::vector<std::size_t> highest_roots(const RootDatum& d)
{
    std::vector<std::size_t> out;
    const auto& co = d.root_coefficients();
    for (const auto& comp : d.components()) {
        std::set<int> nodes(comp.nodes.begin(), comp.nodes.end());
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < d.num_positive(); ++i) {
            bool inside = true;
            for (std::size_t j = 0; j < d.semisimple_rank(); ++j)
                if (co[i][j] != 0 && !nodes.count(j)) inside = false;
            if (inside) members.push_back(i);
        }
        // dominance maximum: every coefficient at least that of any other member
        std::size_t best = members.front();
        for (auto i : members) {
            bool dom = true;
            for (auto k : members)
                for (std::size_t j = 0; j < d.semisimple_rank(); ++j)
                    if (co[k][j] > co[i][j]) dom = false;
            if (dom) {
                best = i;
                break;
            }
        }
        for (auto k : members)
            for (std::size_t j = 0; j < d.semisimple_rank(); ++j)
                if (co[k][j] > co[best][j]) throw Error(ErrorCode::Inconsistent, "no dominance maximum");
        out.push_back(best);
    }
    return out;
}

std::vector<RatVec> fundamental_weights(const RootDatum& d)
{
    std::size_t l = d.semisimple_rank();
    std::vector<RatVec> out;
    if (l == 0) return out;
    RatMatrix ci = *inverse(to_rat(d.cartan()));
    for (std::size_t j = 0; j < l; ++j) {
        RatVec w(d.rank());
        for (std::size_t k = 0; k < l; ++k)
            for (std::size_t t = 0; t < d.rank(); ++t) w[t] += ci(k, j) * d.simple_roots()(k, t);
        out.push_back(w);
    }
    return out;
}

std::vector<RatVec> fundamental_coweights(const RootDatum& d)
{
    std::size_t l = d.semisimple_rank();
    std::vector<RatVec> out;
    if (l == 0) return out;
    RatMatrix ci = *inverse(to_rat(d.cartan()));
    for (std::size_t i = 0; i < l; ++i) {
        RatVec w(d.rank());
        for (std::size_t k = 0; k < l; ++k)
            for (std::size_t t = 0; t < d.rank(); ++t) w[t] += ci(i, k) * d.simple_coroots()(k, t);
        out.push_back(w);
    }
    return out;
}

FiniteAbelianGroup fundamental_group(const RootDatum& d)
{
    if (d.semisimple_rank() == 0) return FiniteAbelianGroup();
    Sublattice q(d.rank(), [&] {
        std::vector<IntVec> g;
        for (std::size_t i = 0; i < d.semisimple_rank(); ++i) g.push_back(d.simple_coroots().row(i));
        return g;
    }());
    return quotient_group(q, saturation(q));
}

WeylGroup weyl_group(const RootDatum& d, std::size_t cap)
{
    WeylGroup w;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) w.generators.push_back(d.reflection_on_Y(i));
    std::set<IntMatrix> seen;
    IntMatrix id = IntMatrix::identity(d.rank());
    w.elements.push_back(id);
    seen.insert(id);
    for (std::size_t q = 0; q < w.elements.size(); ++q)
        for (const auto& g : w.generators) {
            IntMatrix x = g * w.elements[q];
            if (seen.insert(x).second) {
                w.elements.push_back(x);
                if (w.elements.size() > cap)
                    throw Error(ErrorCode::CapExceeded, "Weyl group exceeds cap " + std::to_string(cap) + " (" +
                                                            std::to_string(w.elements.size()) + " elements so far)");
            }
        }
    return w;
}

namespace {

std::string matrix_text(const IntMatrix& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).get_str();
    }
    return s;
}

} // namespace

std::string serialize(const RootDatum& d)
{
    std::string s = "rank: " + std::to_string(d.rank()) + "\n";
    s += "simple_roots: " + matrix_text(d.simple_roots()) + "\n";
    s += "simple_coroots: " + matrix_text(d.simple_coroots()) + "\n";
    return s;
}

} // namespace qss
