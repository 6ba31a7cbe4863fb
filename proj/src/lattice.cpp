#include "qss/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qss {

const char* error_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::NotCrystallographic: return "NotCrystallographic";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Inconsistent: return "Inconsistent";
    }
    return "Error";
}

RatMatrix to_rat(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

RatVec to_rat(const IntVec& v)
{
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

IntMatrix to_int(const RatMatrix& m)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw Error(ErrorCode::NotIntegral, "matrix entry " + to_string(m(i, j)));
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

IntVec to_int(const RatVec& v)
{
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw Error(ErrorCode::NotIntegral, "vector entry " + to_string(v[i]));
        r[i] = v[i].get_num();
    }
    return r;
}

bool is_integral(const RatVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q.get_den() == 1; });
}

namespace {

// Row echelon form over Q; returns pivot columns.
std::vector<std::size_t> echelon(RatMatrix& a)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
        std::size_t p = r;
        while (p < a.rows() && a(p, j) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
        Rat inv = 1 / a(r, j);
        for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, j) == 0) continue;
            Rat f = a(i, j);
            for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
        }
        piv.push_back(j);
        ++r;
    }
    return piv;
}

} // namespace

Int det(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "det of non-square matrix");
    RatMatrix a = to_rat(m);
    std::size_t n = a.rows();
    Rat d = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && a(p, j) == 0) ++p;
        if (p == n) return 0;
        if (p != j) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(j, k));
            d = -d;
        }
        d *= a(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            if (a(i, j) == 0) continue;
            Rat f = a(i, j) / a(j, j);
            for (std::size_t k = j; k < n; ++k) a(i, k) -= f * a(j, k);
        }
    }
    return d.get_num();
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix a = m;
    return echelon(a).size();
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    std::size_t n = m.rows();
    if (n != m.cols()) return std::nullopt;
    RatMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    auto piv = echelon(a);
    if (piv.size() < n || piv.back() >= n) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
    return inv;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b)
{
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = echelon(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    RatVec x(a.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
    return x;
}

std::vector<RatVec> nullspace(const RatMatrix& m)
{
    RatMatrix a = m;
    auto piv = echelon(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto j : piv) is_piv[j] = true;
    std::vector<RatVec> out;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        RatVec v(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

Rat dot(const RatVec& a, const RatVec& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int lcm_of_denominators(const RatVec& v)
{
    Int l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const RatVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

std::string to_string(const IntVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

// ---------------------------------------------------------------- Smith form

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
}

// row i -= f * row j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Int& f)
{
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(j, k);
}

void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Int& f)
{
    for (std::size_t k = 0; k < a.rows(); ++k) a(k, i) -= f * a(k, j);
}

Int fdiv(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix a = m;
    IntMatrix U = IntMatrix::identity(R), V = IntMatrix::identity(C);
    std::size_t t = 0;
    while (t < std::min(R, C)) {
        // smallest nonzero entry of the lower-right block
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < best)) {
                    found = true;
                    best = abs(a(i, j));
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        swap_rows(a, t, pi);
        swap_rows(U, t, pi);
        swap_cols(a, t, pj);
        swap_cols(V, t, pj);

        bool dirty = false;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (a(i, t) == 0) continue;
            Int q = fdiv(a(i, t), a(t, t));
            add_row(a, i, t, q);
            add_row(U, i, t, q);
            if (a(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            if (a(t, j) == 0) continue;
            Int q = fdiv(a(t, j), a(t, t));
            add_col(a, j, t, q);
            add_col(V, j, t, q);
            if (a(t, j) != 0) dirty = true;
        }
        if (dirty) continue;   // a smaller remainder appeared, pivot again

        // divisibility: fold an offending row into row t
        bool divides = true;
        for (std::size_t i = t + 1; i < R && divides; ++i)
            for (std::size_t j = t + 1; j < C; ++j)
                if (a(i, j) % a(t, t) != 0) {
                    add_row(a, t, i, Int(-1));
                    add_row(U, t, i, Int(-1));
                    divides = false;
                    break;
                }
        if (!divides) continue;

        if (a(t, t) < 0) {
            for (std::size_t k = 0; k < C; ++k) a(t, k) = -a(t, k);
            for (std::size_t k = 0; k < R; ++k) U(t, k) = -U(t, k);
        }
        ++t;
    }
    SmithDecomposition d{U, a, V, {}};
    for (std::size_t i = 0; i < std::min(R, C); ++i)
        if (a(i, i) != 0) d.factors.push_back(a(i, i));
    return d;
}

// ------------------------------------------------------------ finite groups

FiniteAbelianGroup::FiniteAbelianGroup(const std::vector<Int>& orders)
{
    for (const auto& o : orders)
        if (o == 0) throw Error(ErrorCode::NotFinite, "cyclic factor of infinite order");
    // diagonal SNF of the cyclic orders
    std::size_t k = orders.size();
    IntMatrix d(k, k);
    for (std::size_t i = 0; i < k; ++i) d(i, i) = orders[i];
    for (const auto& f : smith_normal_form(d).factors)
        if (f > 1) inv_.push_back(f);
}

Int FiniteAbelianGroup::order() const
{
    Int o = 1;
    for (const auto& f : inv_) o *= f;
    return o;
}

Int FiniteAbelianGroup::exponent() const { return inv_.empty() ? Int(1) : inv_.back(); }

std::string FiniteAbelianGroup::to_string() const
{
    if (inv_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < inv_.size(); ++i) s += (i ? "xZ/" : "Z/") + inv_[i].get_str();
    return s;
}

bool is_prime(long p)
{
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void check_characteristic(long p)
{
    if (p != 0 && !is_prime(p)) throw Error(ErrorCode::BadCharacteristic, "p=" + std::to_string(p) + " is neither 0 nor prime");
}

Int pprime_part(Int n, long p)
{
    check_characteristic(p);
    if (p == 0 || n == 0) return n;
    while (n % p == 0) n /= p;
    return n;
}

FiniteAbelianGroup pprime_part(const FiniteAbelianGroup& g, long p)
{
    check_characteristic(p);
    std::vector<Int> out;
    for (const auto& f : g.invariants()) out.push_back(pprime_part(f, p));
    return FiniteAbelianGroup(out);
}

// --------------------------------------------------------------- sublattices

namespace {

std::vector<IntVec> hermite_rows(std::vector<IntVec> rows, std::size_t n)
{
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < rows.size(); ++j) {
        while (true) {
            std::size_t p = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][j] != 0 && (p == rows.size() || abs(rows[i][j]) < abs(rows[p][j]))) p = i;
            if (p == rows.size()) break;
            std::swap(rows[r], rows[p]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][j] == 0) continue;
                Int q = fdiv(rows[i][j], rows[r][j]);
                for (std::size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < rows.size() && rows[r][j] != 0) {
            if (rows[r][j] < 0)
                for (auto& x : rows[r]) x = -x;
            for (std::size_t i = 0; i < r; ++i) {
                Int q = fdiv(rows[i][j], rows[r][j]);
                if (q != 0)
                    for (std::size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[r][k];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

} // namespace

Sublattice::Sublattice(std::size_t ambient, const std::vector<IntVec>& generators) : n_(ambient)
{
    for (const auto& g : generators)
        if (g.size() != n_) throw Error(ErrorCode::InvalidArgument, "generator of wrong length");
    basis_ = hermite_rows(generators, n_);
}

Sublattice Sublattice::full(std::size_t n)
{
    std::vector<IntVec> e;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec v(n);
        v[i] = 1;
        e.push_back(v);
    }
    return Sublattice(n, e);
}

IntMatrix Sublattice::basis_matrix() const { return IntMatrix::from_rows(basis_, n_); }

bool Sublattice::contains(const IntVec& v) const { return membership(to_rat(v), *this).has_value(); }

bool Sublattice::contains(const Sublattice& l) const
{
    for (const auto& b : l.basis())
        if (!contains(b)) return false;
    return true;
}

Sublattice kernel_lattice(const IntMatrix& m)
{
    auto d = smith_normal_form(m);
    std::vector<IntVec> gens;
    for (std::size_t j = d.rank(); j < m.cols(); ++j) gens.push_back(d.V.col(j));
    return Sublattice(m.cols(), gens);
}

Sublattice image_lattice(const IntMatrix& m)
{
    std::vector<IntVec> gens;
    for (std::size_t j = 0; j < m.cols(); ++j) gens.push_back(m.col(j));
    return Sublattice(m.rows(), gens);
}

Sublattice saturation(const Sublattice& l)
{
    if (l.rank() == 0) return l;
    Sublattice perp = kernel_lattice(l.basis_matrix());
    return kernel_lattice(perp.basis_matrix());
}

Sublattice sum(const Sublattice& a, const Sublattice& b)
{
    auto g = a.basis();
    g.insert(g.end(), b.basis().begin(), b.basis().end());
    return Sublattice(a.ambient(), g);
}

Sublattice intersection(const Sublattice& a, const Sublattice& b)
{
    // x A = y B  <=>  (x, -y) in the left kernel of [A; B]
    std::size_t ka = a.rank(), kb = b.rank();
    IntMatrix m(a.ambient(), ka + kb);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t k = 0; k < a.ambient(); ++k) m(k, i) = a.basis()[i][k];
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t k = 0; k < a.ambient(); ++k) m(k, ka + i) = b.basis()[i][k];
    Sublattice ker = kernel_lattice(m);
    std::vector<IntVec> gens;
    for (const auto& c : ker.basis()) {
        IntVec v(a.ambient());
        for (std::size_t i = 0; i < ka; ++i)
            for (std::size_t k = 0; k < a.ambient(); ++k) v[k] += c[i] * a.basis()[i][k];
        gens.push_back(v);
    }
    return Sublattice(a.ambient(), gens);
}

std::optional<IntVec> membership(const RatVec& v, const Sublattice& l)
{
    if (v.size() != l.ambient()) throw Error(ErrorCode::InvalidArgument, "vector of wrong length");
    RatMatrix bt = to_rat(l.basis_matrix()).transpose();
    auto x = solve(bt, v);
    if (!x || !is_integral(*x)) return std::nullopt;
    return to_int(*x);
}

FiniteAbelianGroup quotient_group(const Sublattice& sub, const Sublattice& sup)
{
    if (sub.rank() != sup.rank()) throw Error(ErrorCode::NotFinite, "sublattice has smaller rank");
    IntMatrix coords(sub.rank(), sup.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto c = membership(to_rat(sub.basis()[i]), sup);
        if (!c) throw Error(ErrorCode::NotContained, "sublattice not contained in superlattice");
        for (std::size_t j = 0; j < sup.rank(); ++j) coords(i, j) = (*c)[j];
    }
    return FiniteAbelianGroup(smith_normal_form(coords).factors);
}

FiniteAbelianGroup torsion_of_quotient(const Sublattice& l)
{
    return FiniteAbelianGroup(smith_normal_form(l.basis_matrix()).factors);
}

// ----------------------------------------------------------- rational lattices

RatLattice::RatLattice(std::size_t ambient, const std::vector<RatVec>& generators)
{
    for (const auto& g : generators) {
        if (g.size() != ambient) throw Error(ErrorCode::InvalidArgument, "generator of wrong length");
        Int l = lcm_of_denominators(g);
        mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), l.get_mpz_t());
    }
    std::vector<IntVec> gens;
    for (const auto& g : generators) {
        IntVec v(ambient);
        for (std::size_t i = 0; i < ambient; ++i) {
            Rat x = g[i] * den_;
            v[i] = x.get_num();
        }
        gens.push_back(v);
    }
    num_ = Sublattice(ambient, gens);
}

std::vector<RatVec> RatLattice::basis() const
{
    std::vector<RatVec> out;
    for (const auto& b : num_.basis()) {
        RatVec v(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
            v[i] = Rat(b[i], den_);
            v[i].canonicalize();
        }
        out.push_back(v);
    }
    return out;
}

RatVec RatLattice::coordinates(const RatVec& v) const
{
    RatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * den_;
    RatMatrix bt = to_rat(num_.basis_matrix()).transpose();
    auto x = solve(bt, w);
    if (!x) throw Error(ErrorCode::NotInSpan, "vector " + to_string(v) + " outside lattice span");
    return *x;
}

bool RatLattice::contains(const RatVec& v) const
{
    RatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * den_;
    return membership(w, num_).has_value();
}

Int RatLattice::order_of(const RatVec& v) const { return lcm_of_denominators(coordinates(v)); }

} // namespace qss
