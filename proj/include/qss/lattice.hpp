#pragma once

// Exact integer/rational linear algebra on small dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qss/errors.hpp"

namespace qss {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    // rows given as vectors of equal length; `cols` only matters when `rows` is empty
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0)
    {
        Matrix m(rows.size(), rows.empty() ? cols : rows[0].size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_cols(const std::vector<std::vector<T>>& cols, std::size_t rows = 0)
    {
        return from_rows(cols, rows).transpose();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& b) const
    {
        if (cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
        Matrix c(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }
    std::vector<T> operator*(const std::vector<T>& v) const
    {
        if (cols_ != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix/vector shape mismatch");
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    Matrix operator+(const Matrix& b) const
    {
        Matrix c = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }
    Matrix operator-(const Matrix& b) const
    {
        Matrix c = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }
    bool operator==(const Matrix& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_; }
    bool operator<(const Matrix& b) const { return a_ < b.a_; }

    const std::vector<T>& data() const { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);
RatVec to_rat(const IntVec& v);
// throws NotIntegral when some entry has a denominator
IntMatrix to_int(const RatMatrix& m);
IntVec to_int(const RatVec& v);
bool is_integral(const RatVec& v);

Int det(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
// some x with A x = b, if one exists
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);
// basis of {x : A x = 0} over Q
std::vector<RatVec> nullspace(const RatMatrix& a);

Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
Int lcm_of_denominators(const RatVec& v);
std::string to_string(const Rat& q);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

struct SmithDecomposition {
    IntMatrix U, S, V;              // U * M * V = S
    std::vector<Int> factors;       // nonzero diagonal entries of S, d1 | d2 | ...
    std::size_t rank() const { return factors.size(); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Finite abelian group Z/d1 x ... x Z/dk with d1 | ... | dk, all di >= 2.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    // arbitrary cyclic orders; normalized to invariant factors
    explicit FiniteAbelianGroup(const std::vector<Int>& orders);

    const std::vector<Int>& invariants() const { return inv_; }
    Int order() const;
    Int exponent() const;
    bool trivial() const { return inv_.empty(); }
    std::string to_string() const;   // "1", "Z/2", "Z/2xZ/4"
    bool operator==(const FiniteAbelianGroup& o) const { return inv_ == o.inv_; }

private:
    std::vector<Int> inv_;
};

bool is_prime(long p);
// p = 0 means no prime; BadCharacteristic unless p is 0 or prime
void check_characteristic(long p);
FiniteAbelianGroup pprime_part(const FiniteAbelianGroup& g, long p);
Int pprime_part(Int n, long p);

// Integral lattice inside Z^n, stored as a row-Hermite basis.
class Sublattice {
public:
    Sublattice() = default;
    explicit Sublattice(std::size_t ambient) : n_(ambient) {}
    Sublattice(std::size_t ambient, const std::vector<IntVec>& generators);

    static Sublattice full(std::size_t n);

    std::size_t ambient() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<IntVec>& basis() const { return basis_; }
    IntMatrix basis_matrix() const;   // rows = basis vectors

    bool contains(const IntVec& v) const;
    bool contains(const Sublattice& l) const;
    bool operator==(const Sublattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }

private:
    std::size_t n_ = 0;
    std::vector<IntVec> basis_;
};

Sublattice kernel_lattice(const IntMatrix& m);
Sublattice image_lattice(const IntMatrix& m);
Sublattice saturation(const Sublattice& l);
Sublattice sum(const Sublattice& a, const Sublattice& b);
Sublattice intersection(const Sublattice& a, const Sublattice& b);
FiniteAbelianGroup quotient_group(const Sublattice& sub, const Sublattice& sup);
// torsion of Z^n / L
FiniteAbelianGroup torsion_of_quotient(const Sublattice& l);
std::optional<IntVec> membership(const RatVec& v, const Sublattice& l);

// Lattice in Q^n: num / den with den minimal.
class RatLattice {
public:
    RatLattice() = default;
    RatLattice(std::size_t ambient, const std::vector<RatVec>& generators);

    std::size_t ambient() const { return num_.ambient(); }
    std::size_t rank() const { return num_.rank(); }
    const Int& denominator() const { return den_; }
    const Sublattice& numerator() const { return num_; }
    std::vector<RatVec> basis() const;

    // coordinates of v in basis(); NotInSpan if v is outside the Q-span
    RatVec coordinates(const RatVec& v) const;
    bool contains(const RatVec& v) const;
    // least m > 0 with m v in the lattice
    Int order_of(const RatVec& v) const;
    bool operator==(const RatLattice& o) const { return den_ == o.den_ && num_ == o.num_; }

private:
    Int den_ = 1;
    Sublattice num_;
};

} // namespace qss
