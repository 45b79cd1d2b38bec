#pragma once

// Exact integer/rational linear algebra on Eigen dense types.
//
// Scalars are boost::multiprecision numbers; every routine here is templated
// on the scalar so the same fraction-free code runs over Integer and Rational.

#include "toric/error.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// A point of the lattice N = Z^d.
using LatticeVector = VectorX<Integer>;
using IntegerMatrix = MatrixX<Integer>;
using RationalVector = VectorX<Rational>;
using RationalMatrix = MatrixX<Rational>;

using Index = Eigen::Index;

inline LatticeVector lattice_vector(std::initializer_list<long long> coords) {
    LatticeVector v(static_cast<Index>(coords.size()));
    Index i = 0;
    for (long long c : coords) v(i++) = c;
    return v;
}

inline LatticeVector unit_vector(Index dim, Index i) {
    LatticeVector v = LatticeVector::Zero(dim);
    v(i) = 1;
    return v;
}

/// Rows are the given vectors.
IntegerMatrix rows_matrix(const std::vector<LatticeVector>& rows, Index cols);
/// Columns are the given vectors.
IntegerMatrix columns_matrix(const std::vector<LatticeVector>& cols, Index rows);

inline bool equal(const LatticeVector& a, const LatticeVector& b) {
    return a.size() == b.size() && (a.array() == b.array()).all();
}

struct LexLess {
    bool operator()(const LatticeVector& a, const LatticeVector& b) const {
        const Index n = std::min(a.size(), b.size());
        for (Index i = 0; i < n; ++i) {
            if (a(i) != b(i)) return a(i) < b(i);
        }
        return a.size() < b.size();
    }
};

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
    Integer s = 0;
    for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

/// gcd of the absolute values of the coordinates; zero for the zero vector.
Integer content(const LatticeVector& v);

bool is_primitive(const LatticeVector& v);

/// v divided by the gcd of its coordinates. Throws ZeroRay for v = 0.
LatticeVector primitive(const LatticeVector& v);

bool is_integral(const Rational& q);

std::string to_string(const LatticeVector& v);

// ---------------------------------------------------------------------------
// Fraction-free elimination
// ---------------------------------------------------------------------------

/// Row echelon form produced by Bareiss elimination. Entries of `reduced` are
/// minors of the input, so integer input stays integral throughout.
template <typename Scalar>
struct Echelon {
    MatrixX<Scalar> reduced;
    std::vector<Index> pivot_cols;
    int swaps = 0;

    Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

/// Pivoting is deterministic: the first row (in current order) with a nonzero
/// entry in the pivot column.
template <typename Derived>
Echelon<typename Derived::Scalar> fraction_free_echelon(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    Echelon<Scalar> out;
    out.reduced = input;
    MatrixX<Scalar>& a = out.reduced;
    const Index rows = a.rows();
    const Index cols = a.cols();
    Scalar prev = 1;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            a.row(p).swap(a.row(r));
            ++out.swaps;
        }
        for (Index i = r + 1; i < rows; ++i) {
            for (Index j = c + 1; j < cols; ++j) {
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    return fraction_free_echelon(m).rank();
}

/// Exact determinant by Bareiss elimination; integer input never leaves Z.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::NonSquare,
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const Index n = m.rows();
    if (n == 0) return Scalar(1);
    auto e = fraction_free_echelon(m);
    if (e.rank() < n) return Scalar(0);
    Scalar det = e.reduced(n - 1, n - 1);
    return (e.swaps % 2 == 0) ? det : Scalar(-det);
}

/// Exact solution c of M c = b. Elimination is fraction-free; only the final
/// back-substitution divides. Throws SingularSystem when M is not invertible.
template <typename DerivedM, typename DerivedB>
RationalVector solve_linear(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedM::Scalar;
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::NonSquare,
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const Index n = m.rows();
    if (b.size() != n) {
        throw Error(ErrorCode::ShapeMismatch, "right-hand side has length " + std::to_string(b.size()));
    }
    MatrixX<Scalar> augmented(n, n + 1);
    augmented.leftCols(n) = m;
    for (Index i = 0; i < n; ++i) augmented(i, n) = Scalar(b(i));

    auto e = fraction_free_echelon(augmented);
    if (e.rank() < n || e.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1) {
        throw Error(ErrorCode::SingularSystem, "matrix of size " + std::to_string(n) + " is singular");
    }
    const auto& u = e.reduced;
    RationalVector x(n);
    for (Index i = n - 1; i >= 0; --i) {
        Rational acc = Rational(u(i, n));
        for (Index j = i + 1; j < n; ++j) acc -= Rational(u(i, j)) * x(j);
        x(i) = acc / Rational(u(i, i));
    }
    return x;
}

/// Affine rank of a point set: the dimension of its affine hull (-1 if empty).
Index affine_rank(const std::vector<LatticeVector>& points);

/// Primitive integer generator of the kernel of a matrix whose rows span a
/// hyperplane (rank = cols - 1). Sign is unspecified.
LatticeVector kernel_vector(const IntegerMatrix& rows);

}  // namespace toric
