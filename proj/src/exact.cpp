#include "toric/exact.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <sstream>

namespace toric {

IntegerMatrix rows_matrix(const std::vector<LatticeVector>& rows, Index cols) {
    IntegerMatrix m(static_cast<Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i));
        m.row(static_cast<Index>(i)) = rows[i].transpose();
    }
    return m;
}

IntegerMatrix columns_matrix(const std::vector<LatticeVector>& cols, Index rows) {
    IntegerMatrix m(rows, static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(ErrorCode::ShapeMismatch, "column " + std::to_string(j));
        m.col(static_cast<Index>(j)) = cols[j];
    }
    return m;
}

Integer content(const LatticeVector& v) {
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0) g = boost::multiprecision::gcd(g, Integer(abs(v(i))));
        if (g == 1) break;
    }
    return g;
}

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

LatticeVector primitive(const LatticeVector& v) {
    const Integer g = content(v);
    if (g == 0) throw Error(ErrorCode::ZeroRay, "cannot primitivize the zero vector");
    if (g == 1) return v;
    LatticeVector out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
    return out;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

std::string to_string(const LatticeVector& v) {
    std::ostringstream os;
    os << '(';
    for (Index i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v(i);
    }
    os << ')';
    return os.str();
}

Index affine_rank(const std::vector<LatticeVector>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    const Index d = points.front().size();
    IntegerMatrix diffs(static_cast<Index>(points.size() - 1), d);
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.row(static_cast<Index>(i - 1)) = (points[i] - points.front()).transpose();
    }
    return rank(diffs);
}

LatticeVector kernel_vector(const IntegerMatrix& rows) {
    const Index d = rows.cols();
    auto e = fraction_free_echelon(rows);
    if (e.rank() != d - 1) {
        throw Error(ErrorCode::DegeneratePolytope,
                    "expected corank one, got rank " + std::to_string(e.rank()) + " in dimension " +
                        std::to_string(d));
    }
    // Generalized cross product of the d-1 independent echelon rows.
    const IntegerMatrix basis = e.reduced.topRows(d - 1);
    LatticeVector normal(d);
    IntegerMatrix minor(d - 1, d - 1);
    for (Index j = 0; j < d; ++j) {
        for (Index c = 0, k = 0; c < d; ++c) {
            if (c == j) continue;
            minor.col(k++) = basis.col(c);
        }
        Integer det = determinant(minor);
        normal(j) = (j % 2 == 0) ? det : Integer(-det);
    }
    return primitive(normal);
}

}  // namespace toric
