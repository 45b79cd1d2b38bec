#pragma once

// Test-only oracles and fixture builders. Nothing here calls into the hull,
// elimination or wall-solving code it is used to check: determinants are
// cofactor expansions over long long, hulls are brute force over d-subsets,
// and fans are assembled combinatorially.

#include "toric/error.hpp"
#include "toric/exact.hpp"
#include "toric/fan.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace toric::testing {

using Row = std::vector<long long>;

/// Code of the toric::Error thrown by f, or nullopt if f returns normally.
template <class F>
std::optional<ErrorCode> error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline LatticeVector to_lattice(const Row& r) {
    LatticeVector v(static_cast<Index>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) v(static_cast<Index>(i)) = r[i];
    return v;
}

inline Row to_row(const LatticeVector& v) {
    Row r;
    for (Index i = 0; i < v.size(); ++i) r.push_back(static_cast<long long>(v(i)));
    return r;
}

inline std::vector<LatticeVector> to_lattice(const std::vector<Row>& rows) {
    std::vector<LatticeVector> out;
    for (const auto& r : rows) out.push_back(to_lattice(r));
    return out;
}

/// Laplace expansion along the first row.
inline long long cofactor_det(const std::vector<Row>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<Row> minor;
        for (std::size_t i = 1; i < n; ++i) {
            Row r;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) r.push_back(m[i][k]);
            }
            minor.push_back(std::move(r));
        }
        const long long term = m[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct OracleFacet {
    Row normal;
    long long rhs;
    std::vector<int> incidence;
    bool operator<(const OracleFacet& o) const { return std::tie(normal, rhs) < std::tie(o.normal, o.rhs); }
};

/// Facets by brute force: every affinely independent d-subset spans a
/// candidate hyperplane; keep those with all points weakly on one side.
inline std::vector<OracleFacet> brute_force_facets(const std::vector<Row>& pts) {
    const std::size_t n = pts.size();
    const std::size_t d = pts.front().size();
    std::set<OracleFacet> found;
    std::vector<std::size_t> idx(d);
    // Iterate d-subsets via a selection mask.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(d), true);
    do {
        std::vector<std::size_t> sel;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask[i]) sel.push_back(i);
        }
        // Normal via cofactors of the (d-1) x d difference matrix.
        std::vector<Row> diffs;
        for (std::size_t k = 1; k < d; ++k) {
            Row r(d);
            for (std::size_t c = 0; c < d; ++c) r[c] = pts[sel[k]][c] - pts[sel[0]][c];
            diffs.push_back(r);
        }
        Row normal(d);
        bool nonzero = false;
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Row> minor;
            for (const auto& r : diffs) {
                Row m;
                for (std::size_t c = 0; c < d; ++c) {
                    if (c != j) m.push_back(r[c]);
                }
                minor.push_back(m);
            }
            long long det = cofactor_det(minor);
            normal[j] = (j % 2 == 0) ? det : -det;
            nonzero = nonzero || normal[j] != 0;
        }
        if (!nonzero) continue;
        long long g = 0;
        for (long long c : normal) g = gcd_ll(g, c);
        for (long long& c : normal) c /= g;
        long long rhs = 0;
        for (std::size_t c = 0; c < d; ++c) rhs += normal[c] * pts[sel[0]][c];
        bool above = false, below = false;
        for (const auto& p : pts) {
            long long h = 0;
            for (std::size_t c = 0; c < d; ++c) h += normal[c] * p[c];
            above = above || h > rhs;
            below = below || h < rhs;
        }
        if (above && below) continue;
        if (above) {
            for (long long& c : normal) c = -c;
            rhs = -rhs;
        }
        OracleFacet f{normal, rhs, {}};
        for (std::size_t i = 0; i < n; ++i) {
            long long h = 0;
            for (std::size_t c = 0; c < d; ++c) h += normal[c] * pts[i][c];
            if (h == rhs) f.incidence.push_back(static_cast<int>(i));
        }
        found.insert(f);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return {found.begin(), found.end()};
}

/// Coordinates of v in the basis given by the columns `basis`, by Cramer's
/// rule over cofactor determinants. Requires a unimodular basis.
inline Row cramer_coordinates(const std::vector<Row>& basis, const Row& v) {
    const std::size_t d = v.size();
    auto det_with = [&](std::size_t replace) {
        std::vector<Row> m(d, Row(d));
        for (std::size_t c = 0; c < d; ++c) {
            const Row& col = c == replace ? v : basis[c];
            for (std::size_t r = 0; r < d; ++r) m[r][c] = col[r];
        }
        return cofactor_det(m);
    };
    const long long det = det_with(d);
    Row out(d);
    for (std::size_t k = 0; k < d; ++k) out[k] = det_with(k) / det;
    return out;
}

/// 2 ch2(X).S computed on the surface itself: 2 ch2 = sum over rays of D^2,
/// and each D restricted to S is expanded in the invariant curves of S.
/// Self-intersections come from the projected surface fan (any number of
/// rays); D_x restricted to S follows from the linear relation of the dual
/// basis vector of x.
inline long long oracle_surface_value(const Fan& fan, const IndexSet& tau) {
    const std::size_t d = static_cast<std::size_t>(fan.dim());
    std::vector<int> link;
    int first = -1, second = -1;
    for (const auto& c : fan.max_cones()) {
        if (!std::includes(c.begin(), c.end(), tau.begin(), tau.end())) continue;
        IndexSet e;
        std::set_difference(c.begin(), c.end(), tau.begin(), tau.end(), std::back_inserter(e));
        if (first == -1) first = e[0], second = e[1];
        for (int r : e) {
            if (std::find(link.begin(), link.end(), r) == link.end()) link.push_back(r);
        }
    }
    if (link.size() < 3) throw std::logic_error("oracle: star too small");
    std::vector<Row> basis;
    for (int i : tau) basis.push_back(to_row(fan.ray(i)));
    basis.push_back(to_row(fan.ray(first)));
    basis.push_back(to_row(fan.ray(second)));

    struct Curve {
        Row coords;  // in the basis above
        long long u, v;
    };
    std::vector<Curve> curves;
    for (int r : link) {
        Row c = cramer_coordinates(basis, to_row(fan.ray(r)));
        curves.push_back({c, c[d - 2], c[d - 1]});
    }
    // Counter-clockwise order of the projected rays.
    auto half = [](const Curve& c) { return c.v < 0 || (c.v == 0 && c.u < 0); };
    std::sort(curves.begin(), curves.end(), [&](const Curve& a, const Curve& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return a.u * b.v - a.v * b.u > 0;
    });
    const std::size_t k = curves.size();
    // u_prev + u_next = b u_i  =>  C_i^2 = -b.
    std::vector<long long> self(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Curve& prev = curves[(i + k - 1) % k];
        const Curve& next = curves[(i + 1) % k];
        const long long su = prev.u + next.u, sv = prev.v + next.v;
        const long long b = curves[i].u != 0 ? su / curves[i].u : sv / curves[i].v;
        if (su != b * curves[i].u || sv != b * curves[i].v) throw std::logic_error("oracle: surface not smooth");
        self[i] = -b;
    }
    auto meet = [&](std::size_t i, std::size_t j) -> long long {
        if (i == j) return self[i];
        return (j == (i + 1) % k || i == (j + 1) % k) ? 1 : 0;
    };
    long long total = 0;
    for (std::size_t i = 0; i < k; ++i) total += self[i];
    // D_{x_j}|S = -sum_i coords_j(r_i) C_i.
    for (std::size_t j = 0; j + 2 < d; ++j) {
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                total += curves[a].coords[j] * curves[b].coords[j] * meet(a, b);
            }
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Fan builders
// ---------------------------------------------------------------------------

/// Complete 2-dimensional fan from rays listed in cyclic order.
inline Fan cyclic_fan_2d(const std::vector<Row>& rays) {
    std::vector<IndexSet> cones;
    const int n = static_cast<int>(rays.size());
    for (int i = 0; i < n; ++i) cones.push_back({i, (i + 1) % n});
    return Fan(2, to_lattice(rays), std::move(cones));
}

inline Fan projective_space(int d) {
    std::vector<Row> rays;
    for (int i = 0; i < d; ++i) {
        Row r(static_cast<std::size_t>(d), 0);
        r[static_cast<std::size_t>(i)] = 1;
        rays.push_back(r);
    }
    rays.push_back(Row(static_cast<std::size_t>(d), -1));
    std::vector<IndexSet> cones;
    for (int omit = 0; omit <= d; ++omit) {
        IndexSet c;
        for (int i = 0; i <= d; ++i) {
            if (i != omit) c.push_back(i);
        }
        cones.push_back(c);
    }
    return Fan(d, to_lattice(rays), std::move(cones));
}

/// The five toric del Pezzo surfaces: P2, P1xP1, F1, S7, S6.
inline std::vector<Fan> del_pezzo_surfaces() {
    return {
        cyclic_fan_2d({{1, 0}, {0, 1}, {-1, -1}}),
        cyclic_fan_2d({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
        cyclic_fan_2d({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}),
        cyclic_fan_2d({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
        cyclic_fan_2d({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
    };
}

/// Product fan: rays (r, 0) then (0, s); cones are unions.
inline Fan product(const Fan& a, const Fan& b) {
    const int d = a.dim() + b.dim();
    std::vector<LatticeVector> rays;
    for (const auto& r : a.rays()) {
        LatticeVector v = LatticeVector::Zero(d);
        v.head(a.dim()) = r;
        rays.push_back(v);
    }
    for (const auto& s : b.rays()) {
        LatticeVector v = LatticeVector::Zero(d);
        v.tail(b.dim()) = s;
        rays.push_back(v);
    }
    const int shift = static_cast<int>(a.n_rays());
    std::vector<IndexSet> cones;
    for (const auto& ca : a.max_cones()) {
        for (const auto& cb : b.max_cones()) {
            IndexSet c = ca;
            for (int i : cb) c.push_back(i + shift);
            cones.push_back(c);
        }
    }
    return Fan(d, std::move(rays), std::move(cones));
}

/// P(O + O(a_1) + ... + O(a_r)) over P^m: base rays e_1..e_m and
/// (-sum e_i, a), fiber rays f_1..f_r and -sum f_j.
inline Fan projective_bundle(int m, const std::vector<int>& twists) {
    const int r = static_cast<int>(twists.size());
    const int d = m + r;
    std::vector<Row> rays;
    for (int i = 0; i < m; ++i) {
        Row v(static_cast<std::size_t>(d), 0);
        v[static_cast<std::size_t>(i)] = 1;
        rays.push_back(v);
    }
    Row last(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < m; ++i) last[static_cast<std::size_t>(i)] = -1;
    for (int j = 0; j < r; ++j) last[static_cast<std::size_t>(m + j)] = twists[static_cast<std::size_t>(j)];
    rays.push_back(last);
    for (int j = 0; j < r; ++j) {
        Row v(static_cast<std::size_t>(d), 0);
        v[static_cast<std::size_t>(m + j)] = 1;
        rays.push_back(v);
    }
    Row fiber_last(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < r; ++j) fiber_last[static_cast<std::size_t>(m + j)] = -1;
    rays.push_back(fiber_last);
    std::vector<IndexSet> cones;
    for (int ob = 0; ob <= m; ++ob) {
        for (int of = 0; of <= r; ++of) {
            IndexSet c;
            for (int i = 0; i <= m; ++i) {
                if (i != ob) c.push_back(i);
            }
            for (int j = 0; j <= r; ++j) {
                if (j != of) c.push_back(m + 1 + j);
            }
            cones.push_back(c);
        }
    }
    return Fan(d, to_lattice(rays), std::move(cones));
}

/// Image of a fan under a lattice automorphism with a relabelling of rays.
inline Fan transform(const Fan& fan, const IntegerMatrix& g, const std::vector<int>& perm) {
    std::vector<LatticeVector> rays(fan.n_rays());
    for (std::size_t i = 0; i < fan.n_rays(); ++i) {
        rays[static_cast<std::size_t>(perm[i])] = g.lazyProduct(fan.rays()[i]);
    }
    std::vector<IndexSet> cones;
    for (const auto& c : fan.max_cones()) {
        IndexSet m;
        for (int i : c) m.push_back(perm[static_cast<std::size_t>(i)]);
        cones.push_back(m);
    }
    return Fan(fan.dim(), std::move(rays), std::move(cones));
}

/// Random unimodular matrix: product of elementary shears and a signed permutation.
inline IntegerMatrix random_unimodular(int d, std::mt19937& rng, int shears = 6) {
    IntegerMatrix g = IntegerMatrix::Identity(d, d);
    std::uniform_int_distribution<int> pick(0, d - 1);
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int s = 0; s < shears; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        g.row(i) += Integer(coef(rng)) * g.row(j);
    }
    std::vector<int> p(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng);
    IntegerMatrix out(d, d);
    for (int i = 0; i < d; ++i) {
        out.row(i) = g.row(p[static_cast<std::size_t>(i)]);
        if (coef(rng) < 0) out.row(i) = -out.row(i);
    }
    return out;
}

inline std::vector<int> random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace toric::testing
