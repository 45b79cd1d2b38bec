#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

LatticePolytope::LatticePolytope(int dim, std::vector<LatticeVector> vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ < 1) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
    std::set<LatticeVector, LexLess> seen;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].size() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "vertex " + std::to_string(i) + " has length " +
                                                          std::to_string(vertices_[i].size()));
        }
        if (!seen.insert(vertices_[i]).second) {
            throw Error(ErrorCode::DegeneratePolytope, "repeated vertex " + to_string(vertices_[i]));
        }
    }
}

namespace {

class BeneathBeyond {
public:
    explicit BeneathBeyond(const LatticePolytope& p) : points_(p.vertices()), d_(p.dim()) {}

    FacetList run() {
        const std::vector<int> simplex = initial_simplex();
        interior_sum_ = LatticeVector::Zero(d_);
        for (int i : simplex) interior_sum_ += points_[static_cast<std::size_t>(i)];
        interior_scale_ = d_ + 1;
        processed_ = simplex;

        for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
            IndexSet support;
            for (std::size_t k = 0; k < simplex.size(); ++k) {
                if (k != omit) support.push_back(simplex[k]);
            }
            facets_.push_back(make_facet(support));
        }

        std::vector<bool> in_simplex(points_.size(), false);
        for (int i : simplex) in_simplex[static_cast<std::size_t>(i)] = true;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!in_simplex[i]) insert(static_cast<int>(i));
        }

        std::sort(facets_.begin(), facets_.end(),
                  [](const Facet& a, const Facet& b) { return LexLess{}(a.normal, b.normal); });
        return std::move(facets_);
    }

private:
    const LatticeVector& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

    std::vector<int> initial_simplex() const {
        std::vector<int> chosen;
        std::vector<LatticeVector> chosen_points;
        for (std::size_t i = 0; i < points_.size() && static_cast<int>(chosen.size()) < d_ + 1; ++i) {
            chosen_points.push_back(points_[i]);
            if (affine_rank(chosen_points) == static_cast<Index>(chosen_points.size()) - 1) {
                chosen.push_back(static_cast<int>(i));
            } else {
                chosen_points.pop_back();
            }
        }
        if (static_cast<int>(chosen.size()) < d_ + 1) {
            throw Error(ErrorCode::DegeneratePolytope,
                        "affine hull has dimension " + std::to_string(static_cast<int>(chosen.size()) - 1) +
                            " < " + std::to_string(d_));
        }
        return chosen;
    }

    // Hyperplane through the support points, oriented so the interior point
    // lies strictly below; incidence is every processed point on it.
    Facet make_facet(const IndexSet& support) const {
        const LatticeVector& base = point(support.front());
        IntegerMatrix diffs(static_cast<Index>(support.size() - 1), d_);
        for (std::size_t k = 1; k < support.size(); ++k) {
            diffs.row(static_cast<Index>(k - 1)) = (point(support[k]) - base).transpose();
        }
        Facet f;
        f.normal = kernel_vector(diffs);
        f.rhs = dot(f.normal, base);
        if (dot(f.normal, interior_sum_) > interior_scale_ * f.rhs) {
            f.normal = -f.normal;
            f.rhs = -f.rhs;
        }
        for (int i : processed_) {
            if (dot(f.normal, point(i)) == f.rhs) f.incidence.push_back(i);
        }
        std::sort(f.incidence.begin(), f.incidence.end());
        return f;
    }

    bool is_ridge(const IndexSet& shared) const {
        if (static_cast<int>(shared.size()) < d_ - 1) return false;
        std::vector<LatticeVector> pts;
        pts.reserve(shared.size());
        for (int i : shared) pts.push_back(point(i));
        return affine_rank(pts) == d_ - 2;
    }

    void insert(int idx) {
        const LatticeVector& p = point(idx);
        std::vector<std::size_t> visible;
        std::vector<std::size_t> coplanar;
        std::vector<std::size_t> below;
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            Integer h = dot(facets_[f].normal, p);
            if (h > facets_[f].rhs) {
                visible.push_back(f);
            } else if (h == facets_[f].rhs) {
                coplanar.push_back(f);
            } else {
                below.push_back(f);
            }
        }
        processed_.push_back(idx);

        std::map<LatticeVector, Facet, LexLess> created;
        if (!visible.empty()) {
            for (std::size_t fv : visible) {
                for (std::size_t fb : below) {
                    IndexSet shared;
                    std::set_intersection(facets_[fv].incidence.begin(), facets_[fv].incidence.end(),
                                          facets_[fb].incidence.begin(), facets_[fb].incidence.end(),
                                          std::back_inserter(shared));
                    if (!is_ridge(shared)) continue;
                    shared.push_back(idx);
                    Facet nf = make_facet(shared);
                    created.emplace(nf.normal, std::move(nf));
                }
            }
        }

        for (std::size_t fc : coplanar) {
            auto& inc = facets_[fc].incidence;
            inc.insert(std::upper_bound(inc.begin(), inc.end(), idx), idx);
        }
        if (visible.empty()) return;

        std::vector<Facet> next;
        next.reserve(facets_.size() - visible.size() + created.size());
        std::size_t vi = 0;
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            if (vi < visible.size() && visible[vi] == f) {
                ++vi;
                continue;
            }
            next.push_back(std::move(facets_[f]));
        }
        for (auto& [normal, facet] : created) next.push_back(std::move(facet));
        facets_ = std::move(next);
    }

    const std::vector<LatticeVector>& points_;
    int d_;
    LatticeVector interior_sum_;
    Integer interior_scale_;
    std::vector<int> processed_;
    std::vector<Facet> facets_;
};

}  // namespace

FacetList facet_enumeration(const LatticePolytope& p) { return BeneathBeyond(p).run(); }

bool is_reflexive(const LatticePolytope& p, const FacetList& facets) {
    if (facets.empty()) return false;
    for (const auto& f : facets) {
        if (f.normal.size() != p.dim() || f.rhs != 1 || !is_primitive(f.normal)) return false;
    }
    return true;
}

std::vector<LatticeVector> polar_dual_vertices(const LatticePolytope& q, const FacetList& facets) {
    if (!is_reflexive(q, facets)) throw Error(ErrorCode::NotReflexive, "polytope is not reflexive");
    std::vector<LatticeVector> out;
    out.reserve(facets.size());
    for (const auto& f : facets) out.push_back(f.normal);
    return out;
}

Fan fan_from_dual(const LatticePolytope& q) {
    const FacetList facets = facet_enumeration(q);
    std::vector<LatticeVector> rays = polar_dual_vertices(q, facets);

    std::vector<IndexSet> through(q.vertices().size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
        for (int v : facets[f].incidence) through[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
    }
    std::vector<IndexSet> cones;
    for (std::size_t v = 0; v < through.size(); ++v) {
        IndexSet& cone = through[v];
        // Points that are not vertices of Q (fewer than d independent facet
        // normals through them) contribute no cone.
        if (static_cast<int>(cone.size()) < q.dim()) continue;
        std::vector<LatticeVector> normals;
        for (int f : cone) normals.push_back(rays[static_cast<std::size_t>(f)]);
        if (rank(rows_matrix(normals, q.dim())) < q.dim()) continue;
        if (static_cast<int>(cone.size()) != q.dim()) {
            throw Error(ErrorCode::NonSimplicialCone, "vertex " + to_string(q.vertices()[v]) + " lies on " +
                                                          std::to_string(cone.size()) + " facets");
        }
        cones.push_back(std::move(cone));
    }
    return Fan(q.dim(), std::move(rays), std::move(cones));
}

Fan fan_from_fan_polytope(const LatticePolytope& p) {
    const FacetList facets = facet_enumeration(p);
    for (const auto& f : facets) {
        if (f.rhs <= 0) {
            throw Error(ErrorCode::OriginNotInterior, "facet with normal " + to_string(f.normal) +
                                                          " has right-hand side " + f.rhs.str());
        }
    }
    std::vector<LatticeVector> rays;
    rays.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) rays.push_back(primitive(v));
    std::vector<IndexSet> cones;
    cones.reserve(facets.size());
    for (const auto& f : facets) {
        if (static_cast<int>(f.incidence.size()) != p.dim()) {
            throw Error(ErrorCode::NonSimplicialCone, "facet with normal " + to_string(f.normal) + " has " +
                                                          std::to_string(f.incidence.size()) + " vertices");
        }
        cones.push_back(f.incidence);
    }
    return Fan(p.dim(), std::move(rays), std::move(cones));
}

}  // namespace toric
