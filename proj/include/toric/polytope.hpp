#pragma once

#include "toric/exact.hpp"
#include "toric/fan.hpp"

#include <vector>

namespace toric {

/// Lattice polytope given by a list of pairwise distinct lattice points.
class LatticePolytope {
public:
    LatticePolytope(int dim, std::vector<LatticeVector> vertices);

    int dim() const { return dim_; }
    const std::vector<LatticeVector>& vertices() const { return vertices_; }

private:
    int dim_;
    std::vector<LatticeVector> vertices_;
};

/// Supporting inequality normal . x <= rhs with a primitive integer normal,
/// together with the indices of the input points lying on it.
struct Facet {
    LatticeVector normal;
    Integer rhs;
    IndexSet incidence;
};

using FacetList = std::vector<Facet>;

/// Complete irredundant facet list of conv(P), by exact beneath-beyond.
///
/// Points are inserted in input order after an initial simplex made of the
/// first d+1 affinely independent points. Coplanar points join a facet by exact
/// incidence; facets may be non-simplicial. The result is sorted by normal.
/// Throws DegeneratePolytope if P is not full-dimensional.
FacetList facet_enumeration(const LatticePolytope& p);

/// Origin strictly interior and every facet at lattice distance one.
bool is_reflexive(const LatticePolytope& p, const FacetList& facets);

/// Vertices of the polar dual: the facet normals of a reflexive polytope.
/// Throws NotReflexive otherwise.
std::vector<LatticeVector> polar_dual_vertices(const LatticePolytope& q, const FacetList& facets);

/// Normal fan of a reflexive polytope Q, i.e. the face fan of its polar dual.
/// Rays are the facet normals of Q; each vertex of Q contributes the maximal
/// cone of the normals of the facets through it.
Fan fan_from_dual(const LatticePolytope& q);

/// Face fan of a polytope P with the origin in its interior: rays are the
/// (primitivized) vertices of P in input order, maximal cones are the facets.
Fan fan_from_fan_polytope(const LatticePolytope& p);

}  // namespace toric
