#pragma once

#include "toric/exact.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

/// Sorted set of indices into a ray list.
using IndexSet = std::vector<int>;

/// A complete simplicial fan in N = Z^d given by its primitive ray
/// generators and its maximal cones.
///
/// Construction canonicalizes the cone list: each cone is sorted and the list
/// is ordered lexicographically, so "smallest cone index" and "lexicographically
/// smallest index set" coincide. Structural invariants (primitive distinct
/// rays, d rays per cone, indices in range, no duplicate cones) are enforced
/// here and raise InvalidFan; smoothness and the wall condition are checked
/// separately by validate_smooth / validate_walls.
class Fan {
public:
    Fan(int dim, std::vector<LatticeVector> rays, std::vector<IndexSet> max_cones);

    int dim() const { return dim_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(int i) const { return rays_[static_cast<std::size_t>(i)]; }
    const std::vector<IndexSet>& max_cones() const { return max_cones_; }

    std::size_t n_rays() const { return rays_.size(); }
    std::size_t n_max_cones() const { return max_cones_.size(); }

    /// Index of the ray equal to v, if any.
    std::optional<int> find_ray(const LatticeVector& v) const;

private:
    int dim_;
    std::vector<LatticeVector> rays_;
    std::vector<IndexSet> max_cones_;
};

/// Two fans are the same if their ray sets agree and the maximal cones agree
/// after translating indices through the ray correspondence.
bool same_fan(const Fan& a, const Fan& b);

struct SmoothnessReport {
    bool smooth = true;
    std::optional<std::size_t> offending_cone;
    Integer determinant = 1;  // determinant of the offending cone
    explicit operator bool() const { return smooth; }
};

/// Every maximal cone must be unimodular (|det| = 1).
SmoothnessReport validate_smooth(const Fan& fan);

struct WallReport {
    bool ok = true;
    std::optional<IndexSet> offending_wall;
    std::size_t cones_on_wall = 2;
    explicit operator bool() const { return ok; }
};

/// Every (d-1)-subset of a maximal cone must lie in exactly two maximal cones.
WallReport validate_walls(const Fan& fan);

/// Throws NotSmooth or WallViolation with the offending cone/wall.
void require_valid(const Fan& fan);

/// A (d-2)-dimensional cone tau together with the maximal cones containing it.
struct Codim2Face {
    IndexSet rays;                 // sorted, size d-2
    std::vector<std::size_t> star;  // indices into Fan::max_cones(), ascending
};

/// Every (d-2)-subset of every maximal cone with its full star, in
/// lexicographic order of the index sets. Throws DimensionTooSmall for d < 3.
std::vector<Codim2Face> enumerate_codim2(const Fan& fan);

/// Faces whose star has exactly four maximal cones, i.e. the torus-invariant
/// surfaces of Picard number two.
std::vector<Codim2Face> picard_two_faces(const Fan& fan);

/// Rays of a star cone not in tau, in ascending index order.
IndexSet extra_rays(const IndexSet& cone, const IndexSet& tau);

bool contains(const IndexSet& cone, const IndexSet& subset);

}  // namespace toric
