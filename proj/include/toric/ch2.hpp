#pragma once

// Intersection of the second Chern character with torus-invariant surfaces
// of Picard number two.
//
// For a (d-2)-cone tau = <x_1..x_{d-2}> lying in exactly four maximal cones
// tau+<y1,y3>, tau+<y2,y3>, tau+<y1,y4>, tau+<y2,y4>, the two wall relations
//
//   y1 + y2 + c3*y3 + sum a_i x_i = 0      (wall tau+<y3>)
//   y3 + y4 + c1*y1 + sum e_i x_i = 0      (wall tau+<y1>)
//
// determine
//
//   2 ch2(X).S = -c1 (2 + c3^2 + |a|^2) + 2 (c1 + c3 + a.e) - c3 (2 + c1^2 + |e|^2).

#include "toric/exact.hpp"
#include "toric/fan.hpp"

#include <vector>

namespace toric {

struct SurfaceStar {
    Codim2Face tau;
    std::vector<LatticeVector> x;  // generators of tau, in index order
    LatticeVector y1, y2, y3, y4;
    int i1 = -1, i2 = -1, i3 = -1, i4 = -1;  // ray indices of y1..y4
};

struct WallCoefficients {
    Integer c3;
    std::vector<Integer> a;
    Integer c1;
    std::vector<Integer> e;
};

/// Which star cone plays sigma_1 (position in tau.star) and whether its two
/// extra rays are taken as (y1, y3) in ascending or descending index order.
struct StarChoice {
    std::size_t first_cone = 0;
    bool swap_extra = false;
};

/// Reconstructs y1..y4 for a face with a four-cone star. The default choice is
/// the lexicographically smallest star cone with y1 < y3 by ray index.
/// Throws MalformedStar if the star does not have the four-cone pattern.
SurfaceStar build_star(const Fan& fan, const Codim2Face& tau, StarChoice choice = {});

/// Solves both wall relations exactly. Throws InconsistentWall if the leading
/// coefficient is not one or a coefficient is not integral.
WallCoefficients wall_coefficients(const SurfaceStar& star);

/// 2 ch2(X).S as an exact integer.
Integer ch2_value(const WallCoefficients& w);

struct SurfaceValue {
    Codim2Face face;
    Integer value;  // 2 ch2(X).S
};

/// Values for every Picard-two face in lexicographic order of tau. With
/// stop_at_first_nonpositive the scan ends after the first value <= 0.
std::vector<SurfaceValue> scan_surfaces(const Fan& fan, bool stop_at_first_nonpositive);

/// Recomputes the value for a recorded tau (given as ray indices).
Integer surface_value(const Fan& fan, const IndexSet& tau);

}  // namespace toric
