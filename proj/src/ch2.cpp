#include "toric/ch2.hpp"

#include <algorithm>

namespace toric {

namespace {

[[noreturn]] void malformed(const Codim2Face& tau, const std::string& why) {
    std::string s;
    for (int i : tau.rays) s += (s.empty() ? "" : ",") + std::to_string(i);
    throw Error(ErrorCode::MalformedStar, "tau=[" + s + "]: " + why);
}

// The unique star cone other than `skip` that contains ray `r`; its extra ray
// besides r is returned.
int opposite_ray(const Fan& fan, const Codim2Face& tau, std::size_t skip, int r) {
    int found = -1;
    for (std::size_t c : tau.star) {
        if (c == skip) continue;
        const IndexSet extra = extra_rays(fan.max_cones()[c], tau.rays);
        if (extra.size() != 2) malformed(tau, "star cone does not contain tau");
        if (extra[0] != r && extra[1] != r) continue;
        if (found != -1) malformed(tau, "ray " + std::to_string(r) + " lies in more than two star cones");
        found = extra[0] == r ? extra[1] : extra[0];
    }
    if (found == -1) malformed(tau, "ray " + std::to_string(r) + " lies in a single star cone");
    return found;
}

// Coefficients of M c = -rhs where M has columns [lead, other, x_1..x_{d-2}].
std::vector<Integer> solve_wall(const SurfaceStar& s, const LatticeVector& lead, const LatticeVector& other,
                                const LatticeVector& rhs) {
    const Index d = lead.size();
    std::vector<LatticeVector> cols{lead, other};
    cols.insert(cols.end(), s.x.begin(), s.x.end());
    const IntegerMatrix m = columns_matrix(cols, d);
    const LatticeVector b = -rhs;
    const RationalVector c = solve_linear(m, b);
    if (c(0) != 1) {
        throw Error(ErrorCode::InconsistentWall, "leading coefficient is " + c(0).str() + ", expected 1");
    }
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(d));
    for (Index i = 0; i < d; ++i) {
        if (!is_integral(c(i))) {
            throw Error(ErrorCode::InconsistentWall, "non-integral coefficient " + c(i).str());
        }
        out.push_back(numerator(c(i)));
    }
    // Residual m.c + rhs must vanish identically.
    for (Index r = 0; r < d; ++r) {
        Integer acc = rhs(r);
        for (Index k = 0; k < d; ++k) acc += m(r, k) * out[static_cast<std::size_t>(k)];
        if (acc != 0) throw Error(ErrorCode::InconsistentWall, "nonzero residual");
    }
    return out;
}

}  // namespace

SurfaceStar build_star(const Fan& fan, const Codim2Face& tau, StarChoice choice) {
    if (tau.star.size() != 4) malformed(tau, "star has " + std::to_string(tau.star.size()) + " cones, expected 4");
    if (choice.first_cone >= 4) malformed(tau, "star cone choice out of range");

    const std::size_t sigma1 = tau.star[choice.first_cone];
    IndexSet extra = extra_rays(fan.max_cones()[sigma1], tau.rays);
    if (extra.size() != 2) malformed(tau, "first star cone does not contain tau");
    if (choice.swap_extra) std::swap(extra[0], extra[1]);

    SurfaceStar s;
    s.tau = tau;
    for (int i : tau.rays) s.x.push_back(fan.ray(i));
    s.i1 = extra[0];
    s.i3 = extra[1];
    s.i2 = opposite_ray(fan, tau, sigma1, s.i3);
    s.i4 = opposite_ray(fan, tau, sigma1, s.i1);

    // The fourth star cone must be tau + <y2, y4>.
    IndexSet last{s.i2, s.i4};
    std::sort(last.begin(), last.end());
    std::size_t accounted = 0;
    for (std::size_t c : tau.star) {
        const IndexSet e = extra_rays(fan.max_cones()[c], tau.rays);
        const bool pattern = (e == IndexSet{std::min(s.i1, s.i3), std::max(s.i1, s.i3)}) ||
                             e == last ||
                             e == IndexSet{std::min(s.i2, s.i3), std::max(s.i2, s.i3)} ||
                             e == IndexSet{std::min(s.i1, s.i4), std::max(s.i1, s.i4)};
        if (pattern) ++accounted;
    }
    if (accounted != 4 || s.i2 == s.i1 || s.i4 == s.i3 || s.i2 == s.i4) {
        malformed(tau, "star cones do not match tau+<y1,y3>, tau+<y2,y3>, tau+<y1,y4>, tau+<y2,y4>");
    }

    s.y1 = fan.ray(s.i1);
    s.y2 = fan.ray(s.i2);
    s.y3 = fan.ray(s.i3);
    s.y4 = fan.ray(s.i4);
    return s;
}

WallCoefficients wall_coefficients(const SurfaceStar& s) {
    const std::vector<Integer> first = solve_wall(s, s.y1, s.y3, s.y2);
    const std::vector<Integer> second = solve_wall(s, s.y3, s.y1, s.y4);
    WallCoefficients w;
    w.c3 = first[1];
    w.a.assign(first.begin() + 2, first.end());
    w.c1 = second[1];
    w.e.assign(second.begin() + 2, second.end());
    return w;
}

Integer ch2_value(const WallCoefficients& w) {
    Integer square_a = 0;
    Integer square_e = 0;
    Integer cross = 0;
    for (std::size_t i = 0; i < w.a.size(); ++i) {
        square_a += w.a[i] * w.a[i];
        square_e += w.e[i] * w.e[i];
        cross += w.a[i] * w.e[i];
    }
    return -w.c1 * (2 + w.c3 * w.c3 + square_a) + 2 * (w.c1 + w.c3 + cross) -
           w.c3 * (2 + w.c1 * w.c1 + square_e);
}

std::vector<SurfaceValue> scan_surfaces(const Fan& fan, bool stop_at_first_nonpositive) {
    std::vector<SurfaceValue> out;
    for (auto& face : picard_two_faces(fan)) {
        Integer v = ch2_value(wall_coefficients(build_star(fan, face)));
        const bool nonpositive = v <= 0;
        out.push_back({std::move(face), std::move(v)});
        if (stop_at_first_nonpositive && nonpositive) break;
    }
    return out;
}

Integer surface_value(const Fan& fan, const IndexSet& tau) {
    Codim2Face face{tau, {}};
    std::sort(face.rays.begin(), face.rays.end());
    for (std::size_t c = 0; c < fan.n_max_cones(); ++c) {
        if (contains(fan.max_cones()[c], face.rays)) face.star.push_back(c);
    }
    return ch2_value(wall_coefficients(build_star(fan, face)));
}

}  // namespace toric
