#include "toric/generators.hpp"

#include "toric/polytope.hpp"

#include <algorithm>

namespace toric {

std::string_view to_string(Family family) {
    switch (family) {
    case Family::ProjectiveSpace: return "pd";
    case Family::PseudoDelPezzoTilde: return "tilde-v";
    case Family::PseudoDelPezzoV: return "v";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "pd" || name == "projective") return Family::ProjectiveSpace;
    if (name == "tilde-v" || name == "vtilde") return Family::PseudoDelPezzoTilde;
    if (name == "v") return Family::PseudoDelPezzoV;
    throw Error(ErrorCode::SyntaxError, "unknown family '" + std::string(name) + "' (expected pd, tilde-v or v)");
}

BuiltinFamily::BuiltinFamily(Family family, int dim) : family_(family), dim_(dim) {
    if (family == Family::ProjectiveSpace) {
        if (dim < 1) throw Error(ErrorCode::DimensionTooSmall, "P^d needs d >= 1");
        return;
    }
    if (dim % 2 != 0) throw Error(ErrorCode::OddDimension, "pseudo-symmetric families need even d, got " +
                                                               std::to_string(dim));
    if (dim < 2) throw Error(ErrorCode::DimensionTooSmall, "pseudo-symmetric families need d >= 2");
}

std::vector<LatticeVector> gen_rays(const BuiltinFamily& family) {
    const int d = family.dim();
    std::vector<LatticeVector> rays;
    for (int i = 0; i < d; ++i) rays.push_back(unit_vector(d, i));
    rays.push_back(LatticeVector::Constant(d, Integer(-1)));
    if (family.family() == Family::ProjectiveSpace) return rays;

    for (int i = 0; i < d; ++i) rays.push_back(-unit_vector(d, i));
    if (family.family() == Family::PseudoDelPezzoV) rays.push_back(LatticeVector::Constant(d, Integer(1)));
    return rays;
}

namespace {

void subsets(int n, int k, int start, IndexSet& current, std::vector<IndexSet>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int i = start; i < n; ++i) {
        current.push_back(i);
        subsets(n, k, i + 1, current, out);
        current.pop_back();
    }
}

std::vector<IndexSet> subsets(int n, int k) {
    std::vector<IndexSet> out;
    IndexSet current;
    subsets(n, k, 0, current, out);
    return out;
}

}  // namespace

Fan v_fan_explicit(int dim) {
    const BuiltinFamily family(Family::PseudoDelPezzoV, dim);
    const int n = dim / 2;
    const int m = 2 * n + 1;  // x_i has index i-1, y_j has index m+j-1
    std::vector<IndexSet> cones;
    for (const auto& xs : subsets(m, n)) {
        for (const auto& ys : subsets(m, n)) {
            IndexSet common;
            std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(common));
            if (!common.empty()) continue;
            IndexSet cone = xs;
            for (int j : ys) cone.push_back(m + j);
            cones.push_back(std::move(cone));
        }
    }
    return Fan(dim, gen_rays(family), std::move(cones));
}

Fan gen_fan(const BuiltinFamily& family) {
    const int d = family.dim();
    switch (family.family()) {
    case Family::ProjectiveSpace: {
        std::vector<IndexSet> cones;
        for (int omit = 0; omit <= d; ++omit) {
            IndexSet cone;
            for (int i = 0; i <= d; ++i) {
                if (i != omit) cone.push_back(i);
            }
            cones.push_back(std::move(cone));
        }
        return Fan(d, gen_rays(family), std::move(cones));
    }
    case Family::PseudoDelPezzoTilde:
        return fan_from_fan_polytope(LatticePolytope(d, gen_rays(family)));
    case Family::PseudoDelPezzoV:
        return v_fan_explicit(d);
    }
    throw Error(ErrorCode::InvalidFan, "unknown family");
}

Integer v_d_closed_form(int n) {
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "closed form needs n >= 2, got " + std::to_string(n));
    return Integer(-6) + Integer(2 * n - 2) * -2;
}

IndexSet v_d_witness_tau(int n) {
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "closed form needs n >= 2, got " + std::to_string(n));
    const int m = 2 * n + 1;
    IndexSet tau;
    for (int i = 1; i <= n - 1; ++i) tau.push_back(i - 1);
    for (int j = n; j <= 2 * n - 2; ++j) tau.push_back(m + j - 1);
    return tau;
}

}  // namespace toric
