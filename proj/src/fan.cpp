#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

Fan::Fan(int dim, std::vector<LatticeVector> rays, std::vector<IndexSet> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (dim_ < 1) throw Error(ErrorCode::InvalidFan, "dimension must be positive");
    std::set<LatticeVector, LexLess> seen;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const auto& r = rays_[i];
        if (r.size() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "ray " + std::to_string(i) + " has length " +
                                                          std::to_string(r.size()));
        }
        if (!is_primitive(r)) throw Error(ErrorCode::InvalidFan, "ray " + to_string(r) + " is not primitive");
        if (!seen.insert(r).second) throw Error(ErrorCode::InvalidFan, "duplicate ray " + to_string(r));
    }
    const int n = static_cast<int>(rays_.size());
    for (auto& cone : max_cones_) {
        std::sort(cone.begin(), cone.end());
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
            throw Error(ErrorCode::InvalidFan, "cone repeats a ray index");
        }
        if (static_cast<int>(cone.size()) != dim_) {
            throw Error(ErrorCode::NonSimplicialCone,
                        "maximal cone with " + std::to_string(cone.size()) + " rays in dimension " +
                            std::to_string(dim_));
        }
        for (int idx : cone) {
            if (idx < 0 || idx >= n) throw Error(ErrorCode::InvalidFan, "ray index " + std::to_string(idx));
        }
    }
    std::sort(max_cones_.begin(), max_cones_.end());
    if (std::adjacent_find(max_cones_.begin(), max_cones_.end()) != max_cones_.end()) {
        throw Error(ErrorCode::InvalidFan, "duplicate maximal cone");
    }
}

std::optional<int> Fan::find_ray(const LatticeVector& v) const {
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (equal(rays_[i], v)) return static_cast<int>(i);
    }
    return std::nullopt;
}

bool same_fan(const Fan& a, const Fan& b) {
    if (a.dim() != b.dim() || a.n_rays() != b.n_rays() || a.n_max_cones() != b.n_max_cones()) return false;
    std::vector<int> to_b(a.n_rays());
    for (std::size_t i = 0; i < a.n_rays(); ++i) {
        auto j = b.find_ray(a.rays()[i]);
        if (!j) return false;
        to_b[i] = *j;
    }
    std::set<IndexSet> cones_b(b.max_cones().begin(), b.max_cones().end());
    for (const auto& cone : a.max_cones()) {
        IndexSet mapped;
        for (int i : cone) mapped.push_back(to_b[static_cast<std::size_t>(i)]);
        std::sort(mapped.begin(), mapped.end());
        if (!cones_b.count(mapped)) return false;
    }
    return true;
}

SmoothnessReport validate_smooth(const Fan& fan) {
    SmoothnessReport report;
    std::vector<LatticeVector> cols;
    for (std::size_t c = 0; c < fan.n_max_cones(); ++c) {
        cols.clear();
        for (int i : fan.max_cones()[c]) cols.push_back(fan.ray(i));
        Integer det = determinant(columns_matrix(cols, fan.dim()));
        if (abs(det) != 1) {
            report.smooth = false;
            report.offending_cone = c;
            report.determinant = det;
            return report;
        }
    }
    return report;
}

WallReport validate_walls(const Fan& fan) {
    std::map<IndexSet, std::size_t> walls;
    for (const auto& cone : fan.max_cones()) {
        for (std::size_t skip = 0; skip < cone.size(); ++skip) {
            IndexSet wall;
            for (std::size_t k = 0; k < cone.size(); ++k) {
                if (k != skip) wall.push_back(cone[k]);
            }
            ++walls[wall];
        }
    }
    WallReport report;
    for (const auto& [wall, count] : walls) {
        if (count != 2) {
            report.ok = false;
            report.offending_wall = wall;
            report.cones_on_wall = count;
            return report;
        }
    }
    return report;
}

void require_valid(const Fan& fan) {
    if (auto s = validate_smooth(fan); !s) {
        throw Error(ErrorCode::NotSmooth, "maximal cone " + std::to_string(*s.offending_cone) +
                                              " has determinant " + s.determinant.str());
    }
    if (auto w = validate_walls(fan); !w) {
        std::string wall;
        for (int i : *w.offending_wall) wall += (wall.empty() ? "" : ",") + std::to_string(i);
        throw Error(ErrorCode::WallViolation,
                    "wall [" + wall + "] lies in " + std::to_string(w.cones_on_wall) + " maximal cones");
    }
}

bool contains(const IndexSet& cone, const IndexSet& subset) {
    return std::includes(cone.begin(), cone.end(), subset.begin(), subset.end());
}

IndexSet extra_rays(const IndexSet& cone, const IndexSet& tau) {
    IndexSet out;
    std::set_difference(cone.begin(), cone.end(), tau.begin(), tau.end(), std::back_inserter(out));
    return out;
}

std::vector<Codim2Face> enumerate_codim2(const Fan& fan) {
    const int d = fan.dim();
    if (d < 3) {
        throw Error(ErrorCode::DimensionTooSmall, "codimension-two faces need d >= 3, got " + std::to_string(d));
    }
    std::map<IndexSet, std::vector<std::size_t>> faces;
    const auto& cones = fan.max_cones();
    for (std::size_t c = 0; c < cones.size(); ++c) {
        const auto& cone = cones[c];
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                IndexSet tau;
                tau.reserve(static_cast<std::size_t>(d - 2));
                for (int k = 0; k < d; ++k) {
                    if (k != i && k != j) tau.push_back(cone[static_cast<std::size_t>(k)]);
                }
                faces[std::move(tau)].push_back(c);
            }
        }
    }
    std::vector<Codim2Face> out;
    out.reserve(faces.size());
    for (auto& [tau, star] : faces) out.push_back({tau, std::move(star)});
    return out;
}

std::vector<Codim2Face> picard_two_faces(const Fan& fan) {
    auto all = enumerate_codim2(fan);
    std::vector<Codim2Face> out;
    for (auto& f : all) {
        if (f.star.size() == 4) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace toric
