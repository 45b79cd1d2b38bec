#include "toric/classifier.hpp"

#include "toric/generators.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace toric {

std::string_view to_string(Status status) {
    switch (status) {
    case Status::Ch2PositiveProjectiveSpace: return "Ch2Positive_ProjectiveSpace";
    case Status::NotCh2Positive: return "NotCh2Positive";
    case Status::Undetermined: return "Undetermined";
    }
    return "?";
}

std::string_view to_string(Fingerprint fingerprint) {
    switch (fingerprint) {
    case Fingerprint::ProjectiveSpace: return "ProjectiveSpace";
    case Fingerprint::VdPattern: return "VdPattern";
    case Fingerprint::TildeVdPattern: return "TildeVdPattern";
    }
    return "?";
}

namespace {

Integer binomial(int n, int k) {
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool closed_under_negation(const Fan& fan) {
    for (const auto& r : fan.rays()) {
        if (!fan.find_ray(-r)) return false;
    }
    return true;
}

// Everything in the V^d fingerprint except the absence of Picard-two faces.
bool vd_shape(const Fan& fan) {
    const int d = fan.dim();
    if (d < 4 || d % 2 != 0) return false;
    if (fan.n_rays() != static_cast<std::size_t>(2 * d + 2)) return false;
    if (binomial(d + 1, d / 2) * binomial(d / 2 + 1, d / 2) != fan.n_max_cones()) return false;
    return closed_under_negation(fan);
}

// Matches the fan's rays against the builtin V^d rays; on an exact match the
// builtin witness tau is translated to the fan's indices.
std::optional<IndexSet> builtin_vd_tau(const Fan& fan) {
    const int n = fan.dim() / 2;
    const auto rays = gen_rays(BuiltinFamily(Family::PseudoDelPezzoV, fan.dim()));
    std::vector<int> to_fan;
    for (const auto& r : rays) {
        auto idx = fan.find_ray(r);
        if (!idx) return std::nullopt;
        to_fan.push_back(*idx);
    }
    IndexSet tau;
    for (int i : v_d_witness_tau(n)) tau.push_back(to_fan[static_cast<std::size_t>(i)]);
    std::sort(tau.begin(), tau.end());
    return tau;
}

}  // namespace

bool detect_projective_space(const Fan& fan) {
    const int d = fan.dim();
    if (fan.n_rays() != static_cast<std::size_t>(d + 1)) return false;
    LatticeVector sum = LatticeVector::Zero(d);
    for (const auto& r : fan.rays()) sum += r;
    if (!sum.isZero()) return false;
    for (int omit = 0; omit <= d; ++omit) {
        std::vector<LatticeVector> cols;
        for (int i = 0; i <= d; ++i) {
            if (i != omit) cols.push_back(fan.ray(i));
        }
        if (abs(determinant(columns_matrix(cols, d))) != 1) return false;
    }
    return true;
}

bool detect_vd_pattern(const Fan& fan) { return vd_shape(fan) && picard_two_faces(fan).empty(); }

bool detect_tilde_vd_pattern(const Fan& fan) {
    const int d = fan.dim();
    if (d < 2 || d % 2 != 0 || fan.n_rays() != static_cast<std::size_t>(2 * d + 1)) return false;
    std::vector<LatticeVector> basis;
    std::optional<LatticeVector> unpaired;
    for (const auto& r : fan.rays()) {
        if (auto neg = fan.find_ray(-r)) {
            if (LexLess{}(r, fan.ray(*neg))) basis.push_back(r);
        } else {
            if (unpaired) return false;
            unpaired = r;
        }
    }
    if (!unpaired || basis.size() != static_cast<std::size_t>(d)) return false;
    const IntegerMatrix m = columns_matrix(basis, d);
    if (abs(determinant(m)) != 1) return false;
    const RationalVector c = solve_linear(m, *unpaired);
    for (Index i = 0; i < c.size(); ++i) {
        if (c(i) != 1 && c(i) != -1) return false;
    }
    return true;
}

ClassificationRecord classify(const Fan& fan, std::string id, ClassifyOptions options) {
    const auto start = std::chrono::steady_clock::now();
    ClassificationRecord rec;
    rec.id = std::move(id);
    rec.dim = fan.dim();
    rec.n_rays = fan.n_rays();
    rec.n_maxcones = fan.n_max_cones();

    const auto scanned = scan_surfaces(fan, options.stop_at_first_nonpositive);
    const auto witness =
        std::find_if(scanned.begin(), scanned.end(), [](const SurfaceValue& s) { return s.value <= 0; });

    if (detect_projective_space(fan)) rec.fingerprints.insert(Fingerprint::ProjectiveSpace);
    // A complete scan with no entries means there are no Picard-two faces.
    if (scanned.empty() && vd_shape(fan)) rec.fingerprints.insert(Fingerprint::VdPattern);
    if (detect_tilde_vd_pattern(fan)) rec.fingerprints.insert(Fingerprint::TildeVdPattern);

    if (witness != scanned.end()) {
        rec.status = Status::NotCh2Positive;
        rec.witness_tau = witness->face.rays;
        rec.witness_value = witness->value;
    } else if (rec.fingerprints.count(Fingerprint::ProjectiveSpace)) {
        rec.status = Status::Ch2PositiveProjectiveSpace;
    } else if (rec.fingerprints.count(Fingerprint::VdPattern)) {
        rec.status = Status::NotCh2Positive;
        rec.witness_value = v_d_closed_form(fan.dim() / 2);
        rec.witness_tau = builtin_vd_tau(fan);
    } else {
        rec.status = Status::Undetermined;
    }

    rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
    return rec;
}

BatchReport batch_classify(const std::vector<BatchItem>& items, unsigned jobs, ClassifyOptions options) {
    BatchReport report;
    report.entries.resize(items.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            BatchEntry& entry = report.entries[i];
            entry.id = items[i].id;
            try {
                const auto start = std::chrono::steady_clock::now();
                const Fan fan = items[i].load();
                require_valid(fan);
                entry.record = classify(fan, items[i].id, options);
                entry.record->runtime_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                        .count();
            } catch (const std::exception& e) {
                entry.error = e.what();
            }
        }
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, items.size()))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& e : report.entries) {
        if (!e.record) {
            ++report.summary.errors;
            continue;
        }
        switch (e.record->status) {
        case Status::Ch2PositiveProjectiveSpace: ++report.summary.positive; break;
        case Status::NotCh2Positive: ++report.summary.not_positive; break;
        case Status::Undetermined: ++report.summary.undetermined; break;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

const char* const kCsvHeader = "id,dim,n_rays,n_maxcones,status,witness_tau,witness_value,fingerprints,runtime_ms";

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string tau_string(const IndexSet& tau) {
    std::string s = "[";
    for (std::size_t i = 0; i < tau.size(); ++i) s += (i ? "," : "") + std::to_string(tau[i]);
    return s + "]";
}

std::string fingerprint_string(const std::set<Fingerprint>& fps) {
    std::string s;
    for (auto f : fps) {
        if (!s.empty()) s += ';';
        s += to_string(f);
    }
    return s;
}

nlohmann::ordered_json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

}  // namespace

std::string csv_row(const BatchEntry& entry, ReportOptions options) {
    std::ostringstream os;
    if (!entry.record) {
        os << csv_field(entry.id) << ",,,,Error,,,,";
        return os.str();
    }
    const auto& r = *entry.record;
    os << csv_field(r.id) << ',' << r.dim << ',' << r.n_rays << ',' << r.n_maxcones << ',' << to_string(r.status)
       << ',' << (r.witness_tau ? csv_field(tau_string(*r.witness_tau)) : "") << ','
       << (r.witness_value ? r.witness_value->str() : "") << ',' << fingerprint_string(r.fingerprints) << ',';
    if (options.timing) os << r.runtime_ms;
    return os.str();
}

std::string jsonl_row(const BatchEntry& entry, ReportOptions options) {
    nlohmann::ordered_json j;
    j["id"] = entry.id;
    if (!entry.record) {
        j["status"] = "Error";
        j["error"] = entry.error.value_or("");
        return j.dump();
    }
    const auto& r = *entry.record;
    j["dim"] = r.dim;
    j["n_rays"] = r.n_rays;
    j["n_maxcones"] = r.n_maxcones;
    j["status"] = std::string(to_string(r.status));
    j["witness_tau"] = r.witness_tau ? nlohmann::ordered_json(*r.witness_tau) : nlohmann::ordered_json(nullptr);
    j["witness_value"] = r.witness_value ? integer_json(*r.witness_value) : nlohmann::ordered_json(nullptr);
    auto fps = nlohmann::ordered_json::array();
    for (auto f : r.fingerprints) fps.push_back(std::string(to_string(f)));
    j["fingerprints"] = std::move(fps);
    j["runtime_ms"] = options.timing ? nlohmann::ordered_json(r.runtime_ms) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

std::string format_csv(const BatchReport& report, ReportOptions options) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& e : report.entries) out += csv_row(e, options) + "\n";
    return out;
}

std::string format_jsonl(const BatchReport& report, ReportOptions options) {
    std::string out;
    for (const auto& e : report.entries) out += jsonl_row(e, options) + "\n";
    return out;
}

}  // namespace toric
