#pragma once

#include "toric/ch2.hpp"
#include "toric/fan.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class Status { Ch2PositiveProjectiveSpace, NotCh2Positive, Undetermined };
enum class Fingerprint { ProjectiveSpace, VdPattern, TildeVdPattern };

std::string_view to_string(Status status);
std::string_view to_string(Fingerprint fingerprint);

struct ClassificationRecord {
    std::string id;
    int dim = 0;
    std::size_t n_rays = 0;
    std::size_t n_maxcones = 0;
    Status status = Status::Undetermined;
    std::optional<IndexSet> witness_tau;
    std::optional<Integer> witness_value;  // 2 ch2(X).S
    std::set<Fingerprint> fingerprints;
    std::int64_t runtime_ms = 0;
};

/// d+1 rays summing to zero, every d-subset unimodular.
bool detect_projective_space(const Fan& fan);

/// Fingerprint of V^d: even d, 2d+2 rays closed under negation, no
/// Picard-two surfaces, and C(d+1,d/2)*C(d/2+1,d/2) maximal cones. Not an
/// isomorphism test.
bool detect_vd_pattern(const Fan& fan);

/// Fingerprint of V~^d: even d, 2d+1 rays consisting of d antipodal pairs
/// +-v_i forming a lattice basis plus one ray u = sum s_i v_i with s_i = +-1.
bool detect_tilde_vd_pattern(const Fan& fan);

struct ClassifyOptions {
    bool stop_at_first_nonpositive = true;
};

/// Verdict for a validated fan with d >= 3.
ClassificationRecord classify(const Fan& fan, std::string id = {}, ClassifyOptions options = {});

/// One batch input: produces a fan, or throws.
struct BatchItem {
    std::string id;
    std::function<Fan()> load;
};

struct BatchEntry {
    std::string id;
    std::optional<ClassificationRecord> record;
    std::optional<std::string> error;
};

struct BatchSummary {
    std::size_t positive = 0;
    std::size_t not_positive = 0;
    std::size_t undetermined = 0;
    std::size_t errors = 0;
};

struct BatchReport {
    std::vector<BatchEntry> entries;  // input order
    BatchSummary summary;
};

/// Classifies every item on `jobs` worker threads. Each item is loaded,
/// validated (smoothness and walls) and classified; failures are recorded
/// per entry. Output order is input order regardless of `jobs`.
BatchReport batch_classify(const std::vector<BatchItem>& items, unsigned jobs, ClassifyOptions options = {});

struct ReportOptions {
    bool timing = true;
};

extern const char* const kCsvHeader;

std::string csv_row(const BatchEntry& entry, ReportOptions options = {});
std::string jsonl_row(const BatchEntry& entry, ReportOptions options = {});
std::string format_csv(const BatchReport& report, ReportOptions options = {});
std::string format_jsonl(const BatchReport& report, ReportOptions options = {});

}  // namespace toric
