// toric-ch2: classify, scan, generate, validate and dualize smooth toric fans.
//
// Exit codes: 0 success, 1 record errors under --strict (or a failed
// validation), 2 usage errors and unreadable inputs.

#include "toric/ch2.hpp"
#include "toric/classifier.hpp"
#include "toric/generators.hpp"
#include "toric/ingest.hpp"
#include "toric/polytope.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace toric;

namespace {

constexpr int kOk = 0;
constexpr int kRecordError = 1;
constexpr int kUsage = 2;

struct InputOptions {
    std::vector<std::string> inputs;
    std::string kind;  // empty: as declared (native) or dual-polytope (polymake)
    std::string format = "native";
    std::string gen;
    int dim = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<InputKind> kind_option(const InputOptions& in) {
    if (in.kind.empty() || in.kind == "auto") return std::nullopt;
    return parse_kind(in.kind);
}

InputRecord load_record(const fs::path& path, const InputOptions& in, std::string id) {
    InputRecord rec = read_input(path, kind_option(in), parse_format(in.format), std::move(id));
    return in.kind == "auto" ? resolve_kind(std::move(rec)) : rec;
}

Fan load_fan(const fs::path& path, const InputOptions& in, std::string id) {
    return to_fan(load_record(path, in, std::move(id)));
}

// A single fan from --gen/--dim or from exactly one input file.
Fan single_fan(const InputOptions& in) {
    if (!in.gen.empty()) {
        if (!in.inputs.empty()) throw UsageError("--gen and an input file are mutually exclusive");
        if (in.dim <= 0) throw UsageError("--gen needs --dim");
        return gen_fan(BuiltinFamily(parse_family(in.gen), in.dim));
    }
    if (in.inputs.size() != 1) throw UsageError("expected exactly one input file");
    const fs::path path = in.inputs.front();
    if (!fs::is_regular_file(path)) throw UsageError("cannot read input " + path.string());
    return load_fan(path, in, path.filename().string());
}

std::vector<BatchItem> batch_items(const InputOptions& in) {
    std::vector<BatchItem> items;
    if (!in.gen.empty()) {
        if (in.dim <= 0) throw UsageError("--gen needs --dim");
        const BuiltinFamily family(parse_family(in.gen), in.dim);
        items.push_back({std::string(to_string(family.family())) + std::to_string(in.dim),
                         [family] { return gen_fan(family); }});
    }
    for (const auto& input : in.inputs) {
        const fs::path path = input;
        if (fs::is_directory(path)) {
            for (const auto& rel : list_input_files(path)) {
                items.push_back({rel.generic_string(), [path = path / rel, id = rel.generic_string(), in] {
                                     return load_fan(path, in, id);
                                 }});
            }
        } else if (fs::is_regular_file(path)) {
            items.push_back({input, [path, input, in] { return load_fan(path, in, input); }});
        } else {
            throw UsageError("cannot read input " + input);
        }
    }
    if (items.empty() && in.inputs.empty()) throw UsageError("no input given (use --input or --gen)");
    return items;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("TORIC_CH2_JOBS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring TORIC_CH2_JOBS=" << env << "\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string tau_string(const IndexSet& tau) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < tau.size(); ++i) os << (i ? "," : "") << tau[i];
    os << ']';
    return os.str();
}

void add_input_options(CLI::App* cmd, InputOptions& in, bool positional) {
    if (positional) {
        cmd->add_option("input", in.inputs, "Input file");
    } else {
        cmd->add_option("-i,--input", in.inputs, "Input file or directory (repeatable)");
    }
    cmd->add_option("-k,--kind", in.kind, "Input kind")
        ->check(CLI::IsMember({"dual-polytope", "fan-polytope", "fan", "auto"}));
    cmd->add_option("-f,--format", in.format, "Input format")->check(CLI::IsMember({"native", "polymake"}));
}

void add_gen_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--gen", in.gen, "Builtin family instead of an input file")
        ->check(CLI::IsMember({"pd", "tilde-v", "v"}));
    cmd->add_option("--dim", in.dim, "Dimension for --gen")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second Chern character positivity for smooth toric Fano varieties"};
    app.require_subcommand(1);

    InputOptions in;
    std::string out_path;
    std::string out_format = "csv";
    unsigned jobs = default_jobs();
    bool strict = false;
    bool no_early_stop = false;
    bool no_timing = false;

    auto* classify_cmd = app.add_subcommand("classify", "Classify fans and write a CSV or JSON-lines report");
    add_input_options(classify_cmd, in, false);
    add_gen_options(classify_cmd, in);
    classify_cmd->add_option("-o,--out", out_path, "Report path (default: standard output)");
    classify_cmd->add_option("--out-format", out_format, "Report format")->check(CLI::IsMember({"csv", "jsonl"}));
    classify_cmd->add_option("-j,--jobs", jobs, "Worker threads (default: $TORIC_CH2_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--strict", strict, "Exit with status 1 if any record fails");
    classify_cmd->add_flag("--no-early-stop", no_early_stop, "Scan every surface instead of stopping at a witness");
    classify_cmd->add_flag("--no-timing", no_timing, "Leave the runtime_ms column empty");

    auto* scan_cmd = app.add_subcommand("scan", "List every Picard-two surface with 2ch2.S");
    add_input_options(scan_cmd, in, true);
    add_gen_options(scan_cmd, in);

    std::string family_name;
    auto* gen_cmd = app.add_subcommand("gen", "Write a builtin fan in native format");
    gen_cmd->add_option("family", family_name, "pd, tilde-v or v")
        ->required()
        ->check(CLI::IsMember({"pd", "tilde-v", "v"}));
    gen_cmd->add_option("--dim", in.dim, "Dimension")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("-o,--out", out_path, "Output path (default: standard output)");

    auto* validate_cmd = app.add_subcommand("validate", "Check smoothness and the two-cones-per-wall condition");
    add_input_options(validate_cmd, in, true);
    add_gen_options(validate_cmd, in);

    auto* dual_cmd = app.add_subcommand("dual", "Write the polar dual of a reflexive polytope");
    add_input_options(dual_cmd, in, true);
    dual_cmd->add_option("-o,--out", out_path, "Output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            const auto items = batch_items(in);
            const auto report = batch_classify(items, jobs, {!no_early_stop});
            const ReportOptions ropts{!no_timing};
            write_output(out_path, out_format == "csv" ? format_csv(report, ropts) : format_jsonl(report, ropts));
            const auto& s = report.summary;
            std::cerr << report.entries.size() << " records: " << s.positive << " Ch2Positive_ProjectiveSpace, "
                      << s.not_positive << " NotCh2Positive, " << s.undetermined << " Undetermined, " << s.errors
                      << " errors\n";
            for (const auto& e : report.entries) {
                if (e.error) std::cerr << e.id << ": " << *e.error << "\n";
            }
            return strict && s.errors ? kRecordError : kOk;
        }
        if (scan_cmd->parsed()) {
            const Fan fan = single_fan(in);
            require_valid(fan);
            const auto values = scan_surfaces(fan, false);
            if (values.empty()) std::cout << "no Picard-two surfaces\n";
            for (const auto& v : values) std::cout << "tau=" << tau_string(v.face.rays) << " value=" << v.value << "\n";
            return kOk;
        }
        if (gen_cmd->parsed()) {
            const BuiltinFamily family(parse_family(family_name), in.dim);
            InputRecord rec{std::string(to_string(family.family())) + std::to_string(in.dim), InputKind::Fan,
                            gen_fan(family)};
            write_output(out_path, format_native(rec));
            return kOk;
        }
        if (validate_cmd->parsed()) {
            const Fan fan = single_fan(in);
            const auto smooth = validate_smooth(fan);
            const auto walls = validate_walls(fan);
            std::cout << "smooth: ";
            if (smooth) {
                std::cout << "yes";
            } else {
                std::cout << "no (cone " << *smooth.offending_cone << ", det " << smooth.determinant << ")";
            }
            std::cout << ", walls: ";
            if (walls) {
                std::cout << "ok";
            } else {
                std::cout << "violated (wall " << tau_string(*walls.offending_wall) << " in " << walls.cones_on_wall
                          << " cones)";
            }
            std::cout << "\n";
            return smooth && walls ? kOk : kRecordError;
        }
        if (dual_cmd->parsed()) {
            if (in.inputs.size() != 1) throw UsageError("expected exactly one input file");
            const fs::path path = in.inputs.front();
            if (!fs::is_regular_file(path)) throw UsageError("cannot read input " + path.string());
            const InputRecord rec = load_record(path, in, path.filename().string());
            const auto* p = std::get_if<LatticePolytope>(&rec.payload);
            if (!p) throw UsageError("dual needs a polytope, got a fan");
            const LatticePolytope dual(p->dim(), polar_dual_vertices(*p, facet_enumeration(*p)));
            const InputKind kind =
                rec.kind == InputKind::DualPolytope ? InputKind::FanPolytope : InputKind::DualPolytope;
            write_output(out_path, format_native(InputRecord{rec.id, kind, dual}));
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Io ? kUsage : kRecordError;
    }
    return kUsage;
}
