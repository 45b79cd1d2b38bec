#pragma once

// Reading polytopes and fans from disk.
//
// Native format (UTF-8, '#' starts a comment, whitespace separated):
//
//   kind fan-polytope|dual-polytope|fan
//   dim <d>
//   rays|vertices <m>
//   <m lines of d integers>
//   maxcones <k>                      # fan kind only
//   <k lines of d zero-based ray indices>
//
// Polymake property files are read best-effort: only the VERTICES property
// is extracted, from a plain "VERTICES" section, an XML
// <property name="VERTICES"> element, or a JSON "VERTICES" array. Rows are
// homogeneous with leading coordinate 1, which is stripped.

#include "toric/fan.hpp"
#include "toric/polytope.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace toric {

enum class InputKind { DualPolytope, FanPolytope, Fan };
enum class InputFormat { Native, Polymake };

std::string_view to_string(InputKind kind);
InputKind parse_kind(std::string_view name);
InputFormat parse_format(std::string_view name);

struct InputRecord {
    std::string id;
    InputKind kind = InputKind::DualPolytope;
    std::variant<LatticePolytope, Fan> payload;

    int dim() const;
};

/// Builds the fan a record describes: the normal fan for a dual polytope,
/// the face fan for a fan polytope, the payload itself for a fan.
Fan to_fan(const InputRecord& record);

/// For polytope records of unknown orientation: reinterprets the vertices as
/// a dual polytope, then as a fan polytope, and keeps the first reading whose
/// fan is smooth with valid walls. Fan records are returned unchanged.
/// Throws NotSmooth if neither reading works.
InputRecord resolve_kind(InputRecord record);

InputRecord parse_native(std::string_view text, std::string id);
InputRecord read_native(const std::filesystem::path& path);

std::string format_native(const InputRecord& record);
void write_native(const InputRecord& record, const std::filesystem::path& path);

/// Yields a DualPolytope record, the convention of the smooth reflexive
/// polytope database. Use `kind` to reinterpret the vertices as a fan polytope.
InputRecord parse_polymake_vertices(std::string_view text, std::string id,
                                    InputKind kind = InputKind::DualPolytope);
InputRecord read_polymake_vertices(const std::filesystem::path& path,
                                   InputKind kind = InputKind::DualPolytope);

struct BatchInput {
    std::string id;
    std::filesystem::path path;
    std::optional<InputRecord> record;
    std::optional<std::string> error;
};

/// Reads every regular file under `dir` (recursively) in filename order.
/// In strict mode the first failure is rethrown; otherwise it is recorded on
/// its entry. The id of each record is its path relative to `dir`.
std::vector<BatchInput> batch_reader(const std::filesystem::path& dir, std::optional<InputKind> kind,
                                     InputFormat format, bool strict);

/// Lists the files batch_reader would read, in the same order.
std::vector<std::filesystem::path> list_input_files(const std::filesystem::path& dir);

/// Reads a single file in the given format. Native files declare their own
/// kind and a conflicting `kind` is a SyntaxError. Polymake files default
/// to DualPolytope.
InputRecord read_input(const std::filesystem::path& path, std::optional<InputKind> kind, InputFormat format,
                       std::string id);

}  // namespace toric
