#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
    ZeroRay,
    NonSquare,
    ShapeMismatch,
    SingularSystem,
    DegeneratePolytope,
    NotReflexive,
    OriginNotInterior,
    NonSimplicialCone,
    InvalidFan,
    NotSmooth,
    WallViolation,
    DimensionTooSmall,
    MalformedStar,
    InconsistentWall,
    OddDimension,
    SyntaxError,
    NonIntegerToken,
    DimensionMismatch,
    VerticesMissing,
    NotAffineVertex,
    Io,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroRay: return "ZeroRay";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NonSimplicialCone: return "NonSimplicialCone";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::WallViolation: return "WallViolation";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::MalformedStar: return "MalformedStar";
    case ErrorCode::InconsistentWall: return "InconsistentWall";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonIntegerToken: return "NonIntegerToken";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::VerticesMissing: return "VerticesMissing";
    case ErrorCode::NotAffineVertex: return "NotAffineVertex";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI output stays greppable.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace toric
