#include "nureg/error.hpp"

namespace nureg {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::NotBlockGraph: return "NotBlockGraph";
        case ErrorCode::NotInduced: return "NotInduced";
        case ErrorCode::NotDisjoint: return "NotDisjoint";
        case ErrorCode::BadOrientation: return "BadOrientation";
        case ErrorCode::BadOrder: return "BadOrder";
        case ErrorCode::NotAPath: return "NotAPath";
        case ErrorCode::NotDoip: return "NotDoip";
        case ErrorCode::UnitIdeal: return "UnitIdeal";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NoCutVertex: return "NoCutVertex";
        case ErrorCode::DegreeNotOne: return "DegreeNotOne";
        case ErrorCode::NeighborDegreeTooSmall: return "NeighborDegreeTooSmall";
        case ErrorCode::SpecInvariantViolated: return "SpecInvariantViolated";
        case ErrorCode::SingletonPath: return "SingletonPath";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<int> indices)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      indices_(std::move(indices)) {}

}  // namespace nureg
