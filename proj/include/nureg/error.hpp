#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nureg {

enum class ErrorCode {
    LoopEdge,
    VertexOutOfRange,
    NotBlockGraph,
    NotInduced,
    NotDisjoint,
    BadOrientation,
    BadOrder,
    NotAPath,
    NotDoip,
    UnitIdeal,
    TooLarge,
    NoCutVertex,
    DegreeNotOne,
    NeighborDegreeTooSmall,
    SpecInvariantViolated,
    SingletonPath,
    ParseError,
    ConfigError,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::vector<int> indices = {});

    ErrorCode code() const noexcept { return code_; }
    // offending path indices or vertices, when the error names any
    const std::vector<int>& indices() const noexcept { return indices_; }

private:
    ErrorCode code_;
    std::vector<int> indices_;
};

}  // namespace nureg
