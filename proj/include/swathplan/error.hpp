#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swathplan {

enum class ErrorCode {
    InvalidArgument,
    SurfacedSeabed,
    BeamGrazesSeabed,
    InvalidDepth,
    NoFeasibleStart,
    RegionExhausted,
    NoSolutionInBracket,
    DegeneratePlan,
};

/// Short stable tag for an error code, e.g. "surfaced seabed".
std::string_view to_string(ErrorCode code);

class SurveyError : public std::runtime_error {
public:
    SurveyError(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace swathplan
