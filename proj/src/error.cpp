#include "swathplan/error.hpp"

namespace swathplan {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::SurfacedSeabed: return "surfaced seabed";
        case ErrorCode::BeamGrazesSeabed: return "beam grazes seabed";
        case ErrorCode::InvalidDepth: return "invalid depth";
        case ErrorCode::NoFeasibleStart: return "no feasible start";
        case ErrorCode::RegionExhausted: return "region exhausted";
        case ErrorCode::NoSolutionInBracket: return "no solution in bracket";
        case ErrorCode::DegeneratePlan: return "degenerate plan";
    }
    return "unknown error";
}

namespace {
std::string compose(ErrorCode code, const std::string& detail) {
    std::string msg(to_string(code));
    if (!detail.empty()) {
        msg += ": ";
        msg += detail;
    }
    return msg;
}
}  // namespace

SurveyError::SurveyError(ErrorCode code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

}  // namespace swathplan
