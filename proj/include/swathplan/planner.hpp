#pragma once

// Greedy west-to-east layout of north-south survey lines over a rectangular
// region whose seabed deepens westward. Positions x are meters east of the
// west boundary.

#include <cstddef>
#include <optional>
#include <vector>

#include "swathplan/error.hpp"
#include "swathplan/geometry.hpp"

namespace swathplan {

inline constexpr double kDefaultOverlapTarget = 0.10;

/// Upper slack on the achieved overlap of each placed line.
inline constexpr double kOverlapWindow = 1e-4;

struct SurveyRegion {
    double width_ew_m = 0.0;
    double length_ns_m = 0.0;
    double center_depth_m = 0.0;
    Angle slope;  // deep side is west

    void validate() const;
};

/// Cross-track depth profile of a region: depth = west_edge_depth - x tan(slope).
struct DepthProfile {
    double west_edge_depth_m = 0.0;
    double edge_offset_d1_m = 0.0;  // west-edge depth minus center depth
    Angle slope;
    double width_ew_m = 0.0;
};

struct LinePlacement {
    double x_m = 0.0;
    double depth_m = 0.0;
    double swath_width_m = 0.0;  // slope-measured
    std::optional<double> overlap_with_previous;
};

struct SurveyPlan {
    std::vector<LinePlacement> placements;
    double line_length_m = 0.0;
    double total_track_nm = 0.0;

    std::size_t line_count() const { return placements.size(); }
};

/// Raised by plan_survey() with whatever lines were placed before the failure.
class PlanningError : public SurveyError {
public:
    PlanningError(const SurveyError& cause, SurveyPlan partial)
        : SurveyError(cause), partial_(std::move(partial)) {}

    const SurveyPlan& partial_plan() const noexcept { return partial_; }

private:
    SurveyPlan partial_;
};

DepthProfile derive_profile(const SurveyRegion& region);

/// Throws SurveyError(SurfacedSeabed) when the depth at x is not positive.
double depth_at_x(const DepthProfile& profile, double x_m);

/// Swath of a north-south line at x. The cross-track dip is the full slope.
SwathCrossSection swath_at_x(const DepthProfile& profile, const TransducerSpec& xdcr, double x_m);

HorizontalFootprint footprint_at_x(const DepthProfile& profile, const TransducerSpec& xdcr,
                                   double x_m);

/// Overlap of two adjacent swaths from their spacing and mean width:
/// spacing = (1 - eta) * (w_prev + w_next) / 2.
double overlap_ratio(double spacing_m, double width_prev_m, double width_next_m);

/// Position where the downhill swath edge lands on the west boundary.
double first_line_position(const DepthProfile& profile, const TransducerSpec& xdcr);

/// Largest x east of x_prev whose swath overlaps the previous one by at least
/// eta_target; the achieved ratio lies in [eta_target, eta_target + kOverlapWindow].
double next_line_position(const DepthProfile& profile, const TransducerSpec& xdcr, double x_prev,
                          double eta_target);

/// Places lines from the deep west edge until a shallow-side swath edge reaches
/// the east boundary. Throws PlanningError carrying the partial plan.
SurveyPlan plan_survey(const SurveyRegion& region, const TransducerSpec& xdcr,
                       double eta_target = kDefaultOverlapTarget);

}  // namespace swathplan
