#include "swathplan/planner.hpp"

#include <cmath>
#include <sstream>

#include "swathplan/bisection.hpp"

namespace swathplan {

namespace {

// Hard stop for the greedy loop; a feasible plan over any sane region is far shorter.
constexpr std::size_t kMaxLines = 1'000'000;

// Slack on the east-boundary test so an edge landing on the boundary up to
// rounding counts as reaching it.
constexpr double kEdgeTolerance = 1e-6;

std::string describe_x(double x_m) {
    std::ostringstream os;
    os << "x = " << x_m << " m";
    return os.str();
}

}  // namespace

void SurveyRegion::validate() const {
    if (!(width_ew_m > 0.0) || !std::isfinite(width_ew_m)) {
        throw SurveyError(ErrorCode::InvalidArgument, "east-west width must be positive");
    }
    if (!(length_ns_m > 0.0) || !std::isfinite(length_ns_m)) {
        throw SurveyError(ErrorCode::InvalidArgument, "north-south length must be positive");
    }
    if (!(center_depth_m > 0.0) || !std::isfinite(center_depth_m)) {
        throw SurveyError(ErrorCode::InvalidDepth, "center depth must be positive");
    }
    if (!(slope.deg() >= 0.0 && slope.deg() < 90.0)) {
        throw SurveyError(ErrorCode::InvalidArgument, "slope angle must lie in [0, 90) degrees");
    }
}

DepthProfile derive_profile(const SurveyRegion& region) {
    region.validate();
    DepthProfile profile;
    profile.slope = region.slope;
    profile.width_ew_m = region.width_ew_m;
    profile.edge_offset_d1_m = 0.5 * region.width_ew_m * std::tan(region.slope.rad());
    profile.west_edge_depth_m = region.center_depth_m + profile.edge_offset_d1_m;
    return profile;
}

double depth_at_x(const DepthProfile& profile, double x_m) {
    const double depth = profile.west_edge_depth_m - x_m * std::tan(profile.slope.rad());
    if (!(depth > 0.0)) {
        std::ostringstream os;
        os << "depth " << depth << " m at " << describe_x(x_m);
        throw SurveyError(ErrorCode::SurfacedSeabed, os.str());
    }
    return depth;
}

SwathCrossSection swath_at_x(const DepthProfile& profile, const TransducerSpec& xdcr, double x_m) {
    return swath_cross_section(depth_at_x(profile, x_m), profile.slope, xdcr);
}

HorizontalFootprint footprint_at_x(const DepthProfile& profile, const TransducerSpec& xdcr,
                                   double x_m) {
    return horizontal_footprint(swath_at_x(profile, xdcr, x_m), profile.slope);
}

double overlap_ratio(double spacing_m, double width_prev_m, double width_next_m) {
    return 1.0 - spacing_m / (0.5 * (width_prev_m + width_next_m));
}

double first_line_position(const DepthProfile& profile, const TransducerSpec& xdcr) {
    xdcr.validate();
    const double cos_slope = std::cos(profile.slope.rad());
    const double tan_slope = std::tan(profile.slope.rad());

    // True while the downhill swath edge still spills past x = 0.
    auto spills_west = [&](double x) {
        if (profile.west_edge_depth_m - x * tan_slope <= 0.0) {
            return false;
        }
        const SwathCrossSection cs = swath_at_x(profile, xdcr, x);
        return x < cs.half_deep_m * cos_slope;
    };

    // Surfaces a grazing geometry as its own error before bisecting.
    (void)swath_cross_section(profile.west_edge_depth_m, profile.slope, xdcr);

    if (spills_west(profile.width_ew_m)) {
        throw SurveyError(ErrorCode::NoFeasibleStart,
                          "the swath edge cannot reach the west boundary inside the region");
    }
    return bisect_last_true(0.0, profile.width_ew_m, spills_west);
}

double next_line_position(const DepthProfile& profile, const TransducerSpec& xdcr, double x_prev,
                          double eta_target) {
    if (!(eta_target > 0.0 && eta_target < 1.0)) {
        throw SurveyError(ErrorCode::InvalidArgument, "overlap target must lie in (0, 1)");
    }
    const double w_prev = swath_at_x(profile, xdcr, x_prev).total_width_m;
    const double tan_slope = std::tan(profile.slope.rad());

    auto surfaced = [&](double x) { return profile.west_edge_depth_m - x * tan_slope <= 0.0; };
    auto meets_target = [&](double x) {
        if (surfaced(x)) {
            return false;
        }
        const double w_next = swath_at_x(profile, xdcr, x).total_width_m;
        return overlap_ratio(x - x_prev, w_prev, w_next) >= eta_target;
    };

    const double upper = x_prev + w_prev;
    if (meets_target(upper)) {
        return upper;
    }
    const double x_next = bisect_last_true(x_prev, upper, meets_target);

    // A surfacing point right above the solution means the overlap target was
    // never crossed before the seabed ran out.
    if (surfaced(std::nextafter(x_next, upper))) {
        throw SurveyError(ErrorCode::RegionExhausted, "seabed surfaces past " + describe_x(x_next));
    }
    if (x_next <= x_prev) {
        throw SurveyError(ErrorCode::NoSolutionInBracket, "no spacing meets the overlap target after " +
                                                              describe_x(x_prev));
    }
    return x_next;
}

SurveyPlan plan_survey(const SurveyRegion& region, const TransducerSpec& xdcr, double eta_target) {
    const DepthProfile profile = derive_profile(region);
    xdcr.validate();
    if (!(eta_target > 0.0 && eta_target < 1.0)) {
        throw SurveyError(ErrorCode::InvalidArgument, "overlap target must lie in (0, 1)");
    }

    SurveyPlan plan;
    plan.line_length_m = region.length_ns_m;
    auto finish = [&]() {
        plan.total_track_nm =
            m_to_nm(static_cast<double>(plan.placements.size()) * plan.line_length_m);
    };

    const double cos_slope = std::cos(region.slope.rad());
    try {
        // Spacing shrinks with depth, so lines would pile up geometrically
        // against a shoreline inside the region.
        const double east_depth =
            profile.west_edge_depth_m - region.width_ew_m * std::tan(region.slope.rad());
        if (east_depth <= 0.0) {
            std::ostringstream os;
            os << "seabed reaches the surface at x = "
               << profile.west_edge_depth_m / std::tan(region.slope.rad())
               << " m, inside the region";
            throw SurveyError(ErrorCode::SurfacedSeabed, os.str());
        }

        double x = first_line_position(profile, xdcr);
        SwathCrossSection cs = swath_at_x(profile, xdcr, x);
        plan.placements.push_back({x, cs.local_depth_m, cs.total_width_m, std::nullopt});

        while (x + cs.half_shallow_m * cos_slope < region.width_ew_m - kEdgeTolerance) {
            if (plan.placements.size() >= kMaxLines) {
                throw SurveyError(ErrorCode::RegionExhausted, "line count limit reached");
            }
            const double x_next = next_line_position(profile, xdcr, x, eta_target);
            const SwathCrossSection next = swath_at_x(profile, xdcr, x_next);
            plan.placements.push_back(
                {x_next, next.local_depth_m, next.total_width_m,
                 overlap_ratio(x_next - x, cs.total_width_m, next.total_width_m)});
            x = x_next;
            cs = next;
        }
    } catch (const SurveyError& e) {
        finish();
        throw PlanningError(e, std::move(plan));
    }
    finish();
    return plan;
}

}  // namespace swathplan
