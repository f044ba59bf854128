#pragma once

// Independent checks of planner output: a 1D cross-track raster of the swath
// footprints, and a linear scan that replaces the next-line bisection.

#include <string>
#include <vector>

#include "swathplan/planner.hpp"

namespace swathplan {

inline constexpr double kDefaultRasterResolution = 0.1;

/// Absolute slack applied to the overlap bounds when judging rasterized ratios.
inline constexpr double kOverlapRatioSlack = 0.005;

struct Interval {
    double start_m = 0.0;
    double end_m = 0.0;
};

struct CoverageReport {
    double resolution_m = 0.0;
    std::vector<Interval> uncovered_intervals;
    // Shared rasterized extent over the mean horizontal footprint, one per adjacent pair.
    std::vector<double> pairwise_overlap_ratios;
    // The same pairs from spacing and slope-measured widths, as the planner defines overlap.
    std::vector<double> nominal_overlap_ratios;
    int max_multiplicity = 0;
};

/// Samples cell centers across [0, width_ew]. A plan with no lines yields one
/// uncovered interval spanning the region.
CoverageReport rasterize_coverage(const SurveyPlan& plan, const SurveyRegion& region,
                                  const TransducerSpec& xdcr,
                                  double resolution_m = kDefaultRasterResolution);

/// Scans candidates downward from x_prev + W(x_prev) in `step_m` increments and
/// returns the first one whose overlap lies in [eta, eta + kOverlapWindow].
/// Throws SurveyError(NoSolutionInBracket) when the scan finds none.
double brute_force_next_line(const DepthProfile& profile, const TransducerSpec& xdcr,
                             double x_prev, double eta, double step_m);

/// Same scan for the first line: the largest grid point whose downhill edge
/// still reaches x = 0.
double brute_force_first_line(const DepthProfile& profile, const TransducerSpec& xdcr,
                              double step_m);

enum class FindingKind {
    DegeneratePlan,
    GeometryError,
    UncoveredInterval,
    OverlapOutOfRange,
    WidthNotDecreasing,
};

struct Finding {
    FindingKind kind;
    double x_m = 0.0;
    std::string message;
};

struct VerificationResult {
    bool passed = false;
    std::vector<Finding> findings;
    CoverageReport coverage;
};

VerificationResult verify_plan(const SurveyPlan& plan, const SurveyRegion& region,
                               const TransducerSpec& xdcr, double eta_min, double eta_max,
                               double resolution_m = kDefaultRasterResolution);

}  // namespace swathplan
