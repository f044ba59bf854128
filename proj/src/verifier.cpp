#include "swathplan/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace swathplan {

namespace {

struct CellRange {
    long first = 0;  // inclusive
    long last = -1;  // inclusive

    bool empty() const { return last < first; }
};

// Cells whose centers fall inside [west, east].
CellRange cells_within(double west_m, double east_m, double resolution_m, long cell_count) {
    CellRange r;
    r.first = std::max(0L, static_cast<long>(std::ceil(west_m / resolution_m - 0.5)));
    r.last = std::min(cell_count - 1, static_cast<long>(std::floor(east_m / resolution_m - 0.5)));
    return r;
}

std::string format_x(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

CoverageReport rasterize_coverage(const SurveyPlan& plan, const SurveyRegion& region,
                                  const TransducerSpec& xdcr, double resolution_m) {
    const DepthProfile profile = derive_profile(region);
    if (!(resolution_m > 0.0) || resolution_m > region.width_ew_m / 100.0) {
        throw SurveyError(ErrorCode::InvalidArgument,
                          "raster resolution must lie in (0, width_ew / 100]");
    }

    const long cell_count = static_cast<long>(std::ceil(region.width_ew_m / resolution_m));
    auto cell_length = [&](long k) {
        return std::min((k + 1) * resolution_m, region.width_ew_m) - k * resolution_m;
    };

    CoverageReport report;
    report.resolution_m = resolution_m;

    std::vector<CellRange> ranges;
    std::vector<double> extents;
    ranges.reserve(plan.placements.size());
    extents.reserve(plan.placements.size());
    for (const LinePlacement& line : plan.placements) {
        const HorizontalFootprint fp = footprint_at_x(profile, xdcr, line.x_m);
        ranges.push_back(cells_within(line.x_m - fp.deep_m, line.x_m + fp.shallow_m, resolution_m,
                                      cell_count));
        extents.push_back(fp.extent_m());
    }

    // Difference array of per-cell multiplicity.
    std::vector<int> delta(static_cast<std::size_t>(cell_count) + 1, 0);
    for (const CellRange& r : ranges) {
        if (!r.empty()) {
            ++delta[static_cast<std::size_t>(r.first)];
            --delta[static_cast<std::size_t>(r.last) + 1];
        }
    }
    int multiplicity = 0;
    bool in_gap = false;
    Interval gap;
    for (long k = 0; k < cell_count; ++k) {
        multiplicity += delta[static_cast<std::size_t>(k)];
        report.max_multiplicity = std::max(report.max_multiplicity, multiplicity);
        if (multiplicity == 0 && !in_gap) {
            in_gap = true;
            gap.start_m = k * resolution_m;
        } else if (multiplicity > 0 && in_gap) {
            in_gap = false;
            gap.end_m = k * resolution_m;
            report.uncovered_intervals.push_back(gap);
        }
    }
    if (in_gap) {
        gap.end_m = region.width_ew_m;
        report.uncovered_intervals.push_back(gap);
    }

    for (std::size_t i = 1; i < ranges.size(); ++i) {
        const CellRange shared{std::max(ranges[i - 1].first, ranges[i].first),
                               std::min(ranges[i - 1].last, ranges[i].last)};
        double shared_m = 0.0;
        for (long k = shared.first; k <= shared.last; ++k) {
            shared_m += cell_length(k);
        }
        report.pairwise_overlap_ratios.push_back(shared_m / (0.5 * (extents[i - 1] + extents[i])));

        const LinePlacement& prev = plan.placements[i - 1];
        const LinePlacement& next = plan.placements[i];
        report.nominal_overlap_ratios.push_back(
            overlap_ratio(next.x_m - prev.x_m, prev.swath_width_m, next.swath_width_m));
    }
    return report;
}

double brute_force_next_line(const DepthProfile& profile, const TransducerSpec& xdcr,
                             double x_prev, double eta, double step_m) {
    if (!(step_m > 0.0)) {
        throw SurveyError(ErrorCode::InvalidArgument, "scan step must be positive");
    }
    const double w_prev = swath_at_x(profile, xdcr, x_prev).total_width_m;
    const double top = x_prev + w_prev;
    const double tan_slope = std::tan(profile.slope.rad());

    for (long k = 0;; ++k) {
        const double x = top - static_cast<double>(k) * step_m;
        if (x <= x_prev) {
            break;
        }
        if (profile.west_edge_depth_m - x * tan_slope <= 0.0) {
            continue;
        }
        const double w = swath_at_x(profile, xdcr, x).total_width_m;
        const double achieved = overlap_ratio(x - x_prev, w_prev, w);
        if (achieved >= eta) {
            if (achieved <= eta + kOverlapWindow) {
                return x;
            }
            // Overlap only grows further down; the step skipped the window.
            break;
        }
    }
    throw SurveyError(ErrorCode::NoSolutionInBracket,
                      "scan from x = " + format_x(x_prev) + " m found no overlap in the window");
}

double brute_force_first_line(const DepthProfile& profile, const TransducerSpec& xdcr,
                              double step_m) {
    if (!(step_m > 0.0)) {
        throw SurveyError(ErrorCode::InvalidArgument, "scan step must be positive");
    }
    const double tan_slope = std::tan(profile.slope.rad());
    const double cos_slope = std::cos(profile.slope.rad());
    double best = -1.0;
    for (long k = 0;; ++k) {
        const double x = static_cast<double>(k) * step_m;
        if (x > profile.width_ew_m || profile.west_edge_depth_m - x * tan_slope <= 0.0) {
            break;
        }
        const SwathCrossSection cs = swath_at_x(profile, xdcr, x);
        if (x - cs.half_deep_m * cos_slope > 0.0) {
            break;
        }
        best = x;
    }
    if (best < 0.0) {
        throw SurveyError(ErrorCode::NoSolutionInBracket, "first-line scan found no candidate");
    }
    return best;
}

VerificationResult verify_plan(const SurveyPlan& plan, const SurveyRegion& region,
                               const TransducerSpec& xdcr, double eta_min, double eta_max,
                               double resolution_m) {
    VerificationResult result;
    if (plan.placements.empty()) {
        result.findings.push_back(
            {FindingKind::DegeneratePlan, 0.0, std::string(to_string(ErrorCode::DegeneratePlan))});
    }

    try {
        result.coverage = rasterize_coverage(plan, region, xdcr, resolution_m);
    } catch (const SurveyError& e) {
        result.findings.push_back({FindingKind::GeometryError, 0.0, e.what()});
        result.passed = false;
        return result;
    }

    for (const Interval& gap : result.coverage.uncovered_intervals) {
        std::ostringstream os;
        os << "uncovered interval [" << gap.start_m << ", " << gap.end_m << "] m";
        result.findings.push_back(
            {FindingKind::UncoveredInterval, 0.5 * (gap.start_m + gap.end_m), os.str()});
    }

    const double lo = eta_min - kOverlapRatioSlack;
    const double hi = eta_max + kOverlapRatioSlack;
    const auto& ratios = result.coverage.pairwise_overlap_ratios;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (ratios[i] < lo || ratios[i] > hi) {
            std::ostringstream os;
            os << "lines " << i + 1 << "-" << i + 2 << ": overlap " << ratios[i]
               << " outside [" << lo << ", " << hi << "]";
            const double mid = 0.5 * (plan.placements[i].x_m + plan.placements[i + 1].x_m);
            result.findings.push_back({FindingKind::OverlapOutOfRange, mid, os.str()});
        }
    }

    // On a flat seabed every swath has the same width.
    const bool sloped = region.slope.deg() > 0.0;
    for (std::size_t i = 1; i < plan.placements.size(); ++i) {
        const double prev = plan.placements[i - 1].swath_width_m;
        const double next = plan.placements[i].swath_width_m;
        if (sloped ? !(next < prev) : (next > prev)) {
            std::ostringstream os;
            os << "line " << i + 1 << ": width " << next << " m does not decrease from " << prev
               << " m";
            result.findings.push_back(
                {FindingKind::WidthNotDecreasing, plan.placements[i].x_m, os.str()});
        }
    }

    result.passed = result.findings.empty();
    return result;
}

}  // namespace swathplan
