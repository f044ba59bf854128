#include "swathplan/geometry.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace swathplan {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

void check_slope(Angle alpha) {
    if (!(alpha.deg() >= 0.0 && alpha.deg() < 90.0)) {
        std::ostringstream os;
        os << "slope angle must lie in [0, 90) degrees, got " << alpha.deg();
        throw SurveyError(ErrorCode::InvalidArgument, os.str());
    }
}

void check_heading(Angle beta) {
    if (!(beta.deg() >= 0.0 && beta.deg() < 360.0)) {
        std::ostringstream os;
        os << "heading must lie in [0, 360) degrees, got " << beta.deg();
        throw SurveyError(ErrorCode::InvalidArgument, os.str());
    }
}

}  // namespace

void PlanarSeabed::validate() const {
    if (!(reference_depth_m > 0.0) || !std::isfinite(reference_depth_m)) {
        throw SurveyError(ErrorCode::InvalidDepth, "reference depth must be positive");
    }
    check_slope(slope);
}

void TransducerSpec::validate() const {
    if (!(opening.deg() > 0.0 && opening.deg() < 180.0)) {
        std::ostringstream os;
        os << "opening angle must lie in (0, 180) degrees, got " << opening.deg();
        throw SurveyError(ErrorCode::InvalidArgument, os.str());
    }
}

void ShipFix::validate() const {
    if (!std::isfinite(distance_m)) {
        throw SurveyError(ErrorCode::InvalidArgument, "distance must be finite");
    }
    check_heading(heading);
}

double along_line_depth(const PlanarSeabed& seabed, const ShipFix& fix) {
    seabed.validate();
    fix.validate();
    const double dist_x = fix.distance_m * std::cos(fix.heading.rad());
    const double depth = seabed.reference_depth_m + dist_x * std::tan(seabed.slope.rad());
    if (depth <= 0.0) {
        std::ostringstream os;
        os << "depth " << depth << " m at " << fix.distance_m << " m along heading "
           << fix.heading.deg() << " deg";
        throw SurveyError(ErrorCode::SurfacedSeabed, os.str());
    }
    return depth;
}

Angle effective_slope(Angle alpha, Angle beta) {
    check_slope(alpha);
    check_heading(beta);
    // arccos form rewritten as atan2: tan(gamma) = |sin beta| tan(alpha). The
    // arccos loses ~1e-8 rad near gamma = 0.
    const double sa = std::sin(alpha.rad());
    const double ca = std::cos(alpha.rad());
    const double sb = std::sin(beta.rad());
    return Angle::radians(std::atan2(std::abs(sb) * sa, ca));
}

Angle effective_slope_numeric(Angle alpha, Angle beta) {
    check_slope(alpha);
    check_heading(beta);
    const double a = alpha.rad();
    const double b = beta.rad();
    const Vec3 n1{std::cos(b), std::sin(b), 0.0};  // survey line direction
    const Vec3 n2{std::sin(a), 0.0, std::cos(a)};  // seabed normal
    const Vec3 n3 = cross(n1, n2);                 // intersection line
    const Vec3 n4{n3[0], n3[1], 0.0};              // its horizontal projection
    if (norm(n4) == 0.0 || a == 0.0) {
        return Angle::degrees(0.0);
    }
    return Angle::radians(std::atan2(norm(cross(n3, n4)), dot(n3, n4)));
}

SwathCrossSection swath_cross_section(double depth_m, Angle gamma, const TransducerSpec& xdcr) {
    xdcr.validate();
    if (!(depth_m > 0.0) || !std::isfinite(depth_m)) {
        std::ostringstream os;
        os << "depth " << depth_m << " m";
        throw SurveyError(ErrorCode::InvalidDepth, os.str());
    }
    if (!(gamma.deg() >= 0.0)) {
        throw SurveyError(ErrorCode::InvalidArgument, "effective slope must be non-negative");
    }
    const double half = xdcr.half_opening().deg();
    if (gamma.deg() >= 90.0 - half - kGrazingMarginDeg) {
        std::ostringstream os;
        os << "gamma " << gamma.deg() << " deg reaches 90 - theta/2 = " << 90.0 - half << " deg";
        throw SurveyError(ErrorCode::BeamGrazesSeabed, os.str());
    }

    const double half_rad = deg_to_rad(half);
    const double reach = depth_m * std::sin(half_rad);
    SwathCrossSection cs;
    cs.local_depth_m = depth_m;
    cs.effective_gamma = gamma;
    // sin(90 - t/2 -+ gamma) == cos(t/2 +- gamma)
    cs.half_deep_m = reach / std::cos(half_rad + gamma.rad());
    cs.half_shallow_m = reach / std::cos(half_rad - gamma.rad());
    cs.total_width_m = cs.half_deep_m + cs.half_shallow_m;
    return cs;
}

HorizontalFootprint horizontal_footprint(const SwathCrossSection& cs, Angle cross_track_slope) {
    const double c = std::cos(cross_track_slope.rad());
    return {cs.half_deep_m * c, cs.half_shallow_m * c};
}

WidthTable width_table(const PlanarSeabed& seabed, const TransducerSpec& xdcr,
                       std::span<const Angle> headings, std::span<const double> distances_m) {
    WidthTable table;
    table.headings.assign(headings.begin(), headings.end());
    table.distances_m.assign(distances_m.begin(), distances_m.end());
    table.cells.reserve(headings.size() * distances_m.size());

    for (const Angle beta : headings) {
        for (const double dist : distances_m) {
            WidthCell cell;
            try {
                if (dist < 0.0) {
                    throw SurveyError(ErrorCode::InvalidArgument, "negative distance");
                }
                const double depth = along_line_depth(seabed, ShipFix{dist, beta});
                const Angle gamma = effective_slope(seabed.slope, beta);
                cell.width_m = swath_cross_section(depth, gamma, xdcr).total_width_m;
            } catch (const SurveyError& e) {
                cell.error = e.code();
            }
            table.cells.push_back(cell);
        }
    }
    return table;
}

}  // namespace swathplan
