#pragma once

// Swath geometry of an ideal multibeam fan over a planar sloped seabed.
//
// Frame: +x is the horizontal projection of the seabed normal and points
// downhill, so depth grows with x. Headings are measured counterclockwise
// from +x. Lengths are meters, depths positive down.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "swathplan/error.hpp"
#include "swathplan/units.hpp"

namespace swathplan {

struct PlanarSeabed {
    double reference_depth_m = 0.0;  // depth at the frame origin
    Angle slope;

    void validate() const;
};

struct TransducerSpec {
    Angle opening;  // full fan angle

    void validate() const;
    Angle half_opening() const { return Angle::degrees(opening.deg() / 2.0); }
};

struct ShipFix {
    double distance_m = 0.0;  // signed, along the heading
    Angle heading;

    void validate() const;
};

struct SwathCrossSection {
    double local_depth_m = 0.0;
    Angle effective_gamma;
    double half_deep_m = 0.0;     // slope-measured, downhill side
    double half_shallow_m = 0.0;  // slope-measured, uphill side
    double total_width_m = 0.0;
};

struct HorizontalFootprint {
    double deep_m = 0.0;
    double shallow_m = 0.0;

    double extent_m() const { return deep_m + shallow_m; }
};

/// Angular margin below the grazing limit 90 - theta/2 inside which a swath is rejected.
inline constexpr double kGrazingMarginDeg = 1e-9;

/// Water depth under the ship at `fix`. Throws SurveyError(SurfacedSeabed) when <= 0.
double along_line_depth(const PlanarSeabed& seabed, const ShipFix& fix);

/// Dip of the seabed line cut by the vertical plane normal to the heading,
/// cos(gamma) = cos(alpha) / sqrt(cos^2(alpha) + sin^2(beta) sin^2(alpha)).
Angle effective_slope(Angle alpha, Angle beta);

/// Same angle obtained by intersecting the two planes through their normals.
/// Independent cross-check for effective_slope().
Angle effective_slope_numeric(Angle alpha, Angle beta);

/// Law-of-sines split of the swath at `depth_m` over a seabed dipping by `gamma`
/// across track. Throws InvalidDepth for depth <= 0 and BeamGrazesSeabed when the
/// downhill beam edge runs parallel to (or away from) the seabed.
SwathCrossSection swath_cross_section(double depth_m, Angle gamma, const TransducerSpec& xdcr);

HorizontalFootprint horizontal_footprint(const SwathCrossSection& cs, Angle cross_track_slope);

struct WidthCell {
    double width_m = 0.0;
    std::optional<ErrorCode> error;

    bool ok() const { return !error.has_value(); }
};

struct WidthTable {
    std::vector<Angle> headings;
    std::vector<double> distances_m;
    std::vector<WidthCell> cells;  // headings-major

    const WidthCell& at(std::size_t heading_index, std::size_t distance_index) const {
        return cells[heading_index * distances_m.size() + distance_index];
    }
};

/// Total swath width over a heading x distance grid. Cells whose geometry fails
/// carry the error code instead of aborting the grid.
WidthTable width_table(const PlanarSeabed& seabed, const TransducerSpec& xdcr,
                       std::span<const Angle> headings, std::span<const double> distances_m);

}  // namespace swathplan
