#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "swathplan/geometry.hpp"
#include "swathplan/planner.hpp"
#include "swathplan/verifier.hpp"

namespace swathplan {

enum class OutputFormat { Csv, Json };

/// Bad configuration text or values; the CLI maps it to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every input the CLI needs. Defaults are the two reference scenarios: the
/// 120 m / 1.5 deg width study and the 4 x 2 NM, 110 m planning area.
struct ScenarioConfig {
    PlanarSeabed seabed{120.0, Angle::degrees(1.5)};
    TransducerSpec transducer{Angle::degrees(120.0)};
    SurveyRegion region{nm_to_m(4.0), nm_to_m(2.0), 110.0, Angle::degrees(1.5)};

    double eta_target = kDefaultOverlapTarget;
    double eta_min = 0.10;
    double eta_max = 0.20;
    double raster_resolution_m = kDefaultRasterResolution;

    std::vector<double> headings_deg{0, 45, 90, 135, 180, 225, 270, 315};
    std::vector<double> distances_nm{0.0, 0.3, 0.6, 0.9, 1.2, 1.5, 1.8, 2.1};

    OutputFormat format = OutputFormat::Csv;
    int precision = 6;  // significant digits

    /// Checks every embedded invariant; throws ConfigError.
    void validate() const;
};

/// Parses a JSON config document over the defaults. Unknown keys are rejected.
ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::string& path);

OutputFormat parse_format(const std::string& name);

}  // namespace swathplan
