#pragma once

// Text formats for survey plans.
//
// CSV: header "x_m,overlap_prev,width_m", one row per line (overlap blank on
// the first row), then a "# <n> lines, <nm> NM, D1 <d1> m" summary comment.
// JSON: {"lines": [{"x_m", "overlap_prev", "width_m"}...],
//        "summary": {"line_count", "total_track_nm", "line_length_m", "d1_m"}}
// with "overlap_prev" null on the first line.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "swathplan/planner.hpp"
#include "swathplan/scenario.hpp"

namespace swathplan {

inline constexpr int kRatioDecimals = 5;

class PlanParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed significant-digit text, e.g. format_sig(358.52179, 6) == "358.522".
std::string format_sig(double value, int significant_digits);

/// Ratio text with kRatioDecimals decimals, e.g. "0.10000".
std::string format_ratio(double value);

/// Value as it reads back after formatting at `significant_digits`.
double round_sig(double value, int significant_digits);

void write_plan(std::ostream& out, const SurveyPlan& plan, double d1_m, OutputFormat format,
                int precision);

/// Reads either format; JSON is recognised by a leading '{'. Depth fields are
/// left at zero since neither format carries them.
SurveyPlan read_plan(std::istream& in);

}  // namespace swathplan
