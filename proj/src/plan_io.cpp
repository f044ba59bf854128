#include "swathplan/plan_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace swathplan {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kCsvHeader = "x_m,overlap_prev,width_m";

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw PlanParseError("line " + std::to_string(line_no) + ": bad number '" + field + "'");
    }
    return value;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

void check_placements(const SurveyPlan& plan) {
    for (std::size_t i = 0; i < plan.placements.size(); ++i) {
        const LinePlacement& p = plan.placements[i];
        if (!(p.swath_width_m > 0.0)) {
            throw PlanParseError("line " + std::to_string(i + 1) + ": width must be positive");
        }
        if (i > 0 && !(p.x_m > plan.placements[i - 1].x_m)) {
            throw PlanParseError("line " + std::to_string(i + 1) + ": positions must increase");
        }
    }
}

SurveyPlan read_csv(std::istream& in) {
    SurveyPlan plan;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!seen_header) {
            if (line != kCsvHeader) {
                throw PlanParseError("expected header '" + std::string(kCsvHeader) + "'");
            }
            seen_header = true;
            continue;
        }
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 3) {
            throw PlanParseError("line " + std::to_string(line_no) + ": expected 3 fields");
        }
        LinePlacement p;
        p.x_m = parse_number(fields[0], line_no);
        if (!fields[1].empty()) {
            p.overlap_with_previous = parse_number(fields[1], line_no);
        }
        p.swath_width_m = parse_number(fields[2], line_no);
        if (plan.placements.empty() == p.overlap_with_previous.has_value()) {
            throw PlanParseError("line " + std::to_string(line_no) +
                                 ": overlap must be blank on the first row only");
        }
        plan.placements.push_back(p);
    }
    if (!seen_header) {
        throw PlanParseError("empty plan file");
    }
    return plan;
}

SurveyPlan read_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw PlanParseError(std::string("plan is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("lines") || !doc["lines"].is_array()) {
        throw PlanParseError("plan JSON needs a 'lines' array");
    }
    SurveyPlan plan;
    for (const json& row : doc["lines"]) {
        if (!row.is_object() || !row.contains("x_m") || !row.contains("width_m") ||
            !row["x_m"].is_number() || !row["width_m"].is_number()) {
            throw PlanParseError("each line needs numeric 'x_m' and 'width_m'");
        }
        LinePlacement p;
        p.x_m = row["x_m"].get<double>();
        p.swath_width_m = row["width_m"].get<double>();
        if (row.contains("overlap_prev") && !row["overlap_prev"].is_null()) {
            if (!row["overlap_prev"].is_number()) {
                throw PlanParseError("'overlap_prev' must be a number or null");
            }
            p.overlap_with_previous = row["overlap_prev"].get<double>();
        }
        if (plan.placements.empty() == p.overlap_with_previous.has_value()) {
            throw PlanParseError("overlap must be null on the first line only");
        }
        plan.placements.push_back(p);
    }
    if (doc.contains("summary") && doc["summary"].is_object()) {
        const json& s = doc["summary"];
        if (s.contains("line_length_m") && s["line_length_m"].is_number()) {
            plan.line_length_m = s["line_length_m"].get<double>();
        }
    }
    return plan;
}

}  // namespace

std::string format_sig(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

std::string format_ratio(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", kRatioDecimals, value);
    return buf;
}

double round_sig(double value, int significant_digits) {
    return std::strtod(format_sig(value, significant_digits).c_str(), nullptr);
}

void write_plan(std::ostream& out, const SurveyPlan& plan, double d1_m, OutputFormat format,
                int precision) {
    if (format == OutputFormat::Csv) {
        out << kCsvHeader << '\n';
        for (const LinePlacement& p : plan.placements) {
            out << format_sig(p.x_m, precision) << ','
                << (p.overlap_with_previous ? format_ratio(*p.overlap_with_previous) : "") << ','
                << format_sig(p.swath_width_m, precision) << '\n';
        }
        out << "# " << plan.line_count() << " lines, " << format_sig(plan.total_track_nm, precision)
            << " NM, D1 " << format_sig(d1_m, precision) << " m\n";
        return;
    }

    json lines = json::array();
    for (const LinePlacement& p : plan.placements) {
        json row;
        row["x_m"] = round_sig(p.x_m, precision);
        row["overlap_prev"] = p.overlap_with_previous
                                  ? json(std::strtod(format_ratio(*p.overlap_with_previous).c_str(),
                                                     nullptr))
                                  : json(nullptr);
        row["width_m"] = round_sig(p.swath_width_m, precision);
        lines.push_back(row);
    }
    json doc;
    doc["lines"] = lines;
    doc["summary"] = {{"line_count", plan.line_count()},
                      {"total_track_nm", round_sig(plan.total_track_nm, precision)},
                      {"line_length_m", round_sig(plan.line_length_m, precision)},
                      {"d1_m", round_sig(d1_m, precision)}};
    out << doc.dump(2) << '\n';
}

SurveyPlan read_plan(std::istream& in) {
    in >> std::ws;
    const bool is_json = in.peek() == '{';
    SurveyPlan plan = is_json ? read_json(in) : read_csv(in);
    check_placements(plan);
    return plan;
}

}  // namespace swathplan
