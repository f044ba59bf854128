#include "swathplan/commands.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "swathplan/plan_io.hpp"

namespace swathplan {

namespace {

using json = nlohmann::ordered_json;

bool validated(const ScenarioConfig& cfg, std::ostream& err) {
    try {
        cfg.validate();
        return true;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return false;
    }
}

json point(double x, double y, double z, int precision) {
    return json::array({round_sig(x, precision), round_sig(y, precision), round_sig(z, precision)});
}

}  // namespace

int cmd_width_table(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!validated(cfg, err)) {
        return kExitUsage;
    }
    std::vector<Angle> headings;
    for (double h : cfg.headings_deg) {
        headings.push_back(Angle::degrees(h));
    }
    std::vector<double> distances_m;
    for (double d : cfg.distances_nm) {
        distances_m.push_back(nm_to_m(d));
    }
    const WidthTable table = width_table(cfg.seabed, cfg.transducer, headings, distances_m);

    if (cfg.format == OutputFormat::Csv) {
        out << "heading_deg";
        for (double d : cfg.distances_nm) {
            out << ',' << format_sig(d, cfg.precision);
        }
        out << '\n';
        for (std::size_t h = 0; h < headings.size(); ++h) {
            out << format_sig(cfg.headings_deg[h], cfg.precision);
            for (std::size_t d = 0; d < distances_m.size(); ++d) {
                const WidthCell& cell = table.at(h, d);
                out << ',' << (cell.ok() ? format_sig(cell.width_m, cfg.precision) : "ERR");
            }
            out << '\n';
        }
        return kExitOk;
    }

    json rows = json::array();
    for (std::size_t h = 0; h < headings.size(); ++h) {
        json cells = json::array();
        for (std::size_t d = 0; d < distances_m.size(); ++d) {
            const WidthCell& cell = table.at(h, d);
            json c;
            c["distance_nm"] = round_sig(cfg.distances_nm[d], cfg.precision);
            if (cell.ok()) {
                c["width_m"] = round_sig(cell.width_m, cfg.precision);
            } else {
                c["error"] = std::string(to_string(*cell.error));
            }
            cells.push_back(c);
        }
        json row;
        row["heading_deg"] = round_sig(cfg.headings_deg[h], cfg.precision);
        row["cells"] = cells;
        rows.push_back(row);
    }
    out << rows.dump(2) << '\n';
    return kExitOk;
}

int cmd_plan(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!validated(cfg, err)) {
        return kExitUsage;
    }
    const double d1 = derive_profile(cfg.region).edge_offset_d1_m;
    try {
        const SurveyPlan plan = plan_survey(cfg.region, cfg.transducer, cfg.eta_target);
        write_plan(out, plan, d1, cfg.format, cfg.precision);
        return kExitOk;
    } catch (const PlanningError& e) {
        write_plan(out, e.partial_plan(), d1, cfg.format, cfg.precision);
        err << "error: infeasible scenario: " << e.what() << " (partial plan has "
            << e.partial_plan().line_count() << " lines)\n";
        return kExitFailure;
    }
}

int cmd_verify(const ScenarioConfig& cfg, std::istream& plan_text, std::ostream& out,
               std::ostream& err) {
    if (!validated(cfg, err)) {
        return kExitUsage;
    }
    SurveyPlan plan;
    try {
        plan = read_plan(plan_text);
    } catch (const PlanParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    plan.line_length_m = cfg.region.length_ns_m;
    plan.total_track_nm = m_to_nm(static_cast<double>(plan.line_count()) * plan.line_length_m);

    const VerificationResult result = verify_plan(plan, cfg.region, cfg.transducer, cfg.eta_min,
                                                  cfg.eta_max, cfg.raster_resolution_m);
    const CoverageReport& cov = result.coverage;
    out << (result.passed ? "PASS" : "FAIL") << ": " << plan.line_count() << " lines, "
        << cov.uncovered_intervals.size() << " uncovered intervals, "
        << result.findings.size() << " findings\n";
    if (!cov.pairwise_overlap_ratios.empty()) {
        const auto [rmin, rmax] = std::minmax_element(cov.pairwise_overlap_ratios.begin(),
                                                      cov.pairwise_overlap_ratios.end());
        const auto [nmin, nmax] = std::minmax_element(cov.nominal_overlap_ratios.begin(),
                                                      cov.nominal_overlap_ratios.end());
        out << "raster overlap (horizontal footprints): " << format_ratio(*rmin) << " .. "
            << format_ratio(*rmax) << '\n';
        out << "nominal overlap (slope widths): " << format_ratio(*nmin) << " .. "
            << format_ratio(*nmax) << '\n';
    }
    out << "max multiplicity: " << cov.max_multiplicity << ", resolution "
        << format_sig(cov.resolution_m, cfg.precision) << " m\n";
    for (const Finding& f : result.findings) {
        out << "finding at x = " << format_sig(f.x_m, cfg.precision) << " m: " << f.message
            << '\n';
    }
    return result.passed ? kExitOk : kExitFailure;
}

int cmd_plot_data(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!validated(cfg, err)) {
        return kExitUsage;
    }
    SurveyPlan plan;
    try {
        plan = plan_survey(cfg.region, cfg.transducer, cfg.eta_target);
    } catch (const PlanningError& e) {
        err << "error: infeasible scenario: " << e.what() << '\n';
        return kExitFailure;
    }

    const int p = cfg.precision;
    const double w = cfg.region.width_ew_m;
    const double l = cfg.region.length_ns_m;
    const DepthProfile profile = derive_profile(cfg.region);
    // East-edge depth may be non-positive for steep slopes; the plane is emitted as is.
    const double west_z = -profile.west_edge_depth_m;
    const double east_z = -(profile.west_edge_depth_m - w * std::tan(profile.slope.rad()));

    json doc;
    doc["units"] = "m";
    doc["frame"] = "x east of west boundary, y north of south boundary, z up";
    doc["sea_surface"] = json::array(
        {point(0, 0, 0, p), point(w, 0, 0, p), point(w, l, 0, p), point(0, l, 0, p)});
    doc["seabed"] = json::array({point(0, 0, west_z, p), point(w, 0, east_z, p),
                                 point(w, l, east_z, p), point(0, l, west_z, p)});
    json lines = json::array();
    for (std::size_t i = 0; i < plan.placements.size(); ++i) {
        const double x = plan.placements[i].x_m;
        json seg;
        seg["index"] = i + 1;
        seg["start"] = point(x, 0, 0, p);
        seg["end"] = point(x, l, 0, p);
        seg["length_m"] = round_sig(l, p);
        lines.push_back(seg);
    }
    doc["survey_lines"] = lines;
    out << doc.dump(2) << '\n';
    return kExitOk;
}

}  // namespace swathplan
