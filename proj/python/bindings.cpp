#include <optional>
#include <sstream>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swathplan/commands.hpp"
#include "swathplan/geometry.hpp"
#include "swathplan/plan_io.hpp"
#include "swathplan/planner.hpp"
#include "swathplan/verifier.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace swathplan {
namespace {

TransducerSpec transducer(double theta_deg) { return TransducerSpec{Angle::degrees(theta_deg)}; }

SurveyRegion region(double width_ew_m, double length_ns_m, double center_depth_m,
                    double slope_deg) {
    return SurveyRegion{width_ew_m, length_ns_m, center_depth_m, Angle::degrees(slope_deg)};
}

void bind_geometry(py::module_& m) {
    py::class_<SwathCrossSection>(m, "SwathCrossSection")
        .def_readonly("local_depth_m", &SwathCrossSection::local_depth_m)
        .def_property_readonly("effective_gamma_deg",
                               [](const SwathCrossSection& cs) { return cs.effective_gamma.deg(); })
        .def_readonly("half_deep_m", &SwathCrossSection::half_deep_m)
        .def_readonly("half_shallow_m", &SwathCrossSection::half_shallow_m)
        .def_readonly("total_width_m", &SwathCrossSection::total_width_m);

    m.def(
        "along_line_depth",
        [](double reference_depth_m, double slope_deg, double distance_m, double heading_deg) {
            return along_line_depth(PlanarSeabed{reference_depth_m, Angle::degrees(slope_deg)},
                                    ShipFix{distance_m, Angle::degrees(heading_deg)});
        },
        "reference_depth_m"_a, "slope_deg"_a, "distance_m"_a, "heading_deg"_a);
    m.def(
        "effective_slope",
        [](double alpha_deg, double beta_deg) {
            return effective_slope(Angle::degrees(alpha_deg), Angle::degrees(beta_deg)).deg();
        },
        "alpha_deg"_a, "beta_deg"_a);
    m.def(
        "effective_slope_numeric",
        [](double alpha_deg, double beta_deg) {
            return effective_slope_numeric(Angle::degrees(alpha_deg), Angle::degrees(beta_deg))
                .deg();
        },
        "alpha_deg"_a, "beta_deg"_a);
    m.def(
        "swath_cross_section",
        [](double depth_m, double gamma_deg, double theta_deg) {
            return swath_cross_section(depth_m, Angle::degrees(gamma_deg), transducer(theta_deg));
        },
        "depth_m"_a, "gamma_deg"_a, "theta_deg"_a);
    m.def(
        "horizontal_footprint",
        [](const SwathCrossSection& cs, double slope_deg) {
            const HorizontalFootprint fp = horizontal_footprint(cs, Angle::degrees(slope_deg));
            return py::make_tuple(fp.deep_m, fp.shallow_m);
        },
        "cross_section"_a, "slope_deg"_a);
    // Grid of widths in meters, None where the geometry fails.
    m.def(
        "width_table",
        [](double reference_depth_m, double slope_deg, double theta_deg,
           const std::vector<double>& headings_deg, const std::vector<double>& distances_m) {
            std::vector<Angle> headings;
            for (double h : headings_deg) headings.push_back(Angle::degrees(h));
            const WidthTable t =
                width_table(PlanarSeabed{reference_depth_m, Angle::degrees(slope_deg)},
                            transducer(theta_deg), headings, distances_m);
            std::vector<std::vector<std::optional<double>>> grid(headings.size());
            for (std::size_t h = 0; h < headings.size(); ++h) {
                for (std::size_t d = 0; d < distances_m.size(); ++d) {
                    const WidthCell& c = t.at(h, d);
                    grid[h].push_back(c.ok() ? std::optional<double>(c.width_m) : std::nullopt);
                }
            }
            return grid;
        },
        "reference_depth_m"_a, "slope_deg"_a, "theta_deg"_a, "headings_deg"_a, "distances_m"_a);
}

void bind_planner(py::module_& m) {
    py::class_<SurveyRegion>(m, "SurveyRegion")
        .def(py::init(&region), "width_ew_m"_a, "length_ns_m"_a, "center_depth_m"_a, "slope_deg"_a)
        .def_readwrite("width_ew_m", &SurveyRegion::width_ew_m)
        .def_readwrite("length_ns_m", &SurveyRegion::length_ns_m)
        .def_readwrite("center_depth_m", &SurveyRegion::center_depth_m)
        .def_property_readonly("slope_deg", [](const SurveyRegion& r) { return r.slope.deg(); });

    py::class_<DepthProfile>(m, "DepthProfile")
        .def_readonly("west_edge_depth_m", &DepthProfile::west_edge_depth_m)
        .def_readonly("edge_offset_d1_m", &DepthProfile::edge_offset_d1_m)
        .def_readonly("width_ew_m", &DepthProfile::width_ew_m)
        .def_property_readonly("slope_deg", [](const DepthProfile& p) { return p.slope.deg(); });

    py::class_<LinePlacement>(m, "LinePlacement")
        .def_readonly("x_m", &LinePlacement::x_m)
        .def_readonly("depth_m", &LinePlacement::depth_m)
        .def_readonly("swath_width_m", &LinePlacement::swath_width_m)
        .def_readonly("overlap_with_previous", &LinePlacement::overlap_with_previous);

    py::class_<SurveyPlan>(m, "SurveyPlan")
        .def_readonly("placements", &SurveyPlan::placements)
        .def_readonly("line_length_m", &SurveyPlan::line_length_m)
        .def_readonly("total_track_nm", &SurveyPlan::total_track_nm)
        .def_property_readonly("line_count", &SurveyPlan::line_count)
        .def("to_text", [](const SurveyPlan& plan, double d1_m, const std::string& format,
                           int precision) {
            std::ostringstream os;
            write_plan(os, plan, d1_m, parse_format(format), precision);
            return os.str();
        }, "d1_m"_a, "format"_a = "csv", "precision"_a = 6);

    m.def("derive_profile", &derive_profile, "region"_a);
    m.def("depth_at_x", &depth_at_x, "profile"_a, "x_m"_a);
    m.def(
        "first_line_position",
        [](const DepthProfile& p, double theta_deg) {
            return first_line_position(p, transducer(theta_deg));
        },
        "profile"_a, "theta_deg"_a);
    m.def(
        "next_line_position",
        [](const DepthProfile& p, double theta_deg, double x_prev, double eta) {
            return next_line_position(p, transducer(theta_deg), x_prev, eta);
        },
        "profile"_a, "theta_deg"_a, "x_prev"_a, "eta_target"_a);
    m.def(
        "plan_survey",
        [](const SurveyRegion& r, double theta_deg, double eta) {
            return plan_survey(r, transducer(theta_deg), eta);
        },
        "region"_a, "theta_deg"_a, "eta_target"_a = kDefaultOverlapTarget);
}

void bind_verifier(py::module_& m) {
    py::class_<CoverageReport>(m, "CoverageReport")
        .def_readonly("resolution_m", &CoverageReport::resolution_m)
        .def_property_readonly("uncovered_intervals",
                               [](const CoverageReport& r) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const Interval& i : r.uncovered_intervals) {
                                       out.emplace_back(i.start_m, i.end_m);
                                   }
                                   return out;
                               })
        .def_readonly("pairwise_overlap_ratios", &CoverageReport::pairwise_overlap_ratios)
        .def_readonly("nominal_overlap_ratios", &CoverageReport::nominal_overlap_ratios)
        .def_readonly("max_multiplicity", &CoverageReport::max_multiplicity);

    py::class_<VerificationResult>(m, "VerificationResult")
        .def_readonly("passed", &VerificationResult::passed)
        .def_readonly("coverage", &VerificationResult::coverage)
        .def_property_readonly("findings", [](const VerificationResult& r) {
            std::vector<std::pair<double, std::string>> out;
            for (const Finding& f : r.findings) out.emplace_back(f.x_m, f.message);
            return out;
        });

    m.def(
        "rasterize_coverage",
        [](const SurveyPlan& plan, const SurveyRegion& r, double theta_deg, double resolution_m) {
            return rasterize_coverage(plan, r, transducer(theta_deg), resolution_m);
        },
        "plan"_a, "region"_a, "theta_deg"_a, "resolution_m"_a = kDefaultRasterResolution);
    m.def(
        "brute_force_next_line",
        [](const DepthProfile& p, double theta_deg, double x_prev, double eta, double step_m) {
            return brute_force_next_line(p, transducer(theta_deg), x_prev, eta, step_m);
        },
        "profile"_a, "theta_deg"_a, "x_prev"_a, "eta"_a, "step_m"_a);
    m.def(
        "verify_plan",
        [](const SurveyPlan& plan, const SurveyRegion& r, double theta_deg, double eta_min,
           double eta_max, double resolution_m) {
            return verify_plan(plan, r, transducer(theta_deg), eta_min, eta_max, resolution_m);
        },
        "plan"_a, "region"_a, "theta_deg"_a, "eta_min"_a, "eta_max"_a,
        "resolution_m"_a = kDefaultRasterResolution);
}

}  // namespace
}  // namespace swathplan

PYBIND11_MODULE(_swathplan, m) {
    m.doc() = "Multibeam survey line planning over a planar sloped seabed";
    m.attr("METERS_PER_NAUTICAL_MILE") = swathplan::kMetersPerNauticalMile;

    py::register_exception<swathplan::SurveyError>(m, "SurveyError", PyExc_ValueError);

    swathplan::bind_geometry(m);
    swathplan::bind_planner(m);
    swathplan::bind_verifier(m);
}
