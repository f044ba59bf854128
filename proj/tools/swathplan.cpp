// swathplan: survey line planning over a planar sloped seabed.
//
//   swathplan width-table [options]
//   swathplan plan        [options]
//   swathplan verify      [options] <plan-file>
//   swathplan plot-data   [options]

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swathplan/commands.hpp"

namespace {

struct Overrides {
    std::string config_path;
    std::string format;
    std::string out_path;
    std::optional<double> alpha_deg;
    std::optional<double> theta_deg;
    std::optional<double> eta;
    std::optional<double> center_depth_m;
    std::optional<double> reference_depth_m;
    std::optional<double> region_ew_nm;
    std::optional<double> region_ns_nm;
    std::optional<int> precision;
};

void add_common_options(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_path, "JSON scenario config");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out_path, "Output file (default: standard output)");
    cmd->add_option("--alpha-deg", o.alpha_deg, "Seabed slope for both scenarios (deg)");
    cmd->add_option("--theta-deg", o.theta_deg, "Transducer opening angle (deg)");
    cmd->add_option("--eta", o.eta, "Target overlap ratio between adjacent swaths");
    cmd->add_option("--center-depth-m", o.center_depth_m, "Depth at the region center (m)");
    cmd->add_option("--reference-depth-m", o.reference_depth_m,
                    "Depth at the width-table origin (m)");
    cmd->add_option("--region-ew-nm", o.region_ew_nm, "Region east-west width (NM)");
    cmd->add_option("--region-ns-nm", o.region_ns_nm, "Region north-south length (NM)");
    cmd->add_option("--precision", o.precision, "Significant digits in numeric output");
}

swathplan::ScenarioConfig build_config(const Overrides& o) {
    using swathplan::Angle;
    swathplan::ScenarioConfig cfg =
        o.config_path.empty() ? swathplan::ScenarioConfig{} : swathplan::load_config(o.config_path);
    if (!o.format.empty()) cfg.format = swathplan::parse_format(o.format);
    if (o.alpha_deg) {
        cfg.seabed.slope = Angle::degrees(*o.alpha_deg);
        cfg.region.slope = Angle::degrees(*o.alpha_deg);
    }
    if (o.theta_deg) cfg.transducer.opening = Angle::degrees(*o.theta_deg);
    if (o.eta) cfg.eta_target = *o.eta;
    if (o.center_depth_m) cfg.region.center_depth_m = *o.center_depth_m;
    if (o.reference_depth_m) cfg.seabed.reference_depth_m = *o.reference_depth_m;
    if (o.region_ew_nm) cfg.region.width_ew_m = swathplan::nm_to_m(*o.region_ew_nm);
    if (o.region_ns_nm) cfg.region.length_ns_m = swathplan::nm_to_m(*o.region_ns_nm);
    if (o.precision) cfg.precision = *o.precision;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multibeam survey line planning over a planar sloped seabed"};
    app.require_subcommand(1);

    Overrides o;
    std::string plan_path;
    CLI::App* width = app.add_subcommand("width-table", "Swath width by heading and distance");
    CLI::App* plan = app.add_subcommand("plan", "Greedy north-south line layout");
    CLI::App* verify = app.add_subcommand("verify", "Check a plan file by raster coverage");
    CLI::App* plot = app.add_subcommand("plot-data", "3D plot geometry of the plan as JSON");
    for (CLI::App* cmd : {width, plan, verify, plot}) {
        add_common_options(cmd, o);
    }
    verify->add_option("plan", plan_path, "Plan file in CSV or JSON format")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : swathplan::kExitUsage;
    }

    swathplan::ScenarioConfig cfg;
    try {
        cfg = build_config(o);
    } catch (const swathplan::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return swathplan::kExitUsage;
    }

    std::ostringstream buffer;
    int status = swathplan::kExitOk;
    if (*width) {
        status = swathplan::cmd_width_table(cfg, buffer, std::cerr);
    } else if (*plan) {
        status = swathplan::cmd_plan(cfg, buffer, std::cerr);
    } else if (*verify) {
        std::ifstream in(plan_path);
        if (!in) {
            std::cerr << "error: cannot open plan file '" << plan_path << "'\n";
            return swathplan::kExitUsage;
        }
        status = swathplan::cmd_verify(cfg, in, buffer, std::cerr);
    } else if (*plot) {
        status = swathplan::cmd_plot_data(cfg, buffer, std::cerr);
    }

    if (o.out_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(o.out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << o.out_path << "'\n";
            return swathplan::kExitUsage;
        }
        out << buffer.str();
    }
    return status;
}
