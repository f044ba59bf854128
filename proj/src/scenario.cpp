#include "swathplan/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace swathplan {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        throw ConfigError("'" + where + "' must be an object");
    }
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* name : allowed) {
            known = known || key == name;
        }
        if (!known) {
            throw ConfigError("unknown key '" + where + "." + key + "'");
        }
    }
}

double number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError(std::string("'") + key + "' must be a number");
    }
    return v.get<double>();
}

std::vector<double> number_list(const json& obj, const char* key, std::vector<double> fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& v = obj.at(key);
    if (!v.is_array()) {
        throw ConfigError(std::string("'") + key + "' must be an array of numbers");
    }
    std::vector<double> out;
    for (const json& item : v) {
        if (!item.is_number()) {
            throw ConfigError(std::string("'") + key + "' must be an array of numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

template <typename Fn>
void checked(Fn&& fn) {
    try {
        fn();
    } catch (const SurveyError& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

void ScenarioConfig::validate() const {
    checked([&] { seabed.validate(); });
    checked([&] { transducer.validate(); });
    checked([&] { region.validate(); });
    if (!(eta_target > 0.0 && eta_target < 1.0)) {
        throw ConfigError("eta_target must lie in (0, 1)");
    }
    if (!(eta_min >= 0.0 && eta_min <= eta_max && eta_max <= 1.0)) {
        throw ConfigError("overlap bounds must satisfy 0 <= eta_min <= eta_max <= 1");
    }
    if (!(raster_resolution_m > 0.0) || raster_resolution_m > region.width_ew_m / 100.0) {
        throw ConfigError("raster resolution must lie in (0, width_ew / 100]");
    }
    for (double h : headings_deg) {
        if (!(h >= 0.0 && h < 360.0)) {
            throw ConfigError("headings must lie in [0, 360) degrees");
        }
    }
    for (double d : distances_nm) {
        if (!(d >= 0.0) || !std::isfinite(d)) {
            throw ConfigError("distances must be non-negative");
        }
    }
    if (precision < 1 || precision > 17) {
        throw ConfigError("precision must lie in [1, 17]");
    }
}

ScenarioConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    ScenarioConfig cfg;
    reject_unknown(doc, "config",
                   {"seabed", "transducer", "region", "planning", "width_table", "output"});

    if (doc.contains("seabed")) {
        const json& s = doc["seabed"];
        reject_unknown(s, "seabed", {"reference_depth_m", "slope_deg"});
        cfg.seabed.reference_depth_m = number(s, "reference_depth_m", cfg.seabed.reference_depth_m);
        cfg.seabed.slope = Angle::degrees(number(s, "slope_deg", cfg.seabed.slope.deg()));
    }
    if (doc.contains("transducer")) {
        const json& t = doc["transducer"];
        reject_unknown(t, "transducer", {"opening_angle_deg"});
        cfg.transducer.opening =
            Angle::degrees(number(t, "opening_angle_deg", cfg.transducer.opening.deg()));
    }
    if (doc.contains("region")) {
        const json& r = doc["region"];
        reject_unknown(r, "region", {"width_ew_nm", "length_ns_nm", "center_depth_m", "slope_deg"});
        cfg.region.width_ew_m = nm_to_m(number(r, "width_ew_nm", m_to_nm(cfg.region.width_ew_m)));
        cfg.region.length_ns_m =
            nm_to_m(number(r, "length_ns_nm", m_to_nm(cfg.region.length_ns_m)));
        cfg.region.center_depth_m = number(r, "center_depth_m", cfg.region.center_depth_m);
        cfg.region.slope = Angle::degrees(number(r, "slope_deg", cfg.region.slope.deg()));
    }
    if (doc.contains("planning")) {
        const json& p = doc["planning"];
        reject_unknown(p, "planning", {"eta_target", "eta_min", "eta_max", "raster_resolution_m"});
        cfg.eta_target = number(p, "eta_target", cfg.eta_target);
        cfg.eta_min = number(p, "eta_min", cfg.eta_min);
        cfg.eta_max = number(p, "eta_max", cfg.eta_max);
        cfg.raster_resolution_m = number(p, "raster_resolution_m", cfg.raster_resolution_m);
    }
    if (doc.contains("width_table")) {
        const json& w = doc["width_table"];
        reject_unknown(w, "width_table", {"headings_deg", "distances_nm"});
        cfg.headings_deg = number_list(w, "headings_deg", cfg.headings_deg);
        cfg.distances_nm = number_list(w, "distances_nm", cfg.distances_nm);
    }
    if (doc.contains("output")) {
        const json& o = doc["output"];
        reject_unknown(o, "output", {"format", "precision"});
        if (o.contains("format")) {
            if (!o["format"].is_string()) {
                throw ConfigError("'format' must be a string");
            }
            cfg.format = parse_format(o["format"].get<std::string>());
        }
        if (o.contains("precision")) {
            if (!o["precision"].is_number_integer()) {
                throw ConfigError("'precision' must be an integer");
            }
            cfg.precision = o["precision"].get<int>();
        }
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

}  // namespace swathplan
