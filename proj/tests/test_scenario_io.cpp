#include <doctest.h>

#include <random>
#include <sstream>

#include "swathplan/plan_io.hpp"
#include "swathplan/scenario.hpp"

using namespace swathplan;

TEST_CASE("parse_config") {
    SUBCASE("empty object keeps the reference defaults") {
        const ScenarioConfig c = parse_config("{}");
        CHECK(c.seabed.reference_depth_m == 120.0);
        CHECK(c.region.width_ew_m == 7408.0);
        CHECK(c.region.length_ns_m == 3704.0);
        CHECK(c.transducer.opening.deg() == 120.0);
        CHECK(c.headings_deg.size() == 8);
        CHECK(c.distances_nm.size() == 8);
        CHECK(c.eta_target == 0.10);
        CHECK(c.format == OutputFormat::Csv);
        CHECK(c.precision == 6);
    }
    SUBCASE("overrides") {
        const ScenarioConfig c = parse_config(R"({
            "seabed": {"reference_depth_m": 80, "slope_deg": 0},
            "transducer": {"opening_angle_deg": 90},
            "region": {"width_ew_nm": 1, "center_depth_m": 60},
            "planning": {"eta_target": 0.15, "eta_min": 0.1, "eta_max": 0.3},
            "width_table": {"headings_deg": [0, 90], "distances_nm": [0, 1]},
            "output": {"format": "json", "precision": 8}
        })");
        CHECK(c.seabed.reference_depth_m == 80.0);
        CHECK(c.seabed.slope.deg() == 0.0);
        CHECK(c.transducer.opening.deg() == 90.0);
        CHECK(c.region.width_ew_m == 1852.0);
        CHECK(c.region.length_ns_m == 3704.0);
        CHECK(c.eta_target == 0.15);
        CHECK(c.headings_deg == std::vector<double>{0, 90});
        CHECK(c.format == OutputFormat::Json);
        CHECK(c.precision == 8);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_config("{"), ConfigError);
        CHECK_THROWS_AS(parse_config("[]"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"colour": 1})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"seabed": {"depth": 1}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"seabed": {"slope_deg": "steep"}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"seabed": {"slope_deg": 95}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"transducer": {"opening_angle_deg": 0}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"planning": {"eta_target": 1}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"planning": {"eta_min": 0.3, "eta_max": 0.2}})"),
                        ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"width_table": {"headings_deg": [360]}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"width_table": {"distances_nm": [-1]}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"output": {"format": "xml"}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"output": {"precision": 2.5}})"), ConfigError);
        CHECK_THROWS_AS(parse_config(R"({"region": {"center_depth_m": 0}})"), ConfigError);
        CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
    }
}

TEST_CASE("number formatting") {
    CHECK(format_sig(358.52179264, 6) == "358.522");
    CHECK(format_sig(96.99265349, 6) == "96.9927");
    CHECK(format_sig(7398.645157, 6) == "7398.65");
    CHECK(format_sig(68.0, 6) == "68");
    CHECK(format_ratio(0.1000049) == "0.10000");
    CHECK(format_ratio(0.100012) == "0.10001");
    CHECK(round_sig(358.52179264, 6) == 358.522);
}

namespace {

SurveyPlan sample_plan(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> step(1.0, 800.0);
    std::uniform_real_distribution<double> width(10.0, 900.0);
    std::uniform_real_distribution<double> ratio(0.0, 1.0);
    SurveyPlan plan;
    double x = step(rng);
    for (std::size_t i = 0; i < n; ++i) {
        LinePlacement p{x, 0.0, width(rng), std::nullopt};
        if (i > 0) p.overlap_with_previous = ratio(rng);
        plan.placements.push_back(p);
        x += step(rng);
    }
    plan.line_length_m = 3704.0;
    plan.total_track_nm = 2.0 * static_cast<double>(n);
    return plan;
}

}  // namespace

TEST_CASE("plan text round trip is a fixed point after one write") {
    std::mt19937_64 rng(42);
    for (const OutputFormat fmt : {OutputFormat::Csv, OutputFormat::Json}) {
        for (int precision : {3, 6, 9}) {
            for (std::size_t n : {1u, 2u, 17u}) {
                const SurveyPlan plan = sample_plan(rng, n);
                std::ostringstream first;
                write_plan(first, plan, 96.9927, fmt, precision);
                std::istringstream in(first.str());
                SurveyPlan back = read_plan(in);
                back.line_length_m = plan.line_length_m;
                back.total_track_nm = plan.total_track_nm;
                std::ostringstream second;
                write_plan(second, back, 96.9927, fmt, precision);
                CHECK(first.str() == second.str());
                CHECK(back.line_count() == n);
            }
        }
    }
}

TEST_CASE("read_plan rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_plan(in);
    };
    CHECK_THROWS_AS(parse(""), PlanParseError);
    CHECK_THROWS_AS(parse("x,y,z\n1,,2\n"), PlanParseError);
    CHECK_THROWS_AS(parse("x_m,overlap_prev,width_m\n1,,2,3\n"), PlanParseError);
    CHECK_THROWS_AS(parse("x_m,overlap_prev,width_m\nabc,,2\n"), PlanParseError);
    CHECK_THROWS_AS(parse("x_m,overlap_prev,width_m\n1,0.1,2\n"), PlanParseError);
    CHECK_THROWS_AS(parse("x_m,overlap_prev,width_m\n1,,2\n3,,2\n"), PlanParseError);
    CHECK_THROWS_AS(parse("x_m,overlap_prev,width_m\n5,,2\n3,0.1,2\n"), PlanParseError);
    CHECK_THROWS_AS(parse("x_m,overlap_prev,width_m\n5,,-2\n"), PlanParseError);
    CHECK_THROWS_AS(parse("x_m,overlap_prev,width_m\n5,,nan\n"), PlanParseError);
    CHECK_THROWS_AS(parse("{\"lines\": 3}"), PlanParseError);
    CHECK_THROWS_AS(parse("{\"lines\": [{\"x_m\": 1}]}"), PlanParseError);
    CHECK_THROWS_AS(parse("{\"lines\": [{\"x_m\": 1, \"width_m\": 2, \"overlap_prev\": 0.1}]}"),
                    PlanParseError);
    CHECK_THROWS_AS(parse("{\"lines\": [}"), PlanParseError);

    const SurveyPlan ok = parse("# comment\nx_m,overlap_prev,width_m\n1,,2\n\n4, 0.1 ,2\n# end\n");
    CHECK(ok.line_count() == 2);
    CHECK(*ok.placements[1].overlap_with_previous == 0.1);
}
