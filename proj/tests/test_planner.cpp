#include <doctest.h>

#include <cmath>
#include <random>

#include "swathplan/planner.hpp"

using namespace swathplan;

namespace {

Angle deg(double d) { return Angle::degrees(d); }

const TransducerSpec kFan120{deg(120.0)};
const SurveyRegion kReferenceRegion{nm_to_m(4.0), nm_to_m(2.0), 110.0, deg(1.5)};

// Frozen from a 50-digit root solve of the same placement equations.
constexpr double kFirstX = 358.521792642108;
constexpr double kSecondX = 951.797352403247;
constexpr double kThirdX = 1498.43016712486;
constexpr double kLastX = 7398.64515768292;
constexpr double kLastWidth = 46.0177544399801;

}  // namespace

TEST_CASE("derive_profile") {
    const DepthProfile p = derive_profile(kReferenceRegion);
    CHECK(std::abs(p.edge_offset_d1_m - 96.9927) < 1e-3);
    CHECK(p.edge_offset_d1_m == doctest::Approx(96.99265349226838).epsilon(1e-12));
    CHECK(p.west_edge_depth_m == doctest::Approx(206.99265349226838).epsilon(1e-12));

    const DepthProfile flat = derive_profile({5000.0, 1000.0, 80.0, deg(0.0)});
    CHECK(flat.edge_offset_d1_m == 0.0);
    CHECK(flat.west_edge_depth_m == 80.0);

    const DepthProfile steep = derive_profile({2000.0, 1000.0, 80.0, deg(3.0)});
    CHECK(steep.edge_offset_d1_m == doctest::Approx(52.4077793).epsilon(1e-8));

    CHECK_THROWS_AS(derive_profile({0.0, 1.0, 1.0, deg(1.0)}), SurveyError);
    CHECK_THROWS_AS(derive_profile({1.0, 1.0, -1.0, deg(1.0)}), SurveyError);
}

TEST_CASE("depth_at_x") {
    const DepthProfile p = derive_profile(kReferenceRegion);
    CHECK(std::abs(depth_at_x(p, nm_to_m(2.0)) - 110.0) < 1e-6);
    CHECK(std::abs(depth_at_x(p, 0.0) - 206.9927) < 1e-3);
    CHECK(depth_at_x(p, 951.734) == doctest::Approx(182.0706216).epsilon(1e-9));
    try {
        depth_at_x(p, 1e6);
        FAIL("expected surfaced seabed");
    } catch (const SurveyError& e) {
        CHECK(e.code() == ErrorCode::SurfacedSeabed);
    }
}

TEST_CASE("first_line_position") {
    const DepthProfile p = derive_profile(kReferenceRegion);
    const double x1 = first_line_position(p, kFan120);
    CHECK(std::abs(x1 - 358.522) < 0.1);
    CHECK(std::abs(x1 - kFirstX) < 1e-8);

    // Deep edge lands on the west boundary.
    const HorizontalFootprint fp = footprint_at_x(p, kFan120, x1);
    CHECK(std::abs(x1 - fp.deep_m) < 1e-9);

    const DepthProfile flat = derive_profile({nm_to_m(4.0), nm_to_m(2.0), 110.0, deg(0.0)});
    CHECK(first_line_position(flat, kFan120) ==
          doctest::Approx(110.0 * std::tan(deg(60.0).rad())).epsilon(1e-12));

    // theta = 90 deg, 50-digit root solve
    CHECK(first_line_position(p, TransducerSpec{deg(90.0)}) ==
          doctest::Approx(206.992653492268).epsilon(1e-12));

    SUBCASE("no feasible start") {
        // A narrow, deep strip: the swath edge is always west of x = 0.
        const DepthProfile narrow = derive_profile({50.0, 100.0, 500.0, deg(1.0)});
        try {
            first_line_position(narrow, kFan120);
            FAIL("expected no feasible start");
        } catch (const SurveyError& e) {
            CHECK(e.code() == ErrorCode::NoFeasibleStart);
        }
    }
    SUBCASE("grazing slope") {
        const DepthProfile steep = derive_profile({1000.0, 100.0, 500.0, deg(31.0)});
        try {
            first_line_position(steep, kFan120);
            FAIL("expected grazing error");
        } catch (const SurveyError& e) {
            CHECK(e.code() == ErrorCode::BeamGrazesSeabed);
        }
    }
}

TEST_CASE("next_line_position") {
    const DepthProfile p = derive_profile(kReferenceRegion);
    CHECK(std::abs(next_line_position(p, kFan120, 358.522, 0.10) - 951.734) < 0.5);
    CHECK(std::abs(next_line_position(p, kFan120, 951.734, 0.10) - 1498.31) < 0.5);
    CHECK(std::abs(next_line_position(p, kFan120, kFirstX, 0.10) - kSecondX) < 1e-7);

    SUBCASE("achieved overlap sits at the bottom of the window") {
        for (double eta : {0.05, 0.1, 0.2, 0.5, 0.99}) {
            const double x = next_line_position(p, kFan120, 1200.0, eta);
            const double w0 = swath_at_x(p, kFan120, 1200.0).total_width_m;
            const double w1 = swath_at_x(p, kFan120, x).total_width_m;
            const double achieved = overlap_ratio(x - 1200.0, w0, w1);
            CHECK(achieved >= eta);
            CHECK(achieved <= eta + kOverlapWindow);
        }
    }
    SUBCASE("flat seabed spacing is (1 - eta) W") {
        const DepthProfile flat = derive_profile({nm_to_m(4.0), nm_to_m(2.0), 37.0, deg(0.0)});
        const double w = swath_at_x(flat, kFan120, 0.0).total_width_m;
        for (double eta : {0.1, 0.15, 0.3}) {
            const double spacing = next_line_position(flat, kFan120, 500.0, eta) - 500.0;
            CHECK(std::abs(spacing - (1.0 - eta) * w) <= 1e-9 * spacing);
        }
    }
    SUBCASE("bad targets") {
        CHECK_THROWS_AS(next_line_position(p, kFan120, 500.0, 0.0), SurveyError);
        CHECK_THROWS_AS(next_line_position(p, kFan120, 500.0, 1.0), SurveyError);
    }
    SUBCASE("region exhausted near the shoreline") {
        // At 20 deg the seabed surfaces 2.75 D east of a line at depth D, where the
        // overlap with the vanishing swath is still ~10%; a 5% target is never met.
        const SurveyRegion shore{2000.0, 1000.0, 100.0, deg(20.0)};
        const DepthProfile sp = derive_profile(shore);
        try {
            next_line_position(sp, kFan120, 1000.0, 0.05);
            FAIL("expected region exhausted");
        } catch (const SurveyError& e) {
            CHECK(e.code() == ErrorCode::RegionExhausted);
        }
    }
}

TEST_CASE("plan_survey reference scenario") {
    const SurveyPlan plan = plan_survey(kReferenceRegion, kFan120, 0.10);
    REQUIRE(plan.line_count() == 34);
    CHECK(plan.total_track_nm == doctest::Approx(68.0).epsilon(1e-12));
    CHECK(plan.line_length_m == nm_to_m(2.0));

    const auto& pl = plan.placements;
    CHECK(std::abs(pl[0].x_m - kFirstX) < 1e-7);
    CHECK(std::abs(pl[1].x_m - kSecondX) < 1e-6);
    CHECK(std::abs(pl[2].x_m - kThirdX) < 1e-6);
    CHECK(std::abs(pl.back().x_m - kLastX) < 1e-5);
    CHECK(pl.back().swath_width_m == doctest::Approx(kLastWidth).epsilon(1e-9));
    CHECK_FALSE(pl[0].overlap_with_previous.has_value());

    const double east_edge =
        pl.back().x_m + footprint_at_x(derive_profile(kReferenceRegion), kFan120, pl.back().x_m).shallow_m;
    CHECK(east_edge >= kReferenceRegion.width_ew_m);
    CHECK(east_edge == doctest::Approx(7420.60293).epsilon(1e-8));

    for (std::size_t i = 1; i < pl.size(); ++i) {
        REQUIRE(pl[i].overlap_with_previous.has_value());
        CHECK(*pl[i].overlap_with_previous >= 0.10);
        CHECK(*pl[i].overlap_with_previous <= 0.10 + kOverlapWindow);
        CHECK(pl[i].x_m > pl[i - 1].x_m);
        CHECK(pl[i].swath_width_m < pl[i - 1].swath_width_m);
        CHECK(pl[i].depth_m < pl[i - 1].depth_m);
        if (i >= 2) {
            CHECK(pl[i].x_m - pl[i - 1].x_m < pl[i - 1].x_m - pl[i - 2].x_m);
        }
    }
}

TEST_CASE("plan_survey flat closed form") {
    const SurveyRegion flat{2000.0, 500.0, 100.0, deg(0.0)};
    const SurveyPlan plan = plan_survey(flat, TransducerSpec{deg(90.0)}, 0.10);
    // First line at 100 m, 180 m spacing, last shallow edge at 2000 m.
    REQUIRE(plan.line_count() == 11);
    CHECK(plan.placements.front().x_m == doctest::Approx(100.0).epsilon(1e-12));
    for (std::size_t i = 1; i < plan.line_count(); ++i) {
        const double spacing = plan.placements[i].x_m - plan.placements[i - 1].x_m;
        CHECK(std::abs(spacing - 180.0) <= 1e-9 * 180.0);
    }
}

TEST_CASE("plan_survey coverage chaining on random scenarios") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> alpha(0.0, 3.0);
    std::uniform_real_distribution<double> theta(60.0, 150.0);
    std::uniform_real_distribution<double> eta(0.05, 0.25);
    int planned = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const SurveyRegion region{nm_to_m(4.0), nm_to_m(2.0), 250.0, deg(alpha(rng))};
        const TransducerSpec fan{deg(theta(rng))};
        const double target = eta(rng);
        const SurveyPlan plan = plan_survey(region, fan, target);
        const DepthProfile p = derive_profile(region);
        ++planned;
        const auto& pl = plan.placements;
        CHECK(std::abs(pl.front().x_m - footprint_at_x(p, fan, pl.front().x_m).deep_m) < 1e-3);
        for (std::size_t i = 1; i < pl.size(); ++i) {
            const double prev_east = pl[i - 1].x_m + footprint_at_x(p, fan, pl[i - 1].x_m).shallow_m;
            const double next_west = pl[i].x_m - footprint_at_x(p, fan, pl[i].x_m).deep_m;
            CHECK(prev_east > next_west);
            CHECK(*pl[i].overlap_with_previous >= target);
            CHECK(*pl[i].overlap_with_previous <= target + kOverlapWindow);
        }
        CHECK(pl.back().x_m + footprint_at_x(p, fan, pl.back().x_m).shallow_m >= region.width_ew_m);
    }
    CHECK(planned == 40);
}

TEST_CASE("plan_survey determinism") {
    const SurveyPlan a = plan_survey(kReferenceRegion, kFan120, 0.12);
    const SurveyPlan b = plan_survey(kReferenceRegion, kFan120, 0.12);
    REQUIRE(a.line_count() == b.line_count());
    for (std::size_t i = 0; i < a.line_count(); ++i) {
        CHECK(a.placements[i].x_m == b.placements[i].x_m);
        CHECK(a.placements[i].swath_width_m == b.placements[i].swath_width_m);
    }
}

TEST_CASE("plan_survey errors carry the partial plan") {
    // East edge surfaces: center 20 m with a 2 NM half-width at 1.5 deg.
    const SurveyRegion shoaling{nm_to_m(4.0), nm_to_m(2.0), 20.0, deg(1.5)};
    try {
        plan_survey(shoaling, kFan120, 0.10);
        FAIL("expected a planning error");
    } catch (const PlanningError& e) {
        CHECK(e.code() == ErrorCode::SurfacedSeabed);
        CHECK(e.partial_plan().line_count() == 0);
    }
    // Steep slope: the shoreline lies past the east edge, but the bracket of a
    // late line crosses it before a 5% overlap is reached.
    const SurveyRegion steep{400.0, 100.0, 100.0, deg(20.0)};
    try {
        plan_survey(steep, kFan120, 0.05);
        FAIL("expected a planning error");
    } catch (const PlanningError& e) {
        CHECK(e.code() == ErrorCode::RegionExhausted);
        CHECK(e.partial_plan().line_count() > 0);
        CHECK(e.partial_plan().total_track_nm ==
              doctest::Approx(m_to_nm(100.0) * e.partial_plan().line_count()));
    }
    CHECK_THROWS_AS(plan_survey(kReferenceRegion, kFan120, 0.0), SurveyError);
}
