#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "crlh/presets.hpp"
#include "crlh/serialize.hpp"
#include "crlh/sweep.hpp"
#include "test_support.hpp"

using namespace crlh;
using crlh_test::rel_err;

TEST_CASE("builtin_preset fig2 carries the tabulated elements and series") {
    const SweepSpec spec = builtin_preset(FigurePreset::Fig2);
    CHECK(spec.params.c_l == 148e-6);
    CHECK(spec.params.l_l == 595e-6);
    CHECK(spec.params.c_r == 35e-3);
    CHECK(spec.params.l_r == 480e-12);
    CHECK(rel_err(spec.params.z0, 1.0735283075271127e-06) < 1e-9);  // calibrated
    CHECK(spec.axis == SweepAxis::Omega);
    CHECK(spec.grid.lo == 0.5e9);
    CHECK(spec.grid.hi == 5e9);
    CHECK(spec.grid.count == 256);
    CHECK(spec.grid.spacing == GridSpacing::Log);
    REQUIRE(spec.series.size() == 4);
    CHECK(spec.series[0].kind == SeriesOverride::Kind::Temperature);
    CHECK(spec.series[0].value == 5.0);
    CHECK(spec.series[3].value == 150.0);
    CHECK(spec.base_state.n == 5);
    CHECK(spec.base_state.current_fluctuation == 25.0);
}

TEST_CASE("builtin_preset fig3 and fig4 families") {
    const SweepSpec fig3 = builtin_preset(FigurePreset::Fig3);
    CHECK(fig3.axis == SweepAxis::Temperature);
    REQUIRE(fig3.omega.has_value());
    CHECK(*fig3.omega == 2.9e9);
    REQUIRE(fig3.series.size() == 4);
    CHECK(fig3.series[0].kind == SeriesOverride::Kind::PhotonNumber);
    CHECK(fig3.series[0].value == 1.0);
    CHECK(fig3.series[1].value == 3.0);
    CHECK(fig3.series[2].value == 6.0);
    CHECK(fig3.series[3].value == 10.0);
    CHECK(fig3.base_state.current_fluctuation == 1.0);
    CHECK(rel_err(fig3.params.z0, 1.7115832323776793e-06) < 1e-9);

    const SweepSpec fig4 = builtin_preset(FigurePreset::Fig4);
    REQUIRE(fig4.series.size() == 4);
    CHECK(fig4.series[0].kind == SeriesOverride::Kind::Fluctuation);
    CHECK(fig4.series[0].value == 1.0);
    CHECK(fig4.series[1].value == 1.5);
    CHECK(fig4.series[2].value == 3.0);
    CHECK(fig4.series[3].value == 4.5);
    CHECK(fig4.base_state.n == 1);
    CHECK(rel_err(fig4.params.z0, 1.512838997874473e-06) < 1e-9);
}

TEST_CASE("parse_preset round-trips names and rejects unknowns") {
    CHECK(parse_preset("fig2") == FigurePreset::Fig2);
    CHECK(parse_preset("fig3") == FigurePreset::Fig3);
    CHECK(parse_preset("fig4") == FigurePreset::Fig4);
    CHECK(preset_name(FigurePreset::Fig4) == "fig4");
    CHECK_THROWS_AS(parse_preset("fig5"), std::invalid_argument);
}

TEST_CASE("run_sweep emits series x grid records in sorted order") {
    SweepSpec spec = builtin_preset(FigurePreset::Fig3);
    spec.grid.count = 2;
    spec.series.resize(1);
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.records.size() == 2);
    CHECK(r.records[0].abscissa == 5.0);
    CHECK(r.records[1].abscissa == 300.0);
    CHECK(r.series_labels == std::vector<std::string>{"n=1"});

    const SweepResult full = run_sweep(builtin_preset(FigurePreset::Fig3));
    REQUIRE(full.records.size() == 4 * 256);
    int prev_series = 0;
    double prev_x = 0.0;
    for (const auto& rec : full.records) {
        REQUIRE(rec.series_index >= prev_series);
        if (rec.series_index != prev_series) {
            prev_series = rec.series_index;
            prev_x = 0.0;
        }
        CHECK(rec.abscissa > prev_x);
        prev_x = rec.abscissa;
    }
}

TEST_CASE("fig2 sweep: permeability negative at every record") {
    const SweepResult r = run_sweep(builtin_preset(FigurePreset::Fig2));
    REQUIRE(r.records.size() == 4 * 256);
    for (const auto& rec : r.records) {
        CHECK(rec.mu_eff < 0.0);
    }
    // Hot curve, low frequency: inside the left-handed window.
    const SweepRecord& hot_low = r.records[3 * 256];  // T = 150 K series, 0.5e9 rad/s
    CHECK(hot_low.epsilon_eff < 0.0);
    CHECK(hot_low.handedness == Handedness::LeftHanded);
}

TEST_CASE("record handedness is consistent with the classification rule") {
    const SweepResult r = run_sweep(builtin_preset(FigurePreset::Fig2));
    for (const auto& rec : r.records) {
        const Handedness expected =
            classify_handedness(rec.epsilon_eff, rec.mu_eff,
                                r.spec.tolerances.epsilon_rel * r.spec.params.c_r,
                                r.spec.tolerances.mu_rel * r.spec.params.l_r);
        CHECK(rec.handedness == expected);
    }
}

TEST_CASE("parallel and serial sweeps are bit-identical") {
    const SweepSpec spec = builtin_preset(FigurePreset::Fig2);
    const SweepResult serial = run_sweep(spec, 1);
    const SweepResult parallel = run_sweep(spec, 4);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].series_index == parallel.records[i].series_index);
        CHECK(serial.records[i].abscissa == parallel.records[i].abscissa);
        CHECK(serial.records[i].epsilon_eff == parallel.records[i].epsilon_eff);
        CHECK(serial.records[i].mu_eff == parallel.records[i].mu_eff);
        CHECK(serial.records[i].handedness == parallel.records[i].handedness);
    }
}

TEST_CASE("rerunning a sweep yields byte-identical serialization") {
    const SweepSpec spec = builtin_preset(FigurePreset::Fig4);
    const std::string a = to_csv(run_sweep(spec));
    const std::string b = to_csv(run_sweep(spec));
    CHECK(a == b);
    const std::string ja = to_json_string(run_sweep(spec));
    const std::string jb = to_json_string(run_sweep(spec));
    CHECK(ja == jb);
}

TEST_CASE("sweep spec validation rejects malformed specs") {
    SweepSpec spec = builtin_preset(FigurePreset::Fig3);
    spec.grid.lo = 400.0;  // lo > hi
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);

    spec = builtin_preset(FigurePreset::Fig3);
    spec.grid.count = 1;
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);

    spec = builtin_preset(FigurePreset::Fig3);
    spec.series.clear();
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);

    spec = builtin_preset(FigurePreset::Fig3);
    spec.series[0] = {SeriesOverride::Kind::Temperature, 50.0};  // T override on T axis
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);

    spec = builtin_preset(FigurePreset::Fig3);
    spec.omega.reset();  // temperature sweep needs fixed omega
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);

    spec = builtin_preset(FigurePreset::Fig3);
    spec.series[0] = {SeriesOverride::Kind::PhotonNumber, 2.5};  // non-integer n
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

TEST_CASE("sweep errors are tagged with series and abscissa") {
    SweepSpec spec = builtin_preset(FigurePreset::Fig3);
    spec.params.l_l = 1e-300;  // drives the response bracket to overflow
    spec.base_state.current_fluctuation = 1e-300;
    spec.series = {{SeriesOverride::Kind::Fluctuation, 1e-300}};
    try {
        run_sweep(spec);
        FAIL("expected a tagged evaluation error");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("series") != std::string::npos);
        CHECK(msg.find("abscissa") != std::string::npos);
    }
}
