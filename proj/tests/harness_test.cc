// Copyright 2026 The sdcircle Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sdcircle/errors.h"
#include "sdcircle/harness/config.h"
#include "sdcircle/harness/experiments.h"
#include "sdcircle/harness/report_io.h"
#include "sdcircle/harness/svg_plot.h"
#include "sdcircle/harness/verify.h"

namespace sdcircle::harness {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("sdcircle_harness_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig small_config(const fs::path& out) {
  auto config = preset_config("paper-fig1");
  config.n = 311;
  config.out_dir = out;
  return config;
}

TEST_CASE("paper-fig1 preset") {
  const auto config = preset_config("paper-fig1");
  CHECK(config.bandwidth == 15);
  CHECK(config.n == 9002);
  CHECK(config.signal.name == "figure1");
  REQUIRE(config.schemes.size() == 2);
  CHECK(scheme_label(config.schemes[0]) == "order1");
  CHECK(scheme_label(config.schemes[1]) == "order2_k4");
  const auto h = build_scheme(config.schemes[1]).filter().taps();
  REQUIRE(h.size() == 5);
  CHECK(std::abs(h[4] + 1.0 / 3.0) < 1e-15);
  CHECK(config.update);
  CHECK_NOTHROW(validate(config));
  CHECK_THROWS_AS(preset_config("nope"), ConfigError);
}

TEST_CASE("default sweep") {
  CHECK(default_sweep(15) == std::vector<int>{301, 601, 1201, 2401, 4801, 9601});
  CHECK(sweep_values(preset_config("paper-fig1")) == default_sweep(15));
}

TEST_CASE("apply_setting") {
  ExperimentConfig config;
  apply_setting(config, "n", " 1001 ");
  CHECK(config.n == 1001);
  apply_setting(config, "order", "1, 2, 3");
  REQUIRE(config.schemes.size() == 3);
  apply_setting(config, "tabs", "6");
  CHECK(scheme_label(config.schemes[1]) == "order2_k6");
  CHECK(scheme_label(config.schemes[2]) == "order3");
  apply_setting(config, "sweep", "101 201 401");
  CHECK(config.sweep == std::vector<int>{101, 201, 401});
  apply_setting(config, "sweep", "default");
  CHECK(config.sweep.empty());
  apply_setting(config, "update", "off");
  CHECK_FALSE(config.update);
  apply_setting(config, "signal.cos", "2:0.1");
  apply_setting(config, "signal.sin", "3:0.2");
  apply_setting(config, "signal.offset", "0.05");
  CHECK(config.signal.name == "custom");
  const auto f = build_signal(config);
  CHECK(f.bandwidth() == 3);
  CHECK(evaluate(f, 0.0) == doctest::Approx(0.15));

  CHECK_THROWS_AS(apply_setting(config, "colour", "red"), ConfigError);
  CHECK_THROWS_AS(apply_setting(config, "n", "12x"), ConfigError);
  CHECK_THROWS_AS(apply_setting(config, "update", "maybe"), ConfigError);
  CHECK_THROWS_AS(apply_setting(config, "signal.cos", "2"), ConfigError);
  CHECK_THROWS_AS(apply_setting(config, "order", "0"), ConfigError);
  CHECK_THROWS_AS(apply_setting(config, "taps", "0 1"), ConfigError);
}

TEST_CASE("explicit schemes") {
  ExperimentConfig config;
  apply_setting(config, "order", "3");
  apply_setting(config, "positions", "1 4 9");
  CHECK(scheme_label(config.schemes[0]) == "order3_p1-4-9");
  CHECK(build_scheme(config.schemes[0]).order() == 3);
  apply_setting(config, "order", "1");
  apply_setting(config, "taps", "0 1");
  CHECK(scheme_label(config.schemes[0]) == "order1_custom");
  CHECK(build_scheme(config.schemes[0]).stability_margin() == 1.0);
  apply_setting(config, "taps", "0 0.5");
  CHECK_THROWS_AS(validate(config), ConfigError);
}

TEST_CASE("validate rejects undersampling") {
  auto config = preset_config("paper-fig1");
  config.n = 30;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config.n = 31;
  CHECK_NOTHROW(validate(config));
  config.sweep = {31, 20};
  CHECK_THROWS_AS(validate(config), ConfigError);
  config.sweep.clear();
  config.bandwidth = 10;
  CHECK_THROWS_AS(build_signal(config), ConfigError);
}

TEST_CASE("load_config") {
  const auto dir = scratch_dir("load");
  fs::create_directories(dir);
  const auto path = dir / "run.cfg";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "preset = paper-fig1\n"
        << "n = 2001   # trailing comment\n"
        << "\n"
        << "order = 2\n"
        << "tabs = 5\n"
        << "seed = 9\n";
  }
  const auto config = load_config(path);
  CHECK(config.n == 2001);
  CHECK(config.seed == 9);
  REQUIRE(config.schemes.size() == 1);
  CHECK(config.schemes[0].tabs == 5);

  {
    std::ofstream out(path);
    out << "n = 100\nbogus\n";
  }
  try {
    load_config(path);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  CHECK_THROWS_AS(load_config(dir / "missing.cfg"), ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("run_figure1 on a small grid") {
  const auto dir = scratch_dir("fig1");
  const auto result = run_figure1(small_config(dir));
  CHECK(result.n == 311);
  CHECK(result.grid_resolution == 3110);
  REQUIRE(result.schemes.size() == 2);
  for (const auto& fig : result.schemes) {
    CHECK(fig.updated);
    CHECK(fig.f.size() == 3110);
    CHECK(std::abs(fig.plan.updated_remainder) < 1e-9);
    REQUIRE(fig.updated_vs_shifted.theoretical_bound.has_value());
    CHECK(fig.updated_vs_shifted.sup_error <=
          fig.updated_vs_shifted.theoretical_bound->value);
    CHECK(fig.updated_vs_f.sup_error < fig.baseline.sup_error);
  }
  for (const char* name : {"figure1_order1.csv", "figure1_order2_k4.csv",
                           "figure1_order1.svg", "figure1_order2_k4.svg",
                           "figure1_updated_errors.svg", "figure1_summary.json"}) {
    CHECK_MESSAGE(fs::exists(dir / name), name);
  }
  const auto csv = read_file(dir / "figure1_order1.csv");
  CHECK(csv.rfind("t,f,f_r,f_tilde_r,f-f_r,f-f_tilde_r,e_tilde\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3111);

  const auto summary = nlohmann::json::parse(read_file(dir / "figure1_summary.json"));
  CHECK(summary["N"] == 311);
  CHECK(summary["schemes"].size() == 2);
  CHECK(summary["schemes"][0]["parity_holds"] == true);
  fs::remove_all(dir);
}

TEST_CASE("run_figure1 without the update") {
  const auto dir = scratch_dir("fig1_noupdate");
  auto config = small_config(dir);
  config.update = false;
  const auto result = run_figure1(config);
  for (const auto& fig : result.schemes) CHECK_FALSE(fig.updated);
  const auto csv = read_file(dir / "figure1_order1.csv");
  CHECK(csv.rfind("t,f,f_r,f-f_r\n", 0) == 0);
  CHECK_FALSE(fs::exists(dir / "figure1_updated_errors.svg"));
  fs::remove_all(dir);
}

TEST_CASE("run_figure1 is deterministic") {
  const auto a = scratch_dir("det_a");
  const auto b = scratch_dir("det_b");
  run_figure1(small_config(a));
  run_figure1(small_config(b));
  for (const auto& entry : fs::directory_iterator(a)) {
    const auto name = entry.path().filename();
    CHECK_MESSAGE(read_file(entry.path()) == read_file(b / name), name.string());
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("zero signal") {
  auto config = small_config(scratch_dir("zero"));
  config.signal = SignalSpec{"zero", 0.0, {}};
  config.n = 312;
  const auto result = run_figure1(config, false);
  for (const auto& fig : result.schemes) {
    // g has non-dyadic taps for order 2, so u carries rounding.
    CHECK(std::abs(fig.plan.delta) < 1e-15);
    CHECK(std::abs(fig.plan.updated_remainder) < 1e-9);
  }
}

TEST_CASE("decay sweep") {
  const auto dir = scratch_dir("sweep");
  auto config = preset_config("paper-fig1");
  config.out_dir = dir;
  const auto result = run_decay_sweep(config);
  REQUIRE(result.curves.size() == 4);
  CHECK(result.all_pass);
  for (const auto& curve : result.curves) {
    CHECK(curve.points.size() == 6);
    CHECK(curve.passes);
    for (const auto& p : curve.points) {
      if (p.stable && curve.spec.order <= 2) CHECK(p.sup_error <= p.bound);
    }
    if (curve.updated && curve.spec.order == 1) CHECK(curve.slope <= -0.8);
    if (curve.updated && curve.spec.order == 2) CHECK(curve.slope <= -1.8);
    if (!curve.updated && curve.spec.order == 2) CHECK(curve.slope >= -1.3);
  }
  CHECK(fs::exists(dir / "sweep.csv"));
  CHECK(fs::exists(dir / "sweep.svg"));
  const auto csv = read_file(dir / "sweep.csv");
  CHECK(csv.rfind("scheme,update,N,sup_error,bound,stable,within_bound\n", 0) == 0);
  const auto summary = nlohmann::json::parse(read_file(dir / "sweep_summary.json"));
  CHECK(summary["all_pass"] == true);
  fs::remove_all(dir);

  config.sweep = {301, 601, 1201, 2401, 4801};
  CHECK_THROWS_AS(run_decay_sweep(config, false), ConfigError);
  config.sweep = {301, 350, 400, 450, 500, 550};
  CHECK_THROWS_AS(run_decay_sweep(config, false), ConfigError);
}

TEST_CASE("slope thresholds") {
  REQUIRE(slope_threshold(1, true).has_value());
  CHECK(slope_threshold(1, true)->value == -0.8);
  CHECK(slope_threshold(2, true)->value == -1.8);
  CHECK(slope_threshold(2, false)->value == -1.3);
  CHECK_FALSE(slope_threshold(2, false)->at_most);
  CHECK_FALSE(slope_threshold(1, false).has_value());
  CHECK_FALSE(slope_threshold(3, true).has_value());
}

TEST_CASE("quantize dump") {
  const auto dir = scratch_dir("dump");
  auto config = small_config(dir);
  const auto files = run_quantize_dump(config);
  CHECK(files.size() == 4);
  const auto csv = read_file(dir / "quantize_order1.csv");
  CHECK(csv.rfind("n,y,q,v,u\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 312);
  CHECK(fs::exists(dir / "quantize_order1_updated.csv"));
  fs::remove_all(dir);
}

TEST_CASE("spike ratio and median") {
  ErrorReport report;
  report.signed_error = {5.0, 1.0, -1.0, 2.0, -2.0};
  report.pointwise_error = {5.0, 1.0, 1.0, 2.0, 2.0};
  CHECK(median_abs_error(report) == 2.0);
  CHECK(spike_ratio(report) == 2.5);
}

TEST_CASE("CsvTable") {
  CsvTable table({"a", "b"});
  table.add_row({"x", "y"});
  table.add_numeric_row({1.0, -0.25});
  CHECK(table.rows() == 2);
  CHECK(table.str() ==
        "a,b\nx,y\n1.000000000000e+00,-2.500000000000e-01\n");
  CHECK_THROWS(table.add_row({"only one"}));
  CHECK(format_number(0.1) == "1.000000000000e-01");
}

TEST_CASE("write_text_file creates directories and reports failures") {
  const auto dir = scratch_dir("io");
  write_text_file(dir / "a" / "b.txt", "hello\n");
  CHECK(read_file(dir / "a" / "b.txt") == "hello\n");
  // A regular file where a directory is expected.
  CHECK_THROWS_AS(write_text_file(dir / "a" / "b.txt" / "c.txt", "x"), IoError);
  fs::remove_all(dir);
}

TEST_CASE("SvgPlot") {
  SvgPlot plot("title & more", "x", "y");
  plot.add_series({"s", {1, 2, 3, 4}, {1, 4, 9, 16}});
  plot.set_log_x(true);
  plot.set_log_y(true);
  plot.set_markers(true);
  const auto svg = plot.render();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("title &amp; more") != std::string::npos);
  CHECK(svg == plot.render());
}

TEST_CASE("verify_identities") {
  auto config = preset_config("paper-fig1");
  config.random_signals = 5;
  const auto checks = verify_identities(config);
  CHECK(checks.size() >= 10);
  for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

}  // namespace
}  // namespace sdcircle::harness
