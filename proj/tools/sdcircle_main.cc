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

// sdcircle: experiment runner for 1-bit sigma-delta quantization on the
// circle.
//
//   sdcircle figure1 [--preset paper-fig1] [--order 1 2] [--out dir]
//   sdcircle sweep   [--sweep 301,601,...] [--no-update]
//   sdcircle quantize --order 2 --tabs 4 --n 9002
//   sdcircle verify
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 a threshold or
// identity check failed.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdcircle/errors.h"
#include "sdcircle/harness/config.h"
#include "sdcircle/harness/experiments.h"
#include "sdcircle/harness/verify.h"

namespace {

using sdcircle::harness::ExperimentConfig;

constexpr int kExitConfig = 1;
constexpr int kExitThreshold = 2;

struct CommonFlags {
  std::string config_path;
  std::string preset;
  std::vector<int> orders;
  std::optional<int> tabs;
  std::vector<double> taps;
  std::optional<int> n;
  std::string sweep;
  bool update = true;
  CLI::Option* update_opt = nullptr;
  std::string out;
  std::optional<int> resolution;
  std::optional<unsigned long long> seed;
  std::optional<int> random_signals;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "key = value configuration file");
  cmd->add_option("--preset", f.preset, "named preset (paper-fig1)");
  cmd->add_option("--order", f.orders, "scheme order(s)");
  cmd->add_option("--tabs", f.tabs, "tap count k of the second-order filter");
  cmd->add_option("--taps", f.taps, "explicit feedback taps h_0..h_k");
  cmd->add_option("--n", f.n, "number of samples N");
  cmd->add_option("--sweep", f.sweep,
                  "comma-separated N values, or 'default'");
  f.update_opt = cmd->add_flag("--update,!--no-update", f.update,
                               "apply the constant update");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--resolution", f.resolution,
                  "evaluation grid points (default 10 N)");
  cmd->add_option("--seed", f.seed, "seed for randomized checks");
  cmd->add_option("--random-signals", f.random_signals,
                  "number of random signals in verify");
}

ExperimentConfig resolve(const CommonFlags& f) {
  ExperimentConfig config;
  if (!f.config_path.empty()) {
    config = sdcircle::harness::load_config(f.config_path);
  } else if (f.preset.empty()) {
    config = sdcircle::harness::preset_config("paper-fig1");
  }
  using sdcircle::harness::apply_setting;
  if (!f.preset.empty()) apply_setting(config, "preset", f.preset);
  if (!f.orders.empty()) {
    std::string list;
    for (int m : f.orders) list += std::to_string(m) + ",";
    apply_setting(config, "order", list);
  }
  if (f.tabs) apply_setting(config, "tabs", std::to_string(*f.tabs));
  if (!f.taps.empty()) {
    std::string list;
    for (double h : f.taps) list += std::to_string(h) + " ";
    apply_setting(config, "taps", list);
  }
  if (f.n) apply_setting(config, "n", std::to_string(*f.n));
  if (!f.sweep.empty()) apply_setting(config, "sweep", f.sweep);
  if (f.update_opt->count() > 0) config.update = f.update;
  if (!f.out.empty()) apply_setting(config, "out", f.out);
  if (f.resolution) {
    apply_setting(config, "resolution", std::to_string(*f.resolution));
  }
  if (f.seed) apply_setting(config, "seed", std::to_string(*f.seed));
  if (f.random_signals) {
    apply_setting(config, "random_signals", std::to_string(*f.random_signals));
  }
  sdcircle::harness::validate(config);
  return config;
}

void list_files(const std::vector<std::filesystem::path>& files) {
  for (const auto& p : files) std::cout << "wrote " << p.string() << "\n";
}

int cmd_figure1(const ExperimentConfig& config) {
  const auto result = sdcircle::harness::run_figure1(config);
  for (const auto& fig : result.schemes) {
    const auto& plan = fig.plan;
    if (!plan.baseline_run.stability_satisfied) {
      std::cerr << "warning: " << fig.label
                << ": samples exceed the stability margin "
                << fig.stability_margin << "\n";
    }
    std::printf("%-12s delta=% .6e remainder=% .6e sup|f-f_r|=%.6e", fig.label.c_str(),
                plan.delta, plan.baseline_remainder, fig.baseline.sup_error);
    if (fig.updated) {
      std::printf(" remainder~=% .3e sup|f~-f~_r|=%.6e", plan.updated_remainder,
                  fig.updated_vs_shifted.sup_error);
    }
    std::printf("\n");
  }
  list_files(result.files);
  return 0;
}

int cmd_sweep(const ExperimentConfig& config) {
  const auto result = sdcircle::harness::run_decay_sweep(config);
  for (const auto& curve : result.curves) {
    std::printf("%-12s %-9s slope=% .3f", curve.label.c_str(),
                curve.updated ? "updated" : "baseline", curve.slope);
    if (curve.threshold) {
      std::printf(" (%s %.1f) %s", curve.threshold->at_most ? "<=" : ">=",
                  curve.threshold->value, curve.passes ? "PASS" : "FAIL");
    }
    std::printf("\n");
  }
  list_files(result.files);
  return result.all_pass ? 0 : kExitThreshold;
}

int cmd_verify(const ExperimentConfig& config) {
  bool all = true;
  for (const auto& check : sdcircle::harness::verify_identities(config)) {
    std::printf("%s %s (%s)\n", check.passed ? "PASS" : "FAIL",
                check.name.c_str(), check.detail.c_str());
    all = all && check.passed;
  }
  return all ? 0 : kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sigma-delta quantization on the circle: experiments"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto* figure1 = app.add_subcommand("figure1", "reproduce the error figure");
  auto* sweep = app.add_subcommand("sweep", "error decay against N");
  auto* quantize = app.add_subcommand("quantize", "dump q/v/u traces as CSV");
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  for (auto* cmd : {figure1, sweep, quantize, verify}) add_common(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const ExperimentConfig config = resolve(flags);
    if (*figure1) return cmd_figure1(config);
    if (*sweep) return cmd_sweep(config);
    if (*quantize) {
      list_files(sdcircle::harness::run_quantize_dump(config));
      return 0;
    }
    if (*verify) return cmd_verify(config);
  } catch (const sdcircle::Error& e) {
    std::cerr << "sdcircle: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
