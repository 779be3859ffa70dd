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

#include "sdcircle/harness/experiments.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "sdcircle/analysis.h"
#include "sdcircle/errors.h"
#include "sdcircle/harness/report_io.h"
#include "sdcircle/harness/svg_plot.h"

namespace sdcircle::harness {
namespace {

using Json = nlohmann::ordered_json;

Json taps_json(const SigmaDeltaScheme& scheme) {
  Json taps = Json::array();
  for (double h : scheme.filter().taps()) taps.push_back(h);
  return taps;
}

Json bound_json(const std::optional<ErrorBound>& bound) {
  if (!bound) return nullptr;
  return Json{{"value", bound->value},
              {"main_term", bound->main_term},
              {"boundary_sum", bound->boundary_sum},
              {"state_sup", bound->state_sup}};
}

std::string signal_name(const ExperimentConfig& config) {
  return config.signal.name;
}

void write_figure1_files(const ExperimentConfig& config, Figure1Result& result,
                         const TorusSignal& signal) {
  const auto& out = config.out_dir;
  std::vector<double> t(result.grid_resolution);
  for (int j = 0; j < result.grid_resolution; ++j) {
    t[j] = kTwoPi * j / result.grid_resolution;
  }

  SvgPlot tilde_plot("Error of the updated schemes against f + delta", "t",
                     "|f~(t) - f~_r(t)|");
  Json summary;
  summary["signal"] = signal_name(config);
  summary["bandwidth"] = result.bandwidth;
  summary["N"] = result.n;
  summary["oversampling"] = (result.n - 1.0) / (2.0 * std::max(1, result.bandwidth));
  summary["grid_resolution"] = result.grid_resolution;
  summary["update"] = config.update;
  summary["signal_mean"] = signal.coefficient(0).real();
  Json schemes = Json::array();

  for (auto& fig : result.schemes) {
    std::vector<std::string> header{"t", "f", "f_r", "f-f_r"};
    if (fig.updated) {
      header = {"t", "f", "f_r", "f_tilde_r", "f-f_r", "f-f_tilde_r",
                "e_tilde"};
    }
    CsvTable table(header);
    for (int j = 0; j < result.grid_resolution; ++j) {
      if (fig.updated) {
        table.add_numeric_row({t[j], fig.f[j], fig.f_r[j], fig.f_tilde_r[j],
                               fig.baseline.signed_error[j],
                               fig.updated_vs_f.signed_error[j],
                               fig.updated_vs_shifted.pointwise_error[j]});
      } else {
        table.add_numeric_row(
            {t[j], fig.f[j], fig.f_r[j], fig.baseline.signed_error[j]});
      }
    }
    const auto csv_path = out / ("figure1_" + fig.label + ".csv");
    table.write(csv_path);
    result.files.push_back(csv_path);

    SvgPlot errors("Signed reconstruction error, " + fig.label, "t", "error");
    errors.add_series({"f - f_r", t, fig.baseline.signed_error});
    if (fig.updated) {
      errors.add_series({"f - f~_r", t, fig.updated_vs_f.signed_error});
      tilde_plot.add_series(
          {fig.label, t, fig.updated_vs_shifted.pointwise_error});
    }
    const auto svg_path = out / ("figure1_" + fig.label + ".svg");
    errors.write(svg_path);
    result.files.push_back(svg_path);

    const auto& plan = fig.plan;
    const auto scheme = build_scheme(fig.spec);
    Json entry;
    entry["label"] = fig.label;
    entry["order"] = fig.spec.order;
    entry["taps"] = taps_json(scheme);
    entry["stability_margin"] = fig.stability_margin;
    entry["stable"] = plan.baseline_run.stability_satisfied;
    entry["delta"] = plan.delta;
    entry["remainder_before"] = plan.baseline_remainder;
    entry["remainder_before_from_sums"] = plan.baseline_run.remainder_from_sums;
    entry["plus_count_before"] = plan.baseline_run.plus_count;
    entry["sup_error_before"] = fig.baseline.sup_error;
    entry["mean_signed_error_before"] = fig.baseline.mean_signed_error;
    entry["spike_ratio_before"] = spike_ratio(fig.baseline);
    entry["bound_before"] = bound_json(fig.baseline.theoretical_bound);
    if (fig.updated) {
      entry["remainder_after"] = plan.updated_remainder;
      entry["plus_count_after"] = plan.updated_run.plus_count;
      entry["bit_flip_count"] = plan.bit_flip_count;
      entry["parity_holds"] = plan.parity_holds;
      Json subs = Json::array();
      for (double s : plan.sub_remainders) subs.push_back(s);
      entry["sub_remainders_after"] = subs;
      entry["sup_error_after_vs_f"] = fig.updated_vs_f.sup_error;
      entry["mean_signed_error_after_vs_f"] = fig.updated_vs_f.mean_signed_error;
      entry["spike_ratio_after"] = spike_ratio(fig.updated_vs_f);
      entry["sup_error_tilde"] = fig.updated_vs_shifted.sup_error;
      entry["bound_tilde"] = bound_json(fig.updated_vs_shifted.theoretical_bound);
    }
    schemes.push_back(entry);
  }
  summary["schemes"] = schemes;

  if (config.update) {
    const auto path = out / "figure1_updated_errors.svg";
    tilde_plot.write(path);
    result.files.push_back(path);
  }
  const auto json_path = out / "figure1_summary.json";
  write_text_file(json_path, summary.dump(2) + "\n");
  result.files.push_back(json_path);
}

void write_sweep_files(const ExperimentConfig& config, SweepResult& result) {
  CsvTable table({"scheme", "update", "N", "sup_error", "bound", "stable",
                  "within_bound"});
  Json summary;
  summary["signal"] = signal_name(config);
  Json curves = Json::array();
  SvgPlot plot("Sup reconstruction error against N", "N", "sup error");
  plot.set_log_x(true);
  plot.set_log_y(true);
  plot.set_markers(true);
  for (const auto& curve : result.curves) {
    std::vector<double> xs;
    std::vector<double> ys;
    Json points = Json::array();
    for (const auto& p : curve.points) {
      table.add_row({curve.label, curve.updated ? "1" : "0", std::to_string(p.n),
                     format_number(p.sup_error), format_number(p.bound),
                     p.stable ? "1" : "0",
                     p.sup_error <= p.bound ? "1" : "0"});
      xs.push_back(p.n);
      ys.push_back(p.sup_error);
      points.push_back(Json{{"N", p.n},
                            {"sup_error", p.sup_error},
                            {"bound", p.bound},
                            {"stable", p.stable}});
    }
    plot.add_series({curve.label + (curve.updated ? " updated" : ""), xs, ys});
    Json entry;
    entry["scheme"] = curve.label;
    entry["updated"] = curve.updated;
    entry["slope"] = curve.slope;
    if (curve.threshold) {
      entry["threshold"] = curve.threshold->value;
      entry["comparison"] = curve.threshold->at_most ? "<=" : ">=";
    } else {
      entry["threshold"] = nullptr;
      entry["comparison"] = nullptr;
    }
    entry["passes"] = curve.passes;
    entry["points"] = points;
    curves.push_back(entry);
  }
  summary["curves"] = curves;
  summary["all_pass"] = result.all_pass;

  const auto csv_path = config.out_dir / "sweep.csv";
  table.write(csv_path);
  const auto json_path = config.out_dir / "sweep_summary.json";
  write_text_file(json_path, summary.dump(2) + "\n");
  const auto svg_path = config.out_dir / "sweep.svg";
  plot.write(svg_path);
  result.files = {csv_path, json_path, svg_path};
}

}  // namespace

double median_abs_error(const ErrorReport& report) {
  std::vector<double> abs = report.pointwise_error;
  if (abs.empty()) return 0.0;
  const auto mid = abs.begin() + abs.size() / 2;
  std::nth_element(abs.begin(), mid, abs.end());
  return *mid;
}

double spike_ratio(const ErrorReport& report) {
  if (report.pointwise_error.empty()) return 0.0;
  const double median = median_abs_error(report);
  const double at_zero = report.pointwise_error.front();
  if (median == 0.0) {
    return at_zero == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return at_zero / median;
}

Figure1Result run_figure1(const ExperimentConfig& config, bool write_files) {
  validate(config);
  const TorusSignal signal = build_signal(config);
  const DirichletKernel kernel(signal.bandwidth());

  Figure1Result result;
  result.bandwidth = signal.bandwidth();
  result.n = config.n;
  result.grid_resolution = grid_points(config, config.n);
  const int m = result.grid_resolution;

  const SampleGrid grid = sample(signal, config.n);
  const auto f_values = evaluate_on_grid(signal, m);

  for (const auto& spec : config.schemes) {
    const auto scheme = build_scheme(spec);
    SchemeFigure fig;
    fig.spec = spec;
    fig.label = scheme_label(spec);
    fig.stability_margin = scheme.stability_margin();
    fig.updated = config.update;
    if (config.update) {
      fig.plan = apply_update(scheme, grid);
    } else {
      fig.plan.order = scheme.order();
      fig.plan.baseline_run = quantize(scheme, grid);
      fig.plan.baseline_remainder = fig.plan.baseline_run.remainder;
      fig.plan.delta = compute_update(fig.plan.baseline_run, grid);
    }
    fig.f = f_values;
    fig.baseline = error_report(signal, fig.plan.baseline_run, m, kernel);
    fig.f_r = evaluate_on_grid(lowpass_signal(fig.plan.baseline_run.bits, kernel), m);
    if (config.update) {
      const auto& bits = fig.plan.updated_run.bits;
      fig.updated_vs_shifted = error_report(signal.shifted(fig.plan.delta),
                                            fig.plan.updated_run, m, kernel);
      fig.updated_vs_f = error_report(signal, bits, m, kernel);
      fig.f_tilde_r = evaluate_on_grid(lowpass_signal(bits, kernel), m);
    }
    result.schemes.push_back(std::move(fig));
  }
  if (write_files) write_figure1_files(config, result, signal);
  return result;
}

std::optional<SlopeThreshold> slope_threshold(int order, bool updated) {
  if (updated && order == 1) return SlopeThreshold{-0.8, true};
  if (updated && order == 2) return SlopeThreshold{-1.8, true};
  if (!updated && order == 2) return SlopeThreshold{-1.3, false};
  return std::nullopt;
}

SweepResult run_decay_sweep(const ExperimentConfig& config, bool write_files) {
  validate(config);
  const auto ns = sweep_values(config);
  if (ns.size() < 6) {
    throw ConfigError("sweep: need at least 6 values of N, got " +
                      std::to_string(ns.size()));
  }
  const auto [lo, hi] = std::minmax_element(ns.begin(), ns.end());
  if (*hi < 10.0 * *lo) {
    throw ConfigError("sweep: values of N must span at least one decade");
  }

  const TorusSignal signal = build_signal(config);
  const DirichletKernel kernel(signal.bandwidth());

  SweepResult result;
  for (const auto& spec : config.schemes) {
    for (bool updated : {false, true}) {
      if (updated && !config.update) continue;
      SweepCurve curve;
      curve.spec = spec;
      curve.label = scheme_label(spec);
      curve.updated = updated;
      curve.threshold = slope_threshold(spec.order, updated);
      result.curves.push_back(std::move(curve));
    }
  }

  for (int n : ns) {
    const SampleGrid grid = sample(signal, n);
    const int m = grid_points(config, n);
    std::size_t c = 0;
    for (const auto& spec : config.schemes) {
      const auto scheme = build_scheme(spec);
      const QuantizationRun baseline = quantize(scheme, grid);
      const auto base = error_report(signal, baseline.bits, m, kernel);
      result.curves[c++].points.push_back(
          {n, base.sup_error, reconstruction_error_bound(baseline, kernel).value,
           baseline.stability_satisfied});
      if (!config.update) continue;
      const UpdatePlan plan = apply_update(scheme, grid);
      const auto& run = plan.updated_run;
      const auto upd =
          error_report(signal.shifted(plan.delta), run.bits, m, kernel);
      result.curves[c++].points.push_back(
          {n, upd.sup_error, reconstruction_error_bound(run, kernel).value,
           run.stability_satisfied});
    }
  }

  for (auto& curve : result.curves) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& p : curve.points) {
      xs.push_back(p.n);
      ys.push_back(p.sup_error);
    }
    curve.slope = fit_loglog_slope(xs, ys);
    if (curve.threshold) {
      curve.passes = curve.threshold->at_most
                         ? curve.slope <= curve.threshold->value
                         : curve.slope >= curve.threshold->value;
    }
    result.all_pass = result.all_pass && curve.passes;
  }
  if (write_files) write_sweep_files(config, result);
  return result;
}

std::vector<std::filesystem::path> run_quantize_dump(
    const ExperimentConfig& config) {
  validate(config);
  const TorusSignal signal = build_signal(config);
  const SampleGrid grid = sample(signal, config.n);
  std::vector<std::filesystem::path> files;
  auto dump = [&](const QuantizationRun& run, const std::string& name) {
    CsvTable table({"n", "y", "q", "v", "u"});
    for (int i = 0; i < run.size(); ++i) {
      table.add_row({std::to_string(i), format_number(run.samples[i]),
                     format_number(run.bits[i]), format_number(run.v[i]),
                     format_number(run.u[i])});
    }
    const auto path = config.out_dir / name;
    table.write(path);
    files.push_back(path);
  };
  for (const auto& spec : config.schemes) {
    const auto scheme = build_scheme(spec);
    const auto label = scheme_label(spec);
    if (config.update) {
      const auto plan = apply_update(scheme, grid);
      dump(plan.baseline_run, "quantize_" + label + ".csv");
      dump(plan.updated_run, "quantize_" + label + "_updated.csv");
    } else {
      dump(quantize(scheme, grid), "quantize_" + label + ".csv");
    }
  }
  return files;
}

}  // namespace sdcircle::harness
