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

#include "sdcircle/harness/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "sdcircle/analysis.h"
#include "sdcircle/reconstruction.h"
#include "sdcircle/update.h"

namespace sdcircle::harness {
namespace {

std::string sci(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// Solves D^m u = y - q with zero history by m cumulative sums.
std::vector<double> solve_forward(const QuantizationRun& run) {
  std::vector<double> u(run.size());
  for (int i = 0; i < run.size(); ++i) u[i] = run.samples[i] - run.bits[i];
  for (int pass = 0; pass < run.order; ++pass) {
    double acc = 0.0;
    for (double& x : u) {
      acc += x;
      x = acc;
    }
  }
  return u;
}

void check_run(const std::string& tag, const QuantizationRun& run,
               std::vector<CheckResult>& out) {
  const auto du = finite_difference(run.u, run.order, Direction::kBackward);
  double residual = 0.0;
  for (int i = 0; i < run.size(); ++i) {
    residual = std::max(residual,
                        std::abs(du[i] - (run.samples[i] - run.bits[i])));
  }
  out.push_back({tag + ": D^m u = y - q", residual < 1e-10,
                 "max residual " + sci(residual)});

  const double gap = std::abs(run.remainder_from_sums - run.remainder);
  out.push_back({tag + ": sum y - sum q = D^{m-1} u_{N-1}", gap < 1e-9,
                 "gap " + sci(gap)});

  const double telescoped = compensated_sum(du);
  const double tgap = std::abs(telescoped - run.remainder);
  out.push_back({tag + ": telescoping sum", tgap < 1e-9, "gap " + sci(tgap)});

  // The forward solve accumulates N^m rounding, so compare a prefix.
  QuantizationRun prefix = run;
  const int keep = std::min(run.size(), 200);
  prefix.samples.resize(keep);
  prefix.bits.resize(keep);
  const auto solved = solve_forward(prefix);
  double diff = 0.0;
  for (int i = 0; i < keep; ++i) diff = std::max(diff, std::abs(solved[i] - run.u[i]));
  out.push_back({tag + ": g * v matches forward solve (first 200)", diff < 1e-9,
                 "max diff " + sci(diff)});
}

}  // namespace

std::vector<CheckResult> verify_identities(const ExperimentConfig& config) {
  validate(config);
  std::vector<CheckResult> out;
  const TorusSignal signal = build_signal(config);
  const DirichletKernel kernel(signal.bandwidth());
  const int n = config.n;
  const SampleGrid grid = sample(signal, n);
  const int points = grid_points(config, n);

  // Kernel and interpolation.
  {
    double worst = 0.0;
    for (int k : {0, 1, n / 3, n - 1}) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += kernel_value(kernel, kTwoPi * k / n - kTwoPi * i / n);
      }
      worst = std::max(worst, std::abs(acc / n - 1.0));
    }
    out.push_back({"kernel reproducing identity", worst < 1e-9,
                   "max deviation " + sci(worst)});

    const auto exact = error_report(signal, grid.values(), points, kernel);
    out.push_back({"interpolation from exact samples", exact.sup_error < 1e-8,
                   "sup error " + sci(exact.sup_error)});

    double route_gap = 0.0;
    const TorusSignal fast = lowpass_signal(grid.values(), kernel);
    for (int j = 0; j < 16; ++j) {
      const double t = kTwoPi * (j + 0.37) / 16.0;
      route_gap = std::max(route_gap,
                           std::abs(reconstruct(grid.values(), n, kernel, t) -
                                    evaluate(fast, t)));
    }
    out.push_back({"direct and spectral reconstruction agree",
                   route_gap < 1e-9, "max gap " + sci(route_gap)});
  }

  for (const auto& spec : config.schemes) {
    const auto scheme = build_scheme(spec);
    const std::string label = scheme_label(spec);
    const bool stable = check_stability(scheme, grid);
    const UpdatePlan plan = apply_update(scheme, grid);

    check_run(label, plan.baseline_run, out);
    check_run(label + " updated", plan.updated_run, out);

    const auto sbp = summation_by_parts(plan.baseline_run.u, scheme.order(),
                                        kernel, 0.7);
    const double sbp_gap = std::abs(sbp.lhs - sbp.rhs);
    out.push_back({label + ": summation by parts", sbp_gap < 1e-9,
                   "gap " + sci(sbp_gap)});

    for (int k = 1; k <= scheme.order(); ++k) {
      const auto c = kernel_difference_containment(kernel, k, 1.0, n);
      out.push_back({label + ": k=" + std::to_string(k) +
                         " difference within derivative range",
                     c.contained,
                     "d = " + sci(c.derivative_value) + " in [" +
                         sci(c.stencil_min) + ", " + sci(c.stencil_max) + "]"});
    }

    out.push_back({label + ": updated remainder = 2(L - L~)", plan.parity_holds,
                   "r~ = " + sci(plan.updated_remainder) + ", L - L~ = " +
                       std::to_string(plan.bit_flip_count)});
    if (plan.zero_guaranteed) {
      out.push_back({label + ": updated remainder vanishes",
                     std::abs(plan.updated_remainder) < kRemainderZeroTolerance,
                     "r~ = " + sci(plan.updated_remainder)});
    }
    if (stable && scheme.order() <= 2) {
      const auto base = error_report(signal, plan.baseline_run, points, kernel);
      const bool ok = base.sup_error <= base.theoretical_bound->value;
      out.push_back({label + ": sup error within bound", ok,
                     sci(base.sup_error) + " <= " +
                         sci(base.theoretical_bound->value)});
      const auto upd = error_report(signal.shifted(plan.delta),
                                    plan.updated_run, points, kernel);
      const bool ok2 = upd.sup_error <= upd.theoretical_bound->value;
      out.push_back({label + " updated: sup error within bound", ok2,
                     sci(upd.sup_error) + " <= " +
                         sci(upd.theoretical_bound->value)});
    }
  }

  // Seeded randomized first-order checks.
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick_k(1, 20);
  int zero_failures = 0;
  int state_failures = 0;
  for (int i = 0; i < config.random_signals; ++i) {
    const int k = pick_k(rng);
    std::uniform_int_distribution<int> pick_n(2 * k + 1, 40 * k + 1);
    const int size = pick_n(rng);
    const auto random = random_signal(rng, k, 1.0);
    const auto plan = apply_update(make_first_order(), sample(random, size));
    if (std::abs(plan.updated_remainder) >= kRemainderZeroTolerance) {
      ++zero_failures;
    }
    for (double u : plan.baseline_run.u) {
      if (std::abs(u) > 1.0 + 1e-12) {
        ++state_failures;
        break;
      }
    }
  }
  out.push_back({"random first-order signals: updated remainder vanishes",
                 zero_failures == 0,
                 std::to_string(zero_failures) + " of " +
                     std::to_string(config.random_signals) + " failed"});
  out.push_back({"random first-order signals: |u_n| <= 1",
                 state_failures == 0,
                 std::to_string(state_failures) + " of " +
                     std::to_string(config.random_signals) + " failed"});
  return out;
}

}  // namespace sdcircle::harness
