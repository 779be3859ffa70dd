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

#include "sdcircle/reconstruction.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "sdcircle/errors.h"

namespace sdcircle {

double reconstruct(std::span<const double> coefficients, int n,
                   const DirichletKernel& kernel, double t) {
  if (n <= 0 || static_cast<int>(coefficients.size()) != n) {
    throw LengthMismatch("reconstruct: " + std::to_string(coefficients.size()) +
                         " coefficients for N = " + std::to_string(n));
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    total += coefficients[i] * kernel_value(kernel, t - kTwoPi * i / n);
  }
  return total / n;
}

TorusSignal lowpass_signal(std::span<const double> coefficients,
                           const DirichletKernel& kernel) {
  const int n = static_cast<int>(coefficients.size());
  if (n == 0) throw LengthMismatch("lowpass_signal: empty coefficient list");
  const int bandwidth = kernel.bandwidth();
  std::vector<std::complex<double>> c(2 * bandwidth + 1);
  for (int k = 0; k <= bandwidth; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
      // Reduce k*i modulo N before scaling so the angle stays exact.
      const long long phase = (static_cast<long long>(k) * i) % n;
      const double angle = -kTwoPi * static_cast<double>(phase) / n;
      acc += coefficients[i] * std::complex<double>(std::cos(angle),
                                                    std::sin(angle));
    }
    acc /= static_cast<double>(n);
    if (k == 0) acc.imag(0.0);
    c[bandwidth + k] = acc;
    c[bandwidth - k] = std::conj(acc);
  }
  return TorusSignal(std::move(c));
}

ErrorReport error_report(const TorusSignal& signal,
                         std::span<const double> coefficients,
                         int grid_resolution, const DirichletKernel& kernel) {
  const int n = static_cast<int>(coefficients.size());
  if (n == 0) throw LengthMismatch("error_report: empty coefficient list");
  if (grid_resolution < n) {
    throw std::invalid_argument("error_report: grid resolution " +
                                std::to_string(grid_resolution) +
                                " below N = " + std::to_string(n));
  }
  const TorusSignal difference = signal - lowpass_signal(coefficients, kernel);

  ErrorReport report;
  report.grid.resize(grid_resolution);
  report.signed_error = evaluate_on_grid(difference, grid_resolution);
  report.pointwise_error.resize(grid_resolution);
  double abs_total = 0.0;
  double signed_total = 0.0;
  for (int j = 0; j < grid_resolution; ++j) {
    report.grid[j] = kTwoPi * j / grid_resolution;
    const double e = report.signed_error[j];
    report.pointwise_error[j] = std::abs(e);
    report.sup_error = std::max(report.sup_error, std::abs(e));
    abs_total += std::abs(e);
    signed_total += e;
  }
  report.mean_error = abs_total / grid_resolution;
  report.mean_signed_error = signed_total / grid_resolution;
  return report;
}

ErrorReport error_report(const TorusSignal& signal,
                         std::span<const double> coefficients,
                         int grid_resolution) {
  return error_report(signal, coefficients, grid_resolution,
                      DirichletKernel(signal.bandwidth()));
}

ErrorReport error_report(const TorusSignal& signal, const QuantizationRun& run,
                         int grid_resolution, const DirichletKernel& kernel) {
  ErrorReport report = error_report(signal, run.bits, grid_resolution, kernel);
  if (run.order == 1 || run.order == 2) {
    report.theoretical_bound = reconstruction_error_bound(run, kernel);
  }
  return report;
}

ErrorReport error_report(const TorusSignal& signal, const QuantizationRun& run,
                         int grid_resolution) {
  return error_report(signal, run, grid_resolution,
                      DirichletKernel(signal.bandwidth()));
}

}  // namespace sdcircle
