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

#ifndef SDCIRCLE_RECONSTRUCTION_H_
#define SDCIRCLE_RECONSTRUCTION_H_

#include <optional>
#include <span>
#include <vector>

#include "sdcircle/analysis.h"
#include "sdcircle/bandlimited.h"
#include "sdcircle/quantizer.h"

namespace sdcircle {

// f_r(t) = (1/N) sum_n a_n phi^K(t - 2 pi n / N), by direct summation.
// Throws LengthMismatch if coefficients.size() != n.
double reconstruct(std::span<const double> coefficients, int n,
                   const DirichletKernel& kernel, double t);

// The same f_r as a trigonometric polynomial: its Fourier coefficients are
// (1/N) sum_n a_n e^{-2 pi i k n / N} for |k| <= K. Costs O(NK) once, after
// which each evaluation is O(K).
TorusSignal lowpass_signal(std::span<const double> coefficients,
                           const DirichletKernel& kernel);

struct ErrorReport {
  std::vector<double> grid;            // t_j = 2 pi j / M
  std::vector<double> signed_error;    // f(t_j) - f_r(t_j)
  std::vector<double> pointwise_error; // |f(t_j) - f_r(t_j)|
  double sup_error = 0.0;
  double mean_error = 0.0;             // mean of the pointwise error
  double mean_signed_error = 0.0;
  std::optional<ErrorBound> theoretical_bound;
};

// Error of the reconstruction from `coefficients` against `signal` on a
// uniform grid of `grid_resolution` points. Throws std::invalid_argument if
// grid_resolution < N.
ErrorReport error_report(const TorusSignal& signal,
                         std::span<const double> coefficients,
                         int grid_resolution, const DirichletKernel& kernel);

ErrorReport error_report(const TorusSignal& signal,
                         std::span<const double> coefficients,
                         int grid_resolution);

// As above for the bits of `run`; attaches the reconstruction error bound
// for orders 1 and 2. The kernel bandwidth defaults to the signal's.
ErrorReport error_report(const TorusSignal& signal, const QuantizationRun& run,
                         int grid_resolution);

ErrorReport error_report(const TorusSignal& signal, const QuantizationRun& run,
                         int grid_resolution, const DirichletKernel& kernel);

inline constexpr int kDefaultGridFactor = 10;

}  // namespace sdcircle

#endif  // SDCIRCLE_RECONSTRUCTION_H_
