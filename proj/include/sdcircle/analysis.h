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

#ifndef SDCIRCLE_ANALYSIS_H_
#define SDCIRCLE_ANALYSIS_H_

#include <functional>
#include <span>
#include <vector>

#include "sdcircle/bandlimited.h"
#include "sdcircle/difference.h"
#include "sdcircle/quantizer.h"

namespace sdcircle {

// Upper bound on sup_t |f(t) - f_r(t)| for a run of order m.
//
//   m = 1:  ||u|| / N * ||phi'||_L1 + |u_{N-1}| / N * ||phi||_inf
//   m >= 2: (2 pi)^{m-1} ||u|| / N^m * (||phi^(m)||_L1 + ||phi^(m-1)||_inf)
//           + 1/N * sum_{k=1}^{m-1} (2 pi / N)^{k-1} |D^{m-k} u_{N-1}|
//                                   * ||phi^(k-1)||_inf
//
// where phi is the Dirichlet kernel and ||u|| = max_n |u_n|.
struct ErrorBound {
  int order = 0;
  double state_sup = 0.0;
  // |D^{m-k} u_{N-1}| for k = 1..m-1; for m = 1 the single entry |u_{N-1}|.
  std::vector<double> boundary_terms;
  // Norms in the order they enter the formula: the L1 norm of phi^(m)
  // followed by the sup norms of phi^(0..m-1).
  std::vector<double> kernel_norms;
  double main_term = 0.0;
  double boundary_sum = 0.0;
  double value = 0.0;
};

ErrorBound reconstruction_error_bound(const QuantizationRun& run,
                                      const DirichletKernel& kernel);

// Memoized kernel_norms, safe to call from several threads.
KernelNorms cached_kernel_norms(const DirichletKernel& kernel, int order);

// Checks that D^k f_k, with f_n = f(t - 2 pi n / N), equals
// (-1)^k (2 pi / N)^k d for some d between the min and max of f^(k) on the
// k-step stencil [t - 2 pi k / N, t]. The single-step interval
// [t - 2 pi / N, t] is reported as well.
struct DifferenceContainment {
  double difference = 0.0;        // D^k f_k
  double derivative_value = 0.0;  // the implied d
  double stencil_min = 0.0;
  double stencil_max = 0.0;
  double step_min = 0.0;
  double step_max = 0.0;
  double slack = 0.0;             // rounding allowance on d
  bool contained = false;
  bool contained_in_step = false;
};

DifferenceContainment difference_containment(
    const std::function<double(double)>& f,
    const std::function<double(double)>& kth_derivative, int k, double t,
    int n);

DifferenceContainment kernel_difference_containment(
    const DirichletKernel& kernel, int k, double t, int n);

// phi(t - 2 pi n / N) for n = first..last, with n reduced modulo N so the
// sequence is exactly N-periodic.
std::vector<double> kernel_sequence(const DirichletKernel& kernel, double t,
                                    int n, int first, int last);

// Both sides of the order-m summation by parts with zero u history:
//   sum_n (D^m u)_n phi_n
//     = (-1)^m sum_n u_n (D^m phi)_{n+m}
//       + sum_{k=1}^m (-1)^{k+1} (D^{m-k} u)_{N-1} (D^{k-1} phi)_{N+k-1}
struct SummationByParts {
  double lhs = 0.0;
  double rhs = 0.0;
};

SummationByParts summation_by_parts(std::span<const double> u, int order,
                                    const DirichletKernel& kernel, double t);

// |sum y - sum q| / N, a lower bound on the sup reconstruction error.
double averaging_lower_bound(std::span<const double> samples,
                             std::span<const double> bits);

// Ordinary least squares slope of log(error) against log(n).
double fit_loglog_slope(std::span<const double> n,
                        std::span<const double> error);

}  // namespace sdcircle

#endif  // SDCIRCLE_ANALYSIS_H_
