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

#include "sdcircle/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "sdcircle/errors.h"

namespace sdcircle {
namespace {

constexpr int kRangeSamples = 4001;

std::pair<double, double> sampled_range(
    const std::function<double(double)>& f, double lo, double hi) {
  double mn = std::numeric_limits<double>::infinity();
  double mx = -mn;
  for (int i = 0; i < kRangeSamples; ++i) {
    const double x = lo + (hi - lo) * i / (kRangeSamples - 1);
    const double value = f(x);
    mn = std::min(mn, value);
    mx = std::max(mx, value);
  }
  return {mn, mx};
}

}  // namespace

KernelNorms cached_kernel_norms(const DirichletKernel& kernel, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, KernelNorms> cache;
  const std::pair<int, int> key{kernel.bandwidth(), order};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const KernelNorms norms = kernel_norms(kernel, order);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, norms);
  return norms;
}

ErrorBound reconstruction_error_bound(const QuantizationRun& run,
                                      const DirichletKernel& kernel) {
  const int m = run.order;
  if (m < 1) throw std::invalid_argument("error bound: run order must be >= 1");
  const double n = run.size();
  if (n == 0) throw EmptyGrid("error bound: empty run");

  ErrorBound bound;
  bound.order = m;
  bound.state_sup = run.state_sup();

  const double top_l1 = cached_kernel_norms(kernel, m).l1;
  bound.kernel_norms.push_back(top_l1);
  std::vector<double> sups;
  for (int p = 0; p < m; ++p) sups.push_back(cached_kernel_norms(kernel, p).sup);
  bound.kernel_norms.insert(bound.kernel_norms.end(), sups.begin(), sups.end());

  if (m == 1) {
    const double last = std::abs(run.u.back());
    bound.boundary_terms.push_back(last);
    bound.main_term = bound.state_sup / n * top_l1;
    bound.boundary_sum = last / n * sups[0];
  } else {
    const double step = kTwoPi / n;
    bound.main_term = std::pow(kTwoPi, m - 1) * bound.state_sup /
                      std::pow(n, m) * (top_l1 + sups[m - 1]);
    double boundary = 0.0;
    for (int k = 1; k <= m - 1; ++k) {
      const double term = std::abs(run.end_difference(m - k));
      bound.boundary_terms.push_back(term);
      boundary += std::pow(step, k - 1) * term * sups[k - 1];
    }
    bound.boundary_sum = boundary / n;
  }
  bound.value = bound.main_term + bound.boundary_sum;
  return bound;
}

DifferenceContainment difference_containment(
    const std::function<double(double)>& f,
    const std::function<double(double)>& kth_derivative, int k, double t,
    int n) {
  if (k < 1) throw std::invalid_argument("difference_containment: k < 1");
  if (n < 1) throw std::invalid_argument("difference_containment: N < 1");
  const double step = kTwoPi / n;

  // D^k f_k = sum_j (-1)^j C(k, j) f_{k-j}
  double difference = 0.0;
  double magnitude = 0.0;
  double binomial = 1.0;
  for (int j = 0; j <= k; ++j) {
    const double value = f(t - step * (k - j));
    difference += ((j % 2 == 0) ? binomial : -binomial) * value;
    magnitude += binomial * std::abs(value);
    binomial = binomial * (k - j) / (j + 1);
  }

  DifferenceContainment out;
  out.difference = difference;
  const double scale = ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(step, k);
  out.derivative_value = difference / scale;
  out.slack = 8.0 * std::numeric_limits<double>::epsilon() * magnitude /
              std::abs(scale);
  std::tie(out.stencil_min, out.stencil_max) =
      sampled_range(kth_derivative, t - step * k, t);
  std::tie(out.step_min, out.step_max) =
      sampled_range(kth_derivative, t - step, t);
  out.contained = out.derivative_value >= out.stencil_min - out.slack &&
                  out.derivative_value <= out.stencil_max + out.slack;
  out.contained_in_step = out.derivative_value >= out.step_min - out.slack &&
                          out.derivative_value <= out.step_max + out.slack;
  return out;
}

DifferenceContainment kernel_difference_containment(
    const DirichletKernel& kernel, int k, double t, int n) {
  return difference_containment(
      [&](double x) { return kernel_value(kernel, x); },
      [&](double x) { return kernel_derivative(kernel, k, x); }, k, t, n);
}

std::vector<double> kernel_sequence(const DirichletKernel& kernel, double t,
                                    int n, int first, int last) {
  std::vector<double> out;
  out.reserve(std::max(0, last - first + 1));
  for (int i = first; i <= last; ++i) {
    const int reduced = ((i % n) + n) % n;
    out.push_back(kernel_value(kernel, t - kTwoPi * reduced / n));
  }
  return out;
}

SummationByParts summation_by_parts(std::span<const double> u, int order,
                                    const DirichletKernel& kernel, double t) {
  if (order < 1) throw std::invalid_argument("summation_by_parts: order < 1");
  const int n = static_cast<int>(u.size());
  if (n == 0) throw EmptyGrid("summation_by_parts: empty sequence");

  // phi_i for i = 0..N+order-1 (periodic, no history needed for the lhs).
  const auto phi = kernel_sequence(kernel, t, n, 0, n + order - 1);
  const auto du = finite_difference(u, order, Direction::kBackward);

  SummationByParts out;
  for (int i = 0; i < n; ++i) out.lhs += du[i] * phi[i];

  // (D^m phi)_{i+m} = forward difference of phi at i.
  const auto fwd = finite_difference(phi, order, Direction::kForward);
  double interior = 0.0;
  for (int i = 0; i < n; ++i) interior += u[i] * fwd[i];
  out.rhs = ((order % 2 == 0) ? 1.0 : -1.0) * interior;

  for (int k = 1; k <= order; ++k) {
    const double u_term = backward_difference_at(u, order - k, n - 1);
    // (D^{k-1} phi)_{N+k-1} over the periodic sequence, using only indices
    // >= N so no history is involved.
    double phi_term = 0.0;
    double binomial = 1.0;
    for (int j = 0; j <= k - 1; ++j) {
      phi_term += ((j % 2 == 0) ? binomial : -binomial) * phi[n + k - 1 - j];
      binomial = binomial * (k - 1 - j) / (j + 1);
    }
    out.rhs += ((k % 2 == 1) ? 1.0 : -1.0) * u_term * phi_term;
  }
  return out;
}

double averaging_lower_bound(std::span<const double> samples,
                             std::span<const double> bits) {
  if (samples.size() != bits.size()) {
    throw LengthMismatch("averaging_lower_bound: sequence lengths differ");
  }
  if (samples.empty()) throw EmptyGrid("averaging_lower_bound: empty input");
  return std::abs(compensated_sum(samples) - compensated_sum(bits)) /
         static_cast<double>(samples.size());
}

double fit_loglog_slope(std::span<const double> n,
                        std::span<const double> error) {
  if (n.size() != error.size()) {
    throw LengthMismatch("fit_loglog_slope: sequence lengths differ");
  }
  if (n.size() < 2) {
    throw std::invalid_argument("fit_loglog_slope: need at least two points");
  }
  const double count = static_cast<double>(n.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    mx += std::log(n[i]);
    my += std::log(error[i]);
  }
  mx /= count;
  my /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double dx = std::log(n[i]) - mx;
    sxy += dx * (std::log(error[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace sdcircle
