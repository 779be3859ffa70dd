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

#include "sdcircle/bandlimited.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "sdcircle/errors.h"

namespace sdcircle {
namespace {

constexpr double kHermitianTolerance = 1e-12;

// Re(i^p e^{i k x}) for the term-by-term kernel derivative.
double rotated_real_part(int order, double kx) {
  switch (order % 4) {
    case 0:
      return std::cos(kx);
    case 1:
      return -std::sin(kx);
    case 2:
      return -std::cos(kx);
    default:
      return std::sin(kx);
  }
}

double golden_section_max(auto&& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 80; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

TorusSignal::TorusSignal() : coefficients_{{0.0, 0.0}} {}

TorusSignal::TorusSignal(std::vector<std::complex<double>> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() % 2 == 0) {
    throw std::invalid_argument(
        "TorusSignal: coefficient list must have odd length 2K+1");
  }
  bandwidth_ = static_cast<int>(coefficients_.size() / 2);
  for (int k = 0; k <= bandwidth_; ++k) {
    const auto pos = coefficients_[bandwidth_ + k];
    const auto neg = coefficients_[bandwidth_ - k];
    const double scale = std::max(1.0, std::abs(pos));
    if (std::abs(neg - std::conj(pos)) > kHermitianTolerance * scale) {
      throw std::invalid_argument("TorusSignal: coefficients c_" +
                                  std::to_string(k) + " and c_-" +
                                  std::to_string(k) +
                                  " are not complex conjugates");
    }
  }
}

TorusSignal TorusSignal::constant(double value) {
  return TorusSignal(std::vector<std::complex<double>>{{value, 0.0}});
}

TorusSignal TorusSignal::trigonometric(double offset,
                                       std::span<const TrigTerm> terms,
                                       int min_bandwidth) {
  int bandwidth = std::max(min_bandwidth, 0);
  for (const auto& term : terms) {
    if (term.frequency < 0) {
      throw std::invalid_argument("TorusSignal: negative term frequency");
    }
    bandwidth = std::max(bandwidth, term.frequency);
  }
  std::vector<std::complex<double>> c(2 * bandwidth + 1);
  c[bandwidth] += offset;
  for (const auto& term : terms) {
    const int k = term.frequency;
    if (k == 0) {
      c[bandwidth] += term.cos_amplitude;
      continue;
    }
    // a cos(kt) + b sin(kt) = (a/2 - ib/2) e^{ikt} + (a/2 + ib/2) e^{-ikt}
    const std::complex<double> half(term.cos_amplitude / 2.0,
                                    -term.sin_amplitude / 2.0);
    c[bandwidth + k] += half;
    c[bandwidth - k] += std::conj(half);
  }
  return TorusSignal(std::move(c));
}

std::complex<double> TorusSignal::coefficient(int k) const {
  if (k < -bandwidth_ || k > bandwidth_) return {0.0, 0.0};
  return coefficients_[bandwidth_ + k];
}

TorusSignal TorusSignal::shifted(double delta) const {
  TorusSignal out = *this;
  out.coefficients_[bandwidth_] += delta;
  return out;
}

TorusSignal TorusSignal::with_bandwidth(int bandwidth) const {
  if (bandwidth <= bandwidth_) return *this;
  std::vector<std::complex<double>> c(2 * bandwidth + 1);
  for (int k = -bandwidth_; k <= bandwidth_; ++k) {
    c[bandwidth + k] = coefficients_[bandwidth_ + k];
  }
  return TorusSignal(std::move(c));
}

double TorusSignal::coefficient_l1_norm() const {
  double total = 0.0;
  for (const auto& c : coefficients_) total += std::abs(c);
  return total;
}

TorusSignal operator-(const TorusSignal& a, const TorusSignal& b) {
  const int bandwidth = std::max(a.bandwidth_, b.bandwidth_);
  std::vector<std::complex<double>> c(2 * bandwidth + 1);
  for (int k = -bandwidth; k <= bandwidth; ++k) {
    c[bandwidth + k] = a.coefficient(k) - b.coefficient(k);
  }
  return TorusSignal(std::move(c));
}

std::complex<double> evaluate_complex(const TorusSignal& signal, double t) {
  const int bandwidth = signal.bandwidth();
  std::complex<double> total = signal.coefficient(0);
  for (int k = 1; k <= bandwidth; ++k) {
    const double kt = k * t;
    const std::complex<double> e(std::cos(kt), std::sin(kt));
    total += signal.coefficient(k) * e + signal.coefficient(-k) * std::conj(e);
  }
  return total;
}

double evaluate(const TorusSignal& signal, double t) {
  const int bandwidth = signal.bandwidth();
  double total = signal.coefficient(0).real();
  for (int k = 1; k <= bandwidth; ++k) {
    const double kt = k * t;
    const double ck = std::cos(kt);
    const double sk = std::sin(kt);
    const auto pos = signal.coefficient(k);
    const auto neg = signal.coefficient(-k);
    total += (pos.real() + neg.real()) * ck - (pos.imag() - neg.imag()) * sk;
  }
  return total;
}

std::vector<double> evaluate_on_grid(const TorusSignal& signal, int points) {
  if (points <= 0) {
    throw std::invalid_argument("evaluate_on_grid: point count must be > 0");
  }
  std::vector<double> out(points);
  for (int j = 0; j < points; ++j) {
    out[j] = evaluate(signal, kTwoPi * j / points);
  }
  return out;
}

TorusSignal figure1_signal() {
  // 0.1 sin(5t) cos(10t) = 0.05 sin(15t) - 0.05 sin(5t)
  const TrigTerm terms[] = {{5, 0.0, -0.05}, {15, 0.0, 0.05}};
  return TorusSignal::trigonometric(0.2, terms);
}

TorusSignal random_signal(std::mt19937_64& rng, int bandwidth,
                          double max_amplitude) {
  if (bandwidth < 0) {
    throw std::invalid_argument("random_signal: negative bandwidth");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> fill(0.5, 1.0);
  std::vector<std::complex<double>> c(2 * bandwidth + 1);
  c[bandwidth] = normal(rng);
  for (int k = 1; k <= bandwidth; ++k) {
    const std::complex<double> ck(normal(rng), normal(rng));
    c[bandwidth + k] = ck;
    c[bandwidth - k] = std::conj(ck);
  }
  double l1 = 0.0;
  for (const auto& ck : c) l1 += std::abs(ck);
  const double scale = l1 > 0.0 ? max_amplitude * fill(rng) / l1 : 0.0;
  for (auto& ck : c) ck *= scale;
  return TorusSignal(std::move(c));
}

SampleGrid::SampleGrid(std::vector<double> values, int source_bandwidth)
    : values_(std::move(values)), source_bandwidth_(source_bandwidth) {
  if (source_bandwidth_ < 0) {
    throw std::invalid_argument("SampleGrid: negative bandwidth");
  }
  const auto required = 2 * static_cast<std::size_t>(source_bandwidth_) + 1;
  if (!values_.empty() && values_.size() < required) {
    throw UndersampledError("SampleGrid: " + std::to_string(values_.size()) +
                            " samples for bandwidth " +
                            std::to_string(source_bandwidth_) + " (need " +
                            std::to_string(required) + ")");
  }
}

double SampleGrid::oversampling() const {
  if (source_bandwidth_ == 0) return std::numeric_limits<double>::infinity();
  return (size() - 1.0) / (2.0 * source_bandwidth_);
}

double SampleGrid::sup_norm() const {
  double m = 0.0;
  for (double y : values_) m = std::max(m, std::abs(y));
  return m;
}

double SampleGrid::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

SampleGrid SampleGrid::shifted(double delta) const {
  std::vector<double> out(values_);
  for (double& y : out) y += delta;
  return SampleGrid(std::move(out), source_bandwidth_);
}

SampleGrid sample(const TorusSignal& signal, int n) {
  const int bandwidth = signal.bandwidth();
  if (n < 2 * bandwidth + 1) {
    throw UndersampledError("sample: N = " + std::to_string(n) +
                            " is below 2K+1 = " +
                            std::to_string(2 * bandwidth + 1));
  }
  return SampleGrid(evaluate_on_grid(signal, n), bandwidth);
}

DirichletKernel::DirichletKernel(int bandwidth) : bandwidth_(bandwidth) {
  if (bandwidth < 0) {
    throw std::invalid_argument("DirichletKernel: negative bandwidth");
  }
}

double kernel_value(const DirichletKernel& kernel, double x) {
  const double half_sin = std::sin(x / 2.0);
  if (std::abs(half_sin) < kKernelSingularityThreshold) {
    return kernel_derivative(kernel, 0, x);
  }
  return std::sin((2 * kernel.bandwidth() + 1) * (x / 2.0)) / half_sin;
}

double kernel_derivative(const DirichletKernel& kernel, int order, double x) {
  if (order < 0) {
    throw std::invalid_argument("kernel_derivative: negative order");
  }
  double total = 0.0;
  for (int k = kernel.bandwidth(); k >= 1; --k) {
    total += std::pow(static_cast<double>(k), order) *
             rotated_real_part(order, k * x);
  }
  total *= 2.0;
  if (order == 0) total += 1.0;
  return total;
}

KernelNorms kernel_norms(const DirichletKernel& kernel, int derivative_order) {
  if (derivative_order < 0) {
    throw std::invalid_argument("kernel_norms: negative derivative order");
  }
  auto magnitude = [&](double x) {
    return std::abs(kernel_derivative(kernel, derivative_order, x));
  };

  constexpr double kRelativeChange = 1e-6;
  constexpr int kMaxDoublings = 12;

  int intervals = 50 * (2 * kernel.bandwidth() + 1);
  double previous_l1 = -1.0;
  KernelNorms norms;
  double argmax = 0.0;
  double step = 0.0;
  for (int pass = 0; pass <= kMaxDoublings; ++pass, intervals *= 2) {
    step = kTwoPi / intervals;
    double weighted = 0.0;
    double peak = -1.0;
    for (int i = 0; i <= intervals; ++i) {
      const double x = i * step;
      const double value = magnitude(x);
      const double weight = (i == 0 || i == intervals) ? 1.0
                            : (i % 2 == 1)             ? 4.0
                                                       : 2.0;
      weighted += weight * value;
      if (value > peak) {
        peak = value;
        argmax = x;
      }
    }
    norms.l1 = weighted * step / 3.0;
    norms.sup = peak;
    if (previous_l1 >= 0.0 &&
        std::abs(norms.l1 - previous_l1) <= kRelativeChange * norms.l1) {
      break;
    }
    previous_l1 = norms.l1;
  }
  norms.sup = std::max(
      norms.sup, golden_section_max(magnitude, argmax - step, argmax + step));
  return norms;
}

}  // namespace sdcircle
