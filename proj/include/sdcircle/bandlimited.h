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

#ifndef SDCIRCLE_BANDLIMITED_H_
#define SDCIRCLE_BANDLIMITED_H_

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace sdcircle {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// One real trigonometric term a*cos(k t) + b*sin(k t).
struct TrigTerm {
  int frequency = 0;
  double cos_amplitude = 0.0;
  double sin_amplitude = 0.0;
};

// A real-valued K-bandlimited function on the circle, stored by its Fourier
// coefficients c_{-K}..c_{K}. Coefficients satisfy c_{-k} = conj(c_k).
class TorusSignal {
 public:
  // The zero function with bandwidth 0.
  TorusSignal();

  // `coefficients` holds c_{-K}..c_{K} and must have odd length. Throws
  // std::invalid_argument if the Hermitian symmetry is violated.
  explicit TorusSignal(std::vector<std::complex<double>> coefficients);

  static TorusSignal constant(double value);

  // offset + sum of terms. Bandwidth is the largest frequency present, or
  // `min_bandwidth` if that is larger.
  static TorusSignal trigonometric(double offset, std::span<const TrigTerm> terms,
                                   int min_bandwidth = 0);

  int bandwidth() const { return bandwidth_; }

  // c_k, or zero outside [-K, K].
  std::complex<double> coefficient(int k) const;
  std::span<const std::complex<double>> coefficients() const {
    return coefficients_;
  }

  // f + delta.
  TorusSignal shifted(double delta) const;

  // Same function, zero-padded to a larger bandwidth.
  TorusSignal with_bandwidth(int bandwidth) const;

  // sum_k |c_k|, an upper bound on the sup norm.
  double coefficient_l1_norm() const;

  friend TorusSignal operator-(const TorusSignal& a, const TorusSignal& b);

 private:
  int bandwidth_ = 0;
  std::vector<std::complex<double>> coefficients_;
};

// Fourier synthesis sum_k c_k e^{ikt}.
std::complex<double> evaluate_complex(const TorusSignal& signal, double t);

// Real part of evaluate_complex; the imaginary residue is discarded.
double evaluate(const TorusSignal& signal, double t);

// Evaluates at t_j = 2*pi*j/M, j = 0..M-1.
std::vector<double> evaluate_on_grid(const TorusSignal& signal, int points);

// f(t) = 0.1 sin(5t) cos(10t) + 0.2, with K = 15.
TorusSignal figure1_signal();

// Random real signal of bandwidth K whose coefficient l1 norm, and hence sup
// norm, is `max_amplitude` at most.
TorusSignal random_signal(std::mt19937_64& rng, int bandwidth,
                          double max_amplitude);

// N uniform samples y_n = f(2*pi*n/N) of a signal of bandwidth K.
class SampleGrid {
 public:
  // Raw samples. `source_bandwidth` is the bandwidth they are attributed to.
  // Throws UndersampledError if values.size() < 2K+1.
  SampleGrid(std::vector<double> values, int source_bandwidth);

  int size() const { return static_cast<int>(values_.size()); }
  int source_bandwidth() const { return source_bandwidth_; }
  std::span<const double> values() const { return values_; }
  double operator[](int n) const { return values_[n]; }

  // lambda = (N-1)/(2K); infinite for K = 0.
  double oversampling() const;
  double sup_norm() const;
  double sum() const;

  // y_n + delta for every n.
  SampleGrid shifted(double delta) const;

 private:
  std::vector<double> values_;
  int source_bandwidth_;
};

// Throws UndersampledError if n < 2K+1.
SampleGrid sample(const TorusSignal& signal, int n);

// phi^K(x) = sin((2K+1)x/2) / sin(x/2), the reproducing kernel of
// K-bandlimited functions.
class DirichletKernel {
 public:
  explicit DirichletKernel(int bandwidth);
  int bandwidth() const { return bandwidth_; }

 private:
  int bandwidth_;
};

// Below this |sin(x/2)| the kernel is evaluated through its Fourier sum.
inline constexpr double kKernelSingularityThreshold = 1e-6;

double kernel_value(const DirichletKernel& kernel, double x);

// order-th derivative of sum_{|k|<=K} e^{ikx}, differentiated term by term.
// order 0 returns the Fourier-sum form of the kernel itself.
double kernel_derivative(const DirichletKernel& kernel, int order, double x);

struct KernelNorms {
  double l1 = 0.0;   // integral of |phi^(p)| over one period
  double sup = 0.0;  // max of |phi^(p)|
};

// L1 and sup norms of the derivative_order-th kernel derivative. Composite
// Simpson on 50(2K+1)+1 points, doubled until the L1 value changes by less
// than 1e-6 relative; the sup is refined around the grid maximum.
KernelNorms kernel_norms(const DirichletKernel& kernel, int derivative_order);

}  // namespace sdcircle

#endif  // SDCIRCLE_BANDLIMITED_H_
