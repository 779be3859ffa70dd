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

#include "sdcircle/quantizer.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "sdcircle/difference.h"
#include "sdcircle/errors.h"

namespace sdcircle {
namespace {

constexpr double kTapSumTolerance = 1e-12;
constexpr double kSupportTolerance = 1e-9;
constexpr double kRemainderTolerance = 1e-9;

// Dense Gaussian elimination with partial pivoting; a is row-major n x n.
std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (std::abs(a[pivot * n + col]) < 1e-300) {
      throw InvalidFilter("make_minimal_support: singular moment system");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a[pivot * n + c], a[col * n + c]);
      }
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / a[col * n + col];
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i * n + c] * x[c];
    x[i] = acc / a[i * n + i];
  }
  return x;
}

}  // namespace

FeedbackFilter::FeedbackFilter(int order, std::vector<double> taps)
    : order_(order), taps_(std::move(taps)) {
  if (order_ < 1) throw InvalidFilter("FeedbackFilter: order must be >= 1");
  if (taps_.size() < 2) {
    throw InvalidFilter("FeedbackFilter: need at least two taps");
  }
  if (taps_[0] != 0.0) {
    throw InvalidFilter("FeedbackFilter: h_0 must be 0");
  }
  double total = 0.0;
  for (double h : taps_) total += h;
  if (std::abs(total - 1.0) > kTapSumTolerance * std::max(1.0, l1_norm())) {
    throw InvalidFilter("FeedbackFilter: taps sum to " +
                        std::to_string(total) + ", expected 1");
  }
}

double FeedbackFilter::l1_norm() const {
  double total = 0.0;
  for (double h : taps_) total += std::abs(h);
  return total;
}

GFilter GFilter::derive(const FeedbackFilter& filter) {
  std::vector<double> seq(filter.taps().begin(), filter.taps().end());
  for (double& x : seq) x = -x;
  seq[0] += 1.0;
  const double scale = std::max(1.0, filter.l1_norm());
  for (int pass = 0; pass < filter.order(); ++pass) {
    if (seq.size() < 2) {
      throw InvalidFilter("GFilter: " + std::to_string(filter.tab_count()) +
                          " taps cannot support an order-" +
                          std::to_string(filter.order()) + " scheme");
    }
    double running = 0.0;
    for (double& x : seq) {
      running += x;
      x = running;
    }
    // Past the support the partial sums stay at seq.back().
    if (std::abs(seq.back()) > kSupportTolerance * scale) {
      throw InvalidFilter("GFilter: cumulative sum " + std::to_string(pass + 1) +
                          " of delta^0 - h does not vanish (tail value " +
                          std::to_string(seq.back()) + ")");
    }
    seq.pop_back();
  }
  return GFilter(std::move(seq));
}

SigmaDeltaScheme::SigmaDeltaScheme(FeedbackFilter filter)
    : filter_(std::move(filter)),
      g_(GFilter::derive(filter_)),
      margin_(2.0 - filter_.l1_norm()) {}

SigmaDeltaScheme make_first_order() {
  return SigmaDeltaScheme(FeedbackFilter(1, {0.0, 1.0}));
}

SigmaDeltaScheme make_second_order(int k) {
  if (k < 2) {
    throw InvalidTabCount("make_second_order: k = " + std::to_string(k) +
                          ", need k >= 2");
  }
  std::vector<double> taps(k + 1, 0.0);
  const double h1 = static_cast<double>(k) / (k - 1);
  taps[1] = h1;
  taps[k] = 1.0 - h1;
  return SigmaDeltaScheme(FeedbackFilter(2, std::move(taps)));
}

SigmaDeltaScheme make_minimal_support(int order,
                                      std::span<const int> positions) {
  if (order < 1 || static_cast<int>(positions.size()) != order) {
    throw InvalidFilter("make_minimal_support: need exactly `order` positions");
  }
  std::set<int> unique(positions.begin(), positions.end());
  if (unique.size() != positions.size() || *unique.begin() < 1) {
    throw InvalidFilter(
        "make_minimal_support: positions must be distinct and >= 1");
  }
  // Row r: sum_j j^r h_j = [r == 0].
  const std::size_t n = positions.size();
  std::vector<double> a(n * n);
  std::vector<double> b(n, 0.0);
  b[0] = 1.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a[r * n + c] = std::pow(static_cast<double>(positions[c]), r);
    }
  }
  const auto solution = solve_linear(std::move(a), std::move(b));
  std::vector<double> taps(*unique.rbegin() + 1, 0.0);
  for (std::size_t c = 0; c < n; ++c) taps[positions[c]] = solution[c];
  return SigmaDeltaScheme(FeedbackFilter(order, std::move(taps)));
}

bool check_stability(const SigmaDeltaScheme& scheme, const SampleGrid& grid) {
  return grid.sup_norm() <= scheme.stability_margin();
}

double QuantizationRun::state_sup() const {
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(x));
  return m;
}

double QuantizationRun::end_difference(int j) const {
  if (u.empty()) return 0.0;
  return backward_difference_at(u, j, size() - 1);
}

QuantizationRun quantize(const SigmaDeltaScheme& scheme,
                         const SampleGrid& grid) {
  const int n_samples = grid.size();
  if (n_samples == 0) throw EmptyGrid("quantize: empty sample grid");

  const auto h = scheme.filter().taps();
  const auto g = scheme.g().taps();
  const int h_len = static_cast<int>(h.size());
  const int g_len = static_cast<int>(g.size());

  QuantizationRun run;
  run.order = scheme.order();
  run.samples.assign(grid.values().begin(), grid.values().end());
  run.bits.resize(n_samples);
  run.v.resize(n_samples);
  run.u.resize(n_samples);
  run.stability_satisfied = check_stability(scheme, grid);

  for (int n = 0; n < n_samples; ++n) {
    double feedback = 0.0;
    for (int j = 1; j < h_len && j <= n; ++j) feedback += h[j] * run.v[n - j];
    const double pre = feedback + grid[n];
    const double q = greedy_sign(pre);
    run.bits[n] = q;
    run.v[n] = pre - q;
    if (q > 0.0) ++run.plus_count;

    double state = 0.0;
    for (int i = 0; i < g_len && i <= n; ++i) state += g[i] * run.v[n - i];
    run.u[n] = state;
  }

  run.remainder = run.end_difference(run.order - 1);
  run.remainder_from_sums =
      compensated_sum(run.samples) - (2.0 * run.plus_count - n_samples);
  run.remainder_consistent =
      std::abs(run.remainder - run.remainder_from_sums) <= kRemainderTolerance;
  return run;
}

}  // namespace sdcircle
